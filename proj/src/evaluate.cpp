#include "evaluate.hpp"

#include "khoform/oracle.hpp"
#include "khoform/pipeline.hpp"
#include "khoform/reduce.hpp"

namespace khoform::detail {

Evaluation evaluate_graph(const Graph& g, std::vector<std::string>* log) {
  ReduceOptions opt;
  opt.log = log;
  auto r = generic_reduce(g, opt);
  if (!r.stalled()) return {*r.type, false};
  if (g.vertex_count() >= kOracleFallbackVertices)
    throw InconsistencyError("reduction stalled on a graph with " +
                             std::to_string(g.vertex_count()) + " vertices");
  auto profile = oracle_profile(g);
  if (profile.has_torsion())
    throw InconsistencyError("torsion in the homology of a stalled graph: " + profile.to_string());
  std::vector<int> dims;
  for (const auto& [d, grp] : profile.groups)
    for (long long i = 0; i < grp.rank; ++i) dims.push_back(d);
  if (log) log->push_back("oracle-fallback " + profile.to_string());
  if (dims.empty()) return {HomotopyType::contractible(), true};
  return {HomotopyType::wedge_of(dims), true};
}

}  // namespace khoform::detail
