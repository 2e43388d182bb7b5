#include "khoform/verify.hpp"

#include "json.hpp"
#include "khoform/reduce.hpp"
#include "khoform/resolution.hpp"

namespace khoform {

using nlohmann::json;

std::string to_string(VerdictStatus s) {
  switch (s) {
    case VerdictStatus::Match: return "match";
    case VerdictStatus::Mismatch: return "mismatch";
    case VerdictStatus::Skipped: return "skipped";
  }
  return "?";
}

std::string Verdict::to_json() const {
  json j{{"verdict", khoform::to_string(status)}, {"word", word}, {"n", strands}};
  if (type) j["homotopy"] = json::parse(type->to_json());
  if (expected) j["expected_profile"] = json::parse(expected->to_json());
  if (oracle) j["oracle_profile"] = json::parse(oracle->to_json());
  if (critical) j["critical"] = true;
  if (!reason.empty()) j["reason"] = reason;
  if (status == VerdictStatus::Mismatch) {
    j["graph"] = graph_dot;
    if (!trace_json.empty()) j["trace"] = json::parse(trace_json);
  }
  return j.dump();
}

Verdict compare(const BraidWord& w, std::size_t face_budget) {
  Verdict v;
  v.word = w.to_string();
  v.strands = w.strands();
  const Graph g = lando_graph(w);
  auto mismatch = [&](std::string why, bool critical) {
    v.status = VerdictStatus::Mismatch;
    v.reason = std::move(why);
    v.critical = v.critical || critical;
    v.graph_dot = g.to_dot();
    return v;
  };

  Solution sol;
  try {
    sol = solve(w);
  } catch (const BranchBudgetExceeded& e) {
    v.reason = std::string("branch budget: ") + e.what();
    return v;
  } catch (const InconsistencyError& e) {
    v.trace_json = e.trace_json();
    return mismatch(std::string("inconsistency: ") + e.what(), true);
  }
  v.type = sol.type;
  v.trace_json = sol.trace.to_json();
  v.expected = expected_profile(sol.type);

  try {
    v.oracle = oracle_profile(g, face_budget);
  } catch (const BudgetExceeded& e) {
    v.reason = std::string("oracle budget: ") + e.what();
    return v;
  }
  if (v.oracle->has_torsion()) return mismatch("torsion in the oracle profile", true);
  if (!has_four_braid_shape(sol.type)) return mismatch("forbidden shape", true);
  if (!(*v.oracle == *v.expected)) return mismatch("profiles differ", false);
  v.status = VerdictStatus::Match;
  return v;
}

HomologyProfile replay_profile(const BraidWord& input, const ReductionTrace& trace,
                               std::size_t face_budget) {
  ReplayState st = replay(input, trace);
  if (st.contractible) return {};
  Graph g = lando_graph(st.word);
  VertexSet gone;
  for (LetterId id : st.deleted)
    if (g.has_vertex(id)) gone.insert(id);
  return shift(oracle_profile(g.without(gone), face_budget), st.suspensions);
}

}  // namespace khoform
