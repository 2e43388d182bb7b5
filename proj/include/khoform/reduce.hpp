#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "khoform/graph.hpp"
#include "khoform/homotopy.hpp"

namespace khoform {

class BranchBudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kDefaultBranchBudget = 64;

struct ReduceOptions {
  /// Maximum number of wedge splits (adjacent domination or cone tests).
  std::size_t branch_budget = kDefaultBranchBudget;
  /// Append one line per applied move when non-null.
  std::vector<std::string>* log = nullptr;
};

/// Empty `type` means Stalled: no sound move applied and the graph is not a
/// recognised base family.
struct ReduceResult {
  std::optional<HomotopyType> type;
  std::size_t branches = 0;

  bool stalled() const { return !type.has_value(); }
};

/// Free moves (isolated vertex, leaf, non-adjacent domination, Csorba) run to
/// exhaustion from a worklist; then components are split and joined, cycles
/// evaluated in closed form, adjacent dominations split as a wedge, and as a
/// last resort a vertex v is split when I(G - st v) is provably null-homotopic
/// in I(G - v). Throws BranchBudgetExceeded past the budget.
ReduceResult generic_reduce(const Graph& g, const ReduceOptions& options = {});

/// Convenience: the type, or std::nullopt when stalled.
std::optional<HomotopyType> try_reduce(const Graph& g,
                                       std::size_t branch_budget = kDefaultBranchBudget);

/// Mapping-cone rule for a vertex v with X = I(G - st v), Y = I(G - v).
/// Returns the type of I(G) when it is forced by the types alone.
std::optional<HomotopyType> cone_rule(const HomotopyType& without_star,
                                      const HomotopyType& without_vertex);

}  // namespace khoform
