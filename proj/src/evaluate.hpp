#pragma once

#include <string>
#include <vector>

#include "khoform/graph.hpp"
#include "khoform/homotopy.hpp"

namespace khoform::detail {

struct Evaluation {
  HomotopyType type = HomotopyType::contractible();
  bool oracle = false;
};

/// generic_reduce; a stall on a small graph is settled by the homology
/// oracle, a stall on a larger one raises InconsistencyError.
Evaluation evaluate_graph(const Graph& g, std::vector<std::string>* log = nullptr);

}  // namespace khoform::detail
