#pragma once

#include <array>

#include "khoform/graph.hpp"
#include "khoform/homotopy.hpp"

namespace khoform {

/// I(L_n), the path with n edges.
HomotopyType eval_path(int edges);
/// I(P_n), the n-gon; n >= 3.
HomotopyType eval_cycle(int vertices);
/// Repeated isolated-vertex and leaf moves, joined over components.
/// Throws std::invalid_argument if g has a cycle.
HomotopyType eval_forest(const Graph& g);
/// I(K_j * H) from h = I(H); H must be nonempty.
HomotopyType eval_complete_join(int j, const HomotopyType& h);

/// Theta graph: two branch vertices joined by three paths with n1, n2, n3
/// edges. A count of 0 identifies the branch vertices; parallel edges are
/// collapsed and loop vertices dropped as usual.
Graph theta_graph(int n1, int n2, int n3);
/// Csorba-reduces the counts into the base table and suspends.
HomotopyType eval_theta(int n1, int n2, int n3);

struct ThetaBaseEntry {
  int n1, n2, n3;
  int dims[2];    // sphere dimensions, unused slots -2
  int count;      // -1 contractible, else number of spheres
};
/// Base cases 1 <= n1, n3 <= 3, 0 <= n2 <= 2 in lexicographic order.
const std::array<ThetaBaseEntry, 27>& theta_base_table();

}  // namespace khoform
