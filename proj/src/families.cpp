#include "khoform/families.hpp"

#include <map>
#include <set>
#include <stdexcept>

namespace khoform {

HomotopyType eval_path(int edges) {
  if (edges < 0) throw std::invalid_argument("negative path length");
  if (edges % 3 == 0) return HomotopyType::contractible();
  return HomotopyType::sphere(edges / 3);
}

HomotopyType eval_cycle(int vertices) {
  if (vertices < 3) throw std::invalid_argument("a cycle needs at least 3 vertices");
  int k = (vertices + 1) / 3;
  if (vertices % 3 == 0) return HomotopyType::wedge_of({k - 1, k - 1});
  return HomotopyType::sphere(k - 1);
}

HomotopyType eval_forest(const Graph& g) {
  if (!g.is_simple() || !g.is_forest()) throw std::invalid_argument("eval_forest needs a forest");
  std::map<VertexId, std::set<VertexId>> adj;
  for (VertexId v : g.vertices()) {
    auto nb = g.neighbors(v);
    adj[v] = std::set<VertexId>(nb.begin(), nb.end());
  }
  std::set<VertexId> leaves;
  for (const auto& [v, nb] : adj) {
    if (nb.empty()) return HomotopyType::contractible();
    if (nb.size() == 1) leaves.insert(v);
  }
  auto drop = [&](VertexId v) {
    for (VertexId u : adj[v]) {
      adj[u].erase(v);
      if (adj[u].size() == 1) leaves.insert(u);
    }
    adj.erase(v);
    leaves.erase(v);
  };
  int k = 0;
  while (!adj.empty()) {
    VertexId leaf = *leaves.begin();
    VertexId pre = *adj[leaf].begin();
    std::set<VertexId> star = adj[pre];
    star.insert(pre);
    for (VertexId s : star) drop(s);
    ++k;
    for (const auto& [v, nb] : adj)
      if (nb.empty()) return HomotopyType::contractible();
  }
  return suspend(HomotopyType::empty(), k);
}

HomotopyType eval_complete_join(int j, const HomotopyType& h) {
  if (j < 1) throw std::invalid_argument("complete join needs j >= 1");
  if (h.is_empty_complex()) throw std::invalid_argument("complete join needs H nonempty");
  HomotopyType out = h;
  for (int i = 0; i < j; ++i) out = wedge(out, HomotopyType::sphere(0));
  return out;
}

Graph theta_graph(int n1, int n2, int n3) {
  int counts[3] = {n1, n2, n3};
  int zeros = 0;
  for (int c : counts) {
    if (c < 0) throw std::invalid_argument("negative theta count");
    zeros += c == 0;
  }
  if (zeros > 1) throw std::invalid_argument("at most one theta count may be 0");
  Graph g;
  const VertexId u = 0;
  const VertexId v = zeros ? 0 : 1;
  g.add_vertex(u);
  if (v != u) g.add_vertex(v);
  VertexId next = 2;
  for (int c : counts) {
    if (c == 0) continue;
    VertexId prev = u;
    for (int i = 1; i < c; ++i) {
      g.add_vertex(next);
      g.add_edge(prev, next);
      prev = next++;
    }
    g.add_edge(prev, v);
  }
  return simplify(g).graph;
}

// Oracle homology of theta_graph on each base case; a wedge of spheres in all
// 27 cases (regenerate with tools/gen_theta_table).
static const std::array<ThetaBaseEntry, 27> kThetaBase = {{
#include "theta_table.inc"
}};

const std::array<ThetaBaseEntry, 27>& theta_base_table() { return kThetaBase; }

HomotopyType eval_theta(int n1, int n2, int n3) {
  int c[3] = {n1, n2, n3};
  int zeros = 0;
  for (int x : c) {
    if (x < 0) throw std::invalid_argument("negative theta count");
    zeros += x == 0;
  }
  if (zeros > 1) throw std::invalid_argument("at most one theta count may be 0");
  // the middle slot takes the zero, else the count that can drop to 0..2
  int mid = 1;
  if (zeros) {
    mid = c[0] == 0 ? 0 : (c[1] == 0 ? 1 : 2);
  }
  int k = 0;
  int r[3];
  for (int i = 0; i < 3; ++i) {
    if (i == mid) {
      r[i] = c[i] % 3;
      k += c[i] / 3;
    } else {
      r[i] = (c[i] - 1) % 3 + 1;
      k += (c[i] - 1) / 3;
    }
  }
  int a = r[mid == 0 ? 1 : 0];
  int b = r[mid == 2 ? 1 : 2];
  int m = r[mid];
  // two zeros can appear only if the middle reduced to 0 while another was 0
  for (const auto& e : kThetaBase) {
    if (e.n1 == a && e.n2 == m && e.n3 == b) {
      if (e.count < 0) return HomotopyType::contractible();
      std::vector<int> dims(e.dims, e.dims + e.count);
      return suspend(HomotopyType::wedge_of(dims), k);
    }
  }
  throw std::logic_error("theta base case missing");
}

}  // namespace khoform
