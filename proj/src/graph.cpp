#include "khoform/graph.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace khoform {

std::size_t Graph::index(VertexId v) const {
  auto it = std::lower_bound(ids_.begin(), ids_.end(), v);
  if (it == ids_.end() || *it != v)
    throw std::invalid_argument("vertex " + std::to_string(v) + " not in graph");
  return static_cast<std::size_t>(it - ids_.begin());
}

bool Graph::has_vertex(VertexId v) const {
  return std::binary_search(ids_.begin(), ids_.end(), v);
}

void Graph::add_vertex(VertexId v, std::string label) {
  auto it = std::lower_bound(ids_.begin(), ids_.end(), v);
  if (it != ids_.end() && *it == v) {
    if (!label.empty()) labels_[static_cast<std::size_t>(it - ids_.begin())] = std::move(label);
    return;
  }
  auto pos = it - ids_.begin();
  ids_.insert(it, v);
  adj_.insert(adj_.begin() + pos, std::vector<VertexId>{});
  labels_.insert(labels_.begin() + pos, std::move(label));
}

void Graph::add_edge(VertexId a, VertexId b) {
  auto& na = adj_[index(a)];
  na.insert(std::upper_bound(na.begin(), na.end(), b), b);
  if (a != b) {
    auto& nb = adj_[index(b)];
    nb.insert(std::upper_bound(nb.begin(), nb.end(), a), a);
  }
}

std::size_t Graph::edge_count() const {
  std::size_t twice = 0;
  for (std::size_t i = 0; i < ids_.size(); ++i)
    for (VertexId u : adj_[i]) twice += (u == ids_[i]) ? 2 : 1;
  return twice / 2;
}

std::span<const VertexId> Graph::neighbors(VertexId v) const {
  return adj_[index(v)];
}

bool Graph::adjacent(VertexId a, VertexId b) const {
  const auto& na = adj_[index(a)];
  return std::binary_search(na.begin(), na.end(), b);
}

bool Graph::is_simple() const {
  for (std::size_t i = 0; i < ids_.size(); ++i) {
    const auto& n = adj_[i];
    if (std::adjacent_find(n.begin(), n.end()) != n.end()) return false;
    if (std::binary_search(n.begin(), n.end(), ids_[i])) return false;
  }
  return true;
}

const std::string& Graph::label(VertexId v) const { return labels_[index(v)]; }

void Graph::set_label(VertexId v, std::string label) {
  labels_[index(v)] = std::move(label);
}

VertexSet Graph::closed_star(VertexId v) const {
  auto n = neighbors(v);
  VertexSet s(n.begin(), n.end());
  s.insert(v);
  return s;
}

Graph Graph::without(const VertexSet& drop) const {
  Graph out;
  out.ids_.reserve(ids_.size());
  for (std::size_t i = 0; i < ids_.size(); ++i) {
    if (drop.count(ids_[i])) continue;
    out.ids_.push_back(ids_[i]);
    out.labels_.push_back(labels_[i]);
    std::vector<VertexId> n;
    n.reserve(adj_[i].size());
    for (VertexId u : adj_[i])
      if (!drop.count(u)) n.push_back(u);
    out.adj_.push_back(std::move(n));
  }
  return out;
}

Graph Graph::induced(const VertexSet& keep) const {
  VertexSet drop;
  for (VertexId v : ids_)
    if (!keep.count(v)) drop.insert(v);
  for (VertexId v : keep)
    if (!has_vertex(v))
      throw std::invalid_argument("induced: vertex " + std::to_string(v) + " not in graph");
  return without(drop);
}

Graph Graph::without_edge(VertexId a, VertexId b) const {
  if (!has_vertex(a) || !has_vertex(b) || !adjacent(a, b))
    throw std::invalid_argument("edge " + std::to_string(a) + "-" + std::to_string(b) +
                                " not in graph");
  Graph out = *this;
  auto erase_one = [](std::vector<VertexId>& n, VertexId x) {
    auto it = std::lower_bound(n.begin(), n.end(), x);
    n.erase(it);
  };
  erase_one(out.adj_[index(a)], b);
  if (a != b) erase_one(out.adj_[index(b)], a);
  return out;
}

std::vector<Graph> Graph::components() const {
  std::vector<Graph> out;
  std::vector<char> seen(ids_.size(), 0);
  for (std::size_t s = 0; s < ids_.size(); ++s) {
    if (seen[s]) continue;
    VertexSet comp;
    std::deque<std::size_t> queue{s};
    seen[s] = 1;
    while (!queue.empty()) {
      std::size_t i = queue.front();
      queue.pop_front();
      comp.insert(ids_[i]);
      for (VertexId u : adj_[i]) {
        std::size_t j = index(u);
        if (!seen[j]) {
          seen[j] = 1;
          queue.push_back(j);
        }
      }
    }
    if (comp.size() == ids_.size()) {
      out.push_back(*this);
    } else {
      out.push_back(induced(comp));
    }
  }
  return out;
}

bool Graph::is_connected() const {
  return ids_.size() <= 1 || components().size() == 1;
}

bool Graph::is_forest() const {
  if (!is_simple()) return false;
  return edge_count() + components().size() == vertex_count();
}

std::vector<std::pair<VertexId, VertexId>> Graph::edges() const {
  std::vector<std::pair<VertexId, VertexId>> out;
  for (std::size_t i = 0; i < ids_.size(); ++i) {
    // loops are stored once per add_edge call
    for (VertexId u : adj_[i])
      if (u >= ids_[i]) out.emplace_back(ids_[i], u);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string Graph::to_dot(const std::string& name) const {
  std::ostringstream os;
  os << "graph " << name << " {\n";
  for (std::size_t i = 0; i < ids_.size(); ++i) {
    os << "  v" << ids_[i];
    if (!labels_[i].empty()) os << " [role=\"" << labels_[i] << "\", label=\"" << labels_[i] << "\"]";
    os << ";\n";
  }
  for (auto [a, b] : edges()) os << "  v" << a << " -- v" << b << ";\n";
  os << "}\n";
  return os.str();
}

SimplifyResult simplify(const Graph& g) {
  SimplifyResult r;
  VertexSet loops;
  for (VertexId v : g.vertices())
    if (g.has_loop(v)) loops.insert(v);
  r.removed_loop_vertices.assign(loops.begin(), loops.end());
  Graph h = g.without(loops);
  Graph out;
  for (VertexId v : h.vertices()) out.add_vertex(v, h.label(v));
  for (VertexId v : h.vertices()) {
    auto n = h.neighbors(v);
    VertexId prev = v;
    bool first = true;
    for (VertexId u : n) {
      if (!first && u == prev) continue;
      first = false;
      prev = u;
      if (u > v) out.add_edge(v, u);
    }
  }
  r.graph = std::move(out);
  return r;
}

namespace {

// N(w) \ {v} subset of N(v) \ {w}, both lists sorted and duplicate-free.
bool included_except(std::span<const VertexId> nw, std::span<const VertexId> nv,
                     VertexId v, VertexId w) {
  auto it = nv.begin();
  for (VertexId x : nw) {
    if (x == v) continue;
    if (x == w) return false;  // loop at w cannot be matched
    while (it != nv.end() && *it < x) ++it;
    if (it == nv.end() || *it != x) return false;
  }
  return true;
}

}  // namespace

bool dominates(const Graph& g, VertexId v, VertexId w) {
  if (v == w) throw std::invalid_argument("dominates: v and w must differ");
  if (!g.has_vertex(v) || !g.has_vertex(w))
    throw std::invalid_argument("dominates: absent vertex");
  return included_except(g.neighbors(w), g.neighbors(v), v, w);
}

std::string to_string(SiteKind k) {
  switch (k) {
    case SiteKind::None: return "none";
    case SiteKind::Isolated: return "isolated";
    case SiteKind::Leaf: return "leaf";
    case SiteKind::Domination: return "domination";
    case SiteKind::Csorba: return "csorba";
    case SiteKind::AdjacentDomination: return "adjacent-domination";
  }
  return "?";
}

std::vector<Site> csorba_paths(const Graph& g) {
  std::vector<Site> out;
  for (VertexId a : g.vertices()) {
    if (g.degree(a) != 2) continue;
    auto na = g.neighbors(a);
    for (VertexId b : na) {
      if (b <= a || g.degree(b) != 2) continue;
      VertexId x = na[0] == b ? na[1] : na[0];
      auto nb = g.neighbors(b);
      VertexId y = nb[0] == a ? nb[1] : nb[0];
      if (x == y || x == b || y == a) continue;  // triangle or degenerate
      if (x < y)
        out.push_back({SiteKind::Csorba, {x, a, b, y}});
      else
        out.push_back({SiteKind::Csorba, {y, b, a, x}});
    }
  }
  std::sort(out.begin(), out.end(),
            [](const Site& p, const Site& q) { return p.vertices < q.vertices; });
  return out;
}

Site find_site(const Graph& g) {
  const auto& vs = g.vertices();
  for (VertexId v : vs)
    if (g.degree(v) == 0) return {SiteKind::Isolated, {v}};
  for (VertexId v : vs)
    if (g.degree(v) == 1) return {SiteKind::Leaf, {v, g.neighbors(v)[0]}};
  // non-adjacent domination: dominator is at distance exactly two
  for (VertexId w : vs) {
    auto nw = g.neighbors(w);
    VertexSet cand;
    for (VertexId x : nw)
      for (VertexId v : g.neighbors(x))
        if (v != w && !g.adjacent(v, w)) cand.insert(v);
    for (VertexId v : cand)
      if (dominates(g, v, w)) return {SiteKind::Domination, {v, w}};
  }
  auto paths = csorba_paths(g);
  if (!paths.empty()) return paths.front();
  for (VertexId w : vs)
    for (VertexId v : g.neighbors(w))
      if (dominates(g, v, w)) return {SiteKind::AdjacentDomination, {v, w}};
  return {};
}

Graph contract_csorba(const Graph& g, const std::vector<VertexId>& path) {
  if (path.size() != 4) throw std::invalid_argument("csorba path needs 4 vertices");
  VertexId x = path[0], a = path[1], b = path[2], y = path[3];
  for (VertexId v : path)
    if (!g.has_vertex(v)) throw std::invalid_argument("csorba path vertex missing");
  if (g.degree(a) != 2 || g.degree(b) != 2 || !g.adjacent(x, a) || !g.adjacent(a, b) ||
      !g.adjacent(b, y) || x == y)
    throw std::invalid_argument("not a csorba path");
  if (g.adjacent(x, y)) return g.without({x, a, b, y});
  Graph out = g.without({a, b, y});
  for (VertexId u : g.neighbors(y)) {
    if (u == b || u == x) continue;
    if (!out.adjacent(x, u)) out.add_edge(x, u);
  }
  return out;
}

Graph subdivide_edge(const Graph& g, VertexId a, VertexId b, int pieces,
                     VertexId first_fresh_id) {
  if (pieces < 1) throw std::invalid_argument("subdivision needs >= 1 piece");
  Graph out = g.without_edge(a, b);
  VertexId prev = a;
  for (int i = 1; i < pieces; ++i) {
    VertexId fresh = first_fresh_id + i - 1;
    if (out.has_vertex(fresh)) throw std::invalid_argument("fresh id collides");
    out.add_vertex(fresh);
    out.add_edge(prev, fresh);
    prev = fresh;
  }
  out.add_edge(prev, b);
  return out;
}

Graph surgery(const Graph& g, const Surgery& action) {
  auto check_present = [&] {
    for (VertexId v : action.targets)
      if (!g.has_vertex(v))
        throw std::invalid_argument("surgery target " + std::to_string(v) + " absent");
  };
  switch (action.kind) {
    case SurgeryKind::DeleteVertices:
      check_present();
      return g.without(VertexSet(action.targets.begin(), action.targets.end()));
    case SurgeryKind::DeleteStar:
      if (action.targets.size() != 1) throw std::invalid_argument("star needs one vertex");
      check_present();
      return g.without(g.closed_star(action.targets[0]));
    case SurgeryKind::ContractCsorba:
      return contract_csorba(g, action.targets);
    case SurgeryKind::DeleteEdge:
      if (action.targets.size() != 2) throw std::invalid_argument("edge needs two vertices");
      return g.without_edge(action.targets[0], action.targets[1]);
    case SurgeryKind::Induced:
      return g.induced(VertexSet(action.targets.begin(), action.targets.end()));
  }
  throw std::invalid_argument("unknown surgery");
}

Graph path_graph(int edges, VertexId first_id) {
  Graph g;
  for (int i = 0; i <= edges; ++i) g.add_vertex(first_id + i);
  for (int i = 0; i < edges; ++i) g.add_edge(first_id + i, first_id + i + 1);
  return g;
}

Graph cycle_graph(int vertices, VertexId first_id) {
  if (vertices < 3) throw std::invalid_argument("cycle needs >= 3 vertices");
  Graph g = path_graph(vertices - 1, first_id);
  g.add_edge(first_id, first_id + vertices - 1);
  return g;
}

Graph complete_graph(int vertices, VertexId first_id) {
  Graph g;
  for (int i = 0; i < vertices; ++i) g.add_vertex(first_id + i);
  for (int i = 0; i < vertices; ++i)
    for (int j = i + 1; j < vertices; ++j) g.add_edge(first_id + i, first_id + j);
  return g;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  Graph out = a;
  for (VertexId v : b.vertices()) {
    if (out.has_vertex(v)) throw std::invalid_argument("disjoint_union: id collision");
    out.add_vertex(v, b.label(v));
  }
  for (auto [x, y] : b.edges()) out.add_edge(x, y);
  return out;
}

Graph graph_join(const Graph& a, const Graph& b) {
  Graph out = disjoint_union(a, b);
  for (VertexId x : a.vertices())
    for (VertexId y : b.vertices()) out.add_edge(x, y);
  return out;
}

std::optional<int> as_path(const Graph& g) {
  if (g.empty() || !g.is_simple()) return std::nullopt;
  std::size_t n = g.vertex_count();
  for (VertexId v : g.vertices())
    if (g.degree(v) > 2) return std::nullopt;
  if (g.edge_count() != n - 1 || !g.is_connected()) return std::nullopt;
  return static_cast<int>(n - 1);
}

std::optional<int> as_cycle(const Graph& g) {
  if (g.vertex_count() < 3 || !g.is_simple()) return std::nullopt;
  for (VertexId v : g.vertices())
    if (g.degree(v) != 2) return std::nullopt;
  if (!g.is_connected()) return std::nullopt;
  return static_cast<int>(g.vertex_count());
}

}  // namespace khoform
