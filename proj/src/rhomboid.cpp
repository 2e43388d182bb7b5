#include "khoform/rhomboid.hpp"

#include <algorithm>
#include <set>

#include "khoform/families.hpp"
#include "khoform/reduce.hpp"

namespace khoform {

std::string to_string(Role r) {
  switch (r) {
    case Role::BLeft: return "b_l";
    case Role::BRight: return "b_r";
    case Role::B2: return "b_2";
    case Role::B2Prime: return "b_2'";
    case Role::E2: return "e_2";
    case Role::E2Prime: return "e_2'";
    case Role::C: return "c";
    case Role::D: return "d";
    case Role::Spoke: return "v";
    case Role::Subdivision: return "s";
    case Role::VMinus1: return "v_-1";
    case Role::VPlus1: return "v_n+1";
    case Role::VMinus1Prime: return "v'_-1";
    case Role::VPlus1Prime: return "v'_n+1";
    case Role::Spider: return "spider";
  }
  return "?";
}

std::string RoleTag::to_string() const {
  std::string out = khoform::to_string(role);
  switch (role) {
    case Role::C:
    case Role::D:
    case Role::Spoke:
    case Role::Spider:
      out += std::to_string(index);
      break;
    case Role::Subdivision:
      out += "[" + std::to_string(index) + "." + std::to_string(pos) + "]";
      break;
    default:
      break;
  }
  return out;
}

int RhomboidStructure::parts(int slot) const {
  auto it = subdivisions.find(slot);
  return it == subdivisions.end() ? 1 : it->second;
}

std::optional<VertexId> RhomboidStructure::find(Role r, int index, int pos) const {
  const RoleTag want{r, index, pos};
  for (const auto& [v, t] : roles)
    if (t == want) return v;
  return std::nullopt;
}

std::vector<VertexId> RhomboidStructure::spokes() const {
  std::vector<std::pair<int, VertexId>> found;
  for (const auto& [v, t] : roles)
    if (t.role == Role::Spoke) found.emplace_back(t.index, v);
  std::sort(found.begin(), found.end());
  std::vector<VertexId> out;
  for (auto [i, v] : found) out.push_back(v);
  return out;
}

namespace {

// Accumulates vertices and deduplicated edges, resolving identified vertices.
class Builder {
 public:
  VertexId add(RoleTag t) {
    VertexId v = next_++;
    tags_.emplace(v, t);
    rep_[v] = v;
    return v;
  }
  void identify(VertexId keep, VertexId drop) { rep_[find(drop)] = find(keep); }
  void edge(VertexId a, VertexId b) { pending_.emplace_back(a, b); }

  LabeledGraph finish(RhomboidStructure s) {
    Graph g;
    for (const auto& [v, t] : tags_) {
      if (find(v) != v) continue;
      g.add_vertex(v, t.to_string());
      s.roles[v] = t;
    }
    std::set<std::pair<VertexId, VertexId>> seen;
    for (auto [a, b] : pending_) {
      a = find(a);
      b = find(b);
      if (a == b) continue;
      if (a > b) std::swap(a, b);
      if (seen.insert({a, b}).second) g.add_edge(a, b);
    }
    return {std::move(g), std::move(s)};
  }

 private:
  VertexId find(VertexId v) {
    while (rep_[v] != v) v = rep_[v] = rep_[rep_[v]];
    return v;
  }

  VertexId next_ = 0;
  std::map<VertexId, RoleTag> tags_;
  std::map<VertexId, VertexId> rep_;
  std::vector<std::pair<VertexId, VertexId>> pending_;
};

// Joins a and b through `parts` edges; 0 identifies them (a survives).
void slot_edge(Builder& b, int slot, int parts, VertexId from, VertexId to) {
  if (parts < 0) throw LabelError("negative subdivision count");
  if (parts == 0) {
    b.identify(from, to);
    return;
  }
  VertexId prev = from;
  for (int p = 1; p < parts; ++p) {
    VertexId s = b.add({Role::Subdivision, slot, p});
    b.edge(prev, s);
    prev = s;
  }
  b.edge(prev, to);
}

}  // namespace

LabeledGraph ambient_graph(const RhomboidStructure& s) {
  const int n = s.spine_length;
  if (n < 0) throw LabelError("negative spine length");
  const unsigned m = s.modifications;
  if (m && !s.augmented) throw LabelError("modifications need an augmented rhomboid");
  if ((m & kContractLeft) && (m & kDeleteLeftEdge))
    throw LabelError("left edge both contracted and deleted");
  if ((m & kContractRight) && (m & kDeleteRightEdge))
    throw LabelError("right edge both contracted and deleted");
  if (s.augmented && (s.subdivisions.count(kSlotPrimeLeft) || s.subdivisions.count(kSlotPrimeRight)))
    throw LabelError("augmented rhomboids have no primed slots");

  Builder b;
  const VertexId bl = b.add({Role::BLeft});
  const VertexId br = b.add({Role::BRight});
  std::vector<VertexId> spoke;
  for (int i = 0; i <= n; ++i) spoke.push_back(b.add({Role::Spoke, i}));
  for (int i = 1; i <= n; ++i) {
    int parts = s.parts(i);
    if (parts < 0) throw LabelError("negative subdivision count");
    VertexId prev = spoke[static_cast<std::size_t>(i - 1)];
    if (parts == 0) {
      b.identify(prev, spoke[static_cast<std::size_t>(i)]);
      continue;
    }
    for (int p = 1; p < parts; ++p) {
      VertexId x = b.add({Role::Subdivision, i, p});
      b.edge(prev, x);
      prev = x;
    }
    b.edge(prev, spoke[static_cast<std::size_t>(i)]);
  }
  std::vector<VertexId> hubs = {bl, br};
  std::optional<VertexId> b2;
  if (s.augmented) {
    b2 = b.add({Role::B2});
    hubs.push_back(*b2);
  }
  for (VertexId h : hubs) {
    for (int i = 0; i <= n; ++i) b.edge(h, spoke[static_cast<std::size_t>(i)]);
  }
  if (s.connected) b.edge(bl, br);

  const VertexId vm = b.add({Role::VMinus1});
  const VertexId vp = b.add({Role::VPlus1});
  b.edge(bl, vm);
  b.edge(br, vp);
  if (!(m & kDeleteLeftEdge))
    slot_edge(b, 0, (m & kContractLeft) ? 0 : s.parts(0), spoke.front(), vm);
  if (!(m & kDeleteRightEdge))
    slot_edge(b, n + 1, (m & kContractRight) ? 0 : s.parts(n + 1), spoke.back(), vp);

  if (!s.augmented) {
    const VertexId vmp = b.add({Role::VMinus1Prime});
    const VertexId vpp = b.add({Role::VPlus1Prime});
    b.edge(br, vmp);
    b.edge(bl, vpp);
    slot_edge(b, kSlotPrimeLeft, s.parts(kSlotPrimeLeft), spoke.front(), vmp);
    slot_edge(b, kSlotPrimeRight, s.parts(kSlotPrimeRight), spoke.back(), vpp);
  } else {
    VertexId c[4], d[4];
    for (int i = 1; i <= 3; ++i) c[i] = b.add({Role::C, i});
    for (int i = 1; i <= 3; ++i) d[i] = b.add({Role::D, i});
    b.edge(c[1], bl);
    b.edge(c[1], c[2]);
    if (s.r1_present) b.edge(c[2], c[3]);
    b.edge(c[2], vm);
    b.edge(c[3], br);
    b.edge(c[3], *b2);
    b.edge(d[1], bl);
    b.edge(d[1], *b2);
    if (s.r2_present) b.edge(d[1], d[2]);
    b.edge(d[2], d[3]);
    b.edge(d[2], vp);
    b.edge(d[3], br);
  }
  RhomboidStructure out = s;
  out.roles.clear();
  return b.finish(std::move(out));
}

LabeledGraph simple_rhomboid(int n, bool connected) {
  RhomboidStructure s;
  s.spine_length = n;
  s.connected = connected;
  return ambient_graph(s);
}

LabeledGraph augmented_rhomboid(int n, unsigned modifications) {
  RhomboidStructure s;
  s.spine_length = n;
  s.augmented = true;
  s.r1_present = s.r2_present = true;
  s.modifications = modifications;
  return ambient_graph(s);
}

LabeledGraph rhomboid_graph(const std::vector<int>& counts) {
  if (counts.size() < 4) throw LabelError("a rhomboid graph needs n + 4 counts");
  RhomboidStructure s;
  s.spine_length = static_cast<int>(counts.size()) - 4;
  s.subdivisions[kSlotPrimeLeft] = counts.front();
  s.subdivisions[kSlotPrimeRight] = counts.back();
  for (std::size_t i = 1; i + 1 < counts.size(); ++i)
    s.subdivisions[static_cast<int>(i) - 1] = counts[i];
  return ambient_graph(s);
}

LabeledGraph subdivided_augmented_rhomboid(const std::vector<int>& counts,
                                           unsigned modifications) {
  if (counts.size() < 2) throw LabelError("an augmented rhomboid needs n + 2 counts");
  RhomboidStructure s;
  s.spine_length = static_cast<int>(counts.size()) - 2;
  s.augmented = true;
  s.r1_present = s.r2_present = true;
  s.modifications = modifications;
  for (std::size_t i = 0; i < counts.size(); ++i) s.subdivisions[static_cast<int>(i)] = counts[i];
  return ambient_graph(s);
}

void validate_labels(const Graph& g, const RhomboidStructure& s) {
  if (!g.is_simple()) throw LabelError("labelled graph is not simple");
  LabeledGraph amb = ambient_graph(s);
  std::map<RoleTag, VertexId> by_tag;
  for (const auto& [v, t] : amb.structure.roles) by_tag.emplace(t, v);
  std::map<VertexId, VertexId> image;
  std::set<VertexId> used;
  for (VertexId v : g.vertices()) {
    auto it = s.roles.find(v);
    if (it == s.roles.end()) throw LabelError("vertex " + std::to_string(v) + " has no role");
    auto jt = by_tag.find(it->second);
    if (jt == by_tag.end())
      throw LabelError("role " + it->second.to_string() + " is not in the ambient graph");
    if (!used.insert(jt->second).second)
      throw LabelError("role " + it->second.to_string() + " used twice");
    image[v] = jt->second;
  }
  for (auto [a, b] : g.edges())
    if (!amb.graph.adjacent(image[a], image[b]))
      throw LabelError("edge " + s.roles.at(a).to_string() + " - " + s.roles.at(b).to_string() +
                       " is not in the ambient graph");
  std::size_t induced_edges = 0;
  for (VertexId x : used)
    for (VertexId y : amb.graph.neighbors(x))
      if (x < y && used.count(y)) ++induced_edges;
  if (induced_edges != g.edge_count())
    throw LabelError("labelled graph is not an induced subgraph of its ambient graph");
}

LabeledGraph induced(const LabeledGraph& lg, const VertexSet& keep) {
  return {lg.graph.induced(keep), lg.structure};
}

namespace {

HomotopyType reduce_or_throw(const Graph& g) {
  auto r = generic_reduce(g, ReduceOptions{});
  if (r.stalled()) throw std::runtime_error("rhomboid evaluation stalled");
  return *r.type;
}

bool present(const Graph& g, const RhomboidStructure& s, Role r, int index = 0) {
  auto v = s.find(r, index);
  return v && g.has_vertex(*v);
}

VertexSet spine_vertices(const Graph& g, const RhomboidStructure& s) {
  VertexSet out;
  for (VertexId v : g.vertices()) {
    const RoleTag& t = s.roles.at(v);
    if (t.role == Role::Spoke) out.insert(v);
    if (t.role == Role::Subdivision && t.index >= 1 && t.index <= s.spine_length) out.insert(v);
  }
  return out;
}

bool is_simple_family(const RhomboidStructure& s) {
  for (const auto& [slot, parts] : s.subdivisions)
    if (parts != 1) return false;
  return true;
}

}  // namespace

HomotopyType eval_rhomboid_subgraph(const Graph& g, const RhomboidStructure& s) {
  if (s.augmented) throw LabelError("augmented structure passed to the rhomboid evaluator");
  validate_labels(g, s);
  const VertexSet spine = spine_vertices(g, s);
  const bool bl = present(g, s, Role::BLeft);
  const bool br = present(g, s, Role::BRight);
  const bool touches_x = present(g, s, Role::VMinus1) || present(g, s, Role::VPlus1) ||
                         present(g, s, Role::VMinus1Prime) || present(g, s, Role::VPlus1Prime);
  std::optional<HomotopyType> out;
  if (is_simple_family(s) && !spine.empty() && !touches_x && bl && br &&
      g.vertex_count() == spine.size() + 2) {
    // K_2 * spine when connected, fan with the dominated hub dropped otherwise
    HomotopyType h = eval_forest(g.induced(spine));
    out = eval_complete_join(s.connected ? 2 : 1, h);
  } else if (spine.empty() && is_simple_family(s)) {
    Graph rest = g;
    out = rest.empty() ? HomotopyType::empty() : reduce_or_throw(rest);
  } else {
    out = reduce_or_throw(g);
  }
  const auto& dims = out->dims();
  bool ok = out->sphere_count() <= 2;
  if (!ok && s.connected && dims.size() == 3 && dims[1] == 0 && dims[2] == 0) ok = true;
  if (!ok) throw std::logic_error("rhomboid subgraph evaluated to " + out->to_string());
  return *out;
}

std::optional<AugmentedSplit> augmented_split(const Graph& g, const RhomboidStructure& s) {
  auto b2 = s.find(Role::B2);
  auto bl = s.find(Role::BLeft);
  auto br = s.find(Role::BRight);
  if (!b2 || !bl || !br) return std::nullopt;
  if (!g.has_vertex(*b2) || !g.has_vertex(*bl) || !g.has_vertex(*br)) return std::nullopt;
  if (spine_vertices(g, s).empty()) return std::nullopt;
  const Graph g2 = g.without({*b2});
  const Graph g2l = g2.without({*bl});
  AugmentedSplit out;
  out.pieces.push_back(reduce_or_throw(g2l.without({*br})));
  out.pieces.push_back(reduce_or_throw(g2l.without(g2l.closed_star(*br))));
  out.pieces.push_back(reduce_or_throw(g2.without(g2.closed_star(*bl))));
  out.pieces.push_back(reduce_or_throw(g.without(g.closed_star(*b2))));
  auto t = cone_rule(out.pieces[1], out.pieces[0]);
  if (t) t = cone_rule(out.pieces[2], *t);
  if (t) t = cone_rule(out.pieces[3], *t);
  out.combined = t;
  return out;
}

HomotopyType eval_augmented_subgraph(const Graph& g, const RhomboidStructure& s) {
  if (!s.augmented) throw LabelError("plain rhomboid passed to the augmented evaluator");
  validate_labels(g, s);
  std::optional<HomotopyType> out;
  if (auto split = augmented_split(g, s); split && split->combined) out = split->combined;
  if (!out) out = reduce_or_throw(g);
  if (!has_four_braid_shape(*out))
    throw std::logic_error("augmented subgraph evaluated to " + out->to_string());
  return *out;
}

}  // namespace khoform
