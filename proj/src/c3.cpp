#include <algorithm>
#include <deque>
#include <map>

#include "chord_view.hpp"
#include "evaluate.hpp"
#include "khoform/pipeline.hpp"
#include "khoform/resolution.hpp"

namespace khoform {

namespace {

using detail::ChordView;
using Cells = std::vector<std::optional<VertexId>>;

std::vector<std::size_t> positive_positions(const BraidWord& w) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < w.size(); ++i)
    if (w[i].positive()) out.push_back(i);
  return out;
}

std::vector<LetterId> ids_between(const BraidWord& w, std::size_t from, std::size_t to) {
  std::vector<LetterId> out;
  for (std::size_t i = from + 1; i < to; ++i) out.push_back(w[i].id);
  return out;
}

std::vector<int> signed_gens(const BraidWord& w, const std::vector<LetterId>& ids) {
  std::vector<int> out;
  for (LetterId id : ids) {
    const auto& l = w[static_cast<std::size_t>(w.index_of(id))];
    out.push_back(l.gen * l.sign);
  }
  return out;
}

// sigma_1^{-1} and sigma_3^{-1} commute; sort each run of them.
std::vector<int> canonical(std::vector<int> seg) {
  std::size_t i = 0;
  while (i < seg.size()) {
    std::size_t j = i;
    while (j < seg.size() && (seg[j] == -1 || seg[j] == -3)) ++j;
    std::sort(seg.begin() + static_cast<std::ptrdiff_t>(i), seg.begin() + static_cast<std::ptrdiff_t>(j),
              std::greater<int>());
    i = j == i ? i + 1 : j;
  }
  return seg;
}

bool is_subsequence(const std::vector<int>& small, const std::vector<int>& big) {
  std::size_t j = 0;
  for (int x : big)
    if (j < small.size() && small[j] == x) ++j;
  return j == small.size();
}

using Seg = std::vector<int>;

bool in_menu(const Seg& s, std::initializer_list<Seg> menu) {
  for (const auto& m : menu)
    if (canonical(s) == canonical(m)) return true;
  return false;
}

bool menu_ok(const Seg& w1, const Seg& w2, const Seg& w3) {
  const std::initializer_list<Seg> w1_base = {{}, {-1, -2}, {-3, -2}, {-1, -3, -2}};
  const std::initializer_list<Seg> w3_base = {{}, {-2, -3}, {-2, -1}, {-2, -1, -3}};
  if (w2.empty()) return in_menu(w1, w1_base) && in_menu(w3, w3_base);
  if (canonical(w2) == canonical({-2}))
    return (in_menu(w1, w1_base) || in_menu(w1, {{-1}, {-3, -2, -1}})) &&
           (in_menu(w3, w3_base) || in_menu(w3, {{-3}, {-3, -2, -1}}));
  if (canonical(w2) == canonical({-2, -1, -3, -2}))
    return in_menu(w1, {{}, {-3, -2}}) && in_menu(w3, {{}, {-2, -1}});
  return false;
}

char maximal_variant(const Seg& w1, const Seg& w2, const Seg& w3) {
  struct Max {
    char name;
    Seg w1, w2, w3;
  };
  static const std::vector<Max> heads = {
      {'a', {-1, -3, -2}, {-2}, {-2, -1, -3}}, {'b', {-1, -3, -2}, {-2}, {-3, -2, -1}},
      {'c', {-3, -2, -1}, {-2}, {-2, -1, -3}}, {'d', {-3, -2, -1}, {-2}, {-3, -2, -1}},
      {'e', {-3, -2}, {-2, -1, -3, -2}, {-2, -1}}};
  for (const auto& h : heads)
    if (is_subsequence(canonical(w1), canonical(h.w1)) && is_subsequence(canonical(w2), canonical(h.w2)) &&
        is_subsequence(canonical(w3), canonical(h.w3)))
      return h.name;
  return '?';
}

bool is_spine(Role r) {
  return r == Role::Spoke || r == Role::Subdivision || r == Role::VMinus1 || r == Role::VPlus1;
}
bool is_hub(Role r) { return r == Role::BLeft || r == Role::BRight || r == Role::B2; }

const RoleTag& tag_of(const LabeledGraph& g, VertexId v) { return g.structure.roles.at(v); }

void drop(LabeledGraph& g, const VertexSet& gone) {
  g.graph = g.graph.without(gone);
  for (VertexId v : gone) g.structure.roles.erase(v);
}

Cells slot_cells(const RhomboidStructure& s, int slot) {
  Cells cells(static_cast<std::size_t>(std::max(s.parts(slot) - 1, 0)));
  for (const auto& [v, t] : s.roles)
    if (t.role == Role::Subdivision && t.index == slot && t.pos >= 1 &&
        static_cast<std::size_t>(t.pos) <= cells.size())
      cells[static_cast<std::size_t>(t.pos - 1)] = v;
  return cells;
}

void set_slot_cells(RhomboidStructure& s, int slot, const Cells& cells) {
  for (std::size_t i = 0; i < cells.size(); ++i)
    if (cells[i]) s.roles[*cells[i]] = {Role::Subdivision, slot, static_cast<int>(i) + 1};
  s.subdivisions[slot] = static_cast<int>(cells.size()) + 1;
}

std::size_t cell_index(const Cells& cells, VertexId v) {
  for (std::size_t i = 0; i < cells.size(); ++i)
    if (cells[i] == v) return i;
  throw PathUnavailable("vertex missing from its slot");
}

// Renumbers every slot and spoke by +1 to open a new spoke 0.
void shift_spine_right(RhomboidStructure& s) {
  std::map<int, int> subs;
  for (auto [slot, parts] : s.subdivisions) subs[slot >= 1 ? slot + 1 : slot] = parts;
  s.subdivisions = subs;
  for (auto& [v, t] : s.roles) {
    if (t.role == Role::Spoke) ++t.index;
    if (t.role == Role::Subdivision && t.index >= 1) ++t.index;
  }
  ++s.spine_length;
}

struct SpiderInfo {
  VertexId spider = 0;
  std::optional<VertexId> anchor;
  int distance = -1;               // -1: no spoke reachable
  std::vector<VertexId> path;      // anchor .. spoke
  bool reaches_end = false;        // a path to v_{-1} or v_{n+1}
};

SpiderInfo inspect(const LabeledGraph& g, VertexId s) {
  SpiderInfo info;
  info.spider = s;
  for (VertexId u : g.graph.neighbors(s)) {
    const Role r = tag_of(g, u).role;
    if (is_hub(r)) continue;
    if (is_spine(r) && r != Role::VMinus1 && r != Role::VPlus1 && !info.anchor) {
      info.anchor = u;
      continue;
    }
    throw InconsistencyError("spider " + std::to_string(s) + " is adjacent to " +
                             tag_of(g, u).to_string());
  }
  if (!info.anchor) return info;
  std::map<VertexId, VertexId> parent{{*info.anchor, *info.anchor}};
  std::deque<VertexId> queue{*info.anchor};
  while (!queue.empty()) {
    VertexId v = queue.front();
    queue.pop_front();
    const Role r = tag_of(g, v).role;
    if (r == Role::VMinus1 || r == Role::VPlus1) info.reaches_end = true;
    if (r == Role::Spoke && info.distance < 0) {
      for (VertexId x = v;; x = parent[x]) {
        info.path.push_back(x);
        if (x == *info.anchor) break;
      }
      std::reverse(info.path.begin(), info.path.end());
      info.distance = static_cast<int>(info.path.size()) - 1;
      continue;  // keep exploring for reaches_end only through non-spokes
    }
    if (r == Role::Spoke) continue;
    for (VertexId u : g.graph.neighbors(v))
      if (!parent.count(u) && is_spine(tag_of(g, u).role)) {
        parent[u] = v;
        queue.push_back(u);
      }
  }
  return info;
}

std::optional<VertexId> isolated_vertex(const Graph& g) {
  for (VertexId v : g.vertices())
    if (g.degree(v) == 0) return v;
  return std::nullopt;
}

std::optional<std::pair<VertexId, VertexId>> leaf(const Graph& g) {
  for (VertexId v : g.vertices())
    if (g.degree(v) == 1) return std::make_pair(v, g.neighbors(v)[0]);
  return std::nullopt;
}

bool neighbors_within(const Graph& g, VertexId v, const VertexSet& allowed) {
  for (VertexId u : g.neighbors(v))
    if (!allowed.count(u)) return false;
  return true;
}

}  // namespace

HeadTail head_tail(const BraidWord& input, const BraidClass& cls) {
  if (cls.tag != ClassTag::C3) throw std::invalid_argument("head_tail expects a C3 word");
  HeadTail ht;
  BraidWord w = input;
  auto pos = positive_positions(w);
  if (pos.size() < 4 || pos[0] != 0 || w[0].gen != 3 || w[pos[1]].gen != 1 || w[pos[2]].gen != 2 ||
      w[pos.back()].gen != 2)
    throw InconsistencyError("word " + w.to_string() + " is not in normal C3 form");
  ht.right = w[0].id;
  ht.left = w[pos[1]].id;
  ht.closing = w[pos[2]].id;
  ht.opening = w[pos.back()].id;

  // sigma_1^{-1} sigma_3 -> sigma_3 sigma_1^{-1} and its mirror image.
  auto migrate = [&](bool front) {
    auto p = positive_positions(w);
    auto seg = ids_between(w, p[0], p[1]);
    if (seg.empty()) return false;
    LetterId id = front ? seg.front() : seg.back();
    const auto letter = w[static_cast<std::size_t>(w.index_of(id))];
    if (letter.gen != (front ? 1 : 3)) return false;
    TraceStep step;
    step.rule = front ? "head-migrate-w1" : "head-migrate-w3";
    step.witness = {id, front ? ht.right : ht.left};
    step.removed = {id};
    LetterId anchor = front ? w[w.size() - 1].id : ht.left;
    step.inserted = {Insertion{anchor, {letter}}};
    ReplayState st{w, {}, 0, false};
    apply_step(st, step);
    w = st.word;
    ht.steps.push_back(std::move(step));
    return true;
  };
  while (migrate(true)) {
  }
  while (migrate(false)) {
  }

  pos = positive_positions(w);
  ht.w2 = ids_between(w, pos[0], pos[1]);
  ht.w3 = ids_between(w, pos[1], pos[2]);
  for (std::size_t i = pos.back() + 1; i < w.size(); ++i) ht.w1.push_back(w[i].id);
  const Seg w1 = signed_gens(w, ht.w1), w2 = signed_gens(w, ht.w2), w3 = signed_gens(w, ht.w3);
  if (!menu_ok(w1, w2, w3))
    throw InconsistencyError("head segments of " + w.to_string() + " are outside the allowed menu");
  ht.variant = maximal_variant(w1, w2, w3);
  if (ht.variant == '?')
    throw InconsistencyError("head of " + w.to_string() + " extends no maximal head");
  ht.word = w;
  return ht;
}

TailElimination eliminate_tail_sigma2(const BraidWord& input, const HeadTail& ht) {
  TailElimination out;
  BraidWord w = input;
  std::vector<LetterId> centres;
  {
    auto pos = positive_positions(w);
    const auto from = static_cast<std::size_t>(w.index_of(ht.closing));
    const auto to = static_cast<std::size_t>(w.index_of(ht.opening));
    for (std::size_t p : pos)
      if (p > from && p < to && w[p].gen != 2) centres.push_back(w[p].id);
  }
  for (LetterId e : centres) {
    auto pos = positive_positions(w);
    const auto at = static_cast<std::size_t>(w.index_of(e));
    auto it = std::find(pos.begin(), pos.end(), at);
    if (it == pos.begin() || it + 1 == pos.end()) throw PathUnavailable("tail window at the word boundary");
    const std::size_t lp = *(it - 1), rp = *(it + 1);
    if (w[lp].gen != 2 || w[rp].gen != 2) throw PathUnavailable("tail window without sigma_2 ends");
    std::vector<LetterId> u_left, u_right;
    for (std::size_t i = lp + 1; i < at; ++i)
      if (w[i].gen == 2) u_left.push_back(w[i].id);
    for (std::size_t i = at + 1; i < rp; ++i)
      if (w[i].gen == 2) u_right.push_back(w[i].id);
    if (u_left.empty() && u_right.empty()) continue;
    if (u_left.size() > 1 || u_right.size() > 1) throw PathUnavailable("repeated sigma_2^{-1} in a tail segment");

    ChordView view(w);
    for (const auto* side : {&u_left, &u_right})
      for (LetterId u : *side) {
        if (!view.is_vertex(u)) throw PathUnavailable("tail sigma_2^{-1} without a vertex");
        auto nu = view.neighbors(u);
        auto ne = view.neighbors(e);
        if (std::binary_search(nu.begin(), nu.end(), e) ||
            !std::includes(ne.begin(), ne.end(), nu.begin(), nu.end()))
          throw PathUnavailable("splitting vertex is not dominated");
      }

    const int x = w[at].gen;
    TraceStep step;
    step.rule = "split-vertex";
    step.witness = {w[lp].id, e, w[rp].id};
    step.removed = u_left;
    step.removed.insert(step.removed.end(), u_right.begin(), u_right.end());
    step.removed.push_back(e);
    LetterId next = w.next_id();
    const LetterId v1 = u_left.empty() ? next++ : u_left.front();
    const LetterId v1p = u_right.empty() ? next++ : u_right.front();
    step.marked = {e};
    if (u_left.empty()) step.marked.push_back(v1);
    if (u_right.empty()) step.marked.push_back(v1p);
    // G(w) - e must match G(w') - {marked} with u taking the place of v1. The
    // nearest surviving letter before e is tried first, then the other slots
    // in the window.
    const std::vector<LetterId> gone(step.removed.begin(), step.removed.end() - 1);
    auto without_ids = [](const BraidWord& word, const VertexSet& ids) {
      Graph g = simplify(lando_graph(word)).graph;
      VertexSet present;
      for (VertexId v : ids)
        if (g.has_vertex(v)) present.insert(v);
      return g.without(present);
    };
    const Graph target = without_ids(w, {e});
    std::vector<LetterId> anchors;
    LetterId nearest = w[lp].id;
    for (std::size_t i = lp + 1; i < at; ++i)
      if (w[i].gen != 2) nearest = w[i].id;
    anchors.push_back(nearest);
    for (std::size_t i = lp; i < rp; ++i)
      if (i != at && w[i].id != nearest &&
          std::find(gone.begin(), gone.end(), w[i].id) == gone.end())
        anchors.push_back(w[i].id);
    std::optional<ReplayState> done;
    for (LetterId anchor : anchors) {
      step.inserted = {Insertion{anchor, {{v1, x, 1}, {e, 2, 1}, {v1p, x, 1}}}};
      ReplayState st{w, {}, 0, false};
      apply_step(st, step);
      if (without_ids(st.word, VertexSet(step.marked.begin(), step.marked.end())) == target) {
        done = std::move(st);
        break;
      }
    }
    if (!done) throw PathUnavailable("no placement of the split letters keeps the graph");
    w = done->word;
    out.deleted.insert(out.deleted.end(), step.marked.begin(), step.marked.end());
    out.steps.push_back(std::move(step));
  }
  out.word = w;
  return out;
}

LabeledGraph label_c3(const BraidWord& w, const HeadTail& ht, const std::set<LetterId>& deleted) {
  if (ht.variant == 'e') throw PathUnavailable("head variant (e) has no augmented labelling");
  const auto pos = positive_positions(w);
  const auto from = static_cast<std::size_t>(w.index_of(ht.closing));
  const auto to = static_cast<std::size_t>(w.index_of(ht.opening));
  std::map<LetterId, RoleTag> roles;
  roles[ht.right] = {Role::BRight};
  roles[ht.left] = {Role::BLeft};
  roles[ht.closing] = {Role::VMinus1};
  roles[ht.opening] = {Role::VPlus1};

  // Blocks (x sigma_2)^{a} after the closing sigma_2, x alternating 1, 3.
  std::vector<std::vector<LetterId>> blocks;
  int expect = 1;
  std::vector<std::size_t> tail;
  for (std::size_t p : pos)
    if (p > from && p <= to) tail.push_back(p);
  for (std::size_t i = 0; i < tail.size();) {
    std::vector<LetterId> block;
    while (i + 1 < tail.size() && w[tail[i]].gen == expect && w[tail[i + 1]].gen == 2) {
      block.push_back(w[tail[i]].id);
      block.push_back(w[tail[i + 1]].id);
      i += 2;
    }
    if (block.empty()) throw PathUnavailable("tail is not a block sequence");
    blocks.push_back(std::move(block));
    expect = 4 - expect;
  }
  if (blocks.size() < 2 || blocks.size() % 2) throw PathUnavailable("tail has an odd block count");

  RhomboidStructure s;
  s.augmented = true;
  s.spine_length = static_cast<int>(blocks.size()) - 2;
  const int n = s.spine_length;
  for (int b = 0; b < static_cast<int>(blocks.size()); ++b) {
    const auto& block = blocks[static_cast<std::size_t>(b)];
    const int slot = b;  // slot b holds block b (slot 0 after v_{-1})
    const int parts = static_cast<int>(block.size());
    s.subdivisions[slot] = parts;
    for (int j = 0; j + 1 < parts; ++j) {
      // slot 0 is numbered from spoke 0 back towards v_{-1}
      int p = slot == 0 ? parts - 1 - j : j + 1;
      roles[block[static_cast<std::size_t>(j)]] = {Role::Subdivision, slot, p};
    }
    if (b <= n) roles[block.back()] = {Role::Spoke, b};
  }

  auto head_roles = [&](const std::vector<LetterId>& seg, Role r) {
    for (LetterId id : seg) {
      const auto& l = w[static_cast<std::size_t>(w.index_of(id))];
      if (roles.count(id)) throw InconsistencyError("letter labelled twice");
      roles[id] = {r, l.gen};
    }
  };
  head_roles(ht.w1, Role::D);
  head_roles(ht.w3, Role::C);
  for (LetterId id : ht.w2) {
    if (w[static_cast<std::size_t>(w.index_of(id))].gen != 2 || roles.count(id))
      throw PathUnavailable("unexpected letter between the head hubs");
    roles[id] = {Role::B2};
  }
  auto precedes = [&](const std::vector<LetterId>& seg, int a, int b) {
    auto g = signed_gens(w, seg);
    auto ia = std::find(g.begin(), g.end(), -a), ib = std::find(g.begin(), g.end(), -b);
    return ia != g.end() && ib != g.end() && ia < ib;
  };
  s.r1_present = !precedes(ht.w3, 3, 2);
  s.r2_present = !precedes(ht.w1, 2, 1);

  int spider = 0;
  for (std::size_t i = from + 1; i < to; ++i) {
    if (w[i].positive()) continue;
    if (w[i].gen == 2) throw InconsistencyError("sigma_2^{-1} left in the tail");
    roles[w[i].id] = {Role::Spider, spider++};
  }

  Graph g = lando_graph(w);
  VertexSet gone(deleted.begin(), deleted.end());
  for (VertexId v : g.vertices())
    if (!roles.count(v)) throw InconsistencyError("unlabelled vertex " + std::to_string(v));
  LabeledGraph out;
  out.graph = g.without(gone);
  for (VertexId v : out.graph.vertices()) {
    out.structure.roles[v] = roles.at(v);
    out.graph.set_label(v, roles.at(v).to_string());
  }
  s.roles = out.structure.roles;
  out.structure = s;
  return out;
}

SpiderOutcome eliminate_spiders(const LabeledGraph& input) {
  SpiderOutcome out;
  out.residual = input;
  LabeledGraph& g = out.residual;
  auto evaluate = [&](const Graph& h) { return detail::evaluate_graph(h, &out.log).type; };
  auto finish_generic = [&](const std::string& why) {
    out.log.push_back("spider-generic " + why);
    out.terminal = evaluate(g.graph);
    return out;
  };

  for (;;) {
    std::vector<VertexId> spiders;
    for (VertexId v : g.graph.vertices())
      if (tag_of(g, v).role == Role::Spider) spiders.push_back(v);
    if (spiders.empty()) return out;

    if (auto v = isolated_vertex(g.graph)) {
      out.log.push_back("isolated " + std::to_string(*v));
      out.terminal = HomotopyType::contractible();
      return out;
    }
    if (auto lf = leaf(g.graph)) {
      out.log.push_back("leaf " + std::to_string(lf->first) + " preleaf " + std::to_string(lf->second));
      drop(g, g.graph.closed_star(lf->second));
      ++out.suspensions;
      continue;
    }

    std::vector<SpiderInfo> infos;
    for (VertexId s : spiders) infos.push_back(inspect(g, s));
    for (const auto& info : infos)
      if (!info.anchor) return finish_generic("unanchored spider " + std::to_string(info.spider));

    const SpiderInfo* best = nullptr;
    for (const auto& info : infos)
      if (info.distance >= 0 && (!best || info.distance < best->distance)) best = &info;

    if (best && best->distance == 0) {
      const VertexId v = *best->anchor, s = best->spider;
      if (!dominates(g.graph, v, s)) return finish_generic("spoke does not dominate its spider");
      out.log.push_back("spider d=0 spoke " + std::to_string(v));
      Graph rest = g.graph.without({v});
      Graph star = g.graph.without(g.graph.closed_star(v));
      out.wedge_terms.push_back(suspend(evaluate(star), out.suspensions + 1));
      out.terminal = evaluate(rest);
      return out;
    }
    if (best && best->distance == 1) {
      const VertexId s = best->spider, a = *best->anchor, vi = best->path.back();
      if (g.graph.adjacent(vi, s) || !dominates(g.graph, vi, s))
        return finish_generic("d=1 domination fails");
      const int i = tag_of(g, vi).index;
      const RoleTag at = tag_of(g, a);
      const int left = i == 0 ? 0 : i, right = i + 1;
      if (at.role != Role::Subdivision || (at.index != left && at.index != right))
        return finish_generic("d=1 anchor outside the spoke's slots");
      const int other = at.index == left ? right : left;
      out.log.push_back("spider d=1 delete spoke " + std::to_string(vi) + ", " + std::to_string(s) +
                        " becomes spoke " + std::to_string(i));
      drop(g, {vi});
      Cells cells = slot_cells(g.structure, other);
      if (other == right || other == 0) cells.insert(cells.begin(), std::nullopt);
      else cells.push_back(std::nullopt);
      set_slot_cells(g.structure, other, cells);
      g.structure.roles[s] = {Role::Spoke, i};
      continue;
    }
    if (best && best->distance == 2) {
      const VertexId s = best->spider, a = best->path[0], x = best->path[1], vi = best->path[2];
      Graph minus_anchor = g.graph.without({a});
      if (!neighbors_within(g.graph, x, {a, vi}) || minus_anchor.adjacent(vi, s) ||
          !dominates(minus_anchor, vi, s))
        return finish_generic("d=2 preconditions fail");
      out.log.push_back("spider d=2 delete star of " + std::to_string(a));
      drop(g, g.graph.closed_star(a));
      ++out.suspensions;
      continue;
    }
    if (best && best->distance >= 3) {
      const auto& p = best->path;
      const VertexId z0 = p[0], z1 = p[1], z2 = p[2], z3 = p[3];
      const RoleTag t0 = tag_of(g, z0);
      bool ok = g.graph.degree(z1) == 2 && g.graph.degree(z2) == 2 && !g.graph.adjacent(z0, z3);
      for (VertexId z : {z0, z1, z2})
        ok = ok && tag_of(g, z).role == Role::Subdivision && tag_of(g, z).index == t0.index;
      if (!ok) return finish_generic("spine Csorba preconditions fail");
      out.log.push_back("spine csorba " + std::to_string(z0) + ".." + std::to_string(z3));
      Cells cells = slot_cells(g.structure, t0.index);
      Cells kept;
      for (const auto& c : cells)
        if (c != z0 && c != z1 && c != z2) kept.push_back(c);
      g.graph = contract_csorba(g.graph, {z3, z2, z1, z0});
      for (VertexId z : {z0, z1, z2}) g.structure.roles.erase(z);
      set_slot_cells(g.structure, t0.index, kept);
      ++out.suspensions;
      continue;
    }

    // d = infinity for every spider.
    bool moved = false;
    for (const auto& i1 : infos) {
      for (const auto& i2 : infos) {
        if (i1.spider == i2.spider) continue;
        const VertexId s1 = i1.spider, s2 = i2.spider, a1 = *i1.anchor, a2 = *i2.anchor;
        if (!g.graph.adjacent(a1, a2)) continue;
        VertexSet allowed = g.graph.closed_star(s1);
        allowed.insert(a2);
        if (!neighbors_within(g.graph, a1, {s1, a2}) || !neighbors_within(g.graph, s2, allowed) ||
            allowed.count(s2))
          continue;
        out.log.push_back("spider d=inf(i) delete star of " + std::to_string(a2));
        drop(g, g.graph.closed_star(a2));
        ++out.suspensions;
        moved = true;
        break;
      }
      if (moved) break;
    }
    if (moved) continue;

    for (const auto& i1 : infos) {
      for (const auto& i2 : infos) {
        if (i1.spider == i2.spider) continue;
        const VertexId s1 = i1.spider, s2 = i2.spider, a1 = *i1.anchor, a2 = *i2.anchor;
        std::optional<VertexId> mid;
        for (VertexId y : g.graph.neighbors(a1))
          if (y != s1 && g.graph.adjacent(y, a2) && g.graph.degree(y) == 2) mid = y;
        if (!mid || g.graph.degree(a1) != 2 || g.graph.adjacent(s1, a2)) continue;
        Graph merged = contract_csorba(g.graph, {s1, a1, *mid, a2});
        if (!merged.has_vertex(s1) || !merged.adjacent(s1, s2) || !dominates(merged, s1, s2)) continue;
        out.log.push_back("spider d=inf(ii) csorba " + std::to_string(s1) + ".." + std::to_string(a2));
        Graph rest = merged.without({s1});
        Graph star = merged.without(merged.closed_star(s1));
        out.wedge_terms.push_back(suspend(evaluate(star), out.suspensions + 2));
        out.suspensions += 1;
        out.terminal = evaluate(rest);
        return out;
      }
    }

    for (const auto& info : infos) {
      if (!info.reaches_end) continue;
      const VertexId s = info.spider, a = *info.anchor;
      const RoleTag at = tag_of(g, a);
      const int n = g.structure.spine_length;
      if (at.role != Role::Subdivision || (at.index != 0 && at.index != n + 1)) continue;
      Cells cells = slot_cells(g.structure, at.index);
      const std::size_t q = cell_index(cells, a);
      if (q >= 1 && cells[q - 1]) continue;
      Cells inner(cells.begin(), cells.begin() + static_cast<std::ptrdiff_t>(q));
      Cells outer(cells.begin() + static_cast<std::ptrdiff_t>(q), cells.end());
      out.log.push_back("spider d=inf(iii) " + std::to_string(s) + " becomes a spoke");
      if (at.index == 0) {
        shift_spine_right(g.structure);
        std::reverse(inner.begin(), inner.end());
        set_slot_cells(g.structure, 1, inner);
        set_slot_cells(g.structure, 0, outer);
        g.structure.roles[s] = {Role::Spoke, 0};
      } else {
        g.structure.spine_length = n + 1;
        g.structure.subdivisions.erase(n + 1);
        set_slot_cells(g.structure, n + 1, inner);
        set_slot_cells(g.structure, n + 2, outer);
        g.structure.roles[s] = {Role::Spoke, n + 1};
      }
      moved = true;
      break;
    }
    if (moved) continue;
    return finish_generic("no spider move applies");
  }
}

HomotopyType finish_positive_tail(const LabeledGraph& g) {
  for (const auto& [v, t] : g.structure.roles)
    if (t.role == Role::Spider && g.graph.has_vertex(v)) throw LabelError("spider left in the graph");
  return eval_augmented_subgraph(g.graph, g.structure);
}

}  // namespace khoform
