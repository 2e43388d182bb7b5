#include <algorithm>
#include <cstdlib>

#include "chord_view.hpp"
#include "khoform/pipeline.hpp"

namespace khoform {

namespace {

using detail::ChordView;

bool near(int a, int b) { return std::abs(a - b) <= 1; }

struct Match {
  Pattern pattern;
  std::vector<std::size_t> pos;
  bool mirrored = false;
};

std::size_t scan_start(const std::vector<BraidLetter>& L) {
  return static_cast<std::size_t>(
      std::min_element(L.begin(), L.end(),
                       [](const auto& a, const auto& b) { return a.id < b.id; }) -
      L.begin());
}

// sigma_i w1 sigma_i with no positive neighbour generator in w1.
std::optional<Match> positive_square(const std::vector<BraidLetter>& L, std::size_t p) {
  const std::size_t m = L.size();
  if (!L[p].positive()) return std::nullopt;
  for (std::size_t s = 1; s < m; ++s) {
    std::size_t q = (p + s) % m;
    if (L[q].positive() && near(L[q].gen, L[p].gen)) {
      if (L[q].gen == L[p].gen) return Match{Pattern::PositiveSquare, {p, q}};
      return std::nullopt;
    }
  }
  return std::nullopt;
}

std::optional<Match> negative_square(const std::vector<BraidLetter>& L, std::size_t p) {
  const std::size_t m = L.size();
  const auto& a = L[p];
  if (a.positive() || m < 2) return std::nullopt;
  const auto& b = L[(p + 1) % m];
  if (!b.positive() && b.gen == a.gen) return Match{Pattern::NegativeSquare, {p, (p + 1) % m}};
  if (m < 3) return std::nullopt;
  const auto& c = L[(p + 2) % m];
  if (!b.positive() && std::abs(b.gen - a.gen) == 1 && !c.positive() && c.gen == a.gen)
    return Match{Pattern::NegativeSquare, {p, (p + 1) % m, (p + 2) % m}};
  return std::nullopt;
}

// Walks away from the positive letter at p (forward or backward) until a
// positive neighbour generator, collecting inverse occurrences of its
// generator.
std::vector<std::size_t> inverse_run(const std::vector<BraidLetter>& L, std::size_t p, bool forward) {
  const std::size_t m = L.size();
  std::vector<std::size_t> out;
  for (std::size_t s = 1; s < m; ++s) {
    std::size_t q = forward ? (p + s) % m : (p + m - s) % m;
    if (L[q].positive() && near(L[q].gen, L[p].gen)) break;
    if (!L[q].positive() && L[q].gen == L[p].gen) out.push_back(q);
  }
  return out;
}

std::optional<Match> nesting(const std::vector<BraidLetter>& L, std::size_t p) {
  if (!L[p].positive()) return std::nullopt;
  for (bool forward : {true, false}) {
    auto run = inverse_run(L, p, forward);
    if (run.size() >= 2) {
      if (forward) return Match{Pattern::Nesting, {p, run[0], run[1]}, false};
      return Match{Pattern::Nesting, {run[1], run[0], p}, true};
    }
  }
  return std::nullopt;
}

std::optional<Match> r2(const std::vector<BraidLetter>& L, std::size_t p) {
  const std::size_t m = L.size();
  if (!L[p].positive()) return std::nullopt;
  for (bool forward : {true, false}) {
    for (std::size_t s = 1; s < m; ++s) {
      std::size_t q = forward ? (p + s) % m : (p + m - s) % m;
      if (!near(L[q].gen, L[p].gen)) continue;
      if (!L[q].positive() && L[q].gen == L[p].gen)
        return forward ? Match{Pattern::R2, {p, q}, false} : Match{Pattern::R2, {q, p}, true};
      break;
    }
  }
  return std::nullopt;
}

std::optional<Match> first_match(const std::vector<BraidLetter>& L) {
  if (L.empty()) return std::nullopt;
  const std::size_t m = L.size();
  const std::size_t start = scan_start(L);
  using Finder = std::optional<Match> (*)(const std::vector<BraidLetter>&, std::size_t);
  for (Finder f : {Finder{positive_square}, Finder{negative_square}, Finder{nesting}, Finder{r2}})
    for (std::size_t s = 0; s < m; ++s)
      if (auto hit = f(L, (start + s) % m)) return hit;
  return std::nullopt;
}

std::vector<LetterId> ids_at(const std::vector<BraidLetter>& L, const std::vector<std::size_t>& pos) {
  std::vector<LetterId> out;
  for (auto p : pos) out.push_back(L[p].id);
  return out;
}

bool subset(const std::vector<LetterId>& a, const std::vector<LetterId>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::vector<LetterId> minus(std::vector<LetterId> a, LetterId x) {
  a.erase(std::remove(a.begin(), a.end(), x), a.end());
  return a;
}

// The vertex of `keep` or `drop` to delete: the dominator of a pair, or a
// letter whose chord is not a vertex at all.
LetterId pick_dominator(const ChordView& view, LetterId near_id, LetterId far_id,
                        const std::string& rule) {
  if (!view.is_vertex(far_id)) return far_id;
  if (!view.is_vertex(near_id)) return near_id;
  auto nn = minus(view.neighbors(near_id), far_id);
  auto nf = minus(view.neighbors(far_id), near_id);
  if (subset(nn, nf)) return far_id;
  if (subset(nf, nn)) return near_id;
  throw InconsistencyError(rule + ": neither letter " + std::to_string(near_id) + " nor " +
                           std::to_string(far_id) + " dominates");
}

}  // namespace

std::string to_string(Pattern p) {
  switch (p) {
    case Pattern::PositiveSquare: return "positive-square";
    case Pattern::NegativeSquare: return "negative-square";
    case Pattern::Nesting: return "nesting";
    case Pattern::R2: return "r2";
  }
  return "?";
}

std::optional<Violation> find_violation(const BraidWord& w) {
  auto hit = first_match(w.letters());
  if (!hit) return std::nullopt;
  return Violation{hit->pattern, ids_at(w.letters(), hit->pos)};
}

bool is_strongly_reduced(const BraidWord& w) { return !find_violation(w).has_value(); }

StrongReduction strong_reduce(const BraidWord& input) {
  ReplayState st{input, {}, 0, false};
  ReductionTrace trace;
  auto commit = [&](TraceStep step) {
    apply_step(st, step);
    trace.log.push_back(std::move(step));
  };
  auto fail = [&](const std::string& what) {
    trace.suspensions = st.suspensions;
    trace.deleted = st.deleted;
    return InconsistencyError(what, trace.to_json());
  };

  while (!st.contractible) {
    // Marked negatives are deleted outright; deleted positives stay in D.
    TraceStep prune;
    prune.rule = "prune-marked";
    for (const auto& l : st.word.letters())
      if (!l.positive() && st.deleted.count(l.id)) prune.removed.push_back(l.id);
    for (LetterId id : st.deleted)
      if (st.word.index_of(id) < 0) prune.unmarked.push_back(id);
    for (LetterId id : prune.removed) prune.unmarked.push_back(id);
    if (!prune.removed.empty() || !prune.unmarked.empty()) commit(std::move(prune));

    const auto& L = st.word.letters();
    auto hit = first_match(L);
    if (!hit) break;
    TraceStep step;
    step.rule = to_string(hit->pattern);
    step.witness = ids_at(L, hit->pos);
    ChordView view(st.word);

    switch (hit->pattern) {
      case Pattern::PositiveSquare: {
        const std::size_t p = hit->pos[0], q = hit->pos[1], m = L.size();
        const int i = L[p].gen;
        std::vector<LetterId> inner_inverse, near_inverse;
        for (std::size_t s = (p + 1) % m; s != q; s = (s + 1) % m) {
          if (L[s].positive()) continue;
          if (L[s].gen == i) inner_inverse.push_back(L[s].id);
          else if (near(L[s].gen, i)) near_inverse.push_back(L[s].id);
        }
        if (!inner_inverse.empty()) {
          LetterId u = inner_inverse.front();
          if (!view.is_vertex(u) || !view.neighbors(u).empty())
            throw fail("positive-square: letter " + std::to_string(u) + " is not an isolated vertex");
          step.rule = "positive-square-isolated";
          step.contractible = true;
          commit(std::move(step));
          break;
        }
        for (LetterId id : {L[p].id, L[q].id})
          if (view.is_vertex(id))
            throw fail("positive-square: letter " + std::to_string(id) + " carries a vertex");
        for (LetterId id : near_inverse)
          if (view.is_vertex(id))
            throw fail("positive-square: letter " + std::to_string(id) + " carries a vertex");
        step.removed = near_inverse;
        step.removed.push_back(L[q].id);
        step.marked = {L[p].id};
        if (st.deleted.count(L[q].id)) step.unmarked = {L[q].id};
        commit(std::move(step));
        break;
      }
      case Pattern::NegativeSquare: {
        LetterId a = L[hit->pos.front()].id, b = L[hit->pos.back()].id;
        step.removed = {pick_dominator(view, a, b, step.rule)};
        commit(std::move(step));
        break;
      }
      case Pattern::Nesting: {
        // Unmirrored: positions (p, near, far); mirrored: (far, near, p).
        LetterId near_id = L[hit->pos[1]].id;
        LetterId far_id = L[hit->mirrored ? hit->pos[0] : hit->pos[2]].id;
        step.removed = {pick_dominator(view, near_id, far_id, step.rule)};
        commit(std::move(step));
        break;
      }
      case Pattern::R2: {
        const LetterId u = L[hit->pos[hit->mirrored ? 0 : 1]].id;
        const LetterId p = L[hit->pos[hit->mirrored ? 1 : 0]].id;
        if (!view.is_vertex(u)) {
          step.rule = "r2-inert";
          step.removed = {u};
          commit(std::move(step));
          break;
        }
        auto nu = view.neighbors(u);
        if (!subset(nu, {p}))
          throw fail("r2: letter " + std::to_string(u) + " has neighbours besides " + std::to_string(p));
        if (nu.empty() || st.deleted.count(p)) {
          step.rule = "r2-isolated";
          step.contractible = true;
          commit(std::move(step));
          break;
        }
        step.removed = {u};
        step.marked = minus(view.neighbors(p), u);
        step.marked.push_back(p);
        step.suspensions = 1;
        commit(std::move(step));
        break;
      }
    }
  }

  trace.suspensions = st.suspensions;
  trace.deleted = st.deleted;
  trace.contractible = st.contractible;
  return StrongReduction{st.contractible, st.word, std::move(trace)};
}

}  // namespace khoform
