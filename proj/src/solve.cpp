#include <algorithm>

#include "chord_view.hpp"
#include "evaluate.hpp"
#include "khoform/pipeline.hpp"
#include "khoform/resolution.hpp"

namespace khoform {

namespace {

Graph graph_minus(const BraidWord& w, const std::set<LetterId>& deleted) {
  Graph g = lando_graph(w);
  VertexSet gone;
  for (LetterId id : deleted)
    if (g.has_vertex(id)) gone.insert(id);
  return g.without(gone);
}

// Letters sigma_2^{-1} sitting between a positive sigma_1 sigma_3 pair.
std::vector<LetterId> inert_between_far_pairs(const BraidWord& w) {
  std::vector<std::size_t> pos;
  for (std::size_t i = 0; i < w.size(); ++i)
    if (w[i].positive()) pos.push_back(i);
  std::vector<LetterId> out;
  if (pos.size() < 2) return out;
  detail::ChordView view(w);
  const std::size_t m = w.size();
  for (std::size_t k = 0; k < pos.size(); ++k) {
    std::size_t a = pos[k], b = pos[(k + 1) % pos.size()];
    int ga = w[a].gen, gb = w[b].gen;
    if (!((ga == 1 && gb == 3) || (ga == 3 && gb == 1))) continue;
    for (std::size_t i = (a + 1) % m; i != b; i = (i + 1) % m)
      if (w[i].gen == 2 && !w[i].positive() && !view.is_vertex(w[i].id)) out.push_back(w[i].id);
  }
  return out;
}

}  // namespace

HomotopyType solve_easy(const BraidWord& w, const BraidClass& cls) {
  switch (cls.tag) {
    case ClassTag::C0: {
      std::vector<BraidLetter> pos;
      for (const auto& l : w.letters())
        if (l.positive()) pos.push_back(l);
      HomotopyType rule = HomotopyType::contractible();
      if (pos.empty()) {
        rule = HomotopyType::empty();
      } else {
        bool inverse = std::any_of(w.letters().begin(), w.letters().end(), [&](const BraidLetter& l) {
          return !l.positive() && l.gen == pos.front().gen;
        });
        if (inverse) rule = HomotopyType::sphere(0);
      }
      auto check = detail::evaluate_graph(lando_graph(w)).type;
      if (!(check == rule))
        throw InconsistencyError("C0 word " + w.to_string() + ": rule gives " + rule.to_string() +
                                 ", reduction gives " + check.to_string());
      return rule;
    }
    case ClassTag::C1:
    case ClassTag::C2:
      return detail::evaluate_graph(lando_graph(w)).type;
    case ClassTag::C5:
      return detail::evaluate_graph(lando_graph(w.without(inert_between_far_pairs(w)))).type;
    default:
      throw std::invalid_argument("solve_easy handles C0, C1, C2 and C5 only");
  }
}

Solution solve(const BraidWord& input) {
  if (input.strands() < 2 || input.strands() > 4)
    throw std::invalid_argument("solve needs a braid on at most four strands");
  const BraidWord w = input.strands() == 4 ? input : BraidWord(4, input.letters());

  Solution sol;
  StrongReduction red = strong_reduce(w);
  sol.trace = std::move(red.trace);
  if (red.contractible) {
    sol.type = HomotopyType::contractible();
    return sol;
  }

  ReplayState st{red.word, sol.trace.deleted, sol.trace.suspensions, false};
  auto commit = [&](TraceStep step) {
    apply_step(st, step);
    sol.trace.log.push_back(std::move(step));
  };
  auto fail = [&](const std::string& what) {
    sol.trace.deleted = st.deleted;
    return InconsistencyError(what, sol.trace.to_json());
  };

  BraidClass cls;
  try {
    cls = classify(st.word);
  } catch (const InconsistencyError& e) {
    throw fail(e.what());
  }
  for (const auto& t : cls.normalization) {
    TraceStep step;
    step.rule = "normalize";
    step.transform = t;
    commit(std::move(step));
  }
  sol.cls = cls;

  HomotopyType core = HomotopyType::contractible();
  int graph_suspensions = 0;
  std::vector<HomotopyType> terms;  // relative to the word-stage suspensions
  auto generic = [&](const std::string& why) {
    sol.trace.graph_log.push_back("generic: " + why);
    auto ev = detail::evaluate_graph(graph_minus(st.word, st.deleted), &sol.trace.graph_log);
    sol.oracle_fallback = ev.oracle;
    return ev.type;
  };

  try {
    const bool easy = cls.tag == ClassTag::C0 || cls.tag == ClassTag::C1 || cls.tag == ClassTag::C2 ||
                      cls.tag == ClassTag::C5;
    if (easy && st.deleted.empty()) {
      sol.trace.graph_log.push_back("easy " + to_string(cls.tag));
      core = solve_easy(st.word, cls);
    } else if (easy) {
      core = generic(to_string(cls.tag) + " with deletions");
    } else if (cls.tag == ClassTag::C3 && cls.exponents.front() > 1) {
      try {
        HeadTail ht = head_tail(st.word, cls);
        for (auto& s : ht.steps) commit(std::move(s));
        ht.steps.clear();
        sol.trace.graph_log.push_back(std::string("head variant ") + ht.variant);
        if (ht.variant == 'e') throw PathUnavailable("head variant (e)");
        TailElimination te = eliminate_tail_sigma2(st.word, ht);
        for (auto& s : te.steps) commit(std::move(s));
        LabeledGraph lg = label_c3(st.word, ht, st.deleted);
        SpiderOutcome so = eliminate_spiders(lg);
        for (auto& line : so.log) sol.trace.graph_log.push_back(line);
        HomotopyType main = so.terminal ? *so.terminal : finish_positive_tail(so.residual);
        core = suspend(main, so.suspensions);
        terms = so.wedge_terms;
        graph_suspensions = so.suspensions;
        sol.structured = std::none_of(so.log.begin(), so.log.end(), [](const std::string& l) {
          return l.rfind("spider-generic", 0) == 0;
        });
      } catch (const PathUnavailable& e) {
        core = generic(std::string("C3 path unavailable: ") + e.what());
      } catch (const LabelError& e) {
        core = generic(std::string("labels rejected: ") + e.what());
      }
    } else {
      core = generic(to_string(cls.tag) + (cls.tag == ClassTag::C3 ? " with a_1 = 1" : ""));
    }
  } catch (const InconsistencyError& e) {
    if (!e.trace_json().empty()) throw;
    throw fail(e.what());
  }

  const int k_word = st.suspensions;
  sol.trace.suspensions = k_word + graph_suspensions;
  sol.trace.deleted = st.deleted;
  HomotopyType total = suspend(core, k_word);
  for (const auto& t : terms) {
    auto term = suspend(t, k_word);
    sol.trace.wedge_terms.push_back(term);
    total = wedge(total, term);
  }
  if (!has_four_braid_shape(total)) throw fail("result " + total.to_string() + " has a forbidden shape");
  sol.type = total;
  return sol;
}

}  // namespace khoform
