#include <random>

#include "doctest.h"
#include "khoform/oracle.hpp"
#include "khoform/pipeline.hpp"
#include "khoform/resolution.hpp"
#include "khoform/verify.hpp"
#include "util.hpp"

using namespace khoform;
using namespace khoform::test;

namespace {

bool logged(const Solution& s, const std::string& prefix) {
  for (const auto& l : s.trace.graph_log)
    if (l.rfind(prefix, 0) == 0) return true;
  return false;
}

// sigma_3 (sigma_1 sigma_2)^{a_1} (sigma_3 sigma_2)^{a_2} ... with negatives
// sprinkled in.
std::vector<int> biased_c3(std::mt19937_64& rng, double p_negative) {
  std::vector<int> positives{3};
  const int k = 1 + static_cast<int>(rng() % 2);
  for (int b = 0; b < 2 * k; ++b) {
    const int a = (b == 0 ? 2 : 1) + static_cast<int>(rng() % 2);
    for (int j = 0; j < a; ++j) {
      positives.push_back(b % 2 == 0 ? 1 : 3);
      positives.push_back(2);
    }
  }
  std::bernoulli_distribution negative(p_negative);
  std::vector<int> out;
  for (int x : positives) {
    while (negative(rng)) out.push_back(-(1 + static_cast<int>(rng() % 3)));
    out.push_back(x);
  }
  std::rotate(out.begin(), out.begin() + static_cast<std::ptrdiff_t>(rng() % out.size()), out.end());
  return out;
}

}  // namespace

TEST_CASE("head of a positive word") {
  auto w = w4({3, 1, 2, 1, 2, 3, 2});
  auto ht = head_tail(w, classify(w));
  CHECK(ht.right == 0);
  CHECK(ht.left == 1);
  CHECK(ht.closing == 2);
  CHECK(ht.opening == 6);
  CHECK(ht.w1.empty());
  CHECK(ht.w2.empty());
  CHECK(ht.w3.empty());
  CHECK(ht.variant == 'a');
}

TEST_CASE("head segments") {
  auto w = w4({3, -2, 1, 2, 1, 2, 3, 2});
  auto ht = head_tail(w, classify(w));
  CHECK(ht.w2 == std::vector<LetterId>{1});

  // sigma_1^{-1} at the front of w2 commutes past sigma_3 into w1
  auto v = w4({3, -1, -2, 1, 2, 1, 2, 3, 2});
  auto hv = head_tail(v, classify(v));
  CHECK(hv.w1 == std::vector<LetterId>{1});
  CHECK(hv.w2 == std::vector<LetterId>{2});
  REQUIRE(hv.steps.size() == 1);
  CHECK(hv.steps[0].rule == "head-migrate-w1");
  CHECK(hv.word.to_string() == "3 -2 1 2 1 2 3 2 -1");
  CHECK(lando_graph(hv.word) == lando_graph(v));

  auto u = w4({3, -2, -3, 1, 2, 1, 2, 3, 2});
  auto hu = head_tail(u, classify(u));
  CHECK(hu.w2 == std::vector<LetterId>{1});
  CHECK(hu.w3 == std::vector<LetterId>{2});
  REQUIRE(hu.steps.size() == 1);
  CHECK(hu.steps[0].rule == "head-migrate-w3");
  CHECK(lando_graph(hu.word) == lando_graph(u));
  CHECK(lando_graph(hv.word) == lando_graph(v));
}

TEST_CASE("head outside the menu is an inconsistency") {
  // w3 = sigma_2^{-1} sigma_2^{-1} is not strongly reduced and fits no head
  auto w = w4({3, 1, -2, -2, 2, 1, 2, 3, 2});
  BraidClass c;
  c.tag = ClassTag::C3;
  c.exponents = {2, 1};
  c.word = w;
  CHECK_THROWS_AS(head_tail(w, c), InconsistencyError);
}

TEST_CASE("tail sigma_2 elimination keeps the oracle profile") {
  std::mt19937_64 rng(41);
  int eliminated = 0;
  for (int i = 0; i < 3000 && eliminated < 40; ++i) {
    auto w0 = w4(biased_c3(rng, 0.25));
    auto r = strong_reduce(w0);
    if (r.contractible) continue;
    auto c = classify(r.word);
    if (c.tag != ClassTag::C3 || c.exponents.front() < 2) continue;
    BraidWord w = c.word;
    HeadTail ht;
    try {
      ht = head_tail(w, c);
    } catch (const InconsistencyError&) {
      FAIL_CHECK(w.to_string());
      continue;
    }
    TailElimination te;
    try {
      te = eliminate_tail_sigma2(ht.word, ht);
    } catch (const PathUnavailable&) {
      continue;
    }
    if (te.steps.empty()) continue;
    Graph before = lando_graph(ht.word);
    if (before.vertex_count() > 22) continue;
    ++eliminated;
    Graph after = lando_graph(te.word);
    VertexSet gone(te.deleted.begin(), te.deleted.end());
    CHECK(oracle_profile(before) == oracle_profile(after.without(gone)));
  }
  CHECK(eliminated >= 10);
}

TEST_CASE("each spider move on a small word") {
  struct Case {
    std::vector<int> word;
    const char* move;
    HomotopyType type;
  };
  const std::vector<Case> cases = {
      {{3, 1, 2, 1, 2, 3, 2, -1, 3, 2}, "spider d=0", S(2)},
      {{3, 1, 2, 1, 2, -1, 3, 2}, "spider d=1", S(1)},
      {{3, 1, 2, 1, 2, 3, 2, 3, 2, -1, 3, 2}, "spider d=2", contractible()},
      {{3, 1, 2, 1, 2, 3, 2, -1, 3, 2}, "spine csorba", S(2)},
      {{3, 1, 2, -3, 1, 2, -3, 1, 2, -3, 3, 2}, "spider d=inf(ii)", S(2)},
      {{3, 1, 2, 1, -3, 2, -1, 3, 2}, "spider d=inf(iii)", S(1)},
  };
  for (const auto& c : cases) {
    auto w = w4(c.word);
    INFO(w.to_string());
    auto s = solve(w);
    CHECK(s.structured);
    CHECK(logged(s, c.move));
    CHECK(s.type == c.type);
    CHECK(oracle_profile(lando_graph(w)) == expected_profile(c.type));
  }
}

TEST_CASE("head variants b and e") {
  auto b = solve(w4({3, -2, -3, 1, -2, -1, 2, 1, 2, -1, 3, 2}));
  CHECK(logged(b, "head variant b"));
  CHECK(b.structured);
  auto e = w4({3, -2, -1, -3, -2, 1, 2, 1, 2, 3, -3, -3, -3, 2});
  auto se = solve(e);
  CHECK(logged(se, "head variant e"));
  CHECK_FALSE(se.structured);
  CHECK(oracle_profile(lando_graph(e)) == expected_profile(se.type));
}

TEST_CASE("structured coverage on C3 words") {
  std::mt19937_64 rng(43);
  int c3 = 0, structured = 0, checked = 0;
  for (int i = 0; i < 1500; ++i) {
    auto w = w4(biased_c3(rng, 0.2));
    auto s = solve(w);
    if (!s.cls || s.cls->tag != ClassTag::C3 || s.cls->exponents.front() < 2) continue;
    ++c3;
    structured += s.structured;
    auto g = lando_graph(w);
    if (g.vertex_count() > 20) continue;
    ++checked;
    CHECK(oracle_profile(g) == expected_profile(s.type));
  }
  MESSAGE("C3 words " << c3 << ", structured " << structured << ", oracle-checked " << checked);
  CHECK(c3 > 500);
  CHECK(structured * 100 >= c3 * 95);
}
