#include <random>

#include "doctest.h"
#include "khoform/harness.hpp"
#include "khoform/oracle.hpp"
#include "khoform/pipeline.hpp"
#include "khoform/resolution.hpp"
#include "khoform/verify.hpp"
#include "util.hpp"

using namespace khoform;
using namespace khoform::test;

TEST_CASE("violations and witnesses") {
  auto sq = find_violation(w4({1, 1}));
  REQUIRE(sq);
  CHECK(sq->pattern == Pattern::PositiveSquare);
  CHECK(sq->letters == std::vector<LetterId>{0, 1});

  auto neg = find_violation(w4({-1, -2, -1}));
  REQUIRE(neg);
  CHECK(neg->pattern == Pattern::NegativeSquare);

  auto nest = find_violation(w4({1, -1, -3, -1, 2}));
  REQUIRE(nest);
  CHECK(nest->pattern == Pattern::Nesting);

  auto r2 = find_violation(w4({1, -1, 2, 3}));
  REQUIRE(r2);
  CHECK(r2->pattern == Pattern::R2);

  CHECK(is_strongly_reduced(w4({3, 1, 2, 1, 2, 3, 2})));
  CHECK(is_strongly_reduced(w4({})));
}

TEST_CASE("reduced words are left alone") {
  auto w = w4({3, 1, 2, 1, 2, 3, 2});
  auto r = strong_reduce(w);
  CHECK_FALSE(r.contractible);
  CHECK(r.word == w);
  CHECK(r.trace.log.empty());
}

TEST_CASE("small words that reduce to a cone") {
  CHECK(strong_reduce(w4({1, -1, 2, 1, -1, 2, 1})).contractible);
  CHECK(strong_reduce(w4({1, 1, -1})).contractible);
  CHECK_FALSE(strong_reduce(w4({1, -2, 1})).contractible);
}

TEST_CASE("strong reduction output is strongly reduced") {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 2000; ++i) {
    auto w = random_word_up_to(rng, 20);
    auto r = strong_reduce(w);
    if (!r.contractible) CHECK(is_strongly_reduced(r.word));
  }
}

TEST_CASE("trace replay reproduces the oracle profile on every word up to length 6") {
  std::size_t checked = 0;
  for (std::size_t len = 0; len <= 6; ++len)
    for (std::uint64_t k = 0; k < word_count(len); ++k) {
      auto w = nth_word(len, k);
      auto r = strong_reduce(w);
      auto direct = oracle_profile(lando_graph(w));
      if (!(replay_profile(w, r.trace) == direct)) FAIL_CHECK(w.to_string());
      ++checked;
    }
  CHECK(checked == 55987);
}

TEST_CASE("trace JSON round trip") {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 300; ++i) {
    auto w = random_word_up_to(rng, 16);
    auto r = strong_reduce(w);
    auto back = ReductionTrace::from_json(r.trace.to_json());
    CHECK(back.to_json() == r.trace.to_json());
    auto a = replay(w, r.trace), b = replay(w, back);
    CHECK(a.word == b.word);
    CHECK(a.deleted == b.deleted);
    CHECK(a.suspensions == b.suspensions);
    CHECK(a.contractible == r.contractible);
    if (!r.contractible) CHECK(a.word == r.word);
  }
}

TEST_CASE("replay rejects steps on missing letters") {
  ReductionTrace t;
  TraceStep s;
  s.rule = "negative-square";
  s.removed = {42};
  t.log.push_back(s);
  CHECK_THROWS_AS(replay(w4({1, 2}), t), std::invalid_argument);
}
