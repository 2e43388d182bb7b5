#include <random>
#include <sstream>

#include "../src/evaluate.hpp"
#include "doctest.h"
#include "khoform/harness.hpp"
#include "khoform/oracle.hpp"
#include "khoform/pipeline.hpp"
#include "khoform/reduce.hpp"
#include "khoform/resolution.hpp"
#include "util.hpp"

using namespace khoform;
using namespace khoform::test;

namespace {

Graph from_edges(int n, const std::string& edges) {
  Graph g;
  for (int i = 0; i < n; ++i) g.add_vertex(i);
  std::istringstream in(edges);
  int a, b;
  char dash;
  while (in >> a >> dash >> b) g.add_edge(a, b);
  return g;
}

}  // namespace

TEST_CASE("twisted 3-braid with a sphere") {
  auto w = wn(3, {1, 2, 1, 2, -1, -2, 1, 2, -1, -2});
  auto s = solve(w);
  CHECK(s.type == S(2));
  CHECK(oracle_profile(lando_graph(w)) == expected_profile(S(2)));
}

TEST_CASE("small named words") {
  CHECK(solve(wn(3, {1, 2, 1, 1, 2, 1})).type == contractible());
  CHECK(solve(wn(3, {1, 2, 1, 2, 1, 2})).type == W({1, 1}));
  CHECK(solve(w4({1, 2, 1, 2, 1, 2})).type == W({1, 1}));
  CHECK(solve(w4({2, 1, -1, 2, 1})).type == contractible());
  CHECK(solve(w4({2, 2, 1})).type == contractible());
}

TEST_CASE("1 -1 2 1 -1 2 1 is contractible") {
  auto w = w4({1, -1, 2, 1, -1, 2, 1});
  CHECK(solve(w).type == contractible());
  CHECK(oracle_profile(lando_graph(w)).groups.empty());
}

TEST_CASE("strand count") {
  auto three = wn(3, {1, 2, -1, 2});
  auto four = w4({1, 2, -1, 2});
  CHECK(solve(three).type == solve(four).type);
  CHECK(solve(wn(2, {1, 1, 1})).type == solve(w4({1, 1, 1})).type);
  CHECK_THROWS_AS(solve(wn(5, {1, 4})), std::invalid_argument);
}

TEST_CASE("empty and trivial words") {
  CHECK(solve(w4({})).type == HomotopyType::empty());
  CHECK(solve(w4({-1, -2, -3})).type == HomotopyType::empty());
  CHECK(solve(w4({1})).type == contractible());
}

TEST_CASE("output shape over random words") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 3000; ++i) {
    auto w = random_word_up_to(rng, 16, 4);
    auto s = solve(w);
    INFO(w.to_string());
    CHECK(has_four_braid_shape(s.type));
  }
}

TEST_CASE("rotate, reverse and involution leave the type unchanged") {
  std::mt19937_64 rng(19);
  for (int i = 0; i < 400; ++i) {
    auto w = random_word_up_to(rng, 14, 4);
    if (w.empty()) continue;
    INFO(w.to_string());
    const auto t = solve(w).type;
    CHECK(solve(transform(w, Transform::rotate(rng() % w.size()))).type == t);
    CHECK(solve(transform(w, Transform::reverse())).type == t);
    CHECK(solve(transform(w, Transform::involution())).type == t);
  }
}

TEST_CASE("trace replays to the same word and deletions") {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 500; ++i) {
    auto w = random_word_up_to(rng, 14, 4);
    auto s = solve(w);
    auto back = ReductionTrace::from_json(s.trace.to_json());
    auto st = replay(w, back);
    INFO(w.to_string());
    if (s.type.is_contractible()) continue;
    CHECK(st.deleted == s.trace.deleted);
  }
}

TEST_CASE("stalled small graphs fall back to the oracle") {
  auto g = from_edges(17,
                      "0-1 0-4 0-6 0-8 0-11 0-12 0-15 1-2 1-5 1-6 1-7 1-9 1-15 2-3 2-5 2-6 2-8 2-10 2-11 "
                      "2-13 2-15 2-16 3-7 3-8 3-11 3-12 3-13 3-14 3-16 4-6 4-8 4-12 4-13 4-14 5-6 5-7 5-10 "
                      "5-11 5-12 5-13 5-14 5-15 5-16 6-9 6-10 6-13 7-9 7-10 7-11 7-13 7-15 7-16 8-10 8-12 "
                      "8-14 9-10 9-11 9-13 9-14 9-15 9-16 10-11 10-12 10-16 11-14 12-14 12-15 12-16 13-16");
  REQUIRE_FALSE(try_reduce(g));
  auto e = detail::evaluate_graph(g);
  CHECK(e.oracle);
  CHECK(expected_profile(e.type) == oracle_profile(g));
}

TEST_CASE("stalled large graphs abort") {
  auto g = from_edges(21,
                      "0-1 0-11 0-12 0-13 0-14 0-16 0-20 1-3 1-8 1-12 1-13 1-15 2-10 2-18 2-19 3-9 3-11 "
                      "3-15 3-17 3-19 4-8 4-12 4-14 4-16 5-6 5-9 5-10 5-16 5-17 6-7 6-8 6-10 6-16 6-18 7-13 "
                      "7-17 7-18 8-12 8-13 9-11 10-17 11-13 11-19 12-13 12-20 13-16 14-16 14-17 14-19 15-16 "
                      "15-19 15-20 18-20");
  REQUIRE_FALSE(try_reduce(g));
  CHECK_THROWS_AS(detail::evaluate_graph(g), InconsistencyError);
}
