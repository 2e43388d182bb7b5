#include <random>

#include "doctest.h"
#include "khoform/families.hpp"
#include "khoform/oracle.hpp"
#include "util.hpp"

using namespace khoform;
using namespace khoform::test;

namespace {

HomologyProfile profile(std::map<int, long long> ranks) {
  HomologyProfile p;
  for (auto [d, r] : ranks) p.groups[d] = {r, {}};
  return p;
}

long long alternating_rank_sum(const HomologyProfile& p) {
  long long s = 0;
  for (const auto& [d, g] : p.groups) s += (d % 2 == 0 ? 1 : -1) * g.rank;
  return s;
}

Graph random_graph(std::mt19937_64& rng, int n, double p) {
  Graph g;
  std::bernoulli_distribution edge(p);
  for (int i = 0; i < n; ++i) g.add_vertex(i);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (edge(rng)) g.add_edge(i, j);
  return g;
}

}  // namespace

TEST_CASE("face enumeration") {
  auto empty = independence_complex(Graph{});
  CHECK(empty.face_count() == 1);
  CHECK(empty.dimension() == -1);

  Graph edgeless;
  for (int i = 0; i < 4; ++i) edgeless.add_vertex(i);
  auto simplex = independence_complex(edgeless);
  CHECK(simplex.face_count() == 16);
  CHECK(simplex.dimension() == 3);

  auto hex = independence_complex(cycle_graph(6));
  REQUIRE(hex.faces.size() == 4);
  CHECK(hex.faces[1].size() == 6);
  CHECK(hex.faces[2].size() == 9);
  CHECK(hex.faces[3].size() == 2);
  CHECK(hex.reduced_euler_characteristic() == -2);
}

TEST_CASE("face budget") {
  Graph edgeless;
  for (int i = 0; i < 12; ++i) edgeless.add_vertex(i);
  CHECK_THROWS_AS(independence_complex(edgeless, 1000), BudgetExceeded);
  Graph big;
  for (int i = 0; i < 65; ++i) big.add_vertex(i);
  CHECK_THROWS_AS(independence_complex(big), BudgetExceeded);
}

TEST_CASE("Smith normal form on hand-checkable boundaries") {
  // hollow triangle: boundary of the three edges
  CHECK(smith_invariants({{-1, -1, 0}, {1, 0, -1}, {0, 1, 1}}) == std::vector<std::string>{"1", "1"});
  CHECK(smith_invariants({{2, 0}, {0, 3}}) == std::vector<std::string>{"1", "6"});
  CHECK(smith_invariants({{2, 4}, {4, 8}}) == std::vector<std::string>{"2"});
  CHECK(smith_invariants({{0, 0}}).empty());
}

TEST_CASE("reduced homology of small complexes") {
  Graph edgeless;
  for (int i = 0; i < 3; ++i) edgeless.add_vertex(i);
  CHECK(oracle_profile(edgeless).is_zero());
  CHECK(oracle_profile(cycle_graph(6)) == profile({{1, 2}}));
  CHECK(oracle_profile(Graph{}) == profile({{-1, 1}}));
  // I(K_3) is three points; I(K_4 minus a perfect matching) is a hollow square
  CHECK(oracle_profile(complete_graph(3)) == profile({{0, 2}}));
  CHECK(oracle_profile(cycle_graph(4)) == profile({{0, 1}}));
}

TEST_CASE("expected profiles of wedges") {
  CHECK(expected_profile(W({2, 2, 2})) == profile({{2, 3}}));
  CHECK(expected_profile(contractible()).is_zero());
  CHECK(expected_profile(HomotopyType::empty()) == profile({{-1, 1}}));
  CHECK(shift(profile({{0, 1}}), 2) == profile({{2, 1}}));
  CHECK(add(profile({{0, 1}}), profile({{0, 2}, {1, 1}})) == profile({{0, 3}, {1, 1}}));
}

TEST_CASE("Euler characteristic matches homology ranks") {
  std::mt19937_64 rng(2);
  for (int i = 0; i < 200; ++i) {
    Graph g = random_graph(rng, 4 + static_cast<int>(rng() % 9), 0.3);
    auto k = independence_complex(g);
    auto p = reduced_homology(k);
    CHECK(k.reduced_euler_characteristic() == alternating_rank_sum(p));
  }
}

TEST_CASE("disjoint unions join the complexes") {
  auto a = cycle_graph(5);
  auto b = cycle_graph(6, 10);
  auto expected = expected_profile(join(eval_cycle(5), eval_cycle(6)));
  CHECK(oracle_profile(disjoint_union(a, b)) == expected);
  CHECK(oracle_profile(disjoint_union(path_graph(1), path_graph(4, 10))) == expected_profile(S(2)));
}

TEST_CASE("profile JSON and text") {
  auto p = profile({{1, 2}});
  CHECK(p.to_string() == "H1=Z^2");
  CHECK(p.to_json().find("\"1\"") != std::string::npos);
  CHECK_FALSE(p.has_torsion());
}
