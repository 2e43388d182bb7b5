#include <random>

#include "doctest.h"
#include "khoform/families.hpp"
#include "khoform/oracle.hpp"
#include "khoform/reduce.hpp"
#include "khoform/resolution.hpp"
#include "util.hpp"

using namespace khoform;
using namespace khoform::test;

namespace {

// closed forms in terms of the vertex count m
HomotopyType path_formula(int edges) {
  const int m = edges + 1;
  if (m % 3 == 1) return contractible();
  return S((m + 1) / 3 - 1);
}

HomotopyType cycle_formula(int m) {
  if (m % 3 == 0) return W({m / 3 - 1, m / 3 - 1});
  return S((m + 1) / 3 - 1);
}

}  // namespace

TEST_CASE("suspension") {
  CHECK(suspend(HomotopyType::empty()) == S(0));
  CHECK(suspend(W({0, 0}), 2) == W({2, 2}));
  CHECK(suspend(contractible()).is_contractible());
}

TEST_CASE("wedge") {
  CHECK(wedge(S(1), contractible()) == S(1));
  CHECK(wedge(S(2), W({0, 0})) == W({2, 0, 0}));
  CHECK_THROWS_AS(wedge(HomotopyType::empty(), S(1)), WedgeError);
}

TEST_CASE("join") {
  CHECK(join(HomotopyType::empty(), W({3, 1})) == W({3, 1}));
  CHECK(join(S(0), S(0)) == S(1));
  CHECK(join(S(0), W({1, 1})) == W({2, 2}));
  CHECK(join(contractible(), S(4)).is_contractible());
  CHECK(join(W({1, 0}), S(2)) == join(S(2), W({1, 0})));
}

TEST_CASE("homotopy JSON round trip") {
  CHECK(S(2).to_json() == R"({"dims":[2],"type":"wedge"})");
  for (const auto& h : {contractible(), S(-1), W({3, 1, 1})})
    CHECK(HomotopyType::from_json(h.to_json()) == h);
}

TEST_CASE("four-braid shapes") {
  CHECK(has_four_braid_shape(contractible()));
  CHECK(has_four_braid_shape(W({3, 1, 1, 1})));
  CHECK(has_four_braid_shape(W({2, 2})));
  CHECK_FALSE(has_four_braid_shape(W({3, 2, 1})));
  CHECK_FALSE(has_four_braid_shape(W({1, 1, 1, 1, 1})));
}

TEST_CASE("paths") {
  CHECK(eval_path(1) == S(0));
  CHECK(eval_path(3).is_contractible());
  CHECK(eval_path(4) == S(1));
  for (int n = 0; n <= 15; ++n) {
    INFO(n);
    CHECK(eval_path(n) == path_formula(n));
    if (n <= 12) CHECK(oracle_profile(path_graph(n)) == expected_profile(eval_path(n)));
  }
}

TEST_CASE("cycles") {
  CHECK(eval_cycle(3) == W({0, 0}));
  CHECK(eval_cycle(4) == S(0));
  CHECK(eval_cycle(6) == W({1, 1}));
  for (int n = 3; n <= 15; ++n) {
    INFO(n);
    CHECK(eval_cycle(n) == cycle_formula(n));
    if (n <= 12) CHECK(oracle_profile(cycle_graph(n)) == expected_profile(eval_cycle(n)));
  }
}

TEST_CASE("forests") {
  Graph one;
  one.add_vertex(0);
  CHECK(eval_forest(one).is_contractible());
  CHECK(eval_forest(path_graph(1)) == S(0));
  CHECK(eval_forest(disjoint_union(path_graph(1), path_graph(1, 5))) == S(1));
  CHECK_THROWS_AS(eval_forest(cycle_graph(5)), std::invalid_argument);
}

TEST_CASE("complete joins") {
  CHECK(eval_complete_join(3, eval_path(3)) == W({0, 0, 0}));
  CHECK(eval_complete_join(1, S(1)) == W({1, 0}));
  CHECK(eval_complete_join(2, contractible()) == W({0, 0}));
  Graph k3l3 = graph_join(complete_graph(3, 100), path_graph(3));
  CHECK(oracle_profile(k3l3) == expected_profile(eval_complete_join(3, eval_path(3))));
}

TEST_CASE("theta graphs") {
  CHECK(eval_theta(4, 2, 4) == W({2, 2}));
  CHECK(eval_theta(3, 3, 3) == W({2, 1}));
  CHECK(oracle_profile(theta_graph(4, 2, 4)) == expected_profile(W({2, 2})));
  CHECK(oracle_profile(theta_graph(3, 3, 3)) == expected_profile(W({2, 1})));
}

TEST_CASE("theta base table agrees with the oracle") {
  for (const auto& e : theta_base_table()) {
    INFO(e.n1 << "," << e.n2 << "," << e.n3);
    CHECK(oracle_profile(theta_graph(e.n1, e.n2, e.n3)) == expected_profile(eval_theta(e.n1, e.n2, e.n3)));
  }
}

TEST_CASE("larger thetas agree with the oracle") {
  for (int a = 1; a <= 6; ++a)
    for (int b = 0; b <= 5; ++b)
      for (int c = 1; c <= 6; ++c) {
        if (a + b + c > 15) continue;
        INFO(a << "," << b << "," << c);
        CHECK(oracle_profile(theta_graph(a, b, c)) == expected_profile(eval_theta(a, b, c)));
      }
}

TEST_CASE("generic reduction") {
  CHECK(try_reduce(cycle_graph(6)) == W({1, 1}));
  CHECK(try_reduce(path_graph(7)) == eval_forest(path_graph(7)));
  Graph tree = path_graph(3);
  tree.add_vertex(10);
  tree.add_vertex(11);
  tree.add_edge(1, 10);
  tree.add_edge(10, 11);
  CHECK(try_reduce(tree) == eval_forest(tree));
  CHECK(try_reduce(Graph{}) == HomotopyType::empty());
}

TEST_CASE("the chord graph of 1 -1 2 1 -1 2 1 is contractible") {
  auto g = lando_graph(w4({1, -1, 2, 1, -1, 2, 1}));
  CHECK(oracle_profile(g).is_zero());
  CHECK(try_reduce(g) == contractible());
}

TEST_CASE("mapping cone rule") {
  CHECK(cone_rule(contractible(), S(2)) == S(2));
  CHECK(cone_rule(S(1), contractible()) == S(2));
  CHECK(cone_rule(S(0), S(2)) == W({2, 1}));
}

TEST_CASE("branch budget") {
  std::mt19937_64 rng(4);
  int found = 0;
  for (int attempt = 0; attempt < 2000 && found < 5; ++attempt) {
    Graph g;
    for (int v = 0; v < 10; ++v) g.add_vertex(v);
    for (int a = 0; a < 10; ++a)
      for (int b = a + 1; b < 10; ++b)
        if (rng() % 3 == 0) g.add_edge(a, b);
    auto full = generic_reduce(g);
    if (full.branches == 0) continue;
    ++found;
    ReduceOptions tight;
    tight.branch_budget = full.branches - 1;
    CHECK_THROWS_AS(generic_reduce(g, tight), BranchBudgetExceeded);
    if (full.type) CHECK(oracle_profile(g) == expected_profile(*full.type));
  }
  CHECK(found == 5);
}
