#include <random>

#include "doctest.h"
#include "khoform/oracle.hpp"
#include "khoform/rhomboid.hpp"
#include "util.hpp"

using namespace khoform;
using namespace khoform::test;

namespace {

HomotopyType aug_formula(int n) {
  const int k = n / 3;
  if (n % 3 == 0) return W({2, 2, 2});
  return W({k + 2, 2, 2, 2});
}

VertexSet random_subset(std::mt19937_64& rng, const Graph& g, double keep) {
  std::bernoulli_distribution pick(keep);
  VertexSet out;
  for (VertexId v : g.vertices())
    if (pick(rng)) out.insert(v);
  return out;
}

}  // namespace

TEST_CASE("augmented rhomboids follow the closed form") {
  for (int n = 0; n <= 9; ++n) {
    INFO(n);
    auto lg = augmented_rhomboid(n);
    CHECK(eval_augmented_subgraph(lg.graph, lg.structure) == aug_formula(n));
    if (n <= 6) CHECK(oracle_profile(lg.graph) == expected_profile(aug_formula(n)));
  }
}

TEST_CASE("deleting c1 and d3 keeps the augmented type") {
  for (int n = 0; n <= 6; ++n) {
    INFO(n);
    auto lg = augmented_rhomboid(n);
    Graph g = lg.graph.without({*lg.structure.find(Role::C, 1), *lg.structure.find(Role::D, 3)});
    CHECK(eval_augmented_subgraph(g, lg.structure) == aug_formula(n));
    CHECK(oracle_profile(g) == oracle_profile(lg.graph));
  }
}

TEST_CASE("the subdivided rhomboid G(2,4,2,1,3,1,1,0) is contractible") {
  auto lg = rhomboid_graph({2, 4, 2, 1, 3, 1, 1, 0});
  CHECK(oracle_profile(lg.graph).is_zero());
  CHECK(eval_rhomboid_subgraph(lg.graph, lg.structure).is_contractible());
}

TEST_CASE("simple rhomboids against the oracle") {
  for (int n = 1; n <= 9; ++n)
    for (bool con : {false, true}) {
      INFO(n << (con ? " connected" : ""));
      auto lg = simple_rhomboid(n, con);
      CHECK(oracle_profile(lg.graph) == expected_profile(eval_rhomboid_subgraph(lg.graph, lg.structure)));
    }
}

TEST_CASE("modified augmented rhomboids against the oracle") {
  for (int n = 0; n <= 6; ++n)
    for (unsigned mods = 0; mods < 16; ++mods) {
      if ((mods & kContractLeft) && (mods & kDeleteLeftEdge)) continue;
      if ((mods & kContractRight) && (mods & kDeleteRightEdge)) continue;
      INFO(n << " mods " << mods);
      LabeledGraph lg;
      try {
        lg = augmented_rhomboid(n, mods);
      } catch (const LabelError&) {
        continue;
      }
      CHECK(oracle_profile(lg.graph) == expected_profile(eval_augmented_subgraph(lg.graph, lg.structure)));
    }
}

TEST_CASE("induced subgraphs of rhomboids against the oracle") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 150; ++i) {
    std::vector<int> counts;
    const int slots = 4 + static_cast<int>(rng() % 3);
    for (int s = 0; s < slots; ++s) counts.push_back(static_cast<int>(rng() % 4));
    auto lg = rhomboid_graph(counts);
    auto sub = induced(lg, random_subset(rng, lg.graph, 0.85));
    INFO(i);
    CHECK(oracle_profile(sub.graph) == expected_profile(eval_rhomboid_subgraph(sub.graph, sub.structure)));
  }
}

TEST_CASE("induced subgraphs of augmented rhomboids against the oracle") {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 150; ++i) {
    std::vector<int> counts;
    const int slots = 2 + 2 * static_cast<int>(rng() % 2);
    for (int s = 0; s < slots; ++s) counts.push_back(1 + static_cast<int>(rng() % 3));
    auto lg = subdivided_augmented_rhomboid(counts);
    if (lg.graph.vertex_count() > 26) continue;
    auto sub = induced(lg, random_subset(rng, lg.graph, 0.85));
    INFO(i);
    CHECK(oracle_profile(sub.graph) == expected_profile(eval_augmented_subgraph(sub.graph, sub.structure)));
  }
}

TEST_CASE("labels are validated") {
  auto lg = augmented_rhomboid(3);
  CHECK_NOTHROW(validate_labels(lg.graph, lg.structure));
  auto bad = lg.structure;
  bad.roles.erase(bad.roles.begin());
  CHECK_THROWS_AS(validate_labels(lg.graph, bad), LabelError);
}
