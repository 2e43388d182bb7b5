#include <random>

#include "doctest.h"
#include "khoform/harness.hpp"
#include "khoform/pipeline.hpp"
#include "khoform/resolution.hpp"
#include "util.hpp"

using namespace khoform;
using namespace khoform::test;

TEST_CASE("family examples") {
  auto c1 = classify(w4({1, 2, 1, 2, 1, 2}));
  CHECK(c1.tag == ClassTag::C1);
  CHECK(c1.exponents == std::vector<int>{3});

  auto c3 = classify(w4({3, 1, 2, 1, 2, 3, 2}));
  CHECK(c3.tag == ClassTag::C3);
  CHECK(c3.exponents == std::vector<int>{2, 1});

  CHECK(classify(w4({1, 3, 2, 1, 3, 2})).tag == ClassTag::C5);
  CHECK(classify(w4({})).tag == ClassTag::C0);
  CHECK(classify(w4({2, -1})).tag == ClassTag::C0);
  CHECK(classify(w4({1, 2, 3, 2})).tag == ClassTag::C2);
}

TEST_CASE("C4 with a long first block is carried to C3") {
  // sigma_3 (sigma_1 sigma_2)^2 (sigma_3 sigma_2) (sigma_1 sigma_2): three blocks
  auto c = classify(w4({3, 1, 2, 1, 2, 3, 2, 1, 2}));
  CHECK(c.tag == ClassTag::C3);
  CHECK(c.exponents.front() == 1);
  auto short_first = classify(w4({3, 1, 2, 3, 2, 1, 2}));
  CHECK(short_first.tag == ClassTag::C4);
  CHECK(short_first.exponents == std::vector<int>{1, 1, 1});
}

TEST_CASE("normalisation replays to the classified word and keeps the graph") {
  std::mt19937_64 rng(21);
  int seen[6] = {};
  for (int i = 0; i < 4000; ++i) {
    auto r = strong_reduce(random_word_up_to(rng, 18));
    if (r.contractible) continue;
    BraidClass c;
    REQUIRE_NOTHROW(c = classify(r.word));
    ++seen[static_cast<int>(c.tag)];
    BraidWord w = r.word;
    for (const auto& t : c.normalization) w = transform(w, t);
    CHECK(w == c.word);
    CHECK(lando_graph(w) == lando_graph(r.word));
    if (c.tag == ClassTag::C4) CHECK(c.exponents.front() == 1);
  }
  for (int t = 0; t < 6; ++t) CHECK(seen[t] > 0);
}

TEST_CASE("transforms preserve the Lando graph with ids") {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 500; ++i) {
    auto w = random_word_up_to(rng, 14);
    const auto g = lando_graph(w);
    CHECK(lando_graph(transform(w, Transform::reverse())) == g);
    CHECK(lando_graph(transform(w, Transform::involution())) == g);
    if (!w.empty()) CHECK(lando_graph(transform(w, Transform::rotate(rng() % w.size()))) == g);
  }
}
