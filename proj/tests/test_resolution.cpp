#include <numeric>
#include <random>

#include "doctest.h"
#include "khoform/harness.hpp"
#include "khoform/oracle.hpp"
#include "khoform/resolution.hpp"
#include "util.hpp"

using namespace khoform;
using namespace khoform::test;

namespace {

// Circle count of the state smoothing the letters in `flip` the other way,
// by union-find over strand segments.
int state_circles(const std::vector<int>& word, int n, std::uint32_t flip) {
  const int c = static_cast<int>(word.size());
  if (c == 0) return n;
  std::vector<int> parent(static_cast<std::size_t>(c * n));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent.at(x) != x) x = parent.at(x) = parent.at(parent.at(x));
    return x;
  };
  auto unite = [&](int a, int b) { parent.at(find(a)) = find(b); };
  auto node = [&](int t, int p) { return (t % c) * n + p; };
  for (int t = 0; t < c; ++t) {
    const int g = std::abs(word[static_cast<std::size_t>(t)]), lo = g - 1, hi = g;
    for (int p = 0; p < n; ++p)
      if (p != lo && p != hi) unite(node(t, p), node(t + 1, p));
    const bool turnback = (word[static_cast<std::size_t>(t)] > 0) != bool(flip >> t & 1u);
    if (turnback) {
      unite(node(t, lo), node(t, hi));
      unite(node(t + 1, lo), node(t + 1, hi));
    } else {
      unite(node(t, lo), node(t + 1, lo));
      unite(node(t, hi), node(t + 1, hi));
    }
  }
  int roots = 0;
  for (int x = 0; x < c * n; ++x) roots += find(x) == x;
  return roots;
}

// Homology of the extreme complex straight from the states: generators are
// flip sets A with |s_A| = |s_B| + |A|.
std::map<int, long long> extreme_ranks(const std::vector<int>& word, int n) {
  const int c = static_cast<int>(word.size());
  const int base = state_circles(word, n, 0);
  std::vector<std::vector<std::uint32_t>> gens(static_cast<std::size_t>(c + 1));
  for (std::uint32_t a = 0; a < (1u << c); ++a) {
    const int k = std::popcount(a);
    if (state_circles(word, n, a) == base + k) gens[static_cast<std::size_t>(k)].push_back(a);
  }
  std::vector<long long> rank(static_cast<std::size_t>(c + 1), 0);
  for (int k = 0; k < c; ++k) {
    const auto& from = gens[static_cast<std::size_t>(k)];
    const auto& to = gens[static_cast<std::size_t>(k + 1)];
    if (from.empty() || to.empty()) continue;
    std::vector<std::vector<long long>> m(to.size(), std::vector<long long>(from.size(), 0));
    for (std::size_t j = 0; j < from.size(); ++j)
      for (int x = 0; x < c; ++x) {
        if (from[j] >> x & 1u) continue;
        const std::uint32_t t = from[j] | (1u << x);
        auto it = std::lower_bound(to.begin(), to.end(), t);
        if (it == to.end() || *it != t) continue;
        const int below = std::popcount(from[j] & ((1u << x) - 1));
        m[static_cast<std::size_t>(it - to.begin())][j] = below % 2 ? -1 : 1;
      }
    rank[static_cast<std::size_t>(k)] = static_cast<long long>(smith_invariants(m).size());
  }
  std::map<int, long long> out;
  for (int k = 0; k <= c; ++k) {
    const long long r = static_cast<long long>(gens[static_cast<std::size_t>(k)].size()) -
                        rank[static_cast<std::size_t>(k)] - (k ? rank[static_cast<std::size_t>(k - 1)] : 0);
    if (r) out[k - 1] = r;
  }
  return out;
}

std::map<int, long long> ranks_of(const HomologyProfile& p) {
  std::map<int, long long> out;
  for (const auto& [d, g] : p.groups)
    if (g.rank) out[d] = g.rank;
  return out;
}

}  // namespace

TEST_CASE("circle counts of small closures") {
  CHECK(circle_count(w4({})) == 4);
  CHECK(j_min(w4({})) == -8);
  auto d = resolve(w4({1}));
  CHECK(d.circle_count() == 3);
  REQUIRE(d.chords.size() == 1);
  CHECK(d.chords[0].admissible());
  CHECK(j_min(w4({1})) == -7);
  CHECK(j_min(w4({-1})) == -9);
}

TEST_CASE("Lando graphs of the small examples") {
  auto hexagon = lando_graph(wn(3, {1, 2, 1, 2, 1, 2}));
  CHECK(hexagon.vertex_count() == 6);
  CHECK(as_cycle(hexagon) == 6);
  auto pair = lando_graph(wn(3, {1, 2, 1, 1, 2, 1}));
  CHECK(pair.vertex_count() == 2);
  CHECK(pair.edge_count() == 0);
  CHECK(lando_graph(w4({})).empty());
}

TEST_CASE("circle count only depends on the positive part") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 300; ++i) {
    auto w = random_word_up_to(rng, 12);
    CHECK(circle_count(w) == circle_count(positive_part(w)));
  }
}

TEST_CASE("resolution agrees with a union-find state count") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 300; ++i) {
    auto w = random_word_up_to(rng, 14);
    CHECK(circle_count(w) == state_circles(w.generators(), 4, 0));
  }
}

TEST_CASE("oracle on the Lando graph matches the extreme Khovanov complex") {
  // every word of length <= 5 plus random words of length 8
  std::vector<BraidWord> words;
  for (std::size_t len = 0; len <= 5; ++len)
    for (std::uint64_t k = 0; k < word_count(len); ++k) words.push_back(nth_word(len, k));
  std::mt19937_64 rng(3);
  for (int i = 0; i < 200; ++i) words.push_back(random_word(rng, 8));
  for (const auto& w : words) {
    INFO(w.to_string());
    CHECK(ranks_of(oracle_profile(lando_graph(w))) == extreme_ranks(w.generators(), 4));
  }
}

TEST_CASE("chord diagram JSON lists every chord") {
  auto j = to_json(resolve(wn(3, {1, 2, -1})));
  CHECK(j.find("\"chords\"") != std::string::npos);
  CHECK(j.find("\"circles\"") != std::string::npos);
}
