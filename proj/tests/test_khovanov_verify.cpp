#include <random>

#include "doctest.h"
#include "json.hpp"
#include "khoform/harness.hpp"
#include "khoform/khovanov.hpp"
#include "khoform/resolution.hpp"
#include "khoform/verify.hpp"
#include "util.hpp"

using namespace khoform;
using namespace khoform::test;
using nlohmann::json;

namespace {

const std::vector<int> kTwisted{1, 2, 1, 2, -1, -2, 1, 2, -1, -2};

}  // namespace

TEST_CASE("extreme row of the twisted 3-braid") {
  auto w = wn(3, kTwisted);
  CHECK(j_min(w) == -12);
  CHECK(writhe(w) == 2);
  auto [framed, oriented] = khovanov_rows(solve(w).type, 10, j_min(w), writhe(w));
  CHECK(framed.j == -12);
  REQUIRE(framed.entries.size() == 1);
  CHECK(framed.entries[0] == KhovanovEntry{-4, 1});
  CHECK(oriented.j == 9);
  REQUIRE(oriented.entries.size() == 1);
  CHECK(oriented.entries[0] == KhovanovEntry{3, 1});
  CHECK(framed_from_oriented(oriented, 2).entries == framed.entries);
  CHECK(framed_from_oriented(oriented, 2).j == framed.j);
  CHECK(json::parse(framed.to_json()) ==
        json::parse(R"({"j":-12,"convention":"framed","entries":[{"i":-4,"rank":1}]})"));
  CHECK(json::parse(oriented.to_json())["convention"] == "oriented");
}

TEST_CASE("contractible gives an empty row") {
  auto [framed, oriented] = khovanov_rows(contractible(), 6, -10, 0);
  CHECK(framed.empty());
  CHECK(oriented.empty());
  CHECK(in_row_menu(framed));
}

TEST_CASE("row menu") {
  auto row = [](const HomotopyType& h) { return khovanov_rows(h, 10, -14, 0).first; };
  auto r = row(W({3, 2, 2, 2}));
  REQUIRE(r.entries.size() == 2);
  CHECK(r.entries[0] == KhovanovEntry{-4, 3});
  CHECK(r.entries[1] == KhovanovEntry{-2, 1});
  CHECK(in_row_menu(r));
  CHECK(in_row_menu(row(S(2))));
  CHECK(in_row_menu(row(W({2, 1}))));
  CHECK(in_row_menu(row(W({2, 2}))));
  CHECK(in_row_menu(row(W({4, 1, 1}))));
  CHECK_FALSE(in_row_menu(row(W({1, 1, 1, 1, 1}))));
  CHECK_FALSE(in_row_menu(row(W({3, 2, 1}))));

  KhovanovRow upside_down;
  upside_down.entries = {{-4, 1}, {-2, 2}};
  CHECK_FALSE(in_row_menu(upside_down));
}

TEST_CASE("rows of solved words stay in the menu") {
  std::mt19937_64 rng(29);
  for (int i = 0; i < 2000; ++i) {
    auto w = random_word_up_to(rng, 14, 4);
    auto [framed, oriented] =
        khovanov_rows(solve(w).type, static_cast<int>(w.size()), j_min(w), writhe(w));
    INFO(w.to_string());
    CHECK(in_row_menu(framed));
    CHECK(framed_from_oriented(oriented, writhe(w)).entries == framed.entries);
  }
}

TEST_CASE("adequacy") {
  CHECK(adequacy(w4({1, 2, 1, 2, 1, 2})).b_adequate);
  CHECK_FALSE(adequacy(w4({2, 2, 1})).b_adequate);
  CHECK(adequacy(w4({})).b_adequate);
  // the mirror is positive
  auto neg = adequacy(w4({-1, -2, -1, -2, -1, -2}));
  CHECK(neg.a_adequate);
}

TEST_CASE("compare against the oracle") {
  auto v = compare(wn(3, kTwisted));
  CHECK(v.status == VerdictStatus::Match);
  CHECK(v.oracle == expected_profile(S(2)));
  auto hex = compare(w4({1, 2, 1, 2, 1, 2}));
  CHECK(hex.status == VerdictStatus::Match);
  CHECK(hex.oracle == expected_profile(W({1, 1})));

  auto j = json::parse(hex.to_json());
  CHECK(j["verdict"] == "match");
  CHECK(j["word"] == "1 2 1 2 1 2");
  CHECK(j["n"] == 4);
  CHECK_FALSE(j.value("critical", false));
  CHECK_FALSE(j.contains("graph"));
}

TEST_CASE("a tiny face budget skips") {
  auto v = compare(w4({1, 2, 1, 2, 1, 2, 3, 2, 3}), 4);
  CHECK(v.status == VerdictStatus::Skipped);
  CHECK(json::parse(v.to_json())["verdict"] == "skipped");
}

TEST_CASE("replayed trace predicts the oracle") {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 300; ++i) {
    auto w = random_word_up_to(rng, 12, 4);
    auto s = solve(w);
    INFO(w.to_string());
    CHECK(replay_profile(w, s.trace) == oracle_profile(lando_graph(w)));
  }
}
