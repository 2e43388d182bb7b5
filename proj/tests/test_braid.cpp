#include "doctest.h"
#include "khoform/braid.hpp"
#include "util.hpp"

using namespace khoform;
using namespace khoform::test;

TEST_CASE("parse maps signed tokens to letters") {
  auto w = parse("1 2 -1", 4);
  REQUIRE(w.size() == 3);
  CHECK(w.generators() == std::vector<int>{1, 2, -1});
  CHECK(w[2].gen == 1);
  CHECK_FALSE(w[2].positive());
  CHECK(w[0].id == 0);
  CHECK(w[2].id == 2);
}

TEST_CASE("parse accepts commas and the empty word") {
  CHECK(parse("", 4).empty());
  CHECK(parse("  ", 4).empty());
  CHECK(parse("1,-3, 2", 4).generators() == std::vector<int>{1, -3, 2});
}

TEST_CASE("parse rejects bad tokens") {
  CHECK_THROWS_AS(parse("-4", 4), ParseError);
  CHECK_THROWS_AS(parse("0", 4), ParseError);
  CHECK_THROWS_AS(parse("1 x", 4), ParseError);
  CHECK_THROWS_AS(parse("3", 3), ParseError);
}

TEST_CASE("transforms") {
  CHECK(transform(w4({3, 1, 2}), Transform::involution()).generators() == std::vector<int>{1, 3, 2});
  CHECK(transform(w4({1, 2, 3}), Transform::reverse()).generators() == std::vector<int>{3, 2, 1});
  CHECK(transform(w4({1, 2, 3}), Transform::rotate(1)).generators() == std::vector<int>{2, 3, 1});
  CHECK(transform(w4({1, -2, 3}), Transform::mirror()).generators() == std::vector<int>{-1, 2, -3});
}

TEST_CASE("transforms keep letter ids and invert") {
  const auto w = w4({1, -2, 3, 2, -1, -3});
  CHECK(transform(transform(w, Transform::reverse()), Transform::reverse()) == w);
  CHECK(transform(transform(w, Transform::involution()), Transform::involution()) == w);
  CHECK(transform(transform(w, Transform::mirror()), Transform::mirror()) == w);
  for (std::size_t r = 0; r < w.size(); ++r)
    CHECK(transform(transform(w, Transform::rotate(r)), Transform::rotate((w.size() - r) % w.size())) == w);
  auto r = transform(w, Transform::rotate(2));
  CHECK(r[0].id == 2);
}

TEST_CASE("positive part") {
  CHECK(positive_part(w4({1, 2, -1, 3})).generators() == std::vector<int>{1, 2, 3});
  CHECK(positive_part(w4({-1, -2, -3})).empty());
  CHECK(positive_part(w4({1, 2, 3})) == w4({1, 2, 3}));
}

TEST_CASE("writhe") {
  CHECK(writhe(w4({1, 2, -1})) == 1);
  CHECK(writhe(w4({})) == 0);
  CHECK(writhe(w4({1, 2, 1, 2, 1, 2})) == 6);
}

TEST_CASE("without and insertion keep ids") {
  auto w = w4({1, 2, 3});
  auto v = w.without({1});
  CHECK(v.generators() == std::vector<int>{1, 3});
  CHECK(v.index_of(2) == 1);
  CHECK(v.index_of(1) == -1);
  CHECK(v.next_id() == 3);
  auto u = v.with_inserted(1, {{v.next_id(), 2, -1}});
  CHECK(u.generators() == std::vector<int>{1, -2, 3});
  CHECK(u[1].id == 3);
}
