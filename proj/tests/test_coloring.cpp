#include <doctest.h>

#include <random>
#include <vector>

#include "colorideals/coloring.hpp"
#include "colorideals/errors.hpp"
#include "helpers.hpp"

using namespace colorideals;
using testutil::random_coloring;

TEST_CASE("edges are stored in colex order") {
  CHECK(Coloring::edge_index(1, 2) == 0);
  CHECK(Coloring::edge_index(1, 3) == 1);
  CHECK(Coloring::edge_index(2, 3) == 2);
  CHECK(Coloring::edge_index(4, 1) == 3);
  Coloring k(3, 2);
  k.set(1, 3, 2);
  CHECK(k.at(3, 1) == 2);
  CHECK(k.edge_count() == 3);
  CHECK_THROWS(k.set(1, 2, 3));
  auto e = k.extended(std::vector<Color>{2, 1, 2});
  CHECK(e.n() == 4);
  CHECK(e.at(1, 4) == 2);
  CHECK(e.at(2, 4) == 1);
  CHECK(e.at(1, 3) == 2);
}

TEST_CASE("contains: spec examples") {
  auto d2 = ColorPoset::discrete(2);
  Coloring edge2(2, 2, 2);
  Coloring host(3, 2);
  host.set(1, 3, 2);
  auto f = contains(d2, edge2, host);
  REQUIRE(f);
  CHECK(*f == Embedding{1, 3});

  CHECK_FALSE(contains(d2, edge2, Coloring(5, 2)));

  auto l2 = ColorPoset::linear(2);
  Coloring edge1(2, 2, 1);
  CHECK(contains(l2, edge1, edge2));
  CHECK_FALSE(contains(d2, edge1, edge2));
}

TEST_CASE("empty pattern embeds with the empty map") {
  auto d2 = ColorPoset::discrete(2);
  auto f = contains(d2, Coloring(0, 2), Coloring(4, 2));
  REQUIRE(f);
  CHECK(f->empty());
  CHECK(contains(d2, Coloring(0, 2), Coloring(0, 2)));
  CHECK_THROWS_AS(contains(d2, Coloring(1, 3), Coloring(2, 2)), std::invalid_argument);
}

TEST_CASE("fast matcher agrees with the reference and the definition") {
  std::mt19937 rng(20240611);
  const std::vector<ColorPoset> posets = {ColorPoset::discrete(2), ColorPoset::linear(2),
                                          ColorPoset::discrete(3),
                                          ColorPoset(3, {{1, 2}, {1, 3}})};
  for (const auto& p : posets) {
    for (int trial = 0; trial < 400; ++trial) {
      int m = std::uniform_int_distribution<int>(0, 4)(rng);
      int n = std::uniform_int_distribution<int>(m, 8)(rng);
      auto a = random_coloring(rng, m, p.size());
      auto b = random_coloring(rng, n, p.size());
      bool truth = testutil::contains_by_subsets(p, a, b);
      auto fast = contains(p, a, b);
      CHECK(fast.has_value() == truth);
      CHECK(contains_reference(p, a, b).has_value() == truth);
      if (fast) {
        for (int j = 2; j <= m; ++j)
          for (int i = 1; i < j; ++i) CHECK(p.leq(a.at(i, j), b.at((*fast)[i - 1], (*fast)[j - 1])));
      }
      auto anchored = contains_anchored_last(p, a, b);
      if (anchored) {
        CHECK(anchored->back() == n);
        CHECK(fast);
      }
    }
  }
}

TEST_CASE("anchored containment is exactly containment through the last vertex") {
  std::mt19937 rng(7);
  auto d2 = ColorPoset::discrete(2);
  for (int trial = 0; trial < 300; ++trial) {
    auto a = random_coloring(rng, 3, 2);
    auto b = random_coloring(rng, 6, 2);
    bool through_last = false;
    for (int x = 1; x <= 5 && !through_last; ++x)
      for (int y = x + 1; y <= 5 && !through_last; ++y) {
        std::vector<int> vs{x, y, 6};
        through_last = restrict(b, vs) == a;
      }
    CHECK(contains_anchored_last(d2, a, b).has_value() == through_last);
  }
}

TEST_CASE("matcher handles hosts beyond 64 vertices") {
  auto d2 = ColorPoset::discrete(2);
  Coloring host(70, 2);
  host.set(3, 69, 2);
  auto f = contains(d2, Coloring(2, 2, 2), host);
  REQUIRE(f);
  CHECK(*f == Embedding{3, 69});
}

TEST_CASE("restrict") {
  Coloring k(3, 3);
  k.set(1, 3, 3);
  k.set(2, 3, 2);
  std::vector<int> b{1, 3};
  auto r = restrict(k, b);
  CHECK(r.n() == 2);
  CHECK(r.at(1, 2) == 3);
  std::vector<int> all{1, 2, 3};
  CHECK(restrict(k, all) == k);
  CHECK(restrict(k, std::vector<int>{}) == Coloring(0, 3));
  std::vector<int> bad{3, 1};
  CHECK_THROWS(restrict(k, bad));
  CHECK(delete_vertex(k, 2) == r);
  auto d3 = ColorPoset::discrete(3);
  CHECK(contains(d3, r, k));
}

TEST_CASE("reversal") {
  CHECK(reversal(Coloring(5, 2, 2)) == Coloring(5, 2, 2));
  Coloring k(3, 2);
  k.set(1, 2, 2);
  Coloring expected(3, 2);
  expected.set(2, 3, 2);
  CHECK(reversal(k) == expected);
  std::mt19937 rng(3);
  for (int t = 0; t < 50; ++t) {
    auto x = random_coloring(rng, 6, 3);
    CHECK(reversal(reversal(x)) == x);
  }
}

TEST_CASE("recolor") {
  std::mt19937 rng(11);
  auto x = random_coloring(rng, 5, 2);
  CHECK(recolor(x, 1) == x);
  CHECK(recolor(Coloring(4, 3, 3), 3) == Coloring(4, 2, 1));
  Coloring k(3, 3);
  k.set(1, 2, 2);
  k.set(1, 3, 3);
  auto r = recolor(k, 2);
  CHECK(r.at(1, 2) == 1);
  CHECK(r.at(1, 3) == 2);
  CHECK(r.at(2, 3) == 2);
}

TEST_CASE("recolor tuples determine colorings and preserve containment") {
  std::mt19937 rng(5);
  auto d3 = ColorPoset::discrete(3);
  auto d2 = ColorPoset::discrete(2);
  for (int t = 0; t < 200; ++t) {
    auto a = random_coloring(rng, 3, 3);
    auto b = random_coloring(rng, 6, 3);
    if (contains(d3, a, b)) {
      for (Color c = 1; c <= 3; ++c) CHECK(contains(d2, recolor(a, c), recolor(b, c)));
    }
    auto a2 = random_coloring(rng, 3, 3);
    bool same = true;
    for (Color c = 1; c <= 3; ++c) same = same && recolor(a, c) == recolor(a2, c);
    CHECK(same == (a == a2));
  }
}

TEST_CASE("is_homogeneous") {
  Coloring mono(4, 2);
  std::vector<int> all{1, 2, 3, 4};
  auto h = is_homogeneous(mono, all);
  CHECK(h.homogeneous);
  CHECK(h.color == Color{1});
  Coloring k(4, 2);
  k.set(2, 3, 2);
  CHECK_FALSE(is_homogeneous(k, all).homogeneous);
  std::vector<int> pair{2, 3};
  CHECK(is_homogeneous(k, pair).color == Color{2});
  std::vector<int> single{2};
  CHECK(is_homogeneous(k, single).homogeneous);
  CHECK_FALSE(is_homogeneous(k, single).color);
}

TEST_CASE("coloring literals round-trip") {
  Coloring k(4, 3);
  k.set(1, 3, 2);
  k.set(2, 4, 3);
  auto text = format_coloring(k);
  CHECK(text == "4; default=1; 1,3=2; 2,4=3");
  CHECK(parse_coloring(text, 3) == k);
  CHECK(parse_coloring("2; 1,2=2", 2) == Coloring(2, 2, 2));
  CHECK(parse_coloring("0", 2) == Coloring(0, 2));
  CHECK(coloring_from_json(coloring_to_json(k), 3) == k);
  CHECK_THROWS_AS(parse_coloring("3; 1,2=4", 3), ParseError);
  CHECK_THROWS_AS(parse_coloring("3; 1,2=2; 2,1=1", 3), ParseError);
  CHECK_THROWS_AS(parse_coloring("3; 1,1=2", 3), ParseError);
  CHECK_THROWS_AS(parse_coloring("x", 3), ParseError);
  std::mt19937 rng(99);
  for (int t = 0; t < 100; ++t) {
    auto x = random_coloring(rng, 6, 4);
    CHECK(parse_coloring(format_coloring(x), 4) == x);
    CHECK(coloring_from_json(coloring_to_json(x), 4) == x);
  }
}
