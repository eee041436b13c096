#include <doctest.h>

#include <cmath>
#include <random>
#include <set>

#include "colorideals/certificates.hpp"
#include "colorideals/ideal.hpp"
#include "helpers.hpp"

using namespace colorideals;

namespace {

ZeroOneMatrix random_matrix(std::mt19937& rng, int r, int s) {
  ZeroOneMatrix m(r, s);
  for (int i = 1; i <= r; ++i)
    for (int j = 1; j <= s; ++j) m.set(i, j, static_cast<std::uint8_t>(rng() & 1));
  return m;
}

/// Two-colored K of size 2r with M_K = m and both halves white.
Coloring with_block(const ZeroOneMatrix& m) {
  const int r = m.rows();
  Coloring k(2 * r, 2);
  for (int i = 1; i <= r; ++i)
    for (int j = 1; j <= r; ++j) k.set(i, r + j, static_cast<Color>(1 + m.at(i, j)));
  return k;
}

/// Type-1 r-rich coloring with random free edges.
Coloring random_rich(std::mt19937& rng, int r, int colors) {
  auto k = testutil::random_coloring(rng, 2 * r - 1, colors);
  Color a = static_cast<Color>(1 + rng() % colors);
  Color b = static_cast<Color>(1 + (a + rng() % (colors - 1)) % colors);
  for (int i = 1; i <= r - 1; ++i) k.set(i, i + 1, a);
  k.set(r, r + 1, b);
  return k;
}

}  // namespace

TEST_CASE("is_r_rich: spec examples") {
  Coloring k(5, 2);
  k.set(1, 2, 1);
  k.set(2, 3, 1);
  k.set(3, 4, 2);
  k.set(1, 5, 2);
  auto c = is_r_rich(k, 3);
  REQUIRE(c);
  CHECK(c->type == 1);
  CHECK_FALSE(c->reversed);
  CHECK(c->a == 1);
  CHECK(c->b == 2);
  CHECK_FALSE(is_r_rich(Coloring(5, 2, 1), 3));
  CHECK_FALSE(is_r_rich(Coloring(1, 2), 1));
  CHECK_THROWS_AS(is_r_rich(Coloring(4, 2), 3), std::invalid_argument);
}

TEST_CASE("is_r_rich: type 2 and reversal") {
  Coloring star(5, 3, 3);
  star.set(1, 2, 1);
  star.set(1, 3, 1);
  star.set(1, 4, 2);
  // path edges {1,2}=1, {2,3}=3 break type 1 right away
  auto c = is_r_rich(star, 3);
  REQUIRE(c);
  CHECK(c->type == 2);
  CHECK_FALSE(c->reversed);
  auto rc = is_r_rich(reversal(star), 3);
  REQUIRE(rc);
  CHECK(rc->type == 2);
  CHECK(rc->reversed);
  CHECK(rc->witness == reversal(star));
}

TEST_CASE("rich certificates against a direct reading of the definition") {
  for (int r = 2; r <= 3; ++r) {
    for (const auto& k : testutil::all_colorings(2 * r - 1, 2)) {
      bool expected = false;
      for (const auto& x : {k, reversal(k)}) {
        bool t1 = true;
        for (int i = 1; i <= r - 1; ++i) t1 = t1 && x.at(i, i + 1) == x.at(1, 2);
        t1 = t1 && x.at(r, r + 1) != x.at(1, 2);
        bool t2 = true;
        for (int i = 2; i <= r; ++i) t2 = t2 && x.at(1, i) == x.at(1, 2);
        t2 = t2 && x.at(1, r + 1) != x.at(1, 2);
        expected = expected || t1 || t2;
      }
      CHECK(is_r_rich(k, r).has_value() == expected);
    }
  }
}

TEST_CASE("every r-rich coloring contains an s-rich coloring") {
  std::mt19937 rng(8);
  for (int trial = 0; trial < 40; ++trial) {
    const int r = 3 + trial % 2;
    const int colors = 2 + trial % 2;
    auto k = random_rich(rng, r, colors);
    if (trial % 3 == 0) k = reversal(k);
    REQUIRE(is_r_rich(k, r));
    for (int s = 2; s < r; ++s) {
      bool found = false;
      for (const auto& sub : testutil::all_colorings(2 * s - 1, colors)) {
        if (is_r_rich(sub, s) && contains(ColorPoset::discrete(colors), sub, k)) {
          found = true;
          break;
        }
      }
      CHECK(found);
    }
  }
}

TEST_CASE("restrictions of a type-1 rich witness to windows are distinct") {
  std::mt19937 rng(21);
  for (int trial = 0; trial < 30; ++trial) {
    const int r = 2 + trial % 4;
    auto k = random_rich(rng, r, 2);
    std::set<Coloring> windows;
    for (int i = 1; i <= r; ++i) {
      std::vector<int> vs;
      for (int v = i; v <= i + r - 1; ++v) vs.push_back(v);
      windows.insert(restrict(k, vs));
    }
    CHECK(windows.size() == static_cast<std::size_t>(r));
  }
}

TEST_CASE("ideal_contains_rich") {
  IdealSpec one(ColorPoset::discrete(2), builtin_predicate("at-most-one:2", 2));
  auto rec = count_sequence(one, 9, {}, true);
  for (int r = 2; r <= 5; ++r) {
    auto c = ideal_contains_rich(*rec.levels, r);
    REQUIRE(c);
    CHECK(c->r == r);
    CHECK(is_r_rich(c->witness, r));
  }
  auto vac = ideal_contains_rich(*rec.levels, 1);
  REQUIRE(vac);
  CHECK(vac->type == 0);
  CHECK_THROWS_AS(ideal_contains_rich(*rec.levels, 6), std::out_of_range);

  IdealSpec mono(ColorPoset::discrete(2), builtin_predicate("mono", 2));
  auto mrec = count_sequence(mono, 7, {}, true);
  for (int r = 2; r <= 4; ++r) CHECK_FALSE(ideal_contains_rich(*mrec.levels, r));

  auto perm = find_adapter("permutation");
  auto cat = count_sequence(IdealSpec::from_adapter(perm, {perm->parse("123")}), 3, {}, true);
  CHECK(ideal_contains_rich(*cat.levels, 2));
}

TEST_CASE("is_r_simple") {
  std::mt19937 rng(4);
  for (int r = 1; r <= 3; ++r)
    for (int n = 0; n <= 2 * r + 2; ++n) CHECK(is_r_simple(testutil::random_coloring(rng, n, 3), r));
  for (int r = 1; r <= 3; ++r) CHECK(is_r_simple(Coloring(12, 2, 2), r));
  for (int r = 1; r <= 2; ++r) {
    Coloring k(4 * r + 4, 2);
    k.set(2 * r + 1, 2 * r + 2, 2);
    CHECK_FALSE(is_r_simple(k, r));
  }
  Coloring k(9, 2);
  k.set(1, 4, 2);  // vertex 1 sees two colors in [3, 7]
  CHECK_FALSE(is_r_simple(k, 1));
  CHECK(is_r_simple(k, 2));
  CHECK(simplicity_level(k) == 2);
}

TEST_CASE("distinct simple colorings stay distinct after deleting vertex 2r+1") {
  const int r = 1;
  const int n = 4 * r + 2;
  std::set<Coloring> images;
  std::size_t simple = 0;
  for (const auto& k : testutil::all_colorings(n, 2)) {
    if (!is_r_simple(k, r)) continue;
    ++simple;
    images.insert(delete_vertex(k, 2 * r + 1));
  }
  CHECK(simple > 0);
  CHECK(images.size() == simple);
}

TEST_CASE("interval_decomposition") {
  auto mono = interval_decomposition(Coloring(5, 2));
  REQUIRE(mono.size() == 1);
  CHECK(mono[0] == Interval{1, 5});

  Coloring k(4, 2);
  k.set(3, 4, 2);
  auto d = interval_decomposition(k);
  REQUIRE(d.size() == 2);
  CHECK(d[0] == Interval{1, 3});
  CHECK(d[1] == Interval{4, 4});

  Coloring alt(5, 2);
  alt.set(2, 3, 2);
  alt.set(4, 5, 2);
  auto a = interval_decomposition(alt);
  REQUIRE(a.size() == 3);
  CHECK(a[0] == Interval{1, 2});
  CHECK(a[1] == Interval{3, 4});
  CHECK(a[2] == Interval{5, 5});
  CHECK(interval_decomposition(Coloring(0, 2)).empty());
}

TEST_CASE("greedy decomposition has the fewest monochromatic intervals") {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& k : testutil::all_colorings(n, 2)) {
      // fewest parts by dynamic programming over prefixes
      std::vector<int> best(static_cast<std::size_t>(n) + 1, 1 << 20);
      best[0] = 0;
      for (int end = 1; end <= n; ++end)
        for (int start = 1; start <= end; ++start) {
          std::vector<int> vs;
          for (int v = start; v <= end; ++v) vs.push_back(v);
          if (is_homogeneous(k, vs).homogeneous)
            best[end] = std::min(best[end], best[start - 1] + 1);
        }
      auto dec = interval_decomposition(k);
      CHECK(static_cast<int>(dec.size()) == best[n]);
      for (std::size_t i = 0; i + 1 < dec.size(); ++i) CHECK(dec[i].size() >= 2);
    }
  }
}

TEST_CASE("matrix_of") {
  auto block = ZeroOneMatrix::from_rows({"010", "001", "100"});
  auto k = with_block(block);
  CHECK(matrix_of_coloring(k) == block);
  CHECK(matrix_of_intervals(k, 1, 3, 4, 6) == block);
  CHECK(matrix_of_intervals(Coloring(6, 2), 1, 2, 3, 6) == ZeroOneMatrix(2, 4, 0));
  Coloring one(6, 2);
  one.set(1, 4, 2);
  auto m = matrix_of_coloring(one);
  CHECK(m.at(1, 1) == 1);
  CHECK(al(m) == 2);
  CHECK_THROWS_AS(matrix_of_intervals(k, 1, 3, 3, 5), std::invalid_argument);
  CHECK_THROWS_AS(matrix_of(Coloring(4, 3), {1}, {2}), std::invalid_argument);
}

TEST_CASE("al and change rows") {
  CHECK(al(ZeroOneMatrix(3, 4, 1)) == 1);
  CHECK(al(ZeroOneMatrix::identity(3)) == 3);
  for (int r = 2; r <= 6; ++r) CHECK(al(ZeroOneMatrix::upper(r)) == 2);

  auto c0 = change_rows(ZeroOneMatrix(3, 3, 0));
  CHECK(c0.all.empty());
  for (const auto& col : c0.per_column) CHECK(col.empty());
  auto ci = change_rows(ZeroOneMatrix::identity(3));
  CHECK(ci.per_column[1] == std::vector<int>{1, 2});
  for (int r = 2; r <= 6; ++r) {
    auto cu = change_rows(ZeroOneMatrix::upper(r));
    for (int j = 1; j < r; ++j) CHECK(cu.per_column[j - 1] == std::vector<int>{j});
    CHECK(cu.per_column[r - 1].empty());
    std::vector<int> expect;
    for (int a = 1; a < r; ++a) expect.push_back(a);
    CHECK(cu.all == expect);
  }
}

TEST_CASE("alternation bound") {
  auto c = alternation_bound_check(ZeroOneMatrix(3, 3, 0), 1, 0);
  CHECK(c.holds);
  CHECK_FALSE(c.vacuous);
  CHECK(c.a == 0);
  CHECK(c.bound == 0);

  // all 4x4 matrices with al <= 2 and |C| <= 1 satisfy a <= 3
  int checked = 0;
  for (unsigned bits = 0; bits < (1u << 16); ++bits) {
    ZeroOneMatrix m(4, 4);
    for (int t = 0; t < 16; ++t) m.set(t / 4 + 1, t % 4 + 1, static_cast<std::uint8_t>(bits >> t & 1));
    auto r = alternation_bound_check(m, 2, 1);
    if (r.vacuous) continue;
    ++checked;
    CHECK(r.bound == 3);
    CHECK(r.a <= 3);
  }
  CHECK(checked > 0);

  std::mt19937 rng(600);
  for (int t = 0; t < 500; ++t) {
    auto m = random_matrix(rng, 6, 6);
    auto r = alternation_bound_check(m, al(m), static_cast<int>(change_rows(m).all.size()));
    CHECK_FALSE(r.vacuous);
    CHECK(r.holds);
  }
  CHECK(alternation_bound_check(ZeroOneMatrix::identity(4), 2, 5).vacuous);
}

TEST_CASE("submatrix_contains") {
  auto i2 = ZeroOneMatrix::identity(2);
  auto i3 = ZeroOneMatrix::identity(3);
  auto f = submatrix_contains(i2, i3);
  REQUIRE(f);
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 2; ++j) CHECK(i3.at(f->rows[i - 1], f->cols[j - 1]) == i2.at(i, j));
  CHECK_FALSE(submatrix_contains(ZeroOneMatrix(2, 2, 1), i3));
  auto self = submatrix_contains(i3, i3);
  REQUIRE(self);
  CHECK(self->rows == std::vector<int>{1, 2, 3});
  CHECK(self->cols == std::vector<int>{1, 2, 3});
}

TEST_CASE("submatrix search agrees with brute force") {
  std::mt19937 rng(31);
  for (int t = 0; t < 300; ++t) {
    auto small = random_matrix(rng, 2, 2);
    auto big = random_matrix(rng, 4, 4);
    bool brute = false;
    for (int a = 1; a <= 4; ++a)
      for (int b = a + 1; b <= 4; ++b)
        for (int c = 1; c <= 4; ++c)
          for (int d = c + 1; d <= 4; ++d)
            brute = brute || (big.at(a, c) == small.at(1, 1) && big.at(a, d) == small.at(1, 2) &&
                              big.at(b, c) == small.at(2, 1) && big.at(b, d) == small.at(2, 2));
    CHECK(submatrix_contains(small, big).has_value() == brute);
  }
}

TEST_CASE("matrix_similar") {
  auto i3 = ZeroOneMatrix::identity(3);
  CHECK(matrix_similar(i3, i3) == Similarity::kIdentity);
  auto i2 = ZeroOneMatrix::identity(2);
  CHECK(matrix_similar(i2, i2.complemented()) == Similarity::kSwap);
  CHECK_FALSE(matrix_similar(i3, ZeroOneMatrix::upper(3)));
  auto u3 = ZeroOneMatrix::upper(3);
  CHECK(matrix_similar(u3, u3.mirrored()) == Similarity::kMirror);
  CHECK(matrix_similar(u3, u3.mirrored().complemented()) == Similarity::kMirrorSwap);
  CHECK_FALSE(matrix_similar(i2, ZeroOneMatrix::identity(3)));
}

TEST_CASE("is_r_wealthy") {
  for (int r = 1; r <= 5; ++r) {
    auto w3 = is_r_wealthy(with_block(ZeroOneMatrix::identity(r)), r, 3);
    REQUIRE(w3);
    CHECK(w3->transform == Similarity::kIdentity);
    auto w4 = is_r_wealthy(with_block(ZeroOneMatrix::upper(r).mirrored()), r, 4);
    REQUIRE(w4);
    if (r > 1) CHECK(w4->transform == Similarity::kMirror);
  }
  CHECK_FALSE(is_r_wealthy(with_block(ZeroOneMatrix::upper(3)), 3, 3));

  Coloring tri(9, 2);
  CHECK_FALSE(is_r_wealthy(tri, 3, 2));
  for (int i = 1; i <= 3; ++i) tri.set(3 * i - 2, 3 * i, 2);
  CHECK(is_r_wealthy(tri, 3, 2));

  Coloring star(4, 2);
  star.set(1, 3, 2);
  auto w1 = is_r_wealthy(star, 4, 1);
  REQUIRE(w1);
  CHECK_FALSE(w1->reversed);
  auto rw = is_r_wealthy(reversal(star), 4, 1);
  REQUIRE(rw);
  CHECK(rw->reversed);
  CHECK_FALSE(is_r_wealthy(Coloring(4, 2), 4, 1));
  CHECK_THROWS_AS(is_r_wealthy(star, 3, 1), std::invalid_argument);
  CHECK_THROWS_AS(is_r_wealthy(star, 2, 5), std::invalid_argument);
}

TEST_CASE("wealth with more than two colors goes through recolorings") {
  Coloring k(4, 3, 3);
  k.set(1, 4, 1);
  k.set(2, 3, 1);
  CHECK(is_r_wealthy(k, 2, 3)->recolored_by == Color{1});
  auto c = is_r_wealthy(k, 2, 3);
  REQUIRE(c);
  REQUIRE(c->recolored_by);
  CHECK(c->witness == k);
  auto m = matrix_of_coloring(recolor(k, *c->recolored_by));
  CHECK(matrix_similar(m, ZeroOneMatrix::identity(2)) == c->transform);
}

TEST_CASE("is_m_tame") {
  auto mono = is_m_tame(Coloring(6, 2), 1);
  CHECK(mono.tame);
  CHECK(mono.decomposition.size() == 1);

  auto k = with_block(ZeroOneMatrix::identity(6));
  auto low = is_m_tame(k, 2);
  CHECK_FALSE(low.tame);
  CHECK(low.failing_condition == 2);
  CHECK(low.measured == 3);
  auto cond3 = is_m_tame(k, 3);
  CHECK_FALSE(cond3.tame);
  CHECK(cond3.failing_condition == 3);
  CHECK(cond3.measured > 3);
  CHECK(cond3.witness_i.last < cond3.witness_j.first);
  auto mat = matrix_of_intervals(k, cond3.witness_i.first, cond3.witness_i.last,
                                 cond3.witness_j.first, cond3.witness_j.last);
  CHECK(static_cast<int>(change_rows(mat).all.size()) == cond3.measured);
  CHECK_FALSE(is_m_tame(k, 5).tame);
  CHECK(is_m_tame(k, 6).tame);
  CHECK(tameness_level(k) == 6);

  Coloring alt(6, 2);
  for (int i = 1; i < 6; i += 2) alt.set(i + 1, i + 2 <= 6 ? i + 2 : i, i + 2 <= 6 ? 2 : 1);
  auto many = is_m_tame(alt, 1);
  if (interval_decomposition(alt).size() > 1) CHECK(many.failing_condition == 1);

  std::mt19937 rng(17);
  for (int t = 0; t < 50; ++t) {
    int n = 1 + t % 7;
    auto x = testutil::random_coloring(rng, n, 2);
    CHECK(is_m_tame(x, n).tame);
    const int level = tameness_level(x);
    CHECK(is_m_tame(x, level).tame);
    if (level > 1) CHECK_FALSE(is_m_tame(x, level - 1).tame);
  }
}

TEST_CASE("tame counting bound for n <= 6, m <= 2") {
  for (int n = 1; n <= 6; ++n) {
    std::vector<int> levels;
    for (const auto& k : testutil::all_colorings(n, 2)) levels.push_back(tameness_level(k));
    for (int m = 1; m <= 2; ++m) {
      long long count = std::count_if(levels.begin(), levels.end(), [m](int v) { return v <= m; });
      const double bound = std::pow(2.0 * n, 2.0 * std::pow(m, 5) + m);
      CHECK(static_cast<double>(count) <= bound);
    }
  }
}

TEST_CASE("fib strings") {
  CHECK(fib_strings(4, 1) == std::vector<std::string>{"000", "001", "010", "100", "101"});
  CHECK(fib_strings(2, 2) == std::vector<std::string>{"0", "1"});
  CHECK(fib_strings(1, 1) == std::vector<std::string>{""});
  CHECK(fib_strings(3, 2) == std::vector<std::string>{"00", "10", "11"});
  std::vector<long long> fib{1, 1};
  for (int i = 2; i <= 15; ++i) fib.push_back(fib[i - 1] + fib[i - 2]);
  for (int n = 1; n <= 15; ++n) {
    CHECK(fib_strings(n, 1).size() == static_cast<std::size_t>(fib[n]));
    CHECK(fib_strings(n, 2).size() == static_cast<std::size_t>(fib[n]));
  }
  CHECK_THROWS(fib_strings(0, 1));
  CHECK_THROWS(fib_strings(3, 3));
}

TEST_CASE("southeast paths") {
  auto i3 = ZeroOneMatrix::identity(3);
  auto one = southeast_path_colors(i3, {{2, 2}});
  CHECK(one.colors == "1");
  CHECK(one.edges.size() == 1);
  auto p = southeast_path_colors(i3, {{1, 1}, {2, 1}, {2, 2}, {3, 2}}, {1, 2, 3}, {4, 5, 6});
  CHECK(p.colors == "1010");
  CHECK(p.edges == std::vector<std::pair<int, int>>{{1, 4}, {2, 4}, {2, 5}, {3, 5}});
  CHECK_THROWS(southeast_path_colors(i3, {{1, 1}, {1, 2}}));
  CHECK_FALSE(is_southeast_path({}));

  for (int n = 1; n <= 7; ++n) {
    auto in = ZeroOneMatrix::identity(2 * n);
    auto un = ZeroOneMatrix::upper(2 * n);
    for (const auto& w : fib_strings(n, 1)) {
      if (w.empty()) continue;
      auto path = find_southeast_path(in, w);
      REQUIRE(path);
      CHECK(southeast_path_colors(in, *path).colors == w);
    }
    for (const auto& w : fib_strings(n, 2)) {
      if (w.empty()) continue;
      auto path = find_southeast_path(un, w);
      REQUIRE(path);
      CHECK(southeast_path_colors(un, *path).colors == w);
    }
  }
  CHECK_FALSE(find_southeast_path(ZeroOneMatrix(3, 3, 0), "1"));
}
