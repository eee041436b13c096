#include "colorideals/certificates.hpp"

#include <algorithm>
#include <stdexcept>

namespace colorideals {

ZeroOneMatrix::ZeroOneMatrix(int rows, int cols, std::uint8_t fill)
    : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, fill) {
  if (rows < 1 || cols < 1) throw std::invalid_argument("matrix dimensions must be positive");
  if (fill > 1) throw std::invalid_argument("entries are 0 or 1");
}

ZeroOneMatrix ZeroOneMatrix::from_rows(const std::vector<std::string>& rows) {
  if (rows.empty()) throw std::invalid_argument("matrix dimensions must be positive");
  ZeroOneMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
  for (int i = 1; i <= m.rows(); ++i) {
    const auto& row = rows[static_cast<std::size_t>(i - 1)];
    if (static_cast<int>(row.size()) != m.cols()) throw std::invalid_argument("ragged rows");
    for (int j = 1; j <= m.cols(); ++j) {
      char c = row[static_cast<std::size_t>(j - 1)];
      if (c != '0' && c != '1') throw std::invalid_argument("entries are 0 or 1");
      m.set(i, j, static_cast<std::uint8_t>(c - '0'));
    }
  }
  return m;
}

ZeroOneMatrix ZeroOneMatrix::identity(int r) {
  ZeroOneMatrix m(r, r);
  for (int i = 1; i <= r; ++i) m.set(i, i, 1);
  return m;
}

ZeroOneMatrix ZeroOneMatrix::upper(int r) {
  ZeroOneMatrix m(r, r);
  for (int i = 1; i <= r; ++i)
    for (int j = i; j <= r; ++j) m.set(i, j, 1);
  return m;
}

std::uint8_t ZeroOneMatrix::at(int i, int j) const {
  if (i < 1 || i > rows_ || j < 1 || j > cols_) throw std::out_of_range("matrix index");
  return data_[static_cast<std::size_t>(i - 1) * cols_ + (j - 1)];
}

void ZeroOneMatrix::set(int i, int j, std::uint8_t v) {
  if (i < 1 || i > rows_ || j < 1 || j > cols_) throw std::out_of_range("matrix index");
  if (v > 1) throw std::invalid_argument("entries are 0 or 1");
  data_[static_cast<std::size_t>(i - 1) * cols_ + (j - 1)] = v;
}

ZeroOneMatrix ZeroOneMatrix::mirrored() const {
  ZeroOneMatrix m(rows_, cols_);
  for (int i = 1; i <= rows_; ++i)
    for (int j = 1; j <= cols_; ++j) m.set(i, j, at(i, cols_ + 1 - j));
  return m;
}

ZeroOneMatrix ZeroOneMatrix::complemented() const {
  ZeroOneMatrix m = *this;
  for (auto& v : m.data_) v ^= 1;
  return m;
}

std::vector<std::string> ZeroOneMatrix::to_rows() const {
  std::vector<std::string> out;
  for (int i = 1; i <= rows_; ++i) {
    std::string s;
    for (int j = 1; j <= cols_; ++j) s += static_cast<char>('0' + at(i, j));
    out.push_back(std::move(s));
  }
  return out;
}

ZeroOneMatrix matrix_of(const Coloring& k, const std::vector<int>& I, const std::vector<int>& J) {
  if (k.colors() != 2) throw std::invalid_argument("matrix_of needs a two-colored coloring");
  if (I.empty() || J.empty()) throw std::invalid_argument("empty vertex set");
  auto increasing = [&](const std::vector<int>& v) {
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (v[i] < 1 || v[i] > k.n() || (i > 0 && v[i] <= v[i - 1])) return false;
    }
    return true;
  };
  if (!increasing(I) || !increasing(J)) throw std::invalid_argument("vertex lists must increase");
  if (I.back() >= J.front()) throw std::invalid_argument("need I < J");
  ZeroOneMatrix m(static_cast<int>(I.size()), static_cast<int>(J.size()));
  for (int i = 1; i <= m.rows(); ++i)
    for (int j = 1; j <= m.cols(); ++j)
      m.set(i, j, k.at(I[static_cast<std::size_t>(i - 1)], J[static_cast<std::size_t>(j - 1)]) == 2);
  return m;
}

ZeroOneMatrix matrix_of_intervals(const Coloring& k, int a1, int a2, int b1, int b2) {
  std::vector<int> I;
  std::vector<int> J;
  for (int v = a1; v <= a2; ++v) I.push_back(v);
  for (int v = b1; v <= b2; ++v) J.push_back(v);
  return matrix_of(k, I, J);
}

ZeroOneMatrix matrix_of_coloring(const Coloring& k) {
  if (k.n() < 2 || k.n() % 2 != 0) throw std::invalid_argument("M_K needs an even size");
  const int r = k.n() / 2;
  return matrix_of_intervals(k, 1, r, r + 1, 2 * r);
}

int al(const ZeroOneMatrix& m) {
  int best = 1;
  for (int i = 1; i <= m.rows(); ++i) {
    int runs = 1;
    for (int j = 2; j <= m.cols(); ++j) runs += m.at(i, j) != m.at(i, j - 1);
    best = std::max(best, runs);
  }
  for (int j = 1; j <= m.cols(); ++j) {
    int runs = 1;
    for (int i = 2; i <= m.rows(); ++i) runs += m.at(i, j) != m.at(i - 1, j);
    best = std::max(best, runs);
  }
  return best;
}

ChangeRows change_rows(const ZeroOneMatrix& m) {
  ChangeRows c;
  std::vector<bool> any(static_cast<std::size_t>(m.rows()) + 1, false);
  for (int j = 1; j <= m.cols(); ++j) {
    std::vector<int> col;
    for (int a = 1; a < m.rows(); ++a) {
      if (m.at(a, j) != m.at(a + 1, j)) {
        col.push_back(a);
        any[static_cast<std::size_t>(a)] = true;
      }
    }
    c.per_column.push_back(std::move(col));
  }
  for (int a = 1; a < m.rows(); ++a)
    if (any[static_cast<std::size_t>(a)]) c.all.push_back(a);
  return c;
}

AlternationCheck alternation_bound_check(const ZeroOneMatrix& m, int k, int l) {
  AlternationCheck res;
  res.bound = static_cast<long long>(k - 1) * (2LL * l + 1);
  for (int j = 1; j < m.cols(); ++j) {
    for (int i = 1; i <= m.rows(); ++i) {
      if (m.at(i, j) != m.at(i, j + 1)) {
        ++res.a;
        break;
      }
    }
  }
  if (al(m) > k || static_cast<int>(change_rows(m).all.size()) > l) {
    res.vacuous = true;
    return res;
  }
  res.holds = res.a <= res.bound;
  return res;
}

std::optional<SubmatrixMap> submatrix_contains(const ZeroOneMatrix& small, const ZeroOneMatrix& big) {
  const int r = small.rows();
  const int s = small.cols();
  if (r > big.rows() || s > big.cols()) return std::nullopt;
  std::vector<int> rows(static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i) rows[static_cast<std::size_t>(i)] = i + 1;
  while (true) {
    // Greedy leftmost column matching is optimal once the rows are fixed.
    std::vector<int> cols;
    int next = 1;
    for (int j = 1; j <= s; ++j) {
      while (next <= big.cols()) {
        bool ok = true;
        for (int i = 1; i <= r && ok; ++i) ok = big.at(rows[static_cast<std::size_t>(i - 1)], next) == small.at(i, j);
        if (ok) break;
        ++next;
      }
      if (next > big.cols()) break;
      cols.push_back(next++);
    }
    if (static_cast<int>(cols.size()) == s) return SubmatrixMap{rows, cols};
    int i = r - 1;
    while (i >= 0 && rows[static_cast<std::size_t>(i)] == big.rows() - r + i + 1) --i;
    if (i < 0) return std::nullopt;
    ++rows[static_cast<std::size_t>(i)];
    for (int t = i + 1; t < r; ++t) rows[static_cast<std::size_t>(t)] = rows[static_cast<std::size_t>(t - 1)] + 1;
  }
}

const char* to_string(Similarity s) {
  switch (s) {
    case Similarity::kIdentity: return "identity";
    case Similarity::kMirror: return "mirror";
    case Similarity::kSwap: return "swap";
    case Similarity::kMirrorSwap: return "mirror+swap";
  }
  return "?";
}

std::optional<Similarity> matrix_similar(const ZeroOneMatrix& m, const ZeroOneMatrix& target) {
  if (m.rows() != target.rows() || m.cols() != target.cols()) return std::nullopt;
  if (m == target) return Similarity::kIdentity;
  if (m.complemented() == target) return Similarity::kSwap;
  auto mir = m.mirrored();
  if (mir == target) return Similarity::kMirror;
  if (mir.complemented() == target) return Similarity::kMirrorSwap;
  return std::nullopt;
}

namespace {

std::optional<RichCertificate> rich_type1(const Coloring& k, int r) {
  const Color a = k.at(1, 2);
  for (int i = 2; i <= r - 1; ++i)
    if (k.at(i, i + 1) != a) return std::nullopt;
  const Color b = k.at(r, r + 1);
  if (b == a) return std::nullopt;
  return RichCertificate{k, r, 1, false, a, b};
}

std::optional<RichCertificate> rich_type2(const Coloring& k, int r) {
  const Color a = k.at(1, 2);
  for (int i = 3; i <= r; ++i)
    if (k.at(1, i) != a) return std::nullopt;
  const Color b = k.at(1, r + 1);
  if (b == a) return std::nullopt;
  return RichCertificate{k, r, 2, false, a, b};
}

}  // namespace

std::optional<RichCertificate> is_r_rich(const Coloring& k, int r) {
  if (r < 1) throw std::invalid_argument("r must be positive");
  if (k.n() != 2 * r - 1) throw std::invalid_argument("r-rich colorings have size 2r-1");
  if (r == 1) return std::nullopt;
  const Coloring rev = reversal(k);
  for (auto check : {rich_type1, rich_type2}) {
    if (auto c = check(k, r)) return c;
    if (auto c = check(rev, r)) {
      c->witness = k;
      c->reversed = true;
      return c;
    }
  }
  return std::nullopt;
}

std::optional<RichCertificate> ideal_contains_rich(const std::vector<std::vector<Coloring>>& levels,
                                                   int r) {
  if (r < 1) throw std::invalid_argument("r must be positive");
  const auto n = static_cast<std::size_t>(2 * r - 1);
  if (n >= levels.size()) throw std::out_of_range("level " + std::to_string(n) + " not enumerated");
  if (r == 1) {
    if (levels[n].empty()) return std::nullopt;
    return RichCertificate{levels[n].front(), 1, 0, false, 0, 0};
  }
  for (const auto& k : levels[n])
    if (auto c = is_r_rich(k, r)) return c;
  return std::nullopt;
}

bool is_r_simple(const Coloring& k, int r) {
  if (r < 1) throw std::invalid_argument("r must be positive");
  const int n = k.n();
  std::vector<int> middle;
  for (int v = r + 1; v <= n - r; ++v) middle.push_back(v);
  if (!is_homogeneous(k, middle).homogeneous) return false;
  const int lo = 2 * r + 1;
  const int hi = n - 2 * r;
  if (lo > hi) return true;
  auto uniform = [&](int v) {
    for (int w = lo + 1; w <= hi; ++w)
      if (k.at(v, w) != k.at(v, lo)) return false;
    return true;
  };
  for (int v = 1; v <= r; ++v)
    if (!uniform(v)) return false;
  for (int v = n - r + 1; v <= n; ++v)
    if (!uniform(v)) return false;
  return true;
}

int simplicity_level(const Coloring& k) {
  for (int r = 1;; ++r)
    if (is_r_simple(k, r)) return r;
}

std::vector<Interval> interval_decomposition(const Coloring& k) {
  std::vector<Interval> out;
  int start = 1;
  while (start <= k.n()) {
    int end = start;
    if (end + 1 <= k.n()) {
      const Color c = k.at(start, start + 1);
      end = start + 1;
      // extend while the new vertex joins everything in the block with color c
      while (end + 1 <= k.n()) {
        bool ok = true;
        for (int v = start; v <= end && ok; ++v) ok = k.at(v, end + 1) == c;
        if (!ok) break;
        ++end;
      }
    }
    out.push_back({start, end});
    start = end + 1;
  }
  return out;
}

int wealthy_size(int r, int type) {
  switch (type) {
    case 1: return r;
    case 2: return 3 * r;
    case 3:
    case 4: return 2 * r;
  }
  throw std::invalid_argument("wealth type must be 1..4");
}

namespace {

bool alternating_star(const Coloring& k, int r) {
  for (int i = 2; i <= r - 1; ++i)
    if (k.at(1, i) == k.at(1, i + 1)) return false;
  return true;
}

std::optional<WealthCertificate> wealthy_two_colored(const Coloring& k, const Coloring& witness,
                                                     int r, int type) {
  WealthCertificate c{witness, r, type, false, std::nullopt, std::nullopt};
  switch (type) {
    case 1:
      if (alternating_star(k, r)) return c;
      if (alternating_star(reversal(k), r)) {
        c.reversed = true;
        return c;
      }
      return std::nullopt;
    case 2:
      for (int i = 1; i <= r; ++i) {
        std::vector<int> tri{3 * i - 2, 3 * i - 1, 3 * i};
        if (is_homogeneous(k, tri).homogeneous) return std::nullopt;
      }
      return c;
    default: {
      const auto target = type == 3 ? ZeroOneMatrix::identity(r) : ZeroOneMatrix::upper(r);
      if (auto t = matrix_similar(matrix_of_coloring(k), target)) {
        c.transform = t;
        return c;
      }
      return std::nullopt;
    }
  }
}

}  // namespace

std::optional<WealthCertificate> is_r_wealthy(const Coloring& k, int r, int type) {
  if (r < 1) throw std::invalid_argument("r must be positive");
  if (k.n() != wealthy_size(r, type)) {
    throw std::invalid_argument("type-" + std::to_string(type) + " " + std::to_string(r) +
                                "-wealthy colorings have size " +
                                std::to_string(wealthy_size(r, type)));
  }
  if (k.colors() == 2) return wealthy_two_colored(k, k, r, type);
  for (int b = 1; b <= k.colors(); ++b) {
    if (auto c = wealthy_two_colored(recolor(k, static_cast<Color>(b)), k, r, type)) {
      c->recolored_by = static_cast<Color>(b);
      return c;
    }
  }
  return std::nullopt;
}

TameReport is_m_tame(const Coloring& k, int m) {
  if (k.colors() != 2) throw std::invalid_argument("tameness needs a two-colored coloring");
  TameReport rep;
  rep.m = m;
  rep.decomposition = interval_decomposition(k);
  const int n = k.n();
  if (static_cast<int>(rep.decomposition.size()) > m) {
    rep.failing_condition = 1;
    rep.measured = static_cast<int>(rep.decomposition.size());
    return rep;
  }
  for (int a1 = 1; a1 <= n; ++a1)
    for (int a2 = a1; a2 <= n; ++a2)
      for (int b1 = a2 + 1; b1 <= n; ++b1)
        for (int b2 = b1; b2 <= n; ++b2) {
          auto mat = matrix_of_intervals(k, a1, a2, b1, b2);
          if (int v = al(mat); v > m) {
            rep.failing_condition = 2;
            rep.witness_i = {a1, a2};
            rep.witness_j = {b1, b2};
            rep.measured = v;
            return rep;
          }
          if (int v = static_cast<int>(change_rows(mat).all.size()); v > m) {
            rep.failing_condition = 3;
            rep.witness_i = {a1, a2};
            rep.witness_j = {b1, b2};
            rep.measured = v;
            return rep;
          }
        }
  rep.tame = true;
  return rep;
}

namespace {

int two_colored_tameness(const Coloring& k) {
  int m = std::max<int>(1, static_cast<int>(interval_decomposition(k).size()));
  const int n = k.n();
  for (int a1 = 1; a1 <= n; ++a1)
    for (int a2 = a1; a2 <= n; ++a2)
      for (int b1 = a2 + 1; b1 <= n; ++b1)
        for (int b2 = b1; b2 <= n; ++b2) {
          auto mat = matrix_of_intervals(k, a1, a2, b1, b2);
          m = std::max({m, al(mat), static_cast<int>(change_rows(mat).all.size())});
        }
  return m;
}

}  // namespace

int tameness_level(const Coloring& k) {
  if (k.colors() == 2) return two_colored_tameness(k);
  int m = 1;
  for (int b = 1; b <= k.colors(); ++b)
    m = std::max(m, two_colored_tameness(recolor(k, static_cast<Color>(b))));
  return m;
}

std::vector<std::string> fib_strings(int n, int kind) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  if (kind != 1 && kind != 2) throw std::invalid_argument("kind is 1 or 2");
  std::vector<std::string> out{""};
  for (int pos = 1; pos <= n - 1; ++pos) {
    std::vector<std::string> next;
    for (const auto& s : out) {
      for (char c : {'0', '1'}) {
        if (pos > 1) {
          const char prev = s.back();
          if (kind == 1 && prev == '1' && c == '1') continue;
          // (pos-1, pos) is an odd-even pair when pos is even
          if (kind == 2 && pos % 2 == 0 && prev == '0' && c == '1') continue;
          if (kind == 2 && pos % 2 == 1 && prev == '1' && c == '0') continue;
        }
        next.push_back(s + c);
      }
    }
    out = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_southeast_path(const std::vector<Cell>& cells) {
  if (cells.empty()) return false;
  for (std::size_t t = 1; t < cells.size(); ++t) {
    const auto [r0, c0] = cells[t - 1];
    const auto [r1, c1] = cells[t];
    const bool south = t % 2 == 1;
    if (south ? !(c1 == c0 && r1 > r0) : !(r1 == r0 && c1 > c0)) return false;
  }
  return true;
}

SoutheastPath southeast_path_colors(const ZeroOneMatrix& m, const std::vector<Cell>& cells,
                                    const std::vector<int>& I, const std::vector<int>& J) {
  if (!is_southeast_path(cells)) throw std::invalid_argument("not a southeast path");
  if (!I.empty() && static_cast<int>(I.size()) != m.rows()) throw std::invalid_argument("I size");
  if (!J.empty() && static_cast<int>(J.size()) != m.cols()) throw std::invalid_argument("J size");
  SoutheastPath p;
  for (auto [i, j] : cells) {
    p.colors += static_cast<char>('0' + m.at(i, j));
    int x = I.empty() ? i : I[static_cast<std::size_t>(i - 1)];
    int y = J.empty() ? j : J[static_cast<std::size_t>(j - 1)];
    p.edges.emplace_back(x, y);
  }
  return p;
}

std::optional<std::vector<Cell>> find_southeast_path(const ZeroOneMatrix& m, const std::string& w) {
  if (w.empty()) return std::vector<Cell>{};
  const int k = static_cast<int>(w.size());
  const int R = m.rows();
  const int S = m.cols();
  // ok[t][cell]: a path for w[t..] can start at cell, given the step parity.
  std::vector<std::vector<char>> ok(static_cast<std::size_t>(k),
                                    std::vector<char>(static_cast<std::size_t>(R) * S, 0));
  auto idx = [S](int i, int j) { return static_cast<std::size_t>(i - 1) * S + (j - 1); };
  for (int t = k - 1; t >= 0; --t) {
    for (int i = 1; i <= R; ++i)
      for (int j = 1; j <= S; ++j) {
        if (m.at(i, j) != w[static_cast<std::size_t>(t)] - '0') continue;
        if (t == k - 1) {
          ok[t][idx(i, j)] = 1;
          continue;
        }
        const bool south = t % 2 == 0;  // step from cell t+1 to t+2 (1-based)
        bool any = false;
        if (south) {
          for (int i2 = i + 1; i2 <= R && !any; ++i2) any = ok[t + 1][idx(i2, j)];
        } else {
          for (int j2 = j + 1; j2 <= S && !any; ++j2) any = ok[t + 1][idx(i, j2)];
        }
        ok[t][idx(i, j)] = any;
      }
  }
  for (int i = 1; i <= R; ++i)
    for (int j = 1; j <= S; ++j) {
      if (!ok[0][idx(i, j)]) continue;
      std::vector<Cell> path{{i, j}};
      for (int t = 1; t < k; ++t) {
        auto [pi, pj] = path.back();
        const bool south = (t - 1) % 2 == 0;
        if (south) {
          for (int i2 = pi + 1;; ++i2)
            if (ok[t][idx(i2, pj)]) {
              path.emplace_back(i2, pj);
              break;
            }
        } else {
          for (int j2 = pj + 1;; ++j2)
            if (ok[t][idx(pi, j2)]) {
              path.emplace_back(pi, j2);
              break;
            }
        }
      }
      return path;
    }
  return std::nullopt;
}

}  // namespace colorideals
