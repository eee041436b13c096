#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "colorideals/coloring.hpp"

namespace colorideals {

/// Dense 0-1 matrix, 1-based (row, col) access.
class ZeroOneMatrix {
 public:
  ZeroOneMatrix(int rows, int cols, std::uint8_t fill = 0);
  /// Rows given as strings of '0'/'1', all the same length.
  static ZeroOneMatrix from_rows(const std::vector<std::string>& rows);
  /// I_r: 1s on the main diagonal.
  static ZeroOneMatrix identity(int r);
  /// U_r: 1s on and above the main diagonal.
  static ZeroOneMatrix upper(int r);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  std::uint8_t at(int i, int j) const;
  void set(int i, int j, std::uint8_t v);

  ZeroOneMatrix mirrored() const;    // column order reversed
  ZeroOneMatrix complemented() const;  // 0 and 1 swapped
  std::vector<std::string> to_rows() const;

  friend bool operator==(const ZeroOneMatrix&, const ZeroOneMatrix&) = default;

 private:
  int rows_;
  int cols_;
  std::vector<std::uint8_t> data_;
};

/// Matrix between vertex lists I < J of a two-colored K: entry 0 iff the
/// edge has color 1 (white), 1 iff color 2 (black).
ZeroOneMatrix matrix_of(const Coloring& k, const std::vector<int>& I, const std::vector<int>& J);
/// matrix_of for the intervals [a1, a2] < [b1, b2].
ZeroOneMatrix matrix_of_intervals(const Coloring& k, int a1, int a2, int b1, int b2);
/// M_K for K of size 2r.
ZeroOneMatrix matrix_of_coloring(const Coloring& k);

/// Maximum number of constant runs over all rows and columns.
int al(const ZeroOneMatrix& m);

struct ChangeRows {
  std::vector<std::vector<int>> per_column;  // C(M, j), j = 1..cols
  std::vector<int> all;                      // C(M), sorted
};
ChangeRows change_rows(const ZeroOneMatrix& m);

struct AlternationCheck {
  bool holds = true;
  /// The hypotheses al(M) <= k and |C(M)| <= l failed; nothing to check.
  bool vacuous = false;
  int a = 0;
  long long bound = 0;
};
/// a = #{j : column j differs from column j+1} against (k-1)(2l+1).
AlternationCheck alternation_bound_check(const ZeroOneMatrix& m, int k, int l);

struct SubmatrixMap {
  std::vector<int> rows;
  std::vector<int> cols;
};
std::optional<SubmatrixMap> submatrix_contains(const ZeroOneMatrix& small, const ZeroOneMatrix& big);

enum class Similarity { kIdentity, kMirror, kSwap, kMirrorSwap };
const char* to_string(Similarity s);
/// Transform t with t(m) == target, trying identity, swap, mirror, mirror+swap.
std::optional<Similarity> matrix_similar(const ZeroOneMatrix& m, const ZeroOneMatrix& target);

struct RichCertificate {
  Coloring witness;
  int r = 0;
  /// 1 or 2; 0 for the vacuous r = 1 certificate of a nonempty ideal.
  int type = 0;
  bool reversed = false;
  Color a = 0;
  Color b = 0;
};

/// K must have size 2r - 1. Type 1 is tried before type 2, K before its
/// reversal. Absent for r = 1.
std::optional<RichCertificate> is_r_rich(const Coloring& k, int r);

/// First r-rich member of the level X_{2r-1}; for r = 1 a vacuous
/// certificate whenever that level is nonempty. Throws std::out_of_range if
/// the level was not enumerated.
std::optional<RichCertificate> ideal_contains_rich(const std::vector<std::vector<Coloring>>& levels,
                                                   int r);

bool is_r_simple(const Coloring& k, int r);
/// Smallest r >= 1 for which k is r-simple.
int simplicity_level(const Coloring& k);

struct Interval {
  int first = 0;
  int last = 0;
  int size() const { return last - first + 1; }
  friend bool operator==(const Interval&, const Interval&) = default;
};
/// Greedy partition into maximal monochromatic intervals.
std::vector<Interval> interval_decomposition(const Coloring& k);

struct WealthCertificate {
  Coloring witness;
  int r = 0;
  int type = 0;
  bool reversed = false;                   // type 1
  std::optional<Similarity> transform;     // types 3 and 4
  /// Color b when the condition was found in recolor(witness, b); absent
  /// for two-colored witnesses.
  std::optional<Color> recolored_by;
};

/// K must have size r (type 1), 3r (type 2) or 2r (types 3, 4). With more
/// than two colors the conditions are checked on each recolor(K, b).
std::optional<WealthCertificate> is_r_wealthy(const Coloring& k, int r, int type);

/// Natural size of r-wealthy colorings of the given type.
int wealthy_size(int r, int type);

struct TameReport {
  int m = 0;
  bool tame = false;
  /// 1, 2 or 3 when not m-tame.
  int failing_condition = 0;
  Interval witness_i;
  Interval witness_j;
  int measured = 0;
  std::vector<Interval> decomposition;
};

/// K two-colored. Conditions 2 and 3 scan every pair of subintervals I < J.
TameReport is_m_tame(const Coloring& k, int m);

/// Smallest m with K m-tame; with more than two colors the maximum over
/// recolor(K, b).
int tameness_level(const Coloring& k);

/// All strings of length n - 1 of the kind (1: no "11"; 2: no 01 at odd
/// positions 2i-1,2i and no 10 at even positions 2i,2i+1), sorted.
std::vector<std::string> fib_strings(int n, int kind);

using Cell = std::pair<int, int>;  // (row, col)

/// Whether the cells alternate south and east steps, starting south.
bool is_southeast_path(const std::vector<Cell>& cells);

struct SoutheastPath {
  std::string colors;
  /// Edges {x_row, y_col} of the matching back-and-forth path.
  std::vector<std::pair<int, int>> edges;
};
/// Entry string along the path; the edges use I = x, J = y when given,
/// otherwise row and column indices.
SoutheastPath southeast_path_colors(const ZeroOneMatrix& m, const std::vector<Cell>& cells,
                                    const std::vector<int>& I = {},
                                    const std::vector<int>& J = {});

/// A southeast path whose entries spell w, if any.
std::optional<std::vector<Cell>> find_southeast_path(const ZeroOneMatrix& m, const std::string& w);

}  // namespace colorideals
