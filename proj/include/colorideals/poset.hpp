#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace colorideals {

/// Edge color, 1-based.
using Color = std::uint8_t;

inline constexpr int kMaxColors = 64;

/// Finite poset of colors on 1..l, stored as a dense l x l table.
/// Immutable after construction.
class ColorPoset {
 public:
  /// Builds the poset generated by `strict_pairs` (a < b). The reflexive
  /// closure is implied; the relation must already be transitive and
  /// antisymmetric or std::invalid_argument is thrown.
  ColorPoset(int size, const std::vector<std::pair<int, int>>& strict_pairs);

  static ColorPoset discrete(int size);
  /// The chain 1 < 2 < ... < size.
  static ColorPoset linear(int size);

  int size() const { return size_; }
  bool leq(int a, int b) const;
  bool is_discrete() const;

  /// Strict pairs (a < b) in lexicographic order.
  std::vector<std::pair<int, int>> strict_pairs() const;

  friend bool operator==(const ColorPoset&, const ColorPoset&) = default;

 private:
  int size_;
  std::vector<bool> table_;
};

ColorPoset make_poset(int size, const std::vector<std::pair<int, int>>& pairs);

/// Same elements, only the reflexive comparisons.
ColorPoset discretize(const ColorPoset& poset);

/// `poset { size: l, lt: [[a,b], ...] }`
std::string format_poset(const ColorPoset& poset);
ColorPoset parse_poset(std::string_view text);

/// Builtin names: "D<k>" (discrete) and "L<k>" (chain).
ColorPoset builtin_poset(std::string_view name);

}  // namespace colorideals
