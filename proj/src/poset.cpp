#include "colorideals/poset.hpp"

#include <cctype>
#include <charconv>
#include <sstream>
#include <stdexcept>

#include "colorideals/errors.hpp"

namespace colorideals {

ColorPoset::ColorPoset(int size, const std::vector<std::pair<int, int>>& strict_pairs)
    : size_(size) {
  if (size < 1 || size > kMaxColors) {
    throw std::invalid_argument("poset size must be in 1.." + std::to_string(kMaxColors));
  }
  table_.assign(static_cast<std::size_t>(size) * size, false);
  for (int a = 1; a <= size; ++a) table_[(a - 1) * size + (a - 1)] = true;
  for (auto [a, b] : strict_pairs) {
    if (a < 1 || a > size || b < 1 || b > size) {
      throw std::invalid_argument("poset pair out of range");
    }
    table_[(a - 1) * size + (b - 1)] = true;
  }
  for (int a = 1; a <= size; ++a) {
    for (int b = 1; b <= size; ++b) {
      if (a != b && leq(a, b) && leq(b, a)) {
        throw std::invalid_argument("poset relation is not antisymmetric");
      }
      for (int c = 1; c <= size; ++c) {
        if (leq(a, b) && leq(b, c) && !leq(a, c)) {
          throw std::invalid_argument("poset relation is not transitive");
        }
      }
    }
  }
}

ColorPoset ColorPoset::discrete(int size) { return ColorPoset(size, {}); }

ColorPoset ColorPoset::linear(int size) {
  std::vector<std::pair<int, int>> pairs;
  for (int a = 1; a <= size; ++a)
    for (int b = a + 1; b <= size; ++b) pairs.emplace_back(a, b);
  return ColorPoset(size, pairs);
}

bool ColorPoset::leq(int a, int b) const {
  if (a < 1 || a > size_ || b < 1 || b > size_) {
    throw std::out_of_range("color out of range");
  }
  return table_[(a - 1) * size_ + (b - 1)];
}

bool ColorPoset::is_discrete() const {
  for (int a = 1; a <= size_; ++a)
    for (int b = 1; b <= size_; ++b)
      if (a != b && leq(a, b)) return false;
  return true;
}

std::vector<std::pair<int, int>> ColorPoset::strict_pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int a = 1; a <= size_; ++a)
    for (int b = 1; b <= size_; ++b)
      if (a != b && leq(a, b)) out.emplace_back(a, b);
  return out;
}

ColorPoset make_poset(int size, const std::vector<std::pair<int, int>>& pairs) {
  std::vector<std::pair<int, int>> strict;
  for (auto p : pairs)
    if (p.first != p.second) strict.push_back(p);
  return ColorPoset(size, strict);
}

ColorPoset discretize(const ColorPoset& poset) { return ColorPoset::discrete(poset.size()); }

std::string format_poset(const ColorPoset& poset) {
  std::ostringstream os;
  os << "poset { size: " << poset.size() << ", lt: [";
  bool first = true;
  for (auto [a, b] : poset.strict_pairs()) {
    if (!first) os << ", ";
    first = false;
    os << '[' << a << ',' << b << ']';
  }
  os << "] }";
  return os.str();
}

namespace {

class PosetLexer {
 public:
  explicit PosetLexer(std::string_view s) : s_(s) {}

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool try_consume(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!try_consume(c)) fail(std::string("expected '") + c + "'");
  }
  void expect_word(std::string_view w) {
    skip_ws();
    if (s_.substr(pos_, w.size()) != w) fail("expected '" + std::string(w) + "'");
    pos_ += w.size();
  }
  int integer() {
    skip_ws();
    int v = 0;
    auto [p, ec] = std::from_chars(s_.data() + pos_, s_.data() + s_.size(), v);
    if (ec != std::errc{}) fail("expected integer");
    pos_ = static_cast<std::size_t>(p - s_.data());
    return v;
  }
  bool at_end() {
    skip_ws();
    return pos_ == s_.size();
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("poset literal: " + what + " at offset " + std::to_string(pos_));
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

ColorPoset parse_poset(std::string_view text) {
  PosetLexer lx(text);
  lx.expect_word("poset");
  lx.expect('{');
  lx.expect_word("size");
  lx.expect(':');
  int size = lx.integer();
  std::vector<std::pair<int, int>> pairs;
  if (lx.try_consume(',')) {
    lx.expect_word("lt");
    lx.expect(':');
    lx.expect('[');
    if (!lx.try_consume(']')) {
      do {
        lx.expect('[');
        int a = lx.integer();
        lx.expect(',');
        int b = lx.integer();
        lx.expect(']');
        pairs.emplace_back(a, b);
      } while (lx.try_consume(','));
      lx.expect(']');
    }
  }
  lx.expect('}');
  if (!lx.at_end()) lx.fail("trailing input");
  try {
    return make_poset(size, pairs);
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("poset literal: ") + e.what());
  }
}

ColorPoset builtin_poset(std::string_view name) {
  if (name.size() >= 2 && (name[0] == 'D' || name[0] == 'L')) {
    int k = 0;
    auto [p, ec] = std::from_chars(name.data() + 1, name.data() + name.size(), k);
    if (ec == std::errc{} && p == name.data() + name.size() && k >= 1 && k <= kMaxColors) {
      return name[0] == 'D' ? ColorPoset::discrete(k) : ColorPoset::linear(k);
    }
  }
  throw ParseError("unknown builtin poset '" + std::string(name) + "'");
}

}  // namespace colorideals
