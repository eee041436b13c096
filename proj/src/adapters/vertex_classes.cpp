// Classes whose atoms are the points of the ground set: permutations, signed
// permutations, ordered words, set partitions, ordered graphs (induced and
// non-induced) and words under the subsequence order.

#include <algorithm>
#include <numeric>

#include "common.hpp"

namespace colorideals::detail {

namespace {

template <typename T>
class VertexClass : public ClassAdapter {
 public:
  VertexClass(std::string name, ColorPoset poset) : name_(std::move(name)), poset_(poset) {}

  std::string name() const override { return name_; }
  const ColorPoset& poset() const override { return poset_; }

  int size_of(const NativeObject& obj) const override { return length(get(obj)); }
  void validate(const NativeObject& obj) const override { check(get(obj)); }

  Coloring encode(const NativeObject& obj) const override {
    const T& x = get(obj);
    check(x);
    const int n = length(x);
    std::vector<Color> e;
    e.reserve(static_cast<std::size_t>(n) * (n > 0 ? n - 1 : 0) / 2);
    for (int j = 2; j <= n; ++j)
      for (int i = 1; i < j; ++i) e.push_back(pair_color(x, i, j));
    return Coloring(n, poset_.size(), std::move(e));
  }

  bool native_contains(const NativeObject& small, const NativeObject& large) const override {
    const T& s = get(small);
    const T& l = get(large);
    check(s);
    check(l);
    return any_subset(length(l), length(s),
                      [&](const std::vector<int>& b) { return matches(s, l, b); });
  }

 protected:
  const T& get(const NativeObject& obj) const { return as<T>(obj, name_.c_str()); }

  virtual int length(const T& x) const = 0;
  virtual void check(const T& x) const = 0;
  /// Color of the pair {i < j} of positions.
  virtual Color pair_color(const T& x, int i, int j) const = 0;
  /// Native condition for small to sit on positions b of large.
  virtual bool matches(const T& small, const T& large, const std::vector<int>& b) const = 0;

 private:
  std::string name_;
  ColorPoset poset_;
};

int find_root(std::vector<int>& parent, int x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

void check_permutation(const std::vector<int>& v) {
  std::vector<bool> seen(v.size() + 1, false);
  for (int x : v) {
    if (x < 1 || x > static_cast<int>(v.size()) || seen[x]) {
      throw std::invalid_argument("not a permutation");
    }
    seen[x] = true;
  }
}

std::vector<std::vector<int>> all_permutations(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 1);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

/// Values recovered from ascent(1)/descent(2) pair colors.
std::vector<int> values_from_order(const Coloring& k, Color ascent) {
  std::vector<int> v(k.n(), 1);
  for (int i = 1; i <= k.n(); ++i)
    for (int j = 1; j <= k.n(); ++j) {
      if (i == j) continue;
      bool j_below = i < j ? k.at(i, j) != ascent : k.at(j, i) == ascent;
      if (j_below) ++v[i - 1];
    }
  return v;
}

// ---------------------------------------------------------------- permutations

/// Legend: 1 = 12 (ascent), 2 = 21 (descent).
class PermutationAdapter final : public VertexClass<Permutation> {
 public:
  PermutationAdapter() : VertexClass("permutation", ColorPoset::discrete(2)) {}

  int atom_count() const override { return 1; }
  std::vector<std::string> legend() const override { return {"12 (ascent)", "21 (descent)"}; }

  std::optional<NativeObject> decode(const Coloring& k) const override {
    if (k.colors() != 2) return std::nullopt;
    auto v = values_from_order(k, 1);
    try {
      check_permutation(v);
    } catch (const std::invalid_argument&) {
      return std::nullopt;
    }
    return Permutation{v};
  }

  std::vector<NativeObject> generate_all(int n) const override {
    check_size(n, max_generate_size());
    std::vector<NativeObject> out;
    for (auto& p : all_permutations(n)) out.emplace_back(Permutation{p});
    return out;
  }
  int max_generate_size() const override { return 10; }

  NativeObject parse(std::string_view s) const override {
    Permutation p{parse_int_sequence(s)};
    try {
      check(p);
    } catch (const std::invalid_argument& e) {
      throw ParseError(std::string("permutation literal: ") + e.what());
    }
    return p;
  }
  std::string format(const NativeObject& obj) const override {
    return format_int_sequence(get(obj).values);
  }

 protected:
  int length(const Permutation& x) const override { return static_cast<int>(x.values.size()); }
  void check(const Permutation& x) const override { check_permutation(x.values); }
  Color pair_color(const Permutation& x, int i, int j) const override {
    return x.values[i - 1] < x.values[j - 1] ? 1 : 2;
  }
  bool matches(const Permutation& s, const Permutation& l,
               const std::vector<int>& b) const override {
    for (std::size_t r = 0; r < b.size(); ++r)
      for (std::size_t t = r + 1; t < b.size(); ++t)
        if ((s.values[r] < s.values[t]) != (l.values[b[r] - 1] < l.values[b[t] - 1])) return false;
    return true;
  }
};

// ------------------------------------------------------- signed permutations

/// Color 1 + 4*[descent] + 2*[first negative] + [second negative].
class SignedPermutationAdapter final : public VertexClass<SignedPermutation> {
 public:
  SignedPermutationAdapter() : VertexClass("signed-permutation", ColorPoset::discrete(8)) {}

  int atom_count() const override { return 2; }
  std::vector<std::string> legend() const override {
    std::vector<std::string> out;
    for (int desc = 0; desc < 2; ++desc)
      for (int s1 = 0; s1 < 2; ++s1)
        for (int s2 = 0; s2 < 2; ++s2) {
          std::string a = desc ? "2" : "1";
          std::string b = desc ? "1" : "2";
          out.push_back(a + (s1 ? "-" : "+") + b + (s2 ? "-" : "+"));
        }
    return out;
  }

  std::optional<NativeObject> decode(const Coloring& k) const override {
    if (k.colors() != 8) return std::nullopt;
    const int n = k.n();
    Coloring order(n, 2);
    std::vector<bool> neg(n, false);
    for (int j = 2; j <= n; ++j)
      for (int i = 1; i < j; ++i) {
        int c = k.at(i, j) - 1;
        order.set(i, j, static_cast<Color>(c >= 4 ? 2 : 1));
        neg[i - 1] = (c & 2) != 0;
        neg[j - 1] = (c & 1) != 0;
      }
    auto v = values_from_order(order, 1);
    try {
      check_permutation(v);
    } catch (const std::invalid_argument&) {
      return std::nullopt;
    }
    return SignedPermutation{v, neg};
  }

  std::vector<NativeObject> generate_all(int n) const override {
    check_size(n, max_generate_size());
    std::vector<NativeObject> out;
    for (auto& p : all_permutations(n))
      for (unsigned mask = 0; mask < (1u << n); ++mask) {
        std::vector<bool> neg(n);
        for (int i = 0; i < n; ++i) neg[i] = (mask >> (n - 1 - i)) & 1u;
        out.emplace_back(SignedPermutation{p, neg});
      }
    std::sort(out.begin(), out.end());
    return out;
  }
  int max_generate_size() const override { return 7; }

  NativeObject parse(std::string_view s) const override {
    SignedPermutation p;
    int cur = -1;
    for (char c : s) {
      if (std::isdigit(static_cast<unsigned char>(c))) {
        cur = (cur < 0 ? 0 : cur * 10) + (c - '0');
      } else if (c == '+' || c == '-') {
        if (cur < 0) throw ParseError("signed permutation literal: sign without value");
        p.values.push_back(cur);
        p.negative.push_back(c == '-');
        cur = -1;
      } else if (c != ',' && c != ' ') {
        throw ParseError(std::string("signed permutation literal: bad character '") + c + "'");
      }
    }
    if (cur >= 0) throw ParseError("signed permutation literal: missing sign");
    try {
      check(p);
    } catch (const std::invalid_argument& e) {
      throw ParseError(std::string("signed permutation literal: ") + e.what());
    }
    return p;
  }
  std::string format(const NativeObject& obj) const override {
    const auto& p = get(obj);
    std::string s;
    for (std::size_t i = 0; i < p.values.size(); ++i) {
      s += std::to_string(p.values[i]);
      s += p.negative[i] ? '-' : '+';
    }
    return s;
  }

 protected:
  int length(const SignedPermutation& x) const override {
    return static_cast<int>(x.values.size());
  }
  void check(const SignedPermutation& x) const override {
    if (x.negative.size() != x.values.size()) throw std::invalid_argument("sign vector length");
    check_permutation(x.values);
  }
  Color pair_color(const SignedPermutation& x, int i, int j) const override {
    int desc = x.values[i - 1] > x.values[j - 1] ? 1 : 0;
    return static_cast<Color>(1 + 4 * desc + 2 * x.negative[i - 1] + x.negative[j - 1]);
  }
  bool matches(const SignedPermutation& s, const SignedPermutation& l,
               const std::vector<int>& b) const override {
    for (std::size_t r = 0; r < b.size(); ++r) {
      if (s.negative[r] != l.negative[b[r] - 1]) return false;
      for (std::size_t t = r + 1; t < b.size(); ++t)
        if ((s.values[r] < s.values[t]) != (l.values[b[r] - 1] < l.values[b[t] - 1])) return false;
    }
    return true;
  }
};

// ------------------------------------------------------------- ordered words

/// Legend: 1 = 12, 2 = 21, 3 = 11.
class OrderedWordAdapter final : public VertexClass<OrderedWord> {
 public:
  OrderedWordAdapter() : VertexClass("ordered-word", ColorPoset::discrete(3)) {}

  int atom_count() const override { return 1; }
  std::vector<std::string> legend() const override { return {"12", "21", "11"}; }

  std::optional<NativeObject> decode(const Coloring& k) const override {
    if (k.colors() != 3) return std::nullopt;
    const int n = k.n();
    std::vector<int> parent(n + 1);
    std::iota(parent.begin(), parent.end(), 0);
    for (int j = 2; j <= n; ++j)
      for (int i = 1; i < j; ++i)
        if (k.at(i, j) == 3) parent[find_root(parent, j)] = find_root(parent, i);
    std::vector<int> letters(n, 1);
    for (int i = 1; i <= n; ++i)
      for (int r = 1; r <= n; ++r) {
        if (find_root(parent, r) != r || find_root(parent, i) == r) continue;
        bool r_below = r < i ? k.at(r, i) == 1 : k.at(i, r) == 2;
        if (r_below) ++letters[i - 1];
      }
    return OrderedWord{letters};
  }

  std::vector<NativeObject> generate_all(int n) const override {
    check_size(n, max_generate_size());
    std::vector<NativeObject> out;
    std::vector<int> w(n, 1);
    auto valid = [&] {
      int m = n ? *std::max_element(w.begin(), w.end()) : 0;
      std::vector<bool> seen(m + 1, false);
      for (int x : w) seen[x] = true;
      return std::all_of(seen.begin() + 1, seen.end(), [](bool b) { return b; });
    };
    while (true) {
      if (valid()) out.emplace_back(OrderedWord{w});
      int i = n - 1;
      while (i >= 0 && w[i] == n) w[i--] = 1;
      if (i < 0) break;
      ++w[i];
    }
    return out;
  }
  int max_generate_size() const override { return 7; }

  NativeObject parse(std::string_view s) const override {
    OrderedWord w{parse_int_sequence(s)};
    try {
      check(w);
    } catch (const std::invalid_argument& e) {
      throw ParseError(std::string("ordered word literal: ") + e.what());
    }
    return w;
  }
  std::string format(const NativeObject& obj) const override {
    return format_int_sequence(get(obj).letters);
  }

 protected:
  int length(const OrderedWord& x) const override { return static_cast<int>(x.letters.size()); }
  void check(const OrderedWord& x) const override {
    int m = 0;
    for (int c : x.letters) {
      if (c < 1) throw std::invalid_argument("letters must be positive");
      m = std::max(m, c);
    }
    std::vector<bool> seen(m + 1, false);
    for (int c : x.letters) seen[c] = true;
    for (int c = 1; c <= m; ++c)
      if (!seen[c]) throw std::invalid_argument("letters do not form an initial segment");
  }
  Color pair_color(const OrderedWord& x, int i, int j) const override {
    int a = x.letters[i - 1], b = x.letters[j - 1];
    return a < b ? 1 : a > b ? 2 : 3;
  }
  bool matches(const OrderedWord& s, const OrderedWord& l,
               const std::vector<int>& b) const override {
    for (std::size_t r = 0; r < b.size(); ++r)
      for (std::size_t t = r + 1; t < b.size(); ++t) {
        int x = s.letters[r] - s.letters[t];
        int y = l.letters[b[r] - 1] - l.letters[b[t] - 1];
        if ((x > 0) != (y > 0) || (x < 0) != (y < 0)) return false;
      }
    return true;
  }
};

// ------------------------------------------------------------ set partitions

/// Legend: 1 = same block, 2 = different blocks.
class SetPartitionAdapter final : public VertexClass<SetPartition> {
 public:
  SetPartitionAdapter() : VertexClass("set-partition", ColorPoset::discrete(2)) {}

  int atom_count() const override { return 1; }
  std::vector<std::string> legend() const override {
    return {"{1,2} (same block)", "{1}{2} (different blocks)"};
  }

  std::optional<NativeObject> decode(const Coloring& k) const override {
    if (k.colors() != 2) return std::nullopt;
    const int n = k.n();
    std::vector<int> parent(n + 1);
    std::iota(parent.begin(), parent.end(), 0);
    for (int j = 2; j <= n; ++j)
      for (int i = 1; i < j; ++i)
        if (k.at(i, j) == 1) parent[find_root(parent, j)] = find_root(parent, i);
    std::vector<int> block(n, 0), id(n + 1, 0);
    int next = 0;
    for (int i = 1; i <= n; ++i) {
      int r = find_root(parent, i);
      if (!id[r]) id[r] = ++next;
      block[i - 1] = id[r];
    }
    return SetPartition{block};
  }

  std::vector<NativeObject> generate_all(int n) const override {
    check_size(n, max_generate_size());
    std::vector<NativeObject> out;
    std::vector<int> rgs(n, 0);
    auto rec = [&](auto&& self, int i, int max_block) -> void {
      if (i == n) {
        out.emplace_back(SetPartition{rgs});
        return;
      }
      for (int b = 1; b <= max_block + 1; ++b) {
        rgs[i] = b;
        self(self, i + 1, std::max(max_block, b));
      }
    };
    rec(rec, 0, 0);
    return out;
  }
  int max_generate_size() const override { return 12; }

  NativeObject parse(std::string_view s) const override {
    std::vector<std::vector<int>> blocks;
    int n = 0;
    if (!s.empty()) {
      for (auto part : split(s, '|')) {
        blocks.push_back(parse_int_sequence(part));
        n += static_cast<int>(blocks.back().size());
      }
    }
    std::vector<int> owner(n + 1, 0);
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      if (blocks[b].empty()) throw ParseError("set partition literal: empty block");
      for (int x : blocks[b]) {
        if (x < 1 || x > n || owner[x]) throw ParseError("set partition literal: not a partition");
        owner[x] = static_cast<int>(b) + 1;
      }
    }
    std::vector<int> id(blocks.size() + 1, 0), rgs(n);
    int next = 0;
    for (int i = 1; i <= n; ++i) {
      if (!id[owner[i]]) id[owner[i]] = ++next;
      rgs[i - 1] = id[owner[i]];
    }
    return SetPartition{rgs};
  }
  std::string format(const NativeObject& obj) const override {
    const auto& p = get(obj);
    int m = p.block.empty() ? 0 : *std::max_element(p.block.begin(), p.block.end());
    std::vector<std::vector<int>> blocks(m);
    for (std::size_t i = 0; i < p.block.size(); ++i)
      blocks[p.block[i] - 1].push_back(static_cast<int>(i) + 1);
    std::string s;
    for (int b = 0; b < m; ++b) {
      if (b) s += '|';
      s += format_int_sequence(blocks[b]);
    }
    return s;
  }

 protected:
  int length(const SetPartition& x) const override { return static_cast<int>(x.block.size()); }
  void check(const SetPartition& x) const override {
    int max_block = 0;
    for (int b : x.block) {
      if (b < 1 || b > max_block + 1) throw std::invalid_argument("not a restricted growth string");
      max_block = std::max(max_block, b);
    }
  }
  Color pair_color(const SetPartition& x, int i, int j) const override {
    return x.block[i - 1] == x.block[j - 1] ? 1 : 2;
  }
  bool matches(const SetPartition& s, const SetPartition& l,
               const std::vector<int>& b) const override {
    for (std::size_t r = 0; r < b.size(); ++r)
      for (std::size_t t = r + 1; t < b.size(); ++t)
        if ((s.block[r] == s.block[t]) != (l.block[b[r] - 1] == l.block[b[t] - 1])) return false;
    return true;
  }
};

// ------------------------------------------------------------ ordered graphs

bool has_edge(const OrderedGraph& g, int a, int b) {
  if (a > b) std::swap(a, b);
  return std::binary_search(g.edges.begin(), g.edges.end(), std::pair{a, b});
}

void check_graph(const OrderedGraph& g) {
  if (g.n < 0) throw std::invalid_argument("negative vertex count");
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    auto [a, b] = g.edges[e];
    if (a < 1 || b > g.n || a >= b) throw std::invalid_argument("bad edge");
    if (e > 0 && g.edges[e - 1] >= g.edges[e]) throw std::invalid_argument("edges not sorted");
  }
}

OrderedGraph parse_graph(std::string_view s, bool require_count) {
  OrderedGraph g;
  auto colon = s.find(':');
  std::string_view body = s;
  if (colon != std::string_view::npos) {
    g.n = to_int(s.substr(0, colon), "vertex count");
    body = s.substr(colon + 1);
  } else if (require_count) {
    throw ParseError("graph literal needs 'n:' prefix");
  }
  int max_v = 0;
  if (!body.empty()) {
    for (auto part : split(body, ',')) {
      auto dash = part.find('-');
      if (dash == std::string_view::npos) throw ParseError("graph literal: expected 'a-b'");
      int a = to_int(part.substr(0, dash), "vertex");
      int b = to_int(part.substr(dash + 1), "vertex");
      if (a > b) std::swap(a, b);
      if (a < 1 || a == b) throw ParseError("graph literal: bad edge");
      g.edges.emplace_back(a, b);
      max_v = std::max(max_v, b);
    }
  }
  if (colon == std::string_view::npos) g.n = max_v;
  if (max_v > g.n) throw ParseError("graph literal: edge exceeds vertex count");
  std::sort(g.edges.begin(), g.edges.end());
  if (std::adjacent_find(g.edges.begin(), g.edges.end()) != g.edges.end()) {
    throw ParseError("graph literal: repeated edge");
  }
  return g;
}

std::string format_graph(const OrderedGraph& g, bool with_count) {
  std::string s = with_count ? std::to_string(g.n) + ":" : "";
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    if (e) s += ',';
    s += std::to_string(g.edges[e].first) + "-" + std::to_string(g.edges[e].second);
  }
  return s;
}

/// Graphs on [n], vertices as atoms. Legend: 1 = non-edge, 2 = edge. Over
/// D_2 this is the ordered induced subgraph order, over L_2 (1 < 2) the
/// ordered subgraph order.
class GraphAdapter final : public VertexClass<OrderedGraph> {
 public:
  explicit GraphAdapter(bool induced)
      : VertexClass(induced ? "graph-induced" : "graph-subgraph",
                    induced ? ColorPoset::discrete(2) : ColorPoset::linear(2)),
        induced_(induced) {}

  int atom_count() const override { return 1; }
  std::vector<std::string> legend() const override { return {"non-edge", "edge"}; }
  bool universal_image() const override { return true; }

  std::optional<NativeObject> decode(const Coloring& k) const override {
    if (k.colors() != 2) return std::nullopt;
    OrderedGraph g{k.n(), {}};
    for (int a = 1; a <= k.n(); ++a)
      for (int b = a + 1; b <= k.n(); ++b)
        if (k.at(a, b) == 2) g.edges.emplace_back(a, b);
    return g;
  }

  std::vector<NativeObject> generate_all(int n) const override {
    check_size(n, max_generate_size());
    std::vector<std::pair<int, int>> pairs;
    for (int a = 1; a <= n; ++a)
      for (int b = a + 1; b <= n; ++b) pairs.emplace_back(a, b);
    std::vector<NativeObject> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
      OrderedGraph g{n, {}};
      for (std::size_t e = 0; e < pairs.size(); ++e)
        if ((mask >> e) & 1u) g.edges.push_back(pairs[e]);
      out.emplace_back(std::move(g));
    }
    return out;
  }
  int max_generate_size() const override { return 7; }

  NativeObject parse(std::string_view s) const override {
    auto g = parse_graph(s, true);
    return g;
  }
  std::string format(const NativeObject& obj) const override {
    return format_graph(get(obj), true);
  }

 protected:
  int length(const OrderedGraph& x) const override { return x.n; }
  void check(const OrderedGraph& x) const override { check_graph(x); }
  Color pair_color(const OrderedGraph& x, int i, int j) const override {
    return has_edge(x, i, j) ? 2 : 1;
  }
  bool matches(const OrderedGraph& s, const OrderedGraph& l,
               const std::vector<int>& b) const override {
    for (std::size_t r = 0; r < b.size(); ++r)
      for (std::size_t t = r + 1; t < b.size(); ++t) {
        bool in_small = has_edge(s, static_cast<int>(r) + 1, static_cast<int>(t) + 1);
        bool in_large = has_edge(l, b[r], b[t]);
        if (induced_ ? in_small != in_large : in_small && !in_large) return false;
      }
    return true;
  }

 private:
  bool induced_;
};

// --------------------------------------------------------------------- words

/// Color 1 + alphabet*a + b for the two-letter word ab.
class WordAdapter final : public VertexClass<Word> {
 public:
  explicit WordAdapter(int alphabet)
      : VertexClass(alphabet == 2 ? "word" : "word:" + std::to_string(alphabet),
                    ColorPoset::discrete(alphabet * alphabet)),
        alphabet_(alphabet) {}

  int atom_count() const override { return alphabet_; }
  std::vector<std::string> legend() const override {
    std::vector<std::string> out;
    for (int a = 0; a < alphabet_; ++a)
      for (int b = 0; b < alphabet_; ++b)
        out.push_back(std::string{static_cast<char>('a' + a), static_cast<char>('a' + b)});
    return out;
  }

  std::optional<NativeObject> decode(const Coloring& k) const override {
    if (k.colors() != alphabet_ * alphabet_) return std::nullopt;
    Word w{alphabet_, std::vector<int>(k.n(), 0)};
    for (int j = 2; j <= k.n(); ++j)
      for (int i = 1; i < j; ++i) {
        int c = k.at(i, j) - 1;
        w.letters[i - 1] = c / alphabet_;
        w.letters[j - 1] = c % alphabet_;
      }
    return w;
  }

  std::vector<NativeObject> generate_all(int n) const override {
    check_size(n, max_generate_size());
    std::vector<NativeObject> out;
    std::vector<int> w(n, 0);
    while (true) {
      out.emplace_back(Word{alphabet_, w});
      int i = n - 1;
      while (i >= 0 && w[i] == alphabet_ - 1) w[i--] = 0;
      if (i < 0) break;
      ++w[i];
    }
    return out;
  }
  int max_generate_size() const override {
    if (alphabet_ == 1) return 64;
    int n = 0;
    long long total = 1;
    while (total * alphabet_ <= 1'000'000) {
      total *= alphabet_;
      ++n;
    }
    return n;
  }

  NativeObject parse(std::string_view s) const override {
    Word w{alphabet_, {}};
    for (char c : s) {
      int x = c - 'a';
      if (x < 0 || x >= alphabet_) throw ParseError(std::string("word literal: bad letter '") + c + "'");
      w.letters.push_back(x);
    }
    return w;
  }
  std::string format(const NativeObject& obj) const override {
    std::string s;
    for (int x : get(obj).letters) s += static_cast<char>('a' + x);
    return s;
  }

 protected:
  int length(const Word& x) const override { return static_cast<int>(x.letters.size()); }
  void check(const Word& x) const override {
    if (x.alphabet != alphabet_) throw std::invalid_argument("alphabet mismatch");
    for (int c : x.letters)
      if (c < 0 || c >= alphabet_) throw std::invalid_argument("letter outside alphabet");
  }
  Color pair_color(const Word& x, int i, int j) const override {
    return static_cast<Color>(1 + alphabet_ * x.letters[i - 1] + x.letters[j - 1]);
  }
  bool matches(const Word& s, const Word& l, const std::vector<int>& b) const override {
    for (std::size_t r = 0; r < b.size(); ++r)
      if (s.letters[r] != l.letters[b[r] - 1]) return false;
    return true;
  }

 private:
  int alphabet_;
};

}  // namespace

AdapterPtr make_permutation_adapter() { return std::make_shared<PermutationAdapter>(); }
AdapterPtr make_signed_permutation_adapter() {
  return std::make_shared<SignedPermutationAdapter>();
}
AdapterPtr make_ordered_word_adapter() { return std::make_shared<OrderedWordAdapter>(); }
AdapterPtr make_set_partition_adapter() { return std::make_shared<SetPartitionAdapter>(); }
AdapterPtr make_graph_induced_adapter() { return std::make_shared<GraphAdapter>(true); }
AdapterPtr make_graph_subgraph_adapter() { return std::make_shared<GraphAdapter>(false); }
AdapterPtr make_word_adapter(int alphabet) {
  if (alphabet < 1 || alphabet * alphabet > kMaxColors) {
    throw std::invalid_argument("word alphabet size out of range");
  }
  return std::make_shared<WordAdapter>(alphabet);
}

}  // namespace colorideals::detail
