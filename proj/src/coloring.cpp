#include "colorideals/coloring.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <stdexcept>

namespace colorideals {

Coloring::Coloring(int n, int colors, Color fill) : n_(n), colors_(colors) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  if (colors < 1 || colors > kMaxColors) throw std::invalid_argument("bad color count");
  if (fill < 1 || fill > colors) throw std::invalid_argument("fill color out of range");
  edges_.assign(static_cast<std::size_t>(n) * (n > 0 ? n - 1 : 0) / 2, fill);
}

Coloring::Coloring(int n, int colors, std::vector<Color> colex_edges)
    : n_(n), colors_(colors), edges_(std::move(colex_edges)) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  if (colors < 1 || colors > kMaxColors) throw std::invalid_argument("bad color count");
  if (edges_.size() != static_cast<std::size_t>(n) * (n > 0 ? n - 1 : 0) / 2) {
    throw std::invalid_argument("edge array has wrong length");
  }
  for (Color c : edges_)
    if (c < 1 || c > colors) throw std::invalid_argument("edge color out of range");
}

void Coloring::set(int i, int j, Color c) {
  if (i == j || i < 1 || j < 1 || i > n_ || j > n_) throw std::out_of_range("bad edge");
  if (c < 1 || c > colors_) throw std::invalid_argument("edge color out of range");
  edges_[edge_index(i, j)] = c;
}

Coloring Coloring::extended(std::span<const Color> new_edges) const {
  if (static_cast<int>(new_edges.size()) != n_) throw std::invalid_argument("need n new edges");
  std::vector<Color> e;
  e.reserve(edges_.size() + new_edges.size());
  e.insert(e.end(), edges_.begin(), edges_.end());
  e.insert(e.end(), new_edges.begin(), new_edges.end());
  return Coloring(n_ + 1, colors_, std::move(e));
}

std::string Coloring::key() const {
  std::string s;
  s.reserve(edges_.size() + 2);
  s.push_back(static_cast<char>(n_));
  s.push_back(static_cast<char>(colors_));
  s.append(edges_.begin(), edges_.end());
  return s;
}

namespace {

// Per-vertex bitsets over host vertices: up(c, v) has bit u-1 set iff
// c <=_P chi({u, v}).
class HostIndex {
 public:
  HostIndex(const ColorPoset& poset, const Coloring& host)
      : n_(host.n()), l_(host.colors()), up_(static_cast<std::size_t>(l_) * n_, 0) {
    for (int v = 2; v <= n_; ++v) {
      for (int u = 1; u < v; ++u) {
        Color d = host.at(u, v);
        for (int c = 1; c <= l_; ++c) {
          if (poset.leq(c, d)) {
            up_[(c - 1) * n_ + (v - 1)] |= std::uint64_t{1} << (u - 1);
            up_[(c - 1) * n_ + (u - 1)] |= std::uint64_t{1} << (v - 1);
          }
        }
      }
    }
  }

  std::uint64_t up(int c, int v) const { return up_[(c - 1) * n_ + (v - 1)]; }
  int n() const { return n_; }

 private:
  int n_;
  int l_;
  std::vector<std::uint64_t> up_;
};

inline std::uint64_t range_mask(int lo, int hi) {
  // bits lo-1 .. hi-1 (1-based vertices lo..hi)
  if (hi < lo) return 0;
  std::uint64_t upper = hi >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << hi) - 1);
  std::uint64_t lower = (std::uint64_t{1} << (lo - 1)) - 1;
  return upper & ~lower;
}

class MaskSearch {
 public:
  MaskSearch(const Coloring& pattern, const HostIndex& host, bool anchor_last)
      : p_(pattern), h_(host), m_(pattern.n()), anchor_(anchor_last), f_(m_, 0) {
    // forward color demand of each pattern vertex
    need_.assign(static_cast<std::size_t>(m_) * pattern.colors(), 0);
    for (int k = 1; k <= m_; ++k)
      for (int j = k + 1; j <= m_; ++j) ++need_[(k - 1) * pattern.colors() + (p_.at(k, j) - 1)];
  }

  std::optional<Embedding> run() {
    if (m_ > h_.n()) return std::nullopt;
    if (m_ == 0) return Embedding{};
    int free = m_;
    if (anchor_) {
      f_[m_ - 1] = h_.n();
      free = m_ - 1;
      for (int k = 1; k < m_; ++k) anchor_masks_.push_back(h_.up(p_.at(k, m_), h_.n()));
    }
    free_ = free;
    if (step(1)) return f_;
    return std::nullopt;
  }

 private:
  bool step(int k) {
    if (k > free_) return true;
    int prev = k == 1 ? 0 : f_[k - 2];
    int last_host = anchor_ ? h_.n() - 1 : h_.n();
    std::uint64_t cand = range_mask(prev + 1, last_host - (free_ - k));
    for (int i = 1; i < k; ++i) cand &= h_.up(p_.at(i, k), f_[i - 1]);
    if (anchor_) cand &= anchor_masks_[k - 1];
    const int l = p_.colors();
    while (cand) {
      int w = std::countr_zero(cand) + 1;
      cand &= cand - 1;
      bool ok = true;
      std::uint64_t after = range_mask(w + 1, h_.n());
      for (int c = 1; c <= l && ok; ++c) {
        int need = need_[(k - 1) * l + (c - 1)];
        if (need && std::popcount(h_.up(c, w) & after) < need) ok = false;
      }
      if (!ok) continue;
      f_[k - 1] = w;
      if (step(k + 1)) return true;
    }
    return false;
  }

  const Coloring& p_;
  const HostIndex& h_;
  int m_;
  bool anchor_;
  int free_ = 0;
  Embedding f_;
  std::vector<int> need_;
  std::vector<std::uint64_t> anchor_masks_;
};

bool reference_step(const ColorPoset& poset, const Coloring& p, const Coloring& h, Embedding& f,
                    int k, int first_host, bool anchor) {
  const int m = p.n();
  const int n = h.n();
  if (k > m) return true;
  int lo = k == 1 ? first_host : f[k - 2] + 1;
  int hi = n - (m - k);
  if (anchor && k == m) lo = hi = n;
  if (anchor && k < m) hi = std::min(hi, n - 1 - (m - 1 - k));
  for (int w = lo; w <= hi; ++w) {
    bool ok = true;
    for (int i = 1; i < k && ok; ++i) ok = poset.leq(p.at(i, k), h.at(f[i - 1], w));
    if (!ok) continue;
    f[k - 1] = w;
    if (reference_step(poset, p, h, f, k + 1, first_host, anchor)) return true;
  }
  return false;
}

void check_compatible(const ColorPoset& poset, const Coloring& pattern, const Coloring& host) {
  if (pattern.colors() != poset.size() || host.colors() != poset.size()) {
    throw std::invalid_argument("coloring color count does not match poset");
  }
}

}  // namespace

std::optional<Embedding> contains_reference(const ColorPoset& poset, const Coloring& pattern,
                                            const Coloring& host) {
  check_compatible(poset, pattern, host);
  if (pattern.n() > host.n()) return std::nullopt;
  Embedding f(pattern.n(), 0);
  if (reference_step(poset, pattern, host, f, 1, 1, false)) return f;
  return std::nullopt;
}

std::optional<Embedding> contains(const ColorPoset& poset, const Coloring& pattern,
                                  const Coloring& host) {
  check_compatible(poset, pattern, host);
  if (pattern.n() > host.n()) return std::nullopt;
  if (host.n() > 64) return contains_reference(poset, pattern, host);
  HostIndex index(poset, host);
  return MaskSearch(pattern, index, false).run();
}

std::optional<Embedding> contains_anchored_last(const ColorPoset& poset, const Coloring& pattern,
                                                const Coloring& host) {
  check_compatible(poset, pattern, host);
  if (pattern.n() > host.n() || pattern.n() == 0) return std::nullopt;
  if (host.n() > 64) {
    Embedding f(pattern.n(), 0);
    if (reference_step(poset, pattern, host, f, 1, 1, true)) return f;
    return std::nullopt;
  }
  HostIndex index(poset, host);
  return MaskSearch(pattern, index, true).run();
}

Coloring restrict(const Coloring& k, std::span<const int> vertices) {
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (vertices[i] < 1 || vertices[i] > k.n()) throw std::out_of_range("vertex out of range");
    if (i > 0 && vertices[i] <= vertices[i - 1]) {
      throw std::invalid_argument("restriction vertices must be strictly increasing");
    }
  }
  const int m = static_cast<int>(vertices.size());
  std::vector<Color> e;
  e.reserve(static_cast<std::size_t>(m) * (m > 0 ? m - 1 : 0) / 2);
  for (int j = 2; j <= m; ++j)
    for (int i = 1; i < j; ++i) e.push_back(k.at(vertices[i - 1], vertices[j - 1]));
  return Coloring(m, k.colors(), std::move(e));
}

Coloring delete_vertex(const Coloring& k, int v) {
  std::vector<int> keep;
  for (int i = 1; i <= k.n(); ++i)
    if (i != v) keep.push_back(i);
  return restrict(k, keep);
}

Coloring reversal(const Coloring& k) {
  const int n = k.n();
  Coloring out(n, k.colors());
  for (int j = 2; j <= n; ++j)
    for (int i = 1; i < j; ++i) out.set(i, j, k.at(n - i + 1, n - j + 1));
  return out;
}

Coloring recolor(const Coloring& k, Color b) {
  if (b < 1 || b > k.colors()) throw std::invalid_argument("recolor: color out of range");
  std::vector<Color> e(k.edge_colors().begin(), k.edge_colors().end());
  for (Color& c : e) c = c == b ? 1 : 2;
  return Coloring(k.n(), 2, std::move(e));
}

Homogeneity is_homogeneous(const Coloring& k, std::span<const int> vertices) {
  if (vertices.size() <= 1) return {true, std::nullopt};
  Color c = k.at(vertices[0], vertices[1]);
  for (std::size_t j = 1; j < vertices.size(); ++j)
    for (std::size_t i = 0; i < j; ++i)
      if (k.at(vertices[i], vertices[j]) != c) return {false, std::nullopt};
  return {true, c};
}

}  // namespace colorideals
