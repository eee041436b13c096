// Classes whose atoms are edges: ordered graphs and k-uniform hypergraphs
// without isolated vertices counted by edges, and ordered multigraphs counted
// by edges with multiplicity. Atoms are ordered lexicographically (by the
// sorted vertex tuple, then by copy index for multigraphs); the color of two
// atoms is the way their vertex sets interleave.

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>

#include "common.hpp"

namespace colorideals::detail {

namespace {

using Edge = std::vector<int>;

/// Interleaving of two sorted k-sets read from the smallest vertex up:
/// 'A' only in the first, 'B' only in the second, 'C' in both.
std::string merge_word(const Edge& e1, const Edge& e2) {
  std::string w;
  std::size_t i = 0, j = 0;
  while (i < e1.size() || j < e2.size()) {
    if (j == e2.size() || (i < e1.size() && e1[i] < e2[j])) {
      w += 'A';
      ++i;
    } else if (i == e1.size() || e2[j] < e1[i]) {
      w += 'B';
      ++j;
    } else {
      w += 'C';
      ++i;
      ++j;
    }
  }
  return w;
}

/// All interleavings of two k-sets listed with the lexicographically smaller
/// set first; the identical pair only when `with_repeat`.
std::vector<std::string> pair_palette(int k, bool with_repeat) {
  std::vector<std::string> out;
  auto rec = [&](auto&& self, std::string& w, int a, int b) -> void {
    if (a == k && b == k) {
      auto first = w.find_first_not_of('C');
      bool identical = first == std::string::npos;
      if (identical ? with_repeat : w[first] == 'A') out.push_back(w);
      return;
    }
    if (a < k) {
      w += 'A';
      self(self, w, a + 1, b);
      w.pop_back();
    }
    if (b < k) {
      w += 'B';
      self(self, w, a, b + 1);
      w.pop_back();
    }
    if (a < k && b < k) {
      w += 'C';
      self(self, w, a + 1, b + 1);
      w.pop_back();
    }
  };
  std::string w;
  rec(rec, w, 0, 0);
  std::sort(out.begin(), out.end());
  return out;
}

std::string describe_word(const std::string& w) {
  std::string e1, e2;
  for (std::size_t p = 0; p < w.size(); ++p) {
    std::string v = std::to_string(p + 1);
    if (w[p] != 'B') e1 += (e1.empty() ? "" : ",") + v;
    if (w[p] != 'A') e2 += (e2.empty() ? "" : ",") + v;
  }
  return "{" + e1 + "}{" + e2 + "}";
}

/// Ground set size and lexicographically sorted atoms (repeated for
/// multiplicities).
struct EdgeAtoms {
  int n = 0;
  std::vector<Edge> atoms;
};

enum class EdgeKind { kGraph, kMultigraph, kHypergraph };

int find_root(std::vector<int>& parent, int x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

class EdgeClassAdapter final : public ClassAdapter {
 public:
  EdgeClassAdapter(EdgeKind kind, int k)
      : kind_(kind),
        k_(k),
        palette_(pair_palette(k, kind == EdgeKind::kMultigraph)),
        poset_(ColorPoset::discrete(static_cast<int>(palette_.size()))) {
    for (std::size_t c = 0; c < palette_.size(); ++c) color_of_[palette_[c]] = static_cast<Color>(c + 1);
  }

  std::string name() const override {
    switch (kind_) {
      case EdgeKind::kGraph: return "edge-graph";
      case EdgeKind::kMultigraph: return "multigraph";
      case EdgeKind::kHypergraph: return "hypergraph:" + std::to_string(k_);
    }
    return {};
  }
  const ColorPoset& poset() const override { return poset_; }
  int atom_count() const override { return 1; }
  int two_object_count() const override {
    if (kind_ == EdgeKind::kHypergraph) return static_cast<int>(hypergraph_two_object_formula(k_));
    return poset_.size();
  }
  std::vector<std::string> legend() const override {
    std::vector<std::string> out;
    for (const auto& w : palette_) out.push_back(describe_word(w));
    return out;
  }

  int size_of(const NativeObject& obj) const override {
    return static_cast<int>(to_atoms(obj).atoms.size());
  }
  void validate(const NativeObject& obj) const override { check(to_atoms(obj)); }

  Coloring encode(const NativeObject& obj) const override {
    EdgeAtoms a = to_atoms(obj);
    check(a);
    const int n = static_cast<int>(a.atoms.size());
    std::vector<Color> e;
    e.reserve(static_cast<std::size_t>(n) * (n > 0 ? n - 1 : 0) / 2);
    for (int j = 1; j < n; ++j)
      for (int i = 0; i < j; ++i) e.push_back(color_of_.at(merge_word(a.atoms[i], a.atoms[j])));
    return Coloring(n, poset_.size(), std::move(e));
  }

  std::optional<NativeObject> decode(const Coloring& kc) const override {
    if (kc.colors() != poset_.size()) return std::nullopt;
    const int n = kc.n();
    const int slots = n * k_;
    // slot s = atom * k + position within the atom
    std::vector<int> parent(slots);
    std::iota(parent.begin(), parent.end(), 0);
    std::vector<std::pair<int, int>> less;  // vertex of first slot < vertex of second
    for (int a = 0; a < n; ++a)
      for (int p = 0; p + 1 < k_; ++p) less.emplace_back(a * k_ + p, a * k_ + p + 1);
    for (int j = 1; j < n; ++j)
      for (int i = 0; i < j; ++i) {
        const std::string& w = palette_[kc.at(i + 1, j + 1) - 1];
        std::vector<int> order;  // one slot per vertex, increasing
        int pa = 0, pb = 0;
        for (char ch : w) {
          if (ch == 'A') {
            order.push_back(i * k_ + pa++);
          } else if (ch == 'B') {
            order.push_back(j * k_ + pb++);
          } else {
            int s = i * k_ + pa++, t = j * k_ + pb++;
            parent[find_root(parent, t)] = find_root(parent, s);
            order.push_back(s);
          }
        }
        for (std::size_t x = 0; x + 1 < order.size(); ++x) less.emplace_back(order[x], order[x + 1]);
      }
    // classes and their strict order
    std::vector<int> cls(slots, -1);
    int classes = 0;
    for (int s = 0; s < slots; ++s) {
      int r = find_root(parent, s);
      if (cls[r] < 0) cls[r] = classes++;
      cls[s] = cls[r];
    }
    for (int a = 0; a < n; ++a)
      for (int p = 0; p < k_; ++p)
        for (int q = p + 1; q < k_; ++q)
          if (cls[a * k_ + p] == cls[a * k_ + q]) return std::nullopt;
    std::vector<char> lt(static_cast<std::size_t>(classes) * classes, 0);
    for (auto [s, t] : less) {
      int cs = cls[s], ct = cls[t];
      if (cs == ct) return std::nullopt;
      lt[cs * classes + ct] = 1;
    }
    // transitive closure, then require a strict total order
    for (int m = 0; m < classes; ++m)
      for (int x = 0; x < classes; ++x)
        if (lt[x * classes + m])
          for (int y = 0; y < classes; ++y)
            if (lt[m * classes + y]) lt[x * classes + y] = 1;
    std::vector<int> rank(classes, 0);
    for (int x = 0; x < classes; ++x) {
      if (lt[x * classes + x]) return std::nullopt;
      for (int y = 0; y < classes; ++y) {
        if (x == y) continue;
        if (!lt[x * classes + y] && !lt[y * classes + x]) return std::nullopt;
        if (lt[y * classes + x]) ++rank[x];
      }
    }
    EdgeAtoms out{classes, {}};
    for (int a = 0; a < n; ++a) {
      Edge e(k_);
      for (int p = 0; p < k_; ++p) e[p] = rank[cls[a * k_ + p]] + 1;
      std::sort(e.begin(), e.end());
      out.atoms.push_back(e);
    }
    std::sort(out.atoms.begin(), out.atoms.end());
    if (kind_ != EdgeKind::kMultigraph &&
        std::adjacent_find(out.atoms.begin(), out.atoms.end()) != out.atoms.end()) {
      return std::nullopt;
    }
    return from_atoms(out);
  }

  bool native_contains(const NativeObject& small, const NativeObject& large) const override {
    EdgeAtoms s = to_atoms(small), l = to_atoms(large);
    check(s);
    check(l);
    if (s.atoms.size() > l.atoms.size()) return false;
    // multiplicity of each distinct edge of the large object
    std::map<Edge, int> large_mult;
    for (const auto& e : l.atoms) ++large_mult[e];
    std::map<Edge, int> small_mult;
    for (const auto& e : s.atoms) ++small_mult[e];
    return any_subset(l.n, s.n, [&](const std::vector<int>& f) {
      for (const auto& [e, mult] : small_mult) {
        Edge img(e.size());
        for (std::size_t p = 0; p < e.size(); ++p) img[p] = f[e[p] - 1];
        auto it = large_mult.find(img);
        if (it == large_mult.end() || it->second < mult) return false;
      }
      return true;
    });
  }

  std::vector<NativeObject> generate_all(int n) const override {
    check_size(n, max_generate_size());
    std::vector<NativeObject> out;
    if (n == 0) {
      out.push_back(from_atoms(EdgeAtoms{}));
      return out;
    }
    for (int v = k_; v <= k_ * n; ++v) {
      std::vector<Edge> all;
      any_subset(v, k_, [&](const std::vector<int>& e) {
        all.push_back(e);
        return false;
      });
      const std::uint64_t full = v == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << v) - 1;
      std::vector<Edge> chosen;
      auto rec = [&](auto&& self, std::size_t start, int remaining, std::uint64_t covered) -> void {
        if (remaining == 0) {
          if (covered == full) out.push_back(from_atoms(EdgeAtoms{v, chosen}));
          return;
        }
        int uncovered = v - std::popcount(covered);
        if (uncovered > k_ * remaining) return;
        int first_uncovered = std::countr_one(covered) + 1;
        for (std::size_t i = start; i < all.size(); ++i) {
          const Edge& e = all[i];
          if (first_uncovered <= v && e[0] > first_uncovered) break;
          std::uint64_t mask = 0;
          for (int x : e) mask |= std::uint64_t{1} << (x - 1);
          int max_copies = kind_ == EdgeKind::kMultigraph ? remaining : 1;
          for (int c = 1; c <= max_copies; ++c) {
            chosen.push_back(e);
            self(self, i + 1, remaining - c, covered | mask);
          }
          for (int c = 1; c <= max_copies; ++c) chosen.pop_back();
        }
      };
      rec(rec, 0, n, 0);
    }
    return out;
  }
  int max_generate_size() const override {
    if (kind_ == EdgeKind::kHypergraph && k_ == 3) return 4;
    return 5;
  }

  NativeObject parse(std::string_view s) const override {
    EdgeAtoms a;
    if (!s.empty()) {
      for (auto part : split(s, ',')) {
        int copies = 1;
        auto x = part.find('x');
        if (x != std::string_view::npos) {
          if (kind_ != EdgeKind::kMultigraph) throw ParseError("multiplicity only for multigraphs");
          copies = to_int(part.substr(x + 1), "multiplicity");
          if (copies < 1) throw ParseError("multiplicity must be positive");
          part = part.substr(0, x);
        }
        Edge e;
        for (auto v : split(part, '-')) e.push_back(to_int(v, "vertex"));
        std::sort(e.begin(), e.end());
        for (int c = 0; c < copies; ++c) a.atoms.push_back(e);
        for (int v : e) a.n = std::max(a.n, v);
      }
    }
    std::sort(a.atoms.begin(), a.atoms.end());
    try {
      check(a);
    } catch (const std::invalid_argument& e) {
      throw ParseError(name() + " literal: " + e.what());
    }
    return from_atoms(a);
  }

  std::string format(const NativeObject& obj) const override {
    EdgeAtoms a = to_atoms(obj);
    std::string s;
    for (std::size_t i = 0; i < a.atoms.size();) {
      std::size_t j = i;
      while (j < a.atoms.size() && a.atoms[j] == a.atoms[i]) ++j;
      if (!s.empty()) s += ',';
      for (std::size_t p = 0; p < a.atoms[i].size(); ++p) {
        if (p) s += '-';
        s += std::to_string(a.atoms[i][p]);
      }
      if (j - i > 1) s += "x" + std::to_string(j - i);
      i = j;
    }
    return s;
  }

 private:
  EdgeAtoms to_atoms(const NativeObject& obj) const {
    EdgeAtoms a;
    switch (kind_) {
      case EdgeKind::kGraph: {
        const auto& g = as<OrderedGraph>(obj, "edge-graph");
        a.n = g.n;
        for (auto [u, v] : g.edges) a.atoms.push_back({u, v});
        break;
      }
      case EdgeKind::kMultigraph: {
        const auto& g = as<Multigraph>(obj, "multigraph");
        a.n = g.n;
        for (const auto& e : g.edges)
          for (int c = 0; c < e.multiplicity; ++c) a.atoms.push_back({e.a, e.b});
        break;
      }
      case EdgeKind::kHypergraph: {
        const auto& h = as<Hypergraph>(obj, "hypergraph");
        if (h.k != k_) throw std::invalid_argument("hypergraph uniformity mismatch");
        a.n = h.n;
        a.atoms = h.edges;
        break;
      }
    }
    return a;
  }

  NativeObject from_atoms(const EdgeAtoms& a) const {
    switch (kind_) {
      case EdgeKind::kGraph: {
        OrderedGraph g{a.n, {}};
        for (const auto& e : a.atoms) g.edges.emplace_back(e[0], e[1]);
        return g;
      }
      case EdgeKind::kMultigraph: {
        Multigraph g{a.n, {}};
        for (const auto& e : a.atoms) {
          if (!g.edges.empty() && g.edges.back().a == e[0] && g.edges.back().b == e[1]) {
            ++g.edges.back().multiplicity;
          } else {
            g.edges.push_back({e[0], e[1], 1});
          }
        }
        return g;
      }
      case EdgeKind::kHypergraph:
        return Hypergraph{a.n, k_, a.atoms};
    }
    return {};
  }

  void check(const EdgeAtoms& a) const {
    std::vector<bool> used(a.n + 1, false);
    for (std::size_t i = 0; i < a.atoms.size(); ++i) {
      const Edge& e = a.atoms[i];
      if (static_cast<int>(e.size()) != k_) throw std::invalid_argument("edge has wrong arity");
      for (std::size_t p = 0; p < e.size(); ++p) {
        if (e[p] < 1 || e[p] > a.n) throw std::invalid_argument("vertex out of range");
        if (p && e[p] <= e[p - 1]) throw std::invalid_argument("edge vertices not increasing");
        used[e[p]] = true;
      }
      if (i && a.atoms[i] < a.atoms[i - 1]) throw std::invalid_argument("edges not sorted");
      if (i && a.atoms[i] == a.atoms[i - 1] && kind_ != EdgeKind::kMultigraph) {
        throw std::invalid_argument("repeated edge");
      }
    }
    for (int v = 1; v <= a.n; ++v)
      if (!used[v]) throw std::invalid_argument("isolated vertex " + std::to_string(v));
  }

  EdgeKind kind_;
  int k_;
  std::vector<std::string> palette_;
  ColorPoset poset_;
  std::map<std::string, Color> color_of_;
};

}  // namespace

AdapterPtr make_edge_graph_adapter() {
  return std::make_shared<EdgeClassAdapter>(EdgeKind::kGraph, 2);
}
AdapterPtr make_multigraph_adapter() {
  return std::make_shared<EdgeClassAdapter>(EdgeKind::kMultigraph, 2);
}
AdapterPtr make_hypergraph_adapter(int k) {
  if (k != 2 && k != 3) throw std::invalid_argument("hypergraph adapter supports k = 2 and k = 3");
  return std::make_shared<EdgeClassAdapter>(EdgeKind::kHypergraph, k);
}

}  // namespace colorideals::detail
