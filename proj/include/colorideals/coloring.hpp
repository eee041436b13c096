#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "colorideals/poset.hpp"

namespace colorideals {

/// An edge-colored complete graph (n, chi) with colors 1..l.
///
/// Edge colors are kept in a flat array in colex order of {i < j}
/// (rank (j-1)(j-2)/2 + (i-1)), so appending vertex n+1 appends its n
/// edges at the end of the array.
class Coloring {
 public:
  Coloring() = default;
  Coloring(int n, int colors, Color fill = 1);
  Coloring(int n, int colors, std::vector<Color> colex_edges);

  int n() const { return n_; }
  int colors() const { return colors_; }
  std::size_t edge_count() const { return edges_.size(); }

  /// Color of {i, j}, 1-based, i != j in either order.
  Color at(int i, int j) const { return edges_[edge_index(i, j)]; }
  void set(int i, int j, Color c);

  std::span<const Color> edge_colors() const { return edges_; }

  static std::size_t edge_index(int i, int j) {
    if (i > j) std::swap(i, j);
    return static_cast<std::size_t>(j - 1) * (j - 2) / 2 + static_cast<std::size_t>(i - 1);
  }

  /// Adds vertex n+1; new_edges[i-1] is the color of {i, n+1}.
  Coloring extended(std::span<const Color> new_edges) const;

  /// Canonical byte key (n, then edge colors).
  std::string key() const;

  friend bool operator==(const Coloring&, const Coloring&) = default;
  friend std::strong_ordering operator<=>(const Coloring& a, const Coloring& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    if (auto c = a.colors_ <=> b.colors_; c != 0) return c;
    return a.edges_ <=> b.edges_;
  }

 private:
  int n_ = 0;
  int colors_ = 1;
  std::vector<Color> edges_;
};

/// f[k-1] is the host vertex assigned to pattern vertex k.
using Embedding = std::vector<int>;

/// Increasing map witnessing pattern <= host (edgewise <=_P), if any.
std::optional<Embedding> contains(const ColorPoset& poset, const Coloring& pattern,
                                  const Coloring& host);

/// Like `contains`, but the last pattern vertex must map to the last host
/// vertex. Used to test only the embeddings that involve a freshly appended
/// vertex.
std::optional<Embedding> contains_anchored_last(const ColorPoset& poset, const Coloring& pattern,
                                                const Coloring& host);

/// Plain backtracking without bit tricks; kept as an independent reference.
std::optional<Embedding> contains_reference(const ColorPoset& poset, const Coloring& pattern,
                                            const Coloring& host);

/// K|B relabeled along the increasing bijection B -> [|B|]. B must be a
/// strictly increasing list of vertices of K.
Coloring restrict(const Coloring& k, std::span<const int> vertices);

/// K with vertex v removed.
Coloring delete_vertex(const Coloring& k, int v);

Coloring reversal(const Coloring& k);

/// Two-colored image: edge -> 1 iff its color is b, else 2.
Coloring recolor(const Coloring& k, Color b);

struct Homogeneity {
  bool homogeneous = false;
  /// Common color; absent for |A| <= 1 (vacuously homogeneous) or when not
  /// homogeneous.
  std::optional<Color> color;
};

Homogeneity is_homogeneous(const Coloring& k, std::span<const int> vertices);

/// `n; default=c; i,j=c; ...` with only non-default edges, lexicographic
/// edge order. The default is the most frequent color (smallest on ties).
std::string format_coloring(const Coloring& k);
/// Parses the text literal; `default=` may be omitted (then 1).
Coloring parse_coloring(std::string_view text, int colors);

/// `{ "n": n, "default": c, "edges": [[i,j,c], ...] }` serialized compactly.
std::string coloring_to_json(const Coloring& k);
Coloring coloring_from_json(std::string_view json, int colors);

}  // namespace colorideals
