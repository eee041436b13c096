#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "colorideals/coloring.hpp"
#include "colorideals/poset.hpp"

namespace colorideals {

// Native structures of the supported binary classes.

struct Permutation {
  std::vector<int> values;  // one-line notation, 1-based
  friend auto operator<=>(const Permutation&, const Permutation&) = default;
};

struct SignedPermutation {
  std::vector<int> values;
  std::vector<bool> negative;  // sign of each position
  friend auto operator<=>(const SignedPermutation&, const SignedPermutation&) = default;
};

/// Word b_1..b_n whose set of letters is [m] for some m.
struct OrderedWord {
  std::vector<int> letters;
  friend auto operator<=>(const OrderedWord&, const OrderedWord&) = default;
};

/// Restricted growth string: block[i] is the 1-based block index of i+1.
struct SetPartition {
  std::vector<int> block;
  friend auto operator<=>(const SetPartition&, const SetPartition&) = default;
};

/// Graph on [n]; edges (a < b) sorted lexicographically.
struct OrderedGraph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;
  friend auto operator<=>(const OrderedGraph&, const OrderedGraph&) = default;
};

struct MultiEdge {
  int a = 0;
  int b = 0;
  int multiplicity = 0;
  friend auto operator<=>(const MultiEdge&, const MultiEdge&) = default;
};

/// Multigraph on [n] without isolated vertices; edges sorted, multiplicity >= 1.
struct Multigraph {
  int n = 0;
  std::vector<MultiEdge> edges;
  friend auto operator<=>(const Multigraph&, const Multigraph&) = default;
};

/// k-uniform hypergraph on [n]; each edge sorted, edges sorted lexicographically.
struct Hypergraph {
  int n = 0;
  int k = 2;
  std::vector<std::vector<int>> edges;
  friend auto operator<=>(const Hypergraph&, const Hypergraph&) = default;
};

/// Word over the alphabet {0, .., alphabet-1}.
struct Word {
  int alphabet = 2;
  std::vector<int> letters;
  friend auto operator<=>(const Word&, const Word&) = default;
};

using NativeObject = std::variant<Permutation, SignedPermutation, OrderedWord, SetPartition,
                                  OrderedGraph, Multigraph, Hypergraph, Word>;

/// A binary class of objects together with its size-preserving encoding into
/// colorings over the poset of its two-atom objects.
class ClassAdapter {
 public:
  virtual ~ClassAdapter() = default;

  virtual std::string name() const = 0;
  virtual const ColorPoset& poset() const = 0;
  /// Number of size-1 objects.
  virtual int atom_count() const = 0;
  /// Number of size-2 objects (the number of colors).
  virtual int two_object_count() const { return poset().size(); }
  /// legend()[c-1] describes color c.
  virtual std::vector<std::string> legend() const = 0;

  virtual int size_of(const NativeObject& obj) const = 0;
  /// Throws std::invalid_argument on malformed objects.
  virtual void validate(const NativeObject& obj) const = 0;
  virtual Coloring encode(const NativeObject& obj) const = 0;
  /// Candidate preimage of a coloring; callers must re-encode to confirm.
  virtual std::optional<NativeObject> decode(const Coloring& k) const = 0;
  /// Containment from the native definition, independent of encode.
  virtual bool native_contains(const NativeObject& small, const NativeObject& large) const = 0;
  /// All objects of size n in increasing order. Throws std::length_error
  /// beyond max_generate_size().
  virtual std::vector<NativeObject> generate_all(int n) const = 0;
  virtual int max_generate_size() const = 0;

  virtual NativeObject parse(std::string_view literal) const = 0;
  virtual std::string format(const NativeObject& obj) const = 0;

  /// True when every coloring over poset() is an encoding.
  virtual bool universal_image() const { return false; }

  /// Whether k is the encoding of some object of the class.
  bool in_image(const Coloring& k) const;
};

using AdapterPtr = std::shared_ptr<const ClassAdapter>;

/// Names: permutation, signed-permutation, ordered-word, set-partition,
/// graph-induced, graph-subgraph, edge-graph, multigraph, hypergraph:<k>,
/// word[:<alphabet size>].
AdapterPtr find_adapter(std::string_view name);

/// The default roster: the ten classes, hypergraphs listed for k = 2 and 3.
std::vector<AdapterPtr> all_adapters();

/// Closed-form count of two-edge k-uniform hypergraphs without isolated
/// vertices.
long long hypergraph_two_object_formula(int k);

}  // namespace colorideals
