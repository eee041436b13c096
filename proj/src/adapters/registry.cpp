#include "common.hpp"

namespace colorideals {

bool ClassAdapter::in_image(const Coloring& k) const {
  if (k.colors() != poset().size()) return false;
  if (universal_image()) return true;
  auto obj = decode(k);
  if (!obj) return false;
  try {
    return encode(*obj) == k;
  } catch (const std::invalid_argument&) {
    return false;
  }
}

long long hypergraph_two_object_formula(int k) {
  auto binom = [](long long n, long long r) -> long long {
    if (r < 0 || r > n) return 0;
    long long v = 1;
    for (long long i = 1; i <= r; ++i) v = v * (n - r + i) / i;
    return v;
  };
  // twice the sum, to keep the half-integer terms exact
  long long twice = 0;
  for (int m = 0; m <= k - 1; ++m) {
    twice += binom(k - 1, m) * (2 * binom(2 * k - m - 1, k - 1) + binom(2 * k - m - 2, k - 1));
  }
  return (twice - 1) / 2;
}

AdapterPtr find_adapter(std::string_view name) {
  using namespace detail;
  if (name == "permutation") return make_permutation_adapter();
  if (name == "signed-permutation") return make_signed_permutation_adapter();
  if (name == "ordered-word") return make_ordered_word_adapter();
  if (name == "set-partition") return make_set_partition_adapter();
  if (name == "graph-induced") return make_graph_induced_adapter();
  if (name == "graph-subgraph") return make_graph_subgraph_adapter();
  if (name == "edge-graph") return make_edge_graph_adapter();
  if (name == "multigraph") return make_multigraph_adapter();
  if (name == "word") return make_word_adapter(2);
  auto suffix = [&](std::string_view prefix) -> std::optional<int> {
    if (name.substr(0, prefix.size()) != prefix) return std::nullopt;
    return to_int(name.substr(prefix.size()), "adapter parameter");
  };
  try {
    if (auto k = suffix("hypergraph:")) return make_hypergraph_adapter(*k);
    if (auto a = suffix("word:")) return make_word_adapter(*a);
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("adapter '") + std::string(name) + "': " + e.what());
  }
  throw ParseError("unknown adapter '" + std::string(name) + "'");
}

std::vector<AdapterPtr> all_adapters() {
  using namespace detail;
  return {make_permutation_adapter(),    make_signed_permutation_adapter(),
          make_ordered_word_adapter(),   make_set_partition_adapter(),
          make_graph_induced_adapter(),  make_graph_subgraph_adapter(),
          make_edge_graph_adapter(),     make_multigraph_adapter(),
          make_hypergraph_adapter(2),    make_hypergraph_adapter(3),
          make_word_adapter(2)};
}

}  // namespace colorideals
