#pragma once

#include <cctype>
#include <charconv>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "colorideals/adapters.hpp"
#include "colorideals/errors.hpp"

namespace colorideals::detail {

/// Calls fn(subset) for each increasing m-subset of [n] (1-based) until fn
/// returns true. Returns whether fn ever returned true.
template <typename Fn>
bool any_subset(int n, int m, Fn&& fn) {
  if (m > n || m < 0) return false;
  std::vector<int> s(m);
  for (int i = 0; i < m; ++i) s[i] = i + 1;
  while (true) {
    if (fn(static_cast<const std::vector<int>&>(s))) return true;
    int i = m - 1;
    while (i >= 0 && s[i] == n - m + i + 1) --i;
    if (i < 0) return false;
    ++s[i];
    for (int j = i + 1; j < m; ++j) s[j] = s[j - 1] + 1;
  }
}

inline std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      out.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  return out;
}

inline int to_int(std::string_view s, std::string_view what) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  int v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || p != s.data() + s.size()) {
    throw ParseError("bad " + std::string(what) + " '" + std::string(s) + "'");
  }
  return v;
}

/// "231" (single digits) or "2,3,1".
inline std::vector<int> parse_int_sequence(std::string_view s) {
  std::vector<int> out;
  if (s.find(',') != std::string_view::npos) {
    for (auto part : split(s, ',')) out.push_back(to_int(part, "entry"));
    return out;
  }
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw ParseError(std::string("bad digit '") + c + "'");
    }
    out.push_back(c - '0');
  }
  return out;
}

inline std::string format_int_sequence(const std::vector<int>& v) {
  bool wide = false;
  for (int x : v) wide |= x > 9;
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (wide && i > 0) s += ',';
    s += std::to_string(v[i]);
  }
  return s;
}

template <typename T>
const T& as(const NativeObject& obj, const char* adapter) {
  if (const T* p = std::get_if<T>(&obj)) return *p;
  throw std::invalid_argument(std::string("object does not belong to adapter ") + adapter);
}

inline void check_size(int n, int bound) {
  if (n < 0) throw std::invalid_argument("negative size");
  if (n > bound) {
    throw std::length_error("generation size " + std::to_string(n) + " exceeds desk bound " +
                            std::to_string(bound));
  }
}

AdapterPtr make_permutation_adapter();
AdapterPtr make_signed_permutation_adapter();
AdapterPtr make_ordered_word_adapter();
AdapterPtr make_set_partition_adapter();
AdapterPtr make_graph_induced_adapter();
AdapterPtr make_graph_subgraph_adapter();
AdapterPtr make_word_adapter(int alphabet);
AdapterPtr make_edge_graph_adapter();
AdapterPtr make_multigraph_adapter();
AdapterPtr make_hypergraph_adapter(int k);

}  // namespace colorideals::detail
