#include <array>
#include <cctype>
#include <charconv>
#include <sstream>

#include <json.hpp>

#include "colorideals/coloring.hpp"
#include "colorideals/errors.hpp"

namespace colorideals {

namespace {

Color default_color(const Coloring& k) {
  std::array<int, kMaxColors + 1> freq{};
  for (Color c : k.edge_colors()) ++freq[c];
  Color best = 1;
  for (int c = 2; c <= k.colors(); ++c)
    if (freq[c] > freq[best]) best = static_cast<Color>(c);
  return best;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

int parse_int(std::string_view s, const char* what) {
  s = trim(s);
  int v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || p != s.data() + s.size()) {
    throw ParseError(std::string("coloring literal: bad ") + what + " '" + std::string(s) + "'");
  }
  return v;
}

Coloring build(int n, int colors, int def, const std::vector<std::array<int, 3>>& edges) {
  if (n < 0 || n > 255) throw ParseError("coloring literal: vertex count out of range");
  if (def < 1 || def > colors) throw ParseError("coloring literal: default color out of range");
  Coloring k(n, colors, static_cast<Color>(def));
  std::vector<bool> seen(k.edge_count(), false);
  for (auto [i, j, c] : edges) {
    if (i < 1 || j < 1 || i > n || j > n || i == j) {
      throw ParseError("coloring literal: edge {" + std::to_string(i) + "," + std::to_string(j) +
                       "} out of range");
    }
    if (c < 1 || c > colors) throw ParseError("coloring literal: color out of range");
    auto idx = Coloring::edge_index(i, j);
    if (seen[idx]) throw ParseError("coloring literal: duplicate edge");
    seen[idx] = true;
    k.set(i, j, static_cast<Color>(c));
  }
  return k;
}

}  // namespace

std::string format_coloring(const Coloring& k) {
  std::ostringstream os;
  Color def = default_color(k);
  os << k.n() << "; default=" << int{def};
  for (int i = 1; i <= k.n(); ++i)
    for (int j = i + 1; j <= k.n(); ++j)
      if (k.at(i, j) != def) os << "; " << i << ',' << j << '=' << int{k.at(i, j)};
  return os.str();
}

Coloring parse_coloring(std::string_view text, int colors) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == ';') {
      parts.push_back(trim(text.substr(start, i - start)));
      start = i + 1;
    }
  }
  if (parts.empty() || parts[0].empty()) throw ParseError("coloring literal: missing vertex count");
  int n = parse_int(parts[0], "vertex count");
  int def = 1;
  bool have_default = false;
  std::vector<std::array<int, 3>> edges;
  for (std::size_t p = 1; p < parts.size(); ++p) {
    auto part = parts[p];
    if (part.empty()) continue;
    auto eq = part.find('=');
    if (eq == std::string_view::npos) throw ParseError("coloring literal: expected '='");
    auto lhs = trim(part.substr(0, eq));
    int rhs = parse_int(part.substr(eq + 1), "color");
    if (lhs == "default") {
      if (have_default) throw ParseError("coloring literal: duplicate default");
      have_default = true;
      def = rhs;
      continue;
    }
    auto comma = lhs.find(',');
    if (comma == std::string_view::npos) throw ParseError("coloring literal: expected 'i,j'");
    edges.push_back({parse_int(lhs.substr(0, comma), "vertex"),
                     parse_int(lhs.substr(comma + 1), "vertex"), rhs});
  }
  return build(n, colors, def, edges);
}

std::string coloring_to_json(const Coloring& k) {
  nlohmann::ordered_json j;
  Color def = default_color(k);
  j["n"] = k.n();
  j["default"] = def;
  j["edges"] = nlohmann::ordered_json::array();
  for (int a = 1; a <= k.n(); ++a)
    for (int b = a + 1; b <= k.n(); ++b)
      if (k.at(a, b) != def) j["edges"].push_back({a, b, int{k.at(a, b)}});
  return j.dump();
}

Coloring coloring_from_json(std::string_view json, int colors) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json);
    std::vector<std::array<int, 3>> edges;
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 3) throw ParseError("coloring json: edge must be [i,j,c]");
      edges.push_back({e[0].get<int>(), e[1].get<int>(), e[2].get<int>()});
    }
    return build(j.at("n").get<int>(), colors, j.value("default", 1), edges);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("coloring json: ") + e.what());
  }
}

}  // namespace colorideals
