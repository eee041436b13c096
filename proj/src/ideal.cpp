#include "colorideals/ideal.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cstdio>
#include <mutex>
#include <thread>

#include <json.hpp>

#include "colorideals/version.hpp"

namespace colorideals {

namespace {

int parse_color(std::string_view s, int colors, std::string_view id) {
  int c = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), c);
  if (s.empty() || ec != std::errc{} || p != s.data() + s.size() || c < 1 || c > colors) {
    throw ParseError("bad color in predicate '" + std::string(id) + "'");
  }
  return c;
}

std::size_t count_color(const Coloring& k, Color c) {
  auto e = k.edge_colors();
  return static_cast<std::size_t>(std::count(e.begin(), e.end(), c));
}

}  // namespace

Predicate builtin_predicate(std::string_view id, int colors) {
  const std::string name(id);
  if (id == "all") return {name, [](const Coloring&) { return true; }};
  if (id == "mono") {
    return {name, [](const Coloring& k) {
              auto e = k.edge_colors();
              return std::adjacent_find(e.begin(), e.end(), std::not_equal_to<>()) == e.end();
            }};
  }
  auto starts = [&](std::string_view p) { return id.substr(0, p.size()) == p; };
  if (starts("at-most-one:")) {
    Color c = static_cast<Color>(parse_color(id.substr(12), colors, id));
    return {name, [c](const Coloring& k) { return count_color(k, c) <= 1; }};
  }
  if (starts("exactly-one:")) {
    Color c = static_cast<Color>(parse_color(id.substr(12), colors, id));
    return {name, [c](const Coloring& k) { return k.n() < 2 || count_color(k, c) == 1; }};
  }
  if (starts("at-most:")) {
    auto rest = id.substr(8);
    auto colon = rest.find(':');
    if (colon == std::string_view::npos) throw ParseError("bad predicate '" + name + "'");
    int bound = 0;
    auto b = rest.substr(0, colon);
    auto [p, ec] = std::from_chars(b.data(), b.data() + b.size(), bound);
    if (b.empty() || ec != std::errc{} || p != b.data() + b.size() || bound < 0) {
      throw ParseError("bad bound in predicate '" + name + "'");
    }
    Color c = static_cast<Color>(parse_color(rest.substr(colon + 1), colors, id));
    return {name, [c, bound](const Coloring& k) {
              return count_color(k, c) <= static_cast<std::size_t>(bound);
            }};
  }
  throw ParseError("unknown predicate '" + name + "'");
}

std::vector<Coloring> minimal_basis(const ColorPoset& poset, std::vector<Coloring> basis) {
  for (const auto& b : basis) {
    if (b.colors() != poset.size()) {
      throw std::invalid_argument("basis coloring has " + std::to_string(b.colors()) +
                                  " colors, poset has " + std::to_string(poset.size()));
    }
  }
  std::sort(basis.begin(), basis.end());
  basis.erase(std::unique(basis.begin(), basis.end()), basis.end());
  std::vector<Coloring> out;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
      redundant = j != i && basis[j].n() <= basis[i].n() && contains(poset, basis[j], basis[i]);
    }
    if (!redundant) out.push_back(basis[i]);
  }
  return out;
}

IdealSpec::IdealSpec(ColorPoset poset, std::vector<Coloring> basis, AdapterPtr adapter)
    : poset_(std::move(poset)),
      basis_(minimal_basis(poset_, std::move(basis))),
      adapter_(std::move(adapter)) {
  if (adapter_ && !(adapter_->poset() == poset_)) {
    throw std::invalid_argument("adapter poset differs from the ideal's poset");
  }
}

IdealSpec::IdealSpec(ColorPoset poset, Predicate predicate, AdapterPtr adapter)
    : poset_(std::move(poset)), predicate_(std::move(predicate)), adapter_(std::move(adapter)) {
  if (!predicate_->test) throw std::invalid_argument("empty predicate");
  if (adapter_ && !(adapter_->poset() == poset_)) {
    throw std::invalid_argument("adapter poset differs from the ideal's poset");
  }
}

IdealSpec IdealSpec::from_adapter(AdapterPtr adapter, const std::vector<NativeObject>& avoid) {
  if (!adapter) throw std::invalid_argument("null adapter");
  std::vector<Coloring> basis;
  for (const auto& obj : avoid) basis.push_back(adapter->encode(obj));
  ColorPoset p = adapter->poset();
  return IdealSpec(p, std::move(basis), std::move(adapter));
}

bool IdealSpec::contains(const Coloring& k) const {
  if (k.colors() != colors()) return false;
  if (adapter_ && !adapter_->in_image(k)) return false;
  if (predicate_) return predicate_->test(k);
  for (const auto& b : basis_) {
    if (b.n() <= k.n() && colorideals::contains(poset_, b, k)) return false;
  }
  return true;
}

bool IdealSpec::admits_extension(const Coloring& k) const {
  if (adapter_ && !adapter_->in_image(k)) return false;
  if (predicate_) return predicate_->test(k);
  for (const auto& b : basis_) {
    if (b.n() <= k.n() && contains_anchored_last(poset_, b, k)) return false;
  }
  return true;
}

std::string IdealSpec::canonical() const {
  nlohmann::ordered_json j;
  j["poset"] = {{"size", poset_.size()}, {"lt", poset_.strict_pairs()}};
  if (predicate_) {
    j["predicate"] = predicate_->id;
  } else {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& b : basis_) arr.push_back(format_coloring(b));
    j["basis"] = arr;
  }
  if (adapter_) {
    j["adapter"] = adapter_->name();
    j["legend"] = adapter_->legend();
  } else {
    j["adapter"] = nullptr;
  }
  j["legend_version"] = kLegendVersion;
  return j.dump();
}

std::string IdealSpec::fingerprint() const {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : canonical()) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

namespace {

/// Children of one parent, in increasing order of the new edge colors read
/// from vertex 1 upward. Basis and image checks run on every prefix
/// restriction K|[1..i] + new vertex, which is sound because both are
/// closed under restriction. Predicates are only evaluated on full children.
class Extender {
 public:
  Extender(const IdealSpec& spec, const Coloring& parent) : spec_(spec), parent_(parent) {}

  void run(std::vector<Coloring>& out) {
    out_ = &out;
    fresh_.assign(static_cast<std::size_t>(parent_.n()), 1);
    descend(0);
  }

 private:
  void descend(int i) {
    const int m = parent_.n();
    if (i == m) {
      Coloring child = parent_.extended(fresh_);
      if (spec_.admits_extension(child)) out_->push_back(std::move(child));
      return;
    }
    for (int c = 1; c <= spec_.colors(); ++c) {
      fresh_[i] = static_cast<Color>(c);
      if (i + 1 < m && !prefix_ok(i + 1)) continue;
      descend(i + 1);
    }
  }

  bool prefix_ok(int i) const {
    if (spec_.predicate() && !spec_.adapter()) return true;
    auto e = parent_.edge_colors();
    std::vector<Color> colors(e.begin(), e.begin() + static_cast<std::ptrdiff_t>(i) * (i - 1) / 2);
    colors.insert(colors.end(), fresh_.begin(), fresh_.begin() + i);
    Coloring k(i + 1, spec_.colors(), std::move(colors));
    if (spec_.adapter() && !spec_.adapter()->in_image(k)) return false;
    if (spec_.predicate()) return true;
    for (const auto& b : spec_.basis()) {
      if (b.n() <= k.n() && contains_anchored_last(spec_.poset(), b, k)) return false;
    }
    return true;
  }

  const IdealSpec& spec_;
  const Coloring& parent_;
  std::vector<Color> fresh_;
  std::vector<Coloring>* out_ = nullptr;
};

int worker_count(const Budget& budget, std::size_t jobs) {
  int w = budget.workers > 0 ? budget.workers
                             : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  return static_cast<int>(std::min<std::size_t>(static_cast<std::size_t>(w), std::max<std::size_t>(jobs, 1)));
}

}  // namespace

Level enumerate_level(const IdealSpec& spec, const Level& previous, int n, const Budget& budget) {
  std::optional<std::chrono::steady_clock::time_point> deadline;
  if (budget.max_time.count() > 0) deadline = std::chrono::steady_clock::now() + budget.max_time;
  return enumerate_level(spec, previous, n, budget, deadline);
}

Level enumerate_level(const IdealSpec& spec, const Level& previous, int n, const Budget& budget,
                      std::optional<std::chrono::steady_clock::time_point> deadline) {
  if (n < 0) throw std::invalid_argument("negative level");
  if (n == 0) {
    Coloring empty(0, spec.colors());
    return spec.contains(empty) ? Level{empty} : Level{};
  }
  for (const auto& p : previous) {
    if (p.n() != n - 1) throw std::invalid_argument("previous level has the wrong size");
  }

  // Parents are split into contiguous chunks; concatenating per-chunk output
  // in chunk order and sorting makes the result independent of worker count.
  const std::size_t parents = previous.size();
  const int workers = worker_count(budget, parents);
  const std::size_t chunks = std::min<std::size_t>(parents, static_cast<std::size_t>(workers) * 8);
  std::vector<std::vector<Coloring>> parts(chunks);
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> produced{0};
  std::atomic<bool> stop{false};
  std::string reason;
  std::mutex reason_mutex;

  auto fail = [&](std::string why) {
    std::lock_guard lock(reason_mutex);
    if (!stop.exchange(true)) reason = std::move(why);
  };

  auto work = [&] {
    while (!stop) {
      std::size_t c = next++;
      if (c >= chunks) return;
      std::size_t lo = parents * c / chunks;
      std::size_t hi = parents * (c + 1) / chunks;
      for (std::size_t i = lo; i < hi && !stop; ++i) {
        std::size_t before = parts[c].size();
        Extender(spec, previous[i]).run(parts[c]);
        if (produced += parts[c].size() - before; produced > budget.max_members) {
          fail("level " + std::to_string(n) + " exceeds " + std::to_string(budget.max_members) +
               " members");
        }
        if (deadline && std::chrono::steady_clock::now() > *deadline) {
          fail("time budget exhausted at level " + std::to_string(n));
        }
      }
    }
  };

  if (workers <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  if (stop) throw BudgetExceeded(reason);

  Level out;
  out.reserve(produced);
  for (auto& part : parts) std::move(part.begin(), part.end(), std::back_inserter(out));
  std::sort(out.begin(), out.end());
  return out;
}

SequenceRecord count_sequence(const IdealSpec& spec, int N, const Budget& budget,
                              bool keep_levels) {
  if (N < 0) throw std::invalid_argument("negative N");
  SequenceRecord rec;
  rec.fingerprint = spec.fingerprint();
  if (keep_levels) rec.levels.emplace();
  std::optional<std::chrono::steady_clock::time_point> deadline;
  if (budget.max_time.count() > 0) deadline = std::chrono::steady_clock::now() + budget.max_time;

  const int top = std::min(N, budget.max_n);
  Level prev;
  for (int n = 0; n <= top; ++n) {
    Level cur;
    try {
      cur = enumerate_level(spec, prev, n, budget, deadline);
    } catch (const BudgetExceeded& e) {
      rec.complete = false;
      rec.stop_reason = e.what();
      return rec;
    }
    if (spec.predicate() && n > 0) {
      if (auto v = find_closure_violation(spec.poset(), cur, prev)) throw ClosureAuditFailure(*v);
    }
    rec.counts.emplace_back(cur.size());
    if (keep_levels) rec.levels->push_back(cur);
    prev = std::move(cur);
  }
  if (top < N) {
    rec.complete = false;
    rec.stop_reason = "max n budget is " + std::to_string(budget.max_n);
  }
  return rec;
}

std::string ClosureViolation::describe() const {
  std::string s = "member [" + format_coloring(member) + "]";
  if (deleted_vertex > 0) {
    s += " minus vertex " + std::to_string(deleted_vertex);
  } else {
    s += " with edge " + std::to_string(lowered_edge.first) + "," +
         std::to_string(lowered_edge.second) + " lowered to " + std::to_string(lowered_to);
  }
  return s + " gives [" + format_coloring(missing) + "], which is not in the ideal";
}

ClosureAuditFailure::ClosureAuditFailure(ClosureViolation v)
    : AuditFailure("downward closure fails: " + v.describe()), violation_(std::move(v)) {}

std::optional<ClosureViolation> find_closure_violation(const ColorPoset& poset, const Level& level,
                                                       const Level& previous) {
  const bool lowering = !poset.is_discrete();
  for (const auto& k : level) {
    for (int v = 1; v <= k.n(); ++v) {
      Coloring r = delete_vertex(k, v);
      if (!std::binary_search(previous.begin(), previous.end(), r)) {
        return ClosureViolation{k, v, {0, 0}, 0, std::move(r)};
      }
    }
    if (!lowering) continue;
    for (int j = 2; j <= k.n(); ++j) {
      for (int i = 1; i < j; ++i) {
        for (int c = 1; c <= poset.size(); ++c) {
          if (c == k.at(i, j) || !poset.leq(c, k.at(i, j))) continue;
          Coloring low = k;
          low.set(i, j, static_cast<Color>(c));
          if (!std::binary_search(level.begin(), level.end(), low)) {
            return ClosureViolation{k, 0, {i, j}, static_cast<Color>(c), std::move(low)};
          }
        }
      }
    }
  }
  return std::nullopt;
}

ClosureReport check_downward_closure(const ColorPoset& poset, const Level& level,
                                     const Level& previous) {
  ClosureReport rep;
  if (auto v = find_closure_violation(poset, level, previous)) {
    rep.under_poset = false;
    rep.counterexample = std::move(v);
  }
  if (auto v = find_closure_violation(discretize(poset), level, previous)) {
    rep.under_discrete = false;
    if (!rep.counterexample) rep.counterexample = std::move(v);
  }
  return rep;
}

RecolorReport recolored_counts(const IdealSpec& spec, int N, const Budget& budget) {
  if (spec.colors() < 2) throw std::invalid_argument("recoloring needs at least two colors");
  SequenceRecord rec = count_sequence(spec, N, budget, true);
  RecolorReport rep;
  rep.counts = rec.counts;
  const int l = spec.colors();
  rep.per_color.assign(static_cast<std::size_t>(l), {});
  const ColorPoset d2 = ColorPoset::discrete(2);
  std::vector<Level> prev_images(static_cast<std::size_t>(l));
  for (std::size_t n = 0; n < rec.levels->size(); ++n) {
    BigInt product = 1;
    for (int b = 1; b <= l; ++b) {
      Level img;
      img.reserve((*rec.levels)[n].size());
      for (const auto& k : (*rec.levels)[n]) img.push_back(recolor(k, static_cast<Color>(b)));
      std::sort(img.begin(), img.end());
      img.erase(std::unique(img.begin(), img.end()), img.end());
      const BigInt y = img.size();
      rep.per_color[static_cast<std::size_t>(b - 1)].push_back(y);
      product *= y;
      if (y > rep.counts[n]) {
        rep.lower_holds = false;
        rep.failures.push_back("n=" + std::to_string(n) + ": |Y^(" + std::to_string(b) +
                               ")| exceeds |X|");
      }
      if (n > 0) {
        if (auto v = find_closure_violation(d2, img, prev_images[static_cast<std::size_t>(b - 1)])) {
          rep.images_are_ideals = false;
          rep.failures.push_back("Y^(" + std::to_string(b) + ") not closed: " + v->describe());
        }
      }
      prev_images[static_cast<std::size_t>(b - 1)] = std::move(img);
    }
    if (rep.counts[n] > product) {
      rep.upper_holds = false;
      rep.failures.push_back("n=" + std::to_string(n) + ": |X| exceeds the product bound");
    }
  }
  return rep;
}

Level brute_force_level(const IdealSpec& spec, int n) {
  const std::size_t edges = static_cast<std::size_t>(n) * (n > 0 ? n - 1 : 0) / 2;
  const int l = spec.colors();
  std::vector<Color> e(edges, 1);
  Level out;
  while (true) {
    Coloring k(n, l, e);
    if (spec.contains(k)) out.push_back(std::move(k));
    std::size_t i = 0;
    while (i < edges && e[i] == l) e[i++] = 1;
    if (i == edges) break;
    ++e[i];
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace colorideals
