#include "colorideals/selftest.hpp"

#include <cmath>
#include <functional>
#include <random>

#include "colorideals/adapters.hpp"
#include "colorideals/certificates.hpp"
#include "colorideals/growth.hpp"

namespace colorideals {

namespace {

Coloring random_coloring(std::mt19937& rng, int n, int colors) {
  Coloring k(n, colors);
  for (int j = 2; j <= n; ++j)
    for (int i = 1; i < j; ++i) k.set(i, j, static_cast<Color>(1 + rng() % colors));
  return k;
}

SelftestResult check(std::string name, const std::function<std::string()>& body) {
  try {
    std::string problem = body();
    return {std::move(name), problem.empty(), problem.empty() ? "ok" : problem};
  } catch (const std::exception& e) {
    return {std::move(name), false, std::string("exception: ") + e.what()};
  }
}

std::string compare_counts(const IdealSpec& spec, const std::vector<long long>& expected) {
  auto rec = count_sequence(spec, static_cast<int>(expected.size()) - 1);
  for (std::size_t n = 0; n < expected.size(); ++n)
    if (rec.counts[n] != expected[n])
      return "n=" + std::to_string(n) + ": got " + rec.counts[n].str() + ", want " + std::to_string(expected[n]);
  return "";
}

}  // namespace

std::vector<SelftestResult> run_selftest() {
  std::vector<SelftestResult> out;

  out.push_back(check("containment matcher vs reference", [] {
    std::mt19937 rng(101);
    const std::vector<ColorPoset> posets{ColorPoset::discrete(2), ColorPoset::linear(2), ColorPoset::discrete(3),
                                         make_poset(3, {{1, 3}, {2, 3}})};
    for (const auto& p : posets) {
      for (int t = 0; t < 300; ++t) {
        auto a = random_coloring(rng, 1 + static_cast<int>(rng() % 4), p.size());
        auto b = random_coloring(rng, a.n() + static_cast<int>(rng() % 4), p.size());
        if (contains(p, a, b).has_value() != contains_reference(p, a, b).has_value())
          return "disagree on " + format_coloring(a) + " in " + format_coloring(b);
      }
    }
    return std::string();
  }));

  out.push_back(check("level extension vs brute force", [] {
    std::vector<IdealSpec> specs;
    specs.emplace_back(ColorPoset::discrete(2), std::vector<Coloring>{parse_coloring("3; default=1", 2)});
    specs.emplace_back(ColorPoset::linear(2), std::vector<Coloring>{parse_coloring("3; default=2; 1,3=1", 2)});
    specs.emplace_back(ColorPoset::discrete(3), std::vector<Coloring>{parse_coloring("2; default=3", 3)});
    for (const auto& spec : specs) {
      Level prev;
      for (int n = 0; n <= 5 - (spec.colors() > 2); ++n) {
        prev = enumerate_level(spec, prev, n);
        if (prev != brute_force_level(spec, n)) return "mismatch at n=" + std::to_string(n);
      }
    }
    return std::string();
  }));

  out.push_back(check("permutation, Catalan and Bell prefixes", [] {
    auto perm = find_adapter("permutation");
    auto part = find_adapter("set-partition");
    std::string s = compare_counts(IdealSpec::from_adapter(perm), {1, 1, 2, 6, 24, 120, 720});
    if (s.empty()) s = compare_counts(IdealSpec::from_adapter(perm, {perm->parse("123")}), {1, 1, 2, 5, 14, 42, 132});
    if (s.empty()) s = compare_counts(IdealSpec::from_adapter(part), {1, 1, 2, 5, 15, 52, 203});
    return s;
  }));

  out.push_back(check("two-object counts", [] {
    for (const auto& a : all_adapters()) {
      if (static_cast<int>(a->generate_all(2).size()) != a->two_object_count())
        return a->name() + ": generated size-2 objects disagree with two_object_count";
    }
    return std::string();
  }));

  out.push_back(check("permutation faithfulness to size 4", [] {
    auto perm = find_adapter("permutation");
    std::vector<NativeObject> objs;
    for (int n = 1; n <= 4; ++n)
      for (auto& o : perm->generate_all(n)) objs.push_back(std::move(o));
    std::vector<Coloring> codes;
    for (const auto& o : objs) codes.push_back(perm->encode(o));
    for (std::size_t i = 0; i < objs.size(); ++i)
      for (std::size_t j = 0; j < objs.size(); ++j)
        if (perm->native_contains(objs[i], objs[j]) != contains(perm->poset(), codes[i], codes[j]).has_value())
          return perm->format(objs[i]) + " vs " + perm->format(objs[j]);
    return std::string();
  }));

  out.push_back(check("fib strings", [] {
    for (int n = 1; n <= 15; ++n)
      for (int kind = 1; kind <= 2; ++kind)
        if (BigInt(fib_strings(n, kind).size()) != fibonacci(n))
          return "n=" + std::to_string(n) + " kind " + std::to_string(kind);
    return std::string();
  }));

  out.push_back(check("alpha anchors", [] {
    const double want[] = {1.61803, 1.83928, 1.92756};
    for (int k = 2; k <= 4; ++k) {
      const double a = alpha(k);
      if (std::abs(a - want[k - 2]) > 1e-4 || std::abs(alpha_polynomial(k, a)) > 1e-8)
        return "alpha(" + std::to_string(k) + ") = " + std::to_string(a);
    }
    return std::string();
  }));

  out.push_back(check("closure audit catches a deleted member", [] {
    IdealSpec spec(ColorPoset::discrete(2), builtin_predicate("at-most-one:2", 2));
    auto rec = count_sequence(spec, 5, {}, true);
    Level l4 = (*rec.levels)[4];
    Level l5 = (*rec.levels)[5];
    l4.erase(l4.begin() + 1);
    auto v = find_closure_violation(spec.poset(), l5, l4);
    if (!v) return std::string("no counterexample reported");
    if (std::find(l4.begin(), l4.end(), v->missing) != l4.end()) return std::string("counterexample is present");
    return std::string();
  }));
  return out;
}

}  // namespace colorideals
