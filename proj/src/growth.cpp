#include "colorideals/growth.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <map>
#include <stdexcept>
#include <thread>

namespace colorideals {

BigInt fibonacci(int n) {
  if (n < 0) throw std::invalid_argument("fibonacci index must be nonnegative");
  return generalized_fibonacci(n, 2);
}

BigInt generalized_fibonacci(int n, int k) {
  if (k < 1) throw std::invalid_argument("order must be positive");
  if (n < 0) return 0;
  std::vector<BigInt> f(static_cast<std::size_t>(n) + 1);
  f[0] = 1;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= k && i - j >= 0; ++j) f[static_cast<std::size_t>(i)] += f[static_cast<std::size_t>(i - j)];
  return f[static_cast<std::size_t>(n)];
}

double alpha_polynomial(int k, double x) {
  double lower = 0;
  double p = 1;
  for (int i = 0; i < k; ++i) {
    lower += p;
    p *= x;
  }
  return p - lower;
}

double alpha(int k, double tol) {
  if (k < 2) throw std::invalid_argument("alpha needs k >= 2");
  if (!(tol > 0)) throw std::invalid_argument("tolerance must be positive");
  double lo = 1.0;
  double hi = 2.0;
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (alpha_polynomial(k, mid) < 0)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

namespace {

/// C(x, j) for any integer x.
BigInt general_binomial(long long x, int j) {
  BigInt num = 1;
  BigInt den = 1;
  for (int i = 0; i < j; ++i) {
    num *= x - i;
    den *= i + 1;
  }
  return num / den;
}

double log_of(const BigInt& c) {
  if (c <= 0) return -INFINITY;
  const auto bits = boost::multiprecision::msb(c);
  if (bits < 1000) return std::log(c.convert_to<double>());
  const auto shift = bits - 60;
  const BigInt top = c >> shift;
  return std::log(top.convert_to<double>()) + static_cast<double>(shift) * std::log(2.0);
}

}  // namespace

BigInt evaluate_binomial(const std::vector<BigInt>& coefficients, int n) {
  BigInt s = 0;
  for (std::size_t j = 0; j < coefficients.size(); ++j) s += coefficients[j] * general_binomial(n, static_cast<int>(j));
  return s;
}

std::optional<BinomialFit> binomial_fit(const std::vector<BigInt>& counts, int n0) {
  if (n0 < 0) throw std::invalid_argument("negative tail start");
  if (n0 >= static_cast<int>(counts.size())) return std::nullopt;
  std::vector<std::vector<BigInt>> rows;
  rows.emplace_back(counts.begin() + n0, counts.end());
  const int m = static_cast<int>(rows[0].size());
  int degree = -1;
  for (int r = 0; r + 2 <= m; ++r) {
    const auto& prev = rows.back();
    std::vector<BigInt> next;
    for (std::size_t i = 0; i + 1 < prev.size(); ++i) next.push_back(prev[i + 1] - prev[i]);
    const bool zero = std::all_of(next.begin(), next.end(), [](const BigInt& v) { return v == 0; });
    rows.push_back(std::move(next));
    if (zero) {
      degree = r;
      break;
    }
  }
  if (degree < 0) return std::nullopt;

  // Newton form around n0, then values at 0..degree and differences there.
  std::vector<BigInt> values;
  for (int x = 0; x <= degree; ++x) {
    BigInt v = 0;
    for (int j = 0; j <= degree; ++j) v += rows[static_cast<std::size_t>(j)][0] * general_binomial(x - n0, j);
    values.push_back(v);
  }
  BinomialFit fit;
  fit.n0 = n0;
  fit.extra_points = m - (degree + 1);
  for (int j = 0; j <= degree; ++j) {
    fit.coefficients.push_back(values[0]);
    for (std::size_t i = 0; i + 1 < values.size(); ++i) values[i] = values[i + 1] - values[i];
    values.pop_back();
  }
  return fit;
}

std::optional<BinomialFit> binomial_fit(const SequenceRecord& counts, int n0) {
  return binomial_fit(counts.counts, n0);
}

std::vector<double> growth_constant_trace(const std::vector<BigInt>& counts) {
  std::vector<double> out;
  for (std::size_t n = 1; n < counts.size(); ++n) {
    if (counts[n] <= 0)
      out.push_back(0.0);
    else
      out.push_back(std::exp(log_of(counts[n]) / static_cast<double>(n)));
  }
  return out;
}

namespace {

BigInt ramsey_rec(std::vector<int> sizes, std::map<std::vector<int>, BigInt>& memo) {
  std::sort(sizes.begin(), sizes.end());
  if (sizes.front() <= 1) return 1;
  while (sizes.size() > 1 && sizes.front() == 2) sizes.erase(sizes.begin());
  if (sizes.size() == 1) return sizes[0];
  if (auto it = memo.find(sizes); it != memo.end()) return it->second;
  BigInt v;
  if (sizes.size() == 2) {
    v = general_binomial(sizes[0] + sizes[1] - 2, sizes[0] - 1);
  } else {
    v = 2 - static_cast<long long>(sizes.size());
    for (std::size_t i = 0; i < sizes.size(); ++i) {
      auto smaller = sizes;
      --smaller[i];
      v += ramsey_rec(smaller, memo);
    }
  }
  memo.emplace(sizes, v);
  return v;
}

}  // namespace

BigInt ramsey_upper_bound(const std::vector<int>& sizes) {
  if (sizes.empty()) throw std::invalid_argument("need at least one color");
  for (int a : sizes)
    if (a < 1) throw std::invalid_argument("sizes must be positive");
  std::map<std::vector<int>, BigInt> memo;
  return ramsey_rec(sizes, memo);
}

BigInt ramsey_upper_bound(int a, int l) {
  if (a < 2 || l < 1) throw std::invalid_argument("need a >= 2 and l >= 1");
  return ramsey_upper_bound(std::vector<int>(static_cast<std::size_t>(l), a));
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::kEventuallyConstant: return "EVENTUALLY_CONSTANT";
    case Verdict::kAtLeastLinear: return "AT_LEAST_LINEAR";
    case Verdict::kPolynomialConsistent: return "POLYNOMIAL_CONSISTENT";
    case Verdict::kAtLeastFibonacci: return "AT_LEAST_FIBONACCI";
    case Verdict::kInconclusive: return "INCONCLUSIVE";
  }
  return "?";
}

Verdict verdict_from_string(const std::string& s) {
  for (auto v : {Verdict::kEventuallyConstant, Verdict::kAtLeastLinear, Verdict::kPolynomialConsistent,
                 Verdict::kAtLeastFibonacci, Verdict::kInconclusive})
    if (s == to_string(v)) return v;
  throw std::invalid_argument("unknown verdict " + s);
}

namespace {

template <class F>
std::vector<int> map_levels(const Level& level, int workers, F f) {
  std::vector<int> out(level.size());
  const std::size_t w = std::max<std::size_t>(1, std::min<std::size_t>(workers, level.size() / 64 + 1));
  if (w == 1) {
    for (std::size_t i = 0; i < level.size(); ++i) out[i] = f(level[i]);
    return out;
  }
  std::vector<std::future<void>> jobs;
  const std::size_t chunk = (level.size() + w - 1) / w;
  for (std::size_t start = 0; start < level.size(); start += chunk) {
    jobs.push_back(std::async(std::launch::async, [&, start] {
      const std::size_t stop = std::min(level.size(), start + chunk);
      for (std::size_t i = start; i < stop; ++i) out[i] = f(level[i]);
    }));
  }
  for (auto& j : jobs) j.get();
  return out;
}

bool tail_constant(const std::vector<BigInt>& counts, int len) {
  const int N = static_cast<int>(counts.size()) - 1;
  if (N + 1 < len) return false;
  for (int n = N - len + 2; n <= N; ++n)
    if (counts[static_cast<std::size_t>(n)] != counts[static_cast<std::size_t>(N)]) return false;
  return true;
}

int min_wealth_r(int type) { return type == 1 ? 3 : 2; }

bool fit_is_stable(const std::optional<BinomialFit>& fit) { return fit && fit->extra_points >= 2; }

bool tameness_is_stable(const std::vector<int>& t) {
  const std::size_t s = t.size();
  return s >= 3 && t[s - 1] == t[s - 2] && t[s - 2] == t[s - 3];
}

std::vector<int> fibonacci_types(const std::vector<WealthEntry>& entries) {
  std::vector<int> types;
  for (int type = 1; type <= 4; ++type) {
    int largest = 0;
    bool all = true;
    for (const auto& e : entries) {
      if (e.type != type) continue;
      all = all && e.certificate.has_value();
      largest = std::max(largest, e.r);
    }
    if (all && largest >= min_wealth_r(type)) types.push_back(type);
  }
  return types;
}

}  // namespace

GrowthReport classify(const IdealSpec& spec, const Budget& budget) {
  GrowthReport rep;
  rep.counts = count_sequence(spec, budget.max_n, budget, true);
  const auto& levels = *rep.counts.levels;
  const int N = rep.counts.max_n();
  const int workers = budget.workers > 0 ? budget.workers
                                          : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  if (!rep.counts.complete) rep.notes.push_back("partial: " + rep.counts.stop_reason);

  rep.r_max = N >= 1 ? (N + 1) / 2 : 0;
  for (int r = 2; r <= rep.r_max; ++r) rep.rich.push_back({r, ideal_contains_rich(levels, r)});

  for (int type = 1; type <= 4; ++type) {
    for (int r = 1; wealthy_size(r, type) <= N; ++r) {
      WealthEntry e{type, r, std::nullopt};
      for (const auto& k : levels[static_cast<std::size_t>(wealthy_size(r, type))]) {
        if ((e.certificate = is_r_wealthy(k, r, type))) break;
      }
      const bool found = e.certificate.has_value();
      rep.wealthy.push_back(std::move(e));
      if (!found) break;
    }
  }

  if (N >= 0) {
    const auto& last = levels[static_cast<std::size_t>(N)];
    auto simp = map_levels(last, workers, [](const Coloring& k) { return simplicity_level(k); });
    SimplicityWitness w{N, 1, last.size(), std::nullopt};
    for (std::size_t i = 0; i < last.size(); ++i) {
      if (i == 0 || simp[i] > w.r) {
        w.r = simp[i];
        w.sample = last[i];
      }
    }
    rep.simplicity = w;
  }

  for (int n = 0; n <= N; ++n) {
    const auto& level = levels[static_cast<std::size_t>(n)];
    auto t = map_levels(level, workers, [](const Coloring& k) { return tameness_level(k); });
    int best = 0;
    for (std::size_t i = 0; i < level.size(); ++i) {
      if (t[i] > best) {
        best = t[i];
        if (n == N) rep.least_tame = level[i];
      }
    }
    rep.tameness_by_level.push_back(best);
  }

  for (int n0 = 0; n0 <= N; ++n0) {
    auto fit = binomial_fit(rep.counts.counts, n0);
    if (fit_is_stable(fit)) {
      rep.fit = fit;
      break;
    }
  }

  rep.growth_trace = growth_constant_trace(rep.counts.counts);
  for (int k = 1; k <= N + 1 && N >= 1; ++k) {
    bool ok = true;
    for (int n = 1; n <= N && ok; ++n) {
      BigInt cube = BigInt(n) * n * n;
      ok = rep.counts.counts[static_cast<std::size_t>(n)] <= generalized_fibonacci(n, k) * cube;
    }
    if (ok) {
      rep.fibonacci_layer = k;
      break;
    }
  }

  // Verdicts.
  const bool constant_tail = tail_constant(rep.counts.counts, 4);
  const bool simple_ok = rep.simplicity && 2 * rep.simplicity->r + 2 < N;
  const bool ec = constant_tail && simple_ok;
  if (ec) rep.eventual_constant = rep.counts.counts.back();
  const bool any_rich = std::any_of(rep.rich.begin(), rep.rich.end(),
                                    [](const RichEntry& e) { return e.certificate.has_value(); });
  const bool linear = !rep.rich.empty() &&
                      std::all_of(rep.rich.begin(), rep.rich.end(),
                                  [](const RichEntry& e) { return e.certificate.has_value(); });
  const bool fib = !fibonacci_types(rep.wealthy).empty();
  const bool poly = fit_is_stable(rep.fit) && tameness_is_stable(rep.tameness_by_level);

  rep.bounded_audit_ok = constant_tail || any_rich;
  if (ec) rep.verdicts.push_back(Verdict::kEventuallyConstant);
  if (fib) rep.verdicts.push_back(Verdict::kAtLeastFibonacci);
  if (linear) rep.verdicts.push_back(Verdict::kAtLeastLinear);
  if (poly) rep.verdicts.push_back(Verdict::kPolynomialConsistent);

  if (ec && fib) {
    rep.notes.push_back("constant tail together with wealthy certificates; evidence conflicts");
    rep.verdicts.clear();
  }
  if (!rep.bounded_audit_ok) {
    rep.notes.push_back("counts not constant on the window and no rich certificate found");
    rep.verdicts.clear();
  }
  if (constant_tail && !simple_ok) rep.notes.push_back("constant tail without a simplicity witness");
  rep.verdict = rep.verdicts.empty() ? Verdict::kInconclusive : rep.verdicts.front();
  if (rep.verdicts.empty()) rep.verdicts.push_back(Verdict::kInconclusive);
  return rep;
}

std::vector<std::string> recheck_report(const GrowthReport& rep) {
  std::vector<std::string> problems;
  const auto& counts = rep.counts.counts;
  const int N = rep.counts.max_n();
  for (const auto& e : rep.rich) {
    if (!e.certificate) continue;
    const auto& c = *e.certificate;
    if (c.r != e.r || c.witness.n() != 2 * e.r - 1 || !is_r_rich(c.witness, e.r))
      problems.push_back("rich certificate at r=" + std::to_string(e.r) + " does not re-check");
  }
  for (const auto& e : rep.wealthy) {
    if (!e.certificate) continue;
    const auto& c = *e.certificate;
    if (c.witness.n() != wealthy_size(e.r, e.type) || !is_r_wealthy(c.witness, e.r, e.type))
      problems.push_back("wealthy certificate type " + std::to_string(e.type) + " r=" +
                         std::to_string(e.r) + " does not re-check");
  }
  auto has = [&](Verdict v) { return std::find(rep.verdicts.begin(), rep.verdicts.end(), v) != rep.verdicts.end(); };
  if (rep.verdicts.empty() || rep.verdicts.front() != rep.verdict) problems.push_back("headline verdict mismatch");
  if (has(Verdict::kEventuallyConstant)) {
    if (!tail_constant(counts, 4)) problems.push_back("EVENTUALLY_CONSTANT without a constant tail");
    if (!rep.simplicity || 2 * rep.simplicity->r + 2 >= N ||
        (rep.simplicity->sample && simplicity_level(*rep.simplicity->sample) != rep.simplicity->r))
      problems.push_back("EVENTUALLY_CONSTANT without a simplicity witness");
    if (has(Verdict::kAtLeastFibonacci)) problems.push_back("EVENTUALLY_CONSTANT with AT_LEAST_FIBONACCI");
  }
  if (has(Verdict::kAtLeastLinear)) {
    if (rep.rich.empty()) problems.push_back("AT_LEAST_LINEAR without rich certificates");
    for (const auto& e : rep.rich)
      if (!e.certificate) problems.push_back("AT_LEAST_LINEAR but r=" + std::to_string(e.r) + " has no certificate");
  }
  if (has(Verdict::kAtLeastFibonacci) && fibonacci_types(rep.wealthy).empty())
    problems.push_back("AT_LEAST_FIBONACCI without a fully certified wealth type");
  if (has(Verdict::kPolynomialConsistent)) {
    if (!fit_is_stable(rep.fit)) {
      problems.push_back("POLYNOMIAL_CONSISTENT without a stable fit");
    } else {
      for (int n = rep.fit->n0; n <= N; ++n)
        if (evaluate_binomial(rep.fit->coefficients, n) != counts[static_cast<std::size_t>(n)])
          problems.push_back("fit disagrees at n=" + std::to_string(n));
    }
    if (!tameness_is_stable(rep.tameness_by_level)) problems.push_back("POLYNOMIAL_CONSISTENT without stable tameness");
    if (rep.least_tame && tameness_level(*rep.least_tame) != rep.tameness_by_level.back())
      problems.push_back("least tame witness does not re-check");
  }
  const bool any_rich = std::any_of(rep.rich.begin(), rep.rich.end(),
                                    [](const RichEntry& e) { return e.certificate.has_value(); });
  if (!tail_constant(counts, 4) && !any_rich && rep.verdict != Verdict::kInconclusive)
    problems.push_back("non-constant counts without a rich certificate must be INCONCLUSIVE");
  return problems;
}

}  // namespace colorideals
