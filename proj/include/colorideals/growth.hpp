#pragma once

#include <optional>
#include <string>
#include <vector>

#include "colorideals/certificates.hpp"
#include "colorideals/ideal.hpp"

namespace colorideals {

/// F_n with F_0 = F_1 = 1.
BigInt fibonacci(int n);

/// k-step numbers: 0 for n < 0, 1 at n = 0, then the sum of the previous k.
BigInt generalized_fibonacci(int n, int k);

/// Largest positive root of x^k - x^(k-1) - ... - 1, by bisection on [1, 2].
double alpha(int k, double tol = 1e-12);

/// Value of x^k - x^(k-1) - ... - 1.
double alpha_polynomial(int k, double x);

struct BinomialFit {
  int n0 = 0;
  /// counts[n] = sum_j coefficients[j] * C(n, j) for all n >= n0 in the window.
  std::vector<BigInt> coefficients;
  int degree() const { return static_cast<int>(coefficients.size()) - 1; }
  /// Window points beyond the degree + 1 needed to determine the fit.
  int extra_points = 0;
};

/// Fit on counts[n0..]. Absent unless some difference row vanishes with at
/// least degree + 2 points available.
std::optional<BinomialFit> binomial_fit(const std::vector<BigInt>& counts, int n0);
std::optional<BinomialFit> binomial_fit(const SequenceRecord& counts, int n0);

/// sum_j c_j * C(n, j).
BigInt evaluate_binomial(const std::vector<BigInt>& coefficients, int n);

/// |X_n|^(1/n) for n = 1..N.
std::vector<double> growth_constant_trace(const std::vector<BigInt>& counts);

/// Upper bound on the Ramsey number R(a_1, ..., a_l) from the multicolor
/// recurrence over binomial two-color values. Exact for one color.
BigInt ramsey_upper_bound(const std::vector<int>& sizes);
/// Diagonal case R(a; l).
BigInt ramsey_upper_bound(int a, int l);

enum class Verdict {
  kEventuallyConstant,
  kAtLeastLinear,
  kPolynomialConsistent,
  kAtLeastFibonacci,
  kInconclusive
};
const char* to_string(Verdict v);
Verdict verdict_from_string(const std::string& s);

struct RichEntry {
  int r = 0;
  std::optional<RichCertificate> certificate;
};

struct WealthEntry {
  int type = 0;
  int r = 0;
  std::optional<WealthCertificate> certificate;
};

struct SimplicityWitness {
  int n = 0;
  /// Largest simplicity level over X_n.
  int r = 0;
  std::size_t members = 0;
  std::optional<Coloring> sample;
};

struct GrowthReport {
  SequenceRecord counts;
  Verdict verdict = Verdict::kInconclusive;
  /// Every verdict the evidence supports, the headline one first.
  std::vector<Verdict> verdicts;
  std::vector<RichEntry> rich;
  std::vector<WealthEntry> wealthy;
  std::optional<SimplicityWitness> simplicity;
  /// max tameness level over X_n, n = 0..N.
  std::vector<int> tameness_by_level;
  std::optional<Coloring> least_tame;
  std::optional<BinomialFit> fit;
  std::vector<double> growth_trace;
  std::optional<int> fibonacci_layer;
  int r_max = 0;
  std::optional<BigInt> eventual_constant;
  bool bounded_audit_ok = true;
  std::vector<std::string> notes;
};

/// Enumerates within budget and assembles certificates into a verdict.
GrowthReport classify(const IdealSpec& spec, const Budget& budget = {});

/// Re-checks every stored certificate and the verdict's justification.
/// Returns the list of problems (empty when consistent).
std::vector<std::string> recheck_report(const GrowthReport& report);

}  // namespace colorideals
