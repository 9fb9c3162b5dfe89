#pragma once

// Cross-checks of M(n) against Bernoulli denominators and the Hanna polynomials
// P(n, z) = [x^n] (-ln(1 - x) / x)^z.

#include <cstdint>
#include <vector>

#include "minkowski/bounds.hpp"
#include "minkowski/exactnum.hpp"
#include "minkowski/polynomial.hpp"

namespace minkowski {

inline ExactInt binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  ExactInt r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// B_0 .. B_n from sum_{j=0}^{m} C(m+1, j) B_j = 0 (m >= 1), B_0 = 1.
inline std::vector<ExactRat> bernoulli_numbers(std::uint64_t n) {
  std::vector<ExactRat> B(n + 1);
  B[0] = 1;
  for (std::uint64_t m = 1; m <= n; ++m) {
    ExactRat s = 0;
    for (std::uint64_t j = 0; j < m; ++j) s += ExactRat(binomial(m + 1, j)) * B[j];
    B[m] = -s / ExactRat(m + 1);
  }
  return B;
}

inline ExactRat bernoulli(std::uint64_t n) { return bernoulli_numbers(n).back(); }

/// B_0 .. B_n by inverting the power series (e^x - 1)/x = sum x^k/(k+1)!.
inline std::vector<ExactRat> bernoulli_by_series(std::uint64_t n) {
  std::vector<ExactRat> a(n + 1), c(n + 1);
  ExactInt fact = 1;
  for (std::uint64_t k = 0; k <= n; ++k) {
    fact *= k + 1;
    a[k] = ExactRat(ExactInt(1), fact);
  }
  c[0] = 1;
  for (std::uint64_t m = 1; m <= n; ++m) {
    ExactRat s = 0;
    for (std::uint64_t k = 1; k <= m; ++k) s += a[k] * c[m - k];
    c[m] = -s;
  }
  ExactInt mfact = 1;
  for (std::uint64_t m = 0; m <= n; ++m) {
    if (m > 0) mfact *= m;
    c[m] *= ExactRat(mfact);
  }
  return c;
}

/// prod over primes p with (p - 1) | 2n of p.
inline ExactInt staudt_clausen_denominator(std::uint64_t n) {
  ExactInt d = 1;
  for (std::uint64_t p : primes_below(2 * n + 2))
    if ((2 * n) % (p - 1) == 0) d *= p;
  return d;
}

inline bool von_staudt_clausen_check(std::uint64_t n) {
  if (n == 0) throw input_error("von_staudt_clausen_check requires n >= 1");
  return denominator_of(bernoulli(2 * n)) == staudt_clausen_denominator(n);
}

struct BernoulliMinkowski {
  ExactInt bernoulli_denominator;  // denominator of B_{2n} / n
  ExactInt recursion_product;      // M(2n) / (2 M(2n-1))
  bool equal = false;
};

inline BernoulliMinkowski bernoulli_vs_minkowski(std::uint64_t n) {
  if (n == 0) throw input_error("bernoulli_vs_minkowski requires n >= 1");
  BernoulliMinkowski out;
  out.bernoulli_denominator = denominator_of(bernoulli(2 * n) / ExactRat(n));
  const RecursionCheck rc = minkowski_recursion_check(n);
  out.recursion_product = rc.product_term.value();
  out.equal = rc.holds && out.bernoulli_denominator == out.recursion_product;
  return out;
}

/// P(n, z) = sum_{m=1}^{n} [x^n] xi^m * binom(z, m), xi = sum_{k>=1} x^k / (k+1).
inline RatPolynomial hanna_polynomial(std::uint64_t n) {
  if (n == 0) throw input_error("hanna_polynomial requires n >= 1");
  std::vector<ExactRat> xi_c(n + 1);
  for (std::uint64_t k = 1; k <= n; ++k) xi_c[k] = ExactRat(ExactInt(1), ExactInt(k + 1));
  const RatPolynomial xi(std::move(xi_c));

  RatPolynomial xi_pow = RatPolynomial::constant(1);
  RatPolynomial falling = RatPolynomial::constant(1);  // z (z-1) ... (z-m+1)
  ExactInt mfact = 1;
  RatPolynomial P;
  for (std::uint64_t m = 1; m <= n; ++m) {
    xi_pow = xi_pow.multiplied_truncated(xi, n);
    falling = falling * RatPolynomial{ExactRat(-static_cast<long long>(m - 1)), ExactRat(1)};
    mfact *= m;
    const ExactRat c = xi_pow.coeff(n);
    if (c != 0) P += falling * (c / ExactRat(mfact));
  }
  return P;
}

struct HannaCheck {
  ExactInt denominator;
  ExactInt minkowski;
  bool equals_M = false;
  /// lcm * P is integral and (lcm / r) * P is not, for every prime r | lcm.
  bool is_ideal_generator = false;
  /// Primes where the two disagree (empty when equals_M).
  std::vector<ExactInt> offending_primes;
};

/// Compares the denominator of P(n, z) with M(n). A mismatch is a finding, not an error.
inline HannaCheck hanna_denominator_check(std::uint64_t n) {
  const RatPolynomial P = hanna_polynomial(n);
  HannaCheck out;
  out.denominator = P.denominator();
  const Factorization M = minkowski_bound(n);
  out.minkowski = M.value();
  out.equals_M = out.denominator == out.minkowski;

  const Factorization D = Factorization::of(out.denominator);
  out.is_ideal_generator = (P * ExactRat(out.denominator)).has_integer_coefficients();
  for (const auto& [r, e] : D.entries())
    if ((P * ExactRat(out.denominator / r)).has_integer_coefficients()) out.is_ideal_generator = false;

  const Factorization both = Factorization::lcm(D, M);
  for (const auto& [r, e] : both.entries())
    if (D.exponent(r) != M.exponent(r)) out.offending_primes.push_back(r);
  return out;
}

}  // namespace minkowski
