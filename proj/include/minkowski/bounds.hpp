#pragma once

// The Minkowski bound M(n) and the Schur bound S(n, K) for cyclotomic K.

#include <cmath>
#include <cstdint>
#include <optional>
#include <string>

#include "minkowski/exactnum.hpp"

namespace minkowski {

/// Exponent of p in M(n): sum over i >= 0 of floor(n / (p^i (p - 1))).
inline std::uint64_t minkowski_exponent(std::uint64_t n, std::uint64_t p) {
  std::uint64_t e = 0;
  for (std::uint64_t d = p - 1; d <= n; d *= p) e += n / d;
  return e;
}

/// M(n), the lcm of the orders of all finite subgroups of GL_n(Q).
inline Factorization minkowski_bound(std::uint64_t n) {
  if (n == 0) throw input_error("minkowski_bound requires n >= 1");
  Factorization f;
  for (std::uint64_t p : primes_below(n + 2)) f.multiply_prime(ExactInt(p), minkowski_exponent(n, p));
  return f;
}

/// M(n)_p via the compact form p^a (a!)_p with a = floor(n / (p - 1)).
/// Cross-checked against the floor-sum series on every call.
inline Factorization minkowski_p_part(std::uint64_t n, std::uint64_t p) {
  if (n == 0) throw input_error("minkowski_p_part requires n >= 1");
  require_prime(ExactInt(p));
  const std::uint64_t a = n / (p - 1);
  const std::uint64_t e = a + factorial_valuation(a, p);
  if (e != minkowski_exponent(n, p)) throw internal_error("compact and series forms of M(n)_p disagree");
  return Factorization::prime_power(ExactInt(p), e);
}

struct RecursionCheck {
  bool holds = false;
  /// prod over primes p with (p - 1) | 2n of p * n_p.
  Factorization product_term;
};

/// M(2n+1) = 2 M(2n) and M(2n) = 2 M(2n-1) prod_{p : p-1 | 2n} p n_p.
inline RecursionCheck minkowski_recursion_check(std::uint64_t n) {
  if (n == 0) throw input_error("minkowski_recursion_check requires n >= 1");
  RecursionCheck out;
  for (std::uint64_t p : primes_below(2 * n + 2)) {
    if ((2 * n) % (p - 1) != 0) continue;
    out.product_term.multiply_prime(ExactInt(p), 1 + valuation(ExactInt(n), ExactInt(p)));
  }
  const Factorization two = Factorization::prime_power(2, 1);
  const bool odd_step = minkowski_bound(2 * n + 1) == two * minkowski_bound(2 * n);
  const bool even_step = minkowski_bound(2 * n) == two * minkowski_bound(2 * n - 1) * out.product_term;
  out.holds = odd_step && even_step;
  return out;
}

// ---------------------------------------------------------------------------
// Schur bound

/// The trace field K: either Q or Q(zeta_k).
class SchurField {
 public:
  static SchurField rational() { return SchurField(std::nullopt); }
  static SchurField cyclotomic(std::uint64_t k) {
    if (k == 0) throw input_error("cyclotomic conductor must be >= 1");
    return SchurField(k);
  }

  bool is_rational() const { return !conductor_.has_value(); }
  std::optional<std::uint64_t> conductor() const { return conductor_; }

  /// Smallest k with K = Q(zeta_k): 1 for Q, and k/2 when k = 2 mod 4.
  std::uint64_t minimal_conductor() const {
    if (!conductor_) return 1;
    const std::uint64_t k = *conductor_;
    return k % 4 == 2 ? k / 2 : k;
  }

  /// Inclusion of cyclotomic fields: Q(zeta_a) is contained in Q(zeta_b) iff a | b
  /// for minimal conductors.
  bool is_subfield_of(const SchurField& other) const {
    return other.minimal_conductor() % minimal_conductor() == 0;
  }

  std::string to_string() const {
    return conductor_ ? "Q(zeta_" + std::to_string(*conductor_) + ")" : std::string("Q");
  }

 private:
  explicit SchurField(std::optional<std::uint64_t> k) : conductor_(k) {}
  std::optional<std::uint64_t> conductor_;
};

struct SchurParams {
  std::uint64_t ell = 2;
  std::uint64_t m = 1;
  std::uint64_t t = 1;
};

/// m(K, ell) and t(K, ell) for rational or cyclotomic K.
inline SchurParams schur_params(const SchurField& K, std::uint64_t ell) {
  require_prime(ExactInt(ell), "ell");
  SchurParams sp{ell, 1, ell - 1};
  if (K.is_rational()) return sp;
  const std::uint64_t k = *K.conductor();
  std::uint64_t v = 0;
  for (std::uint64_t r = k; r % ell == 0; r /= ell) ++v;
  sp.m = std::max<std::uint64_t>(1, v);
  sp.t = (k % ell == 0) ? 1 : ell - 1;
  return sp;
}

/// S(n, K) = 2^(n - floor(n/t(K,2))) prod_ell ell^(m floor(n/t)) (floor(n/t)!)_ell.
inline Factorization schur_bound(std::uint64_t n, const SchurField& K) {
  if (n == 0) throw input_error("schur_bound requires n >= 1");
  Factorization f;
  const SchurParams two = schur_params(K, 2);
  f.multiply_prime(2, n - n / two.t);
  // ell-factors are trivial unless t(K, ell) <= n, i.e. ell <= n + 1 or ell | k.
  std::uint64_t limit = n + 2;
  if (K.conductor()) limit = std::max<std::uint64_t>(limit, *K.conductor() + 1);
  for (std::uint64_t ell : primes_below(limit)) {
    const SchurParams sp = schur_params(K, ell);
    const std::uint64_t a = n / sp.t;
    f.multiply_prime(ExactInt(ell), sp.m * a + factorial_valuation(a, ell));
  }
  return f;
}

/// 2-part of S(n, K) through [K cap Q(mu_2^inf) : Q]^floor(n/t) 2^n (n!)_2, with the
/// degree read off from (m, t): 2^(m-1) when t = 1, 2^(m-2) when t = 2.
inline Factorization schur_two_part_by_degree(std::uint64_t n, const SchurField& K) {
  const SchurParams sp = schur_params(K, 2);
  const std::uint64_t log_degree = sp.t == 1 ? sp.m - 1 : sp.m - 2;
  return Factorization::prime_power(2, log_degree * (n / sp.t) + n + factorial_valuation(n, 2));
}

struct SchurDivisibility {
  bool additive = false;   // S(m,K) S(n,K) | S(m+n,K)
  bool monotone = true;    // S(n,K) | S(n,F) for K in F (true when no F given)
  bool holds() const { return additive && monotone; }
};

/// Checks S(m,K)S(n,K) | S(m+n,K) and, when `F` is given, S(n,K) | S(n,F).
inline SchurDivisibility schur_divisibility_checks(std::uint64_t m, std::uint64_t n,
                                                   const SchurField& K,
                                                   const std::optional<SchurField>& F = std::nullopt) {
  if (m == 0 || n == 0) throw input_error("schur_divisibility_checks requires m, n >= 1");
  SchurDivisibility out;
  out.additive = (schur_bound(m, K) * schur_bound(n, K)).divides(schur_bound(m + n, K));
  if (F) {
    if (!K.is_subfield_of(*F))
      throw input_error(K.to_string() + " is not contained in " + F->to_string());
    out.monotone = schur_bound(n, K).divides(schur_bound(n, *F));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Asymptotics

inline double log_value(const Factorization& f) {
  double s = 0.0;
  for (const auto& [p, e] : f.entries()) s += static_cast<double>(e) * std::log(p.convert_to<double>());
  return s;
}

struct KatznelsonEstimate {
  double constant = 0.0;  // prod_{p < prime_bound} p^(1/(p-1)^2)
  double ratio = 0.0;     // (M(n)/n!)^(1/n)
};

inline KatznelsonEstimate katznelson_estimate(std::uint64_t prime_bound, std::uint64_t n) {
  if (prime_bound < 2 || n == 0) throw input_error("katznelson_estimate requires prime_bound >= 2, n >= 1");
  KatznelsonEstimate out;
  double log_c = 0.0;
  for (std::uint64_t p : primes_below(prime_bound)) {
    const double pm1 = static_cast<double>(p - 1);
    log_c += std::log(static_cast<double>(p)) / (pm1 * pm1);
  }
  out.constant = std::exp(log_c);
  const double log_ratio = log_value(minkowski_bound(n)) - log_value(Factorization::factorial(n));
  out.ratio = std::exp(log_ratio / static_cast<double>(n));
  return out;
}

}  // namespace minkowski
