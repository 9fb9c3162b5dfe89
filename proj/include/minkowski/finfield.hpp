#pragma once

// Orders of GL_n(F_q) and of the finite unitary, symplectic and orthogonal
// groups; l-parts of these orders; reduction of rational matrix groups mod p.

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "minkowski/bounds.hpp"
#include "minkowski/cyclotomic.hpp"
#include "minkowski/exactnum.hpp"
#include "minkowski/matgroup.hpp"

namespace minkowski {

struct PrimePower {
  std::uint64_t p = 0;
  std::uint64_t f = 0;
};

/// Decomposes q = p^f; throws unless q is a prime power.
inline PrimePower as_prime_power(std::uint64_t q) {
  if (q < 2) throw input_error("q = " + std::to_string(q) + " is not a prime power");
  const Factorization fq = Factorization::of(ExactInt(q));
  if (fq.entries().size() != 1) throw input_error("q = " + std::to_string(q) + " is not a prime power");
  const auto& [p, f] = *fq.entries().begin();
  return {static_cast<std::uint64_t>(p), f};
}

/// Factorization of q^i - 1 through q^i - 1 = prod_{d | i} Phi_d(q).
inline Factorization factor_power_minus_one(const ExactInt& q, std::uint64_t i) {
  Factorization f;
  for (std::uint64_t d = 1; d <= i; ++d) {
    if (i % d != 0) continue;
    ExactInt v = 0;
    const FieldPtr field = cyclo_field(d);
    const auto& phi = field->polynomial();
    for (auto it = phi.rbegin(); it != phi.rend(); ++it) v = v * q + *it;
    f *= Factorization::of(v);
  }
  return f;
}

struct GLOrder {
  Factorization full;
  Factorization p_prime_part;  // prod_{i=1}^n (q^i - 1)
};

/// |GL_n(F_q)| = prod_{i=0}^{n-1} (q^n - q^i).
inline GLOrder gl_order(std::uint64_t n, std::uint64_t q) {
  if (n == 0) throw input_error("gl_order requires n >= 1");
  const PrimePower pf = as_prime_power(q);
  GLOrder out;
  for (std::uint64_t i = 1; i <= n; ++i) out.p_prime_part *= factor_power_minus_one(ExactInt(q), i);
  out.full = out.p_prime_part * Factorization::prime_power(ExactInt(pf.p), pf.f * n * (n - 1) / 2);
  return out;
}

// ---------------------------------------------------------------------------
// Brute-force oracle

namespace detail {

/// F_q for q prime or q = 4 (F_2[x]/(x^2 + x + 1), element b0 + 2 b1).
struct SmallField {
  std::uint64_t q;
  std::vector<std::uint8_t> add, mul;

  explicit SmallField(std::uint64_t order) : q(order), add(order * order), mul(order * order) {
    for (std::uint64_t a = 0; a < q; ++a) {
      for (std::uint64_t b = 0; b < q; ++b) {
        if (q == 4) {
          add[a * q + b] = static_cast<std::uint8_t>(a ^ b);
          // (a0 + a1 x)(b0 + b1 x), x^2 = x + 1
          const unsigned a0 = a & 1U, a1 = a >> 1U, b0 = b & 1U, b1 = b >> 1U;
          const unsigned c0 = (a0 & b0) ^ (a1 & b1);
          const unsigned c1 = (a0 & b1) ^ (a1 & b0) ^ (a1 & b1);
          mul[a * q + b] = static_cast<std::uint8_t>(c0 | (c1 << 1U));
        } else {
          add[a * q + b] = static_cast<std::uint8_t>((a + b) % q);
          mul[a * q + b] = static_cast<std::uint8_t>((a * b) % q);
        }
      }
    }
  }
  std::uint8_t plus(std::uint8_t a, std::uint8_t b) const { return add[a * q + b]; }
  std::uint8_t times(std::uint8_t a, std::uint8_t b) const { return mul[a * q + b]; }
  std::uint8_t neg(std::uint8_t a) const {
    for (std::uint8_t b = 0; b < q; ++b)
      if (plus(a, b) == 0) return b;
    return 0;
  }
  std::uint8_t inv(std::uint8_t a) const {
    for (std::uint8_t b = 1; b < q; ++b)
      if (times(a, b) == 1) return b;
    return 0;
  }
};

inline bool nonsingular(const SmallField& F, std::array<std::uint8_t, 9> m, std::size_t n) {
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && m[piv * n + c] == 0) ++piv;
    if (piv == n) return false;
    for (std::size_t j = 0; j < n; ++j) std::swap(m[piv * n + j], m[c * n + j]);
    const std::uint8_t pinv = F.inv(m[c * n + c]);
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m[r * n + c] == 0) continue;
      const std::uint8_t f = F.neg(F.times(m[r * n + c], pinv));
      for (std::size_t j = c; j < n; ++j) m[r * n + j] = F.plus(m[r * n + j], F.times(f, m[c * n + j]));
    }
  }
  return true;
}

}  // namespace detail

/// Counts invertible n x n matrices over F_q by enumerating all q^(n^2) of them.
inline ExactInt gl_order_bruteforce(std::uint64_t n, std::uint64_t q) {
  if (n == 0 || n > 3 || q > 5) throw input_error("gl_order_bruteforce is limited to n <= 3, q <= 5");
  as_prime_power(q);  // rejects q = 0, 1 and non-prime powers
  const detail::SmallField F(q);
  const std::size_t cells = n * n;
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < cells; ++i) total *= q;
  std::uint64_t count = 0;
  std::array<std::uint8_t, 9> m{};
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t c = code;
    for (std::size_t i = 0; i < cells; ++i) {
      m[i] = static_cast<std::uint8_t>(c % q);
      c /= q;
    }
    if (detail::nonsingular(F, m, n)) ++count;
  }
  return ExactInt(count);
}

// ---------------------------------------------------------------------------
// Special primes and the l-part of |GL_n(F_{p^f})|

inline constexpr std::uint64_t kSpecialPrimeSearchBound = 1'000'000;

/// p != ell prime whose residue generates (Z / ell^2 Z)^*.
inline bool is_special_prime(std::uint64_t ell, std::uint64_t p) {
  if (p == ell || !is_prime(p)) return false;
  return multiplicative_order(p % (ell * ell), ell * ell) == ell * (ell - 1);
}

/// The (skip + 1)-th smallest special prime for the odd prime ell.
inline std::uint64_t find_special_prime(std::uint64_t ell, std::uint64_t skip = 0) {
  if (ell == 2 || !is_prime(ell)) throw input_error("find_special_prime requires an odd prime ell");
  for (std::uint64_t p = 2; p < kSpecialPrimeSearchBound; ++p) {
    if (!is_special_prime(ell, p)) continue;
    if (skip == 0) return p;
    --skip;
  }
  throw capacity_error("no further special prime below " + std::to_string(kSpecialPrimeSearchBound));
}

struct Lemma51Report {
  std::uint64_t ell = 3, p = 2, f = 1, n = 1;
  std::uint64_t tau = 1;  // (ell - 1) / gcd(ell - 1, f)
  Factorization predicted;
  Factorization actual;
  bool match = false;
  /// f = 1 only: the ell-part equals M(n)_ell.
  std::optional<bool> minkowski_match;
};

/// Compares ell^((1 + v_ell(f)) floor(n/tau)) (floor(n/tau)!)_ell with |GL_n(F_{p^f})|_ell.
inline Lemma51Report lemma51_check(std::uint64_t n, std::uint64_t f, std::uint64_t ell, std::uint64_t p) {
  if (n == 0 || f == 0) throw input_error("lemma51_check requires n, f >= 1");
  if (ell == 2 || !is_prime(ell)) throw input_error("lemma51_check requires an odd prime ell");
  if (!is_special_prime(ell, p))
    throw input_error(std::to_string(p) + " does not generate the units modulo " + std::to_string(ell * ell));
  Lemma51Report rep;
  rep.ell = ell;
  rep.p = p;
  rep.f = f;
  rep.n = n;
  rep.tau = (ell - 1) / std::gcd(ell - 1, f);
  const std::uint64_t alpha = n / rep.tau;
  std::uint64_t vf = 0;
  for (std::uint64_t r = f; r % ell == 0; r /= ell) ++vf;
  rep.predicted = Factorization::prime_power(ExactInt(ell), (1 + vf) * alpha) * factorial_p_part(alpha, ExactInt(ell));
  const ExactInt q = pow_int(ExactInt(p), f);
  rep.actual = gl_order(n, static_cast<std::uint64_t>(q)).full.restricted_to(ExactInt(ell));
  rep.match = rep.predicted == rep.actual;
  if (f == 1) rep.minkowski_match = rep.actual == minkowski_p_part(n, ell);
  return rep;
}

// ---------------------------------------------------------------------------
// Reduction mod p

/// n x n matrix over F_p, entries in [0, p).
struct FpMatrix {
  std::size_t n = 0;
  std::uint64_t p = 2;
  std::vector<std::uint64_t> entries;

  bool is_identity() const {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (entries[i * n + j] != (i == j ? 1U : 0U)) return false;
    return true;
  }
  friend bool operator==(const FpMatrix&, const FpMatrix&) = default;
  friend auto operator<=>(const FpMatrix&, const FpMatrix&) = default;
};

inline FpMatrix reduce_matrix(const RatMatrix& g, std::uint64_t p) {
  FpMatrix out{g.dim(), p, {}};
  out.entries.reserve(g.entries().size());
  for (const auto& x : g.entries()) out.entries.push_back(static_cast<std::uint64_t>(residue_mod(x, ExactInt(p))));
  return out;
}

struct ReductionReport {
  std::uint64_t p = 2;
  std::size_t image_size = 0;
  bool injective = false;
  bool injective_on_coprime_order = false;  // kernel holds no non-identity p'-element
  std::vector<std::uint64_t> kernel_element_orders;  // sorted, identity included
  bool kernel_orders_are_p_powers = false;
};

struct Reduction {
  std::vector<FpMatrix> image;  // distinct images, sorted
  ReductionReport report;
};

/// Reduces a finite subgroup of GL_n(Z_(p)) entrywise modulo p.
inline Reduction reduce_mod_p(const GroupClosure<ExactRat>& G, std::uint64_t p) {
  require_prime(ExactInt(p));
  for (const auto& g : G.elements())
    for (const auto& x : g.entries())
      if (denominator_of(x) % p == 0)
        throw input_error("entry " + x.str() + " has a denominator divisible by " + std::to_string(p));

  Reduction out;
  auto& rep = out.report;
  rep.p = p;
  const std::uint64_t order = G.order();
  std::map<FpMatrix, std::vector<std::uint64_t>> fibres;  // image -> element orders
  for (const auto& g : G.elements()) {
    FpMatrix r = reduce_matrix(g, p);
    const std::uint64_t ord = element_order(g, order);
    if (r.is_identity()) rep.kernel_element_orders.push_back(ord);
    fibres[std::move(r)].push_back(ord);
  }
  std::sort(rep.kernel_element_orders.begin(), rep.kernel_element_orders.end());
  rep.image_size = fibres.size();
  rep.injective = rep.image_size == order;
  // No element of order prime to p other than the identity dies; fibres of other
  // images may still hold several such elements (e.g. a 3-cycle coset of V4 in S4).
  rep.injective_on_coprime_order = std::all_of(
      rep.kernel_element_orders.begin(), rep.kernel_element_orders.end(),
      [&](std::uint64_t o) { return o == 1 || o % p == 0; });
  for (const auto& [img, orders] : fibres) out.image.push_back(img);
  rep.kernel_orders_are_p_powers = std::all_of(
      rep.kernel_element_orders.begin(), rep.kernel_element_orders.end(), [&](std::uint64_t o) {
        while (o % p == 0) o /= p;
        return o == 1;
      });
  return out;
}

// ---------------------------------------------------------------------------
// Isometry groups of non-singular forms over F_q, q odd

enum class IsometryKind { unitary, symplectic, orthogonal };

inline std::optional<IsometryKind> parse_isometry_kind(const std::string& s) {
  if (s == "unitary") return IsometryKind::unitary;
  if (s == "symplectic") return IsometryKind::symplectic;
  if (s == "orthogonal") return IsometryKind::orthogonal;
  return std::nullopt;
}

/// Factorization of a product of integers q^e +- 1 etc.; each term must be positive.
inline Factorization factor_positive(const ExactInt& v) {
  if (v <= 0) throw input_error("isometry order term is not positive");
  return Factorization::of(v);
}

/// |Iso(V, beta)| for dim V = n over F_{p^f}, p odd. `epsilon` is used for even-dimensional
/// orthogonal groups only.
inline Factorization isometry_order(IsometryKind kind, std::uint64_t n, std::uint64_t p, std::uint64_t f,
                                    std::optional<int> epsilon = std::nullopt) {
  if (n == 0 || f == 0) throw input_error("isometry_order requires n, f >= 1");
  require_prime(ExactInt(p));
  if (p == 2) throw input_error("isometry orders are implemented for odd characteristic only");
  const ExactInt P(p), q = pow_int(P, f);
  Factorization out;
  switch (kind) {
    case IsometryKind::unitary: {
      if (f % 2 != 0) throw input_error("unitary groups need an even field degree f");
      out.multiply_prime(P, f * n * (n - 1) / 4);
      const ExactInt root = pow_int(P, f / 2);
      for (std::uint64_t i = 1; i <= n; ++i)
        out *= factor_positive(pow_int(root, i) + (i % 2 == 0 ? -1 : 1));
      break;
    }
    case IsometryKind::symplectic: {
      if (n % 2 != 0) throw input_error("symplectic groups need even dimension");
      out.multiply_prime(P, f * n * n / 4);
      for (std::uint64_t i = 1; i <= n / 2; ++i) out *= factor_power_minus_one(q, 2 * i);
      break;
    }
    case IsometryKind::orthogonal: {
      out.multiply_prime(2, 1);
      if (n % 2 == 1) {
        out.multiply_prime(P, f * (n - 1) * (n - 1) / 4);
        for (std::uint64_t i = 1; i <= (n - 1) / 2; ++i) out *= factor_power_minus_one(q, 2 * i);
      } else {
        if (!epsilon || (*epsilon != 1 && *epsilon != -1))
          throw input_error("even-dimensional orthogonal groups need epsilon = +1 or -1");
        out.multiply_prime(P, f * n * (n - 2) / 4);
        out *= factor_positive(pow_int(q, n / 2) - *epsilon);
        for (std::uint64_t i = 1; i <= (n - 2) / 2; ++i) out *= factor_power_minus_one(q, 2 * i);
      }
      break;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// 2-adic identities

inline std::uint64_t two_valuation(const ExactInt& v) { return valuation(v, ExactInt(2)); }

/// p = -1 + 2^k mod 2^(k+1).
inline bool satisfies_two_power_congruence(std::uint64_t p, std::uint64_t k) {
  const ExactInt mod = pow_int(ExactInt(2), k + 1);
  return (ExactInt(p) + 1) % mod == pow_int(ExactInt(2), k);
}

/// Verifies (p^i - (-1)^i)_2 = 2^k i_2 for 1 <= i <= i_max.
inline bool two_adic_checks(std::uint64_t p, std::uint64_t k, std::uint64_t i_max) {
  require_prime(ExactInt(p));
  if (k < 2) throw input_error("two_adic_checks requires k >= 2");
  if (!satisfies_two_power_congruence(p, k))
    throw input_error(std::to_string(p) + " is not congruent to -1 + 2^" + std::to_string(k) + " mod 2^" +
                      std::to_string(k + 1));
  for (std::uint64_t i = 1; i <= i_max; ++i) {
    const ExactInt term = pow_int(ExactInt(p), i) + (i % 2 == 0 ? -1 : 1);
    if (two_valuation(term) != k + two_valuation(ExactInt(i))) return false;
  }
  return true;
}

/// Smallest prime p = -1 + 2^m mod 2^(m+1).
inline std::uint64_t smallest_two_power_prime(std::uint64_t m) {
  for (std::uint64_t p = 3; p < kSpecialPrimeSearchBound; p += 2)
    if (satisfies_two_power_congruence(p, m) && is_prime(p)) return p;
  throw capacity_error("no prime found below the search bound");
}

struct UnitaryTwoPart {
  Factorization iso_two_part;     // prod (p^i - (-1)^i)_2
  Factorization expected;         // 2^(mn) (n!)_2
  Factorization schur_two_part;   // S(n, K)_2
  bool identity_ok = false;
  bool divides_schur = false;
  bool holds() const { return identity_ok && divides_schur; }
};

/// Unitary case for K = Q(zeta_{2^m}), m >= 2, with p = -1 + 2^m mod 2^(m+1).
inline UnitaryTwoPart lemma510_two_part_check(const SchurField& K, std::uint64_t n, std::uint64_t p) {
  if (n == 0) throw input_error("lemma510_two_part_check requires n >= 1");
  if (K.is_rational()) throw input_error("K must be Q(zeta_{2^m}) with m >= 2");
  const std::uint64_t k = *K.conductor();
  if (k < 4 || (k & (k - 1)) != 0) throw input_error("conductor must be a power of 2 that is at least 4");
  std::uint64_t m = 0;
  for (std::uint64_t r = k; r > 1; r >>= 1U) ++m;
  require_prime(ExactInt(p));
  if (!satisfies_two_power_congruence(p, m))
    throw input_error(std::to_string(p) + " is not congruent to -1 + 2^" + std::to_string(m) + " mod 2^" +
                      std::to_string(m + 1));
  UnitaryTwoPart out;
  std::uint64_t v = 0;
  for (std::uint64_t i = 1; i <= n; ++i) v += two_valuation(pow_int(ExactInt(p), i) + (i % 2 == 0 ? -1 : 1));
  out.iso_two_part = Factorization::prime_power(2, v);
  out.expected = Factorization::prime_power(2, m * n + factorial_valuation(n, 2));
  out.schur_two_part = schur_bound(n, K).restricted_to(2);
  out.identity_ok = out.iso_two_part == out.expected;
  out.divides_schur = out.iso_two_part.divides(out.schur_two_part);
  return out;
}

/// o(n, q): 2 prod_{i=1}^{(n-1)/2} (q^{2i} - 1) for odd n, prod_{i=1}^{n/2} (q^{2i} - 1) for even n.
inline Factorization orthogonal_symplectic_core(std::uint64_t n, const ExactInt& q) {
  Factorization out;
  if (n % 2 == 1) out.multiply_prime(2, 1);
  for (std::uint64_t i = 1; i <= n / 2; ++i) out *= factor_power_minus_one(q, 2 * i);
  return out;
}

struct RealTwoPart {
  Factorization actual;    // o(n, p^f)_2
  Factorization expected;  // f^floor(n/2) 2^n (n!)_2
  bool holds() const { return actual == expected; }
};

/// Real case: p = 3 mod 8 and f a power of 2.
inline RealTwoPart lemma510_real_check(std::uint64_t n, std::uint64_t p, std::uint64_t f) {
  if (n == 0 || f == 0) throw input_error("lemma510_real_check requires n, f >= 1");
  require_prime(ExactInt(p));
  if (p % 8 != 3) throw input_error("real case requires p = 3 mod 8");
  if ((f & (f - 1)) != 0) throw input_error("real case requires f to be a power of 2");
  RealTwoPart out;
  out.actual = orthogonal_symplectic_core(n, pow_int(ExactInt(p), f)).restricted_to(2);
  std::uint64_t vf = 0;
  for (std::uint64_t r = f; r > 1; r >>= 1U) ++vf;
  out.expected = Factorization::prime_power(2, vf * (n / 2) + n + factorial_valuation(n, 2));
  return out;
}

}  // namespace minkowski
