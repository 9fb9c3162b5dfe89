#pragma once

// Exact integers and rationals, primality, p-adic valuations and prime
// factorizations.

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "minkowski/errors.hpp"

namespace minkowski {

using ExactInt = boost::multiprecision::cpp_int;
using ExactRat = boost::multiprecision::cpp_rational;

inline ExactInt numerator_of(const ExactRat& r) { return boost::multiprecision::numerator(r); }
inline ExactInt denominator_of(const ExactRat& r) { return boost::multiprecision::denominator(r); }

inline ExactInt abs_value(const ExactInt& x) { return x < 0 ? ExactInt(-x) : x; }

inline ExactInt gcd(const ExactInt& a, const ExactInt& b) {
  return boost::multiprecision::gcd(a, b);
}

inline ExactInt lcm(const ExactInt& a, const ExactInt& b) {
  if (a == 0 || b == 0) return 0;
  return abs_value(a / gcd(a, b) * b);
}

inline ExactInt pow_int(ExactInt base, std::uint64_t exp) {
  ExactInt result = 1;
  while (exp != 0) {
    if (exp & 1U) result *= base;
    exp >>= 1U;
    if (exp != 0) base *= base;
  }
  return result;
}

inline ExactInt powmod(ExactInt base, ExactInt exp, const ExactInt& mod) {
  ExactInt result = 1 % mod;
  base %= mod;
  if (base < 0) base += mod;
  while (exp > 0) {
    if ((exp & 1) != 0) result = result * base % mod;
    exp >>= 1;
    base = base * base % mod;
  }
  return result;
}

/// Least non-negative residue of a rational with denominator coprime to `mod`.
inline ExactInt residue_mod(const ExactRat& r, const ExactInt& mod) {
  ExactInt num = numerator_of(r) % mod;
  if (num < 0) num += mod;
  const ExactInt den = denominator_of(r) % mod;
  if (gcd(den, mod) != 1) {
    throw input_error("denominator " + denominator_of(r).str() + " is not invertible modulo " +
                      mod.str());
  }
  // Fermat-free inverse via extended Euclid.
  ExactInt old_r = den, cur_r = mod, old_s = 1, cur_s = 0;
  while (cur_r != 0) {
    const ExactInt q = old_r / cur_r;
    old_r -= q * cur_r;
    std::swap(old_r, cur_r);
    old_s -= q * cur_s;
    std::swap(old_s, cur_s);
  }
  ExactInt inv = old_s % mod;
  if (inv < 0) inv += mod;
  return num * inv % mod;
}

inline bool is_integer(const ExactRat& r) { return denominator_of(r) == 1; }

// ---------------------------------------------------------------------------
// Primes

/// Sieve of Eratosthenes: all primes strictly below `bound`.
inline std::vector<std::uint64_t> primes_below(std::uint64_t bound) {
  std::vector<std::uint64_t> out;
  if (bound <= 2) return out;
  std::vector<bool> composite(bound, false);
  for (std::uint64_t i = 2; i < bound; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (std::uint64_t j = i * i; j < bound; j += i) composite[j] = true;
  }
  return out;
}

/// Miller-Rabin with the first 20 prime bases; deterministic below 3.3e24.
inline bool is_prime(const ExactInt& n) {
  if (n < 2) return false;
  static constexpr std::uint32_t kBases[] = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29,
                                             31, 37, 41, 43, 47, 53, 59, 61, 67, 71};
  for (std::uint32_t p : kBases) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  ExactInt d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint32_t a : kBases) {
    ExactInt x = powmod(ExactInt(a), d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (unsigned r = 1; r < s; ++r) {
      x = x * x % n;
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

inline bool is_prime(std::uint64_t n) { return is_prime(ExactInt(n)); }

inline void require_prime(const ExactInt& p, const char* what = "p") {
  if (!is_prime(p)) throw input_error(std::string(what) + " = " + p.str() + " is not prime");
}

namespace detail {

// Brent's variant of Pollard rho; n must be odd and composite.
inline ExactInt pollard_brent(const ExactInt& n) {
  for (ExactInt c = 1;; ++c) {
    ExactInt y = 2, x, ys, g = 1, q = 1;
    const unsigned m = 64;
    unsigned r = 1;
    auto step = [&](const ExactInt& v) { return (v * v + c) % n; };
    do {
      x = y;
      for (unsigned i = 0; i < r; ++i) y = step(y);
      unsigned k = 0;
      do {
        ys = y;
        for (unsigned i = 0; i < std::min(m, r - k); ++i) {
          y = step(y);
          q = q * abs_value(x - y) % n;
        }
        g = gcd(q, n);
        k += m;
      } while (k < r && g == 1);
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        ys = step(ys);
        g = gcd(abs_value(x - ys), n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

inline void factor_into(ExactInt n, std::map<ExactInt, std::uint64_t>& out) {
  static const std::vector<std::uint64_t> small = primes_below(10000);
  for (std::uint64_t p : small) {
    if (n == 1) return;
    if (ExactInt(p) * p > n) break;
    while (n % p == 0) {
      n /= p;
      ++out[ExactInt(p)];
    }
  }
  if (n == 1) return;
  std::vector<ExactInt> stack{n};
  while (!stack.empty()) {
    ExactInt m = std::move(stack.back());
    stack.pop_back();
    if (m == 1) continue;
    if (is_prime(m)) {
      ++out[m];
      continue;
    }
    ExactInt d = pollard_brent(m);
    stack.push_back(d);
    stack.push_back(m / d);
  }
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Valuations

/// Exponent of the prime p in m (m != 0).
inline std::uint64_t valuation(ExactInt m, const ExactInt& p) {
  if (m == 0) throw input_error("valuation of zero is undefined");
  m = abs_value(m);
  std::uint64_t v = 0;
  while (m % p == 0) {
    m /= p;
    ++v;
  }
  return v;
}

struct PPart {
  std::uint64_t valuation = 0;
  ExactInt part = 1;
};

/// The largest power of p dividing m, together with its exponent.
inline PPart p_part(const ExactInt& m, const ExactInt& p) {
  if (m < 1) throw input_error("p_part requires m >= 1, got " + m.str());
  require_prime(p);
  PPart out;
  out.valuation = valuation(m, p);
  out.part = pow_int(p, out.valuation);
  return out;
}

/// Legendre's formula: exponent of p in m!.
inline std::uint64_t factorial_valuation(std::uint64_t m, std::uint64_t p) {
  std::uint64_t v = 0;
  while (m >= p) {
    m /= p;
    v += m;
  }
  return v;
}

// ---------------------------------------------------------------------------
// Factorization

/// A positive integer stored as prime -> exponent. Zero exponents are never stored.
class Factorization {
 public:
  using Map = std::map<ExactInt, std::uint64_t>;

  Factorization() = default;

  /// Full factorization of m >= 1.
  static Factorization of(const ExactInt& m) {
    if (m < 1) throw input_error("cannot factor non-positive integer " + m.str());
    Factorization f;
    detail::factor_into(m, f.exps_);
    return f;
  }

  static Factorization prime_power(const ExactInt& p, std::uint64_t e) {
    require_prime(p);
    Factorization f;
    if (e != 0) f.exps_[p] = e;
    return f;
  }

  /// Exact factorization of n!.
  static Factorization factorial(std::uint64_t n) {
    Factorization f;
    for (std::uint64_t p : primes_below(n + 1)) f.exps_[ExactInt(p)] = factorial_valuation(n, p);
    return f;
  }

  std::uint64_t exponent(const ExactInt& p) const {
    auto it = exps_.find(p);
    return it == exps_.end() ? 0 : it->second;
  }

  const Map& entries() const { return exps_; }
  bool is_one() const { return exps_.empty(); }

  ExactInt value() const {
    ExactInt v = 1;
    for (const auto& [p, e] : exps_) v *= pow_int(p, e);
    return v;
  }

  /// The p-primary component as a factorization (possibly trivial).
  Factorization restricted_to(const ExactInt& p) const {
    Factorization f;
    if (auto e = exponent(p); e != 0) f.exps_[p] = e;
    return f;
  }

  /// Everything except the p-primary component.
  Factorization without(const ExactInt& p) const {
    Factorization f = *this;
    f.exps_.erase(p);
    return f;
  }

  void multiply_prime(const ExactInt& p, std::uint64_t e) {
    if (e != 0) exps_[p] += e;
  }

  Factorization& operator*=(const Factorization& o) {
    for (const auto& [p, e] : o.exps_) exps_[p] += e;
    return *this;
  }
  friend Factorization operator*(Factorization a, const Factorization& b) { return a *= b; }

  /// Exact quotient; throws if `o` does not divide *this.
  Factorization& operator/=(const Factorization& o) {
    if (!o.divides(*this)) throw input_error("inexact division of factorizations");
    for (const auto& [p, e] : o.exps_) {
      auto it = exps_.find(p);
      it->second -= e;
      if (it->second == 0) exps_.erase(it);
    }
    return *this;
  }
  friend Factorization operator/(Factorization a, const Factorization& b) { return a /= b; }

  /// Exponent-wise comparison; never materializes the integers.
  bool divides(const Factorization& o) const {
    return std::all_of(exps_.begin(), exps_.end(),
                       [&](const auto& pe) { return pe.second <= o.exponent(pe.first); });
  }

  static Factorization lcm(const Factorization& a, const Factorization& b) {
    Factorization f = a;
    for (const auto& [p, e] : b.exps_) f.exps_[p] = std::max(f.exponent(p), e);
    return f;
  }

  friend bool operator==(const Factorization&, const Factorization&) = default;

  /// "2^7 · 3^2 · 5"; "1" for the empty product.
  std::string to_string(const std::string& sep = " · ") const {
    if (exps_.empty()) return "1";
    std::ostringstream os;
    bool first = true;
    for (const auto& [p, e] : exps_) {
      if (!first) os << sep;
      first = false;
      os << p;
      if (e != 1) os << '^' << e;
    }
    return os.str();
  }

 private:
  Map exps_;
};

/// p-part of m! as a factorization restricted to p.
inline Factorization factorial_p_part(std::uint64_t m, const ExactInt& p) {
  require_prime(p);
  return Factorization::prime_power(p, factorial_valuation(m, static_cast<std::uint64_t>(p)));
}

inline std::uint64_t euler_phi(std::uint64_t k) {
  std::uint64_t result = k;
  for (std::uint64_t p = 2; p * p <= k; ++p) {
    if (k % p != 0) continue;
    while (k % p == 0) k /= p;
    result -= result / p;
  }
  if (k > 1) result -= result / k;
  return result;
}

/// Multiplicative order of a modulo m (gcd(a, m) = 1 required).
inline std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t m) {
  if (std::gcd(a, m) != 1) throw input_error("order undefined: gcd(a, m) != 1");
  std::uint64_t x = a % m, k = 1;
  while (x != 1 % m) {
    x = static_cast<std::uint64_t>((static_cast<unsigned __int128>(x) * a) % m);
    ++k;
  }
  return k;
}

}  // namespace minkowski
