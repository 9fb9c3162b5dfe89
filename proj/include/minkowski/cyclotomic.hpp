#pragma once

// Arithmetic in the cyclotomic field Q(zeta_k), zeta_k = exp(2 pi i / k).
// Elements are residues modulo the k-th cyclotomic polynomial, stored as the
// rational coefficient vector of 1, zeta, ..., zeta^(d-1) with d = phi(k).

#include <cstdint>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "minkowski/exactnum.hpp"
#include "minkowski/polynomial.hpp"

namespace minkowski {

class CycloField {
 public:
  std::uint64_t conductor() const { return k_; }
  std::size_t degree() const { return d_; }
  /// Coefficients of Phi_k, ascending; length degree() + 1, monic.
  const std::vector<ExactInt>& polynomial() const { return phi_; }
  const RatPolynomial& modulus() const { return modulus_; }

  /// Reduced coefficient vector of zeta^e.
  const std::vector<ExactRat>& zeta_power(std::uint64_t e) const { return powers_[e % k_]; }

  /// Reduce an arbitrary polynomial in zeta to a length-degree() vector.
  std::vector<ExactRat> reduce(const RatPolynomial& p) const {
    std::vector<ExactRat> out(d_);
    // Fold with zeta^k = 1 first, then use the power table.
    for (std::size_t i = 0; i < p.size(); ++i) {
      const ExactRat& c = p.coefficients()[i];
      if (c == 0) continue;
      const auto& z = powers_[i % k_];
      for (std::size_t j = 0; j < d_; ++j)
        if (z[j] != 0) out[j] += c * z[j];
    }
    return out;
  }

  friend std::shared_ptr<const CycloField> cyclo_field(std::uint64_t k);

 private:
  CycloField() = default;

  std::uint64_t k_ = 1;
  std::size_t d_ = 1;
  std::vector<ExactInt> phi_;
  RatPolynomial modulus_;
  std::vector<std::vector<ExactRat>> powers_;
};

using FieldPtr = std::shared_ptr<const CycloField>;

namespace detail {

inline RatPolynomial cyclotomic_polynomial(std::uint64_t k,
                                           std::map<std::uint64_t, RatPolynomial>& memo) {
  if (auto it = memo.find(k); it != memo.end()) return it->second;
  // x^k - 1 divided exactly by Phi_d for every proper divisor d of k.
  RatPolynomial p = RatPolynomial::monomial(1, k) - RatPolynomial::constant(1);
  for (std::uint64_t d = 1; d < k; ++d) {
    if (k % d != 0) continue;
    auto [q, r] = p.divmod(cyclotomic_polynomial(d, memo));
    if (!r.is_zero()) throw internal_error("cyclotomic division left a remainder");
    p = std::move(q);
  }
  memo.emplace(k, p);
  return p;
}

}  // namespace detail

/// Builds Q(zeta_k), computing Phi_k by recursive exact division of x^k - 1.
inline FieldPtr cyclo_field(std::uint64_t k) {
  if (k == 0) throw input_error("cyclotomic conductor must be >= 1");
  std::map<std::uint64_t, RatPolynomial> memo;
  RatPolynomial phi = detail::cyclotomic_polynomial(k, memo);

  auto f = std::shared_ptr<CycloField>(new CycloField());
  f->k_ = k;
  f->d_ = static_cast<std::size_t>(phi.degree());
  if (f->d_ != euler_phi(k) || phi.leading() != 1)
    throw internal_error("cyclotomic polynomial has wrong degree or is not monic");
  for (const auto& c : phi.coefficients()) {
    if (!is_integer(c)) throw internal_error("cyclotomic polynomial is not integral");
    f->phi_.push_back(numerator_of(c));
  }
  f->modulus_ = phi;
  f->powers_.reserve(k);
  for (std::uint64_t e = 0; e < k; ++e) {
    auto [q, r] = RatPolynomial::monomial(1, e).divmod(phi);
    std::vector<ExactRat> v(f->d_);
    for (std::size_t j = 0; j < r.size(); ++j) v[j] = r.coefficients()[j];
    f->powers_.push_back(std::move(v));
  }
  return f;
}

/// An element of Q(zeta_k).
class CycloElem {
 public:
  CycloElem(FieldPtr field, const ExactRat& r) : field_(std::move(field)), c_(field_->degree()) {
    c_[0] = r;
  }
  CycloElem(FieldPtr field, std::vector<ExactRat> coeffs) : field_(std::move(field)) {
    if (coeffs.size() > field_->degree()) {
      c_ = field_->reduce(RatPolynomial(std::move(coeffs)));
    } else {
      coeffs.resize(field_->degree());
      c_ = std::move(coeffs);
    }
  }

  static CycloElem zeta(FieldPtr field, std::uint64_t power = 1) {
    auto v = field->zeta_power(power);
    return CycloElem(std::move(field), std::move(v));
  }

  const FieldPtr& field() const { return field_; }
  const std::vector<ExactRat>& coefficients() const { return c_; }

  bool is_zero() const {
    for (const auto& x : c_)
      if (x != 0) return false;
    return true;
  }

  bool is_rational() const {
    for (std::size_t j = 1; j < c_.size(); ++j)
      if (c_[j] != 0) return false;
    return true;
  }

  std::optional<ExactRat> rational_value() const {
    if (!is_rational()) return std::nullopt;
    return c_[0];
  }

  CycloElem& operator+=(const CycloElem& o) {
    check_same(o);
    for (std::size_t j = 0; j < c_.size(); ++j) c_[j] += o.c_[j];
    return *this;
  }
  CycloElem& operator-=(const CycloElem& o) {
    check_same(o);
    for (std::size_t j = 0; j < c_.size(); ++j) c_[j] -= o.c_[j];
    return *this;
  }
  CycloElem& operator*=(const CycloElem& o) {
    check_same(o);
    const std::size_t d = c_.size();
    std::vector<ExactRat> prod(2 * d - 1);
    for (std::size_t i = 0; i < d; ++i) {
      if (c_[i] == 0) continue;
      for (std::size_t j = 0; j < d; ++j)
        if (o.c_[j] != 0) prod[i + j] += c_[i] * o.c_[j];
    }
    c_ = field_->reduce(RatPolynomial(std::move(prod)));
    return *this;
  }
  CycloElem& operator/=(const CycloElem& o) { return *this *= o.inverse(); }

  friend CycloElem operator+(CycloElem a, const CycloElem& b) { return a += b; }
  friend CycloElem operator-(CycloElem a, const CycloElem& b) { return a -= b; }
  friend CycloElem operator*(CycloElem a, const CycloElem& b) { return a *= b; }
  friend CycloElem operator/(CycloElem a, const CycloElem& b) { return a /= b; }
  friend CycloElem operator-(CycloElem a) {
    for (auto& x : a.c_) x = -x;
    return a;
  }

  /// Multiplicative inverse by the extended Euclidean algorithm against Phi_k.
  CycloElem inverse() const {
    if (is_zero())
      throw input_error("division by zero in Q(zeta_" + std::to_string(field_->conductor()) + ")");
    RatPolynomial r0 = field_->modulus(), r1(c_);
    RatPolynomial s0, s1 = RatPolynomial::constant(1);
    while (r1.degree() > 0) {
      auto [q, r] = r0.divmod(r1);
      r0 = std::move(r1);
      r1 = std::move(r);
      RatPolynomial s = s0 - q * s1;
      s0 = std::move(s1);
      s1 = std::move(s);
    }
    // r1 is now a nonzero constant because Phi_k is irreducible.
    if (r1.is_zero()) throw internal_error("non-invertible nonzero element in a field");
    s1 *= ExactRat(1) / r1.leading();
    return CycloElem(field_, field_->reduce(s1));
  }

  /// Image under the automorphism zeta -> zeta^j (gcd(j, k) = 1).
  CycloElem galois_conjugate(std::uint64_t j) const {
    if (std::gcd(j, field_->conductor()) != 1)
      throw input_error("zeta -> zeta^j is not an automorphism when gcd(j, k) != 1");
    std::vector<ExactRat> out(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (c_[i] == 0) continue;
      const auto& z = field_->zeta_power(i * j);
      for (std::size_t t = 0; t < out.size(); ++t)
        if (z[t] != 0) out[t] += c_[i] * z[t];
    }
    return CycloElem(field_, std::move(out));
  }

  friend bool operator==(const CycloElem& a, const CycloElem& b) {
    return a.field_->conductor() == b.field_->conductor() && a.c_ == b.c_;
  }

  /// "[c0,c1,...]"; the group-file entry syntax.
  std::string to_string() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t j = 0; j < c_.size(); ++j) os << (j ? "," : "") << c_[j];
    os << ']';
    return os.str();
  }

 private:
  void check_same(const CycloElem& o) const {
    if (field_->conductor() != o.field_->conductor())
      throw input_error("mixed cyclotomic fields in arithmetic");
  }

  FieldPtr field_;
  std::vector<ExactRat> c_;
};

/// Tr_{Q(zeta_k)/Q}: the sum of all Galois conjugates.
inline ExactRat cyclo_trace_to_Q(const CycloElem& e) {
  const std::uint64_t k = e.field()->conductor();
  CycloElem sum(e.field(), ExactRat(0));
  for (std::uint64_t j = 1; j <= k; ++j)
    if (std::gcd(j, k) == 1) sum += e.galois_conjugate(j);
  auto r = sum.rational_value();
  if (!r) throw internal_error("Galois trace did not land in Q");
  return *r;
}

}  // namespace minkowski
