#pragma once

#include <cstddef>
#include <initializer_list>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "minkowski/exactnum.hpp"

namespace minkowski {

/// Univariate polynomial with exact rational coefficients, ascending degree.
/// Trailing zeros are always trimmed, so the zero polynomial has no coefficients.
class RatPolynomial {
 public:
  RatPolynomial() = default;
  explicit RatPolynomial(std::vector<ExactRat> coeffs) : c_(std::move(coeffs)) { trim(); }
  RatPolynomial(std::initializer_list<ExactRat> coeffs) : c_(coeffs) { trim(); }

  static RatPolynomial constant(const ExactRat& v) { return RatPolynomial({v}); }
  static RatPolynomial monomial(const ExactRat& v, std::size_t degree) {
    std::vector<ExactRat> c(degree + 1);
    c[degree] = v;
    return RatPolynomial(std::move(c));
  }

  bool is_zero() const { return c_.empty(); }
  /// Degree; -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  std::size_t size() const { return c_.size(); }
  const std::vector<ExactRat>& coefficients() const { return c_; }

  ExactRat coeff(std::size_t i) const { return i < c_.size() ? c_[i] : ExactRat(0); }
  const ExactRat& leading() const { return c_.back(); }

  ExactRat operator()(const ExactRat& x) const {
    ExactRat acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  RatPolynomial& operator+=(const RatPolynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  RatPolynomial& operator-=(const RatPolynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  RatPolynomial& operator*=(const ExactRat& s) {
    if (s == 0) {
      c_.clear();
      return *this;
    }
    for (auto& x : c_) x *= s;
    return *this;
  }

  friend RatPolynomial operator+(RatPolynomial a, const RatPolynomial& b) { return a += b; }
  friend RatPolynomial operator-(RatPolynomial a, const RatPolynomial& b) { return a -= b; }
  friend RatPolynomial operator-(RatPolynomial a) {
    for (auto& x : a.c_) x = -x;
    return a;
  }
  friend RatPolynomial operator*(RatPolynomial a, const ExactRat& s) { return a *= s; }

  friend RatPolynomial operator*(const RatPolynomial& a, const RatPolynomial& b) {
    return a.multiplied_truncated(b, static_cast<std::size_t>(-1));
  }
  RatPolynomial& operator*=(const RatPolynomial& o) { return *this = *this * o; }

  /// Product with every term of degree > max_degree discarded (truncated power series).
  RatPolynomial multiplied_truncated(const RatPolynomial& o, std::size_t max_degree) const {
    if (is_zero() || o.is_zero()) return {};
    std::size_t n = c_.size() + o.c_.size() - 1;
    if (max_degree != static_cast<std::size_t>(-1)) n = std::min(n, max_degree + 1);
    std::vector<ExactRat> r(n);
    for (std::size_t i = 0; i < c_.size() && i < n; ++i) {
      if (c_[i] == 0) continue;
      for (std::size_t j = 0; j < o.c_.size() && i + j < n; ++j) r[i + j] += c_[i] * o.c_[j];
    }
    return RatPolynomial(std::move(r));
  }

  /// Euclidean division; throws on a zero divisor.
  std::pair<RatPolynomial, RatPolynomial> divmod(const RatPolynomial& d) const {
    if (d.is_zero()) throw input_error("polynomial division by zero");
    std::vector<ExactRat> rem = c_;
    const std::size_t dn = d.c_.size();
    if (rem.size() < dn) return {RatPolynomial{}, *this};
    std::vector<ExactRat> quo(rem.size() - dn + 1);
    for (std::size_t k = quo.size(); k-- > 0;) {
      const ExactRat q = rem[k + dn - 1] / d.leading();
      quo[k] = q;
      if (q == 0) continue;
      for (std::size_t j = 0; j < dn; ++j) rem[k + j] -= q * d.c_[j];
    }
    rem.resize(dn - 1);
    return {RatPolynomial(std::move(quo)), RatPolynomial(std::move(rem))};
  }

  /// Denominator of the polynomial: lcm of coefficient denominators (1 for zero).
  ExactInt denominator() const {
    ExactInt d = 1;
    for (const auto& x : c_) d = lcm(d, denominator_of(x));
    return d;
  }

  bool has_integer_coefficients() const {
    for (const auto& x : c_)
      if (!is_integer(x)) return false;
    return true;
  }

  friend bool operator==(const RatPolynomial&, const RatPolynomial&) = default;

  std::string to_string(const std::string& var = "x") const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (c_[i] == 0) continue;
      ExactRat v = c_[i];
      if (!first) os << (v < 0 ? " - " : " + ");
      else if (v < 0) os << "-";
      if (v < 0) v = -v;
      first = false;
      if (i == 0 || v != 1) os << v;
      if (i >= 1) {
        if (v != 1) os << "*";
        os << var;
        if (i > 1) os << "^" << i;
      }
    }
    return os.str();
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<ExactRat> c_;
};

}  // namespace minkowski
