#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "minkowski/cyclotomic.hpp"
#include "minkowski/exactnum.hpp"

namespace minkowski {

// Scalar hooks shared by ExactRat and CycloElem.

inline bool is_zero(const ExactRat& x) { return x == 0; }
inline bool is_zero(const CycloElem& x) { return x.is_zero(); }

inline ExactRat one_like(const ExactRat&) { return 1; }
inline CycloElem one_like(const CycloElem& x) { return CycloElem(x.field(), ExactRat(1)); }
inline ExactRat zero_like(const ExactRat&) { return 0; }
inline CycloElem zero_like(const CycloElem& x) { return CycloElem(x.field(), ExactRat(0)); }

inline std::optional<ExactRat> as_rational(const ExactRat& x) { return x; }
inline std::optional<ExactRat> as_rational(const CycloElem& x) { return x.rational_value(); }

inline std::string entry_string(const ExactRat& x) { return x.str(); }
inline std::string entry_string(const CycloElem& x) { return x.to_string(); }

/// Dense n x n matrix over an exact field, row-major.
template <class T>
class SquareMatrix {
 public:
  using Scalar = T;

  SquareMatrix(std::size_t n, std::vector<T> entries) : n_(n), a_(std::move(entries)) {
    if (n_ == 0 || a_.size() != n_ * n_) throw input_error("matrix entry count does not match dimension");
  }

  static SquareMatrix identity(std::size_t n, const T& one) {
    const T zero = one - one;
    std::vector<T> e(n * n, zero);
    for (std::size_t i = 0; i < n; ++i) e[i * n + i] = one;
    return SquareMatrix(n, std::move(e));
  }

  SquareMatrix identity_like() const { return identity(n_, one_like(a_.front())); }

  std::size_t dim() const { return n_; }
  const T& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
  T& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  const std::vector<T>& entries() const { return a_; }

  friend SquareMatrix operator*(const SquareMatrix& x, const SquareMatrix& y) {
    if (x.n_ != y.n_) throw input_error("dimension mismatch in matrix product");
    const std::size_t n = x.n_;
    std::vector<T> out;
    out.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        std::optional<T> acc;
        for (std::size_t k = 0; k < n; ++k) {
          const T& u = x(i, k);
          if (is_zero(u) || is_zero(y(k, j))) continue;
          if (acc) *acc += u * y(k, j);
          else acc = u * y(k, j);
        }
        out.push_back(acc ? std::move(*acc) : zero_like(x(i, 0)));
      }
    }
    return SquareMatrix(n, std::move(out));
  }

  friend bool operator==(const SquareMatrix& x, const SquareMatrix& y) {
    return x.n_ == y.n_ && x.a_ == y.a_;
  }

  T trace() const {
    T s = a_[0];
    for (std::size_t i = 1; i < n_; ++i) s += (*this)(i, i);
    return s;
  }

  bool is_identity() const { return *this == identity_like(); }

  SquareMatrix pow(std::uint64_t e) const {
    SquareMatrix result = identity_like(), base = *this;
    while (e != 0) {
      if (e & 1U) result = result * base;
      e >>= 1U;
      if (e != 0) base = base * base;
    }
    return result;
  }

  /// Canonical row-major serialization of reduced entries; equal keys iff equal matrices.
  std::string key() const {
    std::string s;
    for (const auto& x : a_) {
      s += entry_string(x);
      s += ';';
    }
    return s;
  }

  T determinant() const {
    auto [det, inv] = eliminate(false);
    return det;
  }

  /// Inverse; throws input_error when singular.
  SquareMatrix inverse() const {
    auto [det, inv] = eliminate(true);
    if (is_zero(det)) throw input_error("matrix is singular");
    return std::move(*inv);
  }

 private:
  // Gauss-Jordan elimination; returns the determinant and, optionally, the inverse.
  std::pair<T, std::optional<SquareMatrix>> eliminate(bool want_inverse) const {
    const std::size_t n = n_;
    std::vector<T> m = a_;
    SquareMatrix inv = identity_like();
    T det = one_like(a_.front());
    for (std::size_t col = 0; col < n; ++col) {
      std::size_t piv = col;
      while (piv < n && is_zero(m[piv * n + col])) ++piv;
      if (piv == n) return {zero_like(det), std::nullopt};
      if (piv != col) {
        for (std::size_t j = 0; j < n; ++j) {
          std::swap(m[piv * n + j], m[col * n + j]);
          std::swap(inv(piv, j), inv(col, j));
        }
        det = -det;
      }
      const T p = m[col * n + col];
      det *= p;
      const T pinv = one_like(p) / p;
      for (std::size_t j = 0; j < n; ++j) {
        m[col * n + j] *= pinv;
        if (want_inverse) inv(col, j) *= pinv;
      }
      for (std::size_t r = 0; r < n; ++r) {
        if (r == col || is_zero(m[r * n + col])) continue;
        const T f = m[r * n + col];
        for (std::size_t j = 0; j < n; ++j) {
          if (!is_zero(m[col * n + j])) m[r * n + j] -= f * m[col * n + j];
          if (want_inverse && !is_zero(inv(col, j))) inv(r, j) -= f * inv(col, j);
        }
      }
    }
    if (!want_inverse) return {det, std::nullopt};
    return {det, std::move(inv)};
  }

  std::size_t n_;
  std::vector<T> a_;
};

using RatMatrix = SquareMatrix<ExactRat>;
using CycloMatrix = SquareMatrix<CycloElem>;

/// Rational matrix from integer rows.
inline RatMatrix rat_matrix(const std::vector<std::vector<long>>& rows) {
  const std::size_t n = rows.size();
  std::vector<ExactRat> e;
  e.reserve(n * n);
  for (const auto& row : rows) {
    if (row.size() != n) throw input_error("non-square integer matrix");
    for (long v : row) e.emplace_back(v);
  }
  return RatMatrix(n, std::move(e));
}

}  // namespace minkowski
