#pragma once

// Integer Hermite normal form and conjugation of finite rational matrix groups
// into GL_n(Z) through the invariant lattice L = sum_g g Z^n.

#include <cstddef>
#include <utility>
#include <vector>

#include "minkowski/exactnum.hpp"
#include "minkowski/matgroup.hpp"
#include "minkowski/matrix.hpp"

namespace minkowski {

/// Integer matrix with `rows` rows, stored column-major as a list of columns.
struct IntColumns {
  std::size_t rows = 0;
  std::vector<std::vector<ExactInt>> cols;
};

/// Column-style Hermite normal form of a full-row-rank integer matrix.
/// Returns the n x n lower-triangular basis B of the column lattice, with
/// positive diagonal and 0 <= B(i, j) < B(i, i) for j < i. Row-major output.
inline std::vector<ExactInt> hermite_normal_form(IntColumns a) {
  const std::size_t n = a.rows;
  auto& C = a.cols;
  for (std::size_t i = 0; i < n; ++i) {
    if (i >= C.size()) throw internal_error("HNF: fewer columns than rows");
    for (std::size_t j = i + 1; j < C.size(); ++j) {
      if (C[j][i] == 0) continue;
      if (C[i][i] == 0) {
        std::swap(C[i], C[j]);
        continue;
      }
      // Extended gcd: x*u + y*v = g.
      const ExactInt u = C[i][i], v = C[j][i];
      ExactInt old_r = u, r = v, old_x = 1, x = 0, old_y = 0, y = 1;
      while (r != 0) {
        const ExactInt q = old_r / r;
        old_r -= q * r;
        std::swap(old_r, r);
        old_x -= q * x;
        std::swap(old_x, x);
        old_y -= q * y;
        std::swap(old_y, y);
      }
      const ExactInt g = old_r, cu = u / g, cv = v / g;
      for (std::size_t k = i; k < n; ++k) {
        const ExactInt ci = C[i][k], cj = C[j][k];
        C[i][k] = old_x * ci + old_y * cj;
        C[j][k] = cu * cj - cv * ci;
      }
    }
    if (C[i][i] == 0) throw internal_error("HNF: lattice has rank < n");
    if (C[i][i] < 0)
      for (std::size_t k = i; k < n; ++k) C[i][k] = -C[i][k];
    for (std::size_t j = 0; j < i; ++j) {
      ExactInt q = C[j][i] / C[i][i];
      if (C[j][i] - q * C[i][i] < 0) q -= 1;  // floor division
      if (q != 0)
        for (std::size_t k = i; k < n; ++k) C[j][k] -= q * C[i][k];
    }
  }
  std::vector<ExactInt> B(n * n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) B[i * n + j] = C[j][i];
  return B;
}

template <class T>
bool is_integral(const SquareMatrix<T>& g) {
  for (const auto& x : g.entries()) {
    auto r = as_rational(x);
    if (!r || !is_integer(*r)) return false;
  }
  return true;
}

template <class T>
bool is_integral(const GroupClosure<T>& G) {
  for (const auto& g : G.elements())
    if (!is_integral(g)) return false;
  return true;
}

struct Integralization {
  RatMatrix basis_change;           // B: columns form a Z-basis of L
  GroupClosure<ExactRat> integral;  // H = { B^{-1} g B }
};

/// Conjugates a finite subgroup of GL_n(Q) into GL_n(Z).
inline Integralization integralize(const GroupClosure<ExactRat>& G) {
  const std::size_t n = G.dim();
  ExactInt D = 1;
  for (const auto& g : G.elements())
    for (const auto& x : g.entries()) D = lcm(D, denominator_of(x));

  IntColumns cols;
  cols.rows = n;
  for (const auto& g : G.elements()) {
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<ExactInt> c(n);
      for (std::size_t i = 0; i < n; ++i) c[i] = numerator_of(g(i, j) * ExactRat(D));
      cols.cols.push_back(std::move(c));
    }
  }
  const auto hnf = hermite_normal_form(std::move(cols));
  std::vector<ExactRat> b;
  b.reserve(n * n);
  for (const auto& x : hnf) b.emplace_back(x, D);
  RatMatrix B(n, std::move(b));

  Integralization out{B, G.conjugated_by(B)};
  if (!is_integral(out.integral)) throw internal_error("conjugated group is not integral");
  if (trace_multiset(out.integral) != trace_multiset(G))
    throw internal_error("conjugation changed the trace multiset");
  return out;
}

}  // namespace minkowski
