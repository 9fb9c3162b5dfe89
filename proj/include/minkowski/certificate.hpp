#pragma once

// Schur's divisibility certificate for finite p-groups with rational traces:
// the power-sum congruences (m_0..m_a) V = 0 mod |G| are multiplied by the
// companion matrix E of the Vandermonde matrix V, and V E is diagonal.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "minkowski/exactnum.hpp"
#include "minkowski/matgroup.hpp"

namespace minkowski {

/// e_s(values): sum over s-subsets of the product, by expanding prod (1 + x_i T).
inline ExactInt elementary_symmetric(const std::vector<ExactInt>& values, std::size_t s) {
  if (s > values.size()) throw input_error("elementary_symmetric: s exceeds number of values");
  std::vector<ExactInt> e(values.size() + 1, ExactInt(0));
  e[0] = 1;
  for (std::size_t i = 0; i < values.size(); ++i)
    for (std::size_t j = i + 1; j-- > 0;) e[j + 1] += e[j] * values[i];
  return e[s];
}

/// Square integer matrix, row-major.
struct IntMatrix {
  std::size_t n = 0;
  std::vector<ExactInt> a;

  const ExactInt& operator()(std::size_t i, std::size_t j) const { return a[i * n + j]; }
  ExactInt& operator()(std::size_t i, std::size_t j) { return a[i * n + j]; }

  friend IntMatrix operator*(const IntMatrix& x, const IntMatrix& y) {
    IntMatrix r{x.n, std::vector<ExactInt>(x.n * x.n)};
    for (std::size_t i = 0; i < x.n; ++i)
      for (std::size_t k = 0; k < x.n; ++k)
        for (std::size_t j = 0; j < x.n; ++j) r(i, j) += x(i, k) * y(k, j);
    return r;
  }
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
};

struct VandermondePair {
  IntMatrix V;                  // V(t, s) = z_t^s
  IntMatrix E;                  // E(s, t) = (-1)^(a-s) e_{a-s}(z without z_t)
  std::vector<ExactInt> diagonal;  // prod_{s != t} (z_t - z_s)
  bool diagonal_ok = false;     // V E == diag(diagonal), exactly
};

inline VandermondePair vandermonde_pair(const std::vector<ExactInt>& z) {
  const std::size_t size = z.size();
  if (size == 0) throw input_error("vandermonde_pair needs at least one value");
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = i + 1; j < size; ++j)
      if (z[i] == z[j]) throw input_error("vandermonde_pair: repeated value " + z[i].str());
  const std::size_t a = size - 1;

  VandermondePair out;
  out.V = {size, std::vector<ExactInt>(size * size)};
  out.E = {size, std::vector<ExactInt>(size * size)};
  for (std::size_t t = 0; t < size; ++t) {
    ExactInt pw = 1;
    for (std::size_t s = 0; s < size; ++s) {
      out.V(t, s) = pw;
      pw *= z[t];
    }
  }
  for (std::size_t t = 0; t < size; ++t) {
    std::vector<ExactInt> rest;
    for (std::size_t i = 0; i < size; ++i)
      if (i != t) rest.push_back(z[i]);
    for (std::size_t s = 0; s < size; ++s) {
      ExactInt e = elementary_symmetric(rest, a - s);
      out.E(s, t) = ((a - s) % 2 == 0) ? e : ExactInt(-e);
    }
    ExactInt d = 1;
    for (std::size_t s = 0; s < size; ++s)
      if (s != t) d *= z[t] - z[s];
    out.diagonal.push_back(d);
  }
  IntMatrix expected{size, std::vector<ExactInt>(size * size)};
  for (std::size_t t = 0; t < size; ++t) expected(t, t) = out.diagonal[t];
  out.diagonal_ok = (out.V * out.E) == expected;
  return out;
}

struct CertificateLine {
  std::uint64_t t = 0;
  ExactInt product;  // m_t p^a prod_{s != t} (s - t)
  bool divisible = false;
};

struct CertificateReport {
  std::uint64_t p = 2;
  std::uint64_t a = 0;
  ExactInt order;
  std::vector<ExactInt> z;
  std::vector<std::uint64_t> m;
  std::vector<ExactInt> congruences;  // (m_0..m_a) V, entry s
  bool congruences_ok = false;
  std::vector<CertificateLine> per_t;
  bool overall = false;
  /// The t = 0 consequence: |G| divides p^a a!.
  bool order_divides_pa_afact = false;
};

/// Executes the divisibility certificate for a p-group with rational traces.
template <class T>
CertificateReport schur_certificate(const GroupClosure<T>& G, std::uint64_t p) {
  require_prime(ExactInt(p));
  const ExactInt order(static_cast<std::uint64_t>(G.order()));
  if (pow_int(ExactInt(p), valuation(order, ExactInt(p))) != order)
    throw input_error("group order " + order.str() + " is not a power of " + std::to_string(p));
  const TraceStats st = trace_stats(G, p);
  if (!st.spectrum_ok) throw input_error("trace outside the spectrum {n, n-p, ..., n-ap}");

  CertificateReport rep;
  rep.p = p;
  rep.a = st.a;
  rep.order = order;
  rep.z = st.z;
  rep.m = st.m;

  const VandermondePair vp = vandermonde_pair(st.z);
  if (!vp.diagonal_ok) throw internal_error("Vandermonde companion identity failed");
  rep.congruences_ok = true;
  for (std::size_t s = 0; s <= st.a; ++s) {
    ExactInt c = 0;
    for (std::size_t t = 0; t <= st.a; ++t) c += ExactInt(st.m[t]) * vp.V(t, s);
    if (c % order != 0) rep.congruences_ok = false;
    rep.congruences.push_back(c);
  }

  const ExactInt pa = pow_int(ExactInt(p), st.a);
  rep.overall = rep.congruences_ok;
  for (std::uint64_t t = 0; t <= st.a; ++t) {
    CertificateLine line;
    line.t = t;
    line.product = ExactInt(st.m[t]) * pa;
    for (std::uint64_t s = 0; s <= st.a; ++s)
      if (s != t) line.product *= ExactInt(s) - ExactInt(t);
    line.divisible = abs_value(line.product) % order == 0;
    rep.overall = rep.overall && line.divisible;
    rep.per_t.push_back(line);
  }
  rep.order_divides_pa_afact = (pa * Factorization::factorial(st.a).value()) % order == 0;
  return rep;
}

}  // namespace minkowski
