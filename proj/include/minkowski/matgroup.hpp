#pragma once

// Finite matrix groups: closure enumeration, the integer witness groups
// S_{m+1} wr S_a, trace statistics and the Frobenius-Schur indicator.

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "minkowski/exactnum.hpp"
#include "minkowski/matrix.hpp"

namespace minkowski {

inline constexpr std::size_t kDefaultClosureCap = 1'000'000;

/// A fully enumerated finite matrix group.
template <class T>
class GroupClosure {
 public:
  using Matrix = SquareMatrix<T>;

  std::size_t order() const { return elements_.size(); }
  std::size_t dim() const { return elements_.front().dim(); }
  const std::vector<Matrix>& elements() const { return elements_; }
  const Matrix& operator[](std::size_t i) const { return elements_[i]; }
  const std::vector<std::size_t>& generators() const { return generators_; }
  const Matrix& identity() const { return elements_.front(); }

  std::optional<std::size_t> index_of(const Matrix& g) const {
    auto it = lookup_.find(g.key());
    if (it == lookup_.end()) return std::nullopt;
    return it->second;
  }
  bool contains(const Matrix& g) const { return index_of(g).has_value(); }

  /// Index of the product elements()[i] * elements()[j].
  std::size_t multiply(std::size_t i, std::size_t j) const {
    auto idx = index_of(elements_[i] * elements_[j]);
    if (!idx) throw internal_error("group closure is not closed under multiplication");
    return *idx;
  }

  /// The group x^{-1} G x, element order preserved.
  GroupClosure conjugated_by(const Matrix& x) const {
    const Matrix x_inv = x.inverse();
    GroupClosure out;
    out.generators_ = generators_;
    out.elements_.reserve(elements_.size());
    for (const auto& g : elements_) out.insert(x_inv * g * x);
    if (out.order() != order()) throw internal_error("conjugation collapsed distinct elements");
    return out;
  }

  /// Breadth-first product closure; see closure().
  static GroupClosure generate(const std::vector<Matrix>& gens, std::size_t cap);

 private:
  bool insert(Matrix g) {
    auto [it, fresh] = lookup_.emplace(g.key(), elements_.size());
    if (fresh) elements_.push_back(std::move(g));
    return fresh;
  }

  std::vector<Matrix> elements_;
  std::unordered_map<std::string, std::size_t> lookup_;
  std::vector<std::size_t> generators_;
};

template <class T>
GroupClosure<T> GroupClosure<T>::generate(const std::vector<Matrix>& gens, std::size_t cap) {
  if (gens.empty()) throw input_error("closure needs at least one generator");
  if (cap == 0) throw input_error("closure cap must be >= 1");
  const std::size_t n = gens.front().dim();
  for (const auto& g : gens) {
    if (g.dim() != n) throw input_error("generators have different dimensions");
    if (is_zero(g.determinant())) throw input_error("singular generator");
  }
  GroupClosure G;
  G.insert(gens.front().identity_like());
  // Worklist discipline: elements are processed in insertion order and each is
  // right-multiplied by the generators in list order.
  for (std::size_t i = 0; i < G.elements_.size(); ++i) {
    for (const auto& s : gens) {
      if (G.insert(G.elements_[i] * s) && G.elements_.size() > cap) {
        throw capacity_error("group too large or infinite: more than " + std::to_string(cap) +
                             " elements");
      }
    }
  }
  for (const auto& s : gens) G.generators_.push_back(*G.index_of(s));
  return G;
}

template <class T>
GroupClosure<T> closure(const std::vector<SquareMatrix<T>>& generators,
                        std::size_t cap = kDefaultClosureCap) {
  return GroupClosure<T>::generate(generators, cap);
}

/// Order of g, found by repeated multiplication; throws past `bound`.
template <class T>
std::uint64_t element_order(const SquareMatrix<T>& g, std::uint64_t bound) {
  SquareMatrix<T> x = g;
  for (std::uint64_t k = 1; k <= bound; ++k) {
    if (x.is_identity()) return k;
    x = x * g;
  }
  throw capacity_error("element order exceeds " + std::to_string(bound));
}

// ---------------------------------------------------------------------------
// Witness groups

/// Matrix of a permutation of {0..m} acting on A_m = {z in Z^{m+1} : sum z = 0},
/// in the basis b_i = e_i - e_{i+1}. `perm[i]` is the image of i.
inline RatMatrix root_lattice_matrix(const std::vector<std::size_t>& perm) {
  const std::size_t m = perm.size() - 1;
  std::vector<ExactRat> e(m * m, ExactRat(0));
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<long> v(m + 1, 0);
    v[perm[i]] += 1;
    v[perm[i + 1]] -= 1;
    // v = sum c_r b_r with c_r = v_0 + ... + v_r.
    long prefix = 0;
    for (std::size_t r = 0; r < m; ++r) {
      prefix += v[r];
      e[r * m + i] = prefix;
    }
  }
  return RatMatrix(m, std::move(e));
}

/// Images of the adjacent transpositions (j, j+1), j = 0..m-1, of S_{m+1}.
inline std::vector<RatMatrix> a_m_representation(std::size_t m) {
  if (m == 0) throw input_error("a_m_representation requires m >= 1");
  std::vector<RatMatrix> out;
  for (std::size_t j = 0; j < m; ++j) {
    std::vector<std::size_t> perm(m + 1);
    for (std::size_t i = 0; i <= m; ++i) perm[i] = i;
    std::swap(perm[j], perm[j + 1]);
    out.push_back(root_lattice_matrix(perm));
  }
  return out;
}

/// (p!)^a a! with a = floor(n / (p - 1)).
inline ExactInt wreath_witness_order(std::uint64_t n, std::uint64_t p) {
  const std::uint64_t a = n / (p - 1);
  return pow_int(Factorization::factorial(p).value(), a) * Factorization::factorial(a).value();
}

/// Generators of S_p wr S_a inside GL_n(Z): a = floor(n / (p-1)) diagonal blocks of the
/// A_{p-1} representation, block-transposition permutation matrices, identity padding.
inline std::vector<RatMatrix> wreath_witness(std::size_t n, std::uint64_t p) {
  require_prime(ExactInt(p));
  if (n == 0 || p > n + 1) throw input_error("wreath_witness requires 1 <= n and p <= n + 1");
  const std::size_t m = p - 1, a = n / m;
  const RatMatrix one = RatMatrix::identity(n, ExactRat(1));
  std::vector<RatMatrix> gens;

  const auto blocks = a_m_representation(m);
  for (std::size_t b = 0; b < a; ++b) {
    for (const auto& s : blocks) {
      RatMatrix g = one;
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) g(b * m + i, b * m + j) = s(i, j);
      gens.push_back(std::move(g));
    }
  }
  for (std::size_t b = 0; b + 1 < a; ++b) {
    RatMatrix g = one;
    for (std::size_t i = 0; i < m; ++i) {
      const std::size_t r = b * m + i, c = (b + 1) * m + i;
      g(r, r) = 0;
      g(c, c) = 0;
      g(r, c) = 1;
      g(c, r) = 1;
    }
    gens.push_back(std::move(g));
  }
  return gens;
}

// ---------------------------------------------------------------------------
// Traces

template <class T>
ExactRat rational_trace(const SquareMatrix<T>& g) {
  auto t = as_rational(g.trace());
  if (!t) throw input_error("non-rational trace " + entry_string(g.trace()));
  return *t;
}

/// Trace multiset of a group.
template <class T>
std::map<ExactRat, std::uint64_t> trace_multiset(const GroupClosure<T>& G) {
  std::map<ExactRat, std::uint64_t> out;
  for (const auto& g : G.elements()) ++out[rational_trace(g)];
  return out;
}

struct TraceStats {
  std::size_t n = 0;
  std::uint64_t p = 2;
  std::uint64_t a = 0;
  std::vector<ExactInt> z;        // z_t = n - p t
  std::vector<std::uint64_t> m;   // m_t = #{g : tr g = z_t}
  std::map<ExactRat, std::uint64_t> traces;
  std::vector<ExactRat> power_sums;  // sum_g tr(g)^s, s = 0..a
  bool spectrum_ok = false;
  bool fact1_ok = false;
};

/// Trace spectrum check and power-sum divisibility for the character g -> tr(g).
template <class T>
TraceStats trace_stats(const GroupClosure<T>& G, std::uint64_t p) {
  require_prime(ExactInt(p));
  TraceStats st;
  st.n = G.dim();
  st.p = p;
  st.a = st.n / (p - 1);
  for (std::uint64_t t = 0; t <= st.a; ++t) st.z.push_back(ExactInt(st.n) - ExactInt(p * t));
  st.m.assign(st.a + 1, 0);
  st.spectrum_ok = true;
  for (std::size_t i = 0; i < G.order(); ++i) {
    const ExactRat tr = rational_trace(G[i]);
    ++st.traces[tr];
    const ExactRat gap = ExactRat(st.n) - tr;
    bool listed = false;
    if (is_integer(gap) && gap >= 0) {
      const ExactInt g = numerator_of(gap);
      if (g % p == 0 && g / p <= st.a) {
        ++st.m[static_cast<std::size_t>(g / p)];
        listed = true;
      }
    }
    if (!listed) st.spectrum_ok = false;
    if (gap == 0 && i != 0) st.spectrum_ok = false;  // only the identity has trace n
  }
  const ExactRat order(static_cast<std::uint64_t>(G.order()));
  st.fact1_ok = true;
  for (std::uint64_t s = 0; s <= st.a; ++s) {
    ExactRat sum = 0;
    for (const auto& [tr, cnt] : st.traces) {
      ExactRat pw = 1;
      for (std::uint64_t k = 0; k < s; ++k) pw *= tr;
      sum += pw * cnt;
    }
    st.power_sums.push_back(sum);
    if (!is_integer(sum / order)) st.fact1_ok = false;
  }
  return st;
}

/// (1/|G|) sum_g tr(g^2); must be rational.
template <class T>
ExactRat frobenius_schur_indicator(const GroupClosure<T>& G) {
  std::optional<T> sum;
  for (const auto& g : G.elements()) {
    T t = (g * g).trace();
    if (sum) *sum += t;
    else sum = std::move(t);
  }
  auto r = as_rational(*sum);
  if (!r) throw internal_error("Frobenius-Schur indicator is not rational");
  return *r / ExactRat(static_cast<std::uint64_t>(G.order()));
}

}  // namespace minkowski
