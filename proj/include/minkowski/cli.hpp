#pragma once

// Command-line front end. `run` is the whole program minus main(), so the test
// suite can drive it with in-memory streams.
//
// Exit codes: 0 success, 1 a mathematical check failed, 2 usage or input error.

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "minkowski/acceptance.hpp"
#include "minkowski/bounds.hpp"
#include "minkowski/certificate.hpp"
#include "minkowski/finfield.hpp"
#include "minkowski/groupfile.hpp"
#include "minkowski/lattice.hpp"
#include "minkowski/matgroup.hpp"
#include "minkowski/seqcheck.hpp"

namespace minkowski::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

namespace detail {

struct Context {
  std::ostream& out;
  std::ostream& err;
  bool tsv = false;
  std::size_t cap = kDefaultClosureCap;

  std::string fact(const Factorization& f) const { return f.to_string(tsv ? "*" : " · "); }

  // TSV: header row then data rows, tab separated.
  void table(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows) const {
    auto line = [&](const std::vector<std::string>& cells) {
      for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "\t" : "") << cells[i];
      out << "\n";
    };
    line(header);
    for (const auto& r : rows) line(r);
  }
};

inline std::string yes_no(bool b) { return b ? "yes" : "no"; }
inline std::string str(const ExactInt& v) { return v.str(); }
inline std::string str(std::uint64_t v) { return std::to_string(v); }

inline SchurField parse_field(const std::string& s) {
  if (s == "Q" || s == "rational") return SchurField::rational();
  if (s.rfind("zeta:", 0) == 0) {
    const std::string k = s.substr(5);
    if (k.empty() || k.find_first_not_of("0123456789") != std::string::npos || k.size() > 18)
      throw input_error("bad conductor in field '" + s + "'");
    return SchurField::cyclotomic(std::stoull(k));
  }
  throw input_error("field must be Q or zeta:<k>, got '" + s + "'");
}

inline GroupFile load_group_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  try {
    return parse_group_file(ss.str());
  } catch (const input_error& e) {
    throw input_error(path + ": " + e.what());
  }
}

using AnyClosure = std::variant<GroupClosure<ExactRat>, GroupClosure<CycloElem>>;

inline AnyClosure load_closure(const std::string& path, std::size_t cap) {
  const GroupFile gf = load_group_file(path);
  return std::visit([&](const auto& gens) -> AnyClosure { return closure(gens, cap); }, gf.generators);
}

inline GroupClosure<ExactRat> load_rational_closure(const std::string& path, std::size_t cap) {
  AnyClosure g = load_closure(path, cap);
  if (auto* r = std::get_if<GroupClosure<ExactRat>>(&g)) return std::move(*r);
  throw input_error(path + ": this command needs a group over Q");
}

inline void print_matrix(std::ostream& os, const RatMatrix& m, const std::string& indent) {
  for (std::size_t i = 0; i < m.dim(); ++i) {
    os << indent;
    for (std::size_t j = 0; j < m.dim(); ++j) os << (j ? " " : "") << m(i, j).str();
    os << "\n";
  }
}

// ---------------------------------------------------------------------------

inline int cmd_bound(const Context& c, std::uint64_t n) {
  const Factorization M = minkowski_bound(n);
  if (c.tsv) c.table({"n", "M", "factorization"}, {{str(n), str(M.value()), c.fact(M)}});
  else c.out << "M(" << n << ") = " << M.value() << " = " << c.fact(M) << "\n";
  return kExitOk;
}

inline int cmd_schur(const Context& c, std::uint64_t n, const std::string& field) {
  const SchurField K = parse_field(field);
  const Factorization S = schur_bound(n, K);
  if (c.tsv) {
    c.table({"n", "field", "S", "factorization"}, {{str(n), K.to_string(), str(S.value()), c.fact(S)}});
    return kExitOk;
  }
  c.out << "S(" << n << ", " << K.to_string() << ") = " << S.value() << " = " << c.fact(S) << "\n";
  for (const auto& [ell, e] : S.entries()) {
    const SchurParams sp = schur_params(K, static_cast<std::uint64_t>(ell));
    c.out << "  ell=" << ell << "  m=" << sp.m << "  t=" << sp.t << "  exponent=" << e << "\n";
  }
  return kExitOk;
}

inline int cmd_witness(const Context& c, std::uint64_t n, std::uint64_t p, const std::string& emit) {
  require_prime(ExactInt(p));
  if (n == 0) throw input_error("witness requires n >= 1");
  if (p - 1 > n) throw input_error("witness requires p - 1 <= n");
  const auto gens = wreath_witness(n, p);
  const auto G = closure(gens, c.cap);
  const ExactInt order(static_cast<std::uint64_t>(G.order()));
  const ExactInt expected = wreath_witness_order(n, p);
  const Factorization ppart = Factorization::of(order).restricted_to(ExactInt(p));
  const Factorization Mp = minkowski_p_part(n, p);
  const bool ok = order == expected && ppart == Mp;
  if (!emit.empty()) {
    std::ofstream f(emit);
    if (!f) throw input_error("cannot write '" + emit + "'");
    f << serialize_group_file(rational_group_file(gens));
  }
  if (c.tsv) {
    c.table({"n", "p", "generators", "order", "expected", "p_part", "M_p", "ok"},
            {{str(n), str(p), str(std::uint64_t{gens.size()}), str(order), str(expected), str(ppart.value()),
              str(Mp.value()), yes_no(ok)}});
  } else {
    c.out << "wreath witness for n=" << n << ", p=" << p << ": " << gens.size() << " generators\n"
          << "  |G| = " << order << " (expected (p!)^a a! = " << expected << ")\n"
          << "  |G|_p = " << c.fact(ppart) << ", M(n)_p = " << c.fact(Mp) << "\n"
          << (ok ? "  attains the bound\n" : "  MISMATCH\n");
    if (!emit.empty()) c.out << "  generators written to " << emit << "\n";
  }
  return ok ? kExitOk : kExitCheckFailed;
}

template <class T>
int certify_impl(const Context& c, const GroupClosure<T>& G, std::uint64_t p) {
  const CertificateReport rep = schur_certificate(G, p);
  if (c.tsv) {
    std::vector<std::vector<std::string>> rows;
    for (const auto& l : rep.per_t)
      rows.push_back({str(l.t), str(rep.z[l.t]), str(rep.m[l.t]), str(l.product), yes_no(l.divisible)});
    c.table({"t", "z_t", "m_t", "product", "divisible"}, rows);
  } else {
    c.out << "|G| = " << rep.order << ", p = " << rep.p << ", a = " << rep.a << "\n";
    c.out << "congruences (m V)_s:";
    for (const auto& v : rep.congruences) c.out << " " << v;
    c.out << (rep.congruences_ok ? "  (all divisible by |G|)\n" : "  (NOT all divisible by |G|)\n");
    for (const auto& l : rep.per_t)
      c.out << "  t=" << l.t << "  z=" << rep.z[l.t] << "  m=" << rep.m[l.t] << "  m p^a prod(s-t) = " << l.product
            << (l.divisible ? "  divisible" : "  NOT divisible") << "\n";
    c.out << "|G| divides p^a a!: " << yes_no(rep.order_divides_pa_afact) << "\n";
    c.out << "certificate: " << (rep.overall ? "PASS" : "FAIL") << "\n";
  }
  return rep.overall ? kExitOk : kExitCheckFailed;
}

template <class T>
int traces_impl(const Context& c, const GroupClosure<T>& G, std::uint64_t p) {
  const TraceStats st = trace_stats(G, p);
  if (c.tsv) {
    std::vector<std::vector<std::string>> rows;
    for (const auto& [tr, cnt] : st.traces) rows.push_back({tr.str(), str(cnt)});
    c.table({"trace", "count"}, rows);
  } else {
    c.out << "|G| = " << G.order() << ", n = " << st.n << ", p = " << p << ", a = " << st.a << "\n";
    for (const auto& [tr, cnt] : st.traces) c.out << "  trace " << tr << ": " << cnt << "\n";
    c.out << "power sums:";
    for (const auto& s : st.power_sums) c.out << " " << s;
    c.out << "\nspectrum within {n - p t}: " << yes_no(st.spectrum_ok) << "\n"
          << "power sums divisible by |G|: " << yes_no(st.fact1_ok) << "\n";
  }
  return st.fact1_ok ? kExitOk : kExitCheckFailed;
}

template <class T>
int fsi_impl(const Context& c, const GroupClosure<T>& G) {
  const ExactRat v = frobenius_schur_indicator(G);
  if (c.tsv) c.table({"order", "indicator"}, {{str(std::uint64_t{G.order()}), v.str()}});
  else c.out << "|G| = " << G.order() << ", Frobenius-Schur indicator = " << v << "\n";
  return kExitOk;
}

inline int cmd_integralize(const Context& c, const std::string& path, const std::string& emit) {
  const GroupFile gf = load_group_file(path);
  if (!gf.is_rational()) throw input_error(path + ": this command needs a group over Q");
  const auto& gens = std::get<std::vector<RatMatrix>>(gf.generators);
  const auto G = closure(gens, c.cap);
  const Integralization res = integralize(G);
  const RatMatrix Binv = res.basis_change.inverse();
  std::vector<RatMatrix> new_gens;
  for (const auto& g : gens) new_gens.push_back(Binv * g * res.basis_change);
  const std::string text = serialize_group_file(rational_group_file(new_gens));
  if (!emit.empty()) {
    std::ofstream f(emit);
    if (!f) throw input_error("cannot write '" + emit + "'");
    f << text;
  }
  const bool ok = is_integral(res.integral);
  if (c.tsv) {
    std::vector<std::vector<std::string>> rows;
    for (std::size_t i = 0; i < res.basis_change.dim(); ++i)
      for (std::size_t j = 0; j < res.basis_change.dim(); ++j)
        rows.push_back({str(std::uint64_t{i}), str(std::uint64_t{j}), res.basis_change(i, j).str()});
    c.table({"row", "col", "B"}, rows);
  } else {
    c.out << "|G| = " << G.order() << "; basis change B (columns span an invariant lattice):\n";
    print_matrix(c.out, res.basis_change, "  ");
    c.out << "B^-1 G B is integral: " << yes_no(ok) << "\n# integral generators\n" << text;
  }
  return ok ? kExitOk : kExitCheckFailed;
}

inline int cmd_reduce(const Context& c, const std::string& path, std::uint64_t p) {
  const auto G = load_rational_closure(path, c.cap);
  const ReductionReport rep = reduce_mod_p(G, p).report;
  std::string kernel;
  for (auto o : rep.kernel_element_orders) kernel += (kernel.empty() ? "" : ",") + std::to_string(o);
  const bool ok = rep.injective_on_coprime_order && rep.kernel_orders_are_p_powers;
  if (c.tsv) {
    c.table({"p", "order", "image", "injective", "kernel_orders"},
            {{str(p), str(std::uint64_t{G.order()}), str(std::uint64_t{rep.image_size}), yes_no(rep.injective),
              kernel}});
  } else {
    c.out << "|G| = " << G.order() << ", |G mod " << p << "| = " << rep.image_size << "\n"
          << "injective: " << yes_no(rep.injective) << "\n"
          << "kernel element orders: " << kernel << "\n"
          << "kernel is a " << p << "-group: " << yes_no(rep.kernel_orders_are_p_powers) << "\n";
  }
  return ok ? kExitOk : kExitCheckFailed;
}

inline int cmd_glorder(const Context& c, std::uint64_t n, std::uint64_t q) {
  const GLOrder o = gl_order(n, q);
  std::optional<ExactInt> brute;
  if (n <= 3 && (q == 2 || q == 3 || q == 4 || q == 5) && !(n == 3 && q > 3)) brute = gl_order_bruteforce(n, q);
  const bool ok = !brute || *brute == o.full.value();
  if (c.tsv) {
    c.table({"n", "q", "order", "factorization", "p_prime_part", "brute_force"},
            {{str(n), str(q), str(o.full.value()), c.fact(o.full), str(o.p_prime_part.value()),
              brute ? brute->str() : "-"}});
  } else {
    c.out << "|GL_" << n << "(F_" << q << ")| = " << o.full.value() << " = " << c.fact(o.full) << "\n"
          << "  p'-part = " << o.p_prime_part.value() << "\n";
    if (brute) c.out << "  brute force: " << *brute << (ok ? " (agrees)" : " (DISAGREES)") << "\n";
  }
  return ok ? kExitOk : kExitCheckFailed;
}

inline int cmd_specialprime(const Context& c, std::uint64_t ell, std::uint64_t count) {
  require_prime(ExactInt(ell), "ell");
  if (ell == 2) throw input_error("special primes are defined for odd ell");
  std::vector<std::uint64_t> ps;
  for (std::uint64_t i = 0; i < count; ++i) ps.push_back(find_special_prime(ell, i));
  if (c.tsv) {
    std::vector<std::vector<std::string>> rows;
    for (auto p : ps) rows.push_back({str(ell), str(p)});
    c.table({"ell", "p"}, rows);
  } else {
    c.out << "primes generating (Z/" << ell * ell << ")^*:";
    for (auto p : ps) c.out << " " << p;
    c.out << "\n";
  }
  return kExitOk;
}

inline int cmd_lemma51(const Context& c, std::uint64_t n, std::uint64_t f, std::uint64_t ell, std::uint64_t p) {
  if (ell == 2 || !is_prime(ell)) throw input_error("ell must be an odd prime");
  if (p == 0) p = find_special_prime(ell);
  const Lemma51Report r = lemma51_check(n, f, ell, p);
  const bool ok = r.match && (!r.minkowski_match || *r.minkowski_match);
  if (c.tsv) {
    c.table({"n", "f", "ell", "p", "tau", "predicted", "actual", "match", "equals_M_ell"},
            {{str(n), str(f), str(ell), str(p), str(r.tau), str(r.predicted.value()), str(r.actual.value()),
              yes_no(r.match), r.minkowski_match ? yes_no(*r.minkowski_match) : "-"}});
  } else {
    c.out << "ell=" << ell << ", p=" << p << ", f=" << f << ", n=" << n << ", tau=" << r.tau << "\n"
          << "  predicted ell-part " << c.fact(r.predicted) << "\n"
          << "  |GL_n(F_q)|_ell    " << c.fact(r.actual) << (r.match ? "  (match)" : "  (MISMATCH)") << "\n";
    if (r.minkowski_match)
      c.out << "  equals M(n)_ell: " << yes_no(*r.minkowski_match) << "\n";
  }
  return ok ? kExitOk : kExitCheckFailed;
}

inline int cmd_iso(const Context& c, const std::string& kind_s, std::uint64_t n, std::uint64_t q,
                   std::optional<int> epsilon) {
  const auto kind = parse_isometry_kind(kind_s);
  if (!kind) throw input_error("kind must be unitary, symplectic or orthogonal");
  const PrimePower pf = as_prime_power(q);
  const Factorization o = isometry_order(*kind, n, pf.p, pf.f, epsilon);
  if (c.tsv) c.table({"kind", "n", "q", "order", "factorization"}, {{kind_s, str(n), str(q), str(o.value()), c.fact(o)}});
  else c.out << "|" << kind_s << "(" << n << ", " << q << ")| = " << o.value() << " = " << c.fact(o) << "\n";
  return kExitOk;
}

inline int cmd_bernoulli(const Context& c, std::uint64_t n) {
  const ExactRat b = bernoulli(n);
  bool ok = true;
  std::vector<std::string> header{"n", "B_n"}, row{str(n), b.str()};
  std::ostringstream human;
  human << "B_" << n << " = " << b << "\n";
  if (n >= 2 && n % 2 == 0) {
    const std::uint64_t h = n / 2;
    const ExactInt vsc = staudt_clausen_denominator(h);
    const bool vsc_ok = denominator_of(b) == vsc;
    const BernoulliMinkowski bm = bernoulli_vs_minkowski(h);
    ok = vsc_ok && bm.equal;
    header.insert(header.end(), {"denominator", "staudt_clausen", "denom_B_over_half_n", "recursion_product"});
    row.insert(row.end(), {str(denominator_of(b)), str(vsc), str(bm.bernoulli_denominator), str(bm.recursion_product)});
    human << "  denominator " << denominator_of(b) << ", prod_{(p-1)|n} p = " << vsc
          << (vsc_ok ? " (agree)" : " (DISAGREE)") << "\n"
          << "  denominator of B_" << n << "/" << h << " = " << bm.bernoulli_denominator << ", M(" << n << ")/(2 M("
          << n - 1 << ")) = " << bm.recursion_product << (bm.equal ? " (agree)" : " (DISAGREE)") << "\n";
  }
  if (c.tsv) c.table(header, {row});
  else c.out << human.str();
  return ok ? kExitOk : kExitCheckFailed;
}

inline int cmd_hanna(const Context& c, std::uint64_t n) {
  const RatPolynomial P = hanna_polynomial(n);
  const HannaCheck h = hanna_denominator_check(n);
  if (c.tsv) {
    c.table({"n", "P", "denominator", "M", "equal"},
            {{str(n), P.to_string("z"), str(h.denominator), str(h.minkowski), yes_no(h.equals_M)}});
  } else {
    c.out << "P(" << n << ", z) = " << P.to_string("z") << "\n"
          << "  denominator " << h.denominator << ", M(" << n << ") = " << h.minkowski
          << (h.equals_M ? " (equal)" : " (DIFFERENT)") << "\n"
          << "  denominator generates the ideal of integralizing constants: " << yes_no(h.is_ideal_generator) << "\n";
    if (!h.equals_M) {
      c.out << "  differing primes:";
      for (const auto& r : h.offending_primes) c.out << " " << r;
      c.out << "\n";
    }
  }
  return h.equals_M ? kExitOk : kExitCheckFailed;
}

inline int cmd_asymptotic(const Context& c, std::uint64_t prime_bound, const std::vector<std::uint64_t>& ns) {
  const double constant = katznelson_estimate(prime_bound, 1).constant;
  std::vector<std::vector<std::string>> rows;
  std::ostringstream human;
  human << std::setprecision(7) << "prod_{p < " << prime_bound << "} p^(1/(p-1)^2) = " << constant << "\n";
  for (auto n : ns) {
    const double r = katznelson_estimate(2, n).ratio;
    std::ostringstream v;
    v << std::setprecision(7) << r;
    rows.push_back({str(n), v.str()});
    human << "  (M(" << n << ")/" << n << "!)^(1/" << n << ") = " << v.str() << "\n";
  }
  if (c.tsv) {
    std::ostringstream cs;
    cs << std::setprecision(7) << constant;
    c.out << "constant\t" << cs.str() << "\n";
    c.table({"n", "ratio"}, rows);
  } else {
    c.out << human.str();
  }
  return kExitOk;
}

inline int cmd_selftest(const Context& c) {
  bool all = true;
  std::vector<std::vector<std::string>> rows;
  for (const auto& criterion : acceptance_battery()) {
    const CriterionResult r = criterion();
    all = all && r.pass;
    std::ostringstream secs;
    secs << std::fixed << std::setprecision(2) << r.seconds;
    if (c.tsv) {
      rows.push_back({std::to_string(r.id), r.pass ? "PASS" : "FAIL", r.name, secs.str(), r.detail});
    } else {
      c.out << (r.pass ? "PASS" : "FAIL") << "  " << std::setw(2) << r.id << "  " << r.name << "  (" << secs.str()
            << " s)\n      " << r.detail << "\n";
      c.out.flush();
    }
  }
  if (c.tsv) c.table({"id", "status", "name", "seconds", "detail"}, rows);
  else c.out << (all ? "all criteria passed\n" : "some criteria FAILED\n");
  return all ? kExitOk : kExitCheckFailed;
}

}  // namespace detail

/// Runs the tool on argv-style arguments (args[0] is the program name).
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact checks around Minkowski's bound on finite subgroups of GL_n(Q)", "minkowski"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "human";
  std::size_t cap = kDefaultClosureCap;
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"human", "tsv"}));
  app.add_option("--cap", cap, "maximum number of group elements to enumerate")->check(CLI::PositiveNumber);

  std::uint64_t n = 0, p = 0, q = 0, f = 0, ell = 0, count = 1, prime_bound = 1'000'000;
  std::string field = "Q", file, emit, kind;
  std::optional<int> epsilon;
  std::vector<std::uint64_t> ns{20, 50, 100};
  std::function<int(const detail::Context&)> action;

  auto* bound = app.add_subcommand("bound", "M(n) with its factorization");
  bound->add_option("n", n)->required()->check(CLI::PositiveNumber);
  bound->callback([&] { action = [&](const auto& c) { return detail::cmd_bound(c, n); }; });

  auto* schur = app.add_subcommand("schur", "Schur's bound S(n, K) for K = Q or Q(zeta_k)");
  schur->add_option("n", n)->required()->check(CLI::PositiveNumber);
  schur->add_option("--field", field, "Q or zeta:<k>");
  schur->callback([&] { action = [&](const auto& c) { return detail::cmd_schur(c, n, field); }; });

  auto* witness = app.add_subcommand("witness", "build the wreath-product witness S_p wr S_a");
  witness->add_option("n", n)->required()->check(CLI::PositiveNumber);
  witness->add_option("--prime", p)->required();
  witness->add_option("--emit", emit, "write the generators to a group file");
  witness->callback([&] { action = [&](const auto& c) { return detail::cmd_witness(c, n, p, emit); }; });

  auto* certify = app.add_subcommand("certify", "run the divisibility certificate on a p-group");
  certify->add_option("file", file)->required();
  certify->add_option("--prime", p)->required();
  certify->callback([&] {
    action = [&](const auto& c) {
      return std::visit([&](const auto& G) { return detail::certify_impl(c, G, p); },
                        detail::load_closure(file, c.cap));
    };
  });

  auto* traces = app.add_subcommand("traces", "trace multiset and power-sum checks");
  traces->add_option("file", file)->required();
  traces->add_option("--prime", p)->required();
  traces->callback([&] {
    action = [&](const auto& c) {
      return std::visit([&](const auto& G) { return detail::traces_impl(c, G, p); },
                        detail::load_closure(file, c.cap));
    };
  });

  auto* fsi = app.add_subcommand("fsi", "Frobenius-Schur indicator of the natural character");
  fsi->add_option("file", file)->required();
  fsi->callback([&] {
    action = [&](const auto& c) {
      return std::visit([&](const auto& G) { return detail::fsi_impl(c, G); }, detail::load_closure(file, c.cap));
    };
  });

  auto* integ = app.add_subcommand("integralize", "conjugate a rational group into GL_n(Z)");
  integ->add_option("file", file)->required();
  integ->add_option("--emit", emit, "write the integral generators to a group file");
  integ->callback([&] { action = [&](const auto& c) { return detail::cmd_integralize(c, file, emit); }; });

  auto* reduce = app.add_subcommand("reduce", "reduce a rational group modulo a prime");
  reduce->add_option("file", file)->required();
  reduce->add_option("--prime", p)->required();
  reduce->callback([&] { action = [&](const auto& c) { return detail::cmd_reduce(c, file, p); }; });

  auto* glorder = app.add_subcommand("glorder", "|GL_n(F_q)|");
  glorder->add_option("n", n)->required()->check(CLI::PositiveNumber);
  glorder->add_option("q", q)->required();
  glorder->callback([&] { action = [&](const auto& c) { return detail::cmd_glorder(c, n, q); }; });

  auto* special = app.add_subcommand("specialprime", "primes p generating (Z/ell^2)^*");
  special->add_option("ell", ell)->required();
  special->add_option("--count", count, "how many to list")->check(CLI::Range(1, 100));
  special->callback([&] { action = [&](const auto& c) { return detail::cmd_specialprime(c, ell, count); }; });

  auto* l51 = app.add_subcommand("lemma51", "ell-part of |GL_n(F_{p^f})| at a special prime p");
  l51->add_option("n", n)->required()->check(CLI::PositiveNumber);
  l51->add_option("f", f)->required()->check(CLI::PositiveNumber);
  l51->add_option("ell", ell)->required();
  l51->add_option("--prime", p, "special prime (default: the smallest)");
  l51->callback([&] { action = [&](const auto& c) { return detail::cmd_lemma51(c, n, f, ell, p); }; });

  auto* iso = app.add_subcommand("iso", "order of a unitary, symplectic or orthogonal group over F_q");
  iso->add_option("kind", kind)->required();
  iso->add_option("n", n)->required()->check(CLI::PositiveNumber);
  iso->add_option("q", q)->required();
  iso->add_option("--epsilon", epsilon, "+1 or -1 for even-dimensional orthogonal groups");
  iso->callback([&] { action = [&](const auto& c) { return detail::cmd_iso(c, kind, n, q, epsilon); }; });

  auto* bern = app.add_subcommand("bernoulli", "B_n and its denominator checks");
  bern->add_option("n", n)->required();
  bern->callback([&] { action = [&](const auto& c) { return detail::cmd_bernoulli(c, n); }; });

  auto* hanna = app.add_subcommand("hanna", "P(n, z) and its denominator against M(n)");
  hanna->add_option("n", n)->required()->check(CLI::PositiveNumber);
  hanna->callback([&] { action = [&](const auto& c) { return detail::cmd_hanna(c, n); }; });

  auto* asym = app.add_subcommand("asymptotic", "growth constant of M(n)");
  asym->add_option("--primes", prime_bound, "prime bound for the product")->check(CLI::Range(2, 100'000'000));
  asym->add_option("--n", ns, "values of n for (M(n)/n!)^(1/n)")->check(CLI::PositiveNumber);
  asym->callback([&] { action = [&](const auto& c) { return detail::cmd_asymptotic(c, prime_bound, ns); }; });

  auto* self = app.add_subcommand("selftest", "run the acceptance battery");
  self->callback([&] { action = [&](const auto& c) { return detail::cmd_selftest(c); }; });

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  if (argv.empty()) argv.push_back("minkowski");
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);  // --help
      return kExitOk;
    }
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  const detail::Context ctx{out, err, format == "tsv", cap};
  try {
    return action(ctx);
  } catch (const input_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const capacity_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace minkowski::cli
