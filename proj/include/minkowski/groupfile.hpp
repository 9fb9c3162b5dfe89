#pragma once

// The `matgroup v1` text format:
//
//   matgroup v1
//   field rational            # or: field cyclotomic <k>
//   dim <n>
//   gen                       # repeated blocks
//   <n rows of n whitespace-separated entries>
//
// Entries are `a` or `a/b`; cyclotomic files also accept `[c0,...,c_{d-1}]`,
// the coefficients of 1, zeta, ..., zeta^(d-1) with d = phi(k).

#include <cctype>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "minkowski/cyclotomic.hpp"
#include "minkowski/matrix.hpp"

namespace minkowski {

struct GroupFile {
  std::optional<std::uint64_t> conductor;  // empty for `field rational`
  std::size_t dim = 0;
  std::variant<std::vector<RatMatrix>, std::vector<CycloMatrix>> generators;

  bool is_rational() const { return !conductor.has_value(); }
  std::size_t generator_count() const {
    return std::visit([](const auto& g) { return g.size(); }, generators);
  }
};

namespace detail {

inline std::string trim_copy(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

inline bool is_integer_literal(std::string_view s) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

inline ExactInt parse_integer_literal(std::string_view s) {
  if (!s.empty() && s[0] == '+') s.remove_prefix(1);
  return ExactInt(std::string(s));
}

class LineError {
 public:
  explicit LineError(std::size_t line) : line_(line) {}
  [[noreturn]] void operator()(const std::string& msg) const {
    throw input_error("line " + std::to_string(line_) + ": " + msg);
  }

 private:
  std::size_t line_;
};

inline ExactRat parse_rational(std::string_view tok, const LineError& fail) {
  const auto slash = tok.find('/');
  if (slash == std::string_view::npos) {
    if (!is_integer_literal(tok)) fail("malformed entry '" + std::string(tok) + "'");
    return ExactRat(parse_integer_literal(tok));
  }
  const auto num = tok.substr(0, slash), den = tok.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den)) fail("malformed entry '" + std::string(tok) + "'");
  const ExactInt d = parse_integer_literal(den);
  if (d == 0) fail("zero denominator in '" + std::string(tok) + "'");
  return ExactRat(parse_integer_literal(num), d);
}

inline CycloElem parse_cyclo(std::string_view tok, const FieldPtr& field, const LineError& fail) {
  if (tok.empty() || tok.front() != '[') return CycloElem(field, parse_rational(tok, fail));
  if (tok.back() != ']') fail("unterminated cyclotomic entry '" + std::string(tok) + "'");
  std::vector<ExactRat> coeffs;
  std::string_view body = tok.substr(1, tok.size() - 2);
  while (true) {
    const auto comma = body.find(',');
    coeffs.push_back(parse_rational(trim_copy(body.substr(0, comma)), fail));
    if (comma == std::string_view::npos) break;
    body.remove_prefix(comma + 1);
  }
  if (coeffs.size() != field->degree())
    fail("cyclotomic entry needs " + std::to_string(field->degree()) + " coefficients, got " +
         std::to_string(coeffs.size()));
  return CycloElem(field, std::move(coeffs));
}

// Splits on whitespace, keeping bracketed entries (which may contain spaces) intact.
inline std::vector<std::string> split_entries(std::string_view line) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char c : line) {
    if (c == '[') ++depth;
    if (c == ']') --depth;
    if (std::isspace(static_cast<unsigned char>(c)) && depth == 0) {
      if (!cur.empty()) out.push_back(std::move(cur));
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

}  // namespace detail

/// Parses and validates a group file; every error carries its line number.
inline GroupFile parse_group_file(std::string_view text) {
  struct Line {
    std::size_t number;
    std::string content;
  };
  std::vector<Line> lines;
  {
    std::size_t number = 0;
    std::istringstream is{std::string(text)};
    for (std::string raw; std::getline(is, raw);) {
      ++number;
      if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
      std::string t = detail::trim_copy(raw);
      if (!t.empty()) lines.push_back({number, std::move(t)});
    }
  }
  std::size_t pos = 0;
  auto next = [&](const char* expecting) -> const Line& {
    if (pos >= lines.size()) {
      const std::size_t last = lines.empty() ? 1 : lines.back().number;
      detail::LineError{last}(std::string("unexpected end of file, expected ") + expecting);
    }
    return lines[pos++];
  };

  GroupFile gf;
  {
    const Line& l = next("header");
    if (l.content != "matgroup v1") detail::LineError{l.number}("unsupported header '" + l.content + "'");
  }
  FieldPtr field;
  {
    const Line& l = next("field declaration");
    std::istringstream is(l.content);
    std::string kw, kind, extra;
    is >> kw >> kind;
    if (kw != "field") detail::LineError{l.number}("expected 'field'");
    if (kind == "rational") {
      if (is >> extra) detail::LineError{l.number}("trailing text after 'field rational'");
    } else if (kind == "cyclotomic") {
      std::string k;
      if (!(is >> k) || !detail::is_integer_literal(k) || k[0] == '-' || k == "0")
        detail::LineError{l.number}("cyclotomic conductor must be a positive integer");
      if (is >> extra) detail::LineError{l.number}("trailing text after conductor");
      gf.conductor = std::stoull(k);
      field = cyclo_field(*gf.conductor);
    } else {
      detail::LineError{l.number}("unknown field '" + kind + "'");
    }
  }
  {
    const Line& l = next("dimension");
    std::istringstream is(l.content);
    std::string kw, n, extra;
    is >> kw >> n;
    if (kw != "dim" || !detail::is_integer_literal(n) || n[0] == '-' || n == "0" || (is >> extra))
      detail::LineError{l.number}("expected 'dim <n>' with n >= 1");
    gf.dim = std::stoull(n);
  }

  std::vector<RatMatrix> rat_gens;
  std::vector<CycloMatrix> cyc_gens;
  while (pos < lines.size()) {
    const Line& g = next("gen");
    if (g.content != "gen") detail::LineError{g.number}("expected 'gen', got '" + g.content + "'");
    std::vector<ExactRat> rat_entries;
    std::vector<CycloElem> cyc_entries;
    for (std::size_t r = 0; r < gf.dim; ++r) {
      const Line& row = next("matrix row");
      const detail::LineError fail(row.number);
      const auto toks = detail::split_entries(row.content);
      if (toks.size() != gf.dim)
        fail("row has " + std::to_string(toks.size()) + " entries, expected " + std::to_string(gf.dim));
      for (const auto& t : toks) {
        if (field) cyc_entries.push_back(detail::parse_cyclo(t, field, fail));
        else rat_entries.push_back(detail::parse_rational(t, fail));
      }
    }
    const detail::LineError fail(g.number);
    if (field) {
      CycloMatrix m(gf.dim, std::move(cyc_entries));
      if (is_zero(m.determinant())) fail("singular generator");
      cyc_gens.push_back(std::move(m));
    } else {
      RatMatrix m(gf.dim, std::move(rat_entries));
      if (is_zero(m.determinant())) fail("singular generator");
      rat_gens.push_back(std::move(m));
    }
  }
  if (rat_gens.empty() && cyc_gens.empty())
    detail::LineError(lines.back().number)("file declares no generators");
  if (field) gf.generators = std::move(cyc_gens);
  else gf.generators = std::move(rat_gens);
  return gf;
}

inline std::string serialize_group_file(const GroupFile& gf) {
  std::ostringstream os;
  os << "matgroup v1\n";
  if (gf.conductor) os << "field cyclotomic " << *gf.conductor << "\n";
  else os << "field rational\n";
  os << "dim " << gf.dim << "\n";
  std::visit(
      [&](const auto& gens) {
        for (const auto& g : gens) {
          os << "gen\n";
          for (std::size_t i = 0; i < g.dim(); ++i) {
            for (std::size_t j = 0; j < g.dim(); ++j) os << (j ? " " : "") << entry_string(g(i, j));
            os << "\n";
          }
        }
      },
      gf.generators);
  return os.str();
}

inline GroupFile rational_group_file(std::vector<RatMatrix> gens) {
  GroupFile gf;
  gf.dim = gens.front().dim();
  gf.generators = std::move(gens);
  return gf;
}

}  // namespace minkowski
