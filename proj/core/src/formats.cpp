// Readers and writers for the source-problem formats: set cover, 2-CNF and
// interval lists.

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "mcs/errors.hpp"
#include "mcs/intervals.hpp"
#include "mcs/reductions.hpp"
#include "mcs/set_cover.hpp"
#include "text_lines.hpp"

namespace mcs {

using detail::expect_int;
using detail::expect_uint;

void SetCoverInstance::validate() const {
  std::vector<char> covered(num_elements, 0);
  for (std::size_t j = 0; j < sets.size(); ++j) {
    for (std::uint32_t e : sets[j]) {
      if (e >= num_elements) {
        throw std::invalid_argument("set " + std::to_string(j + 1) + " names element " +
                                    std::to_string(e + 1) + " outside 1.." +
                                    std::to_string(num_elements));
      }
      covered[e] = 1;
    }
  }
  for (std::uint32_t e = 0; e < num_elements; ++e) {
    if (!covered[e]) {
      throw std::invalid_argument("element " + std::to_string(e + 1) + " is in no set");
    }
  }
}

SetCoverInstance parse_set_cover(std::string_view text) {
  SetCoverInstance sc;
  bool have_header = false;
  std::vector<char> seen;
  std::size_t count = 0;
  std::size_t last_line = 0;
  for (const detail::Line& line : detail::split_lines(text)) {
    last_line = line.number;
    const auto& tok = line.tokens;
    if (tok.empty() || tok[0] == "c") continue;
    if (tok[0] == "p") {
      if (have_header || tok.size() != 4 || tok[1] != "sc") {
        throw ParseError(ParseErrorKind::kMalformedHeader, line.number,
                         have_header ? "second header line" : "expected 'p sc <n> <m>'");
      }
      sc.num_elements = static_cast<std::uint32_t>(
          expect_uint(tok[2], line.number, ParseErrorKind::kMalformedHeader, "element count"));
      const auto m =
          expect_uint(tok[3], line.number, ParseErrorKind::kMalformedHeader, "set count");
      sc.sets.assign(m, {});
      seen.assign(m, 0);
      have_header = true;
      continue;
    }
    if (!have_header) {
      throw ParseError(ParseErrorKind::kMalformedHeader, line.number, "missing 'p sc' header");
    }
    if (tok[0] != "s" || tok.size() < 2) {
      throw ParseError(ParseErrorKind::kMalformedLine, line.number, "expected 's <id> <e> ...'");
    }
    const auto id = expect_uint(tok[1], line.number, ParseErrorKind::kMalformedLine, "set id");
    if (id < 1 || id > sc.sets.size()) {
      throw ParseError(ParseErrorKind::kVertexOutOfRange, line.number,
                       "set " + std::to_string(id) + " not in 1.." +
                           std::to_string(sc.sets.size()));
    }
    if (seen[id - 1]) {
      throw ParseError(ParseErrorKind::kMalformedLine, line.number,
                       "set " + std::to_string(id) + " listed twice");
    }
    seen[id - 1] = 1;
    ++count;
    auto& set = sc.sets[id - 1];
    for (std::size_t k = 2; k < tok.size(); ++k) {
      const auto e = expect_uint(tok[k], line.number, ParseErrorKind::kMalformedLine, "element");
      if (e < 1 || e > sc.num_elements) {
        throw ParseError(ParseErrorKind::kVertexOutOfRange, line.number,
                         "element " + std::to_string(e) + " not in 1.." +
                             std::to_string(sc.num_elements));
      }
      set.push_back(static_cast<std::uint32_t>(e - 1));
    }
    std::sort(set.begin(), set.end());
    if (std::adjacent_find(set.begin(), set.end()) != set.end()) {
      throw ParseError(ParseErrorKind::kMalformedLine, line.number, "element repeated in a set");
    }
  }
  if (!have_header) {
    throw ParseError(ParseErrorKind::kMalformedHeader, last_line, "missing 'p sc' header");
  }
  if (count != sc.sets.size()) {
    throw ParseError(ParseErrorKind::kCountMismatch, last_line,
                     "header announces " + std::to_string(sc.sets.size()) + " sets, found " +
                         std::to_string(count));
  }
  sc.validate();
  return sc;
}

std::string format_set_cover(const SetCoverInstance& sc) {
  std::ostringstream out;
  out << "p sc " << sc.num_elements << ' ' << sc.sets.size() << '\n';
  for (std::size_t j = 0; j < sc.sets.size(); ++j) {
    out << "s " << j + 1;
    for (std::uint32_t e : sc.sets[j]) out << ' ' << e + 1;
    out << '\n';
  }
  return out.str();
}

void TwoSatFormula::validate() const {
  for (std::size_t j = 0; j < clauses.size(); ++j) {
    if (clauses[j].left.var >= num_vars || clauses[j].right.var >= num_vars) {
      throw std::invalid_argument("clause " + std::to_string(j + 1) +
                                  " uses a variable outside 1.." + std::to_string(num_vars));
    }
  }
}

bool TwoSatFormula::satisfies(const TwoSatClause& clause, std::span<const bool> assignment) const {
  if (assignment.size() != num_vars) {
    throw std::invalid_argument("assignment has " + std::to_string(assignment.size()) +
                                " values for " + std::to_string(num_vars) + " variables");
  }
  return assignment[clause.left.var] == clause.left.positive ||
         assignment[clause.right.var] == clause.right.positive;
}

std::size_t TwoSatFormula::satisfied_count(std::span<const bool> assignment) const {
  return static_cast<std::size_t>(std::count_if(
      clauses.begin(), clauses.end(),
      [&](const TwoSatClause& clause) { return satisfies(clause, assignment); }));
}

TwoSatFormula parse_two_sat(std::string_view text) {
  TwoSatFormula f;
  bool have_header = false;
  std::uint64_t expected = 0;
  std::size_t last_line = 0;
  for (const detail::Line& line : detail::split_lines(text)) {
    last_line = line.number;
    const auto& tok = line.tokens;
    if (tok.empty() || tok[0] == "c") continue;
    if (tok[0] == "p") {
      if (have_header || tok.size() != 4 || tok[1] != "cnf") {
        throw ParseError(ParseErrorKind::kMalformedHeader, line.number,
                         have_header ? "second header line" : "expected 'p cnf <n> <m>'");
      }
      f.num_vars = static_cast<std::uint32_t>(
          expect_uint(tok[2], line.number, ParseErrorKind::kMalformedHeader, "variable count"));
      expected = expect_uint(tok[3], line.number, ParseErrorKind::kMalformedHeader, "clause count");
      have_header = true;
      continue;
    }
    if (!have_header) {
      throw ParseError(ParseErrorKind::kMalformedHeader, line.number, "missing 'p cnf' header");
    }
    if (tok.size() != 3 || tok[2] != "0") {
      throw ParseError(ParseErrorKind::kMalformedLine, line.number,
                       "expected a 2-literal clause '<a> <b> 0'");
    }
    Literal lits[2];
    for (int k = 0; k < 2; ++k) {
      const auto lit = expect_int(tok[k], line.number, ParseErrorKind::kMalformedLine, "literal");
      const auto var = lit < 0 ? -lit : lit;
      if (lit == 0 || var > static_cast<std::int64_t>(f.num_vars)) {
        throw ParseError(ParseErrorKind::kVertexOutOfRange, line.number,
                         "literal " + std::string(tok[k]) + " outside +-1.." +
                             std::to_string(f.num_vars));
      }
      lits[k] = Literal{static_cast<std::uint32_t>(var - 1), lit > 0};
    }
    if (f.clauses.size() == expected) {
      throw ParseError(ParseErrorKind::kCountMismatch, line.number,
                       "more than " + std::to_string(expected) + " clauses");
    }
    f.clauses.push_back({lits[0], lits[1]});
  }
  if (!have_header) {
    throw ParseError(ParseErrorKind::kMalformedHeader, last_line, "missing 'p cnf' header");
  }
  if (f.clauses.size() != expected) {
    throw ParseError(ParseErrorKind::kCountMismatch, last_line,
                     "header announces " + std::to_string(expected) + " clauses, found " +
                         std::to_string(f.clauses.size()));
  }
  return f;
}

std::string format_two_sat(const TwoSatFormula& f) {
  std::ostringstream out;
  out << "p cnf " << f.num_vars << ' ' << f.clauses.size() << '\n';
  auto lit = [](const Literal& l) {
    const auto id = static_cast<std::int64_t>(l.var) + 1;
    return l.positive ? id : -id;
  };
  for (const TwoSatClause& c : f.clauses) out << lit(c.left) << ' ' << lit(c.right) << " 0\n";
  return out.str();
}

namespace {

Rational expect_rational(std::string_view token, std::size_t line) {
  const auto slash = token.find('/');
  if (slash == std::string_view::npos) {
    throw ParseError(ParseErrorKind::kMalformedLine, line,
                     "expected '<num>/<den>', got '" + std::string(token) + "'");
  }
  const auto num =
      expect_int(token.substr(0, slash), line, ParseErrorKind::kMalformedLine, "numerator");
  const auto den =
      expect_int(token.substr(slash + 1), line, ParseErrorKind::kMalformedLine, "denominator");
  if (den <= 0) throw ParseError(ParseErrorKind::kMalformedLine, line, "denominator must be positive");
  return Rational(num, den);
}

}  // namespace

std::string format_intervals(const IntervalInstance& ii) {
  std::ostringstream out;
  for (std::size_t k = 0; k < ii.intervals.size(); ++k) {
    const Interval& iv = ii.intervals[k];
    out << "i " << k + 1 << ' ' << iv.color << ' ' << iv.lo.numerator() << '/'
        << iv.lo.denominator() << ' ' << iv.hi.numerator() << '/' << iv.hi.denominator() << '\n';
  }
  return out.str();
}

IntervalInstance parse_intervals(std::string_view text) {
  IntervalInstance ii;
  for (const detail::Line& line : detail::split_lines(text)) {
    const auto& tok = line.tokens;
    if (tok.empty() || tok[0] == "c") continue;
    if (tok[0] != "i" || tok.size() != 5) {
      throw ParseError(ParseErrorKind::kMalformedLine, line.number,
                       "expected 'i <id> <color> <lo> <hi>'");
    }
    const auto id = expect_uint(tok[1], line.number, ParseErrorKind::kMalformedLine, "interval id");
    if (id != ii.intervals.size() + 1) {
      throw ParseError(ParseErrorKind::kNotIncreasing, line.number,
                       "expected interval id " + std::to_string(ii.intervals.size() + 1));
    }
    const auto color = expect_uint(tok[2], line.number, ParseErrorKind::kMalformedLine, "color");
    if (color < 1) throw ParseError(ParseErrorKind::kColorOutOfRange, line.number, "color 0");
    Interval iv{static_cast<Color>(color), expect_rational(tok[3], line.number),
                expect_rational(tok[4], line.number)};
    if (!(iv.lo < iv.hi)) {
      throw ParseError(ParseErrorKind::kMalformedLine, line.number, "interval needs lo < hi");
    }
    ii.num_colors = std::max(ii.num_colors, iv.color);
    ii.intervals.push_back(iv);
  }
  return ii;
}

}  // namespace mcs
