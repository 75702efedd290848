#include <gtest/gtest.h>

#include "mcs/errors.hpp"
#include "mcs/intervals.hpp"
#include "mcs/random_instances.hpp"
#include "mcs/reductions.hpp"
#include "mcs/set_cover.hpp"

namespace mcs {
namespace {

ParseErrorKind parse_error_kind(auto&& parse) {
  try {
    parse();
  } catch (const ParseError& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no ParseError";
  return ParseErrorKind::kMalformedLine;
}

TEST(SetCoverFormat, ParseSample) {
  SetCoverInstance sc = parse_set_cover("c sample\np sc 4 3\ns 1 1 2 3\ns 2 3 1\ns 3 4\n");
  EXPECT_EQ(sc.num_elements, 4U);
  ASSERT_EQ(sc.sets.size(), 3U);
  EXPECT_EQ(sc.sets[1], (std::vector<std::uint32_t>{0, 2}));
  EXPECT_EQ(format_set_cover(sc), "p sc 4 3\ns 1 1 2 3\ns 2 1 3\ns 3 4\n");
}

TEST(SetCoverFormat, SetsMayComeInAnyOrder) {
  SetCoverInstance sc = parse_set_cover("p sc 2 2\ns 2 2\ns 1 1\n");
  EXPECT_EQ(sc.sets[0], (std::vector<std::uint32_t>{0}));
  EXPECT_EQ(sc.sets[1], (std::vector<std::uint32_t>{1}));
}

TEST(SetCoverFormat, Errors) {
  EXPECT_EQ(parse_error_kind([] { parse_set_cover("s 1 1\n"); }),
            ParseErrorKind::kMalformedHeader);
  EXPECT_EQ(parse_error_kind([] { parse_set_cover("p sc 2\n"); }),
            ParseErrorKind::kMalformedHeader);
  EXPECT_EQ(parse_error_kind([] { parse_set_cover("p sc 2 1\ns 2 1 2\n"); }),
            ParseErrorKind::kVertexOutOfRange);
  EXPECT_EQ(parse_error_kind([] { parse_set_cover("p sc 2 1\ns 1 1 3\n"); }),
            ParseErrorKind::kVertexOutOfRange);
  EXPECT_EQ(parse_error_kind([] { parse_set_cover("p sc 2 2\ns 1 1 2\ns 1 1\n"); }),
            ParseErrorKind::kMalformedLine);
  EXPECT_EQ(parse_error_kind([] { parse_set_cover("p sc 2 1\ns 1 1 1 2\n"); }),
            ParseErrorKind::kMalformedLine);
  EXPECT_EQ(parse_error_kind([] { parse_set_cover("p sc 2 2\ns 1 1 2\n"); }),
            ParseErrorKind::kCountMismatch);
  try {
    parse_set_cover("p sc 2 2\ns 1 1 2\n\n");
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3U);
  }
  // Uncovered element: well-formed text, invalid instance.
  EXPECT_THROW(parse_set_cover("p sc 3 1\ns 1 1 2\n"), std::invalid_argument);
}

TEST(SetCoverFormat, RandomRoundTrip) {
  SplitMix64 rng(12);
  for (int k = 0; k < 20; ++k) {
    SetCoverInstance sc = random_set_cover(1 + static_cast<std::uint32_t>(rng.below(8)),
                                           1 + static_cast<std::uint32_t>(rng.below(6)), rng);
    EXPECT_NO_THROW(sc.validate());
    const std::string text = format_set_cover(sc);
    EXPECT_EQ(format_set_cover(parse_set_cover(text)), text);
  }
}

TEST(TwoSatFormat, Parse) {
  TwoSatFormula f = parse_two_sat("c demo\np cnf 3 2\n1 -2 0\n-3 2 0\n");
  EXPECT_EQ(f.num_vars, 3U);
  ASSERT_EQ(f.clauses.size(), 2U);
  EXPECT_EQ(f.clauses[0].left, (Literal{0, true}));
  EXPECT_EQ(f.clauses[0].right, (Literal{1, false}));
  EXPECT_EQ(f.clauses[1].left, (Literal{2, false}));
  EXPECT_EQ(format_two_sat(f), "p cnf 3 2\n1 -2 0\n-3 2 0\n");
}

TEST(TwoSatFormat, Errors) {
  EXPECT_EQ(parse_error_kind([] { parse_two_sat("1 2 0\n"); }), ParseErrorKind::kMalformedHeader);
  EXPECT_EQ(parse_error_kind([] { parse_two_sat("p cnf 2 1\n1 2 3 0\n"); }),
            ParseErrorKind::kMalformedLine);
  EXPECT_EQ(parse_error_kind([] { parse_two_sat("p cnf 2 1\n1 2\n"); }),
            ParseErrorKind::kMalformedLine);
  EXPECT_EQ(parse_error_kind([] { parse_two_sat("p cnf 2 1\n1 3 0\n"); }),
            ParseErrorKind::kVertexOutOfRange);
  EXPECT_EQ(parse_error_kind([] { parse_two_sat("p cnf 2 1\n1 2 0\n1 2 0\n"); }),
            ParseErrorKind::kCountMismatch);
  EXPECT_EQ(parse_error_kind([] { parse_two_sat("p cnf 2 2\n1 2 0\n"); }),
            ParseErrorKind::kCountMismatch);
}

TEST(TwoSatFormat, Evaluation) {
  TwoSatFormula f{2, {{{0, true}, {1, false}}, {{0, false}, {1, false}}}};
  const bool tt[] = {true, true};
  const bool ft[] = {false, true};
  EXPECT_EQ(f.satisfied_count(tt), 1U);
  EXPECT_EQ(f.satisfied_count(ft), 1U);
  const bool tf[] = {true, false};
  EXPECT_EQ(f.satisfied_count(tf), 2U);
  const bool short_assignment[] = {true};
  EXPECT_THROW(f.satisfied_count(short_assignment), std::invalid_argument);
  TwoSatFormula bad{1, {{{0, true}, {1, true}}}};
  EXPECT_THROW(bad.validate(), std::invalid_argument);
}

TEST(IntervalFormat, RoundTrip) {
  IntervalInstance ii = parse_intervals("c two\ni 1 1 0/1 1/2\ni 2 3 1/4 3/1\n");
  ASSERT_EQ(ii.intervals.size(), 2U);
  EXPECT_EQ(ii.num_colors, 3U);
  EXPECT_EQ(ii.intervals[0].hi, Rational(1, 2));
  EXPECT_EQ(format_intervals(ii), "i 1 1 0/1 1/2\ni 2 3 1/4 3/1\n");
  // Endpoints are stored reduced.
  EXPECT_EQ(format_intervals(parse_intervals("i 1 1 2/4 6/3\n")), "i 1 1 1/2 2/1\n");
}

TEST(IntervalFormat, Errors) {
  EXPECT_EQ(parse_error_kind([] { parse_intervals("i 2 1 0/1 1/1\n"); }),
            ParseErrorKind::kNotIncreasing);
  EXPECT_EQ(parse_error_kind([] { parse_intervals("i 1 1 1/1 1/1\n"); }),
            ParseErrorKind::kMalformedLine);
  EXPECT_EQ(parse_error_kind([] { parse_intervals("i 1 1 0 1/1\n"); }),
            ParseErrorKind::kMalformedLine);
  EXPECT_EQ(parse_error_kind([] { parse_intervals("i 1 1 0/0 1/1\n"); }),
            ParseErrorKind::kMalformedLine);
  EXPECT_EQ(parse_error_kind([] { parse_intervals("i 1 0 0/1 1/1\n"); }),
            ParseErrorKind::kColorOutOfRange);
  EXPECT_EQ(parse_error_kind([] { parse_intervals("x 1 1 0/1 1/1\n"); }),
            ParseErrorKind::kMalformedLine);
}

}  // namespace
}  // namespace mcs
