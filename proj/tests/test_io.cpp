#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fpa/errors.hpp"
#include "fpa/io.hpp"
#include "fpa/state_space.hpp"
#include "test_support.hpp"

using namespace fpa;
using fpa_test::Rng;

TEST_CASE("parse the minimal example") {
  NCSeries c = parse_nc("nc m=1 comps=1 N=4\ne 1\nx1 -1\n");
  CHECK(c.m() == 1);
  CHECK(c.maxdeg() == 4);
  CHECK(c.coeff(Word::empty()) == 1);
  CHECK(c.coeff(Word{1}) == -1);
}

TEST_CASE("serialization is length-lex ordered") {
  NCSeries c(Alphabet(1), 1, 3);
  c.set_coeff(Word{0, 1}, 0, Rat(1));
  c.set_coeff(Word{0}, 0, Rat(1));
  const std::string text = serialize_nc(c);
  CHECK(text == "nc m=1 comps=1 N=3\nx0 1\nx0x1 1\n");
}

TEST_CASE("round trips are byte-identical") {
  Rng rng(3);
  for (int trial = 0; trial < 10; ++trial) {
    auto c = fpa_test::random_series(rng, Alphabet(rng.uniform(1, 2)),
                                     rng.uniform(1, 2), 3);
    const std::string once = serialize_nc(c);
    CHECK(parse_nc(once) == c);
    CHECK(serialize_nc(parse_nc(once)) == once);
  }

  // rationals with big factorials round-trip exactly
  auto pend = series_from_statespace(pendulum_model(), 6);
  const std::string text = serialize_nc(pend);
  CHECK(parse_nc(text) == pend);
  CHECK(serialize_nc(parse_nc(text)) == text);
}

TEST_CASE("commutative series round trips, including the poly marker") {
  Rng rng(9);
  for (bool poly : {false, true}) {
    auto d = fpa_test::random_comm_series(rng, 2, 1, 3, poly);
    const std::string text = serialize_comm(d);
    CHECK(parse_comm(text) == d);
    CHECK(serialize_comm(parse_comm(text)) == text);
    CHECK(parse_comm(text).is_polynomial() == poly);
  }
  CHECK(serialize_comm(CommSeries(1, 1, CommSeries::kPolynomial))
            .find("N=poly") != std::string::npos);
}

TEST_CASE("parse dispatch by header") {
  auto any_nc = parse_series("nc m=1 comps=1 N=2\nx1 2\n");
  CHECK(std::holds_alternative<NCSeries>(any_nc));
  auto any_comm = parse_series("comm vars=1 comps=1 N=poly\n1 1\n");
  CHECK(std::holds_alternative<CommSeries>(any_comm));
}

TEST_CASE("parse errors carry line and column information") {
  CHECK_THROWS_AS(parse_nc(""), ParseError);
  CHECK_THROWS_AS(parse_nc("noise\n"), ParseError);
  CHECK_THROWS_AS(parse_nc("nc m=1 comps=1 N=2\nx9 1\n"), ParseError);
  CHECK_THROWS_AS(parse_nc("nc m=1 comps=1 N=2\nx1 1 2\n"), ParseError);
  CHECK_THROWS_AS(parse_nc("nc m=1 comps=1 N=2\nx1x1x1 1\n"), ParseError);
  CHECK_THROWS_AS(parse_nc("nc m=1 comps=1 N=2\nx1 one\n"), ParseError);
  CHECK_THROWS_AS(parse_comm("comm vars=2 comps=1 N=3\n1 1\n"), ParseError);

  try {
    parse_nc("nc m=1 comps=1 N=2\nx1 1\nbad! 1\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line == 3);
  }
}

TEST_CASE("pretty rendering") {
  NCSeries c(Alphabet(1), 1, 3);
  c.set_coeff(Word::empty(), 0, Rat(1));
  c.set_coeff(Word{1}, 0, rat(-1));
  c.set_coeff(Word{0, 1}, 0, rat(3, 2));
  CHECK(pretty(c) == "1 - x1 + 3/2 x0x1");
  CHECK(pretty(zero_series(Alphabet(1), 1, 2)) == "0");
}
