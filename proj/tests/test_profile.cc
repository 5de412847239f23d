#include "doctest.h"
#include "ppw/errors.h"
#include "ppw/profile.h"
#include "support/testgen.h"

using namespace ppw;

TEST_CASE("parse: chains, closure, comments") {
  PosetProfile p = parse_profile_text(
      "# three alternatives\n"
      "alternatives: a b c\n"
      "vote: a>b>c\n"
      "vote: a>c   # a over c only\n"
      "vote-linear: c>b>a\n"
      "\n");
  REQUIRE(p.m() == 3);
  REQUIRE(p.n() == 3);
  CHECK(p.labels() == std::vector<std::string>{"a", "b", "c"});
  CHECK(p.ballot(0).is_linear());
  CHECK(p.ballot(1).pairs() == std::vector<Pair>{{0, 2}});
  CHECK(p.ballot(2).dominates(2, 0));
  CHECK(p.index_of("b") == 1);
  CHECK(p.index_of("z") == -1);
}

TEST_CASE("parse: several pairs on one vote line") {
  PosetProfile p = parse_profile_text("alternatives: a b c d\nvote: a>b c>d\n");
  CHECK(p.ballot(0).pairs() == std::vector<Pair>{{0, 1}, {2, 3}});
}

TEST_CASE("parse: rejections") {
  CHECK_THROWS_AS(parse_profile_text("vote: a>b\n"), ParseError);
  CHECK_THROWS_AS(parse_profile_text("alternatives: a b\nvote: a>z\n"), ParseError);
  CHECK_THROWS_AS(parse_profile_text("alternatives: a b c\nvote: a>b b>c c>a\n"), ParseError);
  CHECK_THROWS_AS(parse_profile_text("alternatives: a b c\nvote-linear: a>b\n"), ParseError);
  CHECK_THROWS_AS(parse_profile_text("alternatives: a b c\nvote-linear: a>b>a\n"), ParseError);
  CHECK_THROWS_AS(parse_profile_text("alternatives: a a\n"), ParseError);
  CHECK_THROWS_AS(parse_profile_text("alternatives: a b\nballot: a>b\n"), ParseError);
  CHECK_THROWS_AS(parse_profile_text(""), ParseError);
}

TEST_CASE("format round trip") {
  testing::Rng rng(11);
  for (int i = 0; i < 100; ++i) {
    int m = 1 + i % 6;
    PosetProfile p = testing::random_profile(rng, m, 1 + i % 4, m * (m - 1) / 2);
    PosetProfile q = parse_profile_text(format_profile(p));
    CHECK(q.labels() == p.labels());
    CHECK(q.ballots() == p.ballots());
  }
}

TEST_CASE("linear views") {
  LinearProfile lp{3, {{{0, 1, 2}}, {{2, 1, 0}}}};
  PosetProfile p = PosetProfile::from_linear(lp, {"x", "y", "z"});
  CHECK(p.is_linear());
  CHECK(p.as_linear().votes == lp.votes);
  CHECK(format_linear(lp.votes[1], p.labels()) == "z>y>x");
  p.add(PartialOrder(3));
  CHECK_FALSE(p.is_linear());
  CHECK_THROWS(p.as_linear());
  CHECK_THROWS_AS(p.add(PartialOrder(4)), LengthMismatch);
}

TEST_CASE("default labels") {
  CHECK(default_labels(3) == std::vector<std::string>{"c1", "c2", "c3"});
  CHECK(PosetProfile(2).label(1) == "c2");
}
