#include "doctest.h"
#include "ppw/errors.h"
#include "ppw/rules.h"
#include "support/testgen.h"

using namespace ppw;

namespace {

constexpr int a = 0, b = 1, c = 2, d = 3;

LinearProfile prof(int m, std::vector<std::vector<int>> votes) {
  LinearProfile p{m, {}};
  for (auto& v : votes) p.votes.push_back({std::move(v)});
  return p;
}

const LinearProfile kCycle = prof(3, {{a, b, c}, {b, c, a}, {c, a, b}});
const LinearProfile kUnanimous = prof(3, {{a, b, c}, {a, b, c}});

}  // namespace

TEST_CASE("pairwise matrix") {
  PairwiseMatrix one = pairwise_matrix(prof(3, {{a, b, c}}));
  CHECK(one.N(a, b) == 1);
  CHECK(one.N(a, c) == 1);
  CHECK(one.N(b, c) == 1);
  CHECK(one.D(a, b) == 1);
  CHECK(pairwise_matrix(prof(2, {{a, b}, {b, a}})).D(a, b) == 0);
  PairwiseMatrix cyc = pairwise_matrix(kCycle);
  CHECK(cyc.D(a, b) == 1);
  CHECK(cyc.D(b, c) == 1);
  CHECK(cyc.D(c, a) == 1);
}

TEST_CASE("positional rules") {
  LinearProfile p = prof(3, {{a, b, c}, {a, c, b}, {b, a, c}});
  CHECK(winners(RuleSpec::plurality(), p) == WinnerSet{a});
  CHECK(winners(RuleSpec::borda(), kCycle) == WinnerSet{a, b, c});
  CHECK(winners(RuleSpec::veto(), prof(3, {{a, b, c}})) == WinnerSet{a, b});
  CHECK(RuleSpec::borda().scoring_vector(4) == std::vector<int>{3, 2, 1, 0});
  CHECK(RuleSpec::approval(2).scoring_vector(4) == std::vector<int>{1, 1, 0, 0});
  CHECK(RuleSpec::veto().scoring_vector(3) == std::vector<int>{1, 1, 0});
  CHECK_THROWS_AS(RuleSpec::scoring({2, 1, 0}).scoring_vector(4), LengthMismatch);
  CHECK(positional_scores({2, 1, 0}, p) == std::vector<long long>{5, 3, 1});
}

TEST_CASE("Copeland") {
  CHECK(copeland_winners(kUnanimous) == WinnerSet{a});
  CHECK(copeland_winners(kCycle) == WinnerSet{a, b, c});
  CHECK(copeland_winners(prof(2, {{a, b}, {a, b}, {b, a}, {b, a}})) == WinnerSet{a, b});
}

TEST_CASE("maximin") {
  CHECK(maximin_winners(kUnanimous) == WinnerSet{a});
  CHECK(maximin_winners(kCycle) == WinnerSet{a, b, c});
  LinearProfile p = prof(3, {{a, b, c}, {a, b, c}, {c, a, b}});
  CHECK(maximin_scores(pairwise_matrix(p))[a] == 2);
  CHECK(maximin_winners(p) == WinnerSet{a});
}

TEST_CASE("Bucklin") {
  CHECK(bucklin_scores(kUnanimous)[a] == 1);
  CHECK(bucklin_winners(kUnanimous) == WinnerSet{a});
  CHECK(bucklin_winners(kCycle) == WinnerSet{a, b, c});
  CHECK(bucklin_scores(kCycle) == std::vector<int>{2, 2, 2});
  CHECK(bucklin_winners(prof(3, {{b, c, a}})) == WinnerSet{b});
}

TEST_CASE("ranked pairs") {
  CHECK(ranked_pairs_winners(kUnanimous) == WinnerSet{a});
  CHECK(ranked_pairs_winners(kCycle) == WinnerSet{a, b, c});
  CHECK(ranked_pairs_winners(prof(2, {{a, b}})) == WinnerSet{a});
  // a > b by 3 locks first; b > c and c > a tie at 1, so either may be
  // skipped.
  LinearProfile p = prof(3, {{a, b, c}, {a, b, c}, {c, a, b}, {b, c, a}, {c, a, b}});
  CHECK(ranked_pairs_winners(p) == testing::brute_ranked_pairs(p));
}

TEST_CASE("voting trees") {
  TreeShape t = TreeShape::balanced(3);
  CHECK(t.valid_for(3));
  CHECK(voting_tree_winners(t, kUnanimous) == WinnerSet{a});
  CHECK(voting_tree_winners(TreeShape::balanced(2), prof(2, {{a, b}, {b, a}})) ==
        WinnerSet{a, b});
  LinearProfile p4 = prof(4, {{a, b, c, d}, {b, c, a, d}, {c, a, b, d}});
  TreeShape t4 = TreeShape::balanced(4);
  CHECK(t4.leaves() == std::vector<int>{a, b, c, d});
  CHECK(voting_tree_winners(t4, p4) == testing::brute_voting_tree(t4, p4));

  std::vector<std::string> labels = {"a", "b", "c", "d"};
  TreeShape parsed = TreeShape::parse("((a b) (c d))", labels);
  CHECK(parsed.format(labels) == "((a b) (c d))");
  TreeShape chain = TreeShape::parse("(((a b) c) d)", labels);
  CHECK(chain.leaves() == std::vector<int>{a, b, c, d});
  CHECK_THROWS(TreeShape::parse("((a b) c", labels));
  CHECK_THROWS(TreeShape::parse("((a a) c)", labels));
}

TEST_CASE("balanced trees") {
  for (int m = 1; m <= 17; ++m) {
    TreeShape t = TreeShape::balanced(m);
    CHECK(t.valid_for(m));
    CHECK(t.leaves().size() == static_cast<size_t>(m));
  }
}

TEST_CASE("plurality with runoff") {
  CHECK(plurality_runoff_winners(kUnanimous) == WinnerSet{a});
  // Three-way first-round tie: any two may meet, and c loses to both.
  LinearProfile p = prof(3, {{a, b, c}, {b, a, c}, {c, a, b}});
  CHECK(plurality_runoff_winners(p) == WinnerSet{a, b});
  CHECK(plurality_runoff_winners(prof(2, {{a, b}, {b, a}})) == WinnerSet{a, b});
}

TEST_CASE("STV") {
  CHECK(stv_winners(kUnanimous) == WinnerSet{a});
  CHECK(stv_winners(prof(2, {{a, b}, {b, a}, {b, a}})) == WinnerSet{b});
  CHECK(stv_winners(kCycle) == WinnerSet{a, b, c});
}

TEST_CASE("winner sets are never empty") {
  testing::Rng rng(21);
  std::vector<RuleSpec> rules = {RuleSpec::borda(), RuleSpec::plurality(), RuleSpec::veto(),
                                 RuleSpec::of(RuleKind::kCopeland), RuleSpec::of(RuleKind::kMaximin),
                                 RuleSpec::of(RuleKind::kBucklin), RuleSpec::of(RuleKind::kRankedPairs),
                                 RuleSpec::of(RuleKind::kVotingTree),
                                 RuleSpec::of(RuleKind::kPluralityRunoff), RuleSpec::of(RuleKind::kStv)};
  for (int i = 0; i < 100; ++i) {
    LinearProfile p = testing::random_linear_profile(rng, 2 + i % 4, 1 + i % 6);
    for (const auto& r : rules) CHECK_FALSE(winners(r, p).empty());
  }
}

TEST_CASE("parse_rule") {
  CHECK(parse_rule("borda").name() == "borda");
  CHECK(parse_rule("k-approval:3").k == 3);
  CHECK(parse_rule("scoring:3,1,0").scores == std::vector<int>{3, 1, 0});
  CHECK(parse_rule("tree:balanced").kind == RuleKind::kVotingTree);
  CHECK(parse_rule("plurality-runoff").kind == RuleKind::kPluralityRunoff);
  for (const char* s : {"plurality", "veto", "copeland", "maximin", "bucklin", "ranked-pairs", "stv"})
    CHECK(parse_rule(s).name() == s);
  CHECK_THROWS_AS(parse_rule("borda:2"), ParseError);
  CHECK_THROWS_AS(parse_rule("k-approval:x"), ParseError);
  CHECK_THROWS_AS(parse_rule("tree:nope"), ParseError);
  CHECK_THROWS_AS(parse_rule("condorcet"), ParseError);
}
