#include <algorithm>

#include "doctest.h"
#include "ppw/errors.h"
#include "ppw/instances.h"
#include "ppw/reductions.h"

using namespace ppw;

namespace {

X3CInstance make(int q, std::vector<std::array<int, 3>> sets) { return {q, std::move(sets)}; }

// q = 3 with its one set, q = 6 with a cover, q = 6 without one.
const X3CInstance kTiny = make(3, {{0, 1, 2}});
const X3CInstance kYes = make(6, {{0, 1, 2}, {2, 3, 4}, {3, 4, 5}});
const X3CInstance kNo = make(6, {{0, 1, 2}, {2, 3, 4}, {1, 3, 5}});

int role(const ReductionOutput& out, const std::string& name, size_t i = 0) {
  return out.roles.at(name).at(i);
}

// Differences in the fixed reference extension (no set chosen).
PairwiseMatrix reference(const ReductionOutput& out) {
  return pairwise_matrix(transport_witness(out, {}));
}

// The transported witness for a cover must make the query hold for c.
bool transported_wins(const ReductionOutput& out, const std::vector<int>& cover) {
  LinearProfile lp = transport_witness(out, cover);
  for (int j = 0; j < out.profile.n(); ++j)
    if (!extends(lp.votes[j], out.profile.ballot(j))) return false;
  WinnerSet w = winners(out.rule, lp);
  bool unique = out.query == QueryKind::kPW || out.query == QueryKind::kNW;
  return unique ? w == WinnerSet{out.candidate} : contains(w, out.candidate);
}

}  // namespace

TEST_CASE("normalize_x3c") {
  X3CInstance one = normalize_x3c(kTiny);
  CHECK(one.q == 3);
  CHECK(one.t() == 3);
  X3CInstance many = normalize_x3c(make(3, {{0, 1, 2}, {0, 1, 2}, {0, 1, 2}, {0, 1, 2}, {0, 1, 2}}));
  CHECK(many.q == many.t());
  CHECK(many.t() % 2 == 1);
  CHECK(normalize_x3c(kNo).t() % 2 == 1);
  for (const X3CInstance& x : {kTiny, kYes, kNo}) {
    X3CInstance n = normalize_x3c(x);
    CHECK(n.q == n.t());
    CHECK(solve_x3c(n).has_value() == solve_x3c(x).has_value());
  }
}

TEST_CASE("well_spread_balanced") {
  for (int x = 1; x <= 40; ++x) {
    TreeShape t = well_spread_balanced(x);
    int leaves = static_cast<int>(t.leaves().size());
    CHECK(leaves >= 2 * x);
    CHECK(leaves <= std::max(4 * x, 2));
    CHECK((leaves & (leaves - 1)) == 0);
  }
  CHECK(sibling_leaf_pairs(TreeShape::balanced(8), TreeShape::balanced(8).root).size() == 4);
}

TEST_CASE("maximin reference differences") {
  for (QueryKind k : {QueryKind::kPW, QueryKind::kPcW}) {
    ReductionOutput out = gen_maximin(kYes, k);
    PairwiseMatrix pm = reference(out);
    int t = 4, w = role(out, "w"), wp = role(out, "w'"), v1 = role(out, "elements");
    CHECK(pm.D(wp, w) == t + 4);
    CHECK(pm.D(v1, wp) == t + 4);
    CHECK(out.p1_count == t);  // padded from 3
    CHECK(within_pair_bound(out));
  }
}

TEST_CASE("Bucklin sizes") {
  ReductionOutput out = gen_bucklin(kYes, QueryKind::kPW);
  int q = kYes.q, t = kYes.t();
  CHECK(out.profile.n() == 2 * t + 2 * q / 3 + 1);
  CHECK(out.profile.m() == 2 + 2 * (q + 1) + q);
  CHECK(within_pair_bound(out));
  CHECK_THROWS(gen_bucklin(kYes, QueryKind::kNW));
}

TEST_CASE("ranked pairs pads to an even t") {
  ReductionOutput out = gen_ranked_pairs(kTiny, QueryKind::kPW);
  REQUIRE(out.x3c);
  CHECK(out.x3c->t() == 2);
  CHECK(gen_ranked_pairs(kYes, QueryKind::kPW).x3c->t() == 4);
  ReductionOutput nw = gen_ranked_pairs(kYes, QueryKind::kNW);
  CHECK_FALSE(nw.yes_when_solvable);
  CHECK(nw.candidate == role(nw, "w"));
  // c > b stays above every difference the encoding ballots can move.
  PairwiseMatrix pm = reference(nw);
  int t = 4, c = role(nw, "c"), b = role(nw, "b");
  CHECK(pm.D(c, b) == 5 * t + 4 + 2);
}

TEST_CASE("small instances are padded with copies of the first set") {
  ReductionOutput mm = gen_maximin(kTiny, QueryKind::kPcW);
  REQUIRE(mm.x3c);
  CHECK(mm.x3c->t() == 4);
  CHECK(mm.p1_count == 4);
  ReductionOutput ro = gen_runoff(kTiny, QueryKind::kNcW, {false, 1024});
  REQUIRE(ro.x3c);
  CHECK(ro.x3c->t() == 2);
  CHECK(gen_runoff(kYes, QueryKind::kNcW, {false, 1024}).x3c->t() == 3);
}

TEST_CASE("Copeland lifts small instances") {
  ReductionOutput out = gen_copeland(kTiny, QueryKind::kPW);
  REQUIRE(out.x3c);
  CHECK(out.x3c->q >= 9);
  CHECK(out.x3c->q == out.x3c->t());
  CHECK(within_pair_bound(out));
}

TEST_CASE("voting tree shape requirements") {
  ReductionOutput out = gen_voting_tree(kYes, QueryKind::kPW);
  CHECK(out.profile.m() >= 2 * kYes.q + 3);
  CHECK(within_pair_bound(out));
  CHECK_THROWS_AS(gen_voting_tree(kYes, QueryKind::kPW, TreeShape::balanced(4)), TreeNotWellSpread);
}

TEST_CASE("runoff shape and size cap") {
  RunoffShape s = runoff_shape(kYes, QueryKind::kNcW, {false, 1024});
  for (long long u : s.p1_undetermined) CHECK(u <= 4);
  RunoffOptions tiny{true, 5};
  CHECK_THROWS_AS(gen_runoff(kYes, QueryKind::kPW, tiny), MaterializationTooLarge);
  ReductionOutput out = gen_runoff(kYes, QueryKind::kNcW, {false, 1024});
  CHECK(out.profile.m() == s.alternatives);
}

TEST_CASE("approval encodes clauses") {
  ThreeSatInstance f{3, {{Literal{0, true}, Literal{1, false}, Literal{2, true}}}};
  for (QueryKind k : {QueryKind::kPW, QueryKind::kPcW}) {
    ReductionOutput out = gen_kapproval_pw(f, 2, k);
    CHECK(out.p1_count > 0);
    CHECK(within_pair_bound(out));
    CHECK(transported_wins(out, {1, 0, 1}));
  }
}

TEST_CASE("a cover transports to a winning extension") {
  std::vector<int> cover = *solve_x3c(kYes);
  CHECK(transported_wins(gen_maximin(kYes, QueryKind::kPW), cover));
  CHECK(transported_wins(gen_maximin(kYes, QueryKind::kPcW), cover));
  CHECK(transported_wins(gen_bucklin(kYes, QueryKind::kPW), cover));
  CHECK(transported_wins(gen_bucklin(kYes, QueryKind::kPcW), cover));
  CHECK(transported_wins(gen_scoring_pw(kYes, RuleSpec::borda(), QueryKind::kPW), cover));
  CHECK(transported_wins(gen_voting_tree(kYes, QueryKind::kPW), cover));
}

TEST_CASE("construction names") {
  auto names = construction_names();
  CHECK(names.size() == 8);
  CHECK(std::find(names.begin(), names.end(), "runoff") != names.end());
}
