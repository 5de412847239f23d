#include <numeric>

#include "doctest.h"
#include "ppw/errors.h"
#include "ppw/fixtures.h"
#include "ppw/oracle.h"
#include "ppw/runoff_flow.h"
#include "support/testgen.h"

using namespace ppw;

namespace {

bool certificate_holds(const PosetProfile& p, int c, const RunoffCertificate& cert) {
  if (cert.extension.votes.size() != static_cast<size_t>(p.n())) return false;
  for (int j = 0; j < p.n(); ++j) {
    if (!extends(cert.extension.votes[j], p.ballot(j))) return false;
    if (cert.extension.votes[j].ranking.front() != cert.tops[j]) return false;
  }
  return contains(plurality_runoff_winners(cert.extension), c);
}

// Flow conservation and capacity at every inner node.
bool is_flow(const FlowNetwork& net, const FlowResult& f) {
  std::vector<long long> bal(net.node_count(), 0);
  for (size_t e = 0; e < net.edges.size(); ++e) {
    if (f.flow[e] < 0 || f.flow[e] > net.edges[e].cap) return false;
    bal[net.edges[e].from] -= f.flow[e];
    bal[net.edges[e].to] += f.flow[e];
  }
  for (int v = 0; v < net.node_count(); ++v)
    if (v != net.source() && v != net.sink() && bal[v] != 0) return false;
  return bal[net.sink()] == f.value;
}

}  // namespace

TEST_CASE("top_set") {
  CHECK(top_set(PartialOrder(3)) == AltSet{0, 1, 2});
  CHECK(top_set(three_ballot(1)) == AltSet{0});
  CHECK(top_set(three_ballot(3)) == AltSet{0, 1});
  CHECK(top_set(five_alternative_order()) == AltSet{0, 4});
}

TEST_CASE("rival_lead and build_flow guards") {
  PosetProfile p = PosetProfile::from_linear({3, {{{1, 0, 2}}, {{1, 2, 0}}, {{0, 1, 2}}}});
  CHECK(rival_lead(p, 0, 1) == 2);
  CHECK(rival_lead(p, 0, 2) == 1);
  CHECK_THROWS_AS(build_flow(p, 0, 1, 1, 1), RivalDominates);
  CHECK_THROWS_AS(build_flow(p, 0, 2, 2, 2), CapacityNegative);
  FlowNetwork net = build_flow(p, 0, 2, 1, 1);
  CHECK(net.node_count() == 4 + 3 + 3);
  CHECK(net.sink() == net.node_count() - 1);
}

TEST_CASE("max flow is a feasible flow") {
  testing::Rng rng(41);
  int built = 0;
  for (int i = 0; i < 300; ++i) {
    int m = 2 + i % 4, n = 1 + i % 5;
    PosetProfile p = testing::random_profile(rng, m, n, 3);
    int c = static_cast<int>(rng() % m), w = (c + 1) % m;
    for (int l1 = 0; l1 <= n; ++l1)
      for (int l2 = 0; l1 + l2 <= n; ++l2) {
        if (2 * rival_lead(p, c, w) > n) continue;
        FlowNetwork net = build_flow(p, c, w, l1, l2);
        FlowResult f = max_flow(net);
        ++built;
        CHECK(f.value <= n);
        CHECK(is_flow(net, f));
      }
  }
  CHECK(built > 0);
}

TEST_CASE("three-ballot profiles") {
  PosetProfile p = three_ballot_profile();
  PcwResult r = pcw_plurality_runoff(p, 0);
  CHECK(r.possible == oracle_query(p, RuleSpec::of(RuleKind::kPluralityRunoff), 0, QueryKind::kPcW).answer);
  if (r.possible) {
    REQUIRE(r.certificate);
    CHECK(certificate_holds(p, 0, *r.certificate));
  }
}

TEST_CASE("certificates and agreement with the oracle") {
  testing::Rng rng(42);
  RuleSpec runoff = RuleSpec::of(RuleKind::kPluralityRunoff);
  for (int i = 0; i < 400; ++i) {
    int m = 2 + i % 4;
    PosetProfile p = testing::random_profile(rng, m, 1 + i % 4, 4);
    for (int c = 0; c < m; ++c) {
      PcwResult r = pcw_plurality_runoff(p, c);
      CHECK(r.possible == oracle_query(p, runoff, c, QueryKind::kPcW).answer);
      if (r.possible) {
        REQUIRE(r.certificate);
        CHECK(certificate_holds(p, c, *r.certificate));
      }
      std::optional<RunoffCertificate> why;
      NwResult nw = nw_plurality_runoff(p, c, &why);
      CHECK(nw.necessary == oracle_query(p, runoff, c, QueryKind::kNW).answer);
      if (!nw.necessary) {
        REQUIRE(nw.rival);
        REQUIRE(why);
        CHECK(certificate_holds(p, *nw.rival, *why));
      }
    }
  }
}

TEST_CASE("unanimous linear profile") {
  PosetProfile p = PosetProfile::from_linear({3, {{{2, 0, 1}}, {{2, 1, 0}}}});
  CHECK(nw_plurality_runoff(p, 2).necessary);
  CHECK_FALSE(pcw_plurality_runoff(p, 0).possible);
  CHECK_FALSE(pcw_plurality_runoff(p, 1).possible);
}
