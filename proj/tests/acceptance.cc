// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 when any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "ppw/errors.h"
#include "ppw/fixtures.h"
#include "ppw/instances.h"
#include "ppw/mcgarvey.h"
#include "ppw/nw.h"
#include "ppw/oracle.h"
#include "ppw/reductions.h"
#include "ppw/rules.h"
#include "ppw/runoff_flow.h"
#include "support/testgen.h"

using namespace ppw;
using namespace ppw::testing;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

bool member(const WinnerSet& w, int c) {
  return std::find(w.begin(), w.end(), c) != w.end();
}

// Whether c wins outright (unique) or at least ties (co) on a full profile.
bool wins(const WinnerSet& w, int c, QueryKind kind) {
  bool unique = kind == QueryKind::kPW || kind == QueryKind::kNW;
  return unique ? w == WinnerSet{c} : member(w, c);
}

bool ask(const PosetProfile& p, const RuleSpec& r, int c, QueryKind k) {
  return oracle_query(p, r, c, k).answer;
}

std::string str(std::uint64_t x) { return std::to_string(x); }

// ---------------------------------------------------------------------------

Outcome oracle_equivalence() {
  Rng rng(101);
  const int kProfiles = 2000;
  std::vector<RuleSpec> positional = {RuleSpec::borda(), RuleSpec::plurality(),
                                      RuleSpec::veto(), RuleSpec::approval(2)};
  std::uint64_t checks = 0, mismatches = 0;
  std::string first;
  for (int i = 0; i < kProfiles; ++i) {
    int m = 3 + i % 3, n = 1 + (i / 3) % 5;
    PosetProfile p = random_profile(rng, m, n, 4);
    for (Strictness s : {Strictness::kUnique, Strictness::kCo}) {
      QueryKind kind = s == Strictness::kUnique ? QueryKind::kNW : QueryKind::kNcW;
      for (int c = 0; c < m; ++c) {
        NwQuery q{&p, c, s};
        auto check = [&](const RuleSpec& r, bool got) {
          ++checks;
          if (got != ask(p, r, c, kind)) {
            if (!mismatches++)
              first = r.name() + " " + query_name(kind) + " profile " + str(i);
          }
        };
        for (const auto& r : positional) check(r, nw_positional(r.scoring_vector(m), q).necessary);
        check(RuleSpec::of(RuleKind::kMaximin), nw_maximin(q).necessary);
        check(RuleSpec::of(RuleKind::kBucklin), nw_bucklin(q).necessary);
      }
    }
  }
  Outcome o;
  o.pass = mismatches == 0;
  o.detail = str(kProfiles) + " profiles, " + str(checks) + " checks, " + str(mismatches) +
             " mismatches" + (first.empty() ? "" : " (first: " + first + ")");
  return o;
}

Outcome runoff_flow_sweep() {
  Rng rng(202);
  const int kProfiles = 1000;
  RuleSpec rule = RuleSpec::of(RuleKind::kPluralityRunoff);
  std::uint64_t checks = 0, mismatches = 0, bad_witness = 0, witnesses = 0;
  for (int i = 0; i < kProfiles; ++i) {
    int m = 2 + i % 3, n = 1 + (i / 3) % 4;
    PosetProfile p = random_profile(rng, m, n, m * (m - 1) / 2);
    auto witness_ok = [&](const RunoffCertificate& cert, int who) {
      ++witnesses;
      if (cert.extension.n() != p.n()) return false;
      for (int j = 0; j < p.n(); ++j)
        if (!extends(cert.extension.votes[j], p.ballot(j))) return false;
      return member(plurality_runoff_winners(cert.extension), who);
    };
    for (int c = 0; c < m; ++c) {
      PcwResult pc = pcw_plurality_runoff(p, c);
      ++checks;
      if (pc.possible != ask(p, rule, c, QueryKind::kPcW)) ++mismatches;
      if (pc.possible && (!pc.certificate || !witness_ok(*pc.certificate, c))) ++bad_witness;

      std::optional<RunoffCertificate> why;
      NwResult nw = nw_plurality_runoff(p, c, &why);
      ++checks;
      if (nw.necessary != ask(p, rule, c, QueryKind::kNW)) ++mismatches;
      if (!nw.necessary && (!why || !nw.rival || !witness_ok(*why, *nw.rival))) ++bad_witness;
    }
  }
  Outcome o;
  o.pass = mismatches == 0 && bad_witness == 0;
  o.detail = str(kProfiles) + " profiles, " + str(checks) + " checks, " + str(mismatches) +
             " mismatches, " + str(witnesses) + " flow witnesses, " + str(bad_witness) +
             " bad";
  return o;
}

Outcome three_ballot_fixtures() {
  RuleSpec r = RuleSpec::plurality();
  PosetProfile p = three_ballot_profile(), p2 = repeated_first_profile();
  struct Want {
    const PosetProfile* p;
    QueryKind k;
    bool answer;
    const char* what;
  };
  std::vector<Want> wants = {
      {&p, QueryKind::kPW, true, "(O1,O2,O3) PW"},   {&p, QueryKind::kPcW, true, "(O1,O2,O3) PcW"},
      {&p, QueryKind::kNW, false, "(O1,O2,O3) NW"},  {&p, QueryKind::kNcW, false, "(O1,O2,O3) NcW"},
      {&p2, QueryKind::kNW, true, "(O1,O1,O2) NW"},  {&p2, QueryKind::kNcW, true, "(O1,O1,O2) NcW"},
  };
  Outcome o;
  int bad = 0;
  for (const auto& w : wants)
    if (ask(*w.p, r, 0, w.k) != w.answer) {
      ++bad;
      o.detail += std::string(w.what) + " wrong; ";
    }
  o.pass = bad == 0;
  o.detail += str(wants.size()) + " answers for c1, " + str(bad) + " mismatches";
  return o;
}

Outcome independence() {
  RuleSpec r = RuleSpec::plurality();
  int cases = 0, pairs = 0, bad = 0;
  std::string first;
  for (const auto& fx : independence_fixtures()) {
    ++cases;
    for (const auto& s : fx.stated) {
      if (ask(fx.p, r, 0, s.kind) != s.on_p || ask(fx.pbar, r, 0, s.kind) != s.on_pbar) {
        if (!bad++) first = fx.label + " stated " + query_name(s.kind);
      }
    }
    for (auto [x, y] : fx.xy) {
      ++pairs;
      bool same = true;
      for (int c = 0; c < fx.p.m(); ++c)
        same = same && ask(fx.p, r, c, x) == ask(fx.pbar, r, c, x);
      bool differs = ask(fx.p, r, 0, y) != ask(fx.pbar, r, 0, y);
      if (!same || !differs) {
        if (!bad++) first = fx.label + " " + query_name(x) + "/" + query_name(y);
      }
    }
  }
  Outcome o;
  o.pass = bad == 0;
  o.detail = str(cases) + " profile pairs covering " + str(pairs) + " (X, Y) cases, " +
             str(bad) + " mismatches" + (first.empty() ? "" : " (first: " + first + ")");
  return o;
}

Outcome mcgarvey_exactness() {
  Rng rng(505);
  const int kCases = 500;
  int bad = 0, odd = 0;
  for (int i = 0; i < kCases; ++i) {
    int m = 2 + i % 4;
    LinearProfile base = random_linear_profile(rng, m, uniform(rng, 0, 3));
    PairwiseMatrix bm = pairwise_matrix(base);
    int parity = uniform(rng, 0, 1);
    odd += parity;
    TargetDiffs F(m);
    for (int a = 0; a < m; ++a)
      for (int b = a + 1; b < m; ++b) {
        int want = (bm.D(a, b) + parity) & 1;
        int x;
        do x = uniform(rng, -6, 6);
        while ((x & 1) != want);
        F.set(a, b, x);
      }
    LinearProfile extra = synthesize_diffs(base, F);
    LinearProfile all = base;
    all.votes.insert(all.votes.end(), extra.votes.begin(), extra.votes.end());
    PairwiseMatrix am = pairwise_matrix(all);
    bool exact = true;
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b)
        if (a != b && am.D(a, b) != F.at(a, b)) exact = false;
    if (!exact || extra.n() > mcgarvey_size_bound(base, F)) ++bad;
  }
  Outcome o;
  o.pass = bad == 0;
  o.detail = str(kCases) + " targets (" + str(odd) + " odd parity), " + str(bad) + " failures";
  return o;
}

// One generated instance checked three ways: structural bound, oracle answer
// against the source instance, and the transported witness.
struct RoundTrip {
  int runs = 0, mismatches = 0, bound_failures = 0, witness_failures = 0, budget = 0;
  std::string first;

  void note(const std::string& what) {
    if (first.empty()) first = what;
  }

  void check(const ReductionOutput& out, bool solvable,
             const std::optional<std::vector<int>>& certificate, const std::string& tag) {
    ++runs;
    if (out.pair_bound >= 0 && !within_pair_bound(out)) {
      ++bound_failures;
      note(tag + " exceeds its pair bound");
    }
    OracleOptions opt;
    opt.budget = 20'000'000;
    try {
      bool got = oracle_query(out.profile, out.rule, out.candidate, out.query, opt).answer;
      if (got != out.expected_answer(solvable)) {
        ++mismatches;
        note(tag + " answered " + (got ? "true" : "false"));
      }
    } catch (const BudgetExceeded&) {
      ++budget;
      note(tag + " over budget");
    }
    if (certificate) {
      LinearProfile ext = transport_witness(out, *certificate);
      bool ok = ext.n() == out.profile.n();
      for (int j = 0; ok && j < ext.n(); ++j) ok = extends(ext.votes[j], out.profile.ballot(j));
      if (ok) {
        bool w = wins(winners(out.rule, ext), out.candidate, out.query);
        // PW/PcW: c wins there; NW/NcW: c does not.
        ok = out.yes_when_solvable ? w : !w;
      }
      if (!ok) {
        ++witness_failures;
        note(tag + " witness");
      }
    }
  }
};

std::optional<std::vector<int>> x3c_certificate(const ReductionOutput& out) {
  if (!out.x3c) return std::nullopt;
  return solve_x3c(*out.x3c);
}

Outcome reduction_round_trips() {
  RoundTrip rt;
  std::vector<X3CInstance> instances = x3c_classes(3, 4);
  for (auto& x : x3c_classes(6, 4)) instances.push_back(x);
  int solvable_count = 0;
  using Q = QueryKind;
  for (size_t i = 0; i < instances.size(); ++i) {
    const X3CInstance& inst = instances[i];
    bool solvable = solve_x3c(inst).has_value();
    solvable_count += solvable;
    std::string id = "q=" + str(inst.q) + " t=" + str(inst.t()) + " #" + str(i);
    auto run = [&](const std::string& name, const std::function<ReductionOutput()>& gen) {
      try {
        ReductionOutput out = gen();
        rt.check(out, solvable, solvable ? x3c_certificate(out) : std::nullopt,
                 name + " " + query_name(out.query) + " " + id);
      } catch (const std::exception& e) {
        ++rt.runs;
        ++rt.mismatches;
        rt.note(name + " " + id + " threw: " + e.what());
      }
    };
    for (Q k : {Q::kPW, Q::kPcW}) {
      run("maximin", [&] { return gen_maximin(inst, k); });
      run("bucklin", [&] { return gen_bucklin(inst, k); });
      run("borda", [&] { return gen_scoring_pw(inst, RuleSpec::borda(), k); });
    }
    for (Q k : {Q::kPW, Q::kPcW, Q::kNW, Q::kNcW}) {
      run("ranked-pairs", [&] { return gen_ranked_pairs(inst, k); });
      run("copeland", [&] { return gen_copeland(inst, k); });
      run("voting-tree", [&] { return gen_voting_tree(inst, k); });
    }
    RunoffOptions compact;
    compact.full_filler = false;
    run("runoff-ncw", [&] { return gen_runoff(inst, Q::kNcW, compact); });
    if (runoff_shape(inst, Q::kNcW).alternatives <= 1024)
      run("runoff-ncw-full", [&] { return gen_runoff(inst, Q::kNcW); });
    // The PW runoff profiles leave set alternatives free among the filler;
    // at q = 6 one oracle run takes minutes, so only q = 3 is enumerated.
    if (inst.q == 3) run("runoff-pw", [&] { return gen_runoff(inst, Q::kPW, compact); });
  }

  // 3-SAT over three variables: every clause multiset up to size two, plus
  // the eight-clause unsatisfiable formula.
  std::vector<ThreeSatInstance> sats;
  auto clause = [](int signs) {
    std::array<Literal, 3> c;
    for (int v = 0; v < 3; ++v) c[v] = {v, ((signs >> v) & 1) == 0};
    return c;
  };
  for (int a = 0; a < 8; ++a) {
    sats.push_back({3, {clause(a)}});
    for (int b = a; b < 8; ++b) sats.push_back({3, {clause(a), clause(b)}});
  }
  ThreeSatInstance all8{3, {}};
  for (int a = 0; a < 8; ++a) all8.clauses.push_back(clause(a));
  sats.push_back(all8);
  int sat_solvable = 0;
  for (size_t i = 0; i < sats.size(); ++i) {
    const auto& f = sats[i];
    auto sol = solve_3sat(f);
    sat_solvable += sol.has_value();
    std::optional<std::vector<int>> cert;
    if (sol) cert = std::vector<int>(sol->begin(), sol->end());
    for (Q k : {Q::kPW, Q::kPcW}) {
      std::string tag = "approval " + query_name(k) + " formula #" + str(i);
      try {
        rt.check(gen_kapproval_pw(f, 2, k), sol.has_value(), cert, tag);
      } catch (const std::exception& e) {
        ++rt.runs;
        ++rt.mismatches;
        rt.note(tag + " threw: " + e.what());
      }
    }
  }

  // Structural bounds on instances too large to enumerate.
  Rng rng(606);
  int large = 0, large_bad = 0;
  for (int i = 0; i < 24; ++i) {
    int q = 9 + 3 * (i % 4);
    int t = q / 3 + uniform(rng, 0, q);
    X3CInstance inst{q, {}};
    for (int j = 0; j < t; ++j) {
      std::vector<int> e(q);
      std::iota(e.begin(), e.end(), 0);
      std::shuffle(e.begin(), e.end(), rng);
      std::array<int, 3> s = {e[0], e[1], e[2]};
      std::sort(s.begin(), s.end());
      inst.sets.push_back(s);
    }
    std::vector<ReductionOutput> outs = {
        gen_maximin(inst, Q::kPW),      gen_bucklin(inst, Q::kPcW),
        gen_ranked_pairs(inst, Q::kNW), gen_copeland(inst, Q::kNcW),
        gen_voting_tree(inst, Q::kPW),  gen_scoring_pw(inst, RuleSpec::borda(), Q::kPW)};
    for (const auto& out : outs) {
      ++large;
      if (!within_pair_bound(out)) ++large_bad;
    }
    RunoffShape shape = runoff_shape(inst, Q::kNcW);
    ++large;
    for (long long u : shape.p1_undetermined)
      if (u > 4) {
        ++large_bad;
        break;
      }
  }

  Outcome o;
  o.pass = rt.mismatches == 0 && rt.bound_failures == 0 && rt.witness_failures == 0 &&
           rt.budget == 0 && large_bad == 0 && solvable_count > 0 &&
           solvable_count < static_cast<int>(instances.size());
  std::ostringstream d;
  d << instances.size() << " X3C instances (" << solvable_count << " solvable) and "
    << sats.size() << " formulas (" << sat_solvable << " satisfiable), " << rt.runs
    << " generated profiles: " << rt.mismatches << " mismatches, " << rt.budget
    << " over budget, " << rt.witness_failures << " witness failures, "
    << rt.bound_failures + large_bad << "/" << rt.runs + large << " bound failures";
  if (!rt.first.empty()) d << " (first: " << rt.first << ")";
  o.detail = d.str();
  return o;
}

Outcome implications() {
  Rng rng(707);
  std::vector<RuleSpec> rules = {RuleSpec::borda(),
                                 RuleSpec::plurality(),
                                 RuleSpec::veto(),
                                 RuleSpec::approval(2),
                                 RuleSpec::of(RuleKind::kCopeland),
                                 RuleSpec::of(RuleKind::kMaximin),
                                 RuleSpec::of(RuleKind::kBucklin),
                                 RuleSpec::of(RuleKind::kRankedPairs),
                                 RuleSpec::of(RuleKind::kVotingTree),
                                 RuleSpec::of(RuleKind::kPluralityRunoff),
                                 RuleSpec::of(RuleKind::kStv)};
  const int kProfiles = 150;
  std::uint64_t checks = 0, violations = 0;
  std::string first;
  for (int i = 0; i < kProfiles; ++i) {
    int m = 3 + i % 2, n = 1 + (i / 2) % 4;
    PosetProfile p = random_profile(rng, m, n, 3);
    for (const auto& r : rules) {
      std::vector<bool> pw(m), nw(m), pcw(m), ncw(m);
      for (int c = 0; c < m; ++c) {
        pw[c] = ask(p, r, c, QueryKind::kPW);
        nw[c] = ask(p, r, c, QueryKind::kNW);
        pcw[c] = ask(p, r, c, QueryKind::kPcW);
        ncw[c] = ask(p, r, c, QueryKind::kNcW);
      }
      for (int c = 0; c < m; ++c) {
        bool no_rival = true;
        for (int d = 0; d < m; ++d)
          if (d != c && pcw[d]) no_rival = false;
        bool ok = (!nw[c] || ncw[c]) && (!ncw[c] || pcw[c]) && (!nw[c] || pw[c]) &&
                  (!pw[c] || pcw[c]) && (nw[c] == no_rival);
        ++checks;
        if (!ok && !violations++) first = r.name() + " profile " + str(i);
      }
    }
  }
  Outcome o;
  o.pass = violations == 0;
  o.detail = str(kProfiles) + " profiles x " + str(rules.size()) + " rules, " + str(checks) +
             " candidates, " + str(violations) + " violations" +
             (first.empty() ? "" : " (first: " + first + ")");
  return o;
}

Outcome parallel_universes() {
  Rng rng(808);
  const int kProfiles = 500;
  int bad = 0;
  std::string first;
  for (int i = 0; i < kProfiles; ++i) {
    int m = 2 + i % 4, n = 1 + (i / 4) % 5;
    LinearProfile p = random_linear_profile(rng, m, n);
    TreeShape tree = TreeShape::balanced(m);
    auto cmp = [&](const char* name, const WinnerSet& got, const WinnerSet& want) {
      if (got != want && !bad++) first = std::string(name) + " profile " + str(i);
    };
    cmp("ranked-pairs", ranked_pairs_winners(p), brute_ranked_pairs(p));
    cmp("voting-tree", voting_tree_winners(tree, p), brute_voting_tree(tree, p));
    cmp("plurality-runoff", plurality_runoff_winners(p), brute_plurality_runoff(p));
    cmp("stv", stv_winners(p), brute_stv(p));
  }
  Outcome o;
  o.pass = bad == 0;
  o.detail = str(kProfiles) + " profiles x 4 rules, " + str(bad) + " mismatches" +
             (first.empty() ? "" : " (first: " + first + ")");
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    Outcome (*run)();
  };
  const Criterion criteria[] = {
      {"oracle equivalence (positional, maximin, Bucklin NW/NcW)", oracle_equivalence},
      {"runoff flow sweep (PcW, NW)", runoff_flow_sweep},
      {"three-ballot plurality fixtures", three_ballot_fixtures},
      {"query independence fixtures", independence},
      {"McGarvey exactness and size bound", mcgarvey_exactness},
      {"reduction round trips and pair bounds", reduction_round_trips},
      {"definitional implications", implications},
      {"parallel-universes rules vs exhaustive tie resolution", parallel_universes},
  };
  int failed = 0, i = 0;
  for (const auto& c : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("threw: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    failed += !o.pass;
    std::printf("%s %d. %s: %s [%.1fs]\n", o.pass ? "PASS" : "FAIL", ++i, c.name,
                o.detail.c_str(), secs);
    std::fflush(stdout);
  }
  std::printf("%d/%d criteria passed\n", i - failed, i);
  return failed == 0 ? 0 : 1;
}
