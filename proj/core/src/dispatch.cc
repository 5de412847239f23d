#include "ppw/dispatch.h"

#include "ppw/errors.h"

namespace ppw {

std::string solver_tag(Solver s) {
  switch (s) {
    case Solver::kOracle:
      return "oracle";
    case Solver::kPositionalNw:
      return "positional-slide";
    case Solver::kMaximinNw:
      return "maximin-pair-lift";
    case Solver::kBucklinNw:
      return "bucklin-threshold";
    case Solver::kRunoffFlowPcw:
      return "runoff-flow";
    case Solver::kRunoffFlowNw:
      return "runoff-flow-rivals";
  }
  return "?";
}

bool is_polynomial(Solver s) { return s != Solver::kOracle; }

std::string rule_family(RuleKind k) {
  switch (k) {
    case RuleKind::kPositional:
      return "positional";
    case RuleKind::kCopeland:
      return "copeland";
    case RuleKind::kMaximin:
      return "maximin";
    case RuleKind::kBucklin:
      return "bucklin";
    case RuleKind::kRankedPairs:
      return "ranked-pairs";
    case RuleKind::kVotingTree:
      return "voting-tree";
    case RuleKind::kPluralityRunoff:
      return "plurality-runoff";
    case RuleKind::kStv:
      return "stv";
  }
  return "?";
}

namespace {

Solver solver_for_kind(RuleKind k, QueryKind q) {
  bool nw_side = q == QueryKind::kNW || q == QueryKind::kNcW;
  switch (k) {
    case RuleKind::kPositional:
      return nw_side ? Solver::kPositionalNw : Solver::kOracle;
    case RuleKind::kMaximin:
      return nw_side ? Solver::kMaximinNw : Solver::kOracle;
    case RuleKind::kBucklin:
      return nw_side ? Solver::kBucklinNw : Solver::kOracle;
    case RuleKind::kPluralityRunoff:
      if (q == QueryKind::kPcW) return Solver::kRunoffFlowPcw;
      if (q == QueryKind::kNW) return Solver::kRunoffFlowNw;
      return Solver::kOracle;
    default:
      return Solver::kOracle;
  }
}

}  // namespace

std::vector<DispatchEntry> dispatch_table() {
  std::vector<DispatchEntry> out;
  for (RuleKind k : {RuleKind::kPositional, RuleKind::kCopeland, RuleKind::kMaximin,
                     RuleKind::kBucklin, RuleKind::kRankedPairs, RuleKind::kVotingTree,
                     RuleKind::kPluralityRunoff, RuleKind::kStv})
    for (QueryKind q : {QueryKind::kPW, QueryKind::kNW, QueryKind::kPcW, QueryKind::kNcW})
      out.push_back({rule_family(k), q, solver_for_kind(k, q)});
  return out;
}

Solver solver_for(const RuleSpec& rule, QueryKind query) {
  return solver_for_kind(rule.kind, query);
}

QueryAnswer run_query(const PosetProfile& p, const RuleSpec& rule, int c,
                      QueryKind query, const OracleOptions& opt) {
  if (c < 0 || c >= p.m()) throw Error("candidate out of range");
  QueryAnswer out;
  out.solver = solver_for(rule, query);
  NwQuery nq{&p, c,
             query == QueryKind::kNW ? Strictness::kUnique : Strictness::kCo};
  auto take = [&](const NwResult& r) {
    out.answer = r.necessary;
    out.rival = r.rival;
    out.rival2 = r.rival2;
    out.k = r.k;
  };
  switch (out.solver) {
    case Solver::kPositionalNw:
      take(nw_positional(rule.scoring_vector(p.m()), nq));
      return out;
    case Solver::kMaximinNw: {
      NwResult r = nw_maximin(nq);
      take(r);
      if (r.used_oracle) out.solver = Solver::kOracle;
      return out;
    }
    case Solver::kBucklinNw:
      take(nw_bucklin(nq));
      return out;
    case Solver::kRunoffFlowPcw: {
      PcwResult r = pcw_plurality_runoff(p, c);
      out.answer = r.possible;
      out.certificate = r.certificate;
      if (r.certificate) out.witness = r.certificate->extension;
      return out;
    }
    case Solver::kRunoffFlowNw: {
      std::optional<RunoffCertificate> why;
      take(nw_plurality_runoff(p, c, &why));
      out.certificate = why;
      if (why) out.witness = why->extension;
      return out;
    }
    case Solver::kOracle:
      break;
  }
  OracleResult r = oracle_query(p, rule, c, query, opt);
  out.answer = r.answer;
  out.witness = r.witness;
  out.nodes = r.nodes;
  return out;
}

}  // namespace ppw
