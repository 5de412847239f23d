#include "ppw/reductions.h"

#include <algorithm>
#include <numeric>
#include <tuple>

#include "ppw/errors.h"
#include "ppw/mcgarvey.h"

namespace ppw {

namespace {

int sz(const std::vector<int>& v) { return static_cast<int>(v.size()); }

std::vector<int> join(std::vector<int> a, const std::vector<int>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

std::vector<int> without(const std::vector<int>& all, const std::vector<int>& drop) {
  std::vector<int> out;
  for (int x : all)
    if (std::find(drop.begin(), drop.end(), x) == drop.end()) out.push_back(x);
  return out;
}

struct Roster {
  std::vector<std::string> labels;
  std::map<std::string, std::vector<int>> roles;

  int m() const { return static_cast<int>(labels.size()); }

  int add(const std::string& label, const std::string& role) {
    labels.push_back(label);
    roles[role].push_back(m() - 1);
    return m() - 1;
  }

  std::vector<int> add_many(const std::string& prefix, int count,
                            const std::string& role) {
    std::vector<int> out;
    roles[role];
    for (int i = 1; i <= count; ++i)
      out.push_back(add(prefix + std::to_string(i), role));
    return out;
  }
};

// The sequences in the order given, then every other alternative ascending.
LinearOrder ordered(int m, const std::vector<std::vector<int>>& seqs) {
  LinearOrder v;
  v.ranking.reserve(m);
  std::vector<char> used(m, 0);
  for (const auto& s : seqs)
    for (int a : s) {
      if (used[a]) throw DuplicateElement("alternative " + std::to_string(a) + " listed twice");
      used[a] = 1;
      v.ranking.push_back(a);
    }
  for (int a = 0; a < m; ++a)
    if (!used[a]) v.ranking.push_back(a);
  return v;
}

// Relations between the two sides are dropped in both directions.
using Removal = std::pair<std::vector<int>, std::vector<int>>;

PartialOrder loosen(const LinearOrder& v, const std::vector<Removal>& removals) {
  int m = v.m();
  std::vector<char> drop(static_cast<size_t>(m) * m, 0);
  for (const auto& [xs, ys] : removals)
    for (int x : xs)
      for (int y : ys)
        if (x != y) drop[x * m + y] = drop[y * m + x] = 1;
  std::vector<Pair> keep;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      int a = v.ranking[i], b = v.ranking[j];
      if (!drop[a * m + b]) keep.emplace_back(a, b);
    }
  PartialOrder o = transitive_close(keep, m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      if (drop[a * m + b] && o.dominates(a, b))
        throw Error("removed relation is implied by the remaining ones");
  return o;
}

std::vector<int> set_alts(const X3CInstance& inst, int j, const std::vector<int>& elems) {
  std::vector<int> out;
  for (int e : inst.sets[j]) out.push_back(elems[e]);
  std::sort(out.begin(), out.end());
  return out;
}

void require_div3(const X3CInstance& inst) {
  inst.validate();
  if (inst.q % 3 != 0)
    throw InvalidInstance("element count must be a multiple of 3");
}

bool is_pw_side(QueryKind k) { return k == QueryKind::kPW || k == QueryKind::kPcW; }

// Pairwise targets; unset pairs take the smallest value of the requested
// parity, positive toward the lower index.
struct DiffSpec {
  int m;
  std::vector<int> F;
  std::vector<char> fixed;

  explicit DiffSpec(int m_) : m(m_), F(m_ * m_, 0), fixed(m_ * m_, 0) {}

  void set(int a, int b, int x) {
    F[a * m + b] = x;
    F[b * m + a] = -x;
    fixed[a * m + b] = fixed[b * m + a] = 1;
  }

  TargetDiffs finish(int parity) const {
    TargetDiffs t(m);
    for (int a = 0; a < m; ++a)
      for (int b = a + 1; b < m; ++b) {
        if (fixed[a * m + b]) {
          t.set(a, b, F[a * m + b]);
        } else {
          t.set(a, b, parity % 2 ? 1 : 0);
        }
      }
    return t;
  }
};

LinearProfile linear(int m, const std::vector<LinearOrder>& votes) {
  LinearProfile p;
  p.m = m;
  p.votes = votes;
  return p;
}

// Votes moving the listed differences to their targets while every other
// difference keeps its value in `base`. When the gaps are odd, an ascending
// vote goes first.
LinearProfile adjust_listed(const LinearProfile& base,
                            const std::vector<std::tuple<int, int, int>>& targets) {
  PairwiseMatrix pm = pairwise_matrix(base);
  int parity = -1;
  for (auto [a, b, x] : targets) {
    int g = ((x - pm.D(a, b)) % 2 + 2) % 2;
    if (parity >= 0 && g != parity)
      throw ParityMismatch("listed targets disagree in parity");
    parity = g;
  }
  LinearProfile lead{base.m, {}};
  LinearProfile work = base;
  if (parity == 1) {
    LinearOrder asc = ordered(base.m, {});
    lead.votes.push_back(asc);
    work.votes.push_back(asc);
    pm = pairwise_matrix(work);
  }
  TargetDiffs F = TargetDiffs::from_matrix(pm);
  for (auto [a, b, x] : targets) F.set(a, b, x);
  LinearProfile rest = synthesize_diffs(work, F);
  lead.votes.insert(lead.votes.end(), rest.votes.begin(), rest.votes.end());
  return lead;
}

ReductionOutput start(const std::string& tag, const Roster& r, int p1_count,
                      int bound) {
  ReductionOutput out;
  out.construction = tag;
  out.profile = PosetProfile(r.m(), r.labels);
  out.roles = r.roles;
  out.p1_count = p1_count;
  out.pair_bound = bound;
  return out;
}

void add_all(PosetProfile& p, const std::vector<LinearOrder>& votes) {
  for (const auto& v : votes) p.add(v);
}

}  // namespace

int max_undetermined_pairs(const PosetProfile& p) {
  int best = 0;
  for (const auto& o : p.ballots()) best = std::max(best, o.undetermined_pairs());
  return best;
}

bool within_pair_bound(const ReductionOutput& out) {
  if (out.pair_bound < 0) return true;
  return max_undetermined_pairs(out.profile) <= out.pair_bound;
}

LinearProfile transport_witness(const ReductionOutput& out,
                                const std::vector<int>& certificate) {
  if (!out.p1_witness) throw Error("construction has no witness map");
  LinearProfile p;
  p.m = out.profile.m();
  p.votes = out.p1_witness(certificate);
  for (int j = out.p1_count; j < out.profile.n(); ++j) {
    const PartialOrder& o = out.profile.ballot(j);
    if (!o.is_linear()) throw Error("score-adjusting ballot is not linear");
    LinearOrder v;
    v.ranking.resize(p.m);
    for (int a = 0; a < p.m; ++a) v.ranking[p.m - 1 - (sz(down_set(o, a)) - 1)] = a;
    p.votes.push_back(std::move(v));
  }
  return p;
}

X3CInstance normalize_x3c(const X3CInstance& inst) {
  inst.validate();
  X3CInstance out = inst;
  if (out.t() > out.q) {
    int extra = out.t() - out.q;
    int base = out.q;
    out.q += 3 * extra;
    for (int i = 0; i < extra; ++i) {
      std::array<int, 3> s = {base + 3 * i, base + 3 * i + 1, base + 3 * i + 2};
      out.sets.push_back(s);
      out.sets.push_back(s);
    }
  } else if (out.q > out.t()) {
    if (out.sets.empty()) throw InvalidInstance("no set to copy");
    std::array<int, 3> first = out.sets.front();
    while (out.t() < out.q) out.sets.push_back(first);
  }
  if (out.q == out.t() && out.t() % 2 == 0) {
    std::array<int, 3> s = {out.q, out.q + 1, out.q + 2};
    out.q += 3;
    for (int i = 0; i < 3; ++i) out.sets.push_back(s);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Positional scoring rules.

std::optional<ScoringParams> find_scoring_params(const RuleSpec& rule, int x) {
  if (rule.kind != RuleKind::kPositional) return std::nullopt;
  int lo = x, hi = 4 * x;
  if (rule.family == ScoringFamily::kExplicit) {
    lo = hi = static_cast<int>(rule.scores.size());
    if (lo < x) return std::nullopt;
  }
  for (int l = std::max(lo, 5); l <= hi; ++l) {
    std::vector<int> s;
    try {
      s = rule.scoring_vector(l);
    } catch (const Error&) {
      continue;
    }
    auto at = [&](int pos) { return static_cast<long long>(s[pos - 1]); };
    for (int k = l - 4; k >= 1; --k) {
      long long g1 = at(k) - at(k + 1), g2 = at(k + 1) - at(k + 2);
      long long g3 = at(k + 2) - at(k + 3), g4 = at(k + 3) - at(k + 4);
      if (g1 > 0 && g1 == g2 && g2 == g3 && g4 > 0) return ScoringParams{l, k, g1, g4};
    }
  }
  return std::nullopt;
}


namespace {

// Highest and lowest score each alternative can reach over all extensions.
void score_bounds(const PosetProfile& p, const std::vector<int>& s,
                  std::vector<long long>& hi, std::vector<long long>& lo) {
  int m = p.m();
  hi.assign(m, 0);
  lo.assign(m, 0);
  for (const auto& o : p.ballots())
    for (int a = 0; a < m; ++a) {
      hi[a] += s[sz(up_set(o, a)) - 1];
      lo[a] += s[m - sz(down_set(o, a))];
    }
}

}  // namespace

ReductionOutput gen_scoring_pw(const X3CInstance& inst, const RuleSpec& rule,
                               QueryKind kind) {
  require_div3(inst);
  if (!is_pw_side(kind)) throw Error("scoring construction answers pw or pcw");
  int q = inst.q, t = inst.t();
  auto params = find_scoring_params(rule, q + 3);
  if (!params)
    throw ConditionUnsatisfied(
        "no (l, k) with three equal positive gaps followed by a positive gap for " +
        rule.name());
  int l = params->l, k = params->k;
  long long k1 = params->k1, k2 = params->k2;

  Roster r;
  int c = r.add("c", "c"), w = r.add("w", "w"), d = r.add("d", "d");
  std::vector<int> V = r.add_many("v", q, "elements");
  std::vector<int> A = r.add_many("a", l - q - 3, "filler");
  int m = r.m();

  // One step of c -> w -> v1 -> ... -> vq -> c, and of d -> a1 -> ... -> d.
  auto shifter = [m](const std::vector<int>& cyc) {
    std::vector<int> next(m);
    std::iota(next.begin(), next.end(), 0);
    for (size_t i = 0; i < cyc.size(); ++i) next[cyc[i]] = cyc[(i + 1) % cyc.size()];
    return next;
  };
  std::vector<int> mv = shifter(join({c, w}, V)), mo = shifter(join({d}, A));
  auto apply = [](const std::vector<int>& next, LinearOrder v, int times) {
    for (int i = 0; i < times; ++i)
      for (int& a : v.ranking) a = next[a];
    return v;
  };
  auto lowest = [m](const std::vector<int>& exclude, int count) {
    std::vector<int> out;
    for (int a = 0; a < m && sz(out) < count; ++a)
      if (std::find(exclude.begin(), exclude.end(), a) == exclude.end()) out.push_back(a);
    if (sz(out) < count) throw Error("not enough alternatives to fill a block");
    return out;
  };
  auto O = [m](const std::vector<std::vector<int>>& seqs) { return ordered(m, seqs); };

  ReductionOutput out = start("scoring-x3c", r, t, 4);
  out.rule = rule;
  out.candidate = c;
  out.query = kind;
  out.x3c = inst;

  std::vector<LinearOrder> ref, chosen_form;
  for (int j = 0; j < t; ++j) {
    std::vector<int> S = set_alts(inst, j, V);
    std::vector<int> B = lowest(join(S, {w, d}), k - 1);
    LinearOrder v = O({B, {w}, S, {d}});
    out.profile.add(loosen(v, {{{w}, join(S, {d})}}));
    ref.push_back(v);
    chosen_form.push_back(O({B, S, {d}, {w}}));
  }

  std::vector<LinearOrder> p2;
  for (int rot = 1; rot <= q + 1; ++rot)
    for (const auto& v : ref) p2.push_back(apply(mv, v, rot));

  std::vector<int> B = lowest({d, w, c}, k - 1);
  std::vector<int> Ap = lowest(join(B, {d, w}), 3);
  // `kept` as is, plus every nontrivial rotation of `rotated`.
  auto family = [&](const LinearOrder& kept, const LinearOrder& rotated) {
    p2.push_back(kept);
    for (int rot = 1; rot <= q + 1; ++rot) p2.push_back(apply(mv, rotated, rot));
  };
  if (kind == QueryKind::kPW) {
    family(O({B, {c}, {w}, {d}}), O({B, {d}, {w}, {c}}));
    family(O({B, {w}, {c}, {d}}), O({B, {d}, {c}, {w}}));
    for (int i = 0; i < q / 3; ++i) family(O({B, {w}, Ap, {d}}), O({B, {d}, Ap, {w}}));
    // The unrotated vote keeps w below d, so w ends K2 lower.
    family(O({B, Ap, {d}, {w}}), O({B, Ap, {w}, {d}}));
  } else {
    family(O({B, {c}, {d}, {w}}), O({B, {d}, {c}, {w}}));
    family(O({B, {w}, {d}, {c}}), O({B, {d}, {w}, {c}}));
    for (int i = 0; i < q / 3; ++i) family(O({B, {w}, Ap, {d}}), O({B, {d}, Ap, {w}}));
  }

  long long copies = t + static_cast<long long>(p2.size()) + 1;
  LinearOrder v5 = O({V, {c}, {w}});
  std::vector<LinearOrder> lift;
  for (int i = 1; i <= q + 2; ++i)
    for (int j = 1; j <= l - q - 2; ++j) lift.push_back(apply(mv, apply(mo, v5, j), i));
  for (long long rep = 0; rep < copies; ++rep) p2.insert(p2.end(), lift.begin(), lift.end());

  // Recount the score conditions on the reference extension.
  std::vector<int> s = rule.scoring_vector(m);
  std::vector<LinearOrder> all = ref;
  all.insert(all.end(), p2.begin(), p2.end());
  std::vector<long long> sc = positional_scores(s, linear(m, all));
  long long want_cv = kind == QueryKind::kPW ? 2 * k1 : k1;
  long long want_wc = (q / 3) * (3 * k1 + k2) - (kind == QueryKind::kPW ? k2 : 0);
  for (int v : V)
    if (sc[c] - sc[v] != want_cv) throw Error("scoring construction: c - v recount failed");
  if (sc[w] - sc[c] != want_wc) throw Error("scoring construction: w - c recount failed");

  add_all(out.profile, p2);
  std::vector<long long> hi, lo;
  score_bounds(out.profile, s, hi, lo);
  long long floor = lo[c];
  for (int a : join({w}, V)) floor = std::min(floor, lo[a]);
  for (int a : join({d}, A))
    if (hi[a] >= floor) throw Error("scoring construction: auxiliary alternative can catch up");

  out.p1_witness = [ref, chosen_form](const std::vector<int>& chosen) {
    std::vector<LinearOrder> v = ref;
    for (int j : chosen) v.at(j) = chosen_form.at(j);
    return v;
  };
  return out;
}

// ---------------------------------------------------------------------------
// k-approval, from 3-SAT.

ReductionOutput gen_kapproval_pw(const ThreeSatInstance& inst, int k,
                                 QueryKind kind) {
  inst.validate();
  if (k < 2) throw Error("approval construction needs k >= 2");
  if (!is_pw_side(kind)) throw Error("approval construction answers pw or pcw");
  int q = inst.q, t = inst.t();
  if (q + t < k) throw TooFewClauses("need variables + clauses >= k");
  for (const auto& cl : inst.clauses)
    for (int a = 0; a < 3; ++a)
      for (int b = a + 1; b < 3; ++b)
        if (cl[a].var == cl[b].var) throw InvalidInstance("clause repeats a variable");

  Roster r;
  int c = r.add("c", "c");
  r.add_many("cl", t, "clauses");
  std::vector<int> x(q), nx(q);
  r.roles["literals"];
  for (int i = 0; i < q; ++i) x[i] = r.add("x" + std::to_string(i + 1), "literals");
  for (int i = 0; i < q; ++i) nx[i] = r.add("nx" + std::to_string(i + 1), "literals");
  // Per variable and clause index: copies and their hatted partners, plus
  // the auxiliary alternatives, for both signs.
  auto grid = [&](const std::string& prefix, const std::string& role) {
    std::vector<std::vector<int>> g(q, std::vector<int>(t));
    for (int i = 0; i < q; ++i)
      for (int j = 0; j < t; ++j)
        g[i][j] = r.add(prefix + std::to_string(i + 1) + "_" + std::to_string(j + 1), role);
    return g;
  };
  r.roles["copies"];
  r.roles["auxiliary"];
  auto xc = grid("x", "copies"), xh = grid("xh", "copies");
  auto nxc = grid("nx", "copies"), nxh = grid("nxh", "copies");
  auto dp = grid("d", "auxiliary"), dn = grid("nd", "auxiliary");

  int K = q + t - (kind == QueryKind::kPW ? 2 : 1);
  std::vector<int> L;
  for (int i = 0; i < q; ++i) {
    L.push_back(x[i]);
    L.push_back(nx[i]);
    for (int j = 0; j < t; ++j) {
      L.push_back(xc[i][j]);
      L.push_back(nxc[i][j]);
      L.push_back(xh[i][j]);
      L.push_back(nxh[i][j]);
    }
  }
  int p1_count = q + 2 * q * t + t;
  long long p2_count = static_cast<long long>(K) * sz(L) / 2;
  long long pad = (p1_count + p2_count) * (k - 2);
  std::vector<int> G = r.add_many("g", static_cast<int>(pad), "padding");
  int m = r.m();
  // Captured by value: the witness map outlives this frame.
  auto tops = [G, k](int ballot) {
    return std::vector<int>(G.begin() + static_cast<long long>(ballot) * (k - 2),
                            G.begin() + static_cast<long long>(ballot + 1) * (k - 2));
  };

  ReductionOutput out = start("approval-3sat", r, p1_count, 4);
  out.rule = RuleSpec::approval(k);
  out.candidate = c;
  out.query = kind;

  // Chain ballots: the head pair above the tail pair, relations between the
  // pairs removed.
  struct Chain {
    int h1, h2, t1, t2;
    bool positive;
    int var;
  };
  std::vector<Chain> chains;
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < t; ++j) {
      chains.push_back({j == 0 ? x[i] : xh[i][j - 1], dp[i][j], xc[i][j], xh[i][j], true, i});
      chains.push_back({j == 0 ? nx[i] : nxh[i][j - 1], dn[i][j], nxc[i][j], nxh[i][j], false, i});
    }
  auto lit_alt = [xc, nxc](int j, const Literal& lit) {
    return lit.positive ? xc[lit.var][j] : nxc[lit.var][j];
  };

  int ballot = 0;
  for (int i = 0; i < q; ++i, ++ballot)
    out.profile.add(loosen(ordered(m, {tops(ballot), {c}, {x[i]}, {nx[i]}}), {{{x[i]}, {nx[i]}}}));
  for (const Chain& ch : chains) {
    std::vector<int> head = {ch.h1, ch.h2}, tail = {ch.t1, ch.t2};
    out.profile.add(loosen(ordered(m, {tops(ballot), {ch.h1}, {ch.h2}, {ch.t1}, {ch.t2}}), {{head, tail}}));
    ++ballot;
  }
  for (int j = 0; j < t; ++j, ++ballot) {
    std::vector<int> f;
    for (const Literal& lit : inst.clauses[j]) f.push_back(lit_alt(j, lit));
    out.profile.add(loosen(ordered(m, {tops(ballot), {c}, {f[0]}, {f[1]}, {f[2]}}), {{f, f}}));
  }
  for (int rep = 0; rep < K; ++rep)
    for (size_t i = 0; i < L.size(); i += 2, ++ballot)
      out.profile.add(ordered(m, {tops(ballot), {L[i]}, {L[i + 1]}}));

  out.p1_witness = [=](const std::vector<int>& value) {
    if (sz(value) != q) throw Error("assignment size differs from variable count");
    std::vector<LinearOrder> v;
    int b = 0;
    for (int i = 0; i < q; ++i, ++b) {
      auto mid = value[i] ? std::vector<std::vector<int>>{{c}, {nx[i]}, {x[i]}}
                          : std::vector<std::vector<int>>{{c}, {x[i]}, {nx[i]}};
      mid.insert(mid.begin(), tops(b));
      v.push_back(ordered(m, mid));
    }
    for (const Chain& ch : chains) {
      // A true variable keeps the positive heads on top and lifts the
      // negative tails; a false one the other way round.
      bool keep = ch.positive == static_cast<bool>(value[ch.var]);
      if (keep)
        v.push_back(ordered(m, {tops(b), {ch.h1}, {ch.h2}, {ch.t1}, {ch.t2}}));
      else
        v.push_back(ordered(m, {tops(b), {ch.t1}, {ch.t2}, {ch.h1}, {ch.h2}}));
      ++b;
    }
    for (int j = 0; j < t; ++j, ++b) {
      std::vector<int> f;
      int pick = 0;
      for (int a = 0; a < 3; ++a) {
        const Literal& lit = inst.clauses[j][a];
        f.push_back(lit_alt(j, lit));
        if (static_cast<bool>(value[lit.var]) == lit.positive && pick == 0) pick = a + 1;
      }
      if (pick > 1) std::swap(f[0], f[pick - 1]);
      v.push_back(ordered(m, {tops(b), {c}, {f[0]}, {f[1]}, {f[2]}}));
    }
    return v;
  };
  return out;
}

// ---------------------------------------------------------------------------
// Copeland.

ReductionOutput gen_copeland(const X3CInstance& inst, QueryKind kind) {
  require_div3(inst);
  X3CInstance x = normalize_x3c(inst);
  if (x.q < 9) {
    // The score-adjusting families need q / 3 >= 2; two disjoint dummy sets
    // raise q without changing solvability.
    int base = x.q;
    x.q += 6;
    x.sets.push_back({base, base + 1, base + 2});
    x.sets.push_back({base + 3, base + 4, base + 5});
    x = normalize_x3c(x);
  }
  int q = x.q, t = x.t();
  bool unique_side = kind == QueryKind::kPW || kind == QueryKind::kNcW;

  Roster r;
  int c = r.add("c", "c"), w = r.add("w", "w"), d = r.add("d", "d");
  std::vector<int> V = r.add_many("v", q, "elements");
  std::vector<int> A = r.add_many("a", unique_side ? t - 2 : t - 1, "filler");
  std::vector<int> B = r.add_many("b", 7 * t, "cycle");
  int m = r.m();
  auto MB = [&](int i) {
    std::vector<int> out;
    for (int p = 0; p < 7 * t; ++p) out.push_back(B[(p + i) % (7 * t)]);
    return out;
  };

  ReductionOutput out = start("copeland-x3c", r, t, 8);
  out.rule = RuleSpec::of(RuleKind::kCopeland);
  out.query = kind;
  out.candidate = is_pw_side(kind) ? c : w;
  out.yes_when_solvable = is_pw_side(kind);
  out.x3c = x;

  std::vector<LinearOrder> ref, chosen_form;
  for (int i = 1; i <= t; ++i) {
    std::vector<int> S = set_alts(x, i - 1, V), rest = without(V, S);
    LinearOrder v = ordered(m, {rest, {d}, S, {w}, {c}, MB(i), A});
    out.profile.add(loosen(v, {{join({d}, S), {w, c}}}));
    ref.push_back(v);
    chosen_form.push_back(ordered(m, {rest, {w}, {c}, {d}, S, MB(i), A}));
  }
  auto range = [&](int from, int to, const std::function<LinearOrder(int)>& make) {
    for (int i = from; i <= to; ++i) out.profile.add(make(i));
  };
  int q3 = q / 3;
  auto wcd = [&](int i) { return ordered(m, {{w}, {c}, {d}, V, MB(i), A}); };
  range(t + 1, 2 * t - 2 * q3 + 1, wcd);
  range(2 * t - 2 * q3 + 2, 2 * t - q3 - 1, wcd);
  range(2 * t - q3, 2 * t - 3, [&](int i) { return ordered(m, {{w}, {d}, {c}, V, MB(i), A}); });
  range(2 * t - 2, 2 * t - 1, [&](int i) { return ordered(m, {{c}, {w}, {d}, V, MB(i), A}); });
  range(2 * t, 2 * t + 1, [&](int i) { return ordered(m, {{d}, {c}, V, {w}, MB(i), A}); });
  range(2 * t + 2, (9 * t + 1) / 2, [&](int i) { return ordered(m, {{w}, A, {c}, MB(i), V, {d}}); });
  range((9 * t + 3) / 2, 7 * t, [&](int i) { return ordered(m, {MB(i), V, {w}, {d}, A, {c}}); });

  out.p1_witness = [ref, chosen_form](const std::vector<int>& chosen) {
    std::vector<LinearOrder> v = ref;
    for (int j : chosen) v.at(j) = chosen_form.at(j);
    return v;
  };
  return out;
}

// ---------------------------------------------------------------------------
// Bucklin.

ReductionOutput gen_bucklin(const X3CInstance& inst, QueryKind kind) {
  require_div3(inst);
  if (!is_pw_side(kind)) throw Error("Bucklin construction answers pw or pcw");
  int q = inst.q, t = inst.t();
  if (q < 3) throw InvalidInstance("Bucklin construction needs q >= 3");

  Roster r;
  int c = r.add("c", "c"), w = r.add("w", "w");
  std::vector<int> W = r.add_many("w", q + 1, "blockers");
  std::vector<int> D = r.add_many("d", q + 1, "filler");
  std::vector<int> V = r.add_many("v", q, "elements");
  int m = r.m();
  std::vector<int> low(W.begin() + (q - 3), W.end());  // w_{q-2} .. w_{q+1}
  std::vector<int> high(W.begin(), W.begin() + (q - 3));

  ReductionOutput out = start("bucklin-x3c", r, t, 16);
  out.rule = RuleSpec::of(RuleKind::kBucklin);
  out.candidate = c;
  out.query = kind;
  out.x3c = inst;

  // w is not listed in the ballots; it goes last.
  std::vector<LinearOrder> ref, chosen_form;
  for (int i = 0; i < t; ++i) {
    std::vector<int> S = set_alts(inst, i, V), rest = without(V, S);
    LinearOrder v = ordered(m, {W, S, {c}, rest, D, {w}});
    out.profile.add(loosen(v, {{low, join(S, {c})}}));
    ref.push_back(v);
    chosen_form.push_back(ordered(m, {high, S, {c}, low, rest, D, {w}}));
  }
  // One c > Others vote replaces a D vote: otherwise c reaches the top q + 1
  // in only t + q/3 of the 2t + 2q/3 + 1 votes, short of a majority.
  for (int i = 0; i < t; ++i) out.profile.add(ordered(m, {V, {c}}));
  for (int i = 0; i < q / 3 - 1; ++i) out.profile.add(ordered(m, {V, {w}, {c}}));
  out.profile.add(ordered(m, {{c}}));
  std::vector<int> dq(D.begin(), D.begin() + q);
  for (int i = 0; i < q / 3 + 1; ++i) {
    if (kind == QueryKind::kPcW)
      out.profile.add(ordered(m, {dq, {W[0]}}));
    else
      out.profile.add(ordered(m, {D, {W[0]}}));
  }

  out.p1_witness = [ref, chosen_form](const std::vector<int>& chosen) {
    std::vector<LinearOrder> v = ref;
    for (int j : chosen) v.at(j) = chosen_form.at(j);
    return v;
  };
  return out;
}

// ---------------------------------------------------------------------------
// Maximin.

ReductionOutput gen_maximin(const X3CInstance& source, QueryKind kind) {
  require_div3(source);
  if (!is_pw_side(kind)) throw Error("maximin construction answers pw or pcw");
  // Unlisted differences are 0 or +-1. With t < 4 they reach the -t + 2 level
  // that decides c's score against a once-covered element, so pad with copies
  // of the first set.
  X3CInstance inst = source;
  if (inst.sets.empty()) throw InvalidInstance("no set to copy");
  while (inst.t() < 4) inst.sets.push_back(inst.sets.front());
  int q = inst.q, t = inst.t();
  if (q < 3) throw InvalidInstance("maximin construction needs q >= 3");

  Roster r;
  int c = r.add("c", "c"), w = r.add("w", "w"), wp = r.add("wp", "w'");
  std::vector<int> V = r.add_many("v", q, "elements");
  int m = r.m();

  ReductionOutput out = start("maximin-x3c", r, t, 4);
  out.rule = RuleSpec::of(RuleKind::kMaximin);
  out.candidate = c;
  out.query = kind;
  out.x3c = inst;

  std::vector<LinearOrder> ref, chosen_form;
  for (int i = 0; i < t; ++i) {
    std::vector<int> S = set_alts(inst, i, V), rest = without(V, S);
    LinearOrder v = ordered(m, {{w}, S, {c}, rest, {wp}});
    out.profile.add(loosen(v, {{{w}, join(S, {c})}}));
    ref.push_back(v);
    chosen_form.push_back(ordered(m, {S, {c}, {w}, rest, {wp}}));
  }
  DiffSpec F(m);
  F.set(w, c, t + 2 * q / 3 - 2);
  for (int v : V) F.set(w, v, kind == QueryKind::kPW ? t + 2 : t);
  F.set(wp, w, t + 4);
  F.set(V[0], wp, t + 4);
  F.set(wp, c, t - 2);
  add_all(out.profile, synthesize_diffs(linear(m, ref), F.finish(t)).votes);

  out.p1_witness = [ref, chosen_form](const std::vector<int>& chosen) {
    std::vector<LinearOrder> v = ref;
    for (int j : chosen) v.at(j) = chosen_form.at(j);
    return v;
  };
  return out;
}

// ---------------------------------------------------------------------------
// Ranked pairs.

ReductionOutput gen_ranked_pairs(const X3CInstance& source, QueryKind kind) {
  require_div3(source);
  // An even t lets every unlisted difference be 0 instead of +-1, which keeps
  // tie groups small. Copies of the first set preserve solvability.
  X3CInstance inst = source;
  if (inst.sets.empty()) throw InvalidInstance("no set to copy");
  while (inst.t() % 2 != 0) inst.sets.push_back(inst.sets.front());
  int q = inst.q, t = inst.t();
  bool unique_side = kind == QueryKind::kPW || kind == QueryKind::kNcW;

  Roster r;
  int c = r.add("c", "c"), a = r.add("a", "a"), b = r.add("b", "b"), w = r.add("w", "w");
  std::vector<int> V = r.add_many("v", q, "elements");
  int m = r.m();

  ReductionOutput out = start("ranked-pairs-x3c", r, t, 8);
  out.rule = RuleSpec::of(RuleKind::kRankedPairs);
  out.query = kind;
  out.candidate = is_pw_side(kind) ? c : w;
  out.yes_when_solvable = is_pw_side(kind);
  out.x3c = inst;

  std::vector<LinearOrder> ref, chosen_form;
  for (int i = 0; i < t; ++i) {
    std::vector<int> S = set_alts(inst, i, V);
    LinearOrder v = ordered(m, {{a}, {c}, S, {b}});
    out.profile.add(loosen(v, {{{a, c}, join(S, {b})}}));
    ref.push_back(v);
    chosen_form.push_back(ordered(m, {S, {b}, {a}, {c}}));
  }
  int q23 = 2 * q / 3;
  DiffSpec F(m);
  // c vs b is free in every encoding ballot, so D(c, b) can lose 2t. At
  // 3t + 2q/3 it would then tie D(a, c), and after q/3 overlapping b > a
  // flips the b > a > c > b cycle could break at c > b, letting b co-win with
  // no cover. 5t + 2q/3 + 2 keeps it above every other adjustable difference.
  F.set(c, b, 5 * t + q23 + 2);
  F.set(w, a, 3 * t + q23);
  for (int v : V) F.set(w, v, 3 * t + q23);
  F.set(a, c, t + q23);
  F.set(c, w, t + q23 - 2);
  for (int v : V) F.set(v, c, t + q23 - (unique_side ? 6 : 4));
  F.set(b, a, unique_side ? t + 2 : t);
  add_all(out.profile, synthesize_diffs(linear(m, ref), F.finish(t)).votes);

  out.p1_witness = [ref, chosen_form](const std::vector<int>& chosen) {
    std::vector<LinearOrder> v = ref;
    for (int j : chosen) v.at(j) = chosen_form.at(j);
    return v;
  };
  return out;
}

// ---------------------------------------------------------------------------
// Voting trees.

std::vector<std::pair<int, int>> sibling_leaf_pairs(const TreeShape& t, int node) {
  std::vector<std::pair<int, int>> out;
  std::function<void(int)> walk = [&](int n) {
    const auto& nd = t.nodes.at(n);
    if (nd.leaf >= 0) return;
    const auto& l = t.nodes.at(nd.left);
    const auto& r = t.nodes.at(nd.right);
    if (l.leaf >= 0 && r.leaf >= 0) {
      out.emplace_back(nd.left, nd.right);
      return;
    }
    walk(nd.left);
    walk(nd.right);
  };
  walk(node);
  return out;
}

TreeShape well_spread_balanced(int pairs) {
  int leaves = 1;
  while (leaves < 2 * pairs) leaves *= 2;
  return TreeShape::balanced(std::max(leaves, 2));
}

ReductionOutput gen_voting_tree(const X3CInstance& inst, QueryKind kind,
                                const std::optional<TreeShape>& shape) {
  require_div3(inst);
  int q = inst.q, t = inst.t();
  TreeShape tree = shape ? *shape : well_spread_balanced(2 * (q + 1));
  int m = static_cast<int>(tree.leaves().size());
  if (m < 2 * q + 3) throw TreeNotWellSpread("tree has fewer than 2q + 3 leaves");
  const auto& root = tree.nodes.at(tree.root);
  if (root.leaf >= 0) throw TreeNotWellSpread("tree is a single leaf");
  int rich = -1, other = -1;
  for (auto [x, y] : {std::pair{root.left, root.right}, std::pair{root.right, root.left}})
    if (rich < 0 && static_cast<int>(sibling_leaf_pairs(tree, x).size()) >= q + 1)
      rich = x, other = y;
  if (rich < 0)
    throw TreeNotWellSpread("no child of the root holds q + 1 sibling leaf pairs");

  Roster r;
  int c = r.add("c", "c"), d = r.add("d", "d"), w = r.add("w", "w");
  std::vector<int> V = r.add_many("v", q, "elements");
  std::vector<int> A = r.add_many("a", q, "partners");
  std::vector<int> E = r.add_many("e", m - 2 * q - 3, "filler");

  // Place c, d and the (v_i, a_i) pairs on sibling leaves of the rich side,
  // w on the first leaf of the other side, filler everywhere else.
  std::vector<int> assign(tree.nodes.size(), -1);
  auto pairs = sibling_leaf_pairs(tree, rich);
  assign[pairs[0].first] = c;
  assign[pairs[0].second] = d;
  for (int i = 0; i < q; ++i) {
    assign[pairs[i + 1].first] = V[i];
    assign[pairs[i + 1].second] = A[i];
  }
  std::vector<int> order;
  std::function<void(int)> leaves_of = [&](int n) {
    const auto& nd = tree.nodes[n];
    if (nd.leaf >= 0) {
      order.push_back(n);
      return;
    }
    leaves_of(nd.left);
    leaves_of(nd.right);
  };
  leaves_of(other);
  assign[order.front()] = w;
  order.clear();
  leaves_of(tree.root);
  size_t next_e = 0;
  for (int n : order)
    if (assign[n] < 0) assign[n] = E.at(next_e++);
  for (int n : order) tree.nodes[n].leaf = assign[n];

  ReductionOutput out = start("voting-tree-x3c", r, t, 16);
  out.rule = RuleSpec::voting_tree(tree);
  out.query = kind;
  out.candidate = is_pw_side(kind) ? c : w;
  out.yes_when_solvable = is_pw_side(kind);
  out.x3c = inst;

  std::vector<LinearOrder> ref, chosen_form;
  for (int i = 0; i < t; ++i) {
    std::vector<int> S = set_alts(inst, i, V), Ai = set_alts(inst, i, A);
    LinearOrder v = ordered(m, {{d}, Ai, S, {c}});
    out.profile.add(loosen(v, {{join({d}, Ai), join(S, {c})}}));
    ref.push_back(v);
    chosen_form.push_back(ordered(m, {S, {c}, {d}, Ai}));
  }
  int big = 2 * q + 1;
  DiffSpec F(m);
  F.set(c, d, -2 * q / 3 + 1);
  F.set(c, w, big);
  for (int i = 0; i < q; ++i) {
    F.set(A[i], V[i], 3);
    F.set(V[i], c, big);
    F.set(c, A[i], big);
    for (int j = 0; j < q; ++j)
      if (j != i) F.set(V[i], A[j], big);
  }
  for (int x = 0; x < m; ++x)
    if (x != c && x != w) F.set(w, x, big);
  for (int x = 0; x < m; ++x) {
    if (std::find(E.begin(), E.end(), x) != E.end()) continue;
    for (int e : E)
      if (x != w) F.set(x, e, big);
  }
  add_all(out.profile, synthesize_diffs(linear(m, ref), F.finish(1)).votes);

  out.p1_witness = [ref, chosen_form](const std::vector<int>& chosen) {
    std::vector<LinearOrder> v = ref;
    for (int j : chosen) v.at(j) = chosen_form.at(j);
    return v;
  };
  return out;
}

// ---------------------------------------------------------------------------
// Plurality with runoff.

namespace {

// Everything except the filler alternatives, which are appended last.
struct RunoffCore {
  X3CInstance inst;  // after padding
  Roster roster;
  std::string tag;
  int candidate = 0;
  std::vector<LinearOrder> p1;  // over the core alternatives
  std::vector<std::vector<Removal>> removals;
  std::vector<int> free_alt;  // unordered against filler too, or -1
  std::vector<LinearOrder> fixed;
  LinearProfile adjust;  // one filler alternative goes on top of each
  long long full_filler = 0;
  std::function<std::vector<LinearOrder>(const std::vector<int>&)> witness;
};

long long capped_pow(long long b, int e) {
  long long r = 1;
  for (int i = 0; i < e; ++i) r = r > (1LL << 50) / std::max(b, 1LL) ? (1LL << 50) : r * b;
  return r;
}

RunoffCore runoff_core(const X3CInstance& source, QueryKind kind) {
  require_div3(source);
  X3CInstance inst = source;
  if (kind == QueryKind::kNcW) {
    // Elements top t fixed votes and filler tops one; at t = 1 the filler
    // would tie them for second place and c would beat it in the runoff.
    if (inst.sets.empty()) throw InvalidInstance("no set to copy");
    while (inst.t() < 2) inst.sets.push_back(inst.sets.front());
  }
  int q = inst.q, t = inst.t();
  RunoffCore rc;
  rc.inst = inst;
  Roster& r = rc.roster;
  if (kind == QueryKind::kNcW) {
    int c = r.add("c", "c"), d = r.add("d", "d");
    std::vector<int> V = r.add_many("v", q, "elements");
    int m = r.m();
    rc.tag = "runoff-ncw-x3c";
    rc.candidate = c;
    std::vector<LinearOrder> chosen_form;
    for (int j = 0; j < t; ++j) {
      std::vector<int> S = set_alts(inst, j, V);
      rc.p1.push_back(ordered(m, {{d}, S, {c}}));
      rc.removals.push_back({{join({d}, S), {c}}});
      rc.free_alt.push_back(-1);
      chosen_form.push_back(ordered(m, {{c}, {d}, S}));
    }
    for (int i = 0; i < t + 1; ++i) rc.fixed.push_back(ordered(m, {{c}}));
    for (int i = 0; i < q / 3 - 1; ++i) rc.fixed.push_back(ordered(m, {{d}}));
    for (int v : V)
      for (int i = 0; i < t; ++i) rc.fixed.push_back(ordered(m, {{v}}));
    std::vector<LinearOrder> base = rc.p1;
    base.insert(base.end(), rc.fixed.begin(), rc.fixed.end());
    std::vector<std::tuple<int, int, int>> targets = {{c, d, 2 * t + 1}};
    for (int v : V) targets.emplace_back(v, c, 3);
    rc.adjust = adjust_listed(linear(m, base), targets);
    rc.full_filler = t * capped_pow(q + 2, 3);
    std::vector<LinearOrder> ref = rc.p1;
    rc.witness = [ref, chosen_form](const std::vector<int>& chosen) {
      std::vector<LinearOrder> v = ref;
      for (int j : chosen) v.at(j) = chosen_form.at(j);
      return v;
    };
    return rc;
  }
  if (kind != QueryKind::kPW) throw Error("runoff construction answers pw or ncw");

  int c = r.add("c", "c"), d = r.add("d", "d"), e = r.add("e", "e");
  std::vector<int> SV = r.add_many("s", t, "sets");
  int m = r.m();
  rc.tag = "runoff-pw-x3c";
  rc.candidate = c;
  for (int i = 0; i < q; ++i) {
    std::vector<int> T;
    for (int j = 0; j < t; ++j)
      if (std::find(inst.sets[j].begin(), inst.sets[j].end(), i) != inst.sets[j].end())
        T.push_back(SV[j]);
    rc.p1.push_back(ordered(m, {{d}, SV, {c}}));
    rc.removals.push_back({{join({d}, SV), T}});
    rc.free_alt.push_back(-1);
  }
  std::vector<int> everyone(m);
  std::iota(everyone.begin(), everyone.end(), 0);
  for (int j = 0; j < t; ++j)
    for (int copy = 0; copy < 2; ++copy) {
      rc.p1.push_back(ordered(m, {{d}, {e}, {c}}));
      rc.removals.push_back({{{d}, {e}}, {everyone, {SV[j]}}});
      rc.free_alt.push_back(SV[j]);
    }
  for (int i = 0; i < q + 4; ++i) rc.fixed.push_back(ordered(m, {{c}}));
  for (int i = 0; i < q + 2; ++i) rc.fixed.push_back(ordered(m, {{d}}));
  for (int i = 0; i < q / 3 + 2; ++i) rc.fixed.push_back(ordered(m, {{e}}));
  for (int s : SV)
    for (int i = 0; i < q; ++i) rc.fixed.push_back(ordered(m, {{s}}));
  std::vector<LinearOrder> base;
  for (int i = 0; i < q; ++i) base.push_back(ordered(m, {{d}, SV, {c}}));
  for (int i = 0; i < 2 * t; ++i) base.push_back(ordered(m, {{d}, {e}, {c}}));
  base.insert(base.end(), rc.fixed.begin(), rc.fixed.end());
  std::vector<std::tuple<int, int, int>> targets = {{d, c, 1}, {e, c, 1}};
  for (int s : SV) targets.emplace_back(c, s, 1);
  rc.adjust = adjust_listed(linear(m, base), targets);
  rc.full_filler = capped_pow(q + 4, 2) * capped_pow(t + 4, 4);
  rc.witness = [=](const std::vector<int>& chosen) {
    std::vector<LinearOrder> v;
    std::vector<int> owner(q, -1);
    for (int j : chosen)
      for (int el : inst.sets.at(j)) owner[el] = j;
    for (int i = 0; i < q; ++i) {
      if (owner[i] < 0) throw Error("certificate does not cover every element");
      int s = SV[owner[i]];
      v.push_back(ordered(m, {{s}, {d}, without(SV, {s}), {c}}));
    }
    for (int j = 0; j < t; ++j) {
      bool in = std::find(chosen.begin(), chosen.end(), j) != chosen.end();
      for (int copy = 0; copy < 2; ++copy)
        v.push_back(in ? ordered(m, {{e}, {d}, {c}}) : ordered(m, {{SV[j]}, {d}, {e}, {c}}));
    }
    return v;
  };
  return rc;
}

long long filler_count(const RunoffCore& rc, const RunoffOptions& opt) {
  long long need = rc.adjust.n();
  if (!opt.full_filler) return need;
  if (rc.full_filler < need) throw Error("filler set smaller than the adjusting profile");
  return rc.full_filler;
}

}  // namespace

RunoffShape runoff_shape(const X3CInstance& inst, QueryKind kind,
                         const RunoffOptions& opt) {
  RunoffCore rc = runoff_core(inst, kind);
  RunoffShape s;
  s.filler = filler_count(rc, opt);
  s.alternatives = rc.roster.m() + s.filler;
  for (size_t j = 0; j < rc.p1.size(); ++j) {
    long long u = loosen(rc.p1[j], rc.removals[j]).undetermined_pairs();
    if (rc.free_alt[j] >= 0) u += s.filler;
    s.p1_undetermined.push_back(u);
  }
  return s;
}

ReductionOutput gen_runoff(const X3CInstance& inst, QueryKind kind,
                           const RunoffOptions& opt) {
  RunoffCore rc = runoff_core(inst, kind);
  long long filler = filler_count(rc, opt);
  int core = rc.roster.m();
  if (core + filler > opt.max_alternatives)
    throw MaterializationTooLarge(std::to_string(core + filler) +
                                  " alternatives exceed the cap of " +
                                  std::to_string(opt.max_alternatives));
  Roster r = rc.roster;
  std::vector<int> E = r.add_many("f", static_cast<int>(filler), "filler");
  int m = r.m();
  auto widen = [m](const LinearOrder& v) { return ordered(m, {v.ranking}); };

  ReductionOutput out = start(rc.tag, r, static_cast<int>(rc.p1.size()),
                              kind == QueryKind::kNcW ? 4 : -1);
  out.rule = RuleSpec::of(RuleKind::kPluralityRunoff);
  out.candidate = rc.candidate;
  out.query = kind;
  out.yes_when_solvable = kind == QueryKind::kPW;
  out.x3c = rc.inst;
  for (size_t j = 0; j < rc.p1.size(); ++j) {
    std::vector<Removal> rm = rc.removals[j];
    if (rc.free_alt[j] >= 0) rm.push_back({E, {rc.free_alt[j]}});
    out.profile.add(loosen(widen(rc.p1[j]), rm));
  }
  for (const auto& v : rc.fixed) out.profile.add(widen(v));
  for (int i = 0; i < rc.adjust.n(); ++i)
    out.profile.add(ordered(m, {{E[i]}, rc.adjust.votes[i].ranking}));

  auto core_witness = rc.witness;
  out.p1_witness = [core_witness, widen](const std::vector<int>& chosen) {
    std::vector<LinearOrder> v;
    for (const auto& o : core_witness(chosen)) v.push_back(widen(o));
    return v;
  };
  return out;
}

std::vector<std::string> construction_names() {
  return {"scoring", "approval", "copeland", "bucklin", "maximin",
          "ranked-pairs", "voting-tree", "runoff"};
}

}  // namespace ppw
