#include "ppw/oracle.h"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <memory>
#include <unordered_set>
#include <utility>

#include "ppw/errors.h"

namespace ppw {

std::string query_name(QueryKind k) {
  switch (k) {
    case QueryKind::kPW: return "PW";
    case QueryKind::kNW: return "NW";
    case QueryKind::kPcW: return "PcW";
    case QueryKind::kNcW: return "NcW";
  }
  return "?";
}

QueryKind parse_query(const std::string& s) {
  std::string l;
  for (char ch : s) l += static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  if (l == "pw") return QueryKind::kPW;
  if (l == "nw") return QueryKind::kNW;
  if (l == "pcw") return QueryKind::kPcW;
  if (l == "ncw") return QueryKind::kNcW;
  throw ParseError("unknown query kind '" + s + "'");
}

namespace {

struct Outcome {
  bool co = false;
  bool unique = false;
};

Outcome outcome_of(const WinnerSet& w, int c) {
  bool in = contains(w, c);
  return {in, in && w.size() == 1};
}

bool is_target(QueryKind kind, const Outcome& o) {
  switch (kind) {
    case QueryKind::kPW: return o.unique;
    case QueryKind::kPcW: return o.co;
    case QueryKind::kNW: return !o.unique;
    case QueryKind::kNcW: return !o.co;
  }
  return false;
}

bool existential(QueryKind kind) {
  return kind == QueryKind::kPW || kind == QueryKind::kPcW;
}

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > kUnlimited / a) return kUnlimited;
  return a * b;
}

void check_inputs(const PosetProfile& p, int c) {
  if (c < 0 || c >= p.m()) throw Error("candidate out of range");
}

// Pair markers for sign-only statistics. Raw counts never come close.
constexpr int kWon = 1 << 28;
constexpr int kTie = 1 << 26;
constexpr int kNegInf = -(1 << 30);

using Sparse = std::vector<std::pair<int, int>>;

struct Option {
  Sparse delta;
  LinearOrder rep;
};

struct VecHash {
  size_t operator()(const std::vector<int>& v) const {
    std::uint64_t h = 1469598103934665603ull;
    for (int x : v) {
      h ^= static_cast<std::uint32_t>(x);
      h *= 1099511628211ull;
    }
    return static_cast<size_t>(h ^ (h >> 29));
  }
};

// Profile reduced to the levels that can change a statistic. Fixed ballots
// are added into `init`; every level keeps one option per distinct delta.
struct Model {
  int dims = 0;   // statistic coordinates
  int extra = 0;  // rule slots after the statistic, always keyed
  std::vector<int> init;
  std::vector<std::vector<Option>> levels;
  std::vector<int> level_ballot;
  std::vector<LinearOrder> reps;
  std::vector<int> first_var;  // first level that varies the coordinate, -1 if none
  std::vector<int> fin;        // depth after which the coordinate never varies
  std::vector<std::vector<int>> rem;  // rem[j][k]: swing left from depth j
  std::vector<int> zero_from;         // coordinate is canonical from this depth
  std::function<void(std::vector<int>&, int)> fold = [](std::vector<int>&, int) {};
  std::function<Outcome(const std::vector<int>&)> eval;
  // True when no completion from depth j can reach the query's target.
  std::function<bool(QueryKind, const std::vector<int>&, int)> prune;

  int depth() const { return static_cast<int>(levels.size()); }
};

using StatFn = std::function<void(const LinearOrder&, Sparse&)>;

Model build_model(const PosetProfile& p, int dims, const StatFn& stat,
                  std::uint64_t ext_cap, std::uint64_t& combos) {
  Model md;
  combos = 1;
  md.init.assign(dims, 0);
  for (int j = 0; j < p.n(); ++j) {
    std::map<Sparse, LinearOrder> distinct;
    Sparse d;
    std::uint64_t count = for_each_linear_extension(
        p.ballot(j),
        [&](const LinearOrder& v) {
          d.clear();
          stat(v, d);
          std::sort(d.begin(), d.end());
          distinct.try_emplace(d, v);
          return true;
        },
        ext_cap);
    combos = sat_mul(combos, count);
    md.reps.push_back(distinct.begin()->second);
    if (distinct.size() == 1) {
      for (auto [k, x] : distinct.begin()->first) md.init[k] += x;
      continue;
    }
    // Subtract the per-coordinate minimum so options only carry what differs.
    std::map<int, int> lo;
    std::map<int, int> seen_in;
    for (const auto& [delta, v] : distinct)
      for (auto [k, x] : delta) {
        auto it = lo.find(k);
        lo[k] = it == lo.end() ? x : std::min(it->second, x);
        ++seen_in[k];
      }
    for (auto& [k, x] : lo)
      if (seen_in[k] < static_cast<int>(distinct.size())) x = std::min(x, 0);
    std::vector<Option> opts;
    for (const auto& [delta, v] : distinct) {
      std::map<int, int> full;
      for (auto [k, x] : lo) full[k] = -x;
      for (auto [k, x] : delta) full[k] += x;
      Option o;
      o.rep = v;
      for (auto [k, x] : full)
        if (x != 0) o.delta.emplace_back(k, x);
      opts.push_back(std::move(o));
    }
    for (auto [k, x] : lo) md.init[k] += x;
    md.levels.push_back(std::move(opts));
    md.level_ballot.push_back(j);
  }
  md.dims = dims;
  int depth = md.depth();
  md.first_var.assign(dims, -1);
  md.fin.assign(dims, 0);
  md.rem.assign(depth + 1, std::vector<int>(dims, 0));
  for (int j = depth - 1; j >= 0; --j) {
    md.rem[j] = md.rem[j + 1];
    std::map<int, int> swing;
    for (const auto& o : md.levels[j])
      for (auto [k, x] : o.delta) swing[k] = std::max(swing[k], x);
    for (auto [k, x] : swing) {
      md.rem[j][k] += x;
      md.first_var[k] = j;
      if (md.fin[k] == 0) md.fin[k] = j + 1;
    }
  }
  md.zero_from.assign(dims, depth + 1);
  return md;
}

OracleResult search(Model& md, QueryKind kind, std::uint64_t budget) {
  OracleResult res;
  int depth = md.depth();
  int total = md.dims + md.extra;
  std::vector<std::vector<int>> key_coords(depth + 1);
  for (int j = 0; j <= depth; ++j) {
    for (int k = 0; k < md.dims; ++k)
      if (md.first_var[k] >= 0 && md.first_var[k] < j && j < md.zero_from[k])
        key_coords[j].push_back(k);
    for (int k = md.dims; k < total; ++k) key_coords[j].push_back(k);
  }
  std::vector<std::unordered_set<std::vector<int>, VecHash>> seen(depth + 1);
  std::vector<int> path(depth, 0);
  std::vector<int> key;

  std::function<bool(int, const std::vector<int>&)> dfs =
      [&](int j, const std::vector<int>& state) -> bool {
    key.clear();
    for (int k : key_coords[j]) key.push_back(state[k]);
    if (!seen[j].insert(key).second) return false;
    if (++res.nodes > budget) throw BudgetExceeded("oracle search node budget", res.nodes);
    if (j == depth) return is_target(kind, md.eval(state));
    if (md.prune && md.prune(kind, state, j)) return false;
    std::vector<int> next;
    for (size_t i = 0; i < md.levels[j].size(); ++i) {
      next = state;
      for (auto [k, x] : md.levels[j][i].delta) next[k] += x;
      md.fold(next, j + 1);
      path[j] = static_cast<int>(i);
      if (dfs(j + 1, next)) return true;
    }
    return false;
  };

  std::vector<int> start = md.init;
  md.fold(start, 0);
  bool found = dfs(0, start);
  res.answer = existential(kind) ? found : !found;
  if (found) {
    LinearProfile w{0, md.reps};
    if (!w.votes.empty()) w.m = w.votes.front().m();
    for (int j = 0; j < depth; ++j)
      w.votes[md.level_ballot[j]] = md.levels[j][path[j]].rep;
    res.witness = std::move(w);
  }
  return res;
}

// Triangular index of the unordered pair {a, b}, a < b.
struct PairIndex {
  int m;
  std::vector<int> idx;
  std::vector<std::pair<int, int>> pairs;
  explicit PairIndex(int m_) : m(m_), idx(m_ * m_, -1) {
    for (int a = 0; a < m; ++a)
      for (int b = a + 1; b < m; ++b) {
        idx[a * m + b] = static_cast<int>(pairs.size());
        pairs.emplace_back(a, b);
      }
  }
  int size() const { return static_cast<int>(pairs.size()); }
  int operator()(int a, int b) const { return idx[a * m + b]; }
};

// Coordinate offset + pair index counts votes with a above b (a < b).
void pair_stat(const LinearOrder& v, const PairIndex& pi, int offset, Sparse& out) {
  int m = v.m();
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      int x = v.ranking[i], y = v.ranking[j];
      if (x < y) out.emplace_back(offset + pi(x, y), 1);
    }
}

// Pairs whose value may need folding at depth j: those that could have
// changed since the previous depth, plus everything at depth 0.
std::vector<std::vector<int>> fold_lists(const Model& md, int offset, int count) {
  int depth = md.depth();
  std::vector<std::vector<int>> out(depth + 1);
  for (int j = 0; j <= depth; ++j)
    for (int k = offset; k < offset + count; ++k)
      if (md.fin[k] >= j && (j == 0 || (md.first_var[k] >= 0 && md.first_var[k] < j)))
        out[j].push_back(k);
  return out;
}

// Replace a pair count by a marker once its majority direction is fixed.
void settle_sign(int& v, int r, int n) {
  if (v >= kWon / 2) v = kWon;
  else if (v <= -kWon / 2) v = -kWon;
  else if (v == kTie) return;
  else if (2 * v > n) v = kWon;
  else if (2 * (v + r) < n) v = -kWon;
  else if (r == 0) v = kTie;
}

PairwiseMatrix sign_matrix(int m, const std::vector<int>& state, const PairIndex& pi,
                           int offset) {
  PairwiseMatrix pm{m, 1, std::vector<int>(m * m, 0)};
  for (int k = 0; k < pi.size(); ++k) {
    auto [a, b] = pi.pairs[k];
    int v = state[offset + k];
    if (v == kWon) pm.count[a * m + b] = 1;
    else if (v == -kWon) pm.count[b * m + a] = 1;
  }
  return pm;
}

Model positional_model(const PosetProfile& p, const RuleSpec& rule, int c,
                       std::uint64_t cap, std::uint64_t& combos) {
  int m = p.m();
  std::vector<int> s = rule.scoring_vector(m);
  Model md = build_model(
      p, m,
      [&](const LinearOrder& v, Sparse& d) {
        for (int i = 0; i < m; ++i)
          if (s[i]) d.emplace_back(v.ranking[i], s[i]);
      },
      cap, combos);
  md.extra = 1;
  md.init.push_back(kNegInf);
  for (int a = 0; a < m; ++a)
    if (a != c) md.zero_from[a] = md.fin[a];
  std::vector<int> fin = md.fin;
  md.fold = [m, c, fin](std::vector<int>& st, int j) {
    for (int a = 0; a < m; ++a)
      if (a != c && fin[a] == j) {
        st[m] = std::max(st[m], st[a]);
        st[a] = 0;
      }
  };
  md.eval = [m, c](const std::vector<int>& st) {
    return Outcome{st[c] >= st[m], st[c] > st[m]};
  };
  // Option deltas are nonnegative, so a score lies in [st[a], st[a] + rem[j][a]].
  std::vector<std::vector<int>> rem = md.rem;
  md.prune = [m, c, rem](QueryKind kind, const std::vector<int>& st, int j) {
    int rival_lo = st[m], rival_hi = st[m];
    for (int a = 0; a < m; ++a)
      if (a != c) {
        rival_lo = std::max(rival_lo, st[a]);
        rival_hi = std::max(rival_hi, st[a] + rem[j][a]);
      }
    int c_lo = st[c], c_hi = st[c] + rem[j][c];
    switch (kind) {
      case QueryKind::kPW: return rival_lo >= c_hi;
      case QueryKind::kPcW: return rival_lo > c_hi;
      case QueryKind::kNW: return rival_hi < c_lo;
      case QueryKind::kNcW: return rival_hi <= c_lo;
    }
    return false;
  };
  return md;
}

Model bucklin_model(const PosetProfile& p, int c, std::uint64_t cap,
                    std::uint64_t& combos) {
  int m = p.m(), n = p.n();
  Model md = build_model(
      p, m * m,
      [&](const LinearOrder& v, Sparse& d) {
        for (int i = 0; i < m; ++i) d.emplace_back(v.ranking[i] * m + i, 1);
      },
      cap, combos);
  md.extra = 1;
  md.init.push_back(m + 2);
  std::vector<int> alt_fin(m, 0);
  for (int a = 0; a < m; ++a)
    for (int i = 0; i < m; ++i) alt_fin[a] = std::max(alt_fin[a], md.fin[a * m + i]);
  for (int a = 0; a < m; ++a)
    if (a != c)
      for (int i = 0; i < m; ++i) md.zero_from[a * m + i] = alt_fin[a];
  auto score = [m, n](const std::vector<int>& st, int a) {
    int cum = 0;
    for (int i = 0; i < m; ++i) {
      cum += st[a * m + i];
      if (2 * cum > n) return i + 1;
    }
    return m + 1;
  };
  int slot = m * m;
  md.fold = [m, c, alt_fin, score, slot](std::vector<int>& st, int j) {
    for (int a = 0; a < m; ++a)
      if (a != c && alt_fin[a] == j) {
        st[slot] = std::min(st[slot], score(st, a));
        for (int i = 0; i < m; ++i) st[a * m + i] = 0;
      }
  };
  md.eval = [c, score, slot](const std::vector<int>& st) {
    int sc = score(st, c);
    return Outcome{sc <= st[slot], sc < st[slot]};
  };
  return md;
}

Model copeland_model(const PosetProfile& p, int c, std::uint64_t cap,
                     std::uint64_t& combos) {
  int m = p.m(), n = p.n();
  PairIndex pi(m);
  int np = pi.size();
  Model md = build_model(
      p, np, [&](const LinearOrder& v, Sparse& d) { pair_stat(v, pi, 0, d); }, cap,
      combos);
  // Slots: wins[0..m), best.
  md.extra = m + 1;
  md.init.resize(np + m + 1, 0);
  md.init[np + m] = kNegInf;
  for (int k = 0; k < np; ++k) md.zero_from[k] = md.fin[k];
  std::vector<int> alt_fin(m, 0);
  for (int k = 0; k < np; ++k) {
    auto [a, b] = pi.pairs[k];
    alt_fin[a] = std::max(alt_fin[a], md.fin[k]);
    alt_fin[b] = std::max(alt_fin[b], md.fin[k]);
  }
  auto lists = fold_lists(md, 0, np);
  auto fin = md.fin;
  auto rem = md.rem;
  auto pairs = pi.pairs;
  md.fold = [=](std::vector<int>& st, int j) {
    for (int k : lists[j]) {
      int& v = st[k];
      bool last = fin[k] == j;
      if (v >= kWon / 2) {
        v = last ? 0 : kWon;
        continue;
      }
      int r = rem[j][k];
      auto [a, b] = pairs[k];
      bool settled = true;
      if (2 * v > n) ++st[np + a];
      else if (2 * (v + r) < n) ++st[np + b];
      else settled = last;
      if (settled) v = last ? 0 : kWon;
    }
    for (int a = 0; a < m; ++a)
      if (a != c && alt_fin[a] == j) {
        st[np + m] = std::max(st[np + m], st[np + a]);
        st[np + a] = 0;
      }
  };
  md.eval = [np, m, c](const std::vector<int>& st) {
    return Outcome{st[np + c] >= st[np + m], st[np + c] > st[np + m]};
  };
  return md;
}

Model maximin_model(const PosetProfile& p, int c, std::uint64_t cap,
                    std::uint64_t& combos) {
  int m = p.m(), n = p.n();
  PairIndex pi(m);
  int np = pi.size();
  Model md = build_model(
      p, np, [&](const LinearOrder& v, Sparse& d) { pair_stat(v, pi, 0, d); }, cap,
      combos);
  // Slots: running minimum per alternative, best.
  md.extra = m + 1;
  md.init.resize(np + m + 1, n + 1);
  md.init[np + m] = kNegInf;
  for (int k = 0; k < np; ++k) md.zero_from[k] = md.fin[k];
  std::vector<int> alt_fin(m, 0);
  for (int k = 0; k < np; ++k) {
    auto [a, b] = pi.pairs[k];
    alt_fin[a] = std::max(alt_fin[a], md.fin[k]);
    alt_fin[b] = std::max(alt_fin[b], md.fin[k]);
  }
  auto fin = md.fin;
  auto pairs = pi.pairs;
  md.fold = [=](std::vector<int>& st, int j) {
    for (int k = 0; k < np; ++k)
      if (fin[k] == j) {
        auto [a, b] = pairs[k];
        st[np + a] = std::min(st[np + a], st[k]);
        st[np + b] = std::min(st[np + b], n - st[k]);
        st[k] = 0;
      }
    for (int a = 0; a < m; ++a)
      if (a != c && alt_fin[a] == j) {
        st[np + m] = std::max(st[np + m], st[np + a]);
        st[np + a] = 0;
      }
  };
  md.eval = [np, m, c](const std::vector<int>& st) {
    return Outcome{st[np + c] >= st[np + m], st[np + c] > st[np + m]};
  };
  return md;
}

Model ranked_pairs_model(const PosetProfile& p, int c, std::uint64_t cap,
                         std::uint64_t rule_budget, std::uint64_t& combos) {
  int m = p.m(), n = p.n();
  PairIndex pi(m);
  Model md = build_model(
      p, pi.size(), [&](const LinearOrder& v, Sparse& d) { pair_stat(v, pi, 0, d); },
      cap, combos);
  md.eval = [m, n, c, pi, rule_budget](const std::vector<int>& st) {
    PairwiseMatrix pm{m, n, std::vector<int>(m * m, 0)};
    for (int k = 0; k < pi.size(); ++k) {
      auto [a, b] = pi.pairs[k];
      pm.count[a * m + b] = st[k];
      pm.count[b * m + a] = n - st[k];
    }
    return outcome_of(ranked_pairs_from_matrix(pm, rule_budget), c);
  };
  return md;
}

// Pair counts at `offset` collapse to signs as soon as the sign is fixed.
void add_sign_fold(Model& md, int offset, int count, int n) {
  auto lists = fold_lists(md, offset, count);
  auto rem = md.rem;
  md.fold = [lists, rem, n](std::vector<int>& st, int j) {
    for (int k : lists[j]) settle_sign(st[k], rem[j][k], n);
  };
}

Model tree_model(const PosetProfile& p, const RuleSpec& rule, int c,
                 std::uint64_t cap, std::uint64_t& combos) {
  int m = p.m();
  PairIndex pi(m);
  TreeShape t = rule.tree_for(m);
  Model md = build_model(
      p, pi.size(), [&](const LinearOrder& v, Sparse& d) { pair_stat(v, pi, 0, d); },
      cap, combos);
  add_sign_fold(md, 0, pi.size(), p.n());
  md.eval = [m, c, pi, t](const std::vector<int>& st) {
    return outcome_of(voting_tree_from_matrix(t, sign_matrix(m, st, pi, 0)), c);
  };
  return md;
}

Model runoff_model(const PosetProfile& p, int c, std::uint64_t cap,
                   std::uint64_t& combos) {
  int m = p.m();
  PairIndex pi(m);
  Model md = build_model(
      p, m + pi.size(),
      [&](const LinearOrder& v, Sparse& d) {
        d.emplace_back(v.ranking[0], 1);
        pair_stat(v, pi, m, d);
      },
      cap, combos);
  add_sign_fold(md, m, pi.size(), p.n());
  md.eval = [m, c, pi](const std::vector<int>& st) {
    std::vector<int> tallies(st.begin(), st.begin() + m);
    return outcome_of(runoff_from(tallies, sign_matrix(m, st, pi, m)), c);
  };
  return md;
}

Model stv_model(const PosetProfile& p, int c, std::uint64_t cap,
                std::uint64_t rule_budget, std::uint64_t& combos) {
  int m = p.m();
  // Coordinates are distinct rankings; collect them on the fly, so the
  // statistic width is only known after the scan.
  auto index = std::make_shared<std::map<std::vector<int>, int>>();
  for (const auto& b : p.ballots())
    for_each_linear_extension(
        b,
        [&](const LinearOrder& v) {
          index->try_emplace(v.ranking, static_cast<int>(index->size()));
          return true;
        },
        cap);
  std::vector<std::vector<int>> rankings(index->size());
  for (const auto& [r, k] : *index) rankings[k] = r;
  Model md = build_model(
      p, static_cast<int>(index->size()),
      [&](const LinearOrder& v, Sparse& d) { d.emplace_back(index->at(v.ranking), 1); },
      cap, combos);
  md.eval = [m, c, rankings, rule_budget](const std::vector<int>& st) {
    LinearProfile lp{m, {}};
    for (size_t k = 0; k < rankings.size(); ++k)
      for (int i = 0; i < st[k]; ++i) lp.votes.push_back(LinearOrder{rankings[k]});
    return outcome_of(stv_winners(lp, rule_budget), c);
  };
  return md;
}

}  // namespace

OracleResult oracle_query(const PosetProfile& p, const RuleSpec& rule, int c,
                          QueryKind kind, const OracleOptions& opt) {
  check_inputs(p, c);
  std::uint64_t combos = 0;
  Model md;
  switch (rule.kind) {
    case RuleKind::kPositional:
      md = positional_model(p, rule, c, opt.budget, combos);
      break;
    case RuleKind::kBucklin: md = bucklin_model(p, c, opt.budget, combos); break;
    case RuleKind::kCopeland: md = copeland_model(p, c, opt.budget, combos); break;
    case RuleKind::kMaximin: md = maximin_model(p, c, opt.budget, combos); break;
    case RuleKind::kRankedPairs:
      md = ranked_pairs_model(p, c, opt.budget, opt.rule_budget, combos);
      break;
    case RuleKind::kVotingTree: md = tree_model(p, rule, c, opt.budget, combos); break;
    case RuleKind::kPluralityRunoff: md = runoff_model(p, c, opt.budget, combos); break;
    case RuleKind::kStv: md = stv_model(p, c, opt.budget, opt.rule_budget, combos); break;
  }
  OracleResult res = search(md, kind, opt.budget);
  res.combinations = combos;
  if (res.witness) res.witness->m = p.m();
  return res;
}

OracleResult oracle_query_naive(const PosetProfile& p, const RuleSpec& rule,
                                int c, QueryKind kind, const OracleOptions& opt) {
  check_inputs(p, c);
  OracleResult res;
  std::vector<std::vector<LinearOrder>> ext;
  res.combinations = 1;
  for (const auto& b : p.ballots()) {
    ext.push_back(linear_extensions(b, opt.budget));
    res.combinations = sat_mul(res.combinations, ext.back().size());
  }
  if (res.combinations > opt.budget)
    throw BudgetExceeded("oracle extension budget", res.combinations);
  LinearProfile cur{p.m(), std::vector<LinearOrder>(p.n())};
  std::function<bool(int)> go = [&](int j) -> bool {
    if (j == p.n()) {
      ++res.nodes;
      return is_target(kind, outcome_of(winners(rule, cur, opt.rule_budget), c));
    }
    for (const auto& v : ext[j]) {
      cur.votes[j] = v;
      if (go(j + 1)) return true;
    }
    return false;
  };
  bool found = go(0);
  res.answer = existential(kind) ? found : !found;
  if (found) res.witness = cur;
  return res;
}

}  // namespace ppw
