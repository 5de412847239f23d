#include "ppw/rules.h"

#include <algorithm>
#include <bit>
#include <cctype>
#include <fstream>
#include <functional>
#include <limits>
#include <map>
#include <sstream>
#include <unordered_set>

#include "ppw/errors.h"

namespace ppw {

PairwiseMatrix pairwise_matrix(const LinearProfile& p) {
  PairwiseMatrix pm{p.m, p.n(), std::vector<int>(p.m * p.m, 0)};
  for (const auto& v : p.votes)
    for (int i = 0; i < p.m; ++i)
      for (int j = i + 1; j < p.m; ++j) ++pm.count[v.ranking[i] * p.m + v.ranking[j]];
  return pm;
}

// ---------------------------------------------------------------------------
// TreeShape

std::vector<int> TreeShape::leaves() const {
  std::vector<int> out;
  std::function<void(int)> walk = [&](int id) {
    const Node& nd = nodes[id];
    if (nd.leaf >= 0) {
      out.push_back(nd.leaf);
      return;
    }
    walk(nd.left);
    walk(nd.right);
  };
  if (root >= 0) walk(root);
  return out;
}

bool TreeShape::valid_for(int m) const {
  if (root < 0) return false;
  auto l = leaves();
  if (static_cast<int>(l.size()) != m) return false;
  return LinearOrder{l}.is_permutation();
}

TreeShape TreeShape::balanced(int m, const std::vector<int>& order) {
  if (m < 1) throw Error("tree needs at least one leaf");
  std::vector<int> ord = order;
  if (ord.empty())
    for (int i = 0; i < m; ++i) ord.push_back(i);
  if (static_cast<int>(ord.size()) != m) throw LengthMismatch("leaf order size");
  int y = 0;
  while ((2 << y) <= m) ++y;  // 2^y <= m < 2^(y+1)
  int split = m - (1 << y);
  TreeShape t;
  int next_leaf = 0, slot = 0;
  std::function<int(int)> build = [&](int depth) -> int {
    int id = static_cast<int>(t.nodes.size());
    t.nodes.push_back({});
    bool internal = depth < y || (depth == y && slot < split);
    if (depth == y && internal) ++slot;
    if (!internal) {
      if (depth == y) ++slot;
      t.nodes[id].leaf = ord[next_leaf++];
      return id;
    }
    int l = build(depth + 1);
    int r = build(depth + 1);
    t.nodes[id].left = l;
    t.nodes[id].right = r;
    return id;
  };
  t.root = build(0);
  return t;
}

TreeShape TreeShape::parse(const std::string& text,
                           const std::vector<std::string>& labels) {
  std::vector<std::string> toks;
  std::string cur;
  for (char ch : text) {
    if (ch == '(' || ch == ')' || std::isspace(static_cast<unsigned char>(ch))) {
      if (!cur.empty()) toks.push_back(cur), cur.clear();
      if (ch == '(' || ch == ')') toks.emplace_back(1, ch);
    } else {
      cur += ch;
    }
  }
  if (!cur.empty()) toks.push_back(cur);
  auto resolve = [&](const std::string& s) {
    for (size_t i = 0; i < labels.size(); ++i)
      if (labels[i] == s) return static_cast<int>(i);
    if (labels.empty()) {
      try {
        if (s.size() > 1 && s[0] == 'c') return std::stoi(s.substr(1)) - 1;
        return std::stoi(s);
      } catch (const std::exception&) {
      }
    }
    throw ParseError("unknown tree leaf '" + s + "'");
  };
  TreeShape t;
  size_t pos = 0;
  std::function<int()> node = [&]() -> int {
    if (pos >= toks.size()) throw ParseError("truncated tree");
    int id = static_cast<int>(t.nodes.size());
    t.nodes.push_back({});
    if (toks[pos] == "(") {
      ++pos;
      int l = node();
      int r = node();
      if (pos >= toks.size() || toks[pos] != ")")
        throw ParseError("tree node needs exactly two children");
      ++pos;
      t.nodes[id].left = l;
      t.nodes[id].right = r;
    } else if (toks[pos] == ")") {
      throw ParseError("unexpected ')' in tree");
    } else {
      t.nodes[id].leaf = resolve(toks[pos++]);
    }
    return id;
  };
  t.root = node();
  if (pos != toks.size()) throw ParseError("trailing tokens after tree");
  std::vector<int> seen = t.leaves();
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
    throw ParseError("tree repeats a leaf");
  return t;
}

std::string TreeShape::format(const std::vector<std::string>& labels) const {
  std::function<std::string(int)> fmt = [&](int id) -> std::string {
    const Node& nd = nodes[id];
    if (nd.leaf >= 0)
      return labels.empty() ? std::to_string(nd.leaf) : labels[nd.leaf];
    return "(" + fmt(nd.left) + " " + fmt(nd.right) + ")";
  };
  return root < 0 ? "" : fmt(root);
}

// ---------------------------------------------------------------------------
// RuleSpec

RuleSpec RuleSpec::plurality() {
  RuleSpec r;
  r.family = ScoringFamily::kPlurality;
  return r;
}

RuleSpec RuleSpec::veto() {
  RuleSpec r;
  r.family = ScoringFamily::kVeto;
  return r;
}

RuleSpec RuleSpec::approval(int k) {
  if (k < 1) throw Error("k-approval needs k >= 1");
  RuleSpec r;
  r.family = ScoringFamily::kApproval;
  r.k = k;
  return r;
}

RuleSpec RuleSpec::scoring(std::vector<int> s) {
  for (size_t i = 0; i < s.size(); ++i) {
    if (s[i] < 0) throw Error("scoring vector entries must be non-negative");
    if (i && s[i] > s[i - 1]) throw Error("scoring vector must be non-increasing");
  }
  RuleSpec r;
  r.family = ScoringFamily::kExplicit;
  r.scores = std::move(s);
  return r;
}

RuleSpec RuleSpec::of(RuleKind kind) {
  RuleSpec r;
  r.kind = kind;
  return r;
}

RuleSpec RuleSpec::voting_tree(TreeShape t) {
  RuleSpec r;
  r.kind = RuleKind::kVotingTree;
  r.has_tree = true;
  r.tree = std::move(t);
  return r;
}

std::vector<int> RuleSpec::scoring_vector(int m) const {
  std::vector<int> s(m, 0);
  switch (family) {
    case ScoringFamily::kExplicit:
      if (static_cast<int>(scores.size()) != m)
        throw LengthMismatch("scoring vector has " + std::to_string(scores.size()) +
                             " entries for " + std::to_string(m) + " alternatives");
      return scores;
    case ScoringFamily::kBorda:
      for (int i = 0; i < m; ++i) s[i] = m - 1 - i;
      break;
    case ScoringFamily::kPlurality:
      if (m > 0) s[0] = 1;
      break;
    case ScoringFamily::kVeto:
      for (int i = 0; i + 1 < m; ++i) s[i] = 1;
      break;
    case ScoringFamily::kApproval:
      for (int i = 0; i < std::min(k, m); ++i) s[i] = 1;
      break;
  }
  return s;
}

TreeShape RuleSpec::tree_for(int m) const {
  if (has_tree) {
    if (!tree.valid_for(m)) throw LengthMismatch("tree leaves do not match alternatives");
    return tree;
  }
  return TreeShape::balanced(m);
}

std::string RuleSpec::name() const {
  switch (kind) {
    case RuleKind::kPositional:
      switch (family) {
        case ScoringFamily::kBorda: return "borda";
        case ScoringFamily::kPlurality: return "plurality";
        case ScoringFamily::kVeto: return "veto";
        case ScoringFamily::kApproval: return "k-approval:" + std::to_string(k);
        case ScoringFamily::kExplicit: {
          std::string s = "scoring:";
          for (size_t i = 0; i < scores.size(); ++i)
            s += (i ? "," : "") + std::to_string(scores[i]);
          return s;
        }
      }
      break;
    case RuleKind::kCopeland: return "copeland";
    case RuleKind::kMaximin: return "maximin";
    case RuleKind::kBucklin: return "bucklin";
    case RuleKind::kRankedPairs: return "ranked-pairs";
    case RuleKind::kVotingTree: return has_tree ? "tree:custom" : "tree:balanced";
    case RuleKind::kPluralityRunoff: return "plurality-runoff";
    case RuleKind::kStv: return "stv";
  }
  return "?";
}

RuleSpec parse_rule(const std::string& text,
                    const std::vector<std::string>& labels) {
  auto colon = text.find(':');
  std::string head = text.substr(0, colon);
  std::string arg = colon == std::string::npos ? "" : text.substr(colon + 1);
  auto need_no_arg = [&] {
    if (colon != std::string::npos) throw ParseError("rule '" + head + "' takes no argument");
  };
  if (head == "borda") return need_no_arg(), RuleSpec::borda();
  if (head == "plurality") return need_no_arg(), RuleSpec::plurality();
  if (head == "veto") return need_no_arg(), RuleSpec::veto();
  if (head == "copeland") return need_no_arg(), RuleSpec::of(RuleKind::kCopeland);
  if (head == "maximin") return need_no_arg(), RuleSpec::of(RuleKind::kMaximin);
  if (head == "bucklin") return need_no_arg(), RuleSpec::of(RuleKind::kBucklin);
  if (head == "ranked-pairs") return need_no_arg(), RuleSpec::of(RuleKind::kRankedPairs);
  if (head == "plurality-runoff")
    return need_no_arg(), RuleSpec::of(RuleKind::kPluralityRunoff);
  if (head == "stv") return need_no_arg(), RuleSpec::of(RuleKind::kStv);
  try {
    if (head == "k-approval") return RuleSpec::approval(std::stoi(arg));
    if (head == "scoring") {
      std::vector<int> s;
      std::stringstream ss(arg);
      for (std::string tok; std::getline(ss, tok, ',');) s.push_back(std::stoi(tok));
      if (s.empty()) throw ParseError("empty scoring vector");
      return RuleSpec::scoring(std::move(s));
    }
  } catch (const std::invalid_argument&) {
    throw ParseError("bad number in rule '" + text + "'");
  } catch (const std::out_of_range&) {
    throw ParseError("number out of range in rule '" + text + "'");
  }
  if (head == "tree") {
    if (arg == "balanced") return RuleSpec::of(RuleKind::kVotingTree);
    if (!arg.empty() && arg[0] == '@') {
      std::ifstream in(arg.substr(1));
      if (!in) throw ParseError("cannot open tree file " + arg.substr(1));
      std::stringstream buf;
      buf << in.rdbuf();
      return RuleSpec::voting_tree(TreeShape::parse(buf.str(), labels));
    }
    throw ParseError("tree rule expects 'balanced' or '@file'");
  }
  throw ParseError("unknown rule '" + text + "'");
}

// ---------------------------------------------------------------------------
// Rules

WinnerSet argmax(const std::vector<long long>& score) {
  WinnerSet w;
  if (score.empty()) return w;
  long long best = *std::max_element(score.begin(), score.end());
  for (size_t i = 0; i < score.size(); ++i)
    if (score[i] == best) w.push_back(static_cast<int>(i));
  return w;
}

std::vector<long long> positional_scores(const std::vector<int>& v,
                                         const LinearProfile& p) {
  if (static_cast<int>(v.size()) != p.m)
    throw LengthMismatch("scoring vector length differs from m");
  std::vector<long long> s(p.m, 0);
  for (const auto& vote : p.votes)
    for (int i = 0; i < p.m; ++i) s[vote.ranking[i]] += v[i];
  return s;
}

WinnerSet positional_winners(const std::vector<int>& v, const LinearProfile& p) {
  return argmax(positional_scores(v, p));
}

std::vector<long long> copeland_scores(const PairwiseMatrix& pm) {
  std::vector<long long> s(pm.m, 0);
  for (int a = 0; a < pm.m; ++a)
    for (int b = 0; b < pm.m; ++b)
      if (a != b && pm.D(a, b) > 0) ++s[a];
  return s;
}

WinnerSet copeland_from_matrix(const PairwiseMatrix& pm) {
  return argmax(copeland_scores(pm));
}

WinnerSet copeland_winners(const LinearProfile& p) {
  return copeland_from_matrix(pairwise_matrix(p));
}

std::vector<long long> maximin_scores(const PairwiseMatrix& pm) {
  std::vector<long long> s(pm.m, pm.m > 1 ? std::numeric_limits<long long>::max() : 0);
  for (int a = 0; a < pm.m; ++a)
    for (int b = 0; b < pm.m; ++b)
      if (a != b) s[a] = std::min<long long>(s[a], pm.N(a, b));
  return s;
}

WinnerSet maximin_from_matrix(const PairwiseMatrix& pm) {
  return argmax(maximin_scores(pm));
}

WinnerSet maximin_winners(const LinearProfile& p) {
  return maximin_from_matrix(pairwise_matrix(p));
}

std::vector<int> bucklin_scores(const LinearProfile& p) {
  std::vector<int> score(p.m, p.m + 1);
  std::vector<int> cum(p.m, 0);
  for (int k = 0; k < p.m; ++k) {
    for (const auto& v : p.votes) ++cum[v.ranking[k]];
    for (int a = 0; a < p.m; ++a)
      if (score[a] > p.m && 2 * cum[a] > p.n()) score[a] = k + 1;
  }
  return score;
}

WinnerSet bucklin_winners(const LinearProfile& p) {
  auto s = bucklin_scores(p);
  std::vector<long long> neg(s.begin(), s.end());
  for (auto& x : neg) x = -x;
  return argmax(neg);
}

namespace {

// Closure over at most 64 alternatives, one bit row per alternative.
using Rows = std::vector<std::uint64_t>;

bool has(const Rows& r, int a, int b) { return (r[a] >> b) & 1u; }

void lock_pair(Rows& r, int a, int b) {
  std::uint64_t add = r[b] | (std::uint64_t{1} << b);
  int m = static_cast<int>(r.size());
  for (int x = 0; x < m; ++x)
    if (x == a || has(r, x, a)) r[x] |= add;
}

struct RankedPairsSearch {
  int m = 0;
  std::vector<std::vector<Pair>> groups;
  std::uint64_t budget = 0;
  std::uint64_t visited = 0;
  std::unordered_set<std::string> seen;
  std::uint64_t winners = 0;

  void record(const Rows& r) {
    std::uint64_t dominated = 0;
    for (int x = 0; x < m; ++x) dominated |= r[x];
    for (int x = 0; x < m; ++x)
      if (!((dominated >> x) & 1u)) winners |= std::uint64_t{1} << x;
  }

  void go(size_t g, Rows r, std::vector<Pair> pending) {
    std::erase_if(pending, [&](const Pair& p) {
      return has(r, p.first, p.second) || has(r, p.second, p.first);
    });
    if (pending.empty()) {
      if (g + 1 >= groups.size()) {
        record(r);
        return;
      }
      go(g + 1, std::move(r), groups[g + 1]);
      return;
    }
    std::string key(reinterpret_cast<const char*>(r.data()), r.size() * 8);
    key += std::to_string(g) + ":";
    for (auto [a, b] : pending) key += std::to_string(a) + "," + std::to_string(b) + ";";
    if (!seen.insert(std::move(key)).second) return;
    if (++visited > budget) throw BudgetExceeded("ranked pairs branch cap", visited);

    Rows all = r;
    bool acyclic = true;
    for (auto [a, b] : pending) {
      if (has(all, b, a)) {
        acyclic = false;
        break;
      }
      lock_pair(all, a, b);
    }
    if (acyclic) {
      go(g, std::move(all), {});
      return;
    }
    for (size_t i = 0; i < pending.size(); ++i) {
      Rows next = r;
      lock_pair(next, pending[i].first, pending[i].second);
      std::vector<Pair> rest = pending;
      rest.erase(rest.begin() + i);
      go(g, std::move(next), std::move(rest));
    }
  }
};

}  // namespace

WinnerSet ranked_pairs_from_matrix(const PairwiseMatrix& pm, std::uint64_t budget) {
  if (pm.m > 64) throw Error("ranked pairs supports at most 64 alternatives");
  std::map<int, std::vector<Pair>, std::greater<int>> by_margin;
  for (int a = 0; a < pm.m; ++a)
    for (int b = 0; b < pm.m; ++b)
      if (a != b && pm.D(a, b) > 0) by_margin[pm.D(a, b)].emplace_back(a, b);
  RankedPairsSearch s;
  s.m = pm.m;
  s.budget = budget;
  for (auto& [d, ps] : by_margin) s.groups.push_back(std::move(ps));
  // D = 0 pairs and reversed pairs only ever complete the order; every
  // maximal element of the locked closure tops some completion.
  if (s.groups.empty()) s.groups.emplace_back();
  s.go(0, Rows(pm.m, 0), s.groups[0]);
  WinnerSet w;
  for (int x = 0; x < pm.m; ++x)
    if ((s.winners >> x) & 1u) w.push_back(x);
  return w;
}

WinnerSet ranked_pairs_winners(const LinearProfile& p, std::uint64_t budget) {
  return ranked_pairs_from_matrix(pairwise_matrix(p), budget);
}

WinnerSet voting_tree_from_matrix(const TreeShape& t, const PairwiseMatrix& pm) {
  std::function<AltSet(int)> reach = [&](int id) -> AltSet {
    const auto& nd = t.nodes[id];
    if (nd.leaf >= 0) return {nd.leaf};
    AltSet l = reach(nd.left), r = reach(nd.right), out;
    auto advance = [&](const AltSet& mine, const AltSet& theirs) {
      for (int x : mine)
        for (int y : theirs)
          if (pm.D(x, y) >= 0) {
            out.push_back(x);
            break;
          }
    };
    advance(l, r);
    advance(r, l);
    std::sort(out.begin(), out.end());
    return out;
  };
  if (!t.valid_for(pm.m)) throw LengthMismatch("tree leaves do not match alternatives");
  return reach(t.root);
}

WinnerSet voting_tree_winners(const TreeShape& t, const LinearProfile& p) {
  return voting_tree_from_matrix(t, pairwise_matrix(p));
}

std::vector<int> plurality_tallies(const LinearProfile& p) {
  std::vector<int> t(p.m, 0);
  for (const auto& v : p.votes) ++t[v.ranking[0]];
  return t;
}

WinnerSet runoff_from(const std::vector<int>& tallies, const PairwiseMatrix& pm) {
  int m = pm.m;
  if (m == 1) return {0};
  std::vector<char> win(m, 0);
  for (int x = 0; x < m; ++x)
    for (int y = x + 1; y < m; ++y) {
      int lo = std::min(tallies[x], tallies[y]);
      bool ok = true;
      for (int z = 0; z < m && ok; ++z)
        if (z != x && z != y && tallies[z] > lo) ok = false;
      if (!ok) continue;
      int d = pm.D(x, y);
      if (d >= 0) win[x] = 1;
      if (d <= 0) win[y] = 1;
    }
  WinnerSet w;
  for (int x = 0; x < m; ++x)
    if (win[x]) w.push_back(x);
  return w;
}

WinnerSet plurality_runoff_winners(const LinearProfile& p) {
  return runoff_from(plurality_tallies(p), pairwise_matrix(p));
}

WinnerSet stv_winners(const LinearProfile& p, std::uint64_t budget) {
  int m = p.m;
  if (m > 64) throw Error("STV supports at most 64 alternatives");
  std::unordered_set<std::uint64_t> seen;
  std::uint64_t winners = 0;
  std::uint64_t visited = 0;
  std::function<void(std::uint64_t)> go = [&](std::uint64_t alive) {
    if (!seen.insert(alive).second) return;
    if (++visited > budget) throw BudgetExceeded("STV elimination cap", visited);
    if (std::popcount(alive) == 1) {
      winners |= alive;
      return;
    }
    std::vector<int> tally(m, 0);
    for (const auto& v : p.votes)
      for (int a : v.ranking)
        if ((alive >> a) & 1u) {
          ++tally[a];
          break;
        }
    int lo = std::numeric_limits<int>::max();
    for (int a = 0; a < m; ++a)
      if ((alive >> a) & 1u) lo = std::min(lo, tally[a]);
    for (int a = 0; a < m; ++a)
      if (((alive >> a) & 1u) && tally[a] == lo) go(alive & ~(std::uint64_t{1} << a));
  };
  go(m == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << m) - 1);
  WinnerSet w;
  for (int a = 0; a < m; ++a)
    if ((winners >> a) & 1u) w.push_back(a);
  return w;
}

WinnerSet winners(const RuleSpec& rule, const LinearProfile& p,
                  std::uint64_t budget) {
  switch (rule.kind) {
    case RuleKind::kPositional:
      return positional_winners(rule.scoring_vector(p.m), p);
    case RuleKind::kCopeland: return copeland_winners(p);
    case RuleKind::kMaximin: return maximin_winners(p);
    case RuleKind::kBucklin: return bucklin_winners(p);
    case RuleKind::kRankedPairs: return ranked_pairs_winners(p, budget);
    case RuleKind::kVotingTree: return voting_tree_winners(rule.tree_for(p.m), p);
    case RuleKind::kPluralityRunoff: return plurality_runoff_winners(p);
    case RuleKind::kStv: return stv_winners(p, budget);
  }
  throw Error("unknown rule kind");
}

}  // namespace ppw
