#include "ppw/nw.h"

#include "ppw/errors.h"
#include "ppw/oracle.h"
#include "ppw/rules.h"

namespace ppw {

namespace {

int sz(const AltSet& s) { return static_cast<int>(s.size()); }

const PosetProfile& profile_of(const NwQuery& q) {
  if (!q.profile) throw Error("query without a profile");
  if (q.candidate < 0 || q.candidate >= q.profile->m())
    throw Error("candidate out of range");
  return *q.profile;
}

// No votes: every alternative ties.
std::optional<NwResult> empty_profile_answer(const PosetProfile& p,
                                             const NwQuery& q) {
  if (p.n() > 0) return std::nullopt;
  NwResult r;
  r.necessary = q.strictness == Strictness::kCo || p.m() == 1;
  if (!r.necessary) r.rival = q.candidate == 0 ? 1 : 0;
  return r;
}

}  // namespace

SlideRange slide_range(const PartialOrder& o, int c, int w) {
  int m = o.m();
  AltSet up_w = up_set(o, w), down_c = down_set(o, c);
  if (!o.dominates(c, w)) return {sz(up_w), m + 1 - sz(down_c), 0};
  return {sz(set_difference(up_w, down_c)) + 1, m + 1 - sz(down_c),
          sz(block(o, c, w))};
}

NwResult nw_positional(const std::vector<int>& v, const NwQuery& q) {
  const PosetProfile& p = profile_of(q);
  int m = p.m(), c = q.candidate;
  if (static_cast<int>(v.size()) != m)
    throw LengthMismatch("scoring vector length differs from m");
  auto s = [&](int pos) { return static_cast<long long>(v[pos - 1]); };
  for (int w = 0; w < m; ++w) {
    if (w == c) continue;
    long long sw = 0, sc = 0;
    for (const auto& o : p.ballots()) {
      SlideRange r = slide_range(o, c, w);
      if (r.length == 0) {
        sw += s(r.high);
        sc += s(r.low);
        continue;
      }
      // c at position l, w at l + length - 1; maximize s(w) - s(c).
      long long best_gap = 0;
      int best_l = r.high;
      for (int l = r.high; l <= r.low; ++l) {
        long long gap = s(l + r.length - 1) - s(l);
        if (l == r.high || gap > best_gap) best_gap = gap, best_l = l;
      }
      sw += s(best_l + r.length - 1);
      sc += s(best_l);
    }
    bool fails = q.strictness == Strictness::kUnique ? sw >= sc : sw > sc;
    if (fails) {
      NwResult out;
      out.necessary = false;
      out.rival = w;
      return out;
    }
  }
  return {};
}

NwResult nw_maximin(const NwQuery& q) {
  const PosetProfile& p = profile_of(q);
  int m = p.m(), c = q.candidate;
  if (m < 3) {
    QueryKind kind = q.strictness == Strictness::kUnique ? QueryKind::kNW
                                                         : QueryKind::kNcW;
    auto r = oracle_query(p, RuleSpec::of(RuleKind::kMaximin), c, kind);
    NwResult out;
    out.necessary = r.answer;
    out.used_oracle = true;
    if (!r.answer && m == 2) out.rival = 1 - c;
    return out;
  }
  if (auto e = empty_profile_answer(p, q)) return *e;

  std::vector<std::vector<AltSet>> up(p.n());
  for (int j = 0; j < p.n(); ++j)
    for (int a = 0; a < m; ++a) up[j].push_back(up_set(p.ballot(j), a));

  for (int w = 0; w < m; ++w) {
    if (w == c) continue;
    for (int w2 = 0; w2 < m; ++w2) {
      if (w2 == c) continue;
      int s_cw2 = 0;
      std::vector<int> s_w(m, 0);
      for (int j = 0; j < p.n(); ++j) {
        const PartialOrder& o = p.ballot(j);
        const AltSet& up_w = up[j][w];
        if (!o.dominates(c, w2)) {
          // Add w2 > c, then raise w.
          bool lifted = contains(up_w, c);
          for (int d = 0; d < m; ++d) {
            if (d == w) continue;
            if (!contains(up_w, d) && !(lifted && contains(up[j][w2], d))) ++s_w[d];
          }
        } else {
          ++s_cw2;
          for (int d = 0; d < m; ++d)
            if (d != w && !contains(up_w, d)) ++s_w[d];
        }
      }
      bool all = true;
      for (int d = 0; d < m && all; ++d) {
        if (d == w) continue;
        all = q.strictness == Strictness::kUnique ? s_w[d] >= s_cw2 : s_w[d] > s_cw2;
      }
      if (all) {
        NwResult out;
        out.necessary = false;
        out.rival = w;
        out.rival2 = w2;
        return out;
      }
    }
  }
  return {};
}

NwResult nw_bucklin(const NwQuery& q) {
  const PosetProfile& p = profile_of(q);
  if (auto e = empty_profile_answer(p, q)) return *e;
  int m = p.m(), n = p.n(), c = q.candidate;
  bool co = q.strictness == Strictness::kCo;
  std::vector<SlideRange> r(n);
  for (int w = 0; w < m; ++w) {
    if (w == c) continue;
    for (int j = 0; j < n; ++j) r[j] = slide_range(p.ballot(j), c, w);
    for (int k = 1; k <= m; ++k) {
      // kc is k - 1 for the unique-winner test and k for the co-winner test.
      int kc = co ? k : k - 1;
      int s_w = 0, s_c = 0, u = 0;
      for (const SlideRange& x : r) {
        if (x.length == 0) {
          if (x.high <= k) ++s_w;
          if (x.low <= kc) ++s_c;
          continue;
        }
        if (x.low + x.length - 1 <= k || (x.low <= kc && x.high + x.length - 1 <= k))
          ++s_w;
        if (x.low <= kc) ++s_c;
        if (x.low > kc && x.high + x.length - 1 <= k) ++u;
      }
      bool fails = false;
      if (!co) {
        if (k == 1)
          fails = 2 * (s_w + u) > n;
        else
          fails = s_w > s_c && 2 * s_c <= n && 2 * (s_w + u) > n;
      } else {
        for (int l = 0; l <= u && !fails; ++l)
          fails = 2 * (s_w + l) > n && n >= 2 * (s_c + l);
      }
      if (fails) {
        NwResult out;
        out.necessary = false;
        out.rival = w;
        out.k = k;
        return out;
      }
    }
  }
  return {};
}

}  // namespace ppw
