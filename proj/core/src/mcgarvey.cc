#include "ppw/mcgarvey.h"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "ppw/errors.h"

namespace ppw {

TargetDiffs TargetDiffs::from_matrix(const PairwiseMatrix& pm) {
  TargetDiffs t(pm.m);
  for (int a = 0; a < pm.m; ++a)
    for (int b = 0; b < pm.m; ++b)
      if (a != b) t.F[a * pm.m + b] = pm.D(a, b);
  return t;
}

void TargetDiffs::set(int a, int b, int x) {
  if (a == b) throw SamePair("diagonal of a difference target");
  F[a * m + b] = x;
  F[b * m + a] = -x;
}

bool TargetDiffs::skew_symmetric() const {
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      if (at(a, b) != -at(b, a)) return false;
  return true;
}

std::array<LinearOrder, 2> bump_pair(int c, int c2, int m) {
  if (c == c2) throw SamePair("bump_pair needs two different alternatives");
  if (c < 0 || c2 < 0 || c >= m || c2 >= m) throw Error("alternative out of range");
  std::vector<int> rest;
  for (int a = 0; a < m; ++a)
    if (a != c && a != c2) rest.push_back(a);
  LinearOrder up{{c, c2}}, down;
  up.ranking.insert(up.ranking.end(), rest.begin(), rest.end());
  down.ranking.assign(rest.rbegin(), rest.rend());
  down.ranking.push_back(c);
  down.ranking.push_back(c2);
  return {up, down};
}

namespace {

std::vector<int> gaps(const LinearProfile& base, const TargetDiffs& target) {
  if (!target.skew_symmetric()) throw Error("difference target is not skew-symmetric");
  if (base.m != target.m && !base.votes.empty())
    throw LengthMismatch("base profile and target differ in alternative count");
  LinearProfile b = base;
  b.m = target.m;
  PairwiseMatrix pm = pairwise_matrix(b);
  int m = target.m;
  std::vector<int> g(m * m, 0);
  for (int a = 0; a < m; ++a)
    for (int c = 0; c < m; ++c)
      if (a != c) g[a * m + c] = target.at(a, c) - pm.D(a, c);
  return g;
}

}  // namespace

LinearProfile synthesize_diffs(const LinearProfile& base, const TargetDiffs& target) {
  int m = target.m;
  std::vector<int> g = gaps(base, target);
  LinearProfile out{m, {}};
  if (m < 2) return out;

  int odd = 0, even = 0;
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b) (std::abs(g[a * m + b]) % 2 ? odd : even)++;
  if (odd && even) {
    bool minority_odd = odd <= even;
    std::string list;
    for (int a = 0; a < m; ++a)
      for (int b = a + 1; b < m; ++b)
        if ((std::abs(g[a * m + b]) % 2 == 1) == minority_odd)
          list += " (" + std::to_string(a) + "," + std::to_string(b) + ")";
    throw ParityMismatch("gaps mix parities; minority pairs:" + list);
  }
  if (odd) {
    int agree_up = 0;
    for (int a = 0; a < m; ++a)
      for (int b = a + 1; b < m; ++b)
        if (g[a * m + b] > 0) ++agree_up;
    int pairs = m * (m - 1) / 2;
    LinearOrder v;
    for (int a = 0; a < m; ++a) v.ranking.push_back(a);
    if (2 * agree_up < pairs) std::reverse(v.ranking.begin(), v.ranking.end());
    auto pos = v.positions();
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b)
        if (a != b) g[a * m + b] -= pos[a] < pos[b] ? 1 : -1;
    out.votes.push_back(v);
  }
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b) {
      int d = g[a * m + b];
      int hi = d > 0 ? a : b, lo = d > 0 ? b : a;
      for (int k = 0; k < std::abs(d) / 2; ++k) {
        auto [v1, v2] = bump_pair(hi, lo, m);
        out.votes.push_back(v1);
        out.votes.push_back(v2);
      }
    }
  return out;
}

long long mcgarvey_size_bound(const LinearProfile& base, const TargetDiffs& target) {
  std::vector<int> g = gaps(base, target);
  long long s = 0;
  int m = target.m;
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      if (a != b) s += std::abs(g[a * m + b]) + 1;
  return s / 2;
}

}  // namespace ppw
