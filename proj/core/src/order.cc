#include "ppw/order.h"

#include <algorithm>
#include <iterator>
#include <string>

#include "ppw/errors.h"

namespace ppw {

std::vector<int> LinearOrder::positions() const {
  std::vector<int> pos(ranking.size(), -1);
  for (int i = 0; i < m(); ++i) pos[ranking[i]] = i;
  return pos;
}

bool LinearOrder::is_permutation() const {
  std::vector<char> seen(ranking.size(), 0);
  for (int a : ranking) {
    if (a < 0 || a >= m() || seen[a]) return false;
    seen[a] = 1;
  }
  return true;
}

PartialOrder::PartialOrder(int m) : m_(m), rel_(static_cast<size_t>(m) * m, 0) {}

PartialOrder PartialOrder::from_linear(const LinearOrder& v) {
  if (!v.is_permutation()) throw Error("ranking is not a permutation");
  PartialOrder o(v.m());
  for (int i = 0; i < v.m(); ++i)
    for (int j = i + 1; j < v.m(); ++j)
      o.rel_[v.ranking[i] * o.m_ + v.ranking[j]] = 1;
  return o;
}

std::vector<Pair> PartialOrder::pairs() const {
  std::vector<Pair> out;
  for (int a = 0; a < m_; ++a)
    for (int b = 0; b < m_; ++b)
      if (dominates(a, b)) out.emplace_back(a, b);
  return out;
}

std::vector<Pair> PartialOrder::cover_pairs() const {
  std::vector<Pair> out;
  for (int a = 0; a < m_; ++a) {
    for (int b = 0; b < m_; ++b) {
      if (!dominates(a, b)) continue;
      bool covered = true;
      for (int x = 0; x < m_ && covered; ++x)
        if (dominates(a, x) && dominates(x, b)) covered = false;
      if (covered) out.emplace_back(a, b);
    }
  }
  return out;
}

int PartialOrder::undetermined_pairs() const {
  int n = 0;
  for (int a = 0; a < m_; ++a)
    for (int b = a + 1; b < m_; ++b)
      if (!dominates(a, b) && !dominates(b, a)) ++n;
  return n;
}

PartialOrder PartialOrder::with_pair(int a, int b) const {
  auto p = pairs();
  p.emplace_back(a, b);
  return transitive_close(p, m_);
}

PartialOrder transitive_close(const std::vector<Pair>& pairs, int m) {
  if (m < 0) throw Error("negative alternative count");
  PartialOrder o(m);
  for (auto [a, b] : pairs) {
    if (a < 0 || a >= m || b < 0 || b >= m)
      throw Error("alternative index out of range");
    if (a == b) throw CycleError("pair relates an alternative to itself");
    o.rel_[a * m + b] = 1;
  }
  for (int k = 0; k < m; ++k)
    for (int i = 0; i < m; ++i) {
      if (!o.rel_[i * m + k]) continue;
      for (int j = 0; j < m; ++j)
        if (o.rel_[k * m + j]) o.rel_[i * m + j] = 1;
    }
  for (int i = 0; i < m; ++i)
    if (o.rel_[i * m + i])
      throw CycleError("cycle through alternative " + std::to_string(i));
  return o;
}

bool extends(const LinearOrder& v, const PartialOrder& o) {
  if (v.m() != o.m()) return false;
  auto pos = v.positions();
  for (int a = 0; a < o.m(); ++a)
    for (int b = 0; b < o.m(); ++b)
      if (o.dominates(a, b) && pos[a] > pos[b]) return false;
  return true;
}

namespace {

struct ExtensionWalker {
  const PartialOrder& o;
  const std::function<bool(const LinearOrder&)>& fn;
  std::uint64_t cap;
  std::vector<int> indeg;
  std::vector<char> placed;
  LinearOrder cur;
  std::uint64_t count = 0;

  // Returns false when the visitor asked to stop.
  bool walk() {
    int m = o.m();
    if (cur.m() == m) {
      if (count == cap) throw BudgetExceeded("linear extension cap", count + 1);
      ++count;
      return fn(cur);
    }
    for (int a = 0; a < m; ++a) {
      if (placed[a] || indeg[a] != 0) continue;
      placed[a] = 1;
      cur.ranking.push_back(a);
      for (int b = 0; b < m; ++b)
        if (o.dominates(a, b)) --indeg[b];
      bool go_on = walk();
      for (int b = 0; b < m; ++b)
        if (o.dominates(a, b)) ++indeg[b];
      cur.ranking.pop_back();
      placed[a] = 0;
      if (!go_on) return false;
    }
    return true;
  }
};

}  // namespace

std::uint64_t for_each_linear_extension(
    const PartialOrder& o, const std::function<bool(const LinearOrder&)>& fn,
    std::uint64_t cap) {
  ExtensionWalker w{o, fn, cap, std::vector<int>(o.m(), 0),
                    std::vector<char>(o.m(), 0), LinearOrder{}, 0};
  for (int a = 0; a < o.m(); ++a)
    for (int b = 0; b < o.m(); ++b)
      if (o.dominates(a, b)) ++w.indeg[b];
  w.cur.ranking.reserve(o.m());
  w.walk();
  return w.count;
}

std::vector<LinearOrder> linear_extensions(const PartialOrder& o,
                                           std::uint64_t cap) {
  std::vector<LinearOrder> out;
  for_each_linear_extension(
      o,
      [&](const LinearOrder& v) {
        out.push_back(v);
        return true;
      },
      cap);
  return out;
}

AltSet up_set(const PartialOrder& o, int c) {
  AltSet s;
  for (int a = 0; a < o.m(); ++a)
    if (a == c || o.dominates(a, c)) s.push_back(a);
  return s;
}

AltSet down_set(const PartialOrder& o, int c) {
  AltSet s;
  for (int a = 0; a < o.m(); ++a)
    if (a == c || o.dominates(c, a)) s.push_back(a);
  return s;
}

AltSet block(const PartialOrder& o, int c, int w) {
  if (c == w || !o.dominates(c, w))
    throw BlockUndefined("block requires c strictly above w");
  return set_intersection(down_set(o, c), up_set(o, w));
}

std::vector<Pair> ordered_pairs_of(const std::vector<int>& seq) {
  std::vector<int> sorted = seq;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw DuplicateElement("sequence repeats an element");
  std::vector<Pair> out;
  for (size_t i = 0; i < seq.size(); ++i)
    for (size_t j = i + 1; j < seq.size(); ++j) out.emplace_back(seq[i], seq[j]);
  return out;
}

LinearOrder consistent_order(const std::vector<std::vector<int>>& blocks) {
  LinearOrder v;
  for (const auto& b : blocks) {
    std::vector<int> sorted = b;
    std::sort(sorted.begin(), sorted.end());
    v.ranking.insert(v.ranking.end(), sorted.begin(), sorted.end());
  }
  if (!v.is_permutation())
    throw NotAPartition("blocks do not partition the alternatives");
  return v;
}

AltSet set_difference(const AltSet& a, const AltSet& b) {
  AltSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(out));
  return out;
}

AltSet set_intersection(const AltSet& a, const AltSet& b) {
  AltSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

bool contains(const AltSet& s, int x) {
  return std::binary_search(s.begin(), s.end(), x);
}

}  // namespace ppw
