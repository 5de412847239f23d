#ifndef PPW_ORDER_H_
#define PPW_ORDER_H_

#include <cstdint>
#include <functional>
#include <limits>
#include <utility>
#include <vector>

namespace ppw {

// Sorted ascending, no repeats.
using AltSet = std::vector<int>;
using Pair = std::pair<int, int>;

inline constexpr std::uint64_t kUnlimited =
    std::numeric_limits<std::uint64_t>::max();

// ranking[0] is the most preferred alternative.
struct LinearOrder {
  std::vector<int> ranking;

  int m() const { return static_cast<int>(ranking.size()); }
  // positions()[a] is the 0-based rank of alternative a.
  std::vector<int> positions() const;
  bool is_permutation() const;

  friend bool operator==(const LinearOrder&, const LinearOrder&) = default;
  friend auto operator<=>(const LinearOrder&, const LinearOrder&) = default;
};

// Strict partial order, transitively closed and antisymmetric. Only
// transitive_close and the helpers below create instances, so the invariants
// hold for every value.
class PartialOrder {
 public:
  PartialOrder() = default;
  explicit PartialOrder(int m);  // empty relation

  static PartialOrder from_linear(const LinearOrder& v);

  int m() const { return m_; }
  bool dominates(int a, int b) const { return rel_[a * m_ + b] != 0; }
  bool comparable(int a, int b) const {
    return a == b || dominates(a, b) || dominates(b, a);
  }

  // All strict pairs, lexicographic.
  std::vector<Pair> pairs() const;
  // Pairs (a, b) with a > b and nothing strictly between them.
  std::vector<Pair> cover_pairs() const;
  // Number of unordered pairs left undetermined.
  int undetermined_pairs() const;
  bool is_linear() const { return undetermined_pairs() == 0; }

  // Closure of this order plus (a, b). Throws CycleError if b > a already.
  PartialOrder with_pair(int a, int b) const;

  friend bool operator==(const PartialOrder&, const PartialOrder&) = default;

 private:
  friend PartialOrder transitive_close(const std::vector<Pair>& pairs, int m);
  int m_ = 0;
  std::vector<std::uint8_t> rel_;
};

PartialOrder transitive_close(const std::vector<Pair>& pairs, int m);

bool extends(const LinearOrder& v, const PartialOrder& o);

// Visits every linear extension once in lexicographic order of the ranking.
// The visitor returns false to stop early. Returns the number visited.
// Throws BudgetExceeded once more than `cap` extensions would be produced.
std::uint64_t for_each_linear_extension(
    const PartialOrder& o, const std::function<bool(const LinearOrder&)>& fn,
    std::uint64_t cap = kUnlimited);

std::vector<LinearOrder> linear_extensions(const PartialOrder& o,
                                           std::uint64_t cap = kUnlimited);

AltSet up_set(const PartialOrder& o, int c);
AltSet down_set(const PartialOrder& o, int c);
// Down(c) intersected with Up(w); requires c > w.
AltSet block(const PartialOrder& o, int c, int w);

// {(seq[i], seq[j]) : i < j}.
std::vector<Pair> ordered_pairs_of(const std::vector<int>& seq);

// Ranks block i above block j for i < j; ascending index inside a block.
LinearOrder consistent_order(const std::vector<std::vector<int>>& blocks);

AltSet set_difference(const AltSet& a, const AltSet& b);
AltSet set_intersection(const AltSet& a, const AltSet& b);
bool contains(const AltSet& s, int x);

}  // namespace ppw

#endif  // PPW_ORDER_H_
