#ifndef PPW_MCGARVEY_H_
#define PPW_MCGARVEY_H_

#include <array>
#include <vector>

#include "ppw/profile.h"
#include "ppw/rules.h"

namespace ppw {

// Skew-symmetric target for pairwise differences, F[a * m + b].
struct TargetDiffs {
  int m = 0;
  std::vector<int> F;

  explicit TargetDiffs(int m_ = 0) : m(m_), F(m_ * m_, 0) {}
  static TargetDiffs from_matrix(const PairwiseMatrix& pm);

  int at(int a, int b) const { return F[a * m + b]; }
  // Sets F(a, b) = x and F(b, a) = -x.
  void set(int a, int b, int x);
  bool skew_symmetric() const;
};

// [c > c' > rest ascending] and [rest descending > c > c'].
std::array<LinearOrder, 2> bump_pair(int c, int c2, int m);

// Votes P' with D(base + P') = target. When every gap is odd, one ascending
// or descending vote (whichever agrees with more gap signs) goes first.
LinearProfile synthesize_diffs(const LinearProfile& base, const TargetDiffs& target);

// Half the sum over ordered pairs of (|F - D_base| + 1).
long long mcgarvey_size_bound(const LinearProfile& base, const TargetDiffs& target);

}  // namespace ppw

#endif  // PPW_MCGARVEY_H_
