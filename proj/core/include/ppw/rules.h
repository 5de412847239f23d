#ifndef PPW_RULES_H_
#define PPW_RULES_H_

#include <cstdint>
#include <string>
#include <vector>

#include "ppw/order.h"
#include "ppw/profile.h"

namespace ppw {

using WinnerSet = AltSet;

inline constexpr std::uint64_t kDefaultBranchBudget = 1'000'000;

struct PairwiseMatrix {
  int m = 0;
  int n = 0;
  std::vector<int> count;  // count[a * m + b] = votes ranking a above b

  int N(int a, int b) const { return count[a * m + b]; }
  int D(int a, int b) const { return N(a, b) - N(b, a); }
};

PairwiseMatrix pairwise_matrix(const LinearProfile& p);

// Binary tree whose leaves carry distinct alternatives.
struct TreeShape {
  struct Node {
    int leaf = -1;  // alternative index, or -1 for an internal node
    int left = -1;
    int right = -1;
  };
  std::vector<Node> nodes;
  int root = -1;

  // Leaf labels from left to right.
  std::vector<int> leaves() const;
  bool valid_for(int m) const;

  // Perfectly balanced over 2^y leaves when m is a power of two; otherwise
  // the first depth-y slots are split until m leaves exist. Leaves are
  // filled left to right from `order` (identity when empty).
  static TreeShape balanced(int m, const std::vector<int>& order = {});
  // Nested parentheses over labels, e.g. "((a b) (c d))".
  static TreeShape parse(const std::string& text,
                         const std::vector<std::string>& labels);
  std::string format(const std::vector<std::string>& labels) const;
};

enum class RuleKind {
  kPositional,
  kCopeland,
  kMaximin,
  kBucklin,
  kRankedPairs,
  kVotingTree,
  kPluralityRunoff,
  kStv,
};

enum class ScoringFamily { kExplicit, kBorda, kPlurality, kVeto, kApproval };

struct RuleSpec {
  RuleKind kind = RuleKind::kPositional;
  ScoringFamily family = ScoringFamily::kBorda;
  std::vector<int> scores;  // kExplicit only
  int k = 0;                // kApproval only
  bool has_tree = false;    // false: balanced tree over the identity order
  TreeShape tree;

  static RuleSpec borda() { return {}; }
  static RuleSpec plurality();
  static RuleSpec veto();
  static RuleSpec approval(int k);
  static RuleSpec scoring(std::vector<int> s);
  static RuleSpec of(RuleKind kind);
  static RuleSpec voting_tree(TreeShape t);

  // Scoring vector for m alternatives. Throws LengthMismatch for explicit
  // vectors of the wrong length.
  std::vector<int> scoring_vector(int m) const;
  TreeShape tree_for(int m) const;
  std::string name() const;
};

// Accepts the CLI spellings: borda, plurality, veto, k-approval:K,
// scoring:s1,s2,..., copeland, maximin, bucklin, ranked-pairs, tree:balanced,
// tree:@file, plurality-runoff, stv.
RuleSpec parse_rule(const std::string& text,
                    const std::vector<std::string>& labels = {});

WinnerSet argmax(const std::vector<long long>& score);

std::vector<long long> positional_scores(const std::vector<int>& v,
                                         const LinearProfile& p);
WinnerSet positional_winners(const std::vector<int>& v, const LinearProfile& p);

// Ties score 0 for both sides.
std::vector<long long> copeland_scores(const PairwiseMatrix& pm);
WinnerSet copeland_from_matrix(const PairwiseMatrix& pm);
WinnerSet copeland_winners(const LinearProfile& p);

std::vector<long long> maximin_scores(const PairwiseMatrix& pm);
WinnerSet maximin_from_matrix(const PairwiseMatrix& pm);
WinnerSet maximin_winners(const LinearProfile& p);

// Smallest k (1-based) with a strict majority ranking the alternative in the
// top k.
std::vector<int> bucklin_scores(const LinearProfile& p);
WinnerSet bucklin_winners(const LinearProfile& p);

// Parallel-universes tiebreaking over equal-margin groups.
WinnerSet ranked_pairs_from_matrix(const PairwiseMatrix& pm,
                                   std::uint64_t budget = kDefaultBranchBudget);
WinnerSet ranked_pairs_winners(const LinearProfile& p,
                               std::uint64_t budget = kDefaultBranchBudget);

WinnerSet voting_tree_from_matrix(const TreeShape& t, const PairwiseMatrix& pm);
WinnerSet voting_tree_winners(const TreeShape& t, const LinearProfile& p);

std::vector<int> plurality_tallies(const LinearProfile& p);
WinnerSet runoff_from(const std::vector<int>& tallies, const PairwiseMatrix& pm);
WinnerSet plurality_runoff_winners(const LinearProfile& p);

WinnerSet stv_winners(const LinearProfile& p,
                      std::uint64_t budget = kDefaultBranchBudget);

WinnerSet winners(const RuleSpec& rule, const LinearProfile& p,
                  std::uint64_t budget = kDefaultBranchBudget);

}  // namespace ppw

#endif  // PPW_RULES_H_
