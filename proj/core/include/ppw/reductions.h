#ifndef PPW_REDUCTIONS_H_
#define PPW_REDUCTIONS_H_

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ppw/instances.h"
#include "ppw/oracle.h"
#include "ppw/profile.h"
#include "ppw/rules.h"

namespace ppw {

// A generated election. Ballots [0, p1_count) encode the source instance;
// the rest are linear score-adjusting votes.
struct ReductionOutput {
  std::string construction;  // e.g. "maximin-x3c"
  PosetProfile profile;
  int candidate = 0;
  RuleSpec rule;
  QueryKind query = QueryKind::kPW;
  // The query answer is true exactly when the source instance is solvable
  // (false: exactly when it is unsolvable).
  bool yes_when_solvable = true;
  int p1_count = 0;
  int pair_bound = 0;  // undetermined pairs allowed per ballot
  // Role name -> alternatives, e.g. "w", "elements", "sets".
  std::map<std::string, std::vector<int>> roles;
  // X3C instance actually encoded (after any padding).
  std::optional<X3CInstance> x3c;
  // Maps a certificate (chosen set indices, or 0/1 per variable) to linear
  // extensions of the first p1_count ballots.
  std::function<std::vector<LinearOrder>(const std::vector<int>&)> p1_witness;

  bool expected_answer(bool solvable) const {
    return yes_when_solvable ? solvable : !solvable;
  }
};

// Largest undetermined-pair count over all ballots.
int max_undetermined_pairs(const PosetProfile& p);
bool within_pair_bound(const ReductionOutput& out);

// The extension described by a certificate, followed by the fixed votes.
LinearProfile transport_witness(const ReductionOutput& out,
                                const std::vector<int>& certificate);

// Pads to t = q with t odd: dummy elements and pairs of dummy sets when
// t > q, copies of the first set when q > t, and three dummy elements with
// three copies of their set when q = t is even. Solvability is preserved.
X3CInstance normalize_x3c(const X3CInstance& inst);

// Positions k..k+4 (1-based) of a length-l scoring vector with three equal
// positive gaps followed by a positive gap.
struct ScoringParams {
  int l = 0;
  int k = 0;
  long long k1 = 0;
  long long k2 = 0;
};

// Searches l in [x, 4x] (only the vector's own length for explicit
// vectors) and k from l - 4 downwards.
std::optional<ScoringParams> find_scoring_params(const RuleSpec& rule, int x);

// kind: PW or PcW. Throws ConditionUnsatisfied when the rule has no usable
// (l, k).
ReductionOutput gen_scoring_pw(const X3CInstance& inst, const RuleSpec& rule,
                               QueryKind kind);

// kind: PW or PcW under k-approval; certificates are 0/1 per variable.
ReductionOutput gen_kapproval_pw(const ThreeSatInstance& inst, int k,
                                 QueryKind kind);

// kind: PW or NcW share one construction, PcW or NW the other. The instance
// is normalized and, when q < 9, lifted with dummy elements first.
ReductionOutput gen_copeland(const X3CInstance& inst, QueryKind kind);

// kind: PW or PcW.
ReductionOutput gen_bucklin(const X3CInstance& inst, QueryKind kind);

// kind: PW or PcW.
ReductionOutput gen_maximin(const X3CInstance& inst, QueryKind kind);

// kind: PW or NcW share one construction, PcW or NW the other.
ReductionOutput gen_ranked_pairs(const X3CInstance& inst, QueryKind kind);

// Sibling leaf pairs (left leaf, right leaf) below `node`, left to right.
std::vector<std::pair<int, int>> sibling_leaf_pairs(const TreeShape& t,
                                                    int node);
// Balanced tree with the smallest power-of-two leaf count >= 2 * pairs.
TreeShape well_spread_balanced(int pairs);

// Any kind. `shape` supplies the tree structure (its leaf labels are
// replaced); the default is well_spread_balanced(2(q + 1)). Throws
// TreeNotWellSpread when no child of the root holds q + 1 sibling pairs.
ReductionOutput gen_voting_tree(const X3CInstance& inst, QueryKind kind,
                                const std::optional<TreeShape>& shape = {});

struct RunoffOptions {
  // Use the full filler-alternative count of the construction. When false,
  // the filler set has exactly one alternative per score-adjusting vote.
  bool full_filler = true;
  int max_alternatives = 1024;
};

// Size of the construction before materializing.
struct RunoffShape {
  long long alternatives = 0;
  long long filler = 0;
  std::vector<long long> p1_undetermined;
};

// kind: PW (candidate c) or NcW (candidate c, answer false when solvable).
RunoffShape runoff_shape(const X3CInstance& inst, QueryKind kind,
                         const RunoffOptions& opt = {});
// Throws MaterializationTooLarge above opt.max_alternatives.
ReductionOutput gen_runoff(const X3CInstance& inst, QueryKind kind,
                           const RunoffOptions& opt = {});

// Names accepted by the CLI: scoring, approval, copeland, bucklin, maximin,
// ranked-pairs, voting-tree, runoff.
std::vector<std::string> construction_names();

}  // namespace ppw

#endif  // PPW_REDUCTIONS_H_
