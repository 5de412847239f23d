#ifndef PPW_FIXTURES_H_
#define PPW_FIXTURES_H_

#include <string>
#include <utility>
#include <vector>

#include "ppw/oracle.h"
#include "ppw/profile.h"

namespace ppw {

// Three ballots over c1..c3. 1: c1 on top of an unordered pair;
// 2: c1 and c2 over c3; 3: only c2 over c3.
PartialOrder three_ballot(int i);
PosetProfile three_ballot_profile();    // (O1, O2, O3)
PosetProfile repeated_first_profile();  // (O1, O1, O2)

// c1 > c2 > c3 > c4 with c5 > c4, over five alternatives.
PartialOrder five_alternative_order();

// Ballot over c1..c3 whose possible top alternatives are exactly `tops`.
// Singletons are linear; pairs drop one comparison from a linear order.
PartialOrder top_ballot(const AltSet& tops);

struct StatedAnswer {
  QueryKind kind;
  bool on_p;
  bool on_pbar;
};

// One profile pair separating query Y from query X under plurality: X gives
// the same answer for every alternative on both profiles, Y differs for c1.
struct IndependenceCase {
  std::string label;
  std::vector<std::pair<QueryKind, QueryKind>> xy;
  PosetProfile p;
  PosetProfile pbar;
  std::vector<StatedAnswer> stated;  // for c1
};

std::vector<IndependenceCase> independence_fixtures();

}  // namespace ppw

#endif  // PPW_FIXTURES_H_
