#ifndef PPW_NW_H_
#define PPW_NW_H_

#include <optional>
#include <vector>

#include "ppw/profile.h"

namespace ppw {

enum class Strictness { kUnique, kCo };

struct NwQuery {
  const PosetProfile* profile = nullptr;
  int candidate = 0;
  Strictness strictness = Strictness::kUnique;
};

// Per-ballot placement of the c > w block, 1-based positions.
struct SlideRange {
  int high = 0;    // best position for c
  int low = 0;     // worst position for c
  int length = 0;  // block size, 0 when c is not above w
};

struct NwResult {
  bool necessary = true;
  // Filled on the first failing check.
  std::optional<int> rival;
  std::optional<int> rival2;  // maximin: the w' whose N(c, w') is beaten
  std::optional<int> k;       // Bucklin: the threshold position
  bool used_oracle = false;

  explicit operator bool() const { return necessary; }
};

// Position range of the block when c is above w in o; length 0 otherwise
// (then high is w's best position and low is c's worst).
SlideRange slide_range(const PartialOrder& o, int c, int w);

NwResult nw_positional(const std::vector<int>& v, const NwQuery& q);
NwResult nw_maximin(const NwQuery& q);
NwResult nw_bucklin(const NwQuery& q);

}  // namespace ppw

#endif  // PPW_NW_H_
