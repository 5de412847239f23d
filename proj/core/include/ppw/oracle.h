#ifndef PPW_ORACLE_H_
#define PPW_ORACLE_H_

#include <cstdint>
#include <optional>
#include <string>

#include "ppw/profile.h"
#include "ppw/rules.h"

namespace ppw {

enum class QueryKind { kPW, kNW, kPcW, kNcW };

std::string query_name(QueryKind k);
// Accepts pw, nw, pcw, ncw in any case.
QueryKind parse_query(const std::string& s);

inline constexpr std::uint64_t kDefaultOracleBudget = 1'000'000;

struct OracleOptions {
  // Search nodes for the memoized search, extension combinations for the
  // naive product.
  std::uint64_t budget = kDefaultOracleBudget;
  std::uint64_t rule_budget = kDefaultBranchBudget;
};

struct OracleResult {
  bool answer = false;
  // For a true PW/PcW answer: an extension where the candidate wins. For a
  // false NW/NcW answer: an extension where it does not.
  std::optional<LinearProfile> witness;
  std::uint64_t nodes = 0;
  // Product of per-ballot extension counts, saturating at kUnlimited.
  std::uint64_t combinations = 0;

  explicit operator bool() const { return answer; }
};

// Exhaustive search over the product of per-ballot extensions. Ballots are
// visited depth first; partial profiles that agree on the rule's sufficient
// statistic are merged.
OracleResult oracle_query(const PosetProfile& p, const RuleSpec& rule, int c,
                          QueryKind kind, const OracleOptions& opt = {});

// Plain product enumeration, evaluating the rule on every full profile.
OracleResult oracle_query_naive(const PosetProfile& p, const RuleSpec& rule,
                                int c, QueryKind kind,
                                const OracleOptions& opt = {});

}  // namespace ppw

#endif  // PPW_ORACLE_H_
