#ifndef PPW_DISPATCH_H_
#define PPW_DISPATCH_H_

#include <optional>
#include <string>
#include <vector>

#include "ppw/nw.h"
#include "ppw/oracle.h"
#include "ppw/runoff_flow.h"

namespace ppw {

enum class Solver {
  kOracle,
  kPositionalNw,
  kMaximinNw,
  kBucklinNw,
  kRunoffFlowPcw,
  kRunoffFlowNw,
};

std::string solver_tag(Solver s);
bool is_polynomial(Solver s);

std::string rule_family(RuleKind k);

struct DispatchEntry {
  std::string family;
  QueryKind query;
  Solver solver;
};

// Every (rule family, query) pair with its solver; pairs without a
// polynomial algorithm map to the oracle.
std::vector<DispatchEntry> dispatch_table();
Solver solver_for(const RuleSpec& rule, QueryKind query);

struct QueryAnswer {
  bool answer = false;
  Solver solver = Solver::kOracle;
  // Extension where c wins (true PW/PcW) or does not (false NW/NcW).
  std::optional<LinearProfile> witness;
  std::optional<int> rival;
  std::optional<int> rival2;
  std::optional<int> k;
  std::optional<RunoffCertificate> certificate;
  std::uint64_t nodes = 0;
};

QueryAnswer run_query(const PosetProfile& p, const RuleSpec& rule, int c,
                      QueryKind query, const OracleOptions& opt = {});

}  // namespace ppw

#endif  // PPW_DISPATCH_H_
