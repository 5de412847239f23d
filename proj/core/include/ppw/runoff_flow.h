#ifndef PPW_RUNOFF_FLOW_H_
#define PPW_RUNOFF_FLOW_H_

#include <optional>
#include <vector>

#include "ppw/nw.h"
#include "ppw/profile.h"

namespace ppw {

// Alternatives with nothing strictly above them.
AltSet top_set(const PartialOrder& o);

struct FlowEdge {
  int from = 0;
  int to = 0;
  int cap = 0;
};

// Node layout: source, one node per ballot, the rival's shadow node, one node
// per alternative, the pooled sink t', the sink.
struct FlowNetwork {
  int n = 0;
  int m = 0;
  int candidate = 0;
  int rival = 0;
  int l1 = 0;
  int l2 = 0;
  std::vector<FlowEdge> edges;

  int source() const { return 0; }
  int ballot_node(int j) const { return 1 + j; }
  int shadow_node() const { return 1 + n; }
  int alt_node(int a) const { return 2 + n + a; }
  int pool_node() const { return 2 + n + m; }
  int sink() const { return 3 + n + m; }
  int node_count() const { return 4 + n + m; }
};

struct FlowResult {
  int value = 0;
  std::vector<int> flow;  // per edge, integral
};

// Number of ballots that force the rival above c.
int rival_lead(const PosetProfile& p, int c, int rival);

// Throws RivalDominates when 2 * rival_lead > n and CapacityNegative when
// l1 + l2 > n.
FlowNetwork build_flow(const PosetProfile& p, int c, int rival, int l1, int l2);

// Shortest augmenting paths.
FlowResult max_flow(const FlowNetwork& net);

struct RunoffCertificate {
  int rival = 0;
  int l1 = 0;
  int l2 = 0;
  std::vector<int> tops;  // top alternative chosen for each ballot
  LinearProfile extension;
};

// Requires a flow of value n. Each ballot puts its selected alternative on
// top and then ranks c as high as it can.
RunoffCertificate decode_flow(const PosetProfile& p, const FlowNetwork& net,
                              const FlowResult& f);

struct PcwResult {
  bool possible = false;
  std::optional<RunoffCertificate> certificate;

  explicit operator bool() const { return possible; }
};

PcwResult pcw_plurality_runoff(const PosetProfile& p, int c);
// c is the necessary unique winner iff no other alternative is a possible
// co-winner; a failing rival comes with its certificate.
NwResult nw_plurality_runoff(const PosetProfile& p, int c,
                             std::optional<RunoffCertificate>* why = nullptr);

}  // namespace ppw

#endif  // PPW_RUNOFF_FLOW_H_
