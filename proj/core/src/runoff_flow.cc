#include "ppw/runoff_flow.h"

#include <algorithm>
#include <limits>
#include <queue>

#include "ppw/errors.h"

namespace ppw {

AltSet top_set(const PartialOrder& o) {
  AltSet out;
  for (int a = 0; a < o.m(); ++a) {
    bool top = true;
    for (int b = 0; b < o.m() && top; ++b)
      if (o.dominates(b, a)) top = false;
    if (top) out.push_back(a);
  }
  return out;
}

int rival_lead(const PosetProfile& p, int c, int rival) {
  int alpha = 0;
  for (const auto& o : p.ballots())
    if (o.dominates(rival, c)) ++alpha;
  return alpha;
}

FlowNetwork build_flow(const PosetProfile& p, int c, int rival, int l1, int l2) {
  int n = p.n(), m = p.m();
  if (c < 0 || c >= m || rival < 0 || rival >= m) throw Error("alternative out of range");
  if (c == rival) throw SamePair("rival must differ from the candidate");
  if (l1 < 0 || l2 < 0 || l1 > n || l2 > n) throw Error("tallies must lie in [0, n]");
  int alpha = rival_lead(p, c, rival);
  if (2 * alpha > n) throw RivalDominates("rival is forced above c in a majority");
  if (n - l1 - l2 < 0) throw CapacityNegative("l1 + l2 exceeds n");

  FlowNetwork net;
  net.n = n;
  net.m = m;
  net.candidate = c;
  net.rival = rival;
  net.l1 = l1;
  net.l2 = l2;
  auto add = [&](int u, int v, int cap) { net.edges.push_back({u, v, cap}); };
  for (int j = 0; j < n; ++j) add(net.source(), net.ballot_node(j), 1);
  for (int j = 0; j < n; ++j) {
    const PartialOrder& o = p.ballot(j);
    for (int d : top_set(o)) {
      if (d != rival)
        add(net.ballot_node(j), net.alt_node(d), 1);
      else if (o.dominates(rival, c))
        add(net.ballot_node(j), net.alt_node(rival), 1);
      else
        add(net.ballot_node(j), net.shadow_node(), 1);
    }
  }
  add(net.shadow_node(), net.alt_node(rival), n / 2 - alpha);
  for (int d = 0; d < m; ++d)
    if (d != c && d != rival) add(net.alt_node(d), net.pool_node(), std::min(l1, l2));
  add(net.alt_node(c), net.sink(), l1);
  add(net.alt_node(rival), net.sink(), l2);
  add(net.pool_node(), net.sink(), n - l1 - l2);
  return net;
}

FlowResult max_flow(const FlowNetwork& net) {
  int nodes = net.node_count();
  int e = static_cast<int>(net.edges.size());
  // Residual arcs: 2i forward, 2i + 1 backward.
  std::vector<int> cap(2 * e), to(2 * e);
  std::vector<std::vector<int>> adj(nodes);
  for (int i = 0; i < e; ++i) {
    const auto& ed = net.edges[i];
    cap[2 * i] = ed.cap;
    cap[2 * i + 1] = 0;
    to[2 * i] = ed.to;
    to[2 * i + 1] = ed.from;
    adj[ed.from].push_back(2 * i);
    adj[ed.to].push_back(2 * i + 1);
  }
  FlowResult res;
  int s = net.source(), t = net.sink();
  while (true) {
    std::vector<int> via(nodes, -1);
    std::queue<int> bfs;
    bfs.push(s);
    std::vector<char> seen(nodes, 0);
    seen[s] = 1;
    while (!bfs.empty() && !seen[t]) {
      int u = bfs.front();
      bfs.pop();
      for (int a : adj[u])
        if (cap[a] > 0 && !seen[to[a]]) {
          seen[to[a]] = 1;
          via[to[a]] = a;
          bfs.push(to[a]);
        }
    }
    if (!seen[t]) break;
    int push = std::numeric_limits<int>::max();
    for (int v = t; v != s; v = to[via[v] ^ 1]) push = std::min(push, cap[via[v]]);
    for (int v = t; v != s; v = to[via[v] ^ 1]) {
      cap[via[v]] -= push;
      cap[via[v] ^ 1] += push;
    }
    res.value += push;
  }
  res.flow.resize(e);
  for (int i = 0; i < e; ++i) res.flow[i] = cap[2 * i + 1];
  return res;
}

RunoffCertificate decode_flow(const PosetProfile& p, const FlowNetwork& net,
                              const FlowResult& f) {
  if (f.value != net.n) throw Error("flow does not saturate every ballot");
  int m = p.m(), c = net.candidate;
  RunoffCertificate cert{net.rival, net.l1, net.l2, std::vector<int>(net.n, -1),
                         LinearProfile{m, {}}};
  for (size_t i = 0; i < net.edges.size(); ++i) {
    const auto& ed = net.edges[i];
    if (f.flow[i] == 0 || ed.from < net.ballot_node(0) || ed.from >= net.shadow_node())
      continue;
    int j = ed.from - net.ballot_node(0);
    cert.tops[j] = ed.to == net.shadow_node() ? net.rival : ed.to - net.alt_node(0);
  }
  for (int j = 0; j < net.n; ++j) {
    int x = cert.tops[j];
    const PartialOrder& o = p.ballot(j);
    AltSet up = up_set(o, c);
    std::vector<Pair> pairs = o.pairs();
    for (int y = 0; y < m; ++y)
      if (y != x) pairs.emplace_back(x, y);
    for (int u : up)
      for (int z = 0; z < m; ++z)
        if (u != x && z != x && !contains(up, z)) pairs.emplace_back(u, z);
    // Pairs outside c's up-set may stay free; any completion will do.
    LinearOrder v;
    for_each_linear_extension(transitive_close(pairs, m), [&](const LinearOrder& e) {
      v = e;
      return false;
    });
    cert.extension.votes.push_back(v);
  }
  return cert;
}

PcwResult pcw_plurality_runoff(const PosetProfile& p, int c) {
  int n = p.n(), m = p.m();
  if (m < 2) throw Error("plurality with runoff needs two alternatives");
  PcwResult out;
  for (int rival = 0; rival < m; ++rival) {
    if (rival == c || 2 * rival_lead(p, c, rival) > n) continue;
    for (int l1 = n; l1 >= 0; --l1)
      for (int l2 = 0; l1 + l2 <= n; ++l2) {
        FlowNetwork net = build_flow(p, c, rival, l1, l2);
        FlowResult f = max_flow(net);
        if (f.value == n) {
          out.possible = true;
          out.certificate = decode_flow(p, net, f);
          return out;
        }
      }
  }
  return out;
}

NwResult nw_plurality_runoff(const PosetProfile& p, int c,
                             std::optional<RunoffCertificate>* why) {
  NwResult out;
  for (int d = 0; d < p.m(); ++d) {
    if (d == c) continue;
    PcwResult r = pcw_plurality_runoff(p, d);
    if (r.possible) {
      out.necessary = false;
      out.rival = d;
      if (why) *why = r.certificate;
      return out;
    }
  }
  return out;
}

}  // namespace ppw
