#include <benchmark/benchmark.h>

#include "ppw/mcgarvey.h"
#include "ppw/nw.h"
#include "ppw/oracle.h"
#include "ppw/reductions.h"
#include "ppw/runoff_flow.h"
#include "support/testgen.h"

using namespace ppw;

namespace {

PosetProfile profile(int m, int n, int removed, std::uint64_t seed = 7) {
  testing::Rng rng(seed);
  return testing::random_profile(rng, m, n, removed);
}

void BM_OracleBorda(benchmark::State& st) {
  PosetProfile p = profile(5, static_cast<int>(st.range(0)), 4);
  for (auto _ : st)
    benchmark::DoNotOptimize(oracle_query(p, RuleSpec::borda(), 0, QueryKind::kNW).answer);
}
BENCHMARK(BM_OracleBorda)->Arg(2)->Arg(4)->Arg(6);

void BM_OracleNaiveBorda(benchmark::State& st) {
  PosetProfile p = profile(5, static_cast<int>(st.range(0)), 4);
  for (auto _ : st)
    benchmark::DoNotOptimize(oracle_query_naive(p, RuleSpec::borda(), 0, QueryKind::kNW).answer);
}
BENCHMARK(BM_OracleNaiveBorda)->Arg(2)->Arg(4);

void BM_PositionalNw(benchmark::State& st) {
  int m = static_cast<int>(st.range(0));
  PosetProfile p = profile(m, 200, m * 2);
  std::vector<int> v = RuleSpec::borda().scoring_vector(m);
  for (auto _ : st) benchmark::DoNotOptimize(nw_positional(v, {&p, 0, Strictness::kUnique}).necessary);
}
BENCHMARK(BM_PositionalNw)->Arg(8)->Arg(32);

void BM_MaximinNw(benchmark::State& st) {
  int m = static_cast<int>(st.range(0));
  PosetProfile p = profile(m, 200, m * 2);
  for (auto _ : st) benchmark::DoNotOptimize(nw_maximin({&p, 0, Strictness::kUnique}).necessary);
}
BENCHMARK(BM_MaximinNw)->Arg(8)->Arg(32);

void BM_BucklinNw(benchmark::State& st) {
  int m = static_cast<int>(st.range(0));
  PosetProfile p = profile(m, 200, m * 2);
  for (auto _ : st) benchmark::DoNotOptimize(nw_bucklin({&p, 0, Strictness::kCo}).necessary);
}
BENCHMARK(BM_BucklinNw)->Arg(8)->Arg(32);

void BM_RunoffFlowPcw(benchmark::State& st) {
  int n = static_cast<int>(st.range(0));
  PosetProfile p = profile(8, n, 12);
  for (auto _ : st) benchmark::DoNotOptimize(pcw_plurality_runoff(p, 0).possible);
}
BENCHMARK(BM_RunoffFlowPcw)->Arg(20)->Arg(100);

void BM_McGarvey(benchmark::State& st) {
  int m = static_cast<int>(st.range(0));
  testing::Rng rng(9);
  LinearProfile src = testing::random_linear_profile(rng, m, 15);
  TargetDiffs t = TargetDiffs::from_matrix(pairwise_matrix(src));
  for (auto _ : st) benchmark::DoNotOptimize(synthesize_diffs({m, {}}, t).votes.size());
}
BENCHMARK(BM_McGarvey)->Arg(5)->Arg(20);

X3CInstance chain_instance(int q) {
  X3CInstance x{q, {}};
  for (int i = 0; i + 2 < q; ++i) x.sets.push_back({i, i + 1, i + 2});
  return x;
}

void BM_GenMaximin(benchmark::State& st) {
  X3CInstance x = chain_instance(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(gen_maximin(x, QueryKind::kPW).profile.n());
}
BENCHMARK(BM_GenMaximin)->Arg(9)->Arg(30);

void BM_GenCopeland(benchmark::State& st) {
  X3CInstance x = chain_instance(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(gen_copeland(x, QueryKind::kPW).profile.n());
}
BENCHMARK(BM_GenCopeland)->Arg(9)->Arg(18);

void BM_GenBorda(benchmark::State& st) {
  X3CInstance x = chain_instance(static_cast<int>(st.range(0)));
  for (auto _ : st)
    benchmark::DoNotOptimize(gen_scoring_pw(x, RuleSpec::borda(), QueryKind::kPW).profile.n());
}
BENCHMARK(BM_GenBorda)->Arg(9)->Arg(18);

}  // namespace

BENCHMARK_MAIN();
