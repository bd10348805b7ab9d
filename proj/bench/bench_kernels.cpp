// Serial reference vs OpenMP kernels on the hot loops: exhaustive triple
// scans (associativity, brace identity) and regular-subgroup search.
#include <benchmark/benchmark.h>

#include "skewalg/atlas.hpp"
#include "skewalg/kernels.hpp"

using namespace skewalg;

namespace {

const skb::SkewBrace& b24() {
  static const auto b = atlas::build_b24().brace;
  return b;
}

auto brace_identity(const skb::SkewBrace& b) {
  return [&b](Element x, Element y, Element z) {
    return b.mul(x, b.add(y, z)) == b.add(b.sub(b.mul(x, y), x), b.mul(x, z));
  };
}

const grp::FiniteGroup& big_group() {
  static const auto g = grp::direct_product(grp::symmetric_group(4), grp::cyclic_group(3));
  return g;
}

auto associativity(const grp::FiniteGroup& g) {
  return [&g](Element a, Element b, Element c) { return g.op(g.op(a, b), c) == g.op(a, g.op(b, c)); };
}

void BM_BraceIdentitySerial(benchmark::State& s) {
  for (auto _ : s) benchmark::DoNotOptimize(kernels::first_failing_triple_serial(24, brace_identity(b24())));
}
void BM_BraceIdentityParallel(benchmark::State& s) {
  for (auto _ : s) benchmark::DoNotOptimize(kernels::first_failing_triple_parallel(24, brace_identity(b24())));
}
void BM_AssociativitySerial(benchmark::State& s) {
  for (auto _ : s) benchmark::DoNotOptimize(kernels::first_failing_triple_serial(72, associativity(big_group())));
}
void BM_AssociativityParallel(benchmark::State& s) {
  for (auto _ : s) benchmark::DoNotOptimize(kernels::first_failing_triple_parallel(72, associativity(big_group())));
}

const grp::Holomorph& hol_d8() {
  static const auto h = grp::holomorph(grp::dihedral_group(4));
  return h;
}

void BM_RegularSubgroupsSerial(benchmark::State& s) {
  for (auto _ : s) benchmark::DoNotOptimize(grp::regular_subgroups_serial(hol_d8().perm));
}
void BM_RegularSubgroupsParallel(benchmark::State& s) {
  for (auto _ : s) benchmark::DoNotOptimize(grp::regular_subgroups(hol_d8().perm));
}

}  // namespace

BENCHMARK(BM_BraceIdentitySerial);
BENCHMARK(BM_BraceIdentityParallel);
BENCHMARK(BM_AssociativitySerial);
BENCHMARK(BM_AssociativityParallel);
BENCHMARK(BM_RegularSubgroupsSerial);
BENCHMARK(BM_RegularSubgroupsParallel);

BENCHMARK_MAIN();
