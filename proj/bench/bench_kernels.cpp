// Serial reference against the OpenMP path for each parallel kernel.

#include "bbwtilt/sheafcoh/cohomology.hpp"
#include "bbwtilt/tensorcalc/expr.hpp"
#include "bbwtilt/tiltproof/verify.hpp"

#include <benchmark/benchmark.h>

using namespace bbwtilt;

namespace {

const tiltproof::Registry& reg() {
    static const auto r = tiltproof::Registry::load(BBWTILT_DEFAULT_REGISTRY);
    return r;
}

Exec exec_of(const benchmark::State& st) { return st.range(0) ? Exec::Parallel : Exec::Serial; }

void BM_CohomologyTotal(benchmark::State& st) {
    const auto e = tensorcalc::parse_expr("S * S * Sv * O(-1)");
    for (auto _ : st) benchmark::DoNotOptimize(sheafcoh::cohomology_total(e, sheafcoh::Space::XPlus, st.range(1), exec_of(st)));
    st.SetLabel(st.range(0) ? "parallel" : "serial");
}
BENCHMARK(BM_CohomologyTotal)->ArgsProduct({{0, 1}, {20, 60}})->Unit(benchmark::kMillisecond);

void BM_Collection(benchmark::State& st) {
    std::vector<tensorcalc::BundleExpr> bs;
    for (const auto& m : reg().find_claim("collection.first")->members) bs.push_back(tensorcalc::parse_expr(m));
    for (auto _ : st) benchmark::DoNotOptimize(tiltproof::verify_collection(bs, "collection.first", exec_of(st)));
    st.SetLabel(st.range(0) ? "parallel" : "serial");
}
BENCHMARK(BM_Collection)->Arg(0)->Arg(1)->Unit(benchmark::kMicrosecond);

void BM_GradedHom(benchmark::State& st) {
    std::vector<tiltproof::Summand> ss;
    for (const auto& m : reg().find_claim("tilting.Tplus.sharp")->members) ss.push_back(reg().summand(m));
    for (auto _ : st)
        benchmark::DoNotOptimize(tiltproof::graded_hom(reg(), ss, sheafcoh::Space::XPlus, st.range(1), exec_of(st)));
    st.SetLabel(st.range(0) ? "parallel" : "serial");
}
BENCHMARK(BM_GradedHom)->ArgsProduct({{0, 1}, {7, 19}})->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
