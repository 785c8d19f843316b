// Microbenchmarks for the hot paths: sieving, factoring, symbol computation,
// the good-D scan, the decision pipeline, and the reduction verifier.

#include <benchmark/benchmark.h>

#include "egr/arith.hpp"
#include "egr/construct.hpp"
#include "egr/curves.hpp"
#include "egr/density.hpp"
#include "egr/reduction.hpp"
#include "egr/setzer.hpp"

using namespace egr;

namespace {

const GoodDTable& shared_table() {
    static const GoodDTable table = scan_good_d(100);
    return table;
}

const CurveModel& witness_6() {
    static const CurveModel E = [] {
        EgrVerdict v = decide_full(6, shared_table());
        return *v.witness->curve;
    }();
    return E;
}

void BM_sieve_primes(benchmark::State& state) {
    for (auto _ : state) {
        auto primes = sieve_primes(static_cast<std::uint64_t>(state.range(0)));
        benchmark::DoNotOptimize(primes.data());
    }
}
BENCHMARK(BM_sieve_primes)->Arg(100000)->Arg(1000000);

void BM_factor_scan_unit(benchmark::State& state) {
    // one work unit of the good-D scan near the default bound
    mpz_class A(9999);
    mpz_class n = A * A * A - 1728;
    for (auto _ : state) {
        Factorization f = factor(n);
        benchmark::DoNotOptimize(f.factors.data());
    }
}
BENCHMARK(BM_factor_scan_unit);

void BM_kronecker(benchmark::State& state) {
    mpz_class a("123456789012345678901234567");
    mpz_class n("987654321098765432109876543");
    for (auto _ : state) benchmark::DoNotOptimize(kronecker(a, n));
}
BENCHMARK(BM_kronecker);

void BM_scan_good_d(benchmark::State& state) {
    for (auto _ : state) {
        GoodDTable t = scan_good_d(state.range(0));
        benchmark::DoNotOptimize(t.size());
    }
}
BENCHMARK(BM_scan_good_d)->Arg(40)->Arg(200);

void BM_decide_no_witness(benchmark::State& state) {
    const GoodDTable& table = shared_table();
    for (auto _ : state) {
        EgrVerdict v = decide(65, table);
        benchmark::DoNotOptimize(v.status);
    }
}
BENCHMARK(BM_decide_no_witness);

void BM_decide_full_pipeline(benchmark::State& state) {
    const GoodDTable& table = shared_table();
    for (auto _ : state) {
        EgrVerdict v = decide_full(6, table);
        benchmark::DoNotOptimize(v.status);
    }
}
BENCHMARK(BM_decide_full_pipeline);

void BM_verify_egr(benchmark::State& state) {
    const CurveModel& E = witness_6();
    for (auto _ : state) {
        auto [ok, rows] = verify_egr(E);
        benchmark::DoNotOptimize(ok);
        benchmark::DoNotOptimize(rows.data());
    }
}
BENCHMARK(BM_verify_egr);

void BM_tate_wild_prime(benchmark::State& state) {
    const CurveModel& E = witness_6();
    CurveModel M = E.rescaled(E.denominator_lcm());
    PrimeIdeal P2 = split_prime(M.field(), 2).front();
    for (auto _ : state) {
        LocalReduction r = tate_full(M, P2);
        benchmark::DoNotOptimize(r.v_min_delta);
    }
}
BENCHMARK(BM_tate_wild_prime);

void BM_count_family(benchmark::State& state) {
    FamilySpec spec = family_for(2);
    for (auto _ : state) {
        CountReport rep = count_family(spec, static_cast<std::uint64_t>(state.range(0)));
        benchmark::DoNotOptimize(rep.counts.data());
    }
}
BENCHMARK(BM_count_family)->Arg(100000)->Arg(1000000);

}  // namespace

BENCHMARK_MAIN();
