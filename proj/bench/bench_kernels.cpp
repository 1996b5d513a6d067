/*
   Copyright 2026 The ffdescent Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// Integral point enumeration: unsieved reference scan, sieved serial kernel
// and the OpenMP sieved kernel on y^2 = x^3 + t x + 1 over F_7. A second
// group times the batched 3-torsion witness construction.

#include <benchmark/benchmark.h>

#include "ffdescent/jacobian.hpp"
#include "ffdescent/points.hpp"
#include "ffdescent/torsion_maps.hpp"

namespace {

using namespace ffd;

HyperellipticModel curve() {
    const GF& K = GF::get(7);
    return validate_model(K, {RatFunc(Poly::constant(K, 1)), RatFunc(Poly::x(K)), RatFunc(Poly(K)),
                              RatFunc(Poly::constant(K, 1))});
}

void BM_EnumReference(benchmark::State& st) {
    const HyperellipticModel m = curve();
    const int c = static_cast<int>(st.range(0));
    for (auto _ : st) benchmark::DoNotOptimize(enum_integral_reference(m, c, 1e12));
}

void BM_EnumSieved(benchmark::State& st) {
    const HyperellipticModel m = curve();
    const int c = static_cast<int>(st.range(0));
    const EnumOptions opt{1e12, st.range(1) != 0};
    EnumStats stats;
    for (auto _ : st) benchmark::DoNotOptimize(enum_integral(m, c, opt, &stats));
    st.counters["candidates"] = stats.candidates;
    st.counters["survivors"] = static_cast<double>(stats.survivors);
}

void BM_ThreeTorsionWitnesses(benchmark::State& st) {
    const GF& K = GF::get(5);
    const Poly F = Poly::from_ints(K, {1, 3, 4, 2, 1, 0, 3, 1});
    const HyperellipticJacobian J(F);
    std::vector<MumfordDivisor> tors;
    for (const auto& a : J.enumerate_group())
        if (!a.is_zero() && J.mul(3, a).is_zero()) tors.push_back(a);
    for (auto _ : st) benchmark::DoNotOptimize(three_torsion_witnesses(F, tors, st.range(0) != 0));
}

}  // namespace

BENCHMARK(BM_EnumReference)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EnumSieved)->ArgsProduct({{4, 6, 8}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ThreeTorsionWitnesses)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
