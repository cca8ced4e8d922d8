/*
Copyright 2026 The galois-lines Authors.

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

#include <benchmark/benchmark.h>

#include "datasets.hpp"
#include "galois/group.hpp"
#include "galois/scan.hpp"

using namespace galois;
namespace ds = galois::datasets;

namespace {

std::vector<ProjTransform> bring_proj_generators() {
    std::vector<ProjTransform> out;
    for (const auto& m : ds::bring_generators(ds::bring_field())) {
        out.emplace_back(m);
    }
    return out;
}

void BM_Closure120(benchmark::State& state) {
    const auto gens = bring_proj_generators();
    for (auto _ : state) {
        benchmark::DoNotOptimize(FiniteMatrixGroup::close(gens));
    }
}
BENCHMARK(BM_Closure120)->Unit(benchmark::kMillisecond);

void BM_SubgroupEnumeration(benchmark::State& state) {
    const auto group = FiniteMatrixGroup::close(bring_proj_generators());
    for (auto _ : state) {
        benchmark::DoNotOptimize(enumerate_s3_subgroups(group));
        benchmark::DoNotOptimize(enumerate_k4_subgroups(group));
    }
}
BENCHMARK(BM_SubgroupEnumeration)->Unit(benchmark::kMillisecond);

void BM_LineStabilizer(benchmark::State& state) {
    const auto field = ds::bring_field();
    const CurveModel curve = ds::bring_curve(field);
    const auto group = FiniteMatrixGroup::close(bring_proj_generators());
    const ProjLine l = ds::bring_s3_lines(field).front();
    for (auto _ : state) {
        benchmark::DoNotOptimize(line_stabilizer(l, group, curve));
    }
}
BENCHMARK(BM_LineStabilizer)->Unit(benchmark::kMillisecond);

void BM_FullScan(benchmark::State& state) {
    const auto field = ds::bring_field();
    const CurveModel curve = ds::bring_curve(field);
    const auto group = FiniteMatrixGroup::close(bring_proj_generators());
    ScanOptions opt;
    opt.s3 = true;
    opt.k4 = true;
    for (auto _ : state) {
        benchmark::DoNotOptimize(find_galois_lines(curve, group, opt));
    }
}
BENCHMARK(BM_FullScan)->Unit(benchmark::kMillisecond)->Iterations(1);

void BM_RhoFamily(benchmark::State& state) {
    const auto field = ds::trigonal_field();
    const CycloNum zero = CycloNum::zero(field);
    for (auto _ : state) {
        benchmark::DoNotOptimize(two_trigonal_rho_candidates(zero));
    }
}
BENCHMARK(BM_RhoFamily)->Unit(benchmark::kMicrosecond);

} // namespace

BENCHMARK_MAIN();
