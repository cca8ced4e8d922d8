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

#include <random>

#include "galois/matrix.hpp"

using namespace galois;

namespace {

CycloNum sample(const FieldPtr& field, std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-9, 9);
    std::vector<Rational> c;
    for (unsigned i = 0; i < field->degree(); ++i) {
        c.emplace_back(num(rng), 1 + (num(rng) & 3));
    }
    return CycloNum(field, std::move(c));
}

void BM_CycloMul(benchmark::State& state) {
    const auto field = CyclotomicField::create(static_cast<unsigned>(state.range(0)));
    std::mt19937_64 rng(7);
    const CycloNum a = sample(field, rng);
    const CycloNum b = sample(field, rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(a * b);
    }
}
BENCHMARK(BM_CycloMul)->Arg(3)->Arg(15)->Arg(60);

void BM_CycloInv(benchmark::State& state) {
    const auto field = CyclotomicField::create(static_cast<unsigned>(state.range(0)));
    std::mt19937_64 rng(7);
    CycloNum a = sample(field, rng);
    while (a.is_zero()) {
        a = sample(field, rng);
    }
    for (auto _ : state) {
        benchmark::DoNotOptimize(a.inverse());
    }
}
BENCHMARK(BM_CycloInv)->Arg(3)->Arg(15)->Arg(60);

void BM_Rref4x4(benchmark::State& state) {
    const auto field = CyclotomicField::create(static_cast<unsigned>(state.range(0)));
    std::mt19937_64 rng(7);
    Mat m(field, 4, 4);
    for (unsigned i = 0; i < 4; ++i) {
        for (unsigned j = 0; j < 4; ++j) {
            m.at(i, j) = sample(field, rng);
        }
    }
    for (auto _ : state) {
        benchmark::DoNotOptimize(rref(m));
    }
}
BENCHMARK(BM_Rref4x4)->Arg(15)->Arg(60);

void BM_CharPoly(benchmark::State& state) {
    const auto field = CyclotomicField::create(static_cast<unsigned>(state.range(0)));
    std::mt19937_64 rng(7);
    Mat m(field, 4, 4);
    for (unsigned i = 0; i < 4; ++i) {
        for (unsigned j = 0; j < 4; ++j) {
            m.at(i, j) = sample(field, rng);
        }
    }
    for (auto _ : state) {
        benchmark::DoNotOptimize(char_poly(m));
    }
}
BENCHMARK(BM_CharPoly)->Arg(15)->Arg(60);

} // namespace

BENCHMARK_MAIN();
