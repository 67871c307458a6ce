/*
 * Copyright 2026 The wittsum Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <benchmark/benchmark.h>

#include <fstream>
#include <random>
#include <sstream>
#include <vector>

#include "wittsum/cyclotomic.hpp"
#include "wittsum/exp_sum.hpp"
#include "wittsum/report.hpp"
#include "wittsum/witt.hpp"

namespace {

wittsum::SumSpec load(const char* name) {
  std::ifstream in(std::string(WITTSUM_BENCH_DATA_DIR) + "/" + name);
  std::stringstream buf;
  buf << in.rdbuf();
  return wittsum::parse_spec(buf.str());
}

void BM_CharSum(benchmark::State& state) {
  const auto spec = load("kloosterman_p3.json");
  const auto options = wittsum::engine_options_for(spec, 1);
  const auto k = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(wittsum::char_sum(spec, k, options));
}
BENCHMARK(BM_CharSum)->DenseRange(1, 6);

void BM_Resultant(benchmark::State& state) {
  const auto p = static_cast<std::uint32_t>(state.range(0));
  const auto m = static_cast<unsigned>(state.range(1));
  const auto phi = wittsum::cyclotomic_modulus(p, m);
  std::mt19937_64 gen(11);
  std::uniform_int_distribution<long> dist(-50, 50);
  std::vector<wittsum::Integer> a(phi.size() - 1);
  for (auto& c : a) c = dist(gen);
  a.back() = 1;
  for (auto _ : state) benchmark::DoNotOptimize(wittsum::resultant(a, phi));
}
BENCHMARK(BM_Resultant)->Args({3, 2})->Args({5, 2})->Args({3, 3})->Args({7, 2});

void BM_WittAdd(benchmark::State& state) {
  const auto m = static_cast<unsigned>(state.range(0));
  const auto field = wittsum::FiniteField::create(5, 2);
  std::mt19937_64 gen(5);
  std::uniform_int_distribution<std::int64_t> dist(0, 4);
  auto random_vector = [&] {
    std::vector<wittsum::FFElement> coords;
    for (unsigned i = 0; i < m; ++i) {
      const std::vector<std::int64_t> c{dist(gen), dist(gen)};
      coords.push_back(field->element(c));
    }
    return wittsum::WittVector(std::move(coords));
  };
  const auto x = random_vector();
  const auto y = random_vector();
  wittsum::WittUniversalPolys::get(5, m);
  for (auto _ : state) benchmark::DoNotOptimize(wittsum::witt_add(x, y));
}
BENCHMARK(BM_WittAdd)->DenseRange(1, 3);

}  // namespace

BENCHMARK_MAIN();
