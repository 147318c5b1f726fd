// Copyright 2026 The birkhoff Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Compares the serial reference against the OpenMP kernel in the two regimes
// that matter here: one large dense rational elimination (row updates spread
// over threads) and a batch of small certifications (instances spread over
// threads, serial kernel inside).

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "birkhoff/certificate.hpp"
#include "birkhoff/duality.hpp"
#include "birkhoff/elimination.hpp"

using namespace birkhoff;

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

RationalMatrix dense_system(int d) {
  // One derivative constraint of small order per knot, d+1 distinct rational
  // knots: a confluent Vandermonde-style system whose exact elimination grows
  // fractions quickly, which is the expensive path worth parallelizing.
  InterpolationMatrix e(d + 1, d + 1);
  std::vector<Rational> knots;
  for (int i = 0; i <= d; ++i) {
    e.set(i, i % 3);
    knots.emplace_back(2 * i + 1, (i % 5) + 1);
  }
  return build_system(Problem(std::move(e), KnotSet(std::move(knots)))).entries();
}

std::vector<PowerFamily> instance_batch(int count) {
  std::mt19937_64 rng(12345);
  std::vector<PowerFamily> batch;
  std::uniform_int_distribution<int> shift(-9, 9);
  while (static_cast<int>(batch.size()) < count) {
    const int d = 28 + static_cast<int>(batch.size()) % 9;
    std::uniform_int_distribution<int> exponent(0, d);
    std::set<std::pair<int, int>> seen;
    std::uniform_int_distribution<int> size(d / 3, d + 1);
    const int want = size(rng);
    while (static_cast<int>(seen.size()) < want) seen.emplace(shift(rng), exponent(rng));
    std::vector<ShiftedPower> terms;
    for (const auto& [a, ex] : seen) terms.push_back({Rational(a), ex});
    batch.emplace_back(std::move(terms), d);
  }
  return batch;
}

}  // namespace

int main(int argc, char** argv) {
  int dense_degree = 90;
  int batch_size = 400;
  if (argc > 1) dense_degree = std::atoi(argv[1]);
  if (argc > 2) batch_size = std::atoi(argv[2]);

  std::printf("threads available: %d\n\n", omp_get_max_threads());

  {
    const RationalMatrix m = dense_system(dense_degree);
    std::printf("dense elimination, %zu x %zu rational system\n", m.size(), m.front().size());

    auto start = std::chrono::steady_clock::now();
    const RowReduction reference = row_reduce_serial_reference(m);
    const double reference_time = seconds_since(start);
    std::printf("  plain-loop reference: %.3fs (rank %d)\n", reference_time, reference.rank);

    start = std::chrono::steady_clock::now();
    const RowReduction serial = row_reduce(m, Exec::serial);
    const double serial_time = seconds_since(start);
    std::printf("  kernel, serial:       %.3fs (rank %d)\n", serial_time, serial.rank);

    start = std::chrono::steady_clock::now();
    const RowReduction parallel = row_reduce(m, Exec::parallel);
    const double parallel_time = seconds_since(start);
    std::printf("  kernel, OpenMP:       %.3fs (rank %d)\n", parallel_time, parallel.rank);

    const bool agree = reference.rref == parallel.rref && serial.rref == parallel.rref;
    std::printf("  outputs identical: %s\n", agree ? "yes" : "NO");
    std::printf("  speedup over serial kernel: %.2fx\n\n", serial_time / parallel_time);
    if (!agree) return 1;
  }

  {
    const std::vector<PowerFamily> batch = instance_batch(batch_size);
    std::printf("certification batch, %zu families\n", batch.size());

    std::vector<char> serial_verdicts(batch.size()), parallel_verdicts(batch.size());

    auto start = std::chrono::steady_clock::now();
    for (size_t i = 0; i < batch.size(); ++i) {
      serial_verdicts[i] = certify_regular(to_dual(batch[i]).problem, Exec::serial).regular() ? 1 : 0;
    }
    const double serial_time = seconds_since(start);
    std::printf("  serial loop:      %.3fs\n", serial_time);

    start = std::chrono::steady_clock::now();
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < static_cast<long>(batch.size()); ++i) {
      parallel_verdicts[static_cast<size_t>(i)] =
          certify_regular(to_dual(batch[static_cast<size_t>(i)]).problem, Exec::serial).regular() ? 1 : 0;
    }
    const double parallel_time = seconds_since(start);
    std::printf("  OpenMP over instances: %.3fs\n", parallel_time);

    const bool agree = serial_verdicts == parallel_verdicts;
    std::printf("  verdicts identical: %s\n", agree ? "yes" : "NO");
    std::printf("  speedup: %.2fx\n", serial_time / parallel_time);
    if (!agree) return 1;
  }
  return 0;
}
