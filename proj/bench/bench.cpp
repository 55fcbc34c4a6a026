// Copyright 2026 The qamp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Timing comparison of the OpenMP kernels against the serial reference:
// the amplifier map at several cutoffs, and a full sweep at one thread vs
// all threads. The parallel results must match the serial ones exactly.

#include <chrono>
#include <cstdio>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "qamp/channels.hpp"
#include "qamp/fock.hpp"
#include "qamp/pipeline.hpp"

using namespace qamp;
using clock_type = std::chrono::steady_clock;

namespace {

double seconds_since(clock_type::time_point start) {
  return std::chrono::duration<double>(clock_type::now() - start).count();
}

template <typename F>
double time_best_of(F&& f, int repeats) {
  double best = 1e30;
  for (int r = 0; r < repeats; ++r) {
    const auto t0 = clock_type::now();
    f();
    best = std::min(best, seconds_since(t0));
  }
  return best;
}

}  // namespace

int main() {
#ifdef _OPENMP
  const int threads = omp_get_max_threads();
#else
  const int threads = 1;
#endif
  std::printf("qamp kernel benchmark (%d thread(s))\n\n", threads);

  std::printf("%-28s %6s %12s %12s %9s %10s\n", "kernel", "dim", "serial [ms]", "openmp [ms]",
              "speedup", "max diff");
  for (int dim : {64, 96, 128, 192}) {
    NumericsPolicy policy;
    policy.dim = dim;
    const auto input = coherent_state(0.5, policy);
    const AmplifierParams params{2.0};

    FockDensityMatrix serial_out(dim), parallel_out(dim);
    const double t_serial =
        time_best_of([&] { serial_out = amplify_reference(input, params, policy); }, 3);
    const double t_parallel = time_best_of([&] { parallel_out = amplify(input, params, policy); }, 3);
    std::printf("%-28s %6d %12.3f %12.3f %8.2fx %10.2e\n", "amplify", dim, t_serial * 1e3,
                t_parallel * 1e3, t_serial / t_parallel,
                max_elementwise_diff(serial_out, parallel_out));
  }

  std::printf("\n");
  {
    SweepSpec spec;
    spec.base = DeviceConfig{DeviceKind::apa, 0.5, 1.0, 1, NumericsPolicy{}};
    spec.grid = linspace(1.0, 6.0, 51);

#ifdef _OPENMP
    omp_set_num_threads(1);
#endif
    std::vector<SweepRow> rows_serial;
    const double t_one = time_best_of([&] { rows_serial = sweep(spec); }, 1);
#ifdef _OPENMP
    omp_set_num_threads(threads);
#endif
    std::vector<SweepRow> rows_parallel;
    const double t_all = time_best_of([&] { rows_parallel = sweep(spec); }, 1);

    double diff = 0.0;
    for (std::size_t i = 0; i < rows_serial.size(); ++i)
      diff = std::max(diff,
                      std::abs(rows_serial[i].phase_variance - rows_parallel[i].phase_variance));
    std::printf("%-28s %6d %12.3f %12.3f %8.2fx %10.2e\n", "sweep apa M=1 (51 pts)", 64,
                t_one * 1e3, t_all * 1e3, t_one / t_all, diff);
  }
  return 0;
}
