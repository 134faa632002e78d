// Copyright 2026 The nhqc authors
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

#pragma once

#include <cstddef>
#include <limits>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace nhqc::par {

/// Execution policy for fan-out loops over independent evaluations (time-grid
/// points, tomography inputs, sweep points). Results must not depend on the
/// policy: bodies write disjoint output slots and the only reduction offered
/// is max, which is order-independent.
enum class Exec { serial, openmp };

inline Exec default_exec() {
#ifdef _OPENMP
  return Exec::openmp;
#else
  return Exec::serial;
#endif
}

inline int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

/// Runs body(i) for i in [0, n). Iterations must be independent and must not
/// throw when exec == openmp.
template <typename Body>
void for_index(Exec exec, std::ptrdiff_t n, const Body& body) {
#ifdef _OPENMP
  if (exec == Exec::openmp) {
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
      body(i);
    }
    return;
  }
#else
  (void)exec;
#endif
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    body(i);
  }
}

/// max of f(i) over [0, n); returns -inf for n == 0.
template <typename Fn>
double max_index(Exec exec, std::ptrdiff_t n, const Fn& f) {
  double result = -std::numeric_limits<double>::infinity();
#ifdef _OPENMP
  if (exec == Exec::openmp) {
#pragma omp parallel for schedule(static) reduction(max : result)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
      const double v = f(i);
      if (v > result) result = v;
    }
    return result;
  }
#else
  (void)exec;
#endif
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const double v = f(i);
    if (v > result) result = v;
  }
  return result;
}

}  // namespace nhqc::par
