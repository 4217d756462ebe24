/*
 * Copyright 2026 The flowbo Authors
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

#ifndef FLOWBO_COMMON_HPP
#define FLOWBO_COMMON_HPP

#include <Eigen/Dense>

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

namespace flowbo {

using Eigen::Index;
using Mat = Eigen::MatrixXd;
using Vec = Eigen::VectorXd;
using Rng = std::mt19937_64;

/// Rejected argument (non-finite input, inconsistent sizes, bad weights, ...).
struct InvalidInput : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Covariance matrix could not be factorised even after jitter escalation.
struct IllConditionedKernel : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// ODE state became non-finite; `time` is when the blow-up was detected.
struct IntegrationDiverged : std::runtime_error {
  double time;
  explicit IntegrationDiverged(double t)
      : std::runtime_error("trajectory diverged at t=" + std::to_string(t)), time(t) {}
};

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace detail

/// Deterministically derives an independent RNG stream from a master seed
/// and up to three stream labels. Used so that runs, iterations and
/// individual evaluations get reproducible streams regardless of execution
/// order.
inline Rng derive_rng(std::uint64_t seed, std::uint64_t a = 0, std::uint64_t b = 0,
                      std::uint64_t c = 0) {
  std::uint64_t s = detail::splitmix64(seed);
  s = detail::splitmix64(s ^ detail::splitmix64(a));
  s = detail::splitmix64(s ^ detail::splitmix64(b));
  s = detail::splitmix64(s ^ detail::splitmix64(c));
  return Rng(s);
}

}  // namespace flowbo

#endif  // FLOWBO_COMMON_HPP
