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

#ifndef FLOWBO_KERNELS_HPP
#define FLOWBO_KERNELS_HPP

#include "flowbo/common.hpp"

#include <cmath>

namespace flowbo {

/// Matern 5/2 hyperparameters. The white-noise variance is an additive
/// observation-noise term; it only ever enters the training Gram diagonal,
/// never cross-covariances.
struct KernelParams {
  double amplitude = 1.0;       // signal variance sigma^2
  double lengthscale = 1.0;     // isotropic l
  double noise_variance = 0.0;  // sigma_n^2

  void validate() const {
    if (!(amplitude > 0.0) || !std::isfinite(amplitude))
      throw InvalidInput("KernelParams: amplitude must be positive and finite");
    if (!(lengthscale > 0.0) || !std::isfinite(lengthscale))
      throw InvalidInput("KernelParams: lengthscale must be positive and finite");
    if (!(noise_variance >= 0.0) || !std::isfinite(noise_variance))
      throw InvalidInput("KernelParams: noise_variance must be non-negative and finite");
  }
};

namespace detail {

inline constexpr double kSqrt5 = 2.23606797749978969640917366873;

template <typename Derived>
bool all_finite(const Eigen::MatrixBase<Derived>& x) {
  return x.allFinite();
}

}  // namespace detail

/// k(x, y) = s2 * (1 + sqrt5 r/l + 5 r^2 / (3 l^2)) * exp(-sqrt5 r/l),  r = |x - y|.
template <typename DerivedA, typename DerivedB>
double matern52_eval(const Eigen::MatrixBase<DerivedA>& x, const Eigen::MatrixBase<DerivedB>& y,
                     const KernelParams& p) {
  if (x.size() != y.size()) throw InvalidInput("matern52_eval: dimension mismatch");
  if (!detail::all_finite(x) || !detail::all_finite(y))
    throw InvalidInput("matern52_eval: non-finite input point");
  const double r = (x - y).norm();
  const double z = detail::kSqrt5 * r / p.lengthscale;
  return p.amplitude * (1.0 + z + z * z / 3.0) * std::exp(-z);
}

struct KernelDerivatives {
  Vec grad_y;   // dk/dy, the f-to-gradient covariance block
  Mat hess_xy;  // d2k/dxdy, the gradient-to-gradient covariance block
};

namespace detail {

// dk/dr = -w(r) * r with w(r) = (5 s2 / (3 l^2)) (1 + sqrt5 r/l) exp(-sqrt5 r/l),
// so dk/dy = w(r) (x - y). w is smooth through r = 0, no special casing needed.
inline double matern52_radial_weight(double r, const KernelParams& p) {
  const double z = kSqrt5 * r / p.lengthscale;
  return 5.0 * p.amplitude / (3.0 * p.lengthscale * p.lengthscale) * (1.0 + z) * std::exp(-z);
}

}  // namespace detail

/// Analytic first and second cross-derivatives of the Matern 5/2 kernel:
///   grad_y  = dk(x, y)/dy
///   hess_xy = d2k(x, y)/dx dy = w(r) I - (25 s2 / (3 l^4)) exp(-sqrt5 r/l) u u^T,  u = x - y.
/// Both limits at r = 0 are taken by the same closed forms (grad 0, hess (5 s2/(3 l^2)) I).
template <typename DerivedA, typename DerivedB>
KernelDerivatives matern52_derivatives(const Eigen::MatrixBase<DerivedA>& x,
                                       const Eigen::MatrixBase<DerivedB>& y,
                                       const KernelParams& p) {
  if (x.size() != y.size()) throw InvalidInput("matern52_derivatives: dimension mismatch");
  if (!detail::all_finite(x) || !detail::all_finite(y))
    throw InvalidInput("matern52_derivatives: non-finite input point");
  const Vec u = x - y;
  const double r = u.norm();
  const double l2 = p.lengthscale * p.lengthscale;
  const double w = detail::matern52_radial_weight(r, p);
  const double c = 25.0 * p.amplitude / (3.0 * l2 * l2) *
                   std::exp(-detail::kSqrt5 * r / p.lengthscale);

  KernelDerivatives out;
  out.grad_y = w * u;
  out.hess_xy = -c * (u * u.transpose());
  out.hess_xy.diagonal().array() += w;
  return out;
}

/// Gram matrix K(X, X) for row-wise points, without any noise or jitter.
inline Mat matern52_gram(const Mat& points, const KernelParams& p) {
  const Index n = points.rows();
  Mat K(n, n);
  for (Index i = 0; i < n; ++i) {
    K(i, i) = p.amplitude;
    for (Index j = i + 1; j < n; ++j) {
      K(i, j) = matern52_eval(points.row(i).transpose(), points.row(j).transpose(), p);
      K(j, i) = K(i, j);
    }
  }
  return K;
}

}  // namespace flowbo

#endif  // FLOWBO_KERNELS_HPP
