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

#ifndef FLOWBO_DOMAIN_HPP
#define FLOWBO_DOMAIN_HPP

#include "flowbo/common.hpp"

namespace flowbo {

/// Axis-aligned box, the search domain for every objective.
struct BoxDomain {
  Vec lower;
  Vec upper;

  BoxDomain() = default;
  BoxDomain(Vec lo, Vec hi) : lower(std::move(lo)), upper(std::move(hi)) {
    if (lower.size() != upper.size() || lower.size() == 0)
      throw InvalidInput("BoxDomain: bound vectors must be non-empty and of equal size");
    if (!((lower.array() < upper.array()).all()))
      throw InvalidInput("BoxDomain: lower bound must be strictly below upper bound");
  }

  /// Cube [lo, hi]^d.
  static BoxDomain cube(double lo, double hi, Index dim) {
    return BoxDomain(Vec::Constant(dim, lo), Vec::Constant(dim, hi));
  }

  Index dim() const { return lower.size(); }

  bool contains(const Vec& x, double tol = 0.0) const {
    return x.size() == dim() && (x.array() >= lower.array() - tol).all() &&
           (x.array() <= upper.array() + tol).all();
  }

  Vec clamp(const Vec& x) const {
    return x.cwiseMax(lower).cwiseMin(upper);
  }

  Vec widths() const { return upper - lower; }

  double diameter() const { return widths().norm(); }
};

}  // namespace flowbo

#endif  // FLOWBO_DOMAIN_HPP
