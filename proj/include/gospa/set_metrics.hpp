/*
 * Copyright 2026 The gospa Authors
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
#pragma once

#include <cstddef>
#include <utility>
#include <vector>

namespace gospa {

/// Single-target state: a point in R^n, n >= 1, all coordinates finite.
using Point = std::vector<double>;

/// Finite multiset of single-target states. Duplicates are distinct
/// elements; all points must share one dimension.
using TargetSet = std::vector<Point>;

enum class BaseDistance { Euclidean, Manhattan, Chebyshev };

/// Parameters shared by every set metric: order p >= 1, cutoff c > 0,
/// cardinality penalty alpha in (0, 2] (GOSPA only), and the single-target
/// base distance.
struct MetricConfig {
    double p = 2.0;
    double c = 1.0;
    double alpha = 2.0;
    BaseDistance base_distance = BaseDistance::Euclidean;
};

/// Throws std::invalid_argument unless 1 <= p < inf, c > 0, 0 < alpha <= 2.
void validate(const MetricConfig& cfg);

/// Distance between two points under cfg.base_distance.
double base_distance(const Point& x, const Point& y, const MetricConfig& cfg);

/// Base distance saturated at the cutoff: min(d(x, y), c).
double cutoff_distance(const Point& x, const Point& y, const MetricConfig& cfg);

/// OSPA distance: per-target-normalised optimal sub-pattern assignment with
/// cutoff c and order p. Symmetric, bounded by c, 0 for two empty sets.
double ospa(const TargetSet& x, const TargetSet& y, const MetricConfig& cfg);

/// GOSPA distance for cfg.alpha in (0, 2]. Unnormalised; alpha scales the
/// cardinality-mismatch cost c^p / alpha per surplus target.
double gospa(const TargetSet& x, const TargetSet& y, const MetricConfig& cfg);

/// Unnormalised OSPA: GOSPA at alpha = 1.
double uospa(const TargetSet& x, const TargetSet& y, const MetricConfig& cfg);

/// GOSPA (alpha = 2) split into the costs of its optimal assignment set:
/// localisation (sum of d^p over assigned pairs, pre-root), missed targets
/// (unassigned in x, c^p/2 each) and false targets (unassigned in y).
/// total = (localisation + missed + false)^(1/p).
struct GospaDecomposition {
    double total = 0.0;
    double localisation_cost = 0.0;
    double missed_cost = 0.0;
    double false_cost = 0.0;
    std::vector<std::pair<std::size_t, std::size_t>> assignment;
};

/// Assignment-set form of GOSPA. Requires cfg.alpha == 2; only pairs with
/// d^p < c^p can appear in the assignment (ties at exactly c^p are left
/// unassigned).
GospaDecomposition gospa_alpha2_decomposed(const TargetSet& x, const TargetSet& y,
                                           const MetricConfig& cfg);

} // namespace gospa
