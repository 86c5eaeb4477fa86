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

#include <cstdint>
#include <span>

#include "gospa/mse_closed_form.hpp"
#include "gospa/multi_bernoulli.hpp"
#include "gospa/set_metrics.hpp"

namespace gospa {

/// Mean-square error estimate. std_err and n_samples are zero for exact
/// enumeration.
struct MseEstimate {
    double mean = 0.0;
    double std_err = 0.0;
    std::int64_t n_samples = 0;
};

/// Ground-truth mean-square metric error of an arbitrary estimate set:
/// sums event_probability * squared set-metric distance over all 2^N
/// existence events, evaluating the metric itself (no closed forms).
/// Requires cfg.p == 2 and N <= 16. The estimate is any finite set, not
/// necessarily drawn from the component locations.
MseEstimate exact_mse(const MultiBernoulli& mb, const TargetSet& estimate, MetricKind kind,
                      const MetricConfig& cfg);

/// Seeded Monte-Carlo counterpart of exact_mse: sample mean of the squared
/// metric over independent draws, std_err = sample std dev / sqrt(n).
MseEstimate monte_carlo_mse(const MultiBernoulli& mb, const TargetSet& estimate, MetricKind kind,
                            const MetricConfig& cfg, std::int64_t n_samples, std::uint64_t seed);

/// One perturbation trial: reported point `point_index` of the best
/// on-location estimate moved by `epsilon` along the first coordinate axis.
/// margin = perturbed MSE - best MSE.
struct PerturbationCase {
    std::size_t point_index = 0;
    double epsilon = 0.0;
    double base_mse = 0.0;
    double perturbed_mse = 0.0;
    double margin = 0.0;
};

struct SubsetOptimalityReport {
    DetectionVector best_e_hat;
    TargetSet best_estimate;
    double best_mse = 0.0;
    std::vector<PerturbationCase> cases;
    /// True iff no perturbation lowered the MSE.
    bool no_improvement = true;
};

/// Checks that the exact-MSE optimum over on-location estimates cannot be
/// improved by sliding any reported point off its component location.
/// The best estimate is found with exact_mse over all 2^N detection
/// vectors; each reported point is then perturbed by every magnitude.
/// Capped at N <= 8.
SubsetOptimalityReport subset_optimality_probe(const MultiBernoulli& mb, MetricKind kind,
                                               const MetricConfig& cfg,
                                               std::span<const double> perturbation_magnitudes);

} // namespace gospa
