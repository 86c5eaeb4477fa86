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

#include <vector>

#include "gospa/mse_closed_form.hpp"
#include "gospa/multi_bernoulli.hpp"

namespace gospa {

enum class EstimatorKind {
    OptGospa2,
    OptUospa,
    OptOspa,
    OptGospaAlpha,
    MarginalMultitarget,
    Jom,
    MaxCardinality,
};

/// Result of an estimator run. `objective_value` is the minimised
/// mean-square error for the metric-based estimators and the maximised
/// score for the others. `ties` lists the co-optimal detection vectors in
/// canonical order (fewest detections first, then lexicographic) and always
/// contains e_hat. Tie lists are truncated at kMaxReportedTies.
struct EstimateOutcome {
    DetectionVector e_hat;
    double objective_value = 0.0;
    std::vector<DetectionVector> ties;
};

inline constexpr std::size_t kMaxReportedTies = 4096;

/// Optimal mean-square GOSPA (alpha = 2) estimator: component i is reported
/// iff r_i > 0.5, independently of every other component.
EstimateOutcome optimal_gospa2(const MultiBernoulli& mb, double c);

/// Globally optimal detection vector for the selected mean-square error,
/// found by evaluating all 2^N candidates. Capped at N <= 20; for identical
/// existence probabilities use the closed-form searches below instead.
EstimateOutcome optimal_by_enumeration(const MultiBernoulli& mb, MetricKind kind, double c,
                                       double alpha = 2.0);

/// Optimal detected count and its mean-square error when all N components
/// share one existence probability (the errors then depend on the estimate
/// only through n_hat).
struct IdenticalROutcome {
    int n_hat = 0;
    double mse = 0.0;
};

/// Mean-square UOSPA error at a given detected count, identical-r model.
double msuospa_identical_r(int n_components, double r, int n_hat, double c);

/// Mean-square OSPA error at a given detected count, identical-r model.
double msospa_identical_r(int n_components, double r, int n_hat, double c);

/// Optimal OSPA count: all N targets when (1-r)^N < r, otherwise none.
IdenticalROutcome optimal_ospa_identical_r(int n_components, double r, double c);

/// Optimal UOSPA count: argmin over n_hat in 0..N, ties to the smaller count.
IdenticalROutcome optimal_uospa_identical_r(int n_components, double r, double c);

/// Picks the count maximising the cardinality pmf (ties to the smaller
/// count), then reports that many components in decreasing order of
/// existence probability (ties to the lower index). Objective is the pmf
/// value at the chosen count.
EstimateOutcome max_cardinality_estimator(const MultiBernoulli& mb);

/// Identical decision rule to max_cardinality_estimator for point
/// components at well-separated locations; kept as a separate entry point
/// so callers can ask for it by name.
EstimateOutcome marginal_multitarget_estimator(const MultiBernoulli& mb);

/// Joint multitarget estimate in the separated point-component limit:
/// maximises event_probability(e_hat) / n_hat! over all 2^N candidates.
/// Capped at N <= 20.
EstimateOutcome jom_estimator(const MultiBernoulli& mb);

/// Dispatch over EstimatorKind (alpha is used by OptGospaAlpha only).
EstimateOutcome run_estimator(const MultiBernoulli& mb, EstimatorKind kind, double c,
                              double alpha = 2.0);

} // namespace gospa
