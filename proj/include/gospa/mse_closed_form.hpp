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

#include "gospa/multi_bernoulli.hpp"
#include "gospa/set_metrics.hpp"

namespace gospa {

/// Which mean-square set-metric error is being evaluated.
enum class MetricKind { Gospa2, Uospa, Ospa, GospaAlpha };

/// Closed-form mean-square metric errors for a detection vector against a
/// multi-Bernoulli model with known, pairwise-separated locations (every
/// pair of locations further than c apart). They are exact only in that
/// regime, so separation is enforced; pass skip_separation_check = true to
/// evaluate anyway, which voids the formulas' guarantees.
///
/// All of these fix the metric order at p = 2.
double msgospa(const MultiBernoulli& mb, const DetectionVector& e_hat, double c,
               bool skip_separation_check = false);
double msuospa(const MultiBernoulli& mb, const DetectionVector& e_hat, double c,
               bool skip_separation_check = false);
double msospa(const MultiBernoulli& mb, const DetectionVector& e_hat, double c,
              bool skip_separation_check = false);
double msgospa_general_alpha(const MultiBernoulli& mb, const DetectionVector& e_hat, double c,
                             double alpha, bool skip_separation_check = false);

/// Squared metric error of the single outcome where exactly the components
/// in `e` exist and exactly those in `e_hat` are reported (separated
/// locations, p = 2). Averaging this over the event distribution recovers
/// the closed forms above.
double square_error_given_event(MetricKind kind, const ExistenceEvent& e,
                                const DetectionVector& e_hat, double c, double alpha = 2.0);

struct MseReport {
    double value = 0.0;
    MetricKind kind = MetricKind::Gospa2;
    double c = 0.0;
    double alpha = 2.0;
};

/// Dispatch over MetricKind. Rejects cfg.p != 2 (the closed forms have no
/// other-order counterpart) and uses cfg.c / cfg.alpha.
MseReport evaluate_mse(const MultiBernoulli& mb, const DetectionVector& e_hat, MetricKind kind,
                       const MetricConfig& cfg, bool skip_separation_check = false);

} // namespace gospa
