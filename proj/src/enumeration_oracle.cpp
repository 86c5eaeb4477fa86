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
#include "gospa/enumeration_oracle.hpp"

#include <bit>
#include <cmath>
#include <random>
#include <stdexcept>

#include "gospa/kahan_sum.hpp"

namespace gospa {

namespace {

double squared_metric(const TargetSet& a, const TargetSet& b, MetricKind kind,
                      const MetricConfig& cfg) {
    double d = 0.0;
    switch (kind) {
    case MetricKind::Gospa2: {
        MetricConfig two = cfg;
        two.alpha = 2.0;
        d = gospa(a, b, two);
        break;
    }
    case MetricKind::Uospa:
        d = uospa(a, b, cfg);
        break;
    case MetricKind::Ospa:
        d = ospa(a, b, cfg);
        break;
    case MetricKind::GospaAlpha:
        d = gospa(a, b, cfg);
        break;
    }
    return d * d;
}

void check_config(const MetricConfig& cfg) {
    validate(cfg);
    if (cfg.p != 2.0) {
        throw std::invalid_argument("mean-square errors are defined for p = 2 only");
    }
}

} // namespace

MseEstimate exact_mse(const MultiBernoulli& mb, const TargetSet& estimate, MetricKind kind,
                      const MetricConfig& cfg) {
    check_config(cfg);
    if (mb.size() > 16) throw std::invalid_argument("exact enumeration is capped at 16 components");

    const std::size_t n = mb.size();
    KahanSum acc;
    ExistenceEvent event(n, 0);
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        for (std::size_t i = 0; i < n; ++i) event[i] = (mask >> i) & 1u;
        const double p = event_probability(mb, event);
        if (p == 0.0) continue;
        acc.add(p * squared_metric(realize(mb, event), estimate, kind, cfg));
    }
    return MseEstimate{acc.value(), 0.0, 0};
}

MseEstimate monte_carlo_mse(const MultiBernoulli& mb, const TargetSet& estimate, MetricKind kind,
                            const MetricConfig& cfg, std::int64_t n_samples, std::uint64_t seed) {
    check_config(cfg);
    if (n_samples < 1) throw std::invalid_argument("n_samples must be >= 1");

    std::mt19937_64 rng(seed);
    KahanSum sum, sum_sq;
    for (std::int64_t k = 0; k < n_samples; ++k) {
        const double sq = squared_metric(sample(mb, rng), estimate, kind, cfg);
        sum.add(sq);
        sum_sq.add(sq * sq);
    }
    const double nd = static_cast<double>(n_samples);
    const double mean = sum.value() / nd;

    MseEstimate out{mean, 0.0, n_samples};
    if (n_samples > 1) {
        const double var = std::max(0.0, (sum_sq.value() - nd * mean * mean) / (nd - 1.0));
        out.std_err = std::sqrt(var / nd);
    }
    return out;
}

SubsetOptimalityReport subset_optimality_probe(const MultiBernoulli& mb, MetricKind kind,
                                               const MetricConfig& cfg,
                                               std::span<const double> perturbation_magnitudes) {
    check_config(cfg);
    if (mb.size() > 8) throw std::invalid_argument("the probe is capped at 8 components");

    const std::size_t n = mb.size();
    SubsetOptimalityReport report;

    // Best on-location estimate by the exact route (the enumeration itself
    // is the judge here, not the closed forms).
    DetectionVector best(n, 0), candidate(n, 0);
    double best_mse = exact_mse(mb, realize(mb, best), kind, cfg).mean;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        for (std::size_t i = 0; i < n; ++i) candidate[i] = (mask >> i) & 1u;
        const double mse = exact_mse(mb, realize(mb, candidate), kind, cfg).mean;
        if (mse < best_mse) {
            best_mse = mse;
            best = candidate;
        }
    }
    report.best_e_hat = best;
    report.best_estimate = realize(mb, best);
    report.best_mse = best_mse;

    for (std::size_t point = 0; point < report.best_estimate.size(); ++point) {
        for (double eps : perturbation_magnitudes) {
            TargetSet perturbed = report.best_estimate;
            perturbed[point][0] += eps;
            PerturbationCase trial;
            trial.point_index = point;
            trial.epsilon = eps;
            trial.base_mse = best_mse;
            trial.perturbed_mse = exact_mse(mb, perturbed, kind, cfg).mean;
            trial.margin = trial.perturbed_mse - trial.base_mse;
            if (trial.margin < 0.0) report.no_improvement = false;
            report.cases.push_back(trial);
        }
    }
    return report;
}

} // namespace gospa
