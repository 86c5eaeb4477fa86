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
#include "gospa/mse_closed_form.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>

#include "gospa/kahan_sum.hpp"

namespace gospa {

namespace {

void check_inputs(const MultiBernoulli& mb, const DetectionVector& e_hat, double c,
                  bool skip_separation_check) {
    if (e_hat.size() != mb.size()) {
        throw std::invalid_argument("detection vector length must match the component count");
    }
    if (!std::isfinite(c) || c <= 0.0) throw std::invalid_argument("cutoff c must be > 0");
    if (!skip_separation_check && !validate_separation(mb, c).ok) {
        throw std::domain_error(
            "closed-form errors need all component locations further than c apart");
    }
}

std::size_t detection_count(const DetectionVector& e_hat) {
    std::size_t n = 0;
    for (auto bit : e_hat) n += bit ? 1 : 0;
    return n;
}

} // namespace

double msgospa(const MultiBernoulli& mb, const DetectionVector& e_hat, double c,
               bool skip_separation_check) {
    check_inputs(mb, e_hat, c, skip_separation_check);
    // Per-component terms kept separate so the result is exactly the sum of
    // the single-component errors.
    const double half_c2 = c * c / 2.0;
    double total = 0.0;
    for (std::size_t i = 0; i < mb.size(); ++i) {
        const double r = mb.component(i).r;
        total += half_c2 * (e_hat[i] ? 1.0 - r : r);
    }
    return total;
}

double msuospa(const MultiBernoulli& mb, const DetectionVector& e_hat, double c,
               bool skip_separation_check) {
    check_inputs(mb, e_hat, c, skip_separation_check);
    const auto pmf = cardinality_distribution(mb);
    const double n_hat = static_cast<double>(detection_count(e_hat));

    double expected_max = 0.0;
    for (std::size_t n = 0; n < pmf.size(); ++n) {
        expected_max += pmf[n] * std::max(static_cast<double>(n), n_hat);
    }
    double detected_mass = 0.0;
    for (std::size_t i = 0; i < mb.size(); ++i) {
        if (e_hat[i]) detected_mass += mb.component(i).r;
    }
    return c * c * (expected_max - detected_mass);
}

double msospa(const MultiBernoulli& mb, const DetectionVector& e_hat, double c,
              bool skip_separation_check) {
    check_inputs(mb, e_hat, c, skip_separation_check);
    const std::size_t n_hat = detection_count(e_hat);
    if (n_hat == 0) {
        const auto pmf = cardinality_distribution(mb);
        return c * c * (1.0 - pmf[0]);
    }

    KahanSum detected;
    for (std::size_t i = 0; i < mb.size(); ++i) {
        if (!e_hat[i]) continue;
        const auto rest = leave_one_out_cardinality(mb, i);
        KahanSum inner;
        for (std::size_t n = 0; n < rest.size(); ++n) {
            inner.add(rest[n] / std::max(static_cast<double>(n + 1), static_cast<double>(n_hat)));
        }
        detected.add(mb.component(i).r * inner.value());
    }
    return c * c * (1.0 - detected.value());
}

double msgospa_general_alpha(const MultiBernoulli& mb, const DetectionVector& e_hat, double c,
                             double alpha, bool skip_separation_check) {
    check_inputs(mb, e_hat, c, skip_separation_check);
    if (!std::isfinite(alpha) || alpha <= 0.0 || alpha > 2.0) {
        throw std::invalid_argument("alpha must lie in (0, 2]");
    }
    const auto pmf = cardinality_distribution(mb);
    const double n_hat = static_cast<double>(detection_count(e_hat));
    const double c2 = c * c;

    double expected_penalty = 0.0;
    for (std::size_t n = 0; n < pmf.size(); ++n) {
        const double nn = static_cast<double>(n);
        expected_penalty += (c2 / alpha * std::abs(nn - n_hat) + c2 * std::min(nn, n_hat)) * pmf[n];
    }
    double detected_mass = 0.0;
    for (std::size_t i = 0; i < mb.size(); ++i) {
        if (e_hat[i]) detected_mass += mb.component(i).r;
    }
    return expected_penalty - c2 * detected_mass;
}

double square_error_given_event(MetricKind kind, const ExistenceEvent& e,
                                const DetectionVector& e_hat, double c, double alpha) {
    if (e.size() != e_hat.size()) {
        throw std::invalid_argument("event and detection vector lengths must match");
    }
    if (!std::isfinite(c) || c <= 0.0) throw std::invalid_argument("cutoff c must be > 0");

    const double c2 = c * c;
    std::size_t n = 0, n_hat = 0, properly_detected = 0;
    for (std::size_t i = 0; i < e.size(); ++i) {
        n += e[i] ? 1 : 0;
        n_hat += e_hat[i] ? 1 : 0;
        properly_detected += (e[i] && e_hat[i]) ? 1 : 0;
    }
    const double dn = static_cast<double>(n);
    const double dn_hat = static_cast<double>(n_hat);
    const double matched = static_cast<double>(properly_detected);

    switch (kind) {
    case MetricKind::Gospa2: {
        // c^2/2 per miss (exists, not reported) and per false report.
        double mismatches = 0.0;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if ((e[i] != 0) != (e_hat[i] != 0)) mismatches += 1.0;
        }
        return c2 / 2.0 * mismatches;
    }
    case MetricKind::Uospa:
        return c2 * (std::max(dn, dn_hat) - matched);
    case MetricKind::Ospa:
        if (n == 0 && n_hat == 0) return 0.0;
        return c2 * (1.0 - matched / std::max(dn, dn_hat));
    case MetricKind::GospaAlpha:
        if (!std::isfinite(alpha) || alpha <= 0.0 || alpha > 2.0) {
            throw std::invalid_argument("alpha must lie in (0, 2]");
        }
        return c2 / alpha * std::abs(dn - dn_hat) + c2 * (std::min(dn, dn_hat) - matched);
    }
    throw std::invalid_argument("unknown metric kind");
}

MseReport evaluate_mse(const MultiBernoulli& mb, const DetectionVector& e_hat, MetricKind kind,
                       const MetricConfig& cfg, bool skip_separation_check) {
    validate(cfg);
    if (cfg.p != 2.0) {
        throw std::invalid_argument("closed-form mean-square errors are defined for p = 2 only");
    }
    MseReport report;
    report.kind = kind;
    report.c = cfg.c;
    report.alpha = cfg.alpha;
    switch (kind) {
    case MetricKind::Gospa2:
        report.value = msgospa(mb, e_hat, cfg.c, skip_separation_check);
        break;
    case MetricKind::Uospa:
        report.value = msuospa(mb, e_hat, cfg.c, skip_separation_check);
        break;
    case MetricKind::Ospa:
        report.value = msospa(mb, e_hat, cfg.c, skip_separation_check);
        break;
    case MetricKind::GospaAlpha:
        report.value = msgospa_general_alpha(mb, e_hat, cfg.c, cfg.alpha, skip_separation_check);
        break;
    }
    return report;
}

} // namespace gospa
