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
#include "gospa/set_metrics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "gospa/assignment.hpp"

namespace gospa {

namespace {

void check_point(const Point& x) {
    if (x.empty()) throw std::invalid_argument("points must have dimension >= 1");
    for (double v : x) {
        if (!std::isfinite(v)) throw std::invalid_argument("point coordinates must be finite");
    }
}

void check_dimensions(const Point& x, const Point& y) {
    check_point(x);
    check_point(y);
    if (x.size() != y.size()) throw std::invalid_argument("point dimension mismatch");
}

// Dimension check across both sets; empty sets impose no constraint.
void check_sets(const TargetSet& x, const TargetSet& y) {
    std::size_t dim = 0;
    for (const TargetSet* s : {&x, &y}) {
        for (const Point& p : *s) {
            check_point(p);
            if (dim == 0) {
                dim = p.size();
            } else if (p.size() != dim) {
                throw std::invalid_argument("all points must share one dimension");
            }
        }
    }
}

// Matrix of cutoff distances raised to the p-th power, |x| <= |y| expected.
CostMatrix cutoff_power_matrix(const TargetSet& x, const TargetSet& y, const MetricConfig& cfg) {
    CostMatrix costs(x.size(), y.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        for (std::size_t j = 0; j < y.size(); ++j) {
            costs(i, j) = std::pow(cutoff_distance(x[i], y[j], cfg), cfg.p);
        }
    }
    return costs;
}

} // namespace

void validate(const MetricConfig& cfg) {
    if (!std::isfinite(cfg.p) || cfg.p < 1.0) {
        throw std::invalid_argument("metric order p must satisfy 1 <= p < inf");
    }
    if (!std::isfinite(cfg.c) || cfg.c <= 0.0) {
        throw std::invalid_argument("cutoff c must be > 0");
    }
    if (!std::isfinite(cfg.alpha) || cfg.alpha <= 0.0 || cfg.alpha > 2.0) {
        throw std::invalid_argument("alpha must lie in (0, 2]");
    }
}

double base_distance(const Point& x, const Point& y, const MetricConfig& cfg) {
    check_dimensions(x, y);
    double acc = 0.0;
    switch (cfg.base_distance) {
    case BaseDistance::Euclidean:
        for (std::size_t k = 0; k < x.size(); ++k) {
            const double d = x[k] - y[k];
            acc += d * d;
        }
        return std::sqrt(acc);
    case BaseDistance::Manhattan:
        for (std::size_t k = 0; k < x.size(); ++k) acc += std::abs(x[k] - y[k]);
        return acc;
    case BaseDistance::Chebyshev:
        for (std::size_t k = 0; k < x.size(); ++k) acc = std::max(acc, std::abs(x[k] - y[k]));
        return acc;
    }
    throw std::invalid_argument("unknown base distance");
}

double cutoff_distance(const Point& x, const Point& y, const MetricConfig& cfg) {
    validate(cfg);
    return std::min(base_distance(x, y, cfg), cfg.c);
}

double ospa(const TargetSet& x, const TargetSet& y, const MetricConfig& cfg) {
    validate(cfg);
    check_sets(x, y);
    if (x.empty() && y.empty()) return 0.0;

    const TargetSet& small = x.size() <= y.size() ? x : y;
    const TargetSet& large = x.size() <= y.size() ? y : x;

    const auto assignment = solve_full_assignment(cutoff_power_matrix(small, large, cfg));
    const double cardinality_cost =
        std::pow(cfg.c, cfg.p) * static_cast<double>(large.size() - small.size());
    return std::pow((assignment.total_cost + cardinality_cost) / static_cast<double>(large.size()),
                    1.0 / cfg.p);
}

double gospa(const TargetSet& x, const TargetSet& y, const MetricConfig& cfg) {
    validate(cfg);
    check_sets(x, y);
    if (x.empty() && y.empty()) return 0.0;

    const TargetSet& small = x.size() <= y.size() ? x : y;
    const TargetSet& large = x.size() <= y.size() ? y : x;

    const auto assignment = solve_full_assignment(cutoff_power_matrix(small, large, cfg));
    const double cardinality_cost =
        std::pow(cfg.c, cfg.p) / cfg.alpha * static_cast<double>(large.size() - small.size());
    return std::pow(assignment.total_cost + cardinality_cost, 1.0 / cfg.p);
}

double uospa(const TargetSet& x, const TargetSet& y, const MetricConfig& cfg) {
    MetricConfig unit = cfg;
    unit.alpha = 1.0;
    return gospa(x, y, unit);
}

GospaDecomposition gospa_alpha2_decomposed(const TargetSet& x, const TargetSet& y,
                                           const MetricConfig& cfg) {
    validate(cfg);
    if (cfg.alpha != 2.0) {
        throw std::invalid_argument("the assignment-set decomposition exists only for alpha = 2");
    }
    check_sets(x, y);

    // Raw d^p costs, no cutoff; the penalty c^p/2 per unassigned element
    // prices pairs at or beyond c^p out of the optimum.
    CostMatrix costs(x.size(), y.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        for (std::size_t j = 0; j < y.size(); ++j) {
            costs(i, j) = std::pow(base_distance(x[i], y[j], cfg), cfg.p);
        }
    }
    const double penalty = std::pow(cfg.c, cfg.p) / 2.0;
    const auto solution = solve_partial_assignment(costs, penalty);

    GospaDecomposition out;
    out.assignment = solution.pairs;
    for (const auto& [i, j] : solution.pairs) out.localisation_cost += costs(i, j);
    out.missed_cost = penalty * static_cast<double>(x.size() - solution.pairs.size());
    out.false_cost = penalty * static_cast<double>(y.size() - solution.pairs.size());
    out.total = std::pow(out.localisation_cost + out.missed_cost + out.false_cost, 1.0 / cfg.p);
    return out;
}

} // namespace gospa
