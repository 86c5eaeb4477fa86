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
#include "gospa/estimators.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "gospa/kahan_sum.hpp"

namespace gospa {

namespace {

constexpr std::size_t kEnumerationCap = 20;

DetectionVector mask_to_vector(std::uint32_t mask, std::size_t n) {
    DetectionVector e(n, 0);
    for (std::size_t i = 0; i < n; ++i) e[i] = (mask >> i) & 1u;
    return e;
}

// Canonical candidate order: fewer detections first, then lexicographic on
// (e_1, ..., e_N), i.e. on the bit-reversed mask.
bool mask_less(std::uint32_t a, std::uint32_t b, std::size_t n) {
    const int pa = std::popcount(a), pb = std::popcount(b);
    if (pa != pb) return pa < pb;
    for (std::size_t i = 0; i < n; ++i) {
        const unsigned ba = (a >> i) & 1u, bb = (b >> i) & 1u;
        if (ba != bb) return ba < bb;
    }
    return false;
}

// Enumerates all 2^N candidates, returning the extremum of `score` with the
// canonical tie order. `minimise` selects the direction.
EstimateOutcome enumerate_candidates(std::size_t n, bool minimise,
                                     const std::function<double(std::uint32_t)>& score) {
    const std::uint32_t count = 1u << n;
    double best = score(0);
    for (std::uint32_t mask = 1; mask < count; ++mask) {
        const double v = score(mask);
        if (minimise ? v < best : v > best) best = v;
    }
    std::vector<std::uint32_t> tied;
    for (std::uint32_t mask = 0; mask < count; ++mask) {
        if (score(mask) == best) tied.push_back(mask);
    }
    std::sort(tied.begin(), tied.end(),
              [n](std::uint32_t a, std::uint32_t b) { return mask_less(a, b, n); });

    EstimateOutcome out;
    out.objective_value = best;
    out.e_hat = mask_to_vector(tied.front(), n);
    const std::size_t reported = std::min(tied.size(), kMaxReportedTies);
    out.ties.reserve(reported);
    for (std::size_t k = 0; k < reported; ++k) out.ties.push_back(mask_to_vector(tied[k], n));
    return out;
}

CardinalityPmf binomial_pmf(int n, double r) {
    CardinalityPmf pmf{1.0};
    for (int i = 0; i < n; ++i) {
        CardinalityPmf next(pmf.size() + 1, 0.0);
        for (std::size_t k = 0; k < pmf.size(); ++k) {
            next[k] += pmf[k] * (1.0 - r);
            next[k + 1] += pmf[k] * r;
        }
        pmf = std::move(next);
    }
    return pmf;
}

void check_identical_r_args(int n_components, double r, double c) {
    if (n_components < 1) throw std::invalid_argument("need at least one component");
    if (!std::isfinite(r) || r < 0.0 || r > 1.0) {
        throw std::invalid_argument("existence probability must lie in [0, 1]");
    }
    if (!std::isfinite(c) || c <= 0.0) throw std::invalid_argument("cutoff c must be > 0");
}

// Subsets of `indices`, smallest first then lexicographic, applied as bit
// flips on top of `base`. Used to expand exact-tie groups.
void append_flip_combinations(const DetectionVector& base, const std::vector<std::size_t>& indices,
                              std::vector<DetectionVector>& out) {
    const std::size_t g = indices.size();
    std::vector<std::uint32_t> subsets(1u << g);
    std::iota(subsets.begin(), subsets.end(), 0u);
    std::sort(subsets.begin(), subsets.end(), [g](std::uint32_t a, std::uint32_t b) {
        return mask_less(a, b, g);
    });
    for (std::uint32_t subset : subsets) {
        if (out.size() >= kMaxReportedTies) return;
        DetectionVector e = base;
        for (std::size_t k = 0; k < g; ++k) {
            if ((subset >> k) & 1u) e[indices[k]] ^= 1;
        }
        out.push_back(std::move(e));
    }
}

} // namespace

EstimateOutcome optimal_gospa2(const MultiBernoulli& mb, double c) {
    EstimateOutcome out;
    out.e_hat.resize(mb.size(), 0);
    std::vector<std::size_t> boundary;
    for (std::size_t i = 0; i < mb.size(); ++i) {
        const double r = mb.component(i).r;
        out.e_hat[i] = r > 0.5 ? 1 : 0;
        if (r == 0.5) boundary.push_back(i);
    }
    out.objective_value = msgospa(mb, out.e_hat, c);

    if (boundary.size() <= 12) {
        append_flip_combinations(out.e_hat, boundary, out.ties);
    } else {
        out.ties.push_back(out.e_hat);
    }
    return out;
}

EstimateOutcome optimal_by_enumeration(const MultiBernoulli& mb, MetricKind kind, double c,
                                       double alpha) {
    const std::size_t n = mb.size();
    if (n > kEnumerationCap) {
        throw std::invalid_argument(
            "enumeration is capped at 20 components; with identical existence "
            "probabilities use the identical-r searches instead");
    }
    if (kind == MetricKind::GospaAlpha && (!std::isfinite(alpha) || alpha <= 0.0 || alpha > 2.0)) {
        throw std::invalid_argument("alpha must lie in (0, 2]");
    }
    if (!std::isfinite(c) || c <= 0.0) throw std::invalid_argument("cutoff c must be > 0");
    if (!validate_separation(mb, c).ok) {
        throw std::domain_error(
            "closed-form errors need all component locations further than c apart");
    }

    const double c2 = c * c;
    const auto pmf = cardinality_distribution(mb);
    std::vector<double> existence(n);
    for (std::size_t i = 0; i < n; ++i) existence[i] = mb.component(i).r;

    // Everything that depends on the candidate only through n_hat is
    // precomputed so each of the 2^N evaluations stays O(N).
    std::vector<double> by_count(n + 1, 0.0);
    std::vector<std::vector<double>> ospa_weight; // [i][n_hat], n_hat >= 1
    switch (kind) {
    case MetricKind::Uospa:
        for (std::size_t nh = 0; nh <= n; ++nh) {
            double acc = 0.0;
            for (std::size_t k = 0; k < pmf.size(); ++k) {
                acc += pmf[k] * std::max(static_cast<double>(k), static_cast<double>(nh));
            }
            by_count[nh] = acc;
        }
        break;
    case MetricKind::GospaAlpha:
        for (std::size_t nh = 0; nh <= n; ++nh) {
            const double dnh = static_cast<double>(nh);
            double acc = 0.0;
            for (std::size_t k = 0; k < pmf.size(); ++k) {
                const double dk = static_cast<double>(k);
                acc += (c2 / alpha * std::abs(dk - dnh) + c2 * std::min(dk, dnh)) * pmf[k];
            }
            by_count[nh] = acc;
        }
        break;
    case MetricKind::Ospa:
        ospa_weight.assign(n, std::vector<double>(n + 1, 0.0));
        for (std::size_t i = 0; i < n; ++i) {
            const auto rest = leave_one_out_cardinality(mb, i);
            for (std::size_t nh = 1; nh <= n; ++nh) {
                KahanSum inner;
                for (std::size_t k = 0; k < rest.size(); ++k) {
                    inner.add(rest[k] / std::max(static_cast<double>(k + 1),
                                                 static_cast<double>(nh)));
                }
                ospa_weight[i][nh] = inner.value();
            }
        }
        break;
    case MetricKind::Gospa2:
        break;
    }

    const auto score = [&](std::uint32_t mask) -> double {
        const std::size_t n_hat = static_cast<std::size_t>(std::popcount(mask));
        switch (kind) {
        case MetricKind::Gospa2: {
            const double half_c2 = c2 / 2.0;
            double total = 0.0;
            for (std::size_t i = 0; i < n; ++i) {
                total += half_c2 * ((mask >> i) & 1u ? 1.0 - existence[i] : existence[i]);
            }
            return total;
        }
        case MetricKind::Uospa: {
            double detected = 0.0;
            for (std::size_t i = 0; i < n; ++i) {
                if ((mask >> i) & 1u) detected += existence[i];
            }
            return c2 * (by_count[n_hat] - detected);
        }
        case MetricKind::Ospa: {
            if (n_hat == 0) return c2 * (1.0 - pmf[0]);
            KahanSum detected;
            for (std::size_t i = 0; i < n; ++i) {
                if ((mask >> i) & 1u) detected.add(existence[i] * ospa_weight[i][n_hat]);
            }
            return c2 * (1.0 - detected.value());
        }
        case MetricKind::GospaAlpha: {
            double detected = 0.0;
            for (std::size_t i = 0; i < n; ++i) {
                if ((mask >> i) & 1u) detected += existence[i];
            }
            return by_count[n_hat] - c2 * detected;
        }
        }
        return 0.0;
    };

    return enumerate_candidates(n, /*minimise=*/true, score);
}

double msuospa_identical_r(int n_components, double r, int n_hat, double c) {
    check_identical_r_args(n_components, r, c);
    if (n_hat < 0 || n_hat > n_components) throw std::invalid_argument("n_hat out of range");
    const auto pmf = binomial_pmf(n_components, r);
    double expected_max = 0.0;
    for (std::size_t k = 0; k < pmf.size(); ++k) {
        expected_max += pmf[k] * std::max(static_cast<double>(k), static_cast<double>(n_hat));
    }
    return c * c * (expected_max - static_cast<double>(n_hat) * r);
}

double msospa_identical_r(int n_components, double r, int n_hat, double c) {
    check_identical_r_args(n_components, r, c);
    if (n_hat < 0 || n_hat > n_components) throw std::invalid_argument("n_hat out of range");
    if (n_hat == 0) {
        return c * c * (1.0 - binomial_pmf(n_components, r)[0]);
    }
    const auto rest = binomial_pmf(n_components - 1, r);
    KahanSum inner;
    for (std::size_t k = 0; k < rest.size(); ++k) {
        inner.add(rest[k] / std::max(static_cast<double>(k + 1), static_cast<double>(n_hat)));
    }
    return c * c * (1.0 - static_cast<double>(n_hat) * r * inner.value());
}

IdenticalROutcome optimal_ospa_identical_r(int n_components, double r, double c) {
    check_identical_r_args(n_components, r, c);
    IdenticalROutcome out;
    const double miss_all = std::pow(1.0 - r, n_components);
    if (miss_all < r) {
        out.n_hat = n_components;
        out.mse = c * c * (1.0 - r);
    } else {
        out.n_hat = 0;
        out.mse = c * c * (1.0 - miss_all);
    }
    return out;
}

IdenticalROutcome optimal_uospa_identical_r(int n_components, double r, double c) {
    check_identical_r_args(n_components, r, c);
    IdenticalROutcome out;
    out.n_hat = 0;
    out.mse = msuospa_identical_r(n_components, r, 0, c);
    for (int n_hat = 1; n_hat <= n_components; ++n_hat) {
        const double mse = msuospa_identical_r(n_components, r, n_hat, c);
        if (mse < out.mse) {
            out.mse = mse;
            out.n_hat = n_hat;
        }
    }
    return out;
}

EstimateOutcome max_cardinality_estimator(const MultiBernoulli& mb) {
    const std::size_t n = mb.size();
    const auto pmf = cardinality_distribution(mb);

    std::size_t best_count = 0;
    for (std::size_t k = 1; k < pmf.size(); ++k) {
        if (pmf[k] > pmf[best_count]) best_count = k;
    }

    // Components ranked by existence probability; stable sort keeps lower
    // indices first among equal r.
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return mb.component(a).r > mb.component(b).r;
    });

    const auto select_top = [&](std::size_t count) {
        DetectionVector e(n, 0);
        for (std::size_t k = 0; k < count; ++k) e[order[k]] = 1;
        return e;
    };

    EstimateOutcome out;
    out.e_hat = select_top(best_count);
    out.objective_value = pmf[best_count];

    // Co-optimal candidates: any vector whose count ties the pmf maximum and
    // whose selected r values form a valid top-count draw. Enumerated only
    // while that stays cheap.
    if (n <= 12) {
        std::vector<double> sorted_r(n);
        for (std::size_t i = 0; i < n; ++i) sorted_r[i] = mb.component(order[i]).r;

        std::vector<std::uint32_t> tied;
        for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
            const auto count = static_cast<std::size_t>(std::popcount(mask));
            if (pmf[count] != pmf[best_count]) continue;
            std::vector<double> selected;
            for (std::size_t i = 0; i < n; ++i) {
                if ((mask >> i) & 1u) selected.push_back(mb.component(i).r);
            }
            std::sort(selected.begin(), selected.end(), std::greater<>());
            if (std::equal(selected.begin(), selected.end(), sorted_r.begin())) {
                tied.push_back(mask);
            }
        }
        std::sort(tied.begin(), tied.end(),
                  [n](std::uint32_t a, std::uint32_t b) { return mask_less(a, b, n); });
        for (std::uint32_t mask : tied) {
            if (out.ties.size() >= kMaxReportedTies) break;
            out.ties.push_back(mask_to_vector(mask, n));
        }
    }
    if (std::find(out.ties.begin(), out.ties.end(), out.e_hat) == out.ties.end()) {
        out.ties.insert(out.ties.begin(), out.e_hat);
    }
    return out;
}

EstimateOutcome marginal_multitarget_estimator(const MultiBernoulli& mb) {
    return max_cardinality_estimator(mb);
}

EstimateOutcome jom_estimator(const MultiBernoulli& mb) {
    const std::size_t n = mb.size();
    if (n > kEnumerationCap) {
        throw std::invalid_argument("jom enumeration is capped at 20 components");
    }

    std::vector<double> factorial(n + 1, 1.0);
    for (std::size_t k = 1; k <= n; ++k) factorial[k] = factorial[k - 1] * static_cast<double>(k);

    const auto score = [&](std::uint32_t mask) -> double {
        double prob = 1.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double r = mb.component(i).r;
            prob *= (mask >> i) & 1u ? r : 1.0 - r;
        }
        return prob / factorial[static_cast<std::size_t>(std::popcount(mask))];
    };
    return enumerate_candidates(n, /*minimise=*/false, score);
}

EstimateOutcome run_estimator(const MultiBernoulli& mb, EstimatorKind kind, double c,
                              double alpha) {
    switch (kind) {
    case EstimatorKind::OptGospa2:
        return optimal_gospa2(mb, c);
    case EstimatorKind::OptUospa:
        return optimal_by_enumeration(mb, MetricKind::Uospa, c);
    case EstimatorKind::OptOspa:
        return optimal_by_enumeration(mb, MetricKind::Ospa, c);
    case EstimatorKind::OptGospaAlpha:
        return optimal_by_enumeration(mb, MetricKind::GospaAlpha, c, alpha);
    case EstimatorKind::MarginalMultitarget:
        return marginal_multitarget_estimator(mb);
    case EstimatorKind::Jom:
        return jom_estimator(mb);
    case EstimatorKind::MaxCardinality:
        return max_cardinality_estimator(mb);
    }
    throw std::invalid_argument("unknown estimator kind");
}

} // namespace gospa
