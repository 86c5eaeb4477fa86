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
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "gospa/set_metrics.hpp"

namespace gospa {

/// Potential target: exists with probability r, and when it exists its
/// state is exactly `location` (point-mass single-target density).
struct BernoulliComponent {
    double r = 0.0;
    Point location;
};

/// Independent union of Bernoulli components with known locations.
/// Immutable after construction; construction validates r in [0,1], finite
/// locations, and a shared dimension.
class MultiBernoulli {
public:
    MultiBernoulli() = default;
    explicit MultiBernoulli(std::vector<BernoulliComponent> components);

    [[nodiscard]] std::size_t size() const { return components_.size(); }
    [[nodiscard]] const BernoulliComponent& component(std::size_t i) const {
        return components_[i];
    }
    [[nodiscard]] const std::vector<BernoulliComponent>& components() const {
        return components_;
    }

    /// State dimension; 0 when there are no components.
    [[nodiscard]] std::size_t dimension() const {
        return components_.empty() ? 0 : components_.front().location.size();
    }

    /// Copy with component `omit` removed.
    [[nodiscard]] MultiBernoulli without_component(std::size_t omit) const;

    /// Copy with the existence probability of component i replaced.
    [[nodiscard]] MultiBernoulli with_existence(std::size_t i, double r) const;

private:
    std::vector<BernoulliComponent> components_;
};

/// Binary vector: entry i says whether component i's target exists.
using ExistenceEvent = std::vector<std::uint8_t>;

/// Binary vector: entry i says whether component i is reported detected.
using DetectionVector = std::vector<std::uint8_t>;

/// pmf over target counts 0..N; entries nonnegative, sum 1.
using CardinalityPmf = std::vector<double>;

/// prod_i [(1-r_i)(1-e_i) + r_i e_i]; the probabilities of all 2^N events
/// sum to one.
double event_probability(const MultiBernoulli& mb, const ExistenceEvent& e);

/// The set of locations whose components exist under `e`.
TargetSet realize(const MultiBernoulli& mb, const ExistenceEvent& e);

/// Poisson-binomial pmf of the target count, by iterative convolution of
/// the per-component (1-r_i, r_i) pairs.
CardinalityPmf cardinality_distribution(const MultiBernoulli& mb);

/// Cardinality pmf of the model without component `omit`, recomputed from
/// scratch (deconvolving the full pmf is unstable for r near 1).
CardinalityPmf leave_one_out_cardinality(const MultiBernoulli& mb, std::size_t omit);

/// Independent Bernoulli draw per component; deterministic given the
/// generator state.
TargetSet sample(const MultiBernoulli& mb, std::mt19937_64& rng);

struct SeparationReport {
    bool ok = true;
    std::vector<std::pair<std::size_t, std::size_t>> violating_pairs;
};

/// True iff every pair of component locations is strictly further than c
/// apart under `base` (the regime in which the closed-form mean-square
/// errors hold).
SeparationReport validate_separation(const MultiBernoulli& mb, double c,
                                     BaseDistance base = BaseDistance::Euclidean);

} // namespace gospa
