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
#include "gospa/multi_bernoulli.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace gospa {

namespace {

void check_same_length(const MultiBernoulli& mb, std::size_t len, const char* what) {
    if (mb.size() != len) {
        throw std::invalid_argument(std::string(what) + " length must match the component count");
    }
}

} // namespace

MultiBernoulli::MultiBernoulli(std::vector<BernoulliComponent> components)
    : components_(std::move(components)) {
    std::size_t dim = 0;
    for (const auto& comp : components_) {
        if (!std::isfinite(comp.r) || comp.r < 0.0 || comp.r > 1.0) {
            throw std::invalid_argument("existence probability must lie in [0, 1]");
        }
        if (comp.location.empty()) {
            throw std::invalid_argument("component locations must have dimension >= 1");
        }
        for (double v : comp.location) {
            if (!std::isfinite(v)) throw std::invalid_argument("component locations must be finite");
        }
        if (dim == 0) {
            dim = comp.location.size();
        } else if (comp.location.size() != dim) {
            throw std::invalid_argument("all component locations must share one dimension");
        }
    }
}

MultiBernoulli MultiBernoulli::without_component(std::size_t omit) const {
    if (omit >= components_.size()) throw std::invalid_argument("component index out of range");
    std::vector<BernoulliComponent> rest;
    rest.reserve(components_.size() - 1);
    for (std::size_t i = 0; i < components_.size(); ++i) {
        if (i != omit) rest.push_back(components_[i]);
    }
    return MultiBernoulli(std::move(rest));
}

MultiBernoulli MultiBernoulli::with_existence(std::size_t i, double r) const {
    if (i >= components_.size()) throw std::invalid_argument("component index out of range");
    auto copy = components_;
    copy[i].r = r;
    return MultiBernoulli(std::move(copy));
}

double event_probability(const MultiBernoulli& mb, const ExistenceEvent& e) {
    check_same_length(mb, e.size(), "existence event");
    double prob = 1.0;
    for (std::size_t i = 0; i < e.size(); ++i) {
        const double r = mb.component(i).r;
        prob *= e[i] ? r : 1.0 - r;
    }
    return prob;
}

TargetSet realize(const MultiBernoulli& mb, const ExistenceEvent& e) {
    check_same_length(mb, e.size(), "existence event");
    TargetSet out;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i]) out.push_back(mb.component(i).location);
    }
    return out;
}

CardinalityPmf cardinality_distribution(const MultiBernoulli& mb) {
    CardinalityPmf pmf{1.0};
    for (const auto& comp : mb.components()) {
        CardinalityPmf next(pmf.size() + 1, 0.0);
        for (std::size_t n = 0; n < pmf.size(); ++n) {
            next[n] += pmf[n] * (1.0 - comp.r);
            next[n + 1] += pmf[n] * comp.r;
        }
        pmf = std::move(next);
    }
    return pmf;
}

CardinalityPmf leave_one_out_cardinality(const MultiBernoulli& mb, std::size_t omit) {
    return cardinality_distribution(mb.without_component(omit));
}

TargetSet sample(const MultiBernoulli& mb, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    TargetSet out;
    for (const auto& comp : mb.components()) {
        if (unit(rng) < comp.r) out.push_back(comp.location);
    }
    return out;
}

SeparationReport validate_separation(const MultiBernoulli& mb, double c, BaseDistance base) {
    MetricConfig cfg;
    cfg.base_distance = base;
    SeparationReport report;
    for (std::size_t i = 0; i + 1 < mb.size(); ++i) {
        for (std::size_t j = i + 1; j < mb.size(); ++j) {
            const double d = base_distance(mb.component(i).location, mb.component(j).location, cfg);
            if (!(d > c)) report.violating_pairs.emplace_back(i, j);
        }
    }
    report.ok = report.violating_pairs.empty();
    return report;
}

} // namespace gospa
