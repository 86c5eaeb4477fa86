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
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bit>
#include <cmath>
#include <random>

#include "gospa/enumeration_oracle.hpp"
#include "gospa/estimators.hpp"
#include "gospa/kahan_sum.hpp"
#include "gospa/mse_closed_form.hpp"
#include "test_support.hpp"

using gospa::BernoulliComponent;
using gospa::DetectionVector;
using gospa::ExistenceEvent;
using gospa::MetricConfig;
using gospa::MetricKind;
using gospa::MultiBernoulli;
using gospa::Point;

namespace {

MultiBernoulli two_components(double r1, double r2) {
    return MultiBernoulli({BernoulliComponent{r1, Point{0.0}}, BernoulliComponent{r2, Point{10.0}}});
}

// Average of the per-event squared errors: the conditioning route the
// closed forms must reproduce.
double event_sum(const MultiBernoulli& mb, MetricKind kind, const DetectionVector& e_hat, double c,
                 double alpha = 2.0) {
    const std::size_t n = mb.size();
    gospa::KahanSum acc;
    ExistenceEvent e(n, 0);
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        for (std::size_t i = 0; i < n; ++i) e[i] = (mask >> i) & 1u;
        acc.add(gospa::event_probability(mb, e) *
                gospa::square_error_given_event(kind, e, e_hat, c, alpha));
    }
    return acc.value();
}

} // namespace

TEST_CASE("mean-square gospa on two equal components") {
    const auto mb = two_components(0.4, 0.4);
    CHECK(gospa::msgospa(mb, {0, 0}, 1.0) == doctest::Approx(0.4).epsilon(1e-12));
    CHECK(gospa::msgospa(mb, {1, 1}, 1.0) == doctest::Approx(0.6).epsilon(1e-12));
    CHECK(gospa::msgospa(MultiBernoulli({BernoulliComponent{1.0, Point{0.0}}}), {1}, 3.0) == 0.0);
}

TEST_CASE("mean-square uospa on two equal components") {
    const auto mb = two_components(0.4, 0.4);
    CHECK(gospa::msuospa(mb, {0, 0}, 1.0) == doctest::Approx(0.8).epsilon(1e-12));
    CHECK(gospa::msuospa(mb, {1, 1}, 1.0) == doctest::Approx(1.2).epsilon(1e-12));
    CHECK(gospa::msuospa(MultiBernoulli({BernoulliComponent{0.0, Point{0.0}}}), {0}, 1.0) == 0.0);
}

TEST_CASE("mean-square ospa closed form") {
    CHECK(gospa::msospa(two_components(0.4, 0.4), {0, 0}, 1.0) ==
          doctest::Approx(0.64).epsilon(1e-12));
    CHECK(gospa::msospa(two_components(0.4, 0.4), {1, 1}, 1.0) ==
          doctest::Approx(0.60).epsilon(1e-12));
    CHECK(gospa::msospa(two_components(0.4, 0.9), {0, 1}, 1.0) ==
          doctest::Approx(0.28).epsilon(1e-12));
}

TEST_CASE("general-alpha mean-square gospa") {
    // alpha = 2 reproduces the separable form.
    const auto mb = two_components(0.4, 0.4);
    CHECK(gospa::msgospa_general_alpha(mb, {1, 1}, 1.0, 2.0) ==
          doctest::Approx(0.6).epsilon(1e-12));
    CHECK(gospa::msgospa_general_alpha(
              MultiBernoulli({BernoulliComponent{0.0, Point{0.0}}}), {0}, 1.0, 0.7) == 0.0);

    // alpha = 1 is the uospa error, on random instances.
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 1 + trial % 8;
        const auto model = gospa::testing::random_separated_model(n, rng);
        std::uniform_int_distribution<std::uint32_t> mask_draw(0, (1u << n) - 1);
        const auto e_hat = gospa::testing::detections_from_mask(mask_draw(rng), n);
        CHECK(gospa::msgospa_general_alpha(model, e_hat, 1.0, 1.0) ==
              doctest::Approx(gospa::msuospa(model, e_hat, 1.0)).epsilon(1e-12));
    }
}

TEST_CASE("per-event squared errors") {
    CHECK(gospa::square_error_given_event(MetricKind::Gospa2, {1, 0}, {0, 1}, 1.0) ==
          doctest::Approx(1.0));
    CHECK(gospa::square_error_given_event(MetricKind::Ospa, {0, 0}, {0, 0}, 1.0) == 0.0);
    CHECK(gospa::square_error_given_event(MetricKind::Uospa, {1, 1}, {1, 0}, 1.0) ==
          doctest::Approx(1.0));

    // Cross-check the miss+false case against the actual set metric on
    // separated locations.
    const MetricConfig cfg; // p = 2, c = 1
    const double metric = gospa::gospa({{0.0}}, {{10.0}}, cfg);
    CHECK(gospa::square_error_given_event(MetricKind::Gospa2, {1, 0}, {0, 1}, 1.0) ==
          doctest::Approx(metric * metric).epsilon(1e-12));

    CHECK_THROWS_AS(gospa::square_error_given_event(MetricKind::Gospa2, {1}, {0, 1}, 1.0),
                    std::invalid_argument);
}

TEST_CASE("closed forms equal both oracle routes on random instances") {
    std::mt19937_64 rng(2718);
    const MetricConfig cfg; // p = 2, c = 1
    std::uniform_real_distribution<double> alpha_draw(0.1, 2.0);
    for (int trial = 0; trial < 120; ++trial) {
        const int n = 1 + trial % 10;
        const auto mb = gospa::testing::random_separated_model(n, rng);
        const double alpha = alpha_draw(rng);
        MetricConfig alpha_cfg = cfg;
        alpha_cfg.alpha = alpha;

        std::uniform_int_distribution<std::uint32_t> mask_draw(0, (1u << n) - 1);
        for (int pick = 0; pick < 6; ++pick) {
            const auto e_hat = gospa::testing::detections_from_mask(mask_draw(rng), n);
            const auto estimate = gospa::realize(mb, e_hat);

            const double closed[4] = {
                gospa::msgospa(mb, e_hat, cfg.c),
                gospa::msuospa(mb, e_hat, cfg.c),
                gospa::msospa(mb, e_hat, cfg.c),
                gospa::msgospa_general_alpha(mb, e_hat, cfg.c, alpha),
            };
            const MetricKind kinds[4] = {MetricKind::Gospa2, MetricKind::Uospa, MetricKind::Ospa,
                                         MetricKind::GospaAlpha};
            for (int k = 0; k < 4; ++k) {
                CHECK(std::abs(closed[k] - event_sum(mb, kinds[k], e_hat, cfg.c, alpha)) <= 1e-10);
                const MetricConfig& used = k == 3 ? alpha_cfg : cfg;
                CHECK(std::abs(closed[k] - gospa::exact_mse(mb, estimate, kinds[k], used).mean) <=
                      1e-9);
            }
        }
    }
}

TEST_CASE("closed forms hold for planar locations too") {
    // Separation is what matters, not the dimension.
    const MultiBernoulli mb({BernoulliComponent{0.3, Point{0.0, 0.0}},
                             BernoulliComponent{0.8, Point{5.0, 5.0}},
                             BernoulliComponent{0.6, Point{-4.0, 3.0}}});
    const MetricConfig cfg;
    for (std::uint32_t mask = 0; mask < 8; ++mask) {
        const auto e_hat = gospa::testing::detections_from_mask(mask, 3);
        const auto estimate = gospa::realize(mb, e_hat);
        CHECK(std::abs(gospa::msgospa(mb, e_hat, cfg.c) -
                       gospa::exact_mse(mb, estimate, MetricKind::Gospa2, cfg).mean) <= 1e-12);
        CHECK(std::abs(gospa::msospa(mb, e_hat, cfg.c) -
                       gospa::exact_mse(mb, estimate, MetricKind::Ospa, cfg).mean) <= 1e-12);
        CHECK(std::abs(gospa::msuospa(mb, e_hat, cfg.c) -
                       gospa::exact_mse(mb, estimate, MetricKind::Uospa, cfg).mean) <= 1e-12);
    }
}

TEST_CASE("mean-square gospa is exactly the sum of single-component errors") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 1 + trial % 10;
        const auto mb = gospa::testing::random_separated_model(n, rng);
        std::uniform_int_distribution<std::uint32_t> mask_draw(0, (1u << n) - 1);
        const auto e_hat = gospa::testing::detections_from_mask(mask_draw(rng), n);

        double sum = 0.0;
        for (int i = 0; i < n; ++i) {
            const MultiBernoulli single({mb.component(i)});
            sum += gospa::msgospa(single, {e_hat[i]}, 1.0);
        }
        CHECK(gospa::msgospa(mb, e_hat, 1.0) == sum);
    }
}

TEST_CASE("mean-square errors respect their bounds") {
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 80; ++trial) {
        const int n = 1 + trial % 8;
        const auto mb = gospa::testing::random_separated_model(n, rng);
        std::uniform_int_distribution<std::uint32_t> mask_draw(0, (1u << n) - 1);
        const auto e_hat = gospa::testing::detections_from_mask(mask_draw(rng), n);
        const double c = 1.5;
        CHECK(gospa::msospa(mb, e_hat, c) <= c * c + 1e-12);
        CHECK(gospa::msgospa(mb, e_hat, c) <= c * c / 2.0 * n + 1e-12);
        CHECK(gospa::msgospa(mb, e_hat, c) >= 0.0);
        CHECK(gospa::msuospa(mb, e_hat, c) >= 0.0);
        CHECK(gospa::msospa(mb, e_hat, c) >= 0.0);
    }
}

TEST_CASE("identical-r ospa error depends on the estimate only through its count") {
    std::vector<BernoulliComponent> comps;
    for (int i = 0; i < 8; ++i) comps.push_back({0.61, Point{static_cast<double>(10 * i)}});
    const MultiBernoulli mb(comps);

    for (int n_hat = 0; n_hat <= 8; ++n_hat) {
        const double reference = gospa::msospa_identical_r(8, 0.61, n_hat, 1.0);
        const double uospa_reference = gospa::msuospa_identical_r(8, 0.61, n_hat, 1.0);
        // Every detection vector with this count gives the same value.
        double first = -1.0;
        for (std::uint32_t mask = 0; mask < (1u << 8); ++mask) {
            if (std::popcount(mask) != n_hat) continue;
            const auto e_hat = gospa::testing::detections_from_mask(mask, 8);
            const double value = gospa::msospa(mb, e_hat, 1.0);
            if (first < 0.0) {
                first = value;
            } else {
                CHECK(value == first);
            }
            CHECK(std::abs(value - reference) <= 1e-12);
            CHECK(std::abs(gospa::msuospa(mb, e_hat, 1.0) - uospa_reference) <= 1e-12);
        }
    }
}

TEST_CASE("separation is enforced unless explicitly bypassed") {
    const MultiBernoulli close(
        {BernoulliComponent{0.4, Point{0.0}}, BernoulliComponent{0.4, Point{0.5}}});
    CHECK_THROWS_AS(gospa::msgospa(close, {0, 0}, 1.0), std::domain_error);
    CHECK_THROWS_AS(gospa::msuospa(close, {0, 0}, 1.0), std::domain_error);
    CHECK_THROWS_AS(gospa::msospa(close, {0, 0}, 1.0), std::domain_error);
    CHECK_THROWS_AS(gospa::msgospa_general_alpha(close, {0, 0}, 1.0, 1.0), std::domain_error);
    // The bypass evaluates the formulas as written.
    CHECK(gospa::msgospa(close, {0, 0}, 1.0, true) == doctest::Approx(0.4));
}

TEST_CASE("evaluate_mse rejects p != 2 and dispatches by kind") {
    const auto mb = two_components(0.4, 0.4);
    MetricConfig cfg;
    cfg.p = 3.0;
    CHECK_THROWS_AS(gospa::evaluate_mse(mb, {0, 0}, MetricKind::Gospa2, cfg),
                    std::invalid_argument);

    cfg.p = 2.0;
    CHECK(gospa::evaluate_mse(mb, {1, 1}, MetricKind::Ospa, cfg).value ==
          doctest::Approx(0.6).epsilon(1e-12));
    cfg.alpha = 1.0;
    CHECK(gospa::evaluate_mse(mb, {1, 1}, MetricKind::GospaAlpha, cfg).value ==
          doctest::Approx(gospa::msuospa(mb, {1, 1}, cfg.c)).epsilon(1e-12));
}

TEST_CASE("length mismatches are rejected") {
    CHECK_THROWS_AS(gospa::msgospa(two_components(0.4, 0.4), {0}, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(gospa::msospa(two_components(0.4, 0.4), {0, 0, 1}, 1.0),
                    std::invalid_argument);
}
