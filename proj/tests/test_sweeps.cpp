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

#include <algorithm>
#include <cmath>
#include <string>

#include "gospa/sweeps.hpp"

using gospa::EstimatorKind;
using gospa::Point;
using gospa::RegionGrid;

namespace {

const Point kLocation1{0.0};
const Point kLocation2{10.0};

RegionGrid sweep(EstimatorKind kind, double step = 0.1, double c = 1.0, double alpha = 2.0) {
    return gospa::sweep_regions(kind, step, c, alpha, kLocation1, kLocation2);
}

// True iff some column holds cells where only r2 changed yet the decision on
// component 1 flipped: the long-range coupling the rasters are meant to show.
bool has_distant_coupling(const RegionGrid& grid) {
    for (std::size_t i = 0; i < grid.r_values.size(); ++i) {
        for (std::size_t j = 0; j + 1 < grid.r_values.size(); ++j) {
            if ((grid.codes[i][j] & 1) != (grid.codes[i][j + 1] & 1)) return true;
        }
    }
    return false;
}

} // namespace

TEST_CASE("gospa raster is the per-component threshold product") {
    const auto grid = sweep(EstimatorKind::OptGospa2, 0.05);
    CHECK(grid.r_values.size() == 21);
    for (std::size_t i = 0; i < grid.r_values.size(); ++i) {
        for (std::size_t j = 0; j < grid.r_values.size(); ++j) {
            const int expected =
                (grid.r_values[i] > 0.5 ? 1 : 0) + 2 * (grid.r_values[j] > 0.5 ? 1 : 0);
            CHECK(grid.codes[i][j] == expected);
        }
    }
    CHECK_FALSE(has_distant_coupling(grid));
}

TEST_CASE("ospa raster reproduces the two-component switching cells") {
    const auto grid = sweep(EstimatorKind::OptOspa, 0.1);
    // (r1, r2) = (0.4, 0.4): both reported; (0.4, 0.9): only component 2;
    // (0.4, 0.3): nothing.
    CHECK(grid.codes[4][4] == 3);
    CHECK(grid.codes[4][9] == 2);
    CHECK(grid.codes[4][3] == 0);
    CHECK(has_distant_coupling(grid));
}

TEST_CASE("uospa, mam and jom rasters all couple distant components") {
    CHECK(has_distant_coupling(sweep(EstimatorKind::OptUospa, 0.05)));
    CHECK(has_distant_coupling(sweep(EstimatorKind::MarginalMultitarget, 0.05)));
    CHECK(has_distant_coupling(sweep(EstimatorKind::Jom, 0.05)));
    CHECK(has_distant_coupling(sweep(EstimatorKind::MaxCardinality, 0.05)));
}

TEST_CASE("the general-alpha sweep at alpha 1 reproduces the uospa raster") {
    const auto general = sweep(EstimatorKind::OptGospaAlpha, 0.05, 1.0, /*alpha=*/1.0);
    const auto direct = sweep(EstimatorKind::OptUospa, 0.05);
    CHECK(general.codes == direct.codes);
}

TEST_CASE("an impossible component is never reported") {
    for (const auto kind :
         {EstimatorKind::OptGospa2, EstimatorKind::OptUospa, EstimatorKind::OptOspa,
          EstimatorKind::MarginalMultitarget, EstimatorKind::Jom, EstimatorKind::MaxCardinality}) {
        const auto grid = sweep(kind, 0.1);
        CHECK(grid.codes[0][8] == 2); // (r1, r2) = (0, 0.8)
    }
}

TEST_CASE("region sweeps validate their inputs") {
    CHECK_THROWS_AS(sweep(EstimatorKind::OptOspa, 0.1, /*c=*/20.0), std::domain_error);
    CHECK_THROWS_AS(sweep(EstimatorKind::OptOspa, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(sweep(EstimatorKind::OptOspa, 0.7), std::invalid_argument);
}

TEST_CASE("cardinality sweep for rarely-existing components") {
    const auto rows = gospa::sweep_cardinality(0.2, 30, 1.0);
    REQUIRE(rows.size() == 30);
    for (const auto& row : rows) {
        CHECK(row.n_hat_gospa == 0);
        CHECK(row.n_hat_ospa == (row.n <= 7 ? 0 : row.n));
        if (row.n <= 7) CHECK(row.n_hat_uospa == 0);
    }
    // Detections arrive one at a time once they start.
    for (std::size_t k = 1; k < rows.size(); ++k) {
        CHECK(rows[k].n_hat_uospa >= rows[k - 1].n_hat_uospa);
        CHECK(rows[k].n_hat_uospa <= rows[k - 1].n_hat_uospa + 1);
    }
}

TEST_CASE("cardinality sweep for likely components") {
    const auto rows = gospa::sweep_cardinality(0.8, 30, 1.0);
    for (const auto& row : rows) {
        CHECK(row.n_hat_gospa == row.n);
        CHECK(row.n_hat_ospa == row.n);
        if (row.n <= 7) CHECK(row.n_hat_uospa == row.n);
    }
    CHECK(rows[7].n_hat_uospa == 7);   // N = 8
    CHECK(rows[13].n_hat_uospa == 12); // N = 14
}

TEST_CASE("certain components are always all reported") {
    for (const auto& row : gospa::sweep_cardinality(1.0, 10, 1.0)) {
        CHECK(row.n_hat_gospa == row.n);
        CHECK(row.n_hat_uospa == row.n);
        CHECK(row.n_hat_ospa == row.n);
    }
}

TEST_CASE("csv emission is byte-stable and correctly shaped") {
    const auto grid_a = sweep(EstimatorKind::OptGospa2, 0.25);
    const auto grid_b = sweep(EstimatorKind::OptOspa, 0.25);
    const auto csv =
        gospa::region_grids_csv({{"gospa", grid_a}, {"ospa", grid_b}});
    const auto csv_again =
        gospa::region_grids_csv({{"gospa", sweep(EstimatorKind::OptGospa2, 0.25)},
                                 {"ospa", sweep(EstimatorKind::OptOspa, 0.25)}});
    CHECK(csv == csv_again);

    // Header plus one row per raster cell, ascending r1 then r2.
    const std::size_t lines = std::count(csv.begin(), csv.end(), '\n');
    CHECK(lines == 1 + 5 * 5);
    CHECK(csv.substr(0, csv.find('\n')) == "r1,r2,gospa,ospa");
    CHECK(csv.find("0,0.25,") != std::string::npos);

    const auto table = gospa::cardinality_csv(gospa::sweep_cardinality(0.8, 5, 1.0));
    CHECK(table == gospa::cardinality_csv(gospa::sweep_cardinality(0.8, 5, 1.0)));
    CHECK(table.substr(0, table.find('\n')) == "n,n_hat_gospa,n_hat_uospa,n_hat_ospa");
}

TEST_CASE("gnuplot scripts reference the csv and the estimator columns") {
    const auto script = gospa::region_grids_gnuplot("out.csv", {"gospa", "ospa"});
    CHECK(script.find("out.csv") != std::string::npos);
    CHECK(script.find("regions_gospa.png") != std::string::npos);
    CHECK(script.find("using 1:2:4") != std::string::npos);

    const auto card_script = gospa::cardinality_gnuplot("card.csv");
    CHECK(card_script.find("card.csv") != std::string::npos);
}

TEST_CASE("validation passes at the stated tolerance and is deterministic") {
    gospa::ValidationOptions options;
    options.n_instances = 25;
    options.n_samples = 4000;
    const auto report = gospa::run_validation(options);
    CHECK(report.all_passed);
    for (const auto& check : report.checks) CHECK(check.passed);

    const auto again = gospa::run_validation(options);
    CHECK(gospa::validation_csv(report) == gospa::validation_csv(again));
}

TEST_CASE("a zero tolerance is a working negative control") {
    gospa::ValidationOptions options;
    options.n_instances = 10;
    options.n_samples = 1000;
    options.tolerance = 0.0;
    const auto report = gospa::run_validation(options);
    CHECK_FALSE(report.all_passed);
}
