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

#include <cstdint>
#include <string>
#include <vector>

#include "gospa/estimators.hpp"
#include "gospa/multi_bernoulli.hpp"

namespace gospa {

/// Decision-region raster for a two-component model: cell (i, j) holds the
/// region code of the estimate at existence probabilities
/// (r1, r2) = (r_values[i], r_values[j]).
/// Codes: 0 nothing reported, 1 only component 1, 2 only component 2,
/// 3 both.
struct RegionGrid {
    double grid_step = 0.01;
    std::vector<double> r_values;
    std::vector<std::vector<int>> codes;
};

/// Runs one estimator over the full (r1, r2) raster. grid_step must lie in
/// (0, 0.5]; the two locations must be separated by more than c.
RegionGrid sweep_regions(EstimatorKind kind, double grid_step, double c, double alpha,
                         const Point& location1, const Point& location2);

/// Optimal detected counts per metric when all components share the
/// existence probability r, for N = 1..n_max (identical-r fast paths, no
/// 2^N enumeration).
struct CardinalityRow {
    int n = 0;
    int n_hat_gospa = 0;
    int n_hat_uospa = 0;
    int n_hat_ospa = 0;
};

std::vector<CardinalityRow> sweep_cardinality(double r, int n_max, double c);

/// CSV emission. Byte-stable given identical inputs: fixed column order,
/// ascending r1 then r2 (regions) or ascending N (cardinality), LF line
/// endings, '.' decimal separator.
std::string region_grids_csv(const std::vector<std::pair<std::string, RegionGrid>>& grids);
std::string cardinality_csv(const std::vector<CardinalityRow>& rows);

/// gnuplot scripts that render a CSV written by the functions above.
std::string region_grids_gnuplot(const std::string& csv_path,
                                 const std::vector<std::string>& estimator_names);
std::string cardinality_gnuplot(const std::string& csv_path);

struct ValidationOptions {
    std::uint64_t seed = 1;
    int n_instances = 200;
    std::int64_t n_samples = 20000;
    double tolerance = 1e-9;
};

struct ValidationCheck {
    std::string name;
    long cases = 0;
    double max_abs_error = 0.0;
    double tolerance = 0.0;
    bool passed = false;
};

struct ValidationReport {
    std::vector<ValidationCheck> checks;
    bool all_passed = false;
};

/// Cross-checks every closed-form mean-square error against the exact
/// event-enumeration oracle and the per-event formulas on seeded random
/// instances, plus a Monte-Carlo consistency check. Deterministic given
/// the options.
ValidationReport run_validation(const ValidationOptions& options);

std::string validation_csv(const ValidationReport& report);

} // namespace gospa
