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
#include "gospa/sweeps.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <random>
#include <stdexcept>

#include "gospa/enumeration_oracle.hpp"
#include "gospa/kahan_sum.hpp"
#include "gospa/mse_closed_form.hpp"

namespace gospa {

namespace {

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.10g", v);
    return buf;
}

std::vector<double> grid_values(double grid_step) {
    if (!std::isfinite(grid_step) || grid_step <= 0.0 || grid_step > 0.5) {
        throw std::invalid_argument("grid_step must lie in (0, 0.5]");
    }
    const int steps = static_cast<int>(std::floor(1.0 / grid_step + 1e-9));
    std::vector<double> values(steps + 1);
    for (int i = 0; i <= steps; ++i) values[i] = static_cast<double>(i) * grid_step;
    return values;
}

} // namespace

RegionGrid sweep_regions(EstimatorKind kind, double grid_step, double c, double alpha,
                         const Point& location1, const Point& location2) {
    RegionGrid grid;
    grid.grid_step = grid_step;
    grid.r_values = grid_values(grid_step);

    {
        // Region codes depend on the locations only through separation.
        const MultiBernoulli probe(
            {BernoulliComponent{0.5, location1}, BernoulliComponent{0.5, location2}});
        if (!validate_separation(probe, c).ok) {
            throw std::domain_error("the two component locations must be further than c apart");
        }
    }

    grid.codes.resize(grid.r_values.size());
    for (std::size_t i = 0; i < grid.r_values.size(); ++i) {
        grid.codes[i].resize(grid.r_values.size());
        for (std::size_t j = 0; j < grid.r_values.size(); ++j) {
            const MultiBernoulli mb({BernoulliComponent{grid.r_values[i], location1},
                                     BernoulliComponent{grid.r_values[j], location2}});
            const auto outcome = run_estimator(mb, kind, c, alpha);
            grid.codes[i][j] = outcome.e_hat[0] + 2 * outcome.e_hat[1];
        }
    }
    return grid;
}

std::vector<CardinalityRow> sweep_cardinality(double r, int n_max, double c) {
    if (!std::isfinite(r) || r < 0.0 || r > 1.0) {
        throw std::invalid_argument("existence probability must lie in [0, 1]");
    }
    if (n_max < 1 || n_max > 30) throw std::invalid_argument("n_max must lie in 1..30");
    if (!std::isfinite(c) || c <= 0.0) throw std::invalid_argument("cutoff c must be > 0");

    std::vector<CardinalityRow> rows;
    rows.reserve(n_max);
    for (int n = 1; n <= n_max; ++n) {
        CardinalityRow row;
        row.n = n;
        row.n_hat_gospa = r > 0.5 ? n : 0;
        row.n_hat_uospa = optimal_uospa_identical_r(n, r, c).n_hat;
        row.n_hat_ospa = optimal_ospa_identical_r(n, r, c).n_hat;
        rows.push_back(row);
    }
    return rows;
}

std::string region_grids_csv(const std::vector<std::pair<std::string, RegionGrid>>& grids) {
    if (grids.empty()) throw std::invalid_argument("need at least one grid");
    const auto& reference = grids.front().second.r_values;
    for (const auto& [name, grid] : grids) {
        if (grid.r_values != reference) {
            throw std::invalid_argument("all grids must share one raster");
        }
    }

    std::string out = "r1,r2";
    for (const auto& [name, grid] : grids) {
        out += ',';
        out += name;
    }
    out += '\n';
    for (std::size_t i = 0; i < reference.size(); ++i) {
        for (std::size_t j = 0; j < reference.size(); ++j) {
            out += format_double(reference[i]);
            out += ',';
            out += format_double(reference[j]);
            for (const auto& [name, grid] : grids) {
                out += ',';
                out += std::to_string(grid.codes[i][j]);
            }
            out += '\n';
        }
    }
    return out;
}

std::string cardinality_csv(const std::vector<CardinalityRow>& rows) {
    std::string out = "n,n_hat_gospa,n_hat_uospa,n_hat_ospa\n";
    for (const auto& row : rows) {
        out += std::to_string(row.n) + ',' + std::to_string(row.n_hat_gospa) + ',' +
               std::to_string(row.n_hat_uospa) + ',' + std::to_string(row.n_hat_ospa) + '\n';
    }
    return out;
}

std::string region_grids_gnuplot(const std::string& csv_path,
                                 const std::vector<std::string>& estimator_names) {
    std::string script =
        "# Decision-region rasters; run: gnuplot <this file>\n"
        "set datafile separator ','\n"
        "set xlabel 'r1'\n"
        "set ylabel 'r2'\n"
        "set xrange [-0.01:1.01]\n"
        "set yrange [-0.01:1.01]\n"
        "set cbrange [-0.5:3.5]\n"
        "set cbtics ('none' 0, 'only 1' 1, 'only 2' 2, 'both' 3)\n"
        "set palette maxcolors 4\n"
        "set palette defined (0 '#21366b', 1 '#6fb3d9', 2 '#2e8b57', 3 '#f5d327')\n"
        "unset key\n"
        "set size square\n"
        "set terminal pngcairo size 640,560\n";
    for (std::size_t k = 0; k < estimator_names.size(); ++k) {
        script += "set output 'regions_" + estimator_names[k] + ".png'\n";
        script += "plot '" + csv_path + "' skip 1 using 1:2:" + std::to_string(3 + k) +
                  " with points pt 5 ps 1 palette\n";
    }
    return script;
}

std::string cardinality_gnuplot(const std::string& csv_path) {
    return "# Optimal detected targets vs component count; run: gnuplot <this file>\n"
           "set datafile separator ','\n"
           "set xlabel 'number of Bernoulli components N'\n"
           "set ylabel 'optimal number of detected targets'\n"
           "set key left top\n"
           "set terminal pngcairo size 640,480\n"
           "set output 'cardinality.png'\n"
           "plot '" +
           csv_path +
           "' skip 1 using 1:2 with steps lw 2 title 'gospa', \\\n"
           "     '' skip 1 using 1:3 with steps lw 2 title 'uospa', \\\n"
           "     '' skip 1 using 1:4 with steps lw 2 title 'ospa'\n";
}

ValidationReport run_validation(const ValidationOptions& options) {
    if (options.n_instances < 1) throw std::invalid_argument("need at least one instance");
    if (options.n_samples < 2) throw std::invalid_argument("need at least two samples");
    if (!std::isfinite(options.tolerance) || options.tolerance < 0.0) {
        throw std::invalid_argument("tolerance must be >= 0");
    }

    std::mt19937_64 rng(options.seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_int_distribution<int> component_count(1, 6);
    std::uniform_real_distribution<double> alpha_draw(0.1, 2.0);

    const MetricConfig cfg; // p = 2, c = 1, Euclidean

    ValidationCheck closed_forms[4] = {
        {"msgospa_vs_exact_enumeration", 0, 0.0, options.tolerance, false},
        {"msuospa_vs_exact_enumeration", 0, 0.0, options.tolerance, false},
        {"msospa_vs_exact_enumeration", 0, 0.0, options.tolerance, false},
        {"msgospa_alpha_vs_exact_enumeration", 0, 0.0, options.tolerance, false},
    };
    ValidationCheck event_sum{"closed_forms_vs_event_sum", 0, 0.0, options.tolerance, false};

    for (int instance = 0; instance < options.n_instances; ++instance) {
        const int n = component_count(rng);
        std::vector<BernoulliComponent> comps;
        for (int i = 0; i < n; ++i) {
            comps.push_back({unit(rng), Point{static_cast<double>(i) * 10.0 * cfg.c}});
        }
        const MultiBernoulli mb(comps);
        const double alpha = alpha_draw(rng);
        MetricConfig alpha_cfg = cfg;
        alpha_cfg.alpha = alpha;

        DetectionVector e_hat(n, 0);
        ExistenceEvent event(n, 0);
        for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
            for (int i = 0; i < n; ++i) e_hat[i] = (mask >> i) & 1u;

            const double closed[4] = {
                msgospa(mb, e_hat, cfg.c),
                msuospa(mb, e_hat, cfg.c),
                msospa(mb, e_hat, cfg.c),
                msgospa_general_alpha(mb, e_hat, cfg.c, alpha),
            };
            const MetricKind kinds[4] = {MetricKind::Gospa2, MetricKind::Uospa, MetricKind::Ospa,
                                         MetricKind::GospaAlpha};
            const TargetSet estimate = realize(mb, e_hat);
            for (int k = 0; k < 4; ++k) {
                const MetricConfig& used = k == 3 ? alpha_cfg : cfg;
                const double exact = exact_mse(mb, estimate, kinds[k], used).mean;
                const double err = std::abs(closed[k] - exact);
                closed_forms[k].cases += 1;
                closed_forms[k].max_abs_error = std::max(closed_forms[k].max_abs_error, err);
            }

            // Independent route: average the per-event squared errors.
            KahanSum sums[4];
            for (std::uint32_t emask = 0; emask < (1u << n); ++emask) {
                for (int i = 0; i < n; ++i) event[i] = (emask >> i) & 1u;
                const double p = event_probability(mb, event);
                for (int k = 0; k < 4; ++k) {
                    sums[k].add(p * square_error_given_event(kinds[k], event, e_hat, cfg.c, alpha));
                }
            }
            for (int k = 0; k < 4; ++k) {
                event_sum.cases += 1;
                event_sum.max_abs_error =
                    std::max(event_sum.max_abs_error, std::abs(sums[k].value() - closed[k]));
            }
        }
    }
    for (auto& check : closed_forms) check.passed = check.max_abs_error <= check.tolerance;
    event_sum.passed = event_sum.max_abs_error <= event_sum.tolerance;

    // Monte-Carlo consistency: the sample mean should sit within four
    // standard errors of the exact value in at least 95% of configurations.
    // max_abs_error here is the worst |mean - exact| - 4*std_err, so a
    // negative value means every configuration had slack.
    ValidationCheck monte_carlo{"monte_carlo_within_4_std_err",
                                0,
                                -std::numeric_limits<double>::infinity(),
                                0.0,
                                false};
    const int mc_configs = std::min(options.n_instances, 20);
    long mc_hits = 0;
    for (int config = 0; config < mc_configs; ++config) {
        const int n = component_count(rng);
        std::vector<BernoulliComponent> comps;
        for (int i = 0; i < n; ++i) {
            comps.push_back({unit(rng), Point{static_cast<double>(i) * 10.0 * cfg.c}});
        }
        const MultiBernoulli mb(comps);
        DetectionVector e_hat(n, 0);
        for (int i = 0; i < n; ++i) e_hat[i] = unit(rng) < 0.5 ? 0 : 1;
        const TargetSet estimate = realize(mb, e_hat);
        const MetricKind kind = config % 2 == 0 ? MetricKind::Gospa2 : MetricKind::Ospa;

        const double exact = exact_mse(mb, estimate, kind, cfg).mean;
        const auto mc = monte_carlo_mse(mb, estimate, kind, cfg, options.n_samples,
                                        options.seed + 1000 + static_cast<std::uint64_t>(config));
        const double excess = std::abs(mc.mean - exact) - 4.0 * mc.std_err;
        monte_carlo.cases += 1;
        monte_carlo.max_abs_error = std::max(monte_carlo.max_abs_error, excess);
        if (excess <= 0.0) ++mc_hits;
    }
    monte_carlo.passed = 20 * mc_hits >= 19 * monte_carlo.cases;

    ValidationReport report;
    for (auto& check : closed_forms) report.checks.push_back(check);
    report.checks.push_back(event_sum);
    report.checks.push_back(monte_carlo);
    report.all_passed = true;
    for (const auto& check : report.checks) report.all_passed = report.all_passed && check.passed;
    return report;
}

std::string validation_csv(const ValidationReport& report) {
    std::string out = "check,cases,max_abs_error,tolerance,status\n";
    for (const auto& check : report.checks) {
        out += check.name + ',' + std::to_string(check.cases) + ',' +
               format_double(check.max_abs_error) + ',' + format_double(check.tolerance) + ',' +
               (check.passed ? "pass" : "fail") + '\n';
    }
    return out;
}

} // namespace gospa
