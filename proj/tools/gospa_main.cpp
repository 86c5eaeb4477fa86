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
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gospa/estimators.hpp"
#include "gospa/json_io.hpp"
#include "gospa/mse_closed_form.hpp"
#include "gospa/set_metrics.hpp"
#include "gospa/sweeps.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitValidationFailure = 2;

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.10g", v);
    return buf;
}

void write_output(const std::string& content, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + out_path);
    out << content;
}

gospa::MetricKind metric_kind_from_name(const std::string& name, double alpha) {
    if (name == "ospa") return gospa::MetricKind::Ospa;
    if (name == "uospa") return gospa::MetricKind::Uospa;
    if (name == "gospa") {
        return alpha == 2.0 ? gospa::MetricKind::Gospa2 : gospa::MetricKind::GospaAlpha;
    }
    throw CLI::ValidationError("--metric", "expected one of ospa|uospa|gospa");
}

gospa::EstimatorKind estimator_kind_from_name(const std::string& name, double alpha) {
    if (name == "gospa") {
        return alpha == 2.0 ? gospa::EstimatorKind::OptGospa2 : gospa::EstimatorKind::OptGospaAlpha;
    }
    if (name == "uospa") return gospa::EstimatorKind::OptUospa;
    if (name == "ospa") return gospa::EstimatorKind::OptOspa;
    if (name == "mam") return gospa::EstimatorKind::MarginalMultitarget;
    if (name == "jom") return gospa::EstimatorKind::Jom;
    if (name == "maxcard") return gospa::EstimatorKind::MaxCardinality;
    throw CLI::ValidationError("--estimator", "expected one of gospa|uospa|ospa|mam|jom|maxcard");
}

gospa::DetectionVector parse_detections(const std::string& text) {
    gospa::DetectionVector e;
    for (char ch : text) {
        if (ch == ',' || ch == ' ') continue;
        if (ch == '0' || ch == '1') {
            e.push_back(ch == '1' ? 1 : 0);
        } else {
            throw CLI::ValidationError("--e-hat", "expected a comma-separated list of 0/1");
        }
    }
    return e;
}

std::string detections_to_string(const gospa::DetectionVector& e) {
    std::string out;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (i) out += ',';
        out += e[i] ? '1' : '0';
    }
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Set metrics (OSPA/UOSPA/GOSPA) and optimal multi-Bernoulli detection"};
    app.require_subcommand(1);

    // ---- metric ----
    auto* cmd_metric = app.add_subcommand("metric", "Distance between two target-set JSON files");
    std::string metric_x, metric_y, metric_name = "gospa";
    gospa::MetricConfig metric_cfg;
    std::string metric_base = "euclidean";
    bool decompose = false;
    cmd_metric->add_option("x", metric_x, "first target set (JSON)")->required();
    cmd_metric->add_option("y", metric_y, "second target set (JSON)")->required();
    cmd_metric->add_option("--metric", metric_name, "ospa|uospa|gospa");
    cmd_metric->add_option("--p", metric_cfg.p, "metric order, 1 <= p");
    cmd_metric->add_option("--c", metric_cfg.c, "cutoff, c > 0");
    cmd_metric->add_option("--alpha", metric_cfg.alpha, "gospa cardinality penalty, (0, 2]");
    cmd_metric->add_option("--base-distance", metric_base, "euclidean|manhattan|chebyshev");
    cmd_metric->add_flag("--decompose", decompose,
                         "also print the alpha=2 localisation/missed/false split");

    // ---- mse ----
    auto* cmd_mse = app.add_subcommand(
        "mse", "Closed-form mean-square metric error of a detection vector");
    std::string mse_mb, mse_metric = "gospa", mse_e_hat;
    double mse_c = 1.0, mse_alpha = 2.0, mse_p = 2.0;
    cmd_mse->add_option("model", mse_mb, "multi-Bernoulli model (JSON)")->required();
    cmd_mse->add_option("--e-hat", mse_e_hat, "detection vector, e.g. 1,0,1")->required();
    cmd_mse->add_option("--metric", mse_metric, "ospa|uospa|gospa");
    cmd_mse->add_option("--p", mse_p, "metric order; the closed forms require p = 2");
    cmd_mse->add_option("--c", mse_c, "cutoff, c > 0");
    cmd_mse->add_option("--alpha", mse_alpha, "gospa cardinality penalty, (0, 2]");

    // ---- estimate ----
    auto* cmd_estimate = app.add_subcommand("estimate", "Optimal detection vector for a model");
    std::string est_mb, est_name = "gospa";
    double est_c = 1.0, est_alpha = 2.0;
    cmd_estimate->add_option("model", est_mb, "multi-Bernoulli model (JSON)")->required();
    cmd_estimate->add_option("--estimator", est_name, "gospa|uospa|ospa|mam|jom|maxcard");
    cmd_estimate->add_option("--c", est_c, "cutoff, c > 0");
    cmd_estimate->add_option("--alpha", est_alpha, "gospa cardinality penalty, (0, 2]");

    // ---- sweep-regions ----
    auto* cmd_regions = app.add_subcommand(
        "sweep-regions", "Decision-region raster over (r1, r2) for two far-apart components");
    std::vector<std::string> region_estimators{"gospa", "uospa", "ospa"};
    double region_step = 0.01, region_c = 1.0, region_alpha = 2.0;
    std::string region_out;
    bool region_gnuplot = false;
    cmd_regions->add_option("--estimator", region_estimators,
                            "estimators to raster (repeatable)");
    cmd_regions->add_option("--grid-step", region_step, "raster step in (0, 0.5]");
    cmd_regions->add_option("--c", region_c, "cutoff, c > 0");
    cmd_regions->add_option("--alpha", region_alpha, "gospa cardinality penalty, (0, 2]");
    cmd_regions->add_option("--out", region_out, "write CSV here instead of stdout");
    cmd_regions->add_flag("--gnuplot", region_gnuplot, "also write <out>.gp (needs --out)");

    // ---- sweep-cardinality ----
    auto* cmd_cardinality = app.add_subcommand(
        "sweep-cardinality", "Optimal detected counts vs component count, identical r");
    double card_r = 0.0, card_c = 1.0;
    int card_n_max = 30;
    std::string card_out;
    bool card_gnuplot = false;
    cmd_cardinality->add_option("--r", card_r, "shared existence probability in [0, 1]")
        ->required();
    cmd_cardinality->add_option("--n-max", card_n_max, "largest component count, <= 30");
    cmd_cardinality->add_option("--c", card_c, "cutoff, c > 0");
    cmd_cardinality->add_option("--out", card_out, "write CSV here instead of stdout");
    cmd_cardinality->add_flag("--gnuplot", card_gnuplot, "also write <out>.gp (needs --out)");

    // ---- validate ----
    auto* cmd_validate = app.add_subcommand(
        "validate", "Cross-check the closed-form errors against exact enumeration");
    gospa::ValidationOptions validate_options;
    std::string validate_out;
    cmd_validate->add_option("--seed", validate_options.seed, "RNG seed");
    cmd_validate->add_option("--instances", validate_options.n_instances,
                             "number of random models");
    cmd_validate->add_option("--samples", validate_options.n_samples,
                             "Monte-Carlo samples per configuration");
    cmd_validate->add_option("--tolerance", validate_options.tolerance,
                             "max allowed closed-form vs oracle deviation");
    cmd_validate->add_option("--out", validate_out, "write CSV here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (cmd_metric->parsed()) {
            metric_cfg.base_distance = gospa::base_distance_from_name(metric_base);
            const auto x = gospa::load_target_set(metric_x);
            const auto y = gospa::load_target_set(metric_y);
            double value = 0.0;
            if (metric_name == "ospa") {
                value = gospa::ospa(x, y, metric_cfg);
            } else if (metric_name == "uospa") {
                value = gospa::uospa(x, y, metric_cfg);
            } else if (metric_name == "gospa") {
                value = gospa::gospa(x, y, metric_cfg);
            } else {
                throw std::runtime_error("unknown metric '" + metric_name + "'");
            }
            std::string out = format_double(value) + "\n";
            if (decompose) {
                const auto parts = gospa::gospa_alpha2_decomposed(x, y, metric_cfg);
                out += "localisation=" + format_double(parts.localisation_cost) + "\n";
                out += "missed=" + format_double(parts.missed_cost) + "\n";
                out += "false=" + format_double(parts.false_cost) + "\n";
                std::string pairs;
                for (const auto& [i, j] : parts.assignment) {
                    if (!pairs.empty()) pairs += ' ';
                    pairs += std::to_string(i) + "-" + std::to_string(j);
                }
                out += "assignment=" + pairs + "\n";
            }
            std::cout << out;
            return kExitOk;
        }

        if (cmd_mse->parsed()) {
            const auto mb = gospa::load_multi_bernoulli(mse_mb);
            gospa::MetricConfig cfg;
            cfg.p = mse_p;
            cfg.c = mse_c;
            cfg.alpha = mse_alpha;
            const auto kind = metric_kind_from_name(mse_metric, mse_alpha);
            const auto report = gospa::evaluate_mse(mb, parse_detections(mse_e_hat), kind, cfg);
            std::cout << format_double(report.value) << "\n";
            return kExitOk;
        }

        if (cmd_estimate->parsed()) {
            const auto mb = gospa::load_multi_bernoulli(est_mb);
            const auto kind = estimator_kind_from_name(est_name, est_alpha);
            const auto outcome = gospa::run_estimator(mb, kind, est_c, est_alpha);
            std::cout << "e_hat=" << detections_to_string(outcome.e_hat) << "\n";
            std::cout << "objective=" << format_double(outcome.objective_value) << "\n";
            std::cout << "n_ties=" << outcome.ties.size() << "\n";
            return kExitOk;
        }

        if (cmd_regions->parsed()) {
            if (region_gnuplot && region_out.empty()) {
                throw std::runtime_error("--gnuplot needs --out so the script can name the CSV");
            }
            const gospa::Point location1{0.0}, location2{10.0 * region_c};
            std::vector<std::pair<std::string, gospa::RegionGrid>> grids;
            for (const auto& name : region_estimators) {
                const auto kind = estimator_kind_from_name(name, region_alpha);
                grids.emplace_back(
                    name, gospa::sweep_regions(kind, region_step, region_c, region_alpha,
                                               location1, location2));
            }
            write_output(gospa::region_grids_csv(grids), region_out);
            if (region_gnuplot) {
                std::ofstream gp(region_out + ".gp");
                gp << gospa::region_grids_gnuplot(region_out, region_estimators);
            }
            return kExitOk;
        }

        if (cmd_cardinality->parsed()) {
            if (card_gnuplot && card_out.empty()) {
                throw std::runtime_error("--gnuplot needs --out so the script can name the CSV");
            }
            const auto rows = gospa::sweep_cardinality(card_r, card_n_max, card_c);
            write_output(gospa::cardinality_csv(rows), card_out);
            if (card_gnuplot) {
                std::ofstream gp(card_out + ".gp");
                gp << gospa::cardinality_gnuplot(card_out);
            }
            return kExitOk;
        }

        if (cmd_validate->parsed()) {
            const auto report = gospa::run_validation(validate_options);
            write_output(gospa::validation_csv(report), validate_out);
            return report.all_passed ? kExitOk : kExitValidationFailure;
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
