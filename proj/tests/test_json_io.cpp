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

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>

#include "gospa/json_io.hpp"
#include "test_support.hpp"

using gospa::BernoulliComponent;
using gospa::MetricConfig;
using gospa::MultiBernoulli;
using gospa::Point;
using gospa::TargetSet;

namespace {

struct TempFile {
    std::filesystem::path path;
    explicit TempFile(const std::string& contents) {
        path = std::filesystem::temp_directory_path() /
               ("gospa_test_" + std::to_string(std::random_device{}()) + ".json");
        std::ofstream out(path);
        out << contents;
    }
    ~TempFile() { std::filesystem::remove(path); }
};

} // namespace

TEST_CASE("target sets round-trip through json") {
    std::mt19937_64 rng(1);
    for (int trial = 0; trial < 50; ++trial) {
        const auto set = gospa::testing::random_set(6, 1 + trial % 3, rng);
        CHECK(gospa::target_set_from_json(gospa::to_json(set)) == set);
    }
}

TEST_CASE("multi-bernoulli models round-trip through json") {
    std::mt19937_64 rng(2);
    for (int trial = 0; trial < 50; ++trial) {
        const auto mb = gospa::testing::random_separated_model(1 + trial % 6, rng);
        const auto restored = gospa::multi_bernoulli_from_json(gospa::to_json(mb));
        REQUIRE(restored.size() == mb.size());
        for (std::size_t i = 0; i < mb.size(); ++i) {
            CHECK(restored.component(i).r == mb.component(i).r);
            CHECK(restored.component(i).location == mb.component(i).location);
        }
    }
}

TEST_CASE("metric config parses with defaults and validates") {
    const auto defaults = gospa::metric_config_from_json(nlohmann::json::object());
    CHECK(defaults.p == 2.0);
    CHECK(defaults.c == 1.0);
    CHECK(defaults.alpha == 2.0);
    CHECK(defaults.base_distance == gospa::BaseDistance::Euclidean);

    const auto parsed = gospa::metric_config_from_json(
        nlohmann::json{{"p", 1.0}, {"c", 0.5}, {"alpha", 1.0}, {"base_distance", "manhattan"}});
    CHECK(parsed.p == 1.0);
    CHECK(parsed.base_distance == gospa::BaseDistance::Manhattan);

    CHECK_THROWS(gospa::metric_config_from_json(nlohmann::json{{"alpha", 3.0}}));
    CHECK_THROWS(gospa::metric_config_from_json(nlohmann::json{{"base_distance", "cosine"}}));

    const auto round = gospa::metric_config_from_json(gospa::to_json(parsed));
    CHECK(round.c == parsed.c);
}

TEST_CASE("malformed input is rejected with context") {
    const TempFile bad("this is not json");
    CHECK_THROWS_AS(gospa::load_target_set(bad.path), std::runtime_error);
    CHECK_THROWS_AS(gospa::load_multi_bernoulli(bad.path), std::runtime_error);
    CHECK_THROWS(gospa::load_target_set("/nonexistent/gospa.json"));
    CHECK_THROWS(gospa::target_set_from_json(nlohmann::json{{"not", "a set"}}));
    CHECK_THROWS(gospa::target_set_from_json(nlohmann::json::array({nlohmann::json::array()})));
    CHECK_THROWS(gospa::multi_bernoulli_from_json(nlohmann::json::array()));
}

TEST_CASE("files load") {
    const TempFile set_file("[[0.0], [10.0]]");
    const auto set = gospa::load_target_set(set_file.path);
    CHECK(set == TargetSet{{0.0}, {10.0}});

    const TempFile mb_file(R"({"components": [{"r": 0.4, "x": [0.0]}, {"r": 0.9, "x": [10.0]}]})");
    const auto mb = gospa::load_multi_bernoulli(mb_file.path);
    REQUIRE(mb.size() == 2);
    CHECK(mb.component(1).r == 0.9);
}
