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
#include "gospa/json_io.hpp"

#include <fstream>
#include <stdexcept>

namespace gospa {

nlohmann::json to_json(const TargetSet& set) {
    nlohmann::json j = nlohmann::json::array();
    for (const Point& p : set) j.push_back(p);
    return j;
}

TargetSet target_set_from_json(const nlohmann::json& j) {
    if (!j.is_array()) throw std::invalid_argument("a target set must be an array of points");
    TargetSet set;
    for (const auto& entry : j) {
        if (!entry.is_array() || entry.empty()) {
            throw std::invalid_argument("each point must be a nonempty array of numbers");
        }
        set.push_back(entry.get<Point>());
    }
    return set;
}

nlohmann::json to_json(const MultiBernoulli& mb) {
    nlohmann::json comps = nlohmann::json::array();
    for (const auto& comp : mb.components()) {
        comps.push_back({{"r", comp.r}, {"x", comp.location}});
    }
    return nlohmann::json{{"components", comps}};
}

MultiBernoulli multi_bernoulli_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("components") || !j.at("components").is_array()) {
        throw std::invalid_argument("expected {\"components\": [{\"r\": .., \"x\": [..]}, ...]}");
    }
    std::vector<BernoulliComponent> comps;
    for (const auto& entry : j.at("components")) {
        BernoulliComponent comp;
        comp.r = entry.at("r").get<double>();
        comp.location = entry.at("x").get<Point>();
        comps.push_back(std::move(comp));
    }
    return MultiBernoulli(std::move(comps));
}

nlohmann::json to_json(const MetricConfig& cfg) {
    return nlohmann::json{{"p", cfg.p},
                          {"c", cfg.c},
                          {"alpha", cfg.alpha},
                          {"base_distance", base_distance_name(cfg.base_distance)}};
}

MetricConfig metric_config_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw std::invalid_argument("a metric config must be an object");
    MetricConfig cfg;
    if (j.contains("p")) cfg.p = j.at("p").get<double>();
    if (j.contains("c")) cfg.c = j.at("c").get<double>();
    if (j.contains("alpha")) cfg.alpha = j.at("alpha").get<double>();
    if (j.contains("base_distance")) {
        cfg.base_distance = base_distance_from_name(j.at("base_distance").get<std::string>());
    }
    validate(cfg);
    return cfg;
}

std::string base_distance_name(BaseDistance base) {
    switch (base) {
    case BaseDistance::Euclidean:
        return "euclidean";
    case BaseDistance::Manhattan:
        return "manhattan";
    case BaseDistance::Chebyshev:
        return "chebyshev";
    }
    throw std::invalid_argument("unknown base distance");
}

BaseDistance base_distance_from_name(const std::string& name) {
    if (name == "euclidean") return BaseDistance::Euclidean;
    if (name == "manhattan") return BaseDistance::Manhattan;
    if (name == "chebyshev") return BaseDistance::Chebyshev;
    throw std::invalid_argument("unknown base distance '" + name + "'");
}

namespace {

nlohmann::json parse_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::parse_error& e) {
        throw std::runtime_error("malformed JSON in " + path.string() + ": " + e.what());
    }
    return j;
}

} // namespace

TargetSet load_target_set(const std::filesystem::path& path) {
    return target_set_from_json(parse_file(path));
}

MultiBernoulli load_multi_bernoulli(const std::filesystem::path& path) {
    return multi_bernoulli_from_json(parse_file(path));
}

} // namespace gospa
