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

#include <filesystem>
#include <string>

#include <json.hpp>

#include "gospa/multi_bernoulli.hpp"
#include "gospa/set_metrics.hpp"

namespace gospa {

// Wire formats:
//   TargetSet      [[x11, x12, ...], [x21, ...], ...]
//   MultiBernoulli {"components": [{"r": 0.4, "x": [0.0]}, ...]}
//   MetricConfig   {"p": 2, "c": 1, "alpha": 2, "base_distance": "euclidean"}

nlohmann::json to_json(const TargetSet& set);
TargetSet target_set_from_json(const nlohmann::json& j);

nlohmann::json to_json(const MultiBernoulli& mb);
MultiBernoulli multi_bernoulli_from_json(const nlohmann::json& j);

nlohmann::json to_json(const MetricConfig& cfg);
/// Absent keys keep their defaults; unknown base_distance names throw.
MetricConfig metric_config_from_json(const nlohmann::json& j);

std::string base_distance_name(BaseDistance base);
BaseDistance base_distance_from_name(const std::string& name);

TargetSet load_target_set(const std::filesystem::path& path);
MultiBernoulli load_multi_bernoulli(const std::filesystem::path& path);

} // namespace gospa
