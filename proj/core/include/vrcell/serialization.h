// Copyright 2026 The vrcell Authors.
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef VRCELL_SERIALIZATION_H_
#define VRCELL_SERIALIZATION_H_

#include <filesystem>

#include <nlohmann/json.hpp>

#include "vrcell/channel.h"
#include "vrcell/metrics.h"
#include "vrcell/problem.h"
#include "vrcell/scenario.h"
#include "vrcell/solvers.h"
#include "vrcell/topology.h"

namespace vrcell {

using Json = nlohmann::ordered_json;

// Version of every document written below; readers reject other versions.
inline constexpr int kSchemaVersion = 1;

// All readers throw Error(kParse) on missing fields, wrong types or
// invalid values.
Json ToJson(const ChannelParams& params);
ChannelParams ChannelParamsFromJson(const Json& json,
                                    const ChannelParams& defaults = {});

Json ToJson(const Topology& topology);
Topology TopologyFromJson(const Json& json);

// w is stored as the list of (i, j, k) triples with w = 1.
Json ToJson(const Instance& instance);
Instance InstanceFromJson(const Json& json);

// alloc is stored as the list of (i, k, y) triples with y > 0.
Json ToJson(const Solution& solution);
Solution SolutionFromJson(const Json& json, int n_users, int n_views);

Json ToJson(const SolverReport& report);
Json ToJson(const RunSummary& summary);

// Tagged documents: {"schema": kind, "version": kSchemaVersion, ...}.
Json InstanceDocument(const Instance& instance, const Topology* topology);
Json SolutionDocument(const Solution& solution, const SolverReport& report);
// Throws Error(kParse) when the tag or version does not match.
void CheckDocument(const Json& json, std::string_view kind);

// Throw Error(kIo) when the file cannot be opened or written, Error(kParse)
// when it is not JSON.
Json ReadJsonFile(const std::filesystem::path& path);
void WriteJsonFile(const std::filesystem::path& path, const Json& json);

}  // namespace vrcell

#endif  // VRCELL_SERIALIZATION_H_
