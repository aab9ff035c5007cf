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

#include "vrcell/serialization.h"

#include <algorithm>
#include <array>
#include <fstream>
#include <string>

#include "vrcell/error.h"

namespace vrcell {
namespace {

[[noreturn]] void Fail(const std::string& message) {
  throw Error(ErrorCode::kParse, message);
}

const Json& Field(const Json& json, const char* key) {
  if (!json.is_object()) Fail("expected an object holding '" + std::string(key) + "'");
  auto it = json.find(key);
  if (it == json.end()) Fail("missing field '" + std::string(key) + "'");
  return *it;
}

template <typename T>
T Get(const Json& json, const char* key) {
  try {
    return Field(json, key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    Fail("field '" + std::string(key) + "': " + e.what());
  }
}

template <typename T>
T GetOr(const Json& json, const char* key, T fallback) {
  if (!json.contains(key)) return fallback;
  return Get<T>(json, key);
}

template <typename T>
Matrix<T> MatrixFromJson(const Json& json, const char* key, int rows, int cols) {
  const auto nested = Get<std::vector<std::vector<T>>>(json, key);
  if (static_cast<int>(nested.size()) != rows) {
    Fail("field '" + std::string(key) + "' has the wrong row count");
  }
  Matrix<T> out(rows, cols);
  for (int r = 0; r < rows; ++r) {
    if (static_cast<int>(nested[r].size()) != cols) {
      Fail("field '" + std::string(key) + "' has the wrong column count");
    }
    for (int c = 0; c < cols; ++c) out(r, c) = nested[r][c];
  }
  return out;
}

template <typename T>
Json MatrixToJson(const Matrix<T>& m) {
  Json rows = Json::array();
  for (int r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

Json ToJson(const ChannelParams& p) {
  return Json{{"a", p.a},
              {"b", p.b},
              {"c", p.c},
              {"fc_ghz", p.fc_ghz},
              {"shadow_sigma_db", p.shadow_sigma_db},
              {"tx_power_w", p.tx_power_w},
              {"noise_psd_dbm_hz", p.noise_psd_dbm_hz},
              {"rb_bandwidth_hz", p.rb_bandwidth_hz},
              {"rb_duration_s", p.rb_duration_s},
              {"interference_load", p.interference_load}};
}

ChannelParams ChannelParamsFromJson(const Json& json,
                                    const ChannelParams& defaults) {
  if (!json.is_object()) Fail("channel parameters must be an object");
  static const char* const kKnown[] = {
      "a", "b", "c", "fc_ghz", "shadow_sigma_db", "tx_power_w",
      "noise_psd_dbm_hz", "rb_bandwidth_hz", "rb_duration_s",
      "interference_load"};
  for (const auto& item : json.items()) {
    if (std::find(std::begin(kKnown), std::end(kKnown), item.key()) ==
        std::end(kKnown)) {
      Fail("unknown channel parameter '" + item.key() + "'");
    }
  }
  ChannelParams p = defaults;
  p.a = GetOr(json, "a", p.a);
  p.b = GetOr(json, "b", p.b);
  p.c = GetOr(json, "c", p.c);
  p.fc_ghz = GetOr(json, "fc_ghz", p.fc_ghz);
  p.shadow_sigma_db = GetOr(json, "shadow_sigma_db", p.shadow_sigma_db);
  p.tx_power_w = GetOr(json, "tx_power_w", p.tx_power_w);
  p.noise_psd_dbm_hz = GetOr(json, "noise_psd_dbm_hz", p.noise_psd_dbm_hz);
  p.rb_bandwidth_hz = GetOr(json, "rb_bandwidth_hz", p.rb_bandwidth_hz);
  p.rb_duration_s = GetOr(json, "rb_duration_s", p.rb_duration_s);
  p.interference_load = GetOr(json, "interference_load", p.interference_load);
  try {
    p.Validate();
  } catch (const Error& e) {
    Fail(e.what());
  }
  return p;
}

Json ToJson(const Topology& topology) {
  auto points = [](const std::vector<Point>& pts) {
    Json out = Json::array();
    for (const Point& p : pts) out.push_back(Json::array({p.x, p.y}));
    return out;
  };
  return Json{{"map_radius", topology.map_radius},
              {"cells", points(topology.cells)},
              {"users", points(topology.users)}};
}

Topology TopologyFromJson(const Json& json) {
  auto points = [&](const char* key) {
    std::vector<Point> out;
    for (const auto& xy : Get<std::vector<std::array<double, 2>>>(json, key)) {
      out.push_back({xy[0], xy[1]});
    }
    return out;
  };
  Topology topology;
  topology.map_radius = Get<double>(json, "map_radius");
  topology.cells = points("cells");
  topology.users = points("users");
  try {
    topology.Validate();
  } catch (const Error& e) {
    Fail(e.what());
  }
  return topology;
}

Json ToJson(const Instance& inst) {
  Json w = Json::array();
  Json enhanced = Json::array();
  for (int i = 0; i < inst.n_users; ++i) {
    Json per_cell = Json::array();
    for (int j = 0; j < inst.n_cells; ++j) {
      Json per_view = Json::array();
      for (int k = 0; k < inst.n_views; ++k) {
        if (inst.w(i, j, k)) w.push_back(Json::array({i, j, k}));
        per_view.push_back(inst.rb_enhanced(i, j, k));
      }
      per_cell.push_back(std::move(per_view));
    }
    enhanced.push_back(std::move(per_cell));
  }
  Json sharing = nullptr;
  if (inst.sharing) {
    sharing = Json::array();
    for (int j = 0; j < inst.sharing->n_cells; ++j) {
      for (int k = 0; k < inst.sharing->n_views; ++k) {
        const auto& group = inst.sharing->group(j, k);
        if (group.empty()) continue;
        sharing.push_back(Json{{"cell", j}, {"view", k}, {"users", group}});
      }
    }
  }
  return Json{{"n_users", inst.n_users},
              {"n_cells", inst.n_cells},
              {"n_views", inst.n_views},
              {"rb_budget", inst.rb_budget},
              {"w", std::move(w)},
              {"rb_basic", MatrixToJson(inst.rb_basic)},
              {"rb_enhanced", std::move(enhanced)},
              {"link_sinr", MatrixToJson(inst.link_sinr)},
              {"sharing", std::move(sharing)}};
}

Instance InstanceFromJson(const Json& json) {
  Instance inst;
  inst.n_users = Get<int>(json, "n_users");
  inst.n_cells = Get<int>(json, "n_cells");
  inst.n_views = Get<int>(json, "n_views");
  if (inst.n_users < 0 || inst.n_cells < 1 || inst.n_views < 0) {
    Fail("instance counts out of range");
  }
  const int m = inst.n_users, s = inst.n_cells, e = inst.n_views;
  inst.rb_budget = Get<std::vector<int64_t>>(json, "rb_budget");
  inst.w = Tensor3<uint8_t>(m, s, e, 0);
  for (const auto& t : Get<std::vector<std::array<int, 3>>>(json, "w")) {
    if (t[0] < 0 || t[0] >= m || t[1] < 0 || t[1] >= s || t[2] < 0 ||
        t[2] >= e) {
      Fail("w triple out of range");
    }
    inst.w(t[0], t[1], t[2]) = 1;
  }
  inst.rb_basic = MatrixFromJson<int64_t>(json, "rb_basic", m, s);
  inst.link_sinr = MatrixFromJson<double>(json, "link_sinr", m, s);
  const auto enhanced =
      Get<std::vector<std::vector<std::vector<int64_t>>>>(json, "rb_enhanced");
  inst.rb_enhanced = Tensor3<int64_t>(m, s, e, 0);
  if (static_cast<int>(enhanced.size()) != m) Fail("rb_enhanced has wrong shape");
  for (int i = 0; i < m; ++i) {
    if (static_cast<int>(enhanced[i].size()) != s) Fail("rb_enhanced has wrong shape");
    for (int j = 0; j < s; ++j) {
      if (static_cast<int>(enhanced[i][j].size()) != e) {
        Fail("rb_enhanced has wrong shape");
      }
      for (int k = 0; k < e; ++k) inst.rb_enhanced(i, j, k) = enhanced[i][j][k];
    }
  }
  const Json& sharing = Field(json, "sharing");
  if (!sharing.is_null()) {
    if (!sharing.is_array()) Fail("sharing must be null or an array");
    SharingGroups groups(s, e);
    for (const Json& g : sharing) {
      const int j = Get<int>(g, "cell");
      const int k = Get<int>(g, "view");
      if (j < 0 || j >= s || k < 0 || k >= e) Fail("sharing group out of range");
      groups.group(j, k) = Get<std::vector<int>>(g, "users");
    }
    inst.sharing = std::move(groups);
  }
  inst.Validate();
  return inst;
}

Json ToJson(const Solution& solution) {
  Json alloc = Json::array();
  for (int i = 0; i < solution.alloc.rows(); ++i) {
    for (int k = 0; k < solution.alloc.cols(); ++k) {
      if (solution.alloc(i, k) > 0) {
        alloc.push_back(Json::array({i, k, solution.alloc(i, k)}));
      }
    }
  }
  return Json{{"assoc", solution.assoc}, {"alloc", std::move(alloc)}};
}

Solution SolutionFromJson(const Json& json, int n_users, int n_views) {
  Solution solution(n_users, n_views);
  solution.assoc = Get<std::vector<int>>(json, "assoc");
  if (static_cast<int>(solution.assoc.size()) != n_users) {
    Fail("assoc length does not match the instance");
  }
  const Json& alloc = Field(json, "alloc");
  if (!alloc.is_array()) Fail("alloc must be an array");
  for (const Json& t : alloc) {
    if (!t.is_array() || t.size() != 3 || !t[0].is_number_integer() ||
        !t[1].is_number_integer() || !t[2].is_number()) {
      Fail("alloc entries must be [user, view, fraction]");
    }
    const int i = t[0].get<int>();
    const int k = t[1].get<int>();
    if (i < 0 || i >= n_users || k < 0 || k >= n_views) {
      Fail("alloc entry out of range");
    }
    solution.alloc(i, k) = t[2].get<double>();
  }
  return solution;
}

Json ToJson(const SolverReport& r) {
  Json json{{"solver", r.solver},
            {"mode", ModeName(r.mode)},
            {"objective", r.objective},
            {"wall_time_s", r.wall_time_s},
            {"nodes_explored", r.nodes_explored},
            {"nodes_pruned", r.nodes_pruned},
            {"node_budget_hit", r.node_budget_hit},
            {"warm_start_objective", nullptr},
            {"tie_breaks", r.tie_breaks},
            {"params", Json::object()}};
  if (r.warm_start_objective) json["warm_start_objective"] = *r.warm_start_objective;
  for (const auto& [key, value] : r.params) json["params"][key] = value;
  return json;
}

Json ToJson(const RunSummary& summary) {
  Json solvers = Json::array();
  for (const SolverSummary& s : summary.solvers) {
    const auto bands = UtilizationBands(s.utilization);
    solvers.push_back(Json{
        {"solver", s.solver},
        {"objective", s.objective},
        {"gap", s.gap ? Json(*s.gap) : Json(nullptr)},
        {"jain", s.jain ? Json(*s.jain) : Json(nullptr)},
        {"mean_utilization", s.mean_utilization},
        {"utilization", s.utilization},
        {"utilization_bands", bands},
        {"user_rewards", s.user_rewards},
        {"wall_time_s", s.wall_time_s},
        {"feasible", s.feasible}});
  }
  return Json{{"mode", ModeName(summary.mode)},
              {"reference", summary.reference},
              {"solvers", std::move(solvers)}};
}

Json InstanceDocument(const Instance& instance, const Topology* topology) {
  Json doc{{"schema", "vrcell.instance"},
           {"version", kSchemaVersion},
           {"instance", ToJson(instance)}};
  doc["topology"] = topology ? ToJson(*topology) : Json(nullptr);
  return doc;
}

Json SolutionDocument(const Solution& solution, const SolverReport& report) {
  return Json{{"schema", "vrcell.solution"},
              {"version", kSchemaVersion},
              {"solution", ToJson(solution)},
              {"report", ToJson(report)}};
}

void CheckDocument(const Json& json, std::string_view kind) {
  const auto schema = Get<std::string>(json, "schema");
  if (schema != kind) {
    Fail("expected a '" + std::string(kind) + "' document, got '" + schema + "'");
  }
  const int version = Get<int>(json, "version");
  if (version != kSchemaVersion) {
    Fail("unsupported schema version " + std::to_string(version));
  }
}

Json ReadJsonFile(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    Fail(path.string() + ": " + e.what());
  }
}

void WriteJsonFile(const std::filesystem::path& path, const Json& json) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::kIo, "cannot write " + path.string());
  out << json.dump(2) << '\n';
  if (!out) throw Error(ErrorCode::kIo, "failed writing " + path.string());
}

}  // namespace vrcell
