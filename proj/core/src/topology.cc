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

#include "vrcell/topology.h"

#include <cmath>
#include <sstream>
#include <string>

#include "vrcell/error.h"

namespace vrcell {

double Distance(const Point& a, const Point& b) {
  return std::hypot(a.x - b.x, a.y - b.y);
}

void Topology::Validate() const {
  // Generators place points with r = R*sqrt(u); allow for rounding at the rim.
  const double limit = map_radius * (1.0 + 1e-12);
  auto check_inside = [&](const Point& p, const char* what, size_t index) {
    if (!(std::hypot(p.x, p.y) <= limit)) {
      std::ostringstream msg;
      msg << what << " " << index << " at (" << p.x << ", " << p.y
          << ") lies outside the map radius " << map_radius;
      throw Error(ErrorCode::kInvalidInstance, msg.str());
    }
  };
  for (size_t j = 0; j < cells.size(); ++j) check_inside(cells[j], "cell", j);
  for (size_t i = 0; i < users.size(); ++i) {
    check_inside(users[i], "user", i);
    for (size_t j = 0; j < cells.size(); ++j) {
      if (users[i] == cells[j]) {
        throw Error(ErrorCode::kInvalidInstance,
                    "user " + std::to_string(i) + " is collocated with cell " +
                        std::to_string(j));
      }
    }
  }
}

}  // namespace vrcell
