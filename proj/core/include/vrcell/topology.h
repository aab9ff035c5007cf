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

#ifndef VRCELL_TOPOLOGY_H_
#define VRCELL_TOPOLOGY_H_

#include <vector>

namespace vrcell {

struct Point {
  double x = 0.0;
  double y = 0.0;

  bool operator==(const Point&) const = default;
};

double Distance(const Point& a, const Point& b);

// Cell and user positions in meters inside a disc centred at the origin.
struct Topology {
  std::vector<Point> cells;
  std::vector<Point> users;
  double map_radius = 1000.0;

  int n_cells() const { return static_cast<int>(cells.size()); }
  int n_users() const { return static_cast<int>(users.size()); }

  // Throws Error(kInvalidInstance) if a point lies outside the disc or a user
  // sits exactly on a cell.
  void Validate() const;

  bool operator==(const Topology&) const = default;
};

}  // namespace vrcell

#endif  // VRCELL_TOPOLOGY_H_
