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

#ifndef VRCELL_RANDOM_H_
#define VRCELL_RANDOM_H_

#include <cstdint>

namespace vrcell {

// Independent seed for a named sub-stream (splitmix64 finaliser).
inline uint64_t DeriveSeed(uint64_t seed, uint64_t stream) {
  uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Sub-stream tags used by scenario generation.
enum SeedStream : uint64_t {
  kCellStream = 1,
  kUserStream = 2,
  kShadowStream = 3,
  kDemandStream = 4,
  kSharingStream = 5,
  kRedrawStream = 6,
};

}  // namespace vrcell

#endif  // VRCELL_RANDOM_H_
