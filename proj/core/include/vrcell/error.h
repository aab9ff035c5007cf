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

#ifndef VRCELL_ERROR_H_
#define VRCELL_ERROR_H_

#include <stdexcept>
#include <string>

namespace vrcell {

enum class ErrorCode {
  kDomain,           // argument outside the mathematical domain (e.g. d <= 0)
  kUnreachableUser,  // a link or user supports zero rate
  kUncoveredUser,    // no cell can even deliver the basic view to a user
  kPlacement,        // cache coverage cannot be satisfied (E > S*K)
  kInvalidInstance,  // instance or solution fails shape/value checks
  kCapExceeded,      // brute-force enumeration above its configured cap
  kParse,            // malformed input file or config
  kIo,
};

const char* ErrorCodeName(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace vrcell

#endif  // VRCELL_ERROR_H_
