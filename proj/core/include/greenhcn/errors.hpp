// Copyright 2026 The greenhcn Authors
//
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

#pragma once

#include <stdexcept>
#include <string>

namespace greenhcn {

/// Argument outside the mathematical domain of a model function
/// (negative distance, transmit power above P_max, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Caller broke an interface contract (mismatched lengths, t outside [0, T]).
class ContractError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Infeasibility {
  Channel,   // zero channel gain
  Duration,  // 2^x overflow, duration too short to be representable
  Demand,    // rate unreachable even at full power for the whole frame
};

/// The required rate cannot be delivered under the power caps.
class InfeasibleError : public std::runtime_error {
 public:
  InfeasibleError(Infeasibility reason, const std::string& what)
      : std::runtime_error(what), reason_(reason) {}

  Infeasibility reason() const noexcept { return reason_; }

 private:
  Infeasibility reason_;
};

/// The drop cannot host the requested candidate set; the caller redraws.
class DropRejected : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad configuration file or value. `line` is 0 when not tied to a position.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what, std::size_t line = 0)
      : std::runtime_error(what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace greenhcn
