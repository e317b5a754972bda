// Copyright 2026 The netgame Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef NETGAME_ERROR_HPP_
#define NETGAME_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace netgame {

inline constexpr double kDefaultTolerance = 1e-9;

enum class ErrorCode {
  kInvalidPlayer,
  kInvalidLink,
  kUniverseTooLarge,
  kUniverseMismatch,
  kSubsetViolation,
  kNotABijection,
  kGroundTooLarge,
  kEmptyBasisNetwork,
  kNonConnectedKey,
  kKeyOutsideGround,
  kGroundMismatch,
  kTooManyPlayers,
  kNotComponentAdditive,
  kAlphaOutOfRange,
  kNotConnected,
  kCorpusTooLarge,
  kNotZeroMonotonic,
  kEquilibriumMismatch,
  kNonDeterministicProfileWithoutSeed,
  kParseError,
};

constexpr std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidPlayer: return "InvalidPlayer";
    case ErrorCode::kInvalidLink: return "InvalidLink";
    case ErrorCode::kUniverseTooLarge: return "UniverseTooLarge";
    case ErrorCode::kUniverseMismatch: return "UniverseMismatch";
    case ErrorCode::kSubsetViolation: return "SubsetViolation";
    case ErrorCode::kNotABijection: return "NotABijection";
    case ErrorCode::kGroundTooLarge: return "GroundTooLarge";
    case ErrorCode::kEmptyBasisNetwork: return "EmptyBasisNetwork";
    case ErrorCode::kNonConnectedKey: return "NonConnectedKey";
    case ErrorCode::kKeyOutsideGround: return "KeyOutsideGround";
    case ErrorCode::kGroundMismatch: return "GroundMismatch";
    case ErrorCode::kTooManyPlayers: return "TooManyPlayers";
    case ErrorCode::kNotComponentAdditive: return "NotComponentAdditive";
    case ErrorCode::kAlphaOutOfRange: return "AlphaOutOfRange";
    case ErrorCode::kNotConnected: return "NotConnected";
    case ErrorCode::kCorpusTooLarge: return "CorpusTooLarge";
    case ErrorCode::kNotZeroMonotonic: return "NotZeroMonotonic";
    case ErrorCode::kEquilibriumMismatch: return "EquilibriumMismatch";
    case ErrorCode::kNonDeterministicProfileWithoutSeed:
      return "NonDeterministicProfileWithoutSeed";
    case ErrorCode::kParseError: return "ParseError";
  }
  return "Unknown";
}

/// All library failures are reported through this exception type; `code()`
/// identifies the failed precondition.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_name(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace netgame

#endif  // NETGAME_ERROR_HPP_
