// Copyright 2026 The murlab Authors
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

#ifndef MURLAB_ERRORS_HPP
#define MURLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace murlab {

/// Coarse failure class, used to map exceptions onto C API status values
/// and CLI exit codes.
enum class ErrorCode {
    domain = 1,       // bad parameters or violated preconditions
    io = 2,           // file system failures
    verification = 3  // a verification criterion did not hold
};

/// All library errors carry a short machine-checkable kind (e.g. "NotUnit",
/// "OutOfBall") plus a human-readable message.
class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, std::string kind, const std::string& message)
        : std::runtime_error(kind + ": " + message), code_(code), kind_(std::move(kind)) {}

    ErrorCode code() const noexcept { return code_; }
    const std::string& kind() const noexcept { return kind_; }

  private:
    ErrorCode code_;
    std::string kind_;
};

namespace errkind {
inline constexpr const char* invalid_effect = "InvalidEffect";
inline constexpr const char* invalid_state = "InvalidState";
inline constexpr const char* not_unit = "NotUnit";
inline constexpr const char* out_of_ball = "OutOfBall";
inline constexpr const char* domain_error = "DomainError";
inline constexpr const char* degenerate_targets = "DegenerateTargets";
inline constexpr const char* not_on_boundary = "NotOnBoundary";
inline constexpr const char* degenerate_dot = "DegenerateDot";
inline constexpr const char* degenerate_cd = "DegenerateCD";
inline constexpr const char* io_error = "IoError";
}  // namespace errkind

[[noreturn]] inline void throw_domain(const char* kind, const std::string& message) {
    throw Error(ErrorCode::domain, kind, message);
}

[[noreturn]] inline void throw_io(const std::string& message) {
    throw Error(ErrorCode::io, errkind::io_error, message);
}

}  // namespace murlab

#endif
