// Copyright 2026 The vcpmas Authors
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

#ifndef VCPMAS_ERRORS_HPP
#define VCPMAS_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace vcpmas {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed edge-list, scheme or preference document.
class FormatError : public Error {
 public:
  explicit FormatError(const std::string& what, std::size_t line = 0)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  /// 1-based line number, or 0 when the error is not tied to a line.
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// An exhaustive oracle was asked to work beyond its configured cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// A documented precondition of an operation does not hold.
class ContractViolation : public Error {
 public:
  using Error::Error;
};

/// The graph contains K3, C4 or P5, so no PMAS exists.
class NotPopulationMonotonic : public Error {
 public:
  NotPopulationMonotonic(const std::string& pattern,
                         std::vector<std::string> witness);

  const std::string& pattern() const noexcept { return pattern_; }
  const std::vector<std::string>& witness() const noexcept { return witness_; }

 private:
  std::string pattern_;
  std::vector<std::string> witness_;
};

class NotBalanced : public Error {
 public:
  using Error::Error;
};

/// A scheme misses a coalition, or a coalition's vector is indexed wrongly.
class MalformedScheme : public Error {
 public:
  using Error::Error;
};

class UnsupportedInstance : public Error {
 public:
  using Error::Error;
};

}  // namespace vcpmas

#endif  // VCPMAS_ERRORS_HPP
