// Copyright 2026 The nonclass Authors
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

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nonclass {

// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An argument lies outside the mathematical domain of the operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

// A requested Fock cutoff cannot certify the truncated-mass bound.
class CutoffError : public Error {
 public:
  using Error::Error;
};

// A truncated computation lost more norm than the accuracy budget allows.
class AccuracyError : public Error {
 public:
  using Error::Error;
};

// The phase-space optimum sits on the outer search window.
class WindowError : public Error {
 public:
  using Error::Error;
};

// Zoom refinement ran out of levels before reaching the target step.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

// An output file could not be written.
class IoError : public Error {
 public:
  using Error::Error;
};

// Malformed state specification text; position is a 0-based offset.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error(message + " (at position " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace nonclass
