/*
   Copyright 2026 The gwcount Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace gwcount {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed field, element, form, or class literal. `position` is the
/// zero-based offset into the parsed text.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error(message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// A mathematical rejection: reducible minimal polynomial, degenerate Gram
/// matrix, degree mismatch, owner mismatch. `code` is a short machine-readable
/// reason, `witness` an optional certificate (a factor, a gcd, ...).
class MathError : public Error {
 public:
  MathError(std::string code, const std::string& message,
            std::string witness = {})
      : Error(message), code_(std::move(code)), witness_(std::move(witness)) {}

  const std::string& code() const noexcept { return code_; }
  const std::string& witness() const noexcept { return witness_; }

 private:
  std::string code_;
  std::string witness_;
};

/// The requested computation is well defined but outside what this library
/// decides (e.g. square classes in a cubic number field).
class Unsupported : public MathError {
 public:
  explicit Unsupported(const std::string& message)
      : MathError("unsupported", message) {}
};

}  // namespace gwcount
