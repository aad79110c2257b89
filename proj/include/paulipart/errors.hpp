// Copyright 2026 The paulipart Authors
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

namespace paulipart {

/// Malformed text input. `line()` is 1-based, or 0 when not tied to a file line.
class ParseError : public std::invalid_argument {
   public:
    explicit ParseError(const std::string &message, std::size_t line = 0)
        : std::invalid_argument(line == 0 ? message : "line " + std::to_string(line) + ": " + message), line_(line) {}

    std::size_t line() const noexcept { return line_; }

   private:
    std::size_t line_;
};

/// An exact search exceeded its configured node-expansion budget.
class BudgetExceeded : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// A problem is too large for the requested exhaustive method.
class ProblemTooLarge : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace paulipart
