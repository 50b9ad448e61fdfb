// Copyright 2026 The qnir Authors
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

#ifndef QNIR_ERRORS_HPP
#define QNIR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qnir {

// Violated precondition or broken invariant (bad argument, mismatched sizes,
// probabilities out of range, non-CPTP operator sets, ...).
class contract_error : public std::invalid_argument {
public:
  explicit contract_error(const std::string& what) : std::invalid_argument(what) {}
};

// Request exceeds configured resource limits (register too large, ...).
class resource_error : public std::runtime_error {
public:
  explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

// A generator or metric hit a degenerate numeric situation (divergent series,
// zero denominator, non-finite cost, ...).
class numeric_error : public std::runtime_error {
public:
  explicit numeric_error(const std::string& what) : std::runtime_error(what) {}
};

#define QNIR_REQUIRE(cond, msg)                                                \
  do {                                                                         \
    if (!(cond)) throw ::qnir::contract_error(msg);                            \
  } while (0)

} // namespace qnir

#endif // QNIR_ERRORS_HPP
