// Copyright 2026 The Amenable Entropy Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace amenable {

/// Caller supplied malformed or inconsistent input (mixed groups, bad
/// indices, malformed spec files). Maps to CLI exit code 1.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A mathematical precondition failed (empty set where a ratio is taken,
/// parameter outside its admissible interval). Maps to CLI exit code 2.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An input violated a structural contract another routine relies on, e.g.
/// a cover family that does not actually cover.
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// The covering selection could not certify its disjointness or coverage
/// guarantee.
class GuaranteeUnmet : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Random instance generation gave up after its retry budget.
class GenerationFailed : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace amenable
