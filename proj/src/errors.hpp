// Copyright 2026 The untelegraph Authors
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

namespace untelegraph {

/// Invalid argument: out-of-range index, mismatched dimensions, malformed input.
class ParameterError : public std::invalid_argument {
 public:
  explicit ParameterError(const std::string& what) : std::invalid_argument(what) {}
};

/// Requested tensor or table size exceeds what the dense backend supports.
class CapacityError : public std::length_error {
 public:
  explicit CapacityError(const std::string& what) : std::length_error(what) {}
};

/// Attack kind not defined for the given scheme (e.g. majority vote with n != 2).
class UnsupportedAttackError : public std::invalid_argument {
 public:
  explicit UnsupportedAttackError(const std::string& what) : std::invalid_argument(what) {}
};

/// A theorem hypothesis does not hold at the requested parameters; the check is
/// reported as skipped rather than failed.
class PreconditionError : public std::domain_error {
 public:
  explicit PreconditionError(const std::string& what) : std::domain_error(what) {}
};

/// The symmetric-group Gram matrix is singular (d < k).
class SingularGramError : public std::domain_error {
 public:
  explicit SingularGramError(const std::string& what) : std::domain_error(what) {}
};

}  // namespace untelegraph
