// Copyright 2026 The pst authors
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

namespace pst {

/** Caller passed arguments that violate a precondition. */
class usage_error : public std::invalid_argument {
 public:
  explicit usage_error(const std::string& what) : std::invalid_argument(what) {}
};

/** Numerical data failed a structural check (hermiticity, normalization, ...). */
class validation_error : public std::runtime_error {
 public:
  explicit validation_error(const std::string& what) : std::runtime_error(what) {}
};

/** Requested object would exceed the supported problem size. */
class resource_error : public std::runtime_error {
 public:
  explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace pst
