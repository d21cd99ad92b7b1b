// Copyright 2026 The catfilter Authors
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

#ifndef CATFILTER_ERRORS_HPP
#define CATFILTER_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace catfilter {

/// Base class for all library errors that are not plain argument violations.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A discretization cannot represent the requested operation: mismatched or
/// too-short grids, aliasing, wrap-around of a convolution.
class GridError : public Error {
 public:
  using Error::Error;
};

/// A closed-form expression is not defined for the requested parameters,
/// e.g. a divergent integral or nearly coincident decay rates.
class ClosedFormError : public Error {
 public:
  using Error::Error;
};

/// A truncated Fock space is too small for the requested operation.
class CutoffError : public Error {
 public:
  using Error::Error;
};

}  // namespace catfilter

#endif  // CATFILTER_ERRORS_HPP
