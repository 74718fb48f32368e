// Copyright 2026 The cventlab Authors
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

#ifndef CVENTLAB_ERRORS_HPP_
#define CVENTLAB_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace cventlab {

// Argument outside the mathematical domain of an operation (negative
// squeezing, x >= 1, non-physical covariance, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Malformed call: bad mode index, empty input, mismatched shapes.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Heterodyne statistics requested for a state outside the twin-beam family.
class UnsupportedState : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Fock truncation too coarse for the requested tolerance.
class TruncationError : public std::runtime_error {
 public:
  TruncationError(const std::string& what, int suggested_cutoff)
      : std::runtime_error(what), suggested_cutoff_(suggested_cutoff) {}
  int suggested_cutoff() const noexcept { return suggested_cutoff_; }

 private:
  int suggested_cutoff_;
};

}  // namespace cventlab

#endif  // CVENTLAB_ERRORS_HPP_
