// Copyright 2026 The rdg Authors
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

#ifndef RDG_ERROR_H_
#define RDG_ERROR_H_

#include <stdexcept>
#include <string>

namespace rdg {

// Argument outside the operation's domain (ring index out of range, u == v).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Kernel evaluated on the diagonal.
class SingularityError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Operation requested in the wrong phase (e.g. subcritical constant at
// lambda >= 1).
class RegimeError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A moment or integral the operation relies on is infinite or undefined.
class AssumptionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Model parameters for which a finite-N formula is undefined (p_r >= 1).
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class UnsupportedError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class DegenerateError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace rdg

#endif  // RDG_ERROR_H_
