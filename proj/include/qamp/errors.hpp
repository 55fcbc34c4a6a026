// Copyright 2026 The qamp Authors
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

#include <stdexcept>
#include <string>

namespace qamp {

/// Basis cutoff too small for the requested state: the witness element
/// rho[N-1][N-1] would exceed the configured tail tolerance.
class TruncationError : public std::runtime_error {
 public:
  explicit TruncationError(const std::string& what) : std::runtime_error(what) {}
};

/// Parameter outside its physical domain (G < 1, alpha <= 0, ...).
class DomainError : public std::runtime_error {
 public:
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

/// Conditioning on an impossible event: the pre-normalization trace of a
/// photon subtraction step fell below 1e-14.
class ZeroNormError : public std::runtime_error {
 public:
  explicit ZeroNormError(const std::string& what) : std::runtime_error(what) {}
};

/// A scalar search terminated at a bracket edge.
class OptimizationError : public std::runtime_error {
 public:
  explicit OptimizationError(const std::string& what) : std::runtime_error(what) {}
};

/// Numerical result too unphysical to trust (e.g. large clamped negative
/// eigenvalue mass in a matrix square root).
class NumericsError : public std::runtime_error {
 public:
  explicit NumericsError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace qamp
