// Copyright 2026 The qidt Authors
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

#include <cmath>
#include <cstddef>
#include <string>

#include "qidt/bitstring.hpp"
#include "qidt/error.hpp"
#include "qidt/matrix.hpp"
#include "qidt/tolerances.hpp"

namespace qidt {

inline std::size_t qubit_dim(int n) { return std::size_t{1} << n; }

inline void require_qubit_count(int n, const char* who) {
  if (n < 1) throw OutOfRange(std::string(who) + ": qubit count must be >= 1");
  if (n > kMaxQubits) {
    throw DimensionTooLarge(std::string(who) + ": " + std::to_string(n) +
                            " qubits exceeds the limit of " + std::to_string(kMaxQubits));
  }
}

/// Change of basis to the conjugate (Hadamard) basis on n qubits:
/// M(i, k) = <i|k-bar> = 2^{-n/2} (-1)^{i.k}. M is real, symmetric and an
/// involution.
inline ComplexMatrix mub_transform(int n) {
  require_qubit_count(n, "mub_transform");
  const std::size_t d = qubit_dim(n);
  const double scale = std::pow(2.0, -0.5 * n);
  ComplexMatrix m(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t k = 0; k < d; ++k) m(i, k) = scale * parity_sign(i, k);
  return m;
}

}  // namespace qidt
