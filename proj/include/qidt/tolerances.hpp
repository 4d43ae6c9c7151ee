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

#include <cstddef>

namespace qidt::tol {

inline constexpr double kHermitian = 1e-9;
inline constexpr double kTrace = 1e-9;
inline constexpr double kPsd = 1e-10;
inline constexpr double kEigen = 1e-10;
inline constexpr double kUnitary = 1e-9;
inline constexpr double kDistributionSum = 1e-9;
inline constexpr double kPovmSum = 1e-8;
// Jacobi sweeps stop once the off-diagonal Frobenius mass drops below this.
inline constexpr double kJacobiOffDiagonal = 1e-14;
// Eigenvalues below this are treated as outside the support.
inline constexpr double kSupport = 1e-12;
// Theorem-consequence checks in audits.
inline constexpr double kTheorem = 1e-9;

}  // namespace qidt::tol

namespace qidt {

/// Largest qubit count accepted for MUB transforms and channels.
inline constexpr int kMaxQubits = 4;
/// Largest total dimension d_E * 2^n for random channels.
inline constexpr std::size_t kMaxJointDim = 512;

}  // namespace qidt
