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

#include <cmath>
#include <random>
#include <vector>

#include "catch_amalgamated.hpp"
#include "qidt/attack.hpp"
#include "qidt/zoo.hpp"
#include "test_support.hpp"

using namespace qidt;
using Catch::Approx;

namespace {

// CNOT from the system qubit (control, low bit) into a qubit apparatus
// (target, high bit): |e, i> -> |e^i, i>, written out by hand.
ComplexMatrix hand_cnot() {
  return ComplexMatrix{{1, 0, 0, 0},
                       {0, 0, 0, 1},
                       {0, 0, 1, 0},
                       {0, 1, 0, 0}};
}

// Conjugate family through matrices: W(e*N + j, i) = E_ij[e], then
// W' = (I_E (x) M) W M.
ComplexMatrix slice_matrix(const AttackChannel& ch) {
  const std::size_t d = ch.system_dim();
  ComplexMatrix w(ch.eve_dim() * d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t e = 0; e < ch.eve_dim(); ++e) w(e * d + j, i) = ch.kraus(i, j)[e];
  return w;
}

double max_table_diff(const AttackChannel& a, const AttackChannel& b) {
  double m = 0.0;
  for (std::size_t k = 0; k < a.table().size(); ++k)
    m = std::max(m, max_abs_diff(a.table()[k], b.table()[k]));
  return m;
}

}  // namespace

TEST_CASE("from_unitary", "[attack-model]") {
  SECTION("identity") {
    const auto ch = from_unitary(ComplexMatrix::identity(4), StateVector{1.0}, 2);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j)
        CHECK(ch.kraus(i, j)[0] == cplx(i == j ? 1.0 : 0.0));
  }
  SECTION("CNOT probe") {
    const auto ch = from_unitary(hand_cnot(), StateVector{1.0, 0.0}, 1);
    CHECK(max_abs_diff(ch.kraus(0, 0), StateVector{1.0, 0.0}) == 0.0);
    CHECK(max_abs_diff(ch.kraus(1, 1), StateVector{0.0, 1.0}) == 0.0);
    CHECK(ch.kraus(0, 1).norm_squared() == 0.0);
    CHECK(ch.kraus(1, 0).norm_squared() == 0.0);
  }
  SECTION("ancilla in superposition") {
    const double r = 1.0 / std::sqrt(2.0);
    const auto ch = from_unitary(ComplexMatrix::identity(4), StateVector{r, r}, 1);
    CHECK(max_abs_diff(ch.kraus(1, 1), StateVector{r, r}) < 1e-16);
  }
  SECTION("errors") {
    CHECK_THROWS_AS(from_unitary(ComplexMatrix{{1, 1}, {0, 1}}, StateVector{1.0}, 1), NotUnitary);
    CHECK_THROWS_AS(from_unitary(ComplexMatrix::identity(4), StateVector{1.0}, 1),
                    DimensionMismatch);
    CHECK_THROWS_AS(from_unitary(ComplexMatrix::identity(4), StateVector{1.0, 1.0}, 1),
                    InvalidState);
  }
}

TEST_CASE("AttackChannel rejects tables that are not row-orthonormal", "[attack-model]") {
  std::vector<StateVector> t = {StateVector{1.0}, StateVector{0.0}, StateVector{1.0},
                                StateVector{0.0}};
  CHECK_THROWS_AS(AttackChannel(1, 1, t), NotUnitary);
  CHECK_THROWS_AS(AttackChannel(1, 1, std::vector<StateVector>(3, StateVector{1.0})),
                  DimensionMismatch);
}

TEST_CASE("to_conjugate_basis", "[attack-model]") {
  SECTION("identity maps to identity") {
    const auto conj = to_conjugate_basis(make_attack({AttackKind::Identity, 1}));
    CHECK(conj.basis() == Basis::BConjugate);
    for (std::size_t l = 0; l < 2; ++l)
      for (std::size_t s = 0; s < 2; ++s)
        CHECK(std::abs(conj.kraus(l, s)[0] - cplx(l == s ? 1.0 : 0.0)) < 1e-15);
  }
  SECTION("CNOT probe") {
    const auto conj = to_conjugate_basis(from_unitary(hand_cnot(), StateVector{1.0, 0.0}, 1));
    for (std::size_t l = 0; l < 2; ++l)
      for (std::size_t s = 0; s < 2; ++s) {
        const double sign = ((l ^ s) & 1U) ? -1.0 : 1.0;
        CHECK(max_abs_diff(conj.kraus(l, s), StateVector{0.5, 0.5 * sign}) < 1e-15);
      }
  }
  SECTION("round trip and matrix route on random channels") {
    for (int n = 1; n <= 2; ++n)
      for (std::size_t e : {1U, 2U, 4U}) {
        const auto ch = random_attack(n, e, 1000 + n * 10 + e);
        const auto conj = to_conjugate_basis(ch);
        CHECK(conj.unitarity_defect() <= 1e-9);
        const auto back = to_conjugate_basis(conj);
        CHECK(back.basis() == Basis::B);
        CHECK(max_table_diff(back, ch) <= 1e-12);

        const ComplexMatrix m = mub_transform(n);
        const ComplexMatrix expected =
            tensor_product(ComplexMatrix::identity(e), m) * slice_matrix(ch) * m;
        CHECK(max_abs_diff(slice_matrix(conj), expected) <= 1e-12);
      }
  }
}

TEST_CASE("eve_state", "[attack-model]") {
  const auto id = make_attack({AttackKind::Identity, 2});
  for (std::size_t i = 0; i < 4; ++i) CHECK(eve_state(id, i).matrix()(0, 0) == cplx(1.0));

  const auto cnot = from_unitary(hand_cnot(), StateVector{1.0, 0.0}, 1);
  CHECK(max_abs_diff(eve_state(cnot, 0).matrix(), ComplexMatrix{{1, 0}, {0, 0}}) == 0.0);
  CHECK(max_abs_diff(eve_state(cnot, BitString(1, 1)).matrix(), ComplexMatrix{{0, 0}, {0, 1}}) ==
        0.0);

  const double theta = 0.7;
  const auto probe = make_attack({AttackKind::ProbeOverlap, 1, {theta}});
  const auto r0 = eve_state(probe, 0).matrix();
  const auto r1 = eve_state(probe, 1).matrix();
  // Both pure; tr(r0 r1) = |<eta0|eta1>|^2 = cos^2 theta.
  CHECK((r0 * r1).trace().real() == Approx(std::cos(theta) * std::cos(theta)).epsilon(1e-14));
  CHECK((r1 * r1).trace().real() == Approx(1.0).epsilon(1e-14));

  CHECK_THROWS_AS(eve_state(id, BitString(1, 0)), DimensionMismatch);
}

TEST_CASE("eve_state traces sum to 2^n", "[attack-model][property]") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const int n = 1 + static_cast<int>(seed % 2);
    const std::size_t e = std::size_t{1} << (seed % 3);
    const auto ch = random_attack(n, e, seed);
    double sum = 0.0;
    for (std::size_t i = 0; i < ch.system_dim(); ++i)
      sum += eve_state(ch, i).matrix().trace().real();
    CHECK(std::abs(sum - static_cast<double>(ch.system_dim())) <= 1e-9);
  }
}

TEST_CASE("bob_conjugate_state", "[attack-model]") {
  SECTION("identity attack leaves |i-bar>") {
    for (int n = 1; n <= 2; ++n) {
      const auto ch = make_attack({AttackKind::Identity, n});
      const ComplexMatrix m = mub_transform(n);
      for (std::size_t i = 0; i < ch.system_dim(); ++i) {
        StateVector ibar(ch.system_dim());
        for (std::size_t r = 0; r < ibar.dim(); ++r) ibar[r] = m(r, i);
        CHECK(max_abs_diff(bob_conjugate_state(ch, i).matrix(), outer(ibar, ibar)) < 1e-15);
      }
    }
  }
  SECTION("phase conversion flips 0-bar to 1-bar") {
    const auto ch = make_attack({AttackKind::PhaseConversion, 1});
    const double r = 1.0 / std::sqrt(2.0);
    const StateVector one_bar{r, -r};
    CHECK(max_abs_diff(bob_conjugate_state(ch, 0).matrix(), outer(one_bar, one_bar)) < 1e-15);
  }
  SECTION("random attacks give unit trace") {
    for (std::uint64_t seed = 0; seed < 12; ++seed) {
      const auto ch = random_attack(1 + static_cast<int>(seed % 2), 1 + seed % 3, seed);
      for (std::size_t i = 0; i < ch.system_dim(); ++i)
        CHECK(std::abs(bob_conjugate_state(ch, i).matrix().trace() - 1.0) <= 1e-10);
    }
  }
}

TEST_CASE("xor_error_distribution", "[attack-model]") {
  CHECK(xor_error_distribution(make_attack({AttackKind::Identity, 2})).probs() ==
        std::vector<double>{1.0, 0.0, 0.0, 0.0});
  CHECK(xor_error_distribution(make_attack({AttackKind::PhaseConversion, 1})).probs() ==
        std::vector<double>{0.0, 1.0});

  SECTION("intercept-resend matches the enumeration oracle") {
    for (int n = 1; n <= 2; ++n) {
      const std::size_t d = std::size_t{1} << n;
      // Eve sees k with |<k|i-bar>|^2, resends |k>, Bob reads j-bar with
      // |<j-bar|k>|^2; all MUB overlaps are 2^-n.
      std::vector<double> oracle(d, 0.0);
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t k = 0; k < d; ++k)
          for (std::size_t c = 0; c < d; ++c) {
            const double a = testing::mub_entry_by_bits(n, k, i);
            const double b = testing::mub_entry_by_bits(n, k, i ^ c);
            oracle[c] += a * a * b * b / static_cast<double>(d);
          }
      const auto ed = xor_error_distribution(make_attack({AttackKind::InterceptResend, n}));
      for (std::size_t c = 0; c < d; ++c) CHECK(ed[c] == Approx(oracle[c]).epsilon(1e-14));
    }
    const auto ed1 = xor_error_distribution(make_attack({AttackKind::InterceptResend, 1}));
    CHECK(ed1[0] == Approx(0.5).epsilon(1e-15));
    CHECK(ed1[1] == Approx(0.5).epsilon(1e-15));
  }

  SECTION("agrees with the diagonal of Bob's state") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const int n = 1 + static_cast<int>(seed % 2);
      const auto ch = random_attack(n, 1 + seed % 4, seed + 77);
      const auto ed = xor_error_distribution(ch);
      const ComplexMatrix m = mub_transform(n);
      const std::size_t d = ch.system_dim();
      std::vector<double> oracle(d, 0.0);
      for (std::size_t i = 0; i < d; ++i) {
        // Bob's outcome distribution in the conjugate basis.
        const ComplexMatrix in_conj = m * bob_conjugate_state(ch, i).matrix() * m;
        for (std::size_t j = 0; j < d; ++j) oracle[i ^ j] += in_conj(j, j).real() / d;
      }
      for (std::size_t c = 0; c < d; ++c) CHECK(std::abs(ed[c] - oracle[c]) <= 1e-12);
    }
  }
}

TEST_CASE("xor_error_distribution sums to one", "[attack-model][property]") {
  int count = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed, ++count) {
    const int n = 1 + static_cast<int>(seed % 2);
    const std::size_t e = std::size_t{1} << ((seed / 2) % 3);
    const auto ed = xor_error_distribution(random_attack(n, e, 5000 + seed));
    double sum = 0.0;
    for (double p : ed.probs()) sum += p;
    CHECK(std::abs(sum - 1.0) <= 1e-9);
  }
  CHECK(count == 100);
}

TEST_CASE("ErrorDistribution validation", "[attack-model]") {
  CHECK_THROWS_AS(ErrorDistribution(1, {0.5, 0.4}), NotADistribution);
  CHECK_THROWS_AS(ErrorDistribution(1, {1.2, -0.2}), NotADistribution);
  CHECK_THROWS_AS(ErrorDistribution(2, {0.5, 0.5}), DimensionMismatch);
  CHECK(ErrorDistribution(2, {0.7, 0.1, 0.1, 0.1}).delta() == Approx(0.3).epsilon(1e-15));
}
