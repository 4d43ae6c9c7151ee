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
#include <numbers>

#include "catch_amalgamated.hpp"
#include "qidt/info.hpp"
#include "qidt/zoo.hpp"
#include "test_support.hpp"

using namespace qidt;
using Catch::Approx;
using std::numbers::pi;

TEST_CASE("attack kind table", "[zoo]") {
  CHECK(kAttackKinds.size() == 6);
  for (const auto& info : kAttackKinds) {
    CHECK(parse_attack_kind(info.name) == info.kind);
    CHECK(to_string(info.kind) == info.name);
    CHECK_FALSE(info.description.empty());
  }
  CHECK_FALSE(parse_attack_kind("bogus").has_value());
}

TEST_CASE("built-in attacks are unitary", "[zoo]") {
  for (int n = 1; n <= 3; ++n)
    for (AttackKind k : {AttackKind::Identity, AttackKind::PhaseConversion,
                         AttackKind::InterceptResend, AttackKind::CnotProbe}) {
      const AttackChannel ch = make_attack({k, n});
      CHECK(ch.unitarity_defect() < 1e-12);
      CHECK(ch.n() == n);
    }
  CHECK(make_attack({AttackKind::Identity, 2}).eve_dim() == 1);
  CHECK(make_attack({AttackKind::InterceptResend, 2}).eve_dim() == 4);
  CHECK(make_attack({AttackKind::CnotProbe, 3}).eve_dim() == 8);
  CHECK(make_attack({AttackKind::RandomUnitary, 2, {}, 4, 9}).eve_dim() == 4);
}

TEST_CASE("phase conversion flips every conjugate outcome", "[zoo]") {
  for (int n = 1; n <= 3; ++n) {
    const auto ed = xor_error_distribution(make_attack({AttackKind::PhaseConversion, n}));
    const std::size_t all_ones = qubit_dim(n) - 1;
    CHECK(ed.probs()[all_ones] == Approx(1.0).margin(1e-12));
    CHECK(ed.delta() == Approx(1.0).margin(1e-12));
  }
}

TEST_CASE("probe overlap family", "[zoo]") {
  for (int k = 0; k <= 6; ++k) {
    const double theta = k * pi / 12.0;
    const AttackChannel ch = make_attack({AttackKind::ProbeOverlap, 1, {theta}});
    CHECK(ch.unitarity_defect() < 1e-12);
    const double expected = testing::h2((1.0 + std::cos(theta)) / 2.0);
    CHECK(holevo_chi(eve_ensemble(ch)) == Approx(expected).margin(1e-10));
    CHECK(xor_entropy_bound(xor_error_distribution(ch)) == Approx(expected).margin(1e-10));
  }
}

TEST_CASE("intercept-resend and CNOT probe saturate at one bit per qubit", "[zoo]") {
  for (int n = 1; n <= 2; ++n)
    for (AttackKind k : {AttackKind::InterceptResend, AttackKind::CnotProbe}) {
      const AttackChannel ch = make_attack({k, n});
      CHECK(xor_entropy_bound(xor_error_distribution(ch)) == Approx(n).margin(1e-10));
      CHECK(holevo_chi(eve_ensemble(ch)) == Approx(n).margin(1e-10));
    }
}

TEST_CASE("make_attack rejects bad combinations", "[zoo]") {
  CHECK_THROWS_AS(make_attack({AttackKind::ProbeOverlap, 2, {0.1}}), UnsupportedCombination);
  CHECK_THROWS_AS(make_attack({AttackKind::ProbeOverlap, 1, {}}), UnsupportedCombination);
  CHECK_THROWS_AS(make_attack({AttackKind::Identity, 1, {0.5}}), UnsupportedCombination);
  CHECK_THROWS_AS(make_attack({AttackKind::ProbeOverlap, 1, {std::nan("")}}), OutOfRange);
  CHECK_THROWS_AS(make_attack({AttackKind::Identity, 0}), OutOfRange);
  CHECK_THROWS_AS(make_attack({AttackKind::Identity, 5}), DimensionTooLarge);
}

TEST_CASE("random_attack", "[zoo]") {
  const AttackChannel a = random_attack(2, 2, 77);
  const AttackChannel b = random_attack(2, 2, 77);
  const AttackChannel c = random_attack(2, 2, 78);
  bool identical = true;
  bool differs = false;
  for (std::size_t t = 0; t < a.table().size(); ++t)
    for (std::size_t k = 0; k < a.eve_dim(); ++k) {
      identical = identical && a.table()[t][k] == b.table()[t][k];
      differs = differs || a.table()[t][k] != c.table()[t][k];
    }
  CHECK(identical);
  CHECK(differs);
  CHECK(a.unitarity_defect() < 1e-10);

  CHECK_THROWS_AS(random_attack(1, 0, 1), DimensionMismatch);
  CHECK_THROWS_AS(random_attack(4, 64, 1), DimensionTooLarge);
  CHECK_NOTHROW(random_attack(4, 32, 1));
}
