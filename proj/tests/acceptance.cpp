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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "qidt/harness.hpp"
#include "qidt/qidt.hpp"

using namespace qidt;

namespace {

const std::filesystem::path kScenarios = QIDT_SCENARIO_DIR;
constexpr int kPovmSamples = 64;

struct Member {
  std::string id;
  AttackChannel channel;
  BoundsReport report;
};

double h2(double x) {
  if (x <= 0.0 || x >= 1.0) return 0.0;
  return -x * std::log2(x) - (1.0 - x) * std::log2(1.0 - x);
}

// Zoo attacks at n in {1, 2} followed by the 200 random attacks of the
// shipped campaign, each audited with 64 random POVMs.
std::vector<Member> build_ensemble() {
  std::vector<Member> out;
  auto add = [&](std::string id, AttackChannel ch, std::uint64_t seed) {
    BoundsReport r = audit_attack(ch, kPovmSamples, seed);
    out.push_back({std::move(id), std::move(ch), r});
  };
  for (int n = 1; n <= 2; ++n) {
    for (AttackKind k : {AttackKind::Identity, AttackKind::PhaseConversion,
                         AttackKind::InterceptResend, AttackKind::CnotProbe})
      add(std::string(to_string(k)) + "/n=" + std::to_string(n), make_attack({k, n}), 1);
    add("random_unitary/n=" + std::to_string(n),
        make_attack({AttackKind::RandomUnitary, n, {}, 2, 1000 + static_cast<std::uint64_t>(n)}), 1);
  }
  add("probe_overlap/n=1", make_attack({AttackKind::ProbeOverlap, 1, {0.7}}), 1);

  const CampaignConfig cfg = parse_campaign(read_file(kScenarios / "theorem_campaign.json"));
  for (const auto& cell : cfg.grid)
    for (int k = 0; k < cell.count; ++k) {
      const std::uint64_t seed = campaign_sub_seed(cfg.master_seed, static_cast<std::uint64_t>(cell.n),
                                                   cell.eve_dim, static_cast<std::uint64_t>(k));
      add("random/n=" + std::to_string(cell.n) + "/d=" + std::to_string(cell.eve_dim) + "/k=" +
              std::to_string(k),
          random_attack(cell.n, cell.eve_dim, seed), mix64(seed));
    }
  return out;
}

struct Outcome {
  bool pass;
  std::string detail;
};

std::string fmt(const char* f, double a, double b = 0.0) {
  char buf[160];
  std::snprintf(buf, sizeof buf, f, a, b);
  return buf;
}

Outcome spectrum_identity(const std::vector<Member>& ens) {
  double worst = 0.0;
  for (const auto& m : ens) {
    const SigmaAnalysis sa = sigma_matrix(symmetrize(m.channel));
    worst = std::max(worst, sigma_spectrum_check(sa, xor_error_distribution(m.channel)));
  }
  return {worst <= 1e-9, fmt("%.0f attacks, max |lambda - p| = %.3g", static_cast<double>(ens.size()), worst)};
}

Outcome main_inequalities(const std::vector<Member>& ens) {
  double worst = 1e300;
  std::size_t bad = 0;
  for (const auto& m : ens) {
    const auto& r = m.report;
    const double s = std::min({r.h_xor - r.chi_sym, r.h_xor - r.i_lower, r.chi_orig - r.i_lower});
    worst = std::min(worst, s);
    if (s < -1e-9) ++bad;
  }
  return {bad == 0, fmt("min slack %.3g, %.0f violations", worst, static_cast<double>(bad))};
}

Outcome phase_conversion() {
  const BoundsReport r = audit_attack(make_attack({AttackKind::PhaseConversion, 1}), kPovmSamples, 5);
  const bool ok = std::abs(r.delta - 1.0) <= 1e-12 && std::abs(r.h_xor) <= 1e-12 &&
                  std::abs(r.chi_orig) <= 1e-9 && std::abs(r.chi_sym) <= 1e-9 &&
                  r.boykin_rhs == 4.0 && std::abs(r.corollary_rhs - 1.0) <= 1e-12;
  return {ok, fmt("delta %.17g, h_xor %.3g", r.delta, r.h_xor) +
                  fmt(", boykin %.17g, corollary %.17g", r.boykin_rhs, r.corollary_rhs)};
}

Outcome tight_family() {
  double worst = 0.0;
  for (int k = 0; k <= 6; ++k) {
    const double theta = k * std::numbers::pi / 12.0;
    const BoundsReport r =
        audit_attack(make_attack({AttackKind::ProbeOverlap, 1, {theta}}), kPovmSamples, 5);
    worst = std::max({worst, std::abs(r.chi_orig - h2((1.0 + std::cos(theta)) / 2.0)),
                      std::abs(r.h_xor - r.chi_orig)});
  }
  return {worst <= 1e-8, fmt("max deviation %.3g over 7 angles", worst)};
}

Outcome corollary_dominance(const std::vector<Member>& ens) {
  double worst = 1e300;
  for (const auto& m : ens) worst = std::min(worst, m.report.corollary_rhs - m.report.h_xor);
  const double delta = 0.01;
  std::vector<double> p(8, delta / 7.0);
  p[0] = 1.0 - delta;
  const double cor = corollary_bound(delta, 3);
  const double boy = boykin_bound(ErrorDistribution(3, p));
  const bool ok = worst >= -1e-9 && std::abs(cor - 0.11079313589591117) <= 1e-12 &&
                  std::abs(boy - 1.2) <= 1e-12 && cor < boy;
  return {ok, fmt("min corollary - h_xor %.3g; n=3 delta=0.01: corollary %.5f", worst, cor) +
                  fmt(" vs square-root bound %.5f", boy)};
}

Outcome shift_law(const std::vector<Member>& ens) {
  double state_dev = 0.0;
  double prob_dev = 0.0;
  for (const auto& m : ens) {
    const SymmetrizedChannel sym = symmetrize(m.channel);
    const std::size_t d = sym.system_dim();
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t s = 0; s < d; ++s) {
        const AncillaOutcome o = project_ancilla(sym, i, s);
        prob_dev = std::max(prob_dev, std::abs(o.probability - 1.0 / static_cast<double>(d)));
        state_dev = std::max(state_dev,
                             max_abs_diff(o.state.matrix(), eve_state(m.channel, i ^ s).matrix()));
      }
  }
  return {state_dev <= 1e-10 && prob_dev <= 1e-9,
          fmt("max state deviation %.3g, max probability deviation %.3g", state_dev, prob_dev)};
}

ComplexMatrix random_hermitian(std::size_t n, std::mt19937_64& gen) {
  std::normal_distribution<double> g;
  ComplexMatrix a(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) a(r, c) = cplx(g(gen), g(gen));
  return (a + a.adjoint()) * cplx(0.5);
}

Outcome linear_algebra() {
  std::mt19937_64 gen(20240611);
  double recon = 0.0;
  for (std::size_t n : {2, 4, 8, 16, 32, 64})
    for (int rep = 0; rep < 5; ++rep) {
      const ComplexMatrix h = random_hermitian(n, gen);
      recon = std::max(recon, max_abs_diff(reconstruct(hermitian_eigendecomposition(h)), h));
    }
  double mub = 0.0;
  for (int n = 1; n <= kMaxQubits; ++n) {
    const ComplexMatrix m = mub_transform(n);
    mub = std::max(mub, max_abs_diff(m * m, ComplexMatrix::identity(qubit_dim(n))));
  }
  double ptrace = 0.0;
  for (std::size_t da : {2, 3, 4})
    for (std::size_t db : {2, 5}) {
      ComplexMatrix a = random_hermitian(da, gen);
      a = a * a.adjoint();
      a *= cplx(1.0 / a.trace().real());
      ComplexMatrix b = random_hermitian(db, gen);
      b = b * b.adjoint();
      b *= cplx(1.0 / b.trace().real());
      const DensityMatrix ab(tensor_product(a, b));
      ptrace = std::max({ptrace, max_abs_diff(partial_trace(ab, da, db, Keep::Left).matrix(), a),
                         max_abs_diff(partial_trace(ab, da, db, Keep::Right).matrix(), b)});
    }
  return {recon <= 1e-10 && mub <= 1e-12 && ptrace <= 1e-12,
          fmt("reconstruction %.3g, MUB involution %.3g", recon, mub) +
              fmt(", partial trace %.3g", ptrace)};
}

Outcome determinism() {
  CampaignConfig cfg = parse_campaign(read_file(kScenarios / "theorem_campaign.json"));
  const auto dir = std::filesystem::temp_directory_path() / "qidt_acceptance";
  std::filesystem::create_directories(dir);
  cfg.output = (dir / "run1.csv").string();
  run_campaign(cfg, 1);
  cfg.output = (dir / "run2.csv").string();
  run_campaign(cfg, 4);
  const std::string a = read_file(dir / "run1.csv");
  const std::string b = read_file(dir / "run2.csv");
  return {a == b && !a.empty(), fmt("%.0f bytes per run, identical: %.0f", static_cast<double>(a.size()),
                                    a == b ? 1.0 : 0.0)};
}

}  // namespace

int main() {
  int failures = 0;
  auto run = [&](int id, const char* name, const std::function<Outcome()>& body) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = body();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%s  %d %-28s %s (%.2fs)\n", o.pass ? "PASS" : "FAIL", id, name, o.detail.c_str(),
                secs);
    std::fflush(stdout);
    if (!o.pass) ++failures;
  };

  const auto t0 = std::chrono::steady_clock::now();
  const std::vector<Member> ens = build_ensemble();
  std::printf("ensemble: %zu attacks audited in %.2fs\n", ens.size(),
              std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());

  run(1, "spectrum identity", [&] { return spectrum_identity(ens); });
  run(2, "main inequality suite", [&] { return main_inequalities(ens); });
  run(3, "phase-conversion separation", phase_conversion);
  run(4, "tight family", tight_family);
  run(5, "corollary dominance", [&] { return corollary_dominance(ens); });
  run(6, "symmetrization shift law", [&] { return shift_law(ens); });
  run(7, "linear algebra", linear_algebra);
  run(8, "determinism", determinism);
  return failures == 0 ? 0 : 1;
}
