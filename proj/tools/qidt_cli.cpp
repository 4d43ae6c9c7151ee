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

// qidt: audit eavesdropping attacks against the entropic
// information-disturbance bound.

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <thread>

#include "CLI11.hpp"
#include "qidt/harness.hpp"

namespace {

enum ExitCode : int {
  kOk = 0,
  kValidation = 2,
  kTheoremViolation = 3,
  kIo = 4,
};

struct GlobalOptions {
  std::optional<std::uint64_t> seed;
  std::string out;
  std::string format = "csv";
};

void emit(const GlobalOptions& g, const std::string& bytes) {
  if (g.out.empty()) {
    std::cout << bytes;
  } else {
    qidt::write_file(g.out, bytes);
  }
}

void print_sigma(const qidt::ScenarioResult& res) {
  for (const auto& s : res.sigma) {
    std::cerr << "sigma spectrum for " << s.attack_id << " (max deviation "
              << qidt::format_real(s.max_deviation) << ")\n";
    for (std::size_t l = 0; l < s.lambda.size(); ++l)
      std::cerr << "  l=" << l << "  lambda=" << qidt::format_real(s.lambda[l])
                << "  p(B=A^l)=" << qidt::format_real(s.error_dist[l]) << "\n";
  }
}

int run_scenario_file(const GlobalOptions& g, const std::string& path, bool sweep_only) {
  qidt::ScenarioConfig cfg = qidt::parse_scenario(qidt::read_file(path));
  if (g.seed) cfg.seed = *g.seed;
  if (sweep_only) {
    if (!cfg.has(qidt::Analysis::Sweep)) {
      // Re-validate with the sweep requested.
      if (cfg.sweep_values.empty())
        throw qidt::ValidationError("sweep.values", "the sweep command needs sweep values");
      const auto* spec = std::get_if<qidt::AttackSpec>(&cfg.attack);
      if (!spec || qidt::attack_kind_info(spec->kind).param_count != 1)
        throw qidt::ValidationError("sweep", "sweeps need a built-in attack with one parameter");
    }
    cfg.analyses = {qidt::Analysis::Sweep};
  }
  const qidt::ScenarioResult res = qidt::run_scenario(cfg);
  if (g.format == "json") {
    emit(g, qidt::write_scenario_json(res));
  } else {
    emit(g, qidt::write_report_csv(res.rows));
    print_sigma(res);
  }
  if (res.theorem_violation) {
    std::cerr << "error: an audit violated a theorem bound (internal bug)\n";
    return kTheoremViolation;
  }
  return kOk;
}

int run_campaign_file(const GlobalOptions& g, const std::string& path, unsigned jobs) {
  qidt::CampaignConfig cfg = qidt::parse_campaign(qidt::read_file(path));
  if (g.seed) cfg.master_seed = *g.seed;
  if (!g.out.empty()) cfg.output = g.out;
  if (cfg.output.empty())
    throw qidt::ValidationError("output", "no output path in the config and no --out given");
  const qidt::CampaignSummary s = qidt::run_campaign(cfg, jobs);
  std::cout << qidt::write_summary_json(s);
  if (s.violations > 0 || (s.attacks > 0 && s.min_slack_main < -qidt::tol::kTheorem)) {
    std::cerr << "error: " << s.violations << " attack(s) violated a theorem bound\n";
    return kTheoremViolation;
  }
  return kOk;
}

int list_zoo() {
  for (const auto& info : qidt::kAttackKinds)
    std::cout << info.name << "\t" << info.description << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Audit eavesdropping attacks on qubit strings in mutually unbiased bases"};
  app.require_subcommand(1);

  GlobalOptions g;
  std::uint64_t seed = 0;
  auto* seed_opt = app.add_option("--seed", seed, "Override the POVM seed (audit/sweep) or master seed (campaign)");
  app.add_option("--out", g.out, "Write output to this file instead of stdout (campaign: CSV path)");
  app.add_option("--format", g.format, "Output format for audit and sweep")
      ->check(CLI::IsMember({"csv", "json"}));

  std::string file;
  unsigned jobs = std::max(1U, std::thread::hardware_concurrency());

  auto* audit = app.add_subcommand("audit", "Run the analyses of a scenario file");
  audit->add_option("file", file, "Scenario JSON")->required();
  auto* sweep = app.add_subcommand("sweep", "Audit a parameterized attack at every sweep value");
  sweep->add_option("file", file, "Scenario JSON with a sweep section")->required();
  auto* campaign = app.add_subcommand("campaign", "Audit a seeded ensemble of random attacks");
  campaign->add_option("file", file, "Campaign JSON")->required();
  campaign->add_option("--jobs", jobs, "Worker threads (output is identical for any value)")
      ->check(CLI::PositiveNumber);
  app.add_subcommand("zoo", "List the built-in attacks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kValidation;
  }
  if (*seed_opt) g.seed = seed;

  try {
    if (*audit) return run_scenario_file(g, file, false);
    if (*sweep) return run_scenario_file(g, file, true);
    if (*campaign) return run_campaign_file(g, file, jobs);
    return list_zoo();
  } catch (const qidt::IoError& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return kIo;
  } catch (const qidt::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kValidation;
  } catch (const qidt::ValidationError& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return kValidation;
  } catch (const qidt::TheoremViolation& e) {
    std::cerr << "theorem violation: " << e.what() << "\n";
    return kTheoremViolation;
  } catch (const qidt::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kValidation;
  }
}
