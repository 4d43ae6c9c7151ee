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

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <thread>
#include <variant>
#include <vector>

#include "json.hpp"

#include "qidt/attack.hpp"
#include "qidt/error.hpp"
#include "qidt/info.hpp"
#include "qidt/matrix.hpp"
#include "qidt/rng.hpp"
#include "qidt/symmetrize.hpp"
#include "qidt/zoo.hpp"

namespace qidt {

enum class Analysis { Audit, SigmaSpectrum, Sweep };

/// Attack given as an explicit unitary on H_E (x) H_A plus ancilla state.
struct ExplicitAttack {
  ComplexMatrix unitary;
  StateVector ancilla;
};

struct ScenarioConfig {
  std::string name;
  int n_qubits = 1;
  std::variant<AttackSpec, ExplicitAttack> attack;
  int povm_samples = 0;
  std::uint64_t seed = 0;
  std::vector<Analysis> analyses;
  std::vector<double> sweep_values;

  bool has(Analysis a) const {
    return std::find(analyses.begin(), analyses.end(), a) != analyses.end();
  }
};

struct CampaignCell {
  int n = 1;
  std::size_t eve_dim = 1;
  int count = 0;
};

struct CampaignConfig {
  std::vector<CampaignCell> grid;
  std::uint64_t master_seed = 0;
  int povm_samples = 0;
  std::string output;
};

struct ReportRow {
  std::string attack_id;
  BoundsReport report;
  std::uint64_t seed = 0;
};

struct SigmaSpectrumRow {
  std::string attack_id;
  std::vector<double> lambda;
  std::vector<double> error_dist;
  double max_deviation = 0.0;
};

struct ScenarioResult {
  std::vector<ReportRow> rows;
  std::vector<SigmaSpectrumRow> sigma;
  // Set when any audit raised TheoremViolation; the offending report is in rows.
  bool theorem_violation = false;
};

struct CampaignSummary {
  std::size_t attacks = 0;
  double min_slack_main = 0.0;
  double min_slack_measured = 0.0;
  double max_spectrum_deviation = 0.0;
  std::uint64_t worst_seed = 0;
  std::string worst_attack_id;
  std::size_t violations = 0;
};

inline constexpr std::string_view kReportHeader =
    "attack_id,n,eve_dim,delta,h_xor,chi_orig,chi_sym,i_lower,boykin_rhs,corollary_rhs,"
    "slack_main,slack_measured,spectrum_deviation";

// ---------------------------------------------------------------------------
// Parsing
// ---------------------------------------------------------------------------

namespace detail {

using json = nlohmann::json;

inline json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError("malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

inline const json* find(const json& obj, const char* key) {
  auto it = obj.find(key);
  return it == obj.end() ? nullptr : &*it;
}

inline std::int64_t get_int(const json& v, const std::string& field) {
  if (!v.is_number_integer()) throw ValidationError(field, "expected an integer");
  return v.get<std::int64_t>();
}

inline std::uint64_t get_u64(const json& v, const std::string& field) {
  if (v.is_number_unsigned()) return v.get<std::uint64_t>();
  if (v.is_number_integer() && v.get<std::int64_t>() >= 0)
    return static_cast<std::uint64_t>(v.get<std::int64_t>());
  throw ValidationError(field, "expected a non-negative integer");
}

inline double get_real(const json& v, const std::string& field) {
  if (!v.is_number()) throw ValidationError(field, "expected a number");
  const double x = v.get<double>();
  if (!std::isfinite(x)) throw ValidationError(field, "expected a finite number");
  return x;
}

inline cplx get_complex(const json& v, const std::string& field) {
  if (!v.is_array() || v.size() != 2)
    throw ValidationError(field, "expected a complex number as [re, im]");
  return {get_real(v[0], field + "[0]"), get_real(v[1], field + "[1]")};
}

inline std::vector<double> get_real_array(const json& v, const std::string& field) {
  if (!v.is_array()) throw ValidationError(field, "expected an array of numbers");
  std::vector<double> out;
  for (std::size_t k = 0; k < v.size(); ++k)
    out.push_back(get_real(v[k], field + "[" + std::to_string(k) + "]"));
  return out;
}

inline int get_qubits(const json& v, const std::string& field) {
  const auto n = get_int(v, field);
  if (n < 1 || n > kMaxQubits)
    throw ValidationError(field, "must be between 1 and " + std::to_string(kMaxQubits));
  return static_cast<int>(n);
}

inline ExplicitAttack parse_explicit_attack(const json& a, int n) {
  const json& u = a["unitary"];
  if (!u.is_array() || u.empty()) throw ValidationError("attack.unitary", "expected a matrix");
  const std::size_t dim = u.size();
  std::vector<cplx> entries;
  entries.reserve(dim * dim);
  for (std::size_t r = 0; r < dim; ++r) {
    const std::string row_field = "attack.unitary[" + std::to_string(r) + "]";
    if (!u[r].is_array() || u[r].size() != dim)
      throw ValidationError(row_field, "expected a row of " + std::to_string(dim) + " entries");
    for (std::size_t c = 0; c < dim; ++c)
      entries.push_back(get_complex(u[r][c], row_field + "[" + std::to_string(c) + "]"));
  }
  const json* anc = find(a, "ancilla");
  if (!anc || !anc->is_array() || anc->empty())
    throw ValidationError("attack.ancilla", "expected an array of [re, im] amplitudes");
  std::vector<cplx> amps;
  for (std::size_t k = 0; k < anc->size(); ++k)
    amps.push_back(get_complex((*anc)[k], "attack.ancilla[" + std::to_string(k) + "]"));

  ExplicitAttack out{ComplexMatrix(dim, dim, std::move(entries)), StateVector(std::move(amps))};
  if (dim != out.ancilla.dim() * qubit_dim(n))
    throw ValidationError("attack.unitary",
                          "dimension " + std::to_string(dim) + " does not equal ancilla dimension " +
                              std::to_string(out.ancilla.dim()) + " times 2^" + std::to_string(n));
  if (!out.ancilla.is_normalized(tol::kUnitary))
    throw ValidationError("attack.ancilla", "ancilla is not normalized");
  if (unitarity_defect(out.unitary) > tol::kUnitary)
    throw ValidationError("attack.unitary", "matrix is not unitary");
  return out;
}

inline AttackSpec parse_attack_spec(const json& a, int n) {
  const json* kind = find(a, "kind");
  if (!kind || !kind->is_string()) throw ValidationError("attack.kind", "expected a string");
  const auto k = parse_attack_kind(kind->get<std::string>());
  if (!k) throw ValidationError("attack.kind", "unknown attack '" + kind->get<std::string>() + "'");
  AttackSpec spec;
  spec.kind = *k;
  spec.n = n;
  if (const json* p = find(a, "params")) spec.params = get_real_array(*p, "attack.params");
  const auto& info = attack_kind_info(spec.kind);
  if (spec.params.size() != info.param_count)
    throw ValidationError("attack.params", std::string(info.name) + " takes " +
                                               std::to_string(info.param_count) + " parameter(s)");
  if (spec.kind == AttackKind::ProbeOverlap && n != 1)
    throw ValidationError("n_qubits", "probe_overlap requires n_qubits = 1");
  if (spec.kind == AttackKind::RandomUnitary) {
    const json* d = find(a, "eve_dim");
    if (!d) throw ValidationError("attack.eve_dim", "required for random_unitary");
    const auto eve_dim = get_int(*d, "attack.eve_dim");
    if (eve_dim < 1) throw ValidationError("attack.eve_dim", "must be >= 1");
    if (static_cast<std::size_t>(eve_dim) * qubit_dim(n) > kMaxJointDim)
      throw ValidationError("attack.eve_dim", "eve_dim * 2^n exceeds " + std::to_string(kMaxJointDim));
    spec.eve_dim = static_cast<std::size_t>(eve_dim);
    if (const json* s = find(a, "seed")) spec.seed = get_u64(*s, "attack.seed");
  }
  return spec;
}

inline void require_object(const json& doc, const char* what) {
  if (!doc.is_object()) throw ValidationError("", std::string(what) + " must be a JSON object");
}

}  // namespace detail

/// Parses and validates a scenario document. Throws ParseError for malformed
/// JSON and ValidationError naming the offending field otherwise.
inline ScenarioConfig parse_scenario(std::string_view text) {
  const auto doc = detail::parse_json(text);
  detail::require_object(doc, "scenario");
  ScenarioConfig cfg;

  if (const auto* name = detail::find(doc, "name")) {
    if (!name->is_string()) throw ValidationError("name", "expected a string");
    cfg.name = name->get<std::string>();
  }
  const auto* n = detail::find(doc, "n_qubits");
  if (!n) throw ValidationError("n_qubits", "required");
  cfg.n_qubits = detail::get_qubits(*n, "n_qubits");

  const auto* attack = detail::find(doc, "attack");
  if (!attack || !attack->is_object()) throw ValidationError("attack", "expected an object");
  if (attack->contains("unitary"))
    cfg.attack = detail::parse_explicit_attack(*attack, cfg.n_qubits);
  else
    cfg.attack = detail::parse_attack_spec(*attack, cfg.n_qubits);

  if (const auto* s = detail::find(doc, "povm_samples")) {
    const auto samples = detail::get_int(*s, "povm_samples");
    if (samples < 0) throw ValidationError("povm_samples", "must be >= 0");
    if (samples > std::numeric_limits<int>::max())
      throw ValidationError("povm_samples", "too large");
    cfg.povm_samples = static_cast<int>(samples);
  }
  if (const auto* s = detail::find(doc, "seed")) cfg.seed = detail::get_u64(*s, "seed");

  if (const auto* a = detail::find(doc, "analyses")) {
    if (!a->is_array()) throw ValidationError("analyses", "expected an array");
    for (std::size_t k = 0; k < a->size(); ++k) {
      const std::string field = "analyses[" + std::to_string(k) + "]";
      const auto& v = (*a)[k];
      if (!v.is_string()) throw ValidationError(field, "expected a string");
      const auto s = v.get<std::string>();
      if (s == "audit") cfg.analyses.push_back(Analysis::Audit);
      else if (s == "sigma_spectrum") cfg.analyses.push_back(Analysis::SigmaSpectrum);
      else if (s == "sweep") cfg.analyses.push_back(Analysis::Sweep);
      else throw ValidationError(field, "unknown analysis '" + s + "'");
    }
  } else {
    cfg.analyses.push_back(Analysis::Audit);
  }

  if (const auto* sw = detail::find(doc, "sweep")) {
    if (!sw->is_object()) throw ValidationError("sweep", "expected an object");
    const auto* values = detail::find(*sw, "values");
    if (!values) throw ValidationError("sweep.values", "required");
    cfg.sweep_values = detail::get_real_array(*values, "sweep.values");
  }
  if (cfg.has(Analysis::Sweep)) {
    const auto* spec = std::get_if<AttackSpec>(&cfg.attack);
    if (!spec || attack_kind_info(spec->kind).param_count != 1)
      throw ValidationError("sweep", "sweeps need a built-in attack with one parameter");
    if (cfg.sweep_values.empty()) throw ValidationError("sweep.values", "must not be empty");
  }
  return cfg;
}

/// Parses and validates a campaign document.
inline CampaignConfig parse_campaign(std::string_view text) {
  const auto doc = detail::parse_json(text);
  detail::require_object(doc, "campaign");
  CampaignConfig cfg;
  int default_count = 0;
  if (const auto* c = detail::find(doc, "count")) {
    const auto v = detail::get_int(*c, "count");
    if (v < 0) throw ValidationError("count", "must be >= 0");
    default_count = static_cast<int>(v);
  }
  const auto* grid = detail::find(doc, "grid");
  if (!grid || !grid->is_array()) throw ValidationError("grid", "expected an array");
  for (std::size_t k = 0; k < grid->size(); ++k) {
    const std::string field = "grid[" + std::to_string(k) + "]";
    const auto& cell = (*grid)[k];
    if (!cell.is_object()) throw ValidationError(field, "expected an object");
    CampaignCell c;
    const auto* n = detail::find(cell, "n");
    if (!n) throw ValidationError(field + ".n", "required");
    c.n = detail::get_qubits(*n, field + ".n");
    const auto* d = detail::find(cell, "eve_dim");
    if (!d) throw ValidationError(field + ".eve_dim", "required");
    const auto eve_dim = detail::get_int(*d, field + ".eve_dim");
    if (eve_dim < 1) throw ValidationError(field + ".eve_dim", "must be >= 1");
    if (static_cast<std::size_t>(eve_dim) * qubit_dim(c.n) > kMaxJointDim)
      throw ValidationError(field + ".eve_dim", "eve_dim * 2^n exceeds " + std::to_string(kMaxJointDim));
    c.eve_dim = static_cast<std::size_t>(eve_dim);
    c.count = default_count;
    if (const auto* cc = detail::find(cell, "count")) {
      const auto v = detail::get_int(*cc, field + ".count");
      if (v < 0) throw ValidationError(field + ".count", "must be >= 0");
      c.count = static_cast<int>(v);
    }
    cfg.grid.push_back(c);
  }
  if (const auto* s = detail::find(doc, "master_seed")) cfg.master_seed = detail::get_u64(*s, "master_seed");
  if (const auto* s = detail::find(doc, "povm_samples")) {
    const auto v = detail::get_int(*s, "povm_samples");
    if (v < 0) throw ValidationError("povm_samples", "must be >= 0");
    cfg.povm_samples = static_cast<int>(v);
  }
  if (const auto* o = detail::find(doc, "output")) {
    if (!o->is_string()) throw ValidationError("output", "expected a string");
    cfg.output = o->get<std::string>();
  }
  return cfg;
}

// ---------------------------------------------------------------------------
// Report serialization
// ---------------------------------------------------------------------------

/// 17 significant digits; negative zero is written as 0.
inline std::string format_real(double x) {
  if (x == 0.0) x = 0.0;
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

namespace detail {

inline std::vector<std::pair<std::string_view, std::string>> row_fields(const ReportRow& row) {
  const BoundsReport& r = row.report;
  return {
      {"attack_id", row.attack_id},
      {"n", std::to_string(r.n)},
      {"eve_dim", std::to_string(r.eve_dim)},
      {"delta", format_real(r.delta)},
      {"h_xor", format_real(r.h_xor)},
      {"chi_orig", format_real(r.chi_orig)},
      {"chi_sym", format_real(r.chi_sym)},
      {"i_lower", format_real(r.i_lower)},
      {"boykin_rhs", format_real(r.boykin_rhs)},
      {"corollary_rhs", format_real(r.corollary_rhs)},
      {"slack_main", format_real(r.slack_main)},
      {"slack_measured", format_real(r.slack_measured)},
      {"spectrum_deviation", format_real(r.spectrum_deviation)},
  };
}

inline std::string json_string(std::string_view s) { return json(std::string(s)).dump(); }

inline std::string json_real_array(const std::vector<double>& v) {
  std::string out = "[";
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k) out += ",";
    out += format_real(v[k]);
  }
  return out + "]";
}

}  // namespace detail

/// CSV with the fixed header; one line per row, LF line endings.
inline std::string write_report_csv(const std::vector<ReportRow>& rows) {
  std::string out(kReportHeader);
  out += '\n';
  for (const auto& row : rows) {
    bool first = true;
    for (const auto& [key, value] : detail::row_fields(row)) {
      if (!first) out += ',';
      out += value;
      first = false;
    }
    out += '\n';
  }
  return out;
}

/// JSON array of row objects with the same field names and number formatting
/// as the CSV.
inline std::string write_report_json(const std::vector<ReportRow>& rows) {
  std::string out = "[";
  for (std::size_t k = 0; k < rows.size(); ++k) {
    out += k ? ",\n  {" : "\n  {";
    bool first = true;
    for (const auto& [key, value] : detail::row_fields(rows[k])) {
      if (!first) out += ", ";
      out += detail::json_string(key) + ": ";
      out += key == "attack_id" ? detail::json_string(value) : value;
      first = false;
    }
    out += "}";
  }
  out += rows.empty() ? "]\n" : "\n]\n";
  return out;
}

inline std::string write_sigma_json(const std::vector<SigmaSpectrumRow>& rows) {
  std::string out = "[";
  for (std::size_t k = 0; k < rows.size(); ++k) {
    const auto& r = rows[k];
    out += k ? ",\n  {" : "\n  {";
    out += "\"attack_id\": " + detail::json_string(r.attack_id);
    out += ", \"lambda\": " + detail::json_real_array(r.lambda);
    out += ", \"error_dist\": " + detail::json_real_array(r.error_dist);
    out += ", \"max_deviation\": " + format_real(r.max_deviation) + "}";
  }
  out += rows.empty() ? "]" : "\n]";
  return out;
}

/// Full scenario result as one JSON document.
inline std::string write_scenario_json(const ScenarioResult& res) {
  std::string rows = write_report_json(res.rows);
  rows.pop_back();  // trailing newline
  return "{\"rows\": " + rows + ",\n\"sigma_spectrum\": " + write_sigma_json(res.sigma) + "}\n";
}

inline std::string write_summary_json(const CampaignSummary& s) {
  return "{\"attacks\": " + std::to_string(s.attacks) +
         ", \"min_slack_main\": " + format_real(s.min_slack_main) +
         ", \"min_slack_measured\": " + format_real(s.min_slack_measured) +
         ", \"max_spectrum_deviation\": " + format_real(s.max_spectrum_deviation) +
         ", \"worst_seed\": " + std::to_string(s.worst_seed) +
         ", \"worst_attack_id\": " + detail::json_string(s.worst_attack_id) +
         ", \"violations\": " + std::to_string(s.violations) + "}\n";
}

inline void write_file(const std::filesystem::path& path, std::string_view bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw IoError("failed writing '" + path.string() + "'");
}

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// `report.csv` -> `report.json`
inline std::filesystem::path json_mirror_path(const std::filesystem::path& csv_path) {
  std::filesystem::path p = csv_path;
  return p.replace_extension(".json");
}

// ---------------------------------------------------------------------------
// Running
// ---------------------------------------------------------------------------

namespace detail {

// Audits one channel. A TheoremViolation is folded into the row and flagged.
inline ReportRow audit_row(std::string id, const AttackChannel& ch, int samples,
                           std::uint64_t seed, bool& violated) {
  try {
    return {std::move(id), audit_attack(ch, samples, seed), seed};
  } catch (const TheoremViolation& e) {
    violated = true;
    return {std::move(id), e.report(), seed};
  }
}

inline std::string scenario_attack_id(const ScenarioConfig& cfg) {
  if (!cfg.name.empty()) return cfg.name;
  if (const auto* spec = std::get_if<AttackSpec>(&cfg.attack))
    return std::string(to_string(spec->kind)) + "/n=" + std::to_string(cfg.n_qubits);
  return "explicit/n=" + std::to_string(cfg.n_qubits);
}

inline AttackChannel build_attack(const ScenarioConfig& cfg) {
  if (const auto* spec = std::get_if<AttackSpec>(&cfg.attack)) return make_attack(*spec);
  const auto& ex = std::get<ExplicitAttack>(cfg.attack);
  return from_unitary(ex.unitary, ex.ancilla, cfg.n_qubits);
}

inline SigmaSpectrumRow sigma_row(std::string id, const AttackChannel& ch) {
  const ErrorDistribution ed = xor_error_distribution(ch);
  const SigmaAnalysis sa = sigma_matrix(symmetrize(ch));
  return {std::move(id), sa.lambda, ed.probs(), sigma_spectrum_check(sa, ed)};
}

}  // namespace detail

/// Runs every analysis a scenario asks for. `audit` and `sigma_spectrum`
/// act on the configured attack; `sweep` audits the attack once per value in
/// `sweep_values`, substituted for its single parameter.
inline ScenarioResult run_scenario(const ScenarioConfig& cfg) {
  ScenarioResult res;
  const std::string id = detail::scenario_attack_id(cfg);
  if (cfg.has(Analysis::Audit) || cfg.has(Analysis::SigmaSpectrum)) {
    const AttackChannel ch = detail::build_attack(cfg);
    if (cfg.has(Analysis::Audit))
      res.rows.push_back(
          detail::audit_row(id, ch, cfg.povm_samples, cfg.seed, res.theorem_violation));
    if (cfg.has(Analysis::SigmaSpectrum)) res.sigma.push_back(detail::sigma_row(id, ch));
  }
  if (cfg.has(Analysis::Sweep)) {
    AttackSpec spec = std::get<AttackSpec>(cfg.attack);
    for (double value : cfg.sweep_values) {
      spec.params = {value};
      const std::string row_id = std::string(to_string(spec.kind)) + "/p=" + format_real(value);
      res.rows.push_back(detail::audit_row(row_id, make_attack(spec), cfg.povm_samples,
                                           cfg.seed, res.theorem_violation));
    }
  }
  return res;
}

struct CampaignResult {
  std::vector<ReportRow> rows;
  CampaignSummary summary;
};

/// Audits `count` random attacks per grid cell. Row order is (cell order,
/// index) regardless of `jobs`; the k-th attack of cell (n, d) uses
/// campaign_sub_seed(master_seed, n, d, k) and its POVM search uses
/// mix64 of that seed.
inline CampaignResult run_campaign_rows(const CampaignConfig& cfg, unsigned jobs = 1) {
  struct Task {
    CampaignCell cell;
    int k;
  };
  std::vector<Task> tasks;
  for (const auto& cell : cfg.grid)
    for (int k = 0; k < cell.count; ++k) tasks.push_back({cell, k});

  CampaignResult out;
  out.rows.resize(tasks.size());
  std::vector<char> violated(tasks.size(), 0);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t t = next++; t < tasks.size(); t = next++) {
      const auto& [cell, k] = tasks[t];
      const std::uint64_t seed = campaign_sub_seed(cfg.master_seed, static_cast<std::uint64_t>(cell.n),
                                                   cell.eve_dim, static_cast<std::uint64_t>(k));
      const std::string id = "random/n=" + std::to_string(cell.n) + "/d=" +
                             std::to_string(cell.eve_dim) + "/k=" + std::to_string(k);
      bool v = false;
      out.rows[t] = detail::audit_row(id, random_attack(cell.n, cell.eve_dim, seed),
                                      cfg.povm_samples, mix64(seed), v);
      out.rows[t].seed = seed;
      violated[t] = v;
    }
  };
  jobs = std::max(1U, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(tasks.size(), 1))));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < jobs; ++w) pool.emplace_back(worker);
  }

  CampaignSummary& s = out.summary;
  s.attacks = out.rows.size();
  for (std::size_t t = 0; t < out.rows.size(); ++t) {
    const BoundsReport& r = out.rows[t].report;
    if (t == 0 || r.slack_main < s.min_slack_main) {
      s.min_slack_main = r.slack_main;
      s.worst_seed = out.rows[t].seed;
      s.worst_attack_id = out.rows[t].attack_id;
    }
    s.min_slack_measured = t == 0 ? r.slack_measured : std::min(s.min_slack_measured, r.slack_measured);
    s.max_spectrum_deviation = std::max(s.max_spectrum_deviation, r.spectrum_deviation);
    s.violations += violated[t] ? 1 : 0;
  }
  return out;
}

/// Runs a campaign and writes the CSV to `cfg.output` and its JSON mirror
/// next to it. Throws IoError if either file cannot be written.
inline CampaignSummary run_campaign(const CampaignConfig& cfg, unsigned jobs = 1) {
  if (cfg.output.empty()) throw IoError("run_campaign: no output path");
  CampaignResult res = run_campaign_rows(cfg, jobs);
  write_file(cfg.output, write_report_csv(res.rows));
  write_file(json_mirror_path(cfg.output), write_report_json(res.rows));
  return res.summary;
}

}  // namespace qidt
