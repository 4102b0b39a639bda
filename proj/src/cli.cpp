// Copyright 2026 The expmap Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "expmap/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "expmap/certify.hpp"
#include "expmap/linmaps.hpp"
#include "expmap/matrix_json.hpp"

namespace expmap::cli {
namespace {

using nlohmann::json;

constexpr Index kKernelDefaultSamples = 4;

std::string sci(double value) {
  std::ostringstream s;
  s << std::scientific << std::setprecision(3) << value;
  return s.str();
}

json envelope(const CliConfig& config, json results) {
  return {{"version", "v1"},
          {"command", command_name(config.command)},
          {"n", config.n},
          {"seed", config.seed},
          {"results", std::move(results)}};
}

bool write_file(const std::string& path, const json& doc, std::ostream& err) {
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (file) file << doc.dump(2) << '\n';
  if (!file) {
    err << "error: cannot write " << path << '\n';
    return false;
  }
  return true;
}

// Emits the report to stdout (JSON or text) and, when requested, to --out.
int emit(const CliConfig& config, const json& results, const std::string& text, int code, std::ostream& out,
         std::ostream& err) {
  const json doc = envelope(config, results);
  if (config.output_path && !write_file(*config.output_path, doc, err)) return exit_code::kIo;
  if (config.json)
    out << doc.dump(2) << '\n';
  else
    out << text;
  return code;
}

const char* status(bool ok) { return ok ? "ok" : "FAIL"; }

int run_certify(const CliConfig& config, std::ostream& out, std::ostream& err) {
  CertifyOptions options;
  options.samples = config.samples.value_or(0);
  options.restarts = config.restarts;
  options.kernel_tol = config.tol;
  const CertificateReport r = exposedness_certificate(config.n, config.seed, options);
  const auto verdicts = certificate_verdicts(r);

  std::ostringstream text;
  text << "exposedness certificate  n=" << r.n << "  seed=" << r.seed << "  samples=" << r.samples
       << "  restarts=" << r.restarts << '\n'
       << "  unital            max dev " << sci(r.unital.deviation) << "  " << status(r.unital.ok) << '\n'
       << "  trace preserving  max rel dev " << sci(r.trace_preserving.deviation) << "  "
       << status(r.trace_preserving.ok) << '\n'
       << "  positivity        min " << sci(r.positivity_min) << "  (" << r.positivity_converged << " converged, "
       << r.positivity_skipped << " skipped)  " << verdict_name(verdicts[2]) << '\n'
       << "  commutant dim     " << r.commutant_dim << "  " << verdict_name(verdicts[3]) << '\n'
       << "  spanning dim      " << r.spanning_dim << '/' << r.spanning_target << "  " << verdict_name(verdicts[4])
       << '\n'
       << "  strong spanning   " << r.strong_spanning_dim << '/' << r.strong_spanning_target << "  "
       << verdict_name(verdicts[5]) << '\n'
       << "verdict: " << exposedness_name(r.verdict) << '\n';
  return emit(config, to_json(r), text.str(), exit_code_for(verdicts), out, err);
}

int run_dims(const CliConfig& config, std::ostream& out, std::ostream& err) {
  DimOptions options;
  options.eigen_tol = config.tol;
  const Index samples = config.samples.value_or(default_samples(config.n));
  const DimReport report = dim_report(config.n, samples, config.seed, options);

  std::vector<Verdict> verdicts;
  std::ostringstream text;
  text << "dimensions  n=" << report.n << "  seed=" << report.seed << "  samples=" << report.samples << '\n';
  for (const DimItem& item : report.items) {
    verdicts.push_back(item.verdict);
    text << item.name << ": " << item.measured << '/' << item.target;
    if (item.bound == Bound::AtLeast) text << " (at least)";
    text << ' ' << verdict_name(item.verdict) << '\n';
  }
  return emit(config, to_json(report), text.str(), exit_code_for(verdicts), out, err);
}

int run_witness(const CliConfig& config, std::ostream& out, std::ostream& err) {
  const Witness w = choi_witness(config.n);
  const double trace = w.matrix.trace().real();
  const double hermitian_dev = max_abs_diff(w.matrix, w.matrix.adjoint());
  const bool ok = std::abs(trace - 1.0) <= config.tol && hermitian_dev <= tol::kHermitian;
  const int code = ok ? exit_code::kOk : exit_code::kViolation;

  const json matrix = matrix_to_json(w.matrix);
  if (config.output_path && !write_file(*config.output_path, matrix, err)) return exit_code::kIo;

  if (config.json) {
    json results = {{"rows", w.matrix.rows()},
                    {"cols", w.matrix.cols()},
                    {"trace", trace},
                    {"hermitian_deviation", hermitian_dev}};
    if (!config.output_path) results["matrix"] = matrix;
    out << envelope(config, results).dump(2) << '\n';
  } else if (config.output_path) {
    out << "witness n=" << config.n << "  " << w.matrix.rows() << 'x' << w.matrix.cols() << "  trace " << trace
        << "  hermitian dev " << sci(hermitian_dev) << "  -> " << *config.output_path << '\n';
  } else {
    out << matrix.dump(2) << '\n';
  }
  return code;
}

json vector_json(const Vector& v) {
  json entries = json::array();
  for (Index i = 0; i < v.size(); ++i) entries.push_back({v(i).real(), v(i).imag()});
  return entries;
}

int run_kernel(const CliConfig& config, std::ostream& out, std::ostream& err) {
  const Index samples = config.samples.value_or(kKernelDefaultSamples);
  std::vector<KernelPair> pairs = sample_parallel(config.n, samples, config.seed);
  for (auto& p : sample_orthogonal(config.n, samples, config.seed)) pairs.push_back(std::move(p));
  for (auto& p : sample_generic(LinearMap::from(BlockMap(config.n)), samples, config.seed, config.tol))
    pairs.push_back(std::move(p));

  bool ok = true;
  json list = json::array();
  std::ostringstream text;
  text << "kernel pairs  n=" << config.n << "  seed=" << config.seed << "  samples/family=" << samples << '\n';
  for (const KernelPair& p : pairs) {
    const bool pair_ok = p.residual <= config.tol;
    ok = ok && pair_ok;
    text << "  " << std::left << std::setw(10) << family_name(p.family) << " residual " << sci(p.residual) << "  "
         << status(pair_ok) << '\n';
    list.push_back({{"family", family_name(p.family)},
                    {"residual", p.residual},
                    {"x", vector_json(p.x)},
                    {"y", vector_json(p.y)}});
  }
  const json results = {{"samples_per_family", samples}, {"tolerance", config.tol}, {"pairs", list}};
  return emit(config, results, text.str(), ok ? exit_code::kOk : exit_code::kViolation, out, err);
}

int run_ppt(const CliConfig& config, std::ostream& out, std::ostream& err) {
  PptOptions options;
  options.state_tol = config.tol;
  options.trace_tol = config.tol;
  const PptSearchResult r = ppt_violation_search(choi_witness(config.n), config.iterations, config.seed, options);

  json results = to_json(r);
  if (r.state) results["state"] = matrix_to_json(*r.state);
  std::ostringstream text;
  text << "ppt search  n=" << config.n << "  seed=" << config.seed << "  iterations=" << r.iterations << '\n'
       << "  Tr(W rho)          " << sci(r.witness_value) << '\n'
       << "  min eig rho        " << sci(r.state_min_eigenvalue) << '\n'
       << "  min eig rho^T_B    " << sci(r.ppt_min_eigenvalue) << '\n'
       << "  found: " << (r.found ? "yes" : "no (inconclusive)") << '\n';
  return emit(config, results, text.str(), r.found ? exit_code::kOk : exit_code::kInconclusive, out, err);
}

void add_common_options(CLI::App& sub, CliConfig& config, Index& samples) {
  sub.add_option("--n", config.n, "Half dimension; the map acts on 2n x 2n matrices")->capture_default_str();
  sub.add_option("--seed", config.seed, "Master seed")->capture_default_str();
  sub.add_option("--samples", samples, "Sample count (default depends on the command)");
  sub.add_option("--restarts", config.restarts, "Positivity multistart count")->capture_default_str();
  sub.add_option("--iterations", config.iterations, "PPT search iterations")->capture_default_str();
  sub.add_option("--tol", config.tol, "Kernel / invariant tolerance")->capture_default_str();
  sub.add_option("-o,--out,--output-path", config.output_path, "Output file");
  sub.add_flag("--json", config.json, "Print the JSON report instead of text");
}

}  // namespace

std::string_view command_name(Command command) {
  switch (command) {
    case Command::Certify: return "certify";
    case Command::Dims: return "dims";
    case Command::Witness: return "witness";
    case Command::Kernel: return "kernel";
    case Command::Ppt: return "ppt";
  }
  return "unknown";
}

void validate(const CliConfig& config) {
  if (config.n < 2) throw PreconditionError("--n must be >= 2");
  if (config.samples && *config.samples < 1) throw PreconditionError("--samples must be >= 1");
  if (config.restarts < 1) throw PreconditionError("--restarts must be >= 1");
  if (config.iterations < 1) throw PreconditionError("--iterations must be >= 1");
  if (!(config.tol > 0.0)) throw PreconditionError("--tol must be > 0");
}

ParseOutcome parse_args(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Certify properties of the positive map Phi_n and its witness", "expmap"};
  app.require_subcommand(1);

  CliConfig config;
  Index samples = 0;
  const std::pair<Command, const char*> commands[] = {
      {Command::Certify, "Run the exposedness certificate"},
      {Command::Dims, "Measured vs. closed-form subspace dimensions"},
      {Command::Witness, "Export the witness matrix"},
      {Command::Kernel, "Print sampled kernel pairs with residuals"},
      {Command::Ppt, "Search for a PPT state detected by the witness"},
  };
  std::vector<std::pair<Command, CLI::App*>> subs;
  for (const auto& [command, description] : commands) {
    CLI::App* sub = app.add_subcommand(std::string(command_name(command)), description);
    add_common_options(*sub, config, samples);
    subs.emplace_back(command, sub);
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return exit_code::kUsage;
  }

  for (const auto& [command, sub] : subs)
    if (sub->parsed()) {
      config.command = command;
      if (sub->count("--samples") > 0) config.samples = samples;
    }
  try {
    validate(config);
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n' << "Run with --help for more information.\n";
    return exit_code::kUsage;
  }
  return config;
}

int exit_code_for(std::span<const Verdict> verdicts) {
  if (std::ranges::any_of(verdicts, [](Verdict v) { return v == Verdict::Mismatch; })) return exit_code::kViolation;
  if (std::ranges::any_of(verdicts, [](Verdict v) { return v == Verdict::Inconclusive; }))
    return exit_code::kInconclusive;
  return exit_code::kOk;
}

int run(const CliConfig& config, std::ostream& out, std::ostream& err) {
  try {
    validate(config);
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::kUsage;
  }
  try {
    switch (config.command) {
      case Command::Certify: return run_certify(config, out, err);
      case Command::Dims: return run_dims(config, out, err);
      case Command::Witness: return run_witness(config, out, err);
      case Command::Kernel: return run_kernel(config, out, err);
      case Command::Ppt: return run_ppt(config, out, err);
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
  }
  return exit_code::kViolation;
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  const std::vector<std::string> args(argv + std::min(argc, 1), argv + argc);
  const ParseOutcome parsed = parse_args(args, out, err);
  if (const int* code = std::get_if<int>(&parsed)) return *code;
  return run(std::get<CliConfig>(parsed), out, err);
}

}  // namespace expmap::cli
