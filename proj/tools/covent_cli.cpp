// Copyright 2026 The Covent Authors
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

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "covent/concurrence.hpp"
#include "covent/ensembles.hpp"
#include "covent/gmeasure.hpp"
#include "covent/io.hpp"
#include "covent/parallel.hpp"
#include "covent/sampler.hpp"

namespace {

using covent::json;

constexpr int kExitOk = 0;
constexpr int kExitRuntime = 1;
constexpr int kExitInput = 2;
constexpr std::uint64_t kDefaultSeed = 20240917;
constexpr double kBinWidth = 0.05;

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string input;
  std::string output;
  std::string format = "json";
  std::string record_output;
  std::string summary_output;
  std::uint64_t seed = kDefaultSeed;
  std::uint64_t count = 1000;
  std::int64_t shots = 10000;
  double purity = 0.46;
  double window = 0.005;
  std::vector<int> ranks{2, 3, 4};
  int terms = 4;
  int resamples = covent::default_bootstrap_resamples;
  std::string kind = "ginibre";
  bool correlations = false;
  bool separable = true;
};

unsigned worker_count() { return std::max(1u, std::thread::hardware_concurrency()); }

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void emit(const Options& opt, const std::string& text) {
  if (opt.output.empty() || opt.output == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(opt.output);
  if (!out) throw std::runtime_error("cannot write '" + opt.output + "'");
  out << text;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << text;
}

void warn_if_out_of_range(double g, const std::string& where) {
  if (g > 3.0 + 1e-9 || g < -1e-9) {
    std::cerr << "warning: G = " << fmt(g) << " outside [0, 3] (" << where << ")\n";
  }
}

// A table rendered as CSV (header always written) or as a JSON array of objects.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<json>> rows;

  std::string render(const std::string& format) const {
    if (format == "json") {
      json arr = json::array();
      for (const auto& r : rows) {
        json obj = json::object();
        for (std::size_t c = 0; c < columns.size(); ++c) obj[columns[c]] = r[c];
        arr.push_back(std::move(obj));
      }
      return arr.dump(2) + "\n";
    }
    std::ostringstream out;
    for (std::size_t c = 0; c < columns.size(); ++c) out << (c ? "," : "") << columns[c];
    out << "\n";
    for (const auto& r : rows) {
      for (std::size_t c = 0; c < r.size(); ++c) {
        out << (c ? "," : "");
        if (r[c].is_number_float()) {
          out << fmt(r[c].get<double>());
        } else if (r[c].is_null()) {
          // empty cell
        } else if (r[c].is_string()) {
          out << r[c].get<std::string>();
        } else {
          out << r[c].dump();
        }
      }
      out << "\n";
    }
    return out.str();
  }
};

covent::StateInput load_input(const Options& opt) {
  if (opt.input.empty()) throw InputError("an input file is required");
  return covent::input_from_json(covent::read_json_file(opt.input));
}

int cmd_analyze(const Options& opt) {
  const auto in = load_input(opt);
  if (const auto* rec = std::get_if<covent::MeasurementRecord>(&in)) {
    const auto est = covent::estimate_g(*rec, opt.resamples);
    emit(opt, json{{"estimate", covent::to_json(est)}}.dump(2) + "\n");
    return kExitOk;
  }
  const auto rho = covent::as_density_matrix(in);
  const auto report = covent::analyze(rho);
  warn_if_out_of_range(report.g, "analyze");
  const double c = covent::concurrence_mixed(rho);
  const double p = covent::purity(rho);

  if (opt.format == "csv") {
    Table t{{"g", "g_hs", "l3", "verdict", "c_min", "c_max", "concurrence", "purity"}, {}};
    t.rows.push_back({report.g, report.g_hs, report.l3,
                      std::string(covent::verdict_name(report.verdict)), report.conc_interval.lower,
                      report.conc_interval.upper, c, p});
    emit(opt, t.render("csv"));
    return kExitOk;
  }
  json out{{"report", covent::to_json(report)}, {"concurrence", c}, {"purity", p}};
  if (opt.correlations) out["correlations"] = covent::to_json(covent::correlation_data(rho));
  emit(opt, out.dump(2) + "\n");
  return kExitOk;
}

int cmd_scan_bounds(const Options& opt) {
  if (opt.count < 1) throw InputError("--count must be at least 1");
  for (int r : opt.ranks) {
    if (r < 1 || r > 4) throw InputError("--rank entries must lie in 1..4");
  }
  // Index n cycles through the requested ranks, then (optionally) a separable mixture.
  const std::size_t kinds = opt.ranks.size() + (opt.separable ? 1 : 0);
  if (kinds == 0) throw InputError("nothing to sample: give --rank or keep separable mixtures");

  struct Row {
    double c, g, purity;
    int rank;
  };
  const auto rows = covent::parallel_map(opt.count, worker_count(), [&](std::size_t n) {
    const std::size_t slot = n % kinds;
    covent::DensityMatrix rho = slot < opt.ranks.size()
                                    ? covent::ginibre(opt.seed, n, opt.ranks[slot])
                                    : covent::separable_mixture(opt.seed, n, opt.terms);
    const int rank = slot < opt.ranks.size() ? opt.ranks[slot] : 0;
    return Row{covent::concurrence_mixed(rho), covent::g_covariance(rho), covent::purity(rho),
               rank};
  });

  Table t{{"kind", "concurrence", "g", "purity", "rank", "violates"}, {}};
  std::size_t violations = 0;
  for (const auto& r : rows) {
    const double lo = r.c * r.c * (2 + r.c * r.c);
    const double hi = 1 + 2 * r.c * r.c;
    const bool bad = r.g < lo - 1e-9 || r.g > hi + 1e-9;
    violations += bad;
    warn_if_out_of_range(r.g, "scan-bounds");
    t.rows.push_back({"sample", r.c, r.g, r.purity, r.rank, bad ? 1 : 0});
  }
  constexpr int kCurvePoints = 200;
  for (int k = 0; k < kCurvePoints; ++k) {
    const double c = double(k) / (kCurvePoints - 1);
    t.rows.push_back({"lower_bound", c, c * c * (2 + c * c), nullptr, nullptr, 0});
  }
  for (int k = 0; k < kCurvePoints; ++k) {
    const double c = double(k) / (kCurvePoints - 1);
    t.rows.push_back({"upper_bound", c, 1 + 2 * c * c, nullptr, nullptr, 0});
  }
  emit(opt, t.render(opt.format));
  std::cerr << "scan-bounds: " << rows.size() << " samples, " << violations << " violations\n";
  return kExitOk;
}

struct Bin {
  std::size_t n = 0;
  double g_min = INFINITY, g_max = -INFINITY;
  double e_min = INFINITY, e_max = -INFINITY;
};

int cmd_purity_slice(const Options& opt) {
  covent::EnsembleSpec spec;
  spec.kind = covent::EnsembleKind::fixed_purity;
  spec.count = opt.count;
  spec.purity_target = opt.purity;
  spec.purity_window = opt.window;
  spec.seed = opt.seed;
  try {
    covent::validate(spec);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }

  struct Row {
    double c, g, purity;
  };
  const auto rows = covent::parallel_map(opt.count, worker_count(), [&](std::size_t n) {
    const auto rho = covent::sample(spec, n);
    return Row{covent::concurrence_mixed(rho), covent::g_covariance(rho), covent::purity(rho)};
  });

  Table samples{{"index", "concurrence", "g", "purity", "excess"}, {}};
  std::map<long, Bin> bins;
  for (std::size_t n = 0; n < rows.size(); ++n) {
    const auto& r = rows[n];
    const double excess = r.g - r.c * r.c * (2 + r.c * r.c);
    samples.rows.push_back({n, r.c, r.g, r.purity, excess});
    Bin& b = bins[std::min(static_cast<long>(std::floor(r.c / kBinWidth)), long{19})];
    ++b.n;
    b.g_min = std::min(b.g_min, r.g);
    b.g_max = std::max(b.g_max, r.g);
    b.e_min = std::min(b.e_min, excess);
    b.e_max = std::max(b.e_max, excess);
  }

  Table summary{{"bin_low", "bin_high", "n", "g_min", "g_max", "g_spread", "excess_spread"}, {}};
  for (const auto& [k, b] : bins) {
    summary.rows.push_back({k * kBinWidth, (k + 1) * kBinWidth, b.n, b.g_min, b.g_max,
                            b.g_max - b.g_min, b.e_max - b.e_min});
  }

  if (opt.format == "json") {
    json out{{"samples", json::parse(samples.render("json"))},
             {"bins", json::parse(summary.render("json"))}};
    emit(opt, out.dump(2) + "\n");
  } else {
    emit(opt, samples.render("csv"));
    if (!opt.summary_output.empty())
      write_file(opt.summary_output, summary.render("csv"));
    else
      std::cerr << summary.render("csv");
  }
  return kExitOk;
}

int cmd_sample(const Options& opt) {
  if (opt.shots < 1) throw InputError("--shots must be at least 1");
  const auto rho = covent::as_density_matrix(load_input(opt));
  const auto rec = covent::simulate_record(rho, opt.shots, opt.seed);
  if (!opt.record_output.empty())
    write_file(opt.record_output, covent::to_json(rec).dump(2) + "\n");
  const auto est = covent::estimate_g(rec, opt.resamples);
  const double exact = covent::g_covariance(rho);
  if (opt.format == "csv") {
    Table t{{"shots_per_setting", "g_hat", "stderr", "ci_low", "ci_high", "g_exact"}, {}};
    t.rows.push_back(
        {est.shots_per_setting, est.g_hat, est.std_error, est.ci_low, est.ci_high, exact});
    emit(opt, t.render("csv"));
  } else {
    emit(opt,
         json{{"estimate", covent::to_json(est)}, {"g_exact", exact}, {"seed", opt.seed}}.dump(2) +
             "\n");
  }
  return kExitOk;
}

int cmd_ensemble(const Options& opt, const CLI::App& sub) {
  covent::EnsembleSpec spec;
  if (!opt.input.empty()) {
    spec = covent::ensemble_spec_from_json(covent::read_json_file(opt.input));
  }
  // Flags given explicitly override the spec file.
  if (opt.input.empty() || sub.count("--kind"))
    spec.kind = covent::ensemble_kind_from_name(opt.kind);
  if (opt.input.empty() || sub.count("--count")) spec.count = opt.count;
  if (opt.input.empty() || sub.count("--seed")) spec.seed = opt.seed;
  if (opt.input.empty() || sub.count("--purity")) spec.purity_target = opt.purity;
  if (opt.input.empty() || sub.count("--window")) spec.purity_window = opt.window;
  if (opt.input.empty() || sub.count("--terms")) spec.mixture_terms = opt.terms;
  if (sub.count("--rank")) {
    if (opt.ranks.size() != 1) throw InputError("ensemble takes a single --rank");
    spec.rank = opt.ranks.front();
  }
  covent::validate(spec);

  const auto states = covent::generate(spec, worker_count());
  if (opt.format == "json") {
    json arr = json::array();
    for (std::size_t n = 0; n < states.size(); ++n) {
      arr.push_back({{"index", n}, {"rho", covent::to_json(states[n])}});
    }
    emit(opt, json{{"spec", covent::to_json(spec)}, {"states", arr}}.dump(2) + "\n");
    return kExitOk;
  }
  Table t{{"index", "concurrence", "g", "g_hs", "l3", "purity", "verdict"}, {}};
  for (std::size_t n = 0; n < states.size(); ++n) {
    const auto report = covent::analyze(states[n]);
    warn_if_out_of_range(report.g, "ensemble");
    t.rows.push_back({n, covent::concurrence_mixed(states[n]), report.g, report.g_hs, report.l3,
                      covent::purity(states[n]),
                      std::string(covent::verdict_name(report.verdict))});
  }
  emit(opt, t.render("csv"));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Covariance-based entanglement measure G for two-qubit states"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--seed", opt.seed, "RNG seed")->capture_default_str();
    sub->add_option("--output,-o", opt.output, "Output file (default stdout)");
    sub->add_option("--format", opt.format, "Output format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
  };

  auto* analyze = app.add_subcommand("analyze", "Analyze a state or measurement record file");
  analyze->add_option("input", opt.input, "JSON state, pure-state or record file")->required();
  analyze->add_flag("--correlations", opt.correlations, "Include covariance and Bloch data");
  analyze->add_option("--resamples", opt.resamples, "Bootstrap resamples for records");
  add_common(analyze);

  auto* scan = app.add_subcommand("scan-bounds", "Sample mixed states against the G(C) bounds");
  scan->add_option("--count", opt.count, "Number of sampled states")->capture_default_str();
  scan->add_option("--rank", opt.ranks, "Ginibre ranks, comma separated")->delimiter(',');
  scan->add_option("--terms", opt.terms, "Terms per separable mixture");
  scan->add_flag("!--no-separable", opt.separable, "Skip separable mixtures");
  add_common(scan);

  auto* slice = app.add_subcommand("purity-slice", "Fixed-purity ensemble with per-bin spread");
  slice->add_option("--purity", opt.purity, "Target purity")->capture_default_str();
  slice->add_option("--window", opt.window, "Half width of the purity window")
      ->capture_default_str();
  slice->add_option("--count", opt.count, "Number of sampled states")->capture_default_str();
  slice->add_option("--summary", opt.summary_output, "CSV file for the per-bin summary");
  add_common(slice);

  auto* samp = app.add_subcommand("sample", "Simulate the nine-setting measurement");
  samp->add_option("input", opt.input, "JSON state or pure-state file")->required();
  samp->add_option("--shots", opt.shots, "Shots per setting")->capture_default_str();
  samp->add_option("--record", opt.record_output, "Write the simulated record to this file");
  samp->add_option("--resamples", opt.resamples, "Bootstrap resamples");
  add_common(samp);

  auto* ens = app.add_subcommand("ensemble", "Generate a random-state ensemble");
  ens->add_option("--input,-i", opt.input, "Ensemble spec JSON file");
  ens->add_option("--kind", opt.kind,
                  "haar_pure|ginibre|fixed_purity|separable_mixture|rho_u_sweep");
  ens->add_option("--count", opt.count, "Number of states");
  ens->add_option("--rank", opt.ranks, "Ginibre rank");
  ens->add_option("--purity", opt.purity, "Target purity");
  ens->add_option("--window", opt.window, "Half width of the purity window");
  ens->add_option("--terms", opt.terms, "Terms per separable mixture");
  add_common(ens);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*analyze) return cmd_analyze(opt);
    if (*scan) return cmd_scan_bounds(opt);
    if (*slice) return cmd_purity_slice(opt);
    if (*samp) return cmd_sample(opt);
    if (*ens) return cmd_ensemble(opt, *ens);
  } catch (const covent::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const covent::InvalidState& e) {
    std::cerr << "error: invalid state: " << e.what() << "\n";
    return kExitInput;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: invalid input: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRuntime;
  }
  return kExitRuntime;
}
