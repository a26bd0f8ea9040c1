// Copyright 2026 The bandvqe Authors
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

#include "cli.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "bandvqe/encodings.hpp"
#include "bandvqe/errors.hpp"
#include "bandvqe/hamiltonian.hpp"
#include "bandvqe/vqe.hpp"

namespace bandvqe::cli {
namespace {

namespace fs = std::filesystem;

constexpr std::uint64_t kDefaultSeed = 1;

using KeyValues = std::vector<std::pair<std::string, std::string>>;

std::string short_energy(double v) {
  if (std::abs(v) < 5e-10) v = 0.0;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

std::string full_energy(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string join(const std::vector<int>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? "," : "") + std::to_string(xs[i]);
  return out;
}

std::string key_values(const KeyValues& kv, const char* sep) {
  std::string out;
  for (const auto& [k, v] : kv) out += k + sep + v + "\n";
  return out;
}

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw ParseError("cannot write '" + path.string() + "'", 0);
  f << content;
}

// Creates `dir` and echoes the manifest into it before any other output.
void prepare_output(const std::string& dir, const KeyValues& manifest) {
  if (dir.empty()) return;
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw ParseError("cannot create output directory '" + dir + "': " + ec.message(), 0);
  write_file(fs::path(dir) / "manifest.txt", key_values(manifest, " = "));
}

// Feeds config values into options the command line left unset.
void apply_config(CLI::App& sub, const std::string& path) {
  if (path.empty()) return;
  for (const auto& [key, value] : read_config(path)) {
    if (key == "command" || key == "config") continue;
    CLI::Option* opt = sub.get_option_no_throw("--" + key);
    if (opt == nullptr) opt = sub.get_option_no_throw(key);
    if (opt == nullptr) throw ParseError("unknown config key '" + key + "' in " + path, 0);
    if (opt->count() == 0) {
      opt->add_result(value);
      opt->run_callback();
    }
  }
}

std::uint64_t resolve_seed(const CLI::Option& flag, std::uint64_t parsed) {
  if (flag.count() > 0) return parsed;
  if (const char* env = std::getenv("SEED"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (*end != '\0') throw ParseError("SEED environment variable is not an integer", 0);
    return v;
  }
  return kDefaultSeed;
}

void require_matrix(const std::string& path) {
  if (path.empty()) throw ParseError("a matrix file is required", 0);
}

struct EncodeArgs {
  std::string matrix;
  std::string encoding = "gray";
  int k = -1;
  int layers = 3;
  std::string out;
  std::string config;
};

int cmd_encode(const EncodeArgs& a, std::ostream& out) {
  require_matrix(a.matrix);
  const BandedHamiltonian full = load_matrix(a.matrix);
  const int k = a.k < 0 ? full.dim() - 1 : a.k;
  const BandedHamiltonian h = truncate_band(full, k);
  const EncodingKind kind = parse_encoding_kind(a.encoding);
  prepare_output(a.out, {{"command", "encode"},
                         {"matrix", a.matrix},
                         {"encoding", std::string(to_string(kind))},
                         {"K", std::to_string(k)},
                         {"layers", std::to_string(a.layers)}});
  const EncodingReport report = encoding_report(h, Encoding::make(kind, h.dim()), a.layers);
  const std::string dump = encode(h, kind).to_text();
  if (!a.out.empty()) {
    write_file(fs::path(a.out) / "report.txt", report.to_text());
    write_file(fs::path(a.out) / "pauli.txt", dump);
  }
  out << report.to_text() << "# terms: re im LETTERS\n" << dump;
  return kSuccess;
}

struct ExactArgs {
  std::string matrix;
  int k = -1;
  std::string schedule;
  std::string out;
  std::string config;
};

int cmd_exact(const ExactArgs& a, std::ostream& out) {
  require_matrix(a.matrix);
  const BandedHamiltonian full = load_matrix(a.matrix);
  std::vector<int> ks;
  if (!a.schedule.empty()) {
    ks = parse_schedule(a.schedule);
  } else {
    ks = {a.k < 0 ? full.dim() - 1 : a.k};
  }
  prepare_output(a.out, {{"command", "exact"}, {"matrix", a.matrix}, {"schedule", join(ks)}});
  std::string table;
  for (int k : ks) {
    const BandedHamiltonian h = truncate_band(full, k);
    const EigenPair ground = lowest_eigenpair(h);
    table += "E_th^" + std::to_string(k) + " = " + short_energy(ground.energy) + " MeV";
    if (h.dim() > 1) {
      const double first = jacobi_eigen(h.entries()).values(1);
      table += "  E_1 = " + short_energy(first) + " MeV  gap = " + short_energy(first - ground.energy) + " MeV";
    }
    table += '\n';
  }
  if (!a.out.empty()) write_file(fs::path(a.out) / "exact.txt", table);
  out << table;
  return kSuccess;
}

struct VqeArgs {
  std::string matrix;
  std::string matrix2;
  std::string encoding = "gray";
  int layers = 3;
  std::string schedule;
  int shots = 0;
  bool noise = false;
  double p1 = NoiseModel{}.p1;
  double p2 = NoiseModel{}.p2;
  double p_ro = NoiseModel{}.p_readout;
  int repeats = 1;
  std::uint64_t seed = kDefaultSeed;
  int max_iters = 1000;
  std::string optimizer = "auto";
  std::string out = "vqe_run";
  std::string config;
};

int cmd_vqe(const VqeArgs& a, std::ostream& out, std::ostream& err) {
  require_matrix(a.matrix);
  if (a.repeats < 1) throw ContractError("repeats must be >= 1");
  // With two matrices the first is the reference sector and the second is
  // trained: E_x = E_VQE(second) - E_exact(first) at each K.
  const bool two = !a.matrix2.empty();
  const BandedHamiltonian reference = load_matrix(a.matrix);
  const BandedHamiltonian target = two ? load_matrix(a.matrix2) : reference;
  if (two && reference.dim() != target.dim()) throw ContractError("both matrices must have the same dimension");

  VqeConfig cfg;
  cfg.encoding = parse_encoding_kind(a.encoding);
  cfg.layers = a.layers;
  cfg.optimizer = parse_optimizer_kind(a.optimizer);
  cfg.max_iters = a.max_iters;
  cfg.shots = a.shots;
  cfg.seed = a.seed;
  if (!a.schedule.empty()) cfg.k_schedule = parse_schedule(a.schedule);
  if (a.noise) {
    cfg.noise = NoiseModel{a.p1, a.p2, a.p_ro};
    if (cfg.shots == 0) cfg.shots = 1000;
  }
  cfg.validate(target.dim());
  const std::vector<int> schedule = cfg.schedule_for(target.dim());

  KeyValues manifest{{"command", "vqe"}, {"matrix", a.matrix}};
  if (two) manifest.emplace_back("matrix2", a.matrix2);
  manifest.insert(manifest.end(), {{"encoding", std::string(to_string(cfg.encoding))},
                                   {"layers", std::to_string(cfg.layers)},
                                   {"schedule", join(schedule)},
                                   {"shots", std::to_string(cfg.shots)},
                                   {"noise", a.noise ? "true" : "false"},
                                   {"p1", full_energy(a.p1)},
                                   {"p2", full_energy(a.p2)},
                                   {"p_ro", full_energy(a.p_ro)},
                                   {"repeats", std::to_string(a.repeats)},
                                   {"seed", std::to_string(cfg.seed)},
                                   {"max_iters", std::to_string(cfg.max_iters)},
                                   {"optimizer", std::string(to_string(cfg.optimizer))},
                                   {"out", a.out}});
  prepare_output(a.out, manifest);
  if (a.repeats > 1 && !cfg.noise) err << "note: --repeats only applies to noisy runs; ignored\n";

  const VqeRun run = warm_start_run(target, cfg);
  const int last_k = schedule.back();
  const Ansatz ansatz = make_ansatz(cfg, target.dim());

  KeyValues summary{{"command", "vqe"},
                    {"encoding", std::string(to_string(cfg.encoding))},
                    {"evaluator", std::string(to_string(cfg.evaluator()))},
                    {"optimizer", std::string(to_string(cfg.resolved_optimizer()))},
                    {"n_qubits", std::to_string(ansatz.num_qubits())},
                    {"parameter_count", std::to_string(ansatz.parameter_count())},
                    {"schedule", join(schedule)},
                    {"trace_length", std::to_string(run.trace.size())}};
  std::vector<double> reference_energy;
  for (const Segment& s : run.segments) {
    const std::string p = "segment_" + std::to_string(s.k) + "_";
    summary.emplace_back(p + "final_energy_mev", full_energy(s.best_energy));
    summary.emplace_back(p + "exact_energy_mev", full_energy(s.exact_energy));
    if (two) {
      reference_energy.push_back(lowest_eigenpair(truncate_band(reference, s.k)).energy);
      summary.emplace_back(p + "excitation_mev", full_energy(s.best_energy - reference_energy.back()));
    }
  }
  summary.emplace_back("final_energy_mev", full_energy(run.final_energy));
  summary.emplace_back("exact_energy_mev", full_energy(run.segments.back().exact_energy));
  summary.emplace_back("tail_mean_mev", full_energy(run.summary.mean));
  summary.emplace_back("tail_std_mev", full_energy(run.summary.std));
  summary.emplace_back("tail_count", std::to_string(run.summary.count));
  if (two) {
    summary.emplace_back("reference_energy_mev", full_energy(reference_energy.back()));
    summary.emplace_back("excitation_energy_mev", full_energy(run.final_energy - reference_energy.back()));
    summary.emplace_back("tail_excitation_mean_mev", full_energy(run.summary.mean - reference_energy.back()));
  }
  if (run.nr_value) {
    summary.emplace_back("nr_value_mev", full_energy(*run.nr_value));
    if (two) summary.emplace_back("nr_excitation_mev", full_energy(*run.nr_value - reference_energy.back()));
  }
  if (cfg.noise && a.repeats > 1) {
    const NrEstimate nr = nr_error_estimate(target, last_k, cfg, a.repeats);
    summary.emplace_back("nr_repeats", std::to_string(a.repeats));
    summary.emplace_back("nr_mean_mev", full_energy(nr.mean));
    summary.emplace_back("nr_std_mev", full_energy(nr.std));
  }

  std::ostringstream csv;
  write_trace_csv(csv, run);
  write_file(fs::path(a.out) / "trace.csv", csv.str());
  write_file(fs::path(a.out) / "summary.txt", key_values(summary, "="));

  for (const auto& [k, v] : summary) {
    const bool energy = k.size() > 4 && k.compare(k.size() - 4, 4, "_mev") == 0;
    out << k << '=' << (energy ? short_energy(std::strtod(v.c_str(), nullptr)) : v) << '\n';
  }
  return kSuccess;
}

}  // namespace

std::map<std::string, std::string> read_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open config file '" + path + "'", 0);
  std::map<std::string, std::string> out;
  std::string line;
  int line_no = 0;
  auto trim = [](std::string s) {
    s.erase(0, s.find_first_not_of(" \t\r"));
    s.erase(s.find_last_not_of(" \t\r") + 1);
    return s;
  };
  while (std::getline(in, line)) {
    ++line_no;
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    const auto eq = t.find('=');
    if (eq == std::string::npos) throw ParseError("expected 'key = value' in " + path, line_no);
    const std::string key = trim(t.substr(0, eq));
    if (key.empty()) throw ParseError("empty key in " + path, line_no);
    out[key] = trim(t.substr(eq + 1));
  }
  return out;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Banded-Hamiltonian VQE: qubit encodings, exact spectra and variational runs"};
  app.name("bandvqe");
  app.require_subcommand(1);

  EncodeArgs enc;
  CLI::App* encode_cmd = app.add_subcommand("encode", "Map a matrix to a qubit observable and report resources");
  encode_cmd->add_option("matrix", enc.matrix, "Matrix file");
  encode_cmd->add_option("--encoding", enc.encoding, "gray or onehot")->capture_default_str();
  encode_cmd->add_option("--K", enc.k, "Half-bandwidth (default N-1)");
  encode_cmd->add_option("--layers", enc.layers, "Gray ansatz layers for the report")->capture_default_str();
  encode_cmd->add_option("--out", enc.out, "Output directory");
  encode_cmd->add_option("--config", enc.config, "key = value config file");

  ExactArgs ex;
  CLI::App* exact_cmd = app.add_subcommand("exact", "Lowest eigenvalues of band-truncated matrices");
  exact_cmd->add_option("matrix", ex.matrix, "Matrix file");
  exact_cmd->add_option("--K", ex.k, "Half-bandwidth (default N-1)");
  exact_cmd->add_option("--schedule", ex.schedule, "Comma-separated K values, e.g. 1,3,5,7");
  exact_cmd->add_option("--out", ex.out, "Output directory");
  exact_cmd->add_option("--config", ex.config, "key = value config file");

  VqeArgs vq;
  CLI::App* vqe_cmd = app.add_subcommand("vqe", "Warm-started VQE run over a K schedule");
  vqe_cmd->add_option("matrix", vq.matrix, "Matrix file (reference sector when a second is given)");
  vqe_cmd->add_option("matrix2", vq.matrix2, "Optional matrix to train; energies reported relative to the first");
  vqe_cmd->add_option("--encoding", vq.encoding, "gray or onehot")->capture_default_str();
  vqe_cmd->add_option("--layers", vq.layers, "Gray ansatz layers")->capture_default_str();
  vqe_cmd->add_option("--schedule", vq.schedule, "Comma-separated increasing K values (default N-1)");
  vqe_cmd->add_option("--shots", vq.shots, "Shots per measurement group; 0 = exact expectation")->capture_default_str();
  vqe_cmd->add_flag("--noise", vq.noise, "Stochastic Pauli noise (implies 1000 shots when --shots is 0)");
  vqe_cmd->add_option("--p1", vq.p1, "Single-qubit gate error probability")->capture_default_str();
  vqe_cmd->add_option("--p2", vq.p2, "Two-qubit gate error probability")->capture_default_str();
  vqe_cmd->add_option("--p_ro", vq.p_ro, "Readout bit-flip probability")->capture_default_str();
  vqe_cmd->add_option("--repeats", vq.repeats, "Independent noisy trainings for the NR spread")->capture_default_str();
  CLI::Option* seed_opt = vqe_cmd->add_option("--seed", vq.seed, "Root seed (falls back to $SEED, then 1)");
  vqe_cmd->add_option("--max_iters", vq.max_iters, "Trace rows per K segment")->capture_default_str();
  vqe_cmd->add_option("--optimizer", vq.optimizer, "auto, spsa or simplex")->capture_default_str();
  vqe_cmd->add_option("--out", vq.out, "Output directory")->capture_default_str();
  vqe_cmd->add_option("--config", vq.config, "key = value config file; flags take precedence");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kInputError;
  }

  try {
    if (*encode_cmd) {
      apply_config(*encode_cmd, enc.config);
      return cmd_encode(enc, out);
    }
    if (*exact_cmd) {
      apply_config(*exact_cmd, ex.config);
      return cmd_exact(ex, out);
    }
    apply_config(*vqe_cmd, vq.config);
    vq.seed = resolve_seed(*seed_opt, vq.seed);
    return cmd_vqe(vq, out, err);
  } catch (const NumericalError& e) {
    err << "error: " << e.what() << '\n';
    return kNumericalError;
  } catch (const CLI::Error& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
}

}  // namespace bandvqe::cli
