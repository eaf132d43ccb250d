// Copyright 2026 The tubal-spectra Authors.
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

#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "tubal/error.hpp"
#include "tubal/io.hpp"
#include "tubal/oracle.hpp"
#include "tubal/random.hpp"
#include "tubal/serialize.hpp"
#include "tubal/spectral.hpp"
#include "tubal/tensor3.hpp"
#include "tubal/tproduct.hpp"
#include "tubal/transform.hpp"
#include "tubal/tsvd.hpp"

namespace tubal::cli {

namespace {

namespace fs = std::filesystem;
using json::Json;

struct RunConfig {
  std::string command;
  std::vector<std::string> inputs;
  std::string output;
  double tol = kDefaultTol;
  std::uint64_t seed = kDefaultSeed;
  std::string format = "json";
  bool auto_symmetrize = false;
  bool use_oracle = false;
  bool exact = false;
  std::size_t max_size = oracle::kDefaultMaxSize;

  // random
  std::string kind = "general";
  std::vector<std::size_t> dims;
  // bench
  std::vector<std::size_t> sizes{4, 8, 16};
  std::size_t bench_depth = 8;
  std::size_t reps = 5;
};

class VerificationFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

bool text(const RunConfig& cfg) { return cfg.format == "text"; }

Tensor3 load_tensor(const std::string& path) { return io::parse_tensor(io::read_file(path)); }

void emit_tensor(const RunConfig& cfg, const Tensor3& t, std::ostream& out) {
  const std::string body = io::format_tensor(t);
  if (cfg.output.empty()) {
    out << body;
  } else {
    io::write_file(cfg.output, body);
  }
}

void emit_json(const RunConfig& cfg, const Json& doc, std::ostream& out) {
  const std::string body = json::dump(doc);
  if (cfg.output.empty() || cfg.command == "ted" || cfg.command == "tsvd") {
    out << body;
  } else {
    io::write_file(cfg.output, body);
  }
}

void print_report_text(const Report& report, std::ostream& out) {
  for (const Check& c : report.checks()) {
    out << (c.pass ? "PASS " : (c.kind == CheckKind::kClaim ? "FINDING " : "FAIL ")) << c.name
        << " residual=" << io::format_double(c.residual)
        << " threshold=" << io::format_double(c.threshold) << "\n";
  }
}

void print_tube_line(const char* label, const Tube& t, std::ostream& out) {
  out << label;
  for (std::size_t i = 0; i < t.size(); ++i) out << ' ' << io::format_double(t[i]);
  out << "\n";
}

// Puts factor tensors under "factors": file names when -o DIR was given,
// otherwise the T3 text inline.
void attach_factors(const RunConfig& cfg, Json& doc,
                    const std::vector<std::pair<std::string, const Tensor3*>>& factors) {
  Json out;
  if (!cfg.output.empty()) fs::create_directories(cfg.output);
  for (const auto& [name, tensor] : factors) {
    const std::string body = io::format_tensor(*tensor);
    if (cfg.output.empty()) {
      out[name] = body;
    } else {
      const fs::path path = fs::path(cfg.output) / (name + ".t3");
      io::write_file(path, body);
      out[name] = path.filename().string();
    }
  }
  doc["factors"] = std::move(out);
}

int cmd_info(const RunConfig& cfg, std::ostream& out) {
  const Tensor3 a = load_tensor(cfg.inputs.at(0));
  Json doc = json::document("info");
  doc["shape"] = json::shape(a.shape());
  doc["frobenius_norm"] = a.norm();
  doc["max_abs"] = a.max_abs();
  if (a.rows() == a.cols()) {
    doc["t_symmetric"] = is_t_symmetric(a, cfg.tol * a.max_abs());
    doc["t_asymmetry"] = (a - transpose(a)).max_abs();
  } else {
    doc["t_symmetric"] = nullptr;
  }
  const bool fdiag = is_f_diagonal(a, cfg.tol);
  doc["f_diagonal"] = fdiag;
  doc["standard_form"] = fdiag ? Json(to_string(is_standard_form(a, cfg.tol))) : Json(nullptr);
  if (text(cfg)) {
    out << "shape " << a.rows() << " " << a.cols() << " " << a.depth() << "\n";
    for (auto it = doc.begin(); it != doc.end(); ++it) {
      if (it.key() == "schema" || it.key() == "command" || it.key() == "shape") continue;
      out << it.key() << " " << it.value().dump() << "\n";
    }
    return kSuccess;
  }
  emit_json(cfg, doc, out);
  return kSuccess;
}

ProductPath path(const RunConfig& cfg) {
  return cfg.use_oracle ? ProductPath::kReference : ProductPath::kFrequency;
}

int cmd_tprod(const RunConfig& cfg, std::ostream& out) {
  const Tensor3 a = load_tensor(cfg.inputs.at(0));
  const Tensor3 b = load_tensor(cfg.inputs.at(1));
  emit_tensor(cfg, tprod(a, b, path(cfg)), out);
  return kSuccess;
}

int cmd_transpose(const RunConfig& cfg, std::ostream& out) {
  emit_tensor(cfg, transpose(load_tensor(cfg.inputs.at(0))), out);
  return kSuccess;
}

int cmd_ted(const RunConfig& cfg, std::ostream& out) {
  Tensor3 a = load_tensor(cfg.inputs.at(0));
  if (cfg.auto_symmetrize) a = symmetrize(a);
  TedOptions options;
  options.tol = cfg.tol;
  const TedResult t = ted(a, options);
  if (text(cfg)) {
    for (std::size_t j = 0; j < t.eigentuples.size(); ++j) {
      print_tube_line(("d" + std::to_string(j + 1)).c_str(), t.eigentuples[j], out);
    }
    out << "reconstruction " << io::format_double(t.residuals.reconstruction) << "\n";
    out << "orthogonality " << io::format_double(t.residuals.orthogonality) << "\n";
    out << "max_eigenpair " << io::format_double(t.residuals.max_eigenpair()) << "\n";
    return kSuccess;
  }
  Json doc = json::ted(t);
  if (cfg.use_oracle) doc["report"] = json::report(oracle::oracle_ted_check(a, t));
  attach_factors(cfg, doc, {{"U", &t.u}, {"D", &t.d}});
  emit_json(cfg, doc, out);
  return kSuccess;
}

int cmd_tsvd(const RunConfig& cfg, std::ostream& out) {
  const Tensor3 a = load_tensor(cfg.inputs.at(0));
  const TsvdResult t = tsvd(a);
  if (text(cfg)) {
    for (std::size_t j = 0; j < t.singular_tuples.size(); ++j) {
      print_tube_line(("s" + std::to_string(j + 1)).c_str(), t.singular_tuples[j], out);
    }
    out << "reconstruction " << io::format_double(t.residuals.reconstruction) << "\n";
    out << "max_pair " << io::format_double(t.residuals.max_pair()) << "\n";
    return kSuccess;
  }
  Json doc = json::tsvd(t);
  if (cfg.use_oracle) doc["report"] = json::report(oracle::oracle_tsvd_check(a, t));
  attach_factors(cfg, doc, {{"U", &t.u}, {"S", &t.s}, {"V", &t.v}});
  emit_json(cfg, doc, out);
  return kSuccess;
}

int cmd_psd(const RunConfig& cfg, std::ostream& out) {
  const Tensor3 a = load_tensor(cfg.inputs.at(0));
  PsdOptions options;
  options.tol = cfg.tol;
  options.symmetry_tol = cfg.tol;
  options.auto_symmetrize = cfg.auto_symmetrize;
  const PsdVerdict v =
      cfg.exact ? oracle::certify(a, options, cfg.max_size) : psd_spectral(a, options);
  if (text(cfg)) {
    out << "spectral " << to_string(v.spectral_class);
    if (v.exact_class) out << "    exact " << to_string(*v.exact_class);
    out << "\n";
    print_tube_line("smallest_eigentuple", v.smallest_eigentuple, out);
    if (v.witness) {
      out << "witness component " << *v.witness_component << "\n" << io::format_mat(*v.witness);
      print_tube_line("F(witness)", *v.witness_value, out);
    }
    return kSuccess;
  }
  emit_json(cfg, json::psd(v), out);
  return kSuccess;
}

int cmd_quadform(const RunConfig& cfg, std::ostream& out) {
  const Tensor3 a = load_tensor(cfg.inputs.at(0));
  const MatSlice x = io::parse_mat(io::read_file(cfg.inputs.at(1)));
  const Tube value = cfg.use_oracle ? oracle::oracle_quadform(a, x) : quadform(a, x);
  if (text(cfg)) {
    out << io::format_tube(value);
    return kSuccess;
  }
  Json doc = json::document("quadform");
  doc["value"] = json::tube(value);
  emit_json(cfg, doc, out);
  return kSuccess;
}

Report verify_tensor(const Tensor3& a, const RunConfig& cfg) {
  Report report;
  const double scale = a.norm();
  auto rel = [&](double err) { return scale > 0.0 ? err / scale : err; };

  report.add("transform_round_trip", rel((from_freq(to_freq(a)) - a).norm()), 1e-12);
  report.add("transpose_matches_oracle", (transpose(a) - oracle::oracle_transpose(a)).max_abs(),
             0.0);
  const Tensor3 at = transpose(a);
  const Tensor3 fast = tprod(at, a);
  const Tensor3 dense = oracle::oracle_tprod(at, a);
  report.add("tprod_matches_oracle", dense.norm() > 0 ? (fast - dense).norm() / dense.norm() : 0.0,
             1e-12);

  if (a.rows() == a.cols()) {
    const bool symmetric = is_t_symmetric(a, cfg.tol * a.max_abs());
    const Tensor3 s = symmetric ? a : symmetrize(a);
    const TedResult t = ted(s);
    report.append(oracle::oracle_ted_check(s, t), symmetric ? "ted." : "ted[A+A^T].");
    if (s.rows() * s.depth() <= cfg.max_size) {
      const PsdVerdict v = oracle::certify(s, {}, cfg.max_size);
      const bool spectral_ok = v.spectral_class != SpectralClass::kNotPsdByCriterion;
      const bool exact_ok = *v.exact_class == ExactClass::kElementwisePsd;
      report.add("psd_criterion_matches_exact", spectral_ok == exact_ok ? 0.0 : 1.0, 0.0,
                 CheckKind::kClaim);
    }
  }
  const TsvdResult t = tsvd(a);
  report.append(oracle::oracle_tsvd_check(a, t), "tsvd.");
  report.append(gram_consistency(a), "gram.");
  return report;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  const Tensor3 a = load_tensor(cfg.inputs.at(0));
  const Report report = verify_tensor(a, cfg);
  if (text(cfg)) {
    print_report_text(report, out);
  } else {
    Json doc = json::document("verify");
    doc["shape"] = json::shape(a.shape());
    doc["invariants_hold"] = report.invariants_hold();
    doc["report"] = json::report(report);
    emit_json(cfg, doc, out);
  }
  return report.invariants_hold() ? kSuccess : kVerificationFailure;
}

int cmd_random(const RunConfig& cfg, std::ostream& out) {
  const auto kind = parse_random_kind(cfg.kind);
  if (!kind) throw CLI::ValidationError("--kind", "expected general, tsym, psd or fdiag");
  if (cfg.dims.size() != 3) throw CLI::ValidationError("dims", "expected m n p");
  const std::size_t m = cfg.dims[0], n = cfg.dims[1], p = cfg.dims[2];
  if (m == 0 || n == 0 || p == 0) throw CLI::ValidationError("dims", "dimensions must be >= 1");
  Rng rng(cfg.seed);
  Tensor3 a;
  switch (*kind) {
    case RandomKind::kGeneral: a = random_general(m, n, p, rng); break;
    case RandomKind::kTSymmetric:
      if (m != n) throw CLI::ValidationError("dims", "tsym needs m == n");
      a = random_tsym(n, p, rng);
      break;
    case RandomKind::kPsd: a = random_gram(m, n, p, rng); break;
    case RandomKind::kFDiagonal: a = random_fdiag(m, n, p, rng); break;
  }
  emit_tensor(cfg, a, out);
  return kSuccess;
}

double time_ms(std::size_t reps, const std::function<void()>& body) {
  const auto start = std::chrono::steady_clock::now();
  for (std::size_t r = 0; r < reps; ++r) body();
  const auto stop = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(stop - start).count() /
         static_cast<double>(std::max<std::size_t>(1, reps));
}

int cmd_bench(const RunConfig& cfg, std::ostream& out) {
  Rng rng(cfg.seed);
  Json doc = json::document("bench");
  doc["depth"] = cfg.bench_depth;
  doc["reps"] = cfg.reps;
  Json rows = Json::array();
  for (std::size_t n : cfg.sizes) {
    if (n == 0) throw CLI::ValidationError("--sizes", "sizes must be >= 1");
    const Tensor3 a = random_general(n, n, cfg.bench_depth, rng);
    const Tensor3 b = random_general(n, n, cfg.bench_depth, rng);
    const Tensor3 s = symmetrize(a);
    Json row;
    row["n"] = n;
    row["tprod_fast_ms"] = time_ms(cfg.reps, [&] { (void)tprod(a, b); });
    row["tprod_oracle_ms"] = time_ms(cfg.reps, [&] { (void)oracle::oracle_tprod(a, b); });
    row["ted_ms"] = time_ms(cfg.reps, [&] { (void)ted(s); });
    row["tsvd_ms"] = time_ms(cfg.reps, [&] { (void)tsvd(a); });
    rows.push_back(std::move(row));
  }
  doc["results"] = std::move(rows);
  if (text(cfg)) {
    for (const auto& row : doc["results"]) out << row.dump() << "\n";
    return kSuccess;
  }
  emit_json(cfg, doc, out);
  return kSuccess;
}

int exit_code_for(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::kShapeError:
    case ErrorKind::kDimensionMismatch:
    case ErrorKind::kFormatError:
    case ErrorKind::kIndexError:
      return kUsageError;
    default:
      return kNumericalError;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Tubal-scalar algebra, T-eigen-decomposition and TSVD of third-order tensors",
               "tubal-spectra"};
  app.require_subcommand(1, 1);
  app.option_defaults()->always_capture_default();
  app.add_option("--tol", cfg.tol, "Structure and PSD tolerance")
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", cfg.seed, "Seed for generators");
  app.add_option("--format", cfg.format, "Report format")
      ->check(CLI::IsMember({"json", "text"}));
  app.add_flag("--auto-symmetrize", cfg.auto_symmetrize, "Use A + A^T for ted and psd");
  app.add_flag("--use-oracle", cfg.use_oracle,
               "Use the dense reference path (tprod, quadform) or attach dense reports (ted, tsvd)");
  app.add_option("--max-size", cfg.max_size, "Largest n*p accepted by exact PSD tests");

  auto input = [&](CLI::App* sub, const char* name, const char* help) {
    sub->add_option(name, cfg.inputs, help)->required()->check(CLI::ExistingFile);
  };
  auto fallthrough = [](CLI::App* sub) { sub->fallthrough(); };

  CLI::App* info = app.add_subcommand("info", "Shape, T-symmetry and f-diagonality of a tensor");
  input(info, "tensor", "T3 file");
  CLI::App* prod = app.add_subcommand("tprod", "T-product A * B");
  prod->add_option("inputs", cfg.inputs, "T3 files")->required()->expected(2)->check(CLI::ExistingFile);
  prod->add_option("-o,--output", cfg.output, "Output T3 file");
  CLI::App* trans = app.add_subcommand("transpose", "T-transpose");
  input(trans, "tensor", "T3 file");
  trans->add_option("-o,--output", cfg.output, "Output T3 file");
  CLI::App* ted_cmd = app.add_subcommand("ted", "T-eigen-decomposition of a T-symmetric tensor");
  input(ted_cmd, "tensor", "T3 file");
  ted_cmd->add_option("-o,--output", cfg.output, "Directory for U.t3 and D.t3");
  CLI::App* tsvd_cmd = app.add_subcommand("tsvd", "T-singular value decomposition");
  input(tsvd_cmd, "tensor", "T3 file");
  tsvd_cmd->add_option("-o,--output", cfg.output, "Directory for U.t3, S.t3 and V.t3");
  CLI::App* psd = app.add_subcommand("psd", "Eigentuple PSD criterion");
  input(psd, "tensor", "T3 file");
  psd->add_flag("--exact", cfg.exact, "Add the exact elementwise verdict and a witness");
  CLI::App* quad = app.add_subcommand("quadform", "F_A(X) = X^T * A * X");
  quad->add_option("inputs", cfg.inputs, "T3 file and MAT file")
      ->required()
      ->expected(2)
      ->check(CLI::ExistingFile);
  CLI::App* verify = app.add_subcommand("verify", "Run every invariant check on one tensor");
  input(verify, "tensor", "T3 file");
  CLI::App* random = app.add_subcommand("random", "Generate a random tensor");
  random->add_option("--kind", cfg.kind, "general, tsym, psd or fdiag");
  random->add_option("dims", cfg.dims, "m n p")->required()->expected(3);
  random->add_option("-o,--output", cfg.output, "Output T3 file");
  CLI::App* bench = app.add_subcommand("bench", "Time fast paths against the dense oracle");
  bench->add_option("--sizes", cfg.sizes, "Values of n")->delimiter(',');
  bench->add_option("--depth", cfg.bench_depth, "p")->check(CLI::PositiveNumber);
  bench->add_option("--reps", cfg.reps, "Repetitions");
  for (CLI::App* sub : app.get_subcommands({})) fallthrough(sub);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kUsageError;
  }

  cfg.command = app.get_subcommands().front()->get_name();
  static const std::map<std::string, std::function<int(const RunConfig&, std::ostream&)>>
      commands = {
          {"info", cmd_info},         {"tprod", cmd_tprod},   {"transpose", cmd_transpose},
          {"ted", cmd_ted},           {"tsvd", cmd_tsvd},     {"psd", cmd_psd},
          {"quadform", cmd_quadform}, {"verify", cmd_verify}, {"random", cmd_random},
          {"bench", cmd_bench},
      };
  try {
    return commands.at(cfg.command)(cfg, out);
  } catch (const CLI::ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const Error& e) {
    err << e.name() << ": " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kNumericalError;
  }
}

int cli_main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace tubal::cli
