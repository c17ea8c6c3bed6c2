// Copyright 2026 The ratcp Authors
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

#include <CLI11.hpp>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "ratcp/factorizer.hpp"
#include "ratcp/instances.hpp"
#include "ratcp/io.hpp"
#include "ratcp/lattice.hpp"
#include "ratcp/verify.hpp"

namespace ratcp::cli {
namespace {

// A ParseError tagged with the file it came from.
struct FileParseError : std::runtime_error {
  explicit FileParseError(const std::string& path, const ParseError& e)
      : std::runtime_error(path + ":" + std::to_string(e.line()) + ":" +
                           std::to_string(e.column()) + ": " + e.detail()) {}
};

// Thrown for unreadable or unwritable paths.
struct FileError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Thrown for malformed values given on the command line.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Streams {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
};

std::string display(const std::string& path) { return path == "-" ? "<stdin>" : path; }

template <typename T>
T read_file(const std::string& path, std::istream& in, T (*reader)(std::istream&)) {
  if (path == "-") {
    try {
      return reader(in);
    } catch (const ParseError& e) {
      throw FileParseError(display(path), e);
    }
  }
  std::ifstream file(path);
  if (!file) throw FileError("cannot open '" + path + "' for reading");
  try {
    return reader(file);
  } catch (const ParseError& e) {
    throw FileParseError(path, e);
  }
}

void write_file(const std::string& path, std::ostream& out,
                const std::function<void(std::ostream&)>& writer) {
  if (path == "-") {
    writer(out);
    out.flush();
    return;
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw FileError("cannot open '" + path + "' for writing");
  writer(file);
  if (!file) throw FileError("failed writing '" + path + "'");
}

Rational flag_rational(const std::string& flag, const std::string& text) {
  try {
    return Rational::parse(text);
  } catch (const std::exception&) {
    throw UsageError(flag + ": expected a rational p/q, got '" + text + "'");
  }
}

struct FactorizeArgs {
  std::string matrix = "-";
  std::string output = "-";
  std::size_t initial_r = FactorizeConfig{}.initial_r;
  std::size_t max_r = FactorizeConfig{}.max_r;
  std::size_t max_rounds = FactorizeConfig{}.max_rounds;
  std::size_t cuts = FactorizeConfig{}.cuts_per_round;
  std::string lambda_mult = "1";
};

void print_stats(std::ostream& err, const FactorizeStats& s) {
  err << "rounds=" << s.rounds << " R=" << s.final_r << " lambda=" << s.lambda
      << " lp_solves=" << s.lp_solves << " lp_iterations=" << s.lp_iterations
      << " separation_rounds=" << s.separation_rounds << " constraints=" << s.constraints << '\n';
}

int do_factorize(const FactorizeArgs& args, Streams io) {
  const SymMatrix a = read_file<SymMatrix>(args.matrix, io.in, &read_matrix);
  FactorizeConfig cfg;
  cfg.initial_r = args.initial_r;
  cfg.max_r = args.max_r;
  cfg.max_rounds = args.max_rounds;
  cfg.cuts_per_round = args.cuts;
  cfg.lambda_policy = flag_rational("--lambda-mult", args.lambda_mult);
  try {
    cfg.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (a.trace().sign() <= 0) {
    io.err << "not interior: trace(A) = " << a.trace() << " is not positive\n";
    return kNotInterior;
  }

  const FactorizeOutcome outcome = factorize(a, cfg);
  if (const auto* ok = std::get_if<Success>(&outcome)) {
    write_file(args.output, io.out,
               [&](std::ostream& os) { write_certificate(os, ok->certificate); });
    io.err << "success: " << ok->certificate.atoms.size() << " atoms\n";
    print_stats(io.err, ok->stats);
    return kOk;
  }
  if (const auto* bound = std::get_if<BoundExceeded>(&outcome)) {
    io.err << "bound exceeded: no separation-clean vertex within " << bound->stats.rounds
           << " rounds (R = " << bound->final_r << ")\n";
    print_stats(io.err, bound->stats);
    return kBoundExceeded;
  }
  const auto& suspect = std::get<NotInteriorSuspected>(outcome);
  io.err << "not interior (suspected): " << suspect.evidence << '\n'
         << "witness D = " << suspect.witness.to_string() << '\n';
  print_stats(io.err, suspect.stats);
  return kNotInterior;
}

int do_verify(const std::string& matrix_path, const std::string& cert_path, Streams io) {
  const SymMatrix a = read_file<SymMatrix>(matrix_path, io.in, &read_matrix);
  const Certificate cert = read_file<Certificate>(cert_path, io.in, &read_certificate);
  const Verdict verdict = verify_certificate(a, cert);
  if (verdict) {
    io.out << "valid\n";
    return kOk;
  }
  io.out << "invalid: " << verdict.reason << '\n';
  return kInvalid;
}

struct GenerateArgs {
  std::size_t n = 0;
  std::uint64_t seed = 0;
  std::string output = "-";
  std::string witness;
  std::uint64_t coord_bound = GenerateOptions{}.coord_bound;
  std::uint64_t coeff_bound = GenerateOptions{}.coeff_bound;
  std::optional<std::size_t> random_atoms;
};

int do_generate(const GenerateArgs& args, Streams io) {
  GenerateOptions opts;
  opts.coord_bound = args.coord_bound;
  opts.coeff_bound = args.coeff_bound;
  opts.random_atoms = args.random_atoms;
  InteriorInstance inst = [&] {
    try {
      return generate_interior(args.n, args.seed, opts);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }();
  write_file(args.output, io.out, [&](std::ostream& os) { write_matrix(os, inst.a); });
  if (!args.witness.empty()) {
    write_file(args.witness, io.out,
               [&](std::ostream& os) { write_certificate(os, inst.witness); });
  }
  return kOk;
}

int do_separate(const std::string& matrix_path, std::size_t r, std::size_t max, Streams io) {
  const SymMatrix b = read_file<SymMatrix>(matrix_path, io.in, &read_matrix);
  std::unique_ptr<SeparationConfig> cfg;
  try {
    cfg = std::make_unique<SeparationConfig>(r, max);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const auto found = find_violations(b, *cfg);
  for (const auto& v : found) {
    for (std::size_t i = 0; i < v.size(); ++i) io.out << (i ? " " : "") << v[i].get_str();
    io.out << '\n';
  }
  io.err << found.size() << " violating vector(s) with |v|_inf <= " << r << '\n';
  return kOk;
}

int do_dirichlet(const std::vector<std::string>& alpha_text, const std::string& eps_text,
                 Streams io) {
  std::vector<Rational> alphas;
  for (const auto& t : alpha_text) alphas.push_back(flag_rational("--alphas", t));
  const Rational eps = flag_rational("--eps", eps_text);
  if (alphas.empty()) throw UsageError("--alphas: at least one value is required");
  if (eps.sign() <= 0 || eps >= Rational(1)) throw UsageError("--eps: must lie in (0, 1)");
  const DirichletResult res = dirichlet(alphas, eps);
  io.out << "p=(";
  for (std::size_t i = 0; i < res.p().size(); ++i) io.out << (i ? "," : "") << res.p()[i].get_str();
  io.out << ")\nq=" << res.q().get_str() << '\n';
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  Streams io{in, out, err};
  CLI::App app{"Exact rational cp-factorizations of completely positive matrices", "ratcp"};
  app.require_subcommand(1);

  FactorizeArgs fa;
  auto* factorize_cmd = app.add_subcommand("factorize", "Compute a rational cp-factorization");
  factorize_cmd->add_option("matrix", fa.matrix, "Matrix file ('-' for stdin)");
  factorize_cmd->add_option("-o,--output", fa.output, "Certificate output ('-' for stdout)");
  factorize_cmd->add_option("--initial-R", fa.initial_r, "Initial separation radius");
  factorize_cmd->add_option("--max-R", fa.max_r, "Largest separation radius");
  factorize_cmd->add_option("--lambda-mult", fa.lambda_mult,
                            "lambda = mult * trace(A), rational >= 1");
  factorize_cmd->add_option("--max-rounds", fa.max_rounds, "Cutting-plane round budget");
  factorize_cmd->add_option("--cuts", fa.cuts, "Cuts added per separation call");

  std::string verify_matrix;
  std::string verify_cert;
  auto* verify_cmd = app.add_subcommand("verify", "Check a certificate against a matrix");
  verify_cmd->add_option("matrix", verify_matrix, "Matrix file")->required();
  verify_cmd->add_option("certificate", verify_cert, "Certificate file")->required();

  GenerateArgs ga;
  auto* generate_cmd = app.add_subcommand("generate", "Generate a certified interior matrix");
  generate_cmd->add_option("-n", ga.n, "Dimension")->required();
  generate_cmd->add_option("--seed", ga.seed, "PRNG seed")->required();
  generate_cmd->add_option("-o,--output", ga.output, "Matrix output ('-' for stdout)");
  generate_cmd->add_option("--witness", ga.witness, "Also write the generating certificate");
  generate_cmd->add_option("--coord-bound", ga.coord_bound, "Largest random atom coordinate");
  generate_cmd->add_option("--coeff-bound", ga.coeff_bound,
                           "Largest coefficient numerator/denominator");
  generate_cmd->add_option("--random-atoms", ga.random_atoms, "Number of random atoms");

  std::string separate_matrix = "-";
  std::size_t separate_r = 0;
  std::size_t separate_max = 1'000'000;
  auto* separate_cmd = app.add_subcommand("separate", "List lattice vectors v with v^T B v < 1");
  separate_cmd->add_option("matrix", separate_matrix, "Matrix file for B ('-' for stdin)");
  separate_cmd->add_option("--R", separate_r, "Bound on |v|_inf")->required();
  separate_cmd->add_option("--max", separate_max, "Stop after this many vectors");

  std::vector<std::string> alphas;
  std::string eps;
  auto* dirichlet_cmd =
      app.add_subcommand("dirichlet", "Simultaneous approximation p/q with q <= eps^-n");
  dirichlet_cmd->add_option("--alphas", alphas, "Comma-separated rationals")
      ->required()
      ->delimiter(',');
  dirichlet_cmd->add_option("--eps", eps, "Accuracy p/q in (0, 1)")->required();

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    if (*factorize_cmd) return do_factorize(fa, io);
    if (*verify_cmd) return do_verify(verify_matrix, verify_cert, io);
    if (*generate_cmd) return do_generate(ga, io);
    if (*separate_cmd) return do_separate(separate_matrix, separate_r, separate_max, io);
    if (*dirichlet_cmd) return do_dirichlet(alphas, eps, io);
  } catch (const FileParseError& e) {
    err << e.what() << '\n';
    return kUsage;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const FileError& e) {
    err << "error: " << e.what() << '\n';
    return kNoInput;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  }
  return kUsage;
}

}  // namespace ratcp::cli
