// Command-line front end: Clark measures, embedding verification, extreme
// point classification, mass sweeps, Pick interpolation and theta products,
// all over JSON files with optional CSV output.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "kbembed/clark.hpp"
#include "kbembed/errors.hpp"
#include "kbembed/extremal.hpp"
#include "kbembed/json_io.hpp"
#include "kbembed/model_space.hpp"
#include "kbembed/pick.hpp"

namespace {

using namespace kbembed;

constexpr int kExitVerdictFalse = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitNumerical = 3;
constexpr int kExitDisagreement = 4;

struct RunConfig {
  double tol = 1e-8;
  int quadrature_start = 256;
  unsigned seed = 0;
  std::string format = "json";
};

struct BadInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw BadInput("cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw BadInput("malformed JSON in " + path + ": " + e.what());
  }
  return j;
}

// Whole-file writes: nothing is emitted when a command fails midway.
void write_output(const std::string& path, const std::string& payload) {
  if (path.empty() || path == "-") {
    std::cout << payload;
    if (!payload.empty() && payload.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw Error("cannot write " + path);
  out << payload;
}

cplx parse_complex_flag(const std::string& text) {
  std::istringstream in(text);
  double re = 0.0, im = 0.0;
  char comma = 0;
  if (!(in >> re)) throw BadInput("expected re[,im] complex literal: " + text);
  if (in >> comma) {
    if (comma != ',' || !(in >> im))
      throw BadInput("expected re[,im] complex literal: " + text);
  }
  return {re, im};
}

QuadratureOptions quad_options(const RunConfig& cfg) {
  QuadratureOptions opts;
  opts.start_points = cfg.quadrature_start;
  return opts;
}

void validate_config(const RunConfig& cfg) {
  if (!(cfg.tol > 0.0)) throw BadInput("--tol must be positive");
  int q = cfg.quadrature_start;
  if (q < 64 || (q & (q - 1)) != 0)
    throw BadInput("--quadrature must be a power of two >= 64");
}

int cmd_clark(const RunConfig& cfg, const std::string& b_path,
              const std::string& alpha_text, const std::string& out_path,
              const std::string& csv_path) {
  validate_config(cfg);
  BlaschkeProduct b = blaschke_from_json(load_json(b_path));
  cplx alpha = parse_complex_flag(alpha_text);
  if (std::abs(std::abs(alpha) - 1.0) > 1e-6) throw BadInput("alpha must be unimodular");
  alpha /= std::abs(alpha);
  AtomicMeasure sigma = clark_measure(b, alpha);
  if (cfg.format == "csv" || !csv_path.empty())
    write_output(csv_path.empty() ? out_path : csv_path, measure_to_csv(sigma));
  if (cfg.format != "csv") write_output(out_path, to_json(sigma).dump(2));
  return 0;
}

int cmd_verify(const RunConfig& cfg, const std::string& b_path,
               const std::string& sigma_path, const std::string& out_path) {
  validate_config(cfg);
  BlaschkeProduct b = blaschke_from_json(load_json(b_path));
  AtomicMeasure sigma = measure_from_json(load_json(sigma_path));
  IsometryCertificate cert = verify_isometry(b, sigma, cfg.tol, quad_options(cfg));
  std::cout << "max_deviation " << format_double(cert.max_deviation) << "\n"
            << "verdict " << (cert.passed ? "true" : "false") << "\n";
  if (!out_path.empty()) write_output(out_path, to_json(cert).dump(2));
  return cert.passed ? 0 : kExitVerdictFalse;
}

int cmd_extreme(const RunConfig& cfg, const std::string& b_path,
                const std::string& sigma_path, bool with_oracle,
                bool decompose_alias, const std::string& out_path) {
  validate_config(cfg);
  BlaschkeProduct b = blaschke_from_json(load_json(b_path));
  AtomicMeasure sigma = measure_from_json(load_json(sigma_path));
  const int n = b.degree();
  const int p = static_cast<int>(sigma.support_size());

  if (!with_oracle && !decompose_alias) {
    Extremality verdict = is_extreme(b, sigma, cfg.tol);  // throws NotEmbedding
    ExtremalityReport report;
    report.verdict = verdict;
    report.support_size = p;
    report.lower_bound = n;
    report.upper_bound = 2 * n - 1;
    write_output(out_path, to_json(report).dump(2));
    return 0;
  }

  // Oracle path: run both classifiers unguarded and cross-examine, so
  // corrupted inputs surface as a disagreement instead of an upfront error.
  bool count_extreme = n <= p && p <= 2 * n - 1;
  ExtremalityReport report =
      decomposition_oracle(b, sigma, cfg.tol, /*enforce_embedding=*/false);
  bool oracle_extreme = report.verdict == Extremality::extreme;
  std::string breach;
  if (count_extreme != oracle_extreme)
    breach = "support-count bound and kernel oracle disagree";
  if (report.decomposition) {
    for (const auto* half : {&report.decomposition->first, &report.decomposition->second}) {
      IsometryCertificate cert = verify_isometry(b, *half, cfg.tol, quad_options(cfg));
      if (!cert.passed)
        breach = "oracle decomposition half fails the embedding check (deviation " +
                 format_double(cert.max_deviation) + ")";
    }
  }
  write_output(out_path, to_json(report).dump(2));
  if (!breach.empty()) {
    std::cerr << "disagreement: " << breach << "\n";
    return kExitDisagreement;
  }
  return 0;
}

int cmd_sweep(const RunConfig& cfg, const std::string& b_path, int alphas,
              const std::string& out_path) {
  validate_config(cfg);
  if (alphas < 1) throw BadInput("--alphas must be >= 1");
  BlaschkeProduct b = blaschke_from_json(load_json(b_path));
  std::string csv = "alpha_arg,atom_arg,weight,max_mass\n";
  for (int i = 0; i < alphas; ++i) {
    double phase = 2.0 * M_PI * i / alphas;
    AtomicMeasure sigma = clark_measure(b, unit(phase));
    for (const auto& atom : sigma.atoms()) {
      double inv = 0.0;
      for (const auto& zk : b.zeros())
        inv += zk.r * (1.0 - std::norm(zk.z)) / std::norm(atom.t - zk.z);
      csv += format_double(phase);
      csv += ',';
      csv += format_double(arg_2pi(atom.t));
      csv += ',';
      csv += format_double(atom.s);
      csv += ',';
      csv += format_double(1.0 / inv);
      csv += '\n';
    }
  }
  write_output(out_path, csv);
  return 0;
}

int cmd_pick_solve(const RunConfig& cfg, const std::string& sys_path,
                   const std::string& out_path) {
  validate_config(cfg);
  PickSystem sys = pick_system_from_json(load_json(sys_path));
  json out;
  BlaschkeProduct result;
  if (sys.boundary) {
    result = boundary_fbp_interpolation(sys.nodes, sys.values);
    out["diagnostics"] = {{"degree", result.degree()}};
  } else {
    Solvability solv = solvability(sys.matrix, tol::rank_cutoff);
    Uniqueness uni = uniqueness(sys.matrix);
    if (!solv.solvable) {
      out = {{"solvable", false}, {"margin", solv.margin}};
      write_output(out_path, out.dump(2));
      return kExitNumerical;
    }
    result = recover_fbp(sys.nodes, sys.values,
                         static_cast<int>(sys.nodes.size()) - 1);
    out["diagnostics"] = {{"rank", uni.rank},
                          {"unique", uni.unique},
                          {"margin", solv.margin},
                          {"degree", result.degree()}};
  }
  json residuals = json::array();
  for (std::size_t j = 0; j < sys.nodes.size(); ++j)
    residuals.push_back(std::abs(result.eval(sys.nodes[j]) - sys.values[j]));
  out["diagnostics"]["residuals"] = residuals;
  out["fbp"] = to_json(result);
  write_output(out_path, out.dump(2));
  return 0;
}

int cmd_theta_product(const RunConfig& cfg, const std::string& in_path,
                      const std::string& out_path) {
  validate_config(cfg);
  json j = load_json(in_path);
  if (!j.contains("theta") || !j.contains("s1") || !j.contains("s2"))
    throw BadInput("theta-product input needs theta, s1, s2");
  BlaschkeProduct theta = blaschke_from_json(j.at("theta"));
  RationalSchur s1 = schur_from_json(j.at("s1"));
  RationalSchur s2 = schur_from_json(j.at("s2"));
  RationalSchur prod = theta_product(theta, s1, s2);
  json out = to_json(prod);
  out["inner"] = is_inner(prod);
  write_output(out_path, out.dump(2));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Clark measures, model-space embeddings and their extreme points"};
  app.require_subcommand(1);

  RunConfig cfg;
  app.add_option("--tol", cfg.tol, "verification tolerance");
  app.add_option("--quadrature", cfg.quadrature_start, "starting quadrature points");
  app.add_option("--seed", cfg.seed, "seed for randomized sweeps");
  app.add_option("--format", cfg.format, "output format")
      ->check(CLI::IsMember({"json", "csv"}));

  std::string b_path, sigma_path, out_path, csv_path, alpha_text = "1,0";
  int alphas = 1;
  bool with_oracle = false;

  auto* clark = app.add_subcommand("clark", "Aleksandrov-Clark measure for alpha");
  clark->add_option("B", b_path, "Blaschke product JSON")->required();
  clark->add_option("--alpha", alpha_text, "unimodular parameter re[,im]");
  clark->add_option("-o,--out", out_path, "output path (default stdout)");
  clark->add_option("--csv", csv_path, "also write a CSV atom table");

  auto* verify = app.add_subcommand("verify", "isometric embedding certificate");
  verify->add_option("B", b_path)->required();
  verify->add_option("sigma", sigma_path)->required();
  verify->add_option("-o,--out", out_path, "certificate JSON path");

  auto* extreme = app.add_subcommand("extreme", "extreme point classification");
  extreme->add_option("B", b_path)->required();
  extreme->add_option("sigma", sigma_path)->required();
  extreme->add_flag("--oracle", with_oracle, "cross-check with the decomposition oracle");
  extreme->add_option("-o,--out", out_path);

  auto* decompose = app.add_subcommand("decompose", "explicit decomposition report");
  decompose->add_option("B", b_path)->required();
  decompose->add_option("sigma", sigma_path)->required();
  decompose->add_option("-o,--out", out_path);

  auto* sweep = app.add_subcommand("sweep", "atom trajectories over equispaced alphas");
  sweep->add_option("B", b_path)->required();
  sweep->add_option("--alphas", alphas, "number of equispaced parameters");
  sweep->add_option("-o,--out", out_path);

  auto* pick = app.add_subcommand("pick", "Nevanlinna-Pick interpolation");
  auto* solve = pick->add_subcommand("solve", "recover the interpolating product");
  solve->add_option("system", sigma_path, "JSON with nodes, values, boundary")->required();
  solve->add_option("-o,--out", out_path);

  auto* theta = app.add_subcommand("theta-product", "Schur-class theta product");
  theta->add_option("input", sigma_path, "JSON with theta, s1, s2")->required();
  theta->add_option("-o,--out", out_path);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitBadInput;
  }

  try {
    if (clark->parsed()) return cmd_clark(cfg, b_path, alpha_text, out_path, csv_path);
    if (verify->parsed()) return cmd_verify(cfg, b_path, sigma_path, out_path);
    if (extreme->parsed())
      return cmd_extreme(cfg, b_path, sigma_path, with_oracle, false, out_path);
    if (decompose->parsed())
      return cmd_extreme(cfg, b_path, sigma_path, true, true, out_path);
    if (sweep->parsed()) return cmd_sweep(cfg, b_path, alphas, out_path);
    if (pick->parsed()) return cmd_pick_solve(cfg, sigma_path, out_path);
    if (theta->parsed()) return cmd_theta_product(cfg, sigma_path, out_path);
  } catch (const BadInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const NotEmbedding& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  }
  return kExitBadInput;
}
