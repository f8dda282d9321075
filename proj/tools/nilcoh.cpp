#include "nilcoh/automorphisms.hpp"
#include "nilcoh/extensions.hpp"
#include "nilcoh/json_io.hpp"
#include "nilcoh/simplicity.hpp"
#include "nilcoh/sweeps.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <string>
#include <vector>

namespace {

using namespace nilcoh;

constexpr int kExitPass = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitInputError = 2;

GroupElement parse_element(int n, const std::string& text) {
  std::vector<Int> coords;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string::npos)
      comma = text.size();
    coords.push_back(parse_int(text.substr(start, comma - start)));
    start = comma + 1;
  }
  if (coords.size() != static_cast<std::size_t>(n) + central_dim(n))
    throw InputError("element '" + text + "' has " + std::to_string(coords.size()) +
                     " coordinates; rank " + std::to_string(n) + " needs " +
                     std::to_string(n + central_dim(n)));
  return GroupElement(n, std::move(coords));
}

void print_report(const Report& report, bool as_json, std::uint64_t seed,
                  bool show_seed) {
  if (as_json) {
    Json j = report_to_json(report);
    if (show_seed)
      j["seed"] = seed;
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::cout << report.title << "\n";
  if (show_seed)
    std::cout << "seed: " << seed << "\n";
  for (const auto& check : report.checks) {
    std::cout << (check.pass ? "[PASS] " : "[FAIL] ") << check.name;
    if (!check.detail.empty())
      std::cout << "  (" << check.detail << ")";
    std::cout << "\n";
  }
}

std::string witness_word(std::span<const Int> s) {
  std::string out;
  for (std::size_t c = 0; c < s.size(); ++c) {
    if (s[c] == 0)
      continue;
    auto [j, k] = pair_at(c);
    if (!out.empty())
      out += " * ";
    out += s[c].str() + "*v_{" + std::to_string(j) + "," + std::to_string(k) + "}";
  }
  return out.empty() ? "e" : out;
}

int run_simplicity(const std::string& params_path, bool as_json) {
  CocycleParams params = load_params_file(params_path);
  SimplicityCertificate cert = is_simple(params);
  if (as_json) {
    std::cout << certificate_to_json(cert).dump(2) << "\n";
    return kExitPass;
  }
  std::cout << "verdict: " << (cert.simple ? "simple" : "not_simple") << "\n";
  std::cout << "center:  C(T^" << cert.center_rank() << ")\n";
  std::cout << "S(G(" << cert.n << ")) basis rows:" << (cert.s_basis.rank() ? "" : " (none)")
            << "\n";
  for (const auto& row : cert.s_basis.rows()) {
    std::cout << " ";
    for (const Int& v : row)
      std::cout << " " << v;
    std::cout << "\n";
  }
  if (!cert.simple)
    std::cout << "witness: " << witness_word(cert.witness) << "\n";
  return kExitPass;
}

int run_verify(const std::string& params_path, const std::string& suite,
               const std::string& certificate_path, const SweepConfig& config,
               bool as_json) {
  CocycleParams params = load_params_file(params_path);

  if (!certificate_path.empty()) {
    SimplicityCertificate cert =
        certificate_from_json(load_json_file(certificate_path));
    std::string why;
    bool ok = recheck_certificate(params, cert, &why);
    Report report;
    report.title = "certificate recheck";
    report.add("certificate matches parameters", ok, why);
    print_report(report, as_json, config.seed, false);
    return ok ? kExitPass : kExitCheckFailed;
  }

  std::vector<Report> reports;
  if (suite == "cocycle" || suite == "all")
    reports.push_back(cocycle_suite(params, config));
  if (suite == "relations" || suite == "all")
    reports.push_back(relations_suite(params, config));
  if (suite == "k2" || suite == "all") {
    reports.push_back(verify_k2_is_g32());
    if (params.rank() >= 3)
      reports.push_back(kn_class3_battery(params.rank()));
  }
  if (reports.empty())
    throw InputError("unknown suite '" + suite +
                     "'; expected cocycle, relations, k2, or all");

  bool all_pass = true;
  if (as_json) {
    Json j = Json::array();
    for (const auto& report : reports) {
      Json entry = report_to_json(report);
      entry["seed"] = config.seed;
      j.push_back(entry);
      all_pass = all_pass && report.all_pass();
    }
    std::cout << j.dump(2) << "\n";
  } else {
    for (const auto& report : reports) {
      print_report(report, false, config.seed, true);
      all_pass = all_pass && report.all_pass();
    }
    std::cout << (all_pass ? "all checks passed" : "some checks FAILED") << "\n";
  }
  return all_pass ? kExitPass : kExitCheckFailed;
}

int run(int argc, char** argv) {
  CLI::App app{"exact computations with multipliers of free nilpotent groups of class 2"};
  app.require_subcommand(1);

  std::string params_path, matrix_path, certificate_path, suite = "all";
  std::string r_text, s_text;
  bool as_json = false;
  SweepConfig config;
  int rank_arg = 0, steps = 1;

  auto add_common = [&](CLI::App* cmd, bool with_params) {
    if (with_params)
      cmd->add_option("--params", params_path, "parameter file (JSON)")->required();
    cmd->add_flag("--json", as_json, "emit machine-readable JSON");
  };
  auto add_sweep = [&](CLI::App* cmd) {
    cmd->add_option("--seed", config.seed, "seed for randomized sweeps");
    cmd->add_option("--trials", config.trials, "number of random trials");
    cmd->add_option("--bound", config.bound, "coordinate box for random elements");
  };

  CLI::App* dim = app.add_subcommand("cohomology-dim",
                                     "number of free multiplier parameters for rank n");
  dim->add_option("n", rank_arg, "rank")->required();
  dim->add_flag("--json", as_json, "emit machine-readable JSON");

  CLI::App* eval = app.add_subcommand("eval", "evaluate sigma(r,s)");
  add_common(eval, true);
  eval->add_option("r", r_text, "comma-separated coordinates")->required();
  eval->add_option("s", s_text, "comma-separated coordinates")->required();

  CLI::App* pair = app.add_subcommand("pairing", "sigma(r,s) - sigma(s,r) mod 1");
  add_common(pair, true);
  pair->add_option("r", r_text, "comma-separated coordinates")->required();
  pair->add_option("s", s_text, "comma-separated coordinates")->required();

  CLI::App* simp = app.add_subcommand("simplicity",
                                      "simplicity certificate for C*(G(n),sigma)");
  add_common(simp, true);

  CLI::App* orbit = app.add_subcommand("aut-orbit",
                                       "orbit of the parameters under a GL(n,Z) matrix");
  add_common(orbit, true);
  orbit->add_option("--matrix", matrix_path, "matrix file (JSON array of rows)")
      ->required();
  orbit->add_option("--steps", steps, "number of action steps to emit");

  CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
  add_common(verify, true);
  verify->add_option("--suite", suite, "cocycle | relations | k2 | all");
  verify->add_option("--certificate", certificate_path,
                     "recheck a simplicity certificate instead of a suite");
  add_sweep(verify);

  CLI::App* kgroup = app.add_subcommand("kgroup", "K(n) extension group sanity battery");
  kgroup->add_option("--params", params_path, "parameter file (JSON)");
  kgroup->add_option("-n,--rank", rank_arg, "rank (alternative to --params)");
  kgroup->add_flag("--json", as_json, "emit machine-readable JSON");
  add_sweep(kgroup);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "argument error: " << e.what() << "\n";
    return kExitInputError;
  }

  if (dim->parsed()) {
    if (rank_arg < 1)
      throw InputError("rank must be >= 1");
    std::size_t count = free_param_count(rank_arg);
    if (as_json) {
      Json j;
      j["n"] = rank_arg;
      j["dim"] = count;
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << count << "\n";
    }
    return kExitPass;
  }
  if (eval->parsed() || pair->parsed()) {
    CocycleParams params = load_params_file(params_path);
    GroupElement r = parse_element(params.rank(), r_text);
    GroupElement s = parse_element(params.rank(), s_text);
    CircleExponent value = eval->parsed() ? sigma_eval(params, r, s)
                                          : pairing(params, r, s);
    if (as_json)
      std::cout << exponent_to_json(value).dump(2) << "\n";
    else
      std::cout << value.str() << "\n";
    return kExitPass;
  }
  if (simp->parsed())
    return run_simplicity(params_path, as_json);
  if (orbit->parsed()) {
    CocycleParams params = load_params_file(params_path);
    IntegerMatrix a = load_matrix_file(matrix_path);
    if (a.rows() != static_cast<std::size_t>(params.rank()) || a.rows() != a.cols())
      throw InputError("matrix shape does not match the parameter rank");
    if (!a.is_unimodular())
      throw InputError("matrix is not unimodular (determinant must be +1 or -1)");
    if (steps < 0)
      throw InputError("--steps must be nonnegative");
    CocycleParams current = params;
    for (int step = 0; step <= steps; ++step) {
      Json line;
      line["step"] = step;
      line["params"] = params_to_json(current);
      std::cout << line.dump() << "\n";
      if (step < steps)
        current = act_on_params(a, current);
    }
    return kExitPass;
  }
  if (verify->parsed())
    return run_verify(params_path, suite, certificate_path, config, as_json);
  if (kgroup->parsed()) {
    int n = rank_arg;
    if (!params_path.empty()) {
      CocycleParams params = load_params_file(params_path);
      n = params.rank();
      Report report = kgroup_suite(params, config);
      print_report(report, as_json, config.seed, true);
      return report.all_pass() ? kExitPass : kExitCheckFailed;
    }
    if (n < 1)
      throw InputError("kgroup needs --params or a rank via -n");
    Report report = kgroup_suite(CocycleParams(n, IrrationalBasis{}), config);
    print_report(report, as_json, config.seed, true);
    return report.all_pass() ? kExitPass : kExitCheckFailed;
  }
  return kExitInputError;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const nilcoh::InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCheckFailed;
  }
}
