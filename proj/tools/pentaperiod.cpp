// pentaperiod: period map, theta constants and verification suites from the command line.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pentaperiod/errors.hpp"
#include "pentaperiod/identities.hpp"
#include "pentaperiod/report.hpp"

namespace pp = pentaperiod;
using nlohmann::json;

namespace {

enum Exit { kPass = 0, kFail = 1, kInvalid = 2, kNumeric = 3 };

pp::Configuration config_from_numbers(const std::vector<double>& v) {
  std::array<pp::cplx, 5> l;
  if (v.size() == 5) {
    for (std::size_t k = 0; k < 5; ++k) l[k] = v[k];
  } else if (v.size() == 10) {
    for (std::size_t k = 0; k < 5; ++k) l[k] = pp::cplx(v[2 * k], v[2 * k + 1]);
  } else {
    throw pp::InvalidInput("--lambda takes 5 real values or 10 numbers (re,im pairs)");
  }
  return pp::Configuration::finite(l);
}

pp::Configuration config_from_homogeneous(const std::vector<double>& v) {
  if (v.size() != 20) throw pp::InvalidInput("--homogeneous takes 20 numbers: (Re a, Im a, Re b, Im b) per point");
  pp::Configuration c;
  for (std::size_t k = 0; k < 5; ++k) {
    c.a[k] = pp::cplx(v[4 * k], v[4 * k + 1]);
    c.b[k] = pp::cplx(v[4 * k + 2], v[4 * k + 3]);
    if (c.a[k] == 0.0 && c.b[k] == 0.0) throw pp::InvalidInput("[0:0] is not a point of P1");
  }
  return c;
}

pp::Configuration config_from_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw pp::InvalidInput("cannot read " + path);
  json j;
  try {
    f >> j;
  } catch (const json::exception& e) {
    throw pp::InvalidInput(std::string("malformed JSON: ") + e.what());
  }
  if (!j.contains("lambda") || !j["lambda"].is_array() || j["lambda"].size() != 5)
    throw pp::InvalidInput("expected {\"lambda\": [[re,im] x 5]}");
  std::vector<double> v;
  for (const auto& p : j["lambda"]) {
    if (p.is_number()) {
      v.push_back(p.get<double>());
      v.push_back(0.0);
    } else if (p.is_array() && p.size() == 2 && p[0].is_number() && p[1].is_number()) {
      v.push_back(p[0].get<double>());
      v.push_back(p[1].get<double>());
    } else {
      throw pp::InvalidInput("each lambda entry must be [re, im]");
    }
  }
  return config_from_numbers(v);
}

int cmd_eta(const pp::Configuration& lam, const std::string& out) {
  lam.require_distinct();
  const pp::BallPoint eta = pp::normalized(pp::schwarz_map(lam));
  json j;
  j["schema"] = pp::kSchema;
  j["eta"] = json::array({pp::to_json(eta[0]), pp::to_json(eta[1]), pp::to_json(eta[2])});
  j["ball_norm"] = pp::a_norm(eta);
  j["calibration_id"] = pp::kCalibrationId;
  pp::emit(j.dump(2) + "\n", out, std::cout);
  return kPass;
}

int cmd_theta(const std::vector<double>& e, const std::vector<int>& t, const pp::TruncationPolicy& pol,
              const std::string& out) {
  if (e.size() != 6) throw pp::InvalidInput("--eta takes 6 numbers (re,im pairs)");
  if (t.size() != 3) throw pp::InvalidInput("--triple takes 3 integers");
  if (!(pol.tol > 0) || !(pol.max_radius > 0)) throw pp::InvalidInput("tolerances must be positive");
  const pp::BallPoint eta(pp::cplx(e[0], e[1]), pp::cplx(e[2], e[3]), pp::cplx(e[4], e[5]));
  if (!pp::is_in_ball(eta)) throw pp::InvalidInput("eta is not in the ball");
  const pp::ThetaResult r = pp::theta_triple(eta, pp::TripleChar{t[0], t[1], t[2]}, pol);
  json j;
  j["schema"] = pp::kSchema;
  j["value"] = pp::to_json(r.value);
  j["tail_bound"] = r.tail_bound;
  j["lattice_points"] = r.lattice_points;
  j["radius"] = r.radius;
  pp::emit(j.dump(2) + "\n", out, std::cout);
  return kPass;
}

int cmd_verify(const std::string& suite, const pp::RunConfig& cfg, const std::string& format,
               const std::string& out) {
  const pp::OutputFormat f = pp::parse_format(format);
  const pp::VerificationReport r = pp::run_suite(suite, cfg);
  pp::write_report(r, f, out, std::cout);
  if (!r.pass) {
    std::cerr << suite << ": FAIL, max deviation " << r.max_deviation << " > " << r.tolerance << "\n";
    std::size_t shown = 0;
    for (const auto& d : r.details) {
      if (shown++ == 10) break;
      std::cerr << "  " << d << "\n";
    }
  }
  return r.pass ? kPass : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Period map and theta constants of the pentagonal curve family"};
  app.require_subcommand(1);

  std::string out, format = "json", lambda_file, suite;
  std::vector<double> lambda, homogeneous, eta;
  std::vector<int> triple;
  pp::RunConfig cfg;

  auto* eta_cmd = app.add_subcommand("eta", "Schwarz map eta(lambda) and its ball norm");
  auto* l_opt = eta_cmd->add_option("--lambda", lambda, "5 real values, or 10 numbers as (re,im) pairs")->delimiter(',');
  auto* h_opt = eta_cmd->add_option("--homogeneous", homogeneous, "20 numbers: (a, b) per point as re,im")->delimiter(',');
  auto* f_opt = eta_cmd->add_option("--input", lambda_file, "JSON file {\"lambda\": [[re,im] x 5]}");
  l_opt->excludes(h_opt)->excludes(f_opt);
  h_opt->excludes(f_opt);
  eta_cmd->add_option("--out", out, "Output path");

  auto* th_cmd = app.add_subcommand("theta", "Theta constant for a triple characteristic at eta");
  th_cmd->add_option("--eta", eta, "6 numbers: eta1..eta3 as re,im")->delimiter(',')->required();
  th_cmd->add_option("--triple", triple, "a1,a2,a3")->delimiter(',')->required();
  th_cmd->add_option("--theta-tol,--tol", cfg.theta_tol, "Absolute tail tolerance");
  th_cmd->add_option("--max-radius", cfg.max_radius, "Largest admissible ellipsoid radius");
  th_cmd->add_option("--out", out, "Output path");

  auto* v_cmd = app.add_subcommand("verify", "Run a verification suite");
  v_cmd->add_option("suite", suite, "Suite name")->required()->check(CLI::IsMember(pp::suite_names()));
  v_cmd->add_option("--tol", cfg.tol, "Suite tolerance (default: pinned per suite)");
  v_cmd->add_option("--theta-tol", cfg.theta_tol, "Theta tail tolerance");
  v_cmd->add_option("--seed", cfg.seed, "64-bit seed");
  v_cmd->add_option("--samples", cfg.samples, "Sample count (default: per suite)");
  v_cmd->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  v_cmd->add_option("--out", out, "Output path");
  v_cmd->add_option("--max-radius", cfg.max_radius, "Largest admissible ellipsoid radius");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInvalid;
  }

  try {
    if (*eta_cmd) {
      pp::Configuration lam;
      if (!lambda.empty()) lam = config_from_numbers(lambda);
      else if (!homogeneous.empty()) lam = config_from_homogeneous(homogeneous);
      else if (!lambda_file.empty()) lam = config_from_file(lambda_file);
      else throw pp::InvalidInput("give --lambda, --homogeneous or --input");
      return cmd_eta(lam, out);
    }
    if (*th_cmd) return cmd_theta(eta, triple, {cfg.theta_tol, cfg.max_radius}, out);
    if (*v_cmd) return cmd_verify(suite, cfg, format, out);
  } catch (const pp::InvalidInput& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kInvalid;
  } catch (const pp::NumericFailure& e) {
    std::cerr << "numeric failure: " << e.what() << "\n";
    return kNumeric;
  } catch (const std::exception& e) {
    std::cerr << "numeric failure: " << e.what() << "\n";
    return kNumeric;
  }
  return kInvalid;
}
