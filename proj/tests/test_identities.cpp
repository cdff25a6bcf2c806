#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <limits>
#include <sstream>

#include "pentaperiod/errors.hpp"
#include "pentaperiod/identities.hpp"
#include "pentaperiod/report.hpp"

using namespace pentaperiod;

TEST_CASE("report finalization") {
  VerificationReport r;
  r.tolerance = 1e-3;
  r.finalize();
  CHECK_FALSE(r.pass);
  r.deviations = {1e-4, 2e-4};
  r.finalize();
  CHECK(r.pass);
  CHECK(r.max_deviation == 2e-4);
  r.deviations.push_back(std::numeric_limits<double>::quiet_NaN());
  r.finalize();
  CHECK_FALSE(r.pass);
}

TEST_CASE("parallel_for covers every index and forwards exceptions") {
  std::vector<int> hits(50, 0);
  parallel_for(50, [&](int i) { hits[std::size_t(i)] += 1; });
  for (int h : hits) CHECK(h == 1);
  CHECK_THROWS_AS(parallel_for(10, [](int i) {
                    if (i == 7) throw NumericFailure("boom");
                  }),
                  NumericFailure);
}

TEST_CASE("exact suites") {
  CHECK(verify_group().pass);
  CHECK(verify_characteristic_action().pass);
  CHECK(verify_phase_constancy().pass);
  CHECK(verify_torsion().pass);
  CHECK_FALSE(verify_phase_values(phase_values_typeset()).pass);
  CHECK(verify_phase_values(phase_values_computed()).pass);
}

TEST_CASE("typeset table agrees with the label pattern") {
  const VanishingTable& a = vanishing_table_typeset();
  const VanishingTable b = vanishing_table_from_labels();
  for (std::size_t i = 0; i < 12; ++i) {
    int row = 0;
    for (std::size_t j = 0; j < 10; ++j) {
      CHECK(a[i][j] == b[i][j]);
      row += a[i][j];
    }
    CHECK(row == 5);
  }
}

TEST_CASE("mirror frames are A-orthonormal and sit on the mirror") {
  Sampler s(5);
  const BallPoint e0 = s.ball_point(0.5);
  for (const Pair& p : all_pairs()) {
    const MirrorFrame f = mirror_frame(p, e0);
    CHECK(a_inner(f.base, f.base).real() == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(a_inner(f.normal, f.normal).real() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(std::abs(a_inner(f.normal, f.base)) < 1e-12);
    CHECK(std::abs(a_inner(embed(mirror_root(p)), f.base)) < 1e-12);
  }
}

TEST_CASE("thetas vanish on the period image of adjacent collisions where J does") {
  const TruncationPolicy pol{1e-13, 20.0};
  for (const Pair& p : {Pair(1, 2), Pair(2, 3), Pair(3, 4), Pair(4, 5)}) {
    Sampler s(8);
    const Configuration lam = s.on_L(p);
    const auto th = theta_fifth_powers(lam, pol);
    const double scale = th.cwiseAbs().maxCoeff();
    for (std::size_t k = 0; k < 12; ++k) {
      if (juzu_labels()[k].has_edge(p)) CHECK(std::abs(th(Eigen::Index(k))) < 1e-9 * scale);
      else CHECK(std::abs(th(Eigen::Index(k))) > 1e-4 * scale);
    }
  }
}

TEST_CASE("small-sample runs of the numerical suites") {
  CHECK(verify_omega_oracle(2, 1).pass);
  CHECK(verify_equivariance(2, 2).pass);
  CHECK(verify_vanishing_sweep(3, 2, 3).pass);
  CHECK(verify_diagram(3, 4, corrected_constants()).pass);
  CHECK_FALSE(verify_diagram(3, 4, constants_vector()).pass);
  CHECK(verify_final_identity(3, 5).pass);
  CHECK(verify_gauss_inverse({cplx(3.0), cplx(0.4, 0.3)}).pass);
  CHECK(verify_appell(AppellSystem::from_exponents()).pass);
  CHECK_FALSE(verify_appell(AppellSystem::typeset()).pass);
}

TEST_CASE("Gauss stratum images lie on the mirror of 12") {
  for (cplx t : {cplx(3.0), cplx(1.5), cplx(-0.7, 0.4)}) {
    const BallPoint e = gauss_eta(t);
    CHECK(std::abs(e[0]) < 1e-12 * e.v.norm());
    CHECK(is_in_ball(e));
  }
}

TEST_CASE("slope of log|theta| across a mirror") {
  const SlopeFit a = vanishing_slope({3, 3, 7}, {1, 2}, 11);
  CHECK(a.slope == doctest::Approx(1.0).epsilon(0.02));
  CHECK(a.s.size() == 9);
  const SlopeFit b = vanishing_slope({1, 1, 1}, {1, 2}, 11);
  CHECK(std::abs(b.slope) < 0.02);
}

TEST_CASE("runs are deterministic and independent of the thread count") {
  setenv("PENTAPERIOD_THREADS", "1", 1);
  const VerificationReport a = verify_final_identity(4, 77);
  setenv("PENTAPERIOD_THREADS", "3", 1);
  const VerificationReport b = verify_final_identity(4, 77);
  unsetenv("PENTAPERIOD_THREADS");
  const VerificationReport c = verify_final_identity(4, 78);
  CHECK(a.deviations == b.deviations);
  CHECK(a.deviations != c.deviations);
}

TEST_CASE("suite dispatch") {
  CHECK(suite_names().size() >= 15);
  CHECK_THROWS_AS(run_suite("no-such-suite", {}), InvalidInput);
  RunConfig cfg;
  cfg.tol = 1e-30;
  CHECK_FALSE(run_suite("final-identity", [&] {
                auto c = cfg;
                c.samples = 2;
                return c;
              }())
                  .pass);
}

TEST_CASE("JSON and CSV serialization") {
  VerificationReport r;
  r.name = "demo";
  r.tolerance = 1e-6;
  r.deviations = {1e-7, std::numeric_limits<double>::quiet_NaN()};
  r.metadata["seed"] = "1";
  r.finalize();
  const nlohmann::json j = to_json(r);
  CHECK(j["schema"] == kSchema);
  CHECK(j["test"] == "demo");
  CHECK(j["pass"] == false);
  CHECK(j["deviations"][1].is_null());
  CHECK(j["metadata"]["seed"] == "1");
  CHECK(to_json(cplx(1.5, -2)) == nlohmann::json::array({1.5, -2.0}));
  const std::string csv = to_csv(r);
  CHECK(csv.find("sample") != std::string::npos);
  r.matrix = Eigen::MatrixXd::Ones(2, 2);
  r.row_labels = {"a", "b"};
  r.col_labels = {"x", "y"};
  CHECK(to_json(r)["matrix"]["values"].size() == 2);
  CHECK(to_csv(r).find("a,") != std::string::npos);
  CHECK(parse_format("csv") == OutputFormat::csv);
  CHECK_THROWS_AS(parse_format("xml"), InvalidInput);
  std::ostringstream os;
  CHECK_THROWS_AS(emit("x", "/nonexistent-dir/x.json", os), InvalidInput);
  emit("hello", "", os);
  CHECK(os.str() == "hello");
}
