#include <doctest.h>

#include <cmath>
#include <functional>

#include <Eigen/Eigenvalues>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include "pentaperiod/configspace.hpp"
#include "pentaperiod/errors.hpp"
#include "pentaperiod/periods.hpp"

using namespace pentaperiod;

namespace {

cplx oracle_log(cplx u) {
  double a = std::atan2(u.imag(), u.real());
  if (a <= -M_PI / 2) a += 2 * M_PI;
  return {std::log(std::abs(u)), a};
}

/// Base-sheet segment integral by double-exponential quadrature in the segment parameter.
cplx oracle_segment(const Configuration& lam, int i, int j, const FormExponent& f) {
  const auto l = lam.values();
  const cplx A = l[std::size_t(i)], B = l[std::size_t(j)];
  const cplx logBA = oracle_log(B - A), logAB = oracle_log(A - B);
  auto g = [&](double x, double xc) {
    const double t = xc < 0 ? -xc / 2 : (1 + x) / 2, u = xc > 0 ? xc / 2 : (1 - x) / 2;
    const cplx z = xc > 0 ? B - u * (B - A) : A + t * (B - A);
    cplx lg = -f.e / 5.0 * (std::log(t) + logBA + std::log(u) + logAB);
    for (int k = 0; k < 5; ++k)
      if (k != i && k != j) lg -= f.e / 5.0 * oracle_log(z - l[std::size_t(k)]);
    return std::exp(lg) * std::pow(z, f.p) * 0.5 * (B - A);
  };
  boost::math::quadrature::tanh_sinh<double> ts;
  const double re = ts.integrate([&](double x, double xc) { return g(x, xc).real(); }, -1.0, 1.0, 1e-14);
  const double im = ts.integrate([&](double x, double xc) { return g(x, xc).imag(); }, -1.0, 1.0, 1e-14);
  return {re, im};
}

Chain shifted(Chain c, int k) {
  for (ArcPiece& p : c) p.sheet += k;
  return c;
}

}  // namespace

TEST_CASE("cut_log branch") {
  CHECK(cut_log(-1.0).imag() == doctest::Approx(M_PI));
  CHECK(cut_log(cplx(0, -1)).imag() == doctest::Approx(1.5 * M_PI));
  CHECK(cut_log(cplx(1e-3, -1)).imag() == doctest::Approx(-M_PI / 2 + 1e-3).epsilon(1e-6));
  CHECK(cut_log(cplx(2, 0)).real() == doctest::Approx(std::log(2.0)));
}

TEST_CASE("segment integrals agree with double-exponential quadrature") {
  const Configuration ref = Configuration::reference();
  Sampler s(101);
  const Configuration gen = s.interior();
  for (const FormExponent& f : forms()) {
    for (int i = 0; i < 4; ++i) {
      const cplx a = segment_integral(ref, i, i + 1, f), b = oracle_segment(ref, i, i + 1, f);
      CHECK(std::abs(a - b) < 1e-9 * std::abs(b));
      const cplx c = segment_integral(gen, i, i + 1, f), d = oracle_segment(gen, i, i + 1, f);
      CHECK(std::abs(c - d) < 1e-9 * std::abs(d));
    }
  }
}

TEST_CASE("segment reversal changes sign") {
  Sampler s(7);
  const Configuration lam = s.interior();
  for (const FormExponent& f : forms()) {
    const cplx a = segment_integral(lam, 1, 2, f), b = segment_integral(lam, 2, 1, f);
    CHECK(std::abs(a + b) < 1e-12 * std::abs(a));
  }
}

TEST_CASE("quadrature has converged at the default node count") {
  QuadratureSettings hi;
  hi.nodes = 80;
  Sampler s(3);
  const Configuration lam = s.interior();
  const Vector6c a = chain_integrals(lam, gamma2()), b = chain_integrals(lam, gamma2(), hi);
  CHECK((a - b).norm() < 1e-12 * b.norm());
}

TEST_CASE("segments through a branch point or across a cut are rejected") {
  Configuration lam = Configuration::finite({0.0, 1.0, 2.0, 3.0, 4.0});
  CHECK_THROWS_AS(segment_integral(lam, 0, 2, forms()[0]), InvalidInput);
  lam = Configuration::finite({0.0, cplx(1.0, 0.5), 2.0, 3.0, 4.0});
  CHECK_THROWS_AS(segment_integral(lam, 0, 2, forms()[0]), InvalidInput);
}

TEST_CASE("colliding points are named") {
  const Configuration lam = Configuration::finite({0.0, 1.0, 1.0, 3.0, 4.0});
  try {
    lam.require_distinct();
    FAIL("no exception");
  } catch (const InvalidInput& e) {
    CHECK(std::string(e.what()).find("lambda2") != std::string::npos);
    CHECK(std::string(e.what()).find("lambda3") != std::string::npos);
  }
}

TEST_CASE("Riemann relations and Siegel conditions at interior points") {
  Sampler s(44);
  for (int k = 0; k < 3; ++k) {
    const PeriodAssembly p = period_assembly(s.interior());
    CHECK(riemann_residual(p) < 1e-12);
    CHECK((p.Omega - p.Omega.transpose()).cwiseAbs().maxCoeff() < 1e-11);
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix<double, 6, 6>> es(p.Omega.imag());
    CHECK(es.eigenvalues().minCoeff() > 0);
  }
}

TEST_CASE("the Schwarz map lands in the ball") {
  Sampler s(55);
  for (int k = 0; k < 5; ++k) CHECK(is_in_ball(schwarz_map(s.interior())));
  CHECK(is_in_ball(schwarz_map(Configuration::reference())));
}

TEST_CASE("the Schwarz map is invariant under translation and scaling") {
  Sampler s(66);
  const Configuration lam = s.interior();
  const BallPoint e = schwarz_map(lam);
  CHECK(projective_distance(schwarz_map(mobius(lam, 1, 0, 1, 1)).v, e.v) < 1e-12);
  CHECK(projective_distance(schwarz_map(mobius(lam, 1, 0, 0, 2)).v, e.v) < 1e-12);
}

TEST_CASE("normalized arc integrals recover the unit vector and a column of Omega") {
  Sampler s(88);
  const Configuration lam = s.interior();
  const PeriodAssembly p = period_assembly(lam);
  const Vector6c u = normalized_arc_integral(lam, gamma1(), p);
  CHECK((u - Vector6c::Unit(0)).norm() < 1e-12);
  Chain b1 = shifted(gamma1(), 1);
  const Chain b3 = shifted(gamma1(), 3);
  b1.insert(b1.end(), b3.begin(), b3.end());
  const Vector6c w = normalized_arc_integral(lam, b1, p);
  CHECK((w - p.Omega.col(0)).norm() < 1e-11);
}

TEST_CASE("sheet shifts multiply by zeta^(-k e)") {
  const Configuration lam = Configuration::reference();
  for (const FormExponent& f : forms()) {
    const cplx a = sheet_arc(lam, 0, 0, 1, f), b = sheet_arc(lam, 2, 0, 1, f);
    CHECK(std::abs(b - std::polar(1.0, -2 * M_PI * 2 * f.e / 5.0) * a) < 1e-13 * std::abs(a));
  }
}

TEST_CASE("10-torsion points round to their characteristic") {
  const PeriodAssembly p = period_assembly(Configuration::reference());
  Characteristic c;
  c.a_num << 1, 3, 0, 7, 2, 9;
  c.b_num << 4, 0, 5, 1, 8, 6;
  const Vector6c v = p.Omega * c.a().cast<cplx>() + c.b().cast<cplx>();
  const TorsionResult r = characteristic_of_vector(v, p.Omega);
  CHECK(r.ch.congruent(c));
  CHECK(r.residual < 1e-12);
  const Vector6c off = v + Vector6c::Constant(0.033);
  CHECK_THROWS_AS(characteristic_of_vector(off, p.Omega), NumericFailure);
}

TEST_CASE("Appell operator on constants") {
  for (const AppellSystem& s : {AppellSystem::typeset(), AppellSystem::from_exponents()}) {
    const auto r = appell_operator(s, 0.3, 0.6, Jet2{0, 0, 0, 0, 0, 1}, false);
    CHECK(std::abs(r[0] + s.r1) < 1e-15);
    CHECK(std::abs(r[1] + s.r2) < 1e-15);
  }
  CHECK(AppellSystem::typeset().r1 == doctest::Approx(9.0 / 5));
}

TEST_CASE("Appell residual step guards") {
  CHECK_THROWS_AS(appell_residual(AppellSystem::from_exponents(), 0.3, 0.6, 1e-8), InvalidInput);
  CHECK_THROWS_AS(appell_residual(AppellSystem::from_exponents(), 0.3, 0.6, 0.1), InvalidInput);
}

TEST_CASE("Gauss periods satisfy the exponent-derived equations") {
  using namespace degenerate;
  using V2 = Eigen::Matrix<cplx, 2, 1>;
  struct Jet {
    V2 u, du, d2u;
  };
  const double t = 3.0, h = 1e-3;
  const auto jet = [&](const std::function<V2(double)>& f) {
    const V2 m2 = f(t - 2 * h), m1 = f(t - h), z = f(t), p1 = f(t + h), p2 = f(t + 2 * h);
    return Jet{z, (m2 - 8.0 * m1 + 8.0 * p1 - p2) / (12 * h), (-m2 + 16.0 * m1 - 30.0 * z + 16.0 * p1 - p2) / (12 * h * h)};
  };
  const auto residual = [&](const GaussSystem& s, const Jet& j, int k) {
    const double scale = std::abs(t * (1 - t) * j.d2u(k)) + std::abs(j.du(k)) + std::abs(j.u(k));
    return std::abs(gauss_operator(s, t, j.u(k), j.du(k), j.d2u(k))) / scale;
  };
  const Jet plain = jet([](double x) { return V2(periods_real(x)); });
  const Jet scaled = jet([](double x) { return V2(std::pow(x, 0.2) * periods_real(x)); });
  for (int k = 0; k < 2; ++k) {
    CHECK(residual(GaussSystem::from_exponents(), plain, k) < 1e-8);
    CHECK(residual(GaussSystem::rescaled(), scaled, k) < 1e-8);
    CHECK(residual(GaussSystem::typeset(), scaled, k) > 1e-3);
    CHECK(residual(GaussSystem::typeset(), plain, k) > 1e-3);
  }
}

TEST_CASE("continuation agrees with quadrature and is path independent away from 0 and 1") {
  using namespace degenerate;
  const auto direct = periods_real(3.0);
  const auto up = periods_continued(3.0);
  ContinuationSettings low;
  low.waypoints = default_waypoints(3.0, low.t0, true);
  const auto down = periods_continued(3.0, low);
  CHECK((up - direct).norm() < 1e-8 * direct.norm());
  CHECK((down - direct).norm() < 1e-8 * direct.norm());
  CHECK_THROWS_AS(periods_real(0.5), InvalidInput);
}
