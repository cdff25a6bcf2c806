#include "pentaperiod/periods.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <Eigen/LU>

#include "pentaperiod/errors.hpp"
#include "pentaperiod/quadrature.hpp"

namespace pentaperiod {

namespace {

constexpr double kPi = std::numbers::pi;

cplx zpow(int k) { return std::polar(1.0, 2.0 * kPi * k / 5.0); }

double config_scale(const Configuration& lam) {
  double s = 0.0;
  for (int k = 0; k < 5; ++k)
    if (lam.is_finite(k)) s = std::max(s, std::abs(lam.value(k)));
  return std::max(s, 1.0);
}

/// Bernstein ellipse parameter of w with respect to [−1, 1].
double bernstein_rho(cplx w) {
  cplx r = w + std::sqrt(w - 1.0) * std::sqrt(w + 1.0);
  return std::max(std::abs(r), 1.0 / std::max(std::abs(r), 1e-300));
}

struct Piece {
  double u0, u1;
};

struct SegmentProblem {
  cplx A, B;
  double beta = 0.0, alpha = 0.0;  // exponents at s = −1 and s = +1
  cplx log_const = 0.0;
  double ef = 0.0;  // e/5
  int p = 0;
  std::vector<cplx> others;  // non-coincident finite branch points
};

void refine(const std::vector<cplx>& sing, double rho_min, Piece pc,
            int depth, std::vector<Piece>& out) {
  const double c = 0.5 * (pc.u0 + pc.u1), h = 0.5 * (pc.u1 - pc.u0);
  bool ok = true;
  for (const cplx& s : sing) {
    // endpoints touching the piece are handled by the Jacobi weight
    if (std::abs(s - cplx(pc.u0)) == 0.0 || std::abs(s - cplx(pc.u1)) == 0.0) continue;
    if (bernstein_rho((s - c) / h) < rho_min) {
      ok = false;
      break;
    }
  }
  if (ok || depth > 60) {
    out.push_back(pc);
    return;
  }
  refine(sing, rho_min, {pc.u0, c}, depth + 1, out);
  refine(sing, rho_min, {c, pc.u1}, depth + 1, out);
}

cplx integrate(const SegmentProblem& sp, const QuadratureSettings& q) {
  const cplx half = 0.5 * (sp.B - sp.A);
  std::vector<cplx> sing;
  for (const cplx& l : sp.others) sing.push_back((l - sp.A) / half - 1.0);
  if (sp.beta != 0.0) sing.emplace_back(-1.0);
  if (sp.alpha != 0.0) sing.emplace_back(1.0);
  std::vector<Piece> pieces;
  refine(sing, q.grading_rho, {-1.0, 1.0}, 0, pieces);

  cplx total = 0.0;
  for (const Piece& pc : pieces) {
    const bool left = pc.u0 == -1.0, right = pc.u1 == 1.0;
    const double c = 0.5 * (pc.u0 + pc.u1), h = 0.5 * (pc.u1 - pc.u0);
    const double a_w = right ? sp.alpha : 0.0, b_w = left ? sp.beta : 0.0;
    auto rule = gauss_jacobi(q.nodes, a_w, b_w);
    cplx acc = 0.0;
    for (std::size_t k = 0; k < rule->nodes.size(); ++k) {
      const double r = rule->nodes[k];
      const double s = c + h * r;
      const cplx z = sp.A + half * (1.0 + s);
      cplx lg = sp.log_const;
      lg += sp.beta * (left ? std::log(h * 0.5) : std::log(0.5 * (1.0 + s)));
      lg += sp.alpha * (right ? std::log(h * 0.5) : std::log(0.5 * (1.0 - s)));
      for (const cplx& l : sp.others) lg -= sp.ef * cut_log(z - l);
      cplx v = std::exp(lg);
      for (int j = 0; j < sp.p; ++j) v *= z;
      acc += rule->weights[k] * v;
    }
    total += h * acc;
  }
  return half * total;
}

/// True if the open segment A→B meets the downward vertical ray below l.
bool crosses_cut(cplx A, cplx B, cplx l) {
  const double dx = B.real() - A.real();
  if (dx == 0.0) return false;
  const double s = (l.real() - A.real()) / dx;
  if (s <= 0.0 || s >= 1.0) return false;
  const double y = A.imag() + s * (B.imag() - A.imag());
  return y < l.imag();
}

}  // namespace

Configuration Configuration::finite(const std::array<cplx, 5>& lambda) {
  Configuration c;
  for (std::size_t k = 0; k < 5; ++k) {
    c.a[k] = 1.0;
    c.b[k] = lambda[k];
  }
  return c;
}

Configuration Configuration::reference() { return finite({0.0, 1.0, 2.0, 3.0, 4.0}); }

bool Configuration::is_finite(int i) const {
  const auto k = static_cast<std::size_t>(i);
  return std::abs(a[k]) > 1e-300 * std::abs(b[k]);
}

cplx Configuration::value(int i) const {
  const auto k = static_cast<std::size_t>(i);
  if (!is_finite(i)) throw InvalidInput("point " + std::to_string(i + 1) + " is at infinity");
  return b[k] / a[k];
}

std::array<cplx, 5> Configuration::values() const {
  std::array<cplx, 5> v;
  for (int k = 0; k < 5; ++k) v[static_cast<std::size_t>(k)] = value(k);
  return v;
}

void Configuration::require_distinct(double tol) const {
  for (std::size_t i = 0; i < 5; ++i) {
    const double ni = std::hypot(std::abs(a[i]), std::abs(b[i]));
    if (ni == 0.0) throw InvalidInput("point " + std::to_string(i + 1) + " is [0:0]");
    for (std::size_t j = i + 1; j < 5; ++j) {
      const double nj = std::hypot(std::abs(a[j]), std::abs(b[j]));
      const double d = std::abs(a[j] * b[i] - a[i] * b[j]) / (ni * nj);
      if (d <= tol)
        throw InvalidInput("colliding points: lambda" + std::to_string(i + 1) + " = lambda" +
                           std::to_string(j + 1));
    }
  }
}

const std::array<FormExponent, 6>& forms() {
  static const std::array<FormExponent, 6> f{{{1, 2, 0}, {2, 3, 0}, {3, 3, 1}, {4, 4, 0}, {5, 4, 1}, {6, 4, 2}}};
  return f;
}

cplx cut_log(cplx u) {
  double arg = std::arg(u);
  if (arg <= -kPi / 2) arg += 2.0 * kPi;
  return {std::log(std::abs(u)), arg};
}

cplx segment_integral(const Configuration& lam, int i, int j, const FormExponent& f,
                      const QuadratureSettings& q) {
  const cplx A = lam.value(i), B = lam.value(j);
  const double scale = config_scale(lam);
  const double tol_c = 1e-12 * scale;
  if (std::abs(B - A) <= tol_c) return 0.0;

  SegmentProblem sp;
  sp.A = A;
  sp.B = B;
  sp.ef = f.e / 5.0;
  sp.p = f.p;
  int mA = 0, mB = 0;
  for (int k = 0; k < 5; ++k) {
    if (!lam.is_finite(k)) continue;
    const cplx l = lam.value(k);
    if (std::abs(l - A) <= tol_c) {
      ++mA;
    } else if (std::abs(l - B) <= tol_c) {
      ++mB;
    } else {
      // distance from the segment
      const cplx d = B - A;
      const double s = std::clamp(((l - A) * std::conj(d)).real() / std::norm(d), 0.0, 1.0);
      if (std::abs(A + s * d - l) < 1e-8 * scale)
        throw InvalidInput("segment passes within 1e-8 of lambda" + std::to_string(k + 1));
      if (crosses_cut(A, B, l))
        throw InvalidInput("segment crosses the cut below lambda" + std::to_string(k + 1));
      sp.others.push_back(l);
    }
  }
  sp.beta = -sp.ef * mA;
  sp.alpha = -sp.ef * mB;
  if (sp.beta <= -1.0 || sp.alpha <= -1.0)
    throw NumericFailure("segment_integral: non-integrable endpoint for form " + std::to_string(f.m));
  sp.log_const = sp.beta * cut_log(B - A) + sp.alpha * cut_log(A - B);
  return integrate(sp, q);
}

cplx arc_integral(const Configuration& lam, int i, int j, const FormExponent& f,
                  const QuadratureSettings& q) {
  if (i == j) return 0.0;
  const int step = i < j ? 1 : -1;
  cplx s = 0.0;
  for (int k = i; k != j; k += step) {
    if (step > 0) s += segment_integral(lam, k, k + 1, f, q);
    else s -= segment_integral(lam, k - 1, k, f, q);
  }
  return s;
}

cplx sheet_arc(const Configuration& lam, int k, int i, int j, const FormExponent& f,
               const QuadratureSettings& q) {
  return zpow(-k * f.e) * arc_integral(lam, i, j, f, q);
}

Chain gamma1() { return {{1, 0, 1}, {2, 1, 0}}; }
Chain gamma2() { return {{1, 2, 3}, {2, 3, 2}}; }
Chain gamma3() { return {{1, 0, 2}, {2, 2, 3}, {3, 3, 1}, {2, 1, 0}}; }

cplx chain_integral(const Configuration& lam, const Chain& c, const FormExponent& f,
                    const QuadratureSettings& q) {
  cplx s = 0.0;
  for (const ArcPiece& p : c) s += sheet_arc(lam, p.sheet, p.from, p.to, f, q);
  return s;
}

Vector6c chain_integrals(const Configuration& lam, const Chain& c, const QuadratureSettings& q) {
  Vector6c v;
  for (int m = 0; m < 6; ++m) v(m) = chain_integral(lam, c, forms()[static_cast<std::size_t>(m)], q);
  return v;
}

GammaPeriods gamma_periods(const Configuration& lam, const QuadratureSettings& q) {
  lam.require_distinct();
  return {chain_integrals(lam, gamma1(), q), chain_integrals(lam, gamma2(), q),
          chain_integrals(lam, gamma3(), q)};
}

Vector6c R_diagonal() {
  Vector6c r;
  r << zpow(3), zpow(2), zpow(2), zpow(1), zpow(1), zpow(1);
  return r;
}

PeriodAssembly assemble_Pi(const Vector6c& a, const Vector6c& b, const Vector6c& c) {
  const Vector6c r = R_diagonal();
  auto mul = [](const Vector6c& d, const Vector6c& v) -> Vector6c { return d.cwiseProduct(v); };
  PeriodAssembly p;
  p.a = a;
  p.b = b;
  p.c = c;
  const Vector6c R1 = r, R2 = mul(r, r), R3 = mul(R2, r), R4 = mul(R3, r);
  p.Pi.col(0) = a;
  p.Pi.col(1) = b;
  p.Pi.col(2) = c;
  p.Pi.col(3) = mul(R2, a);
  p.Pi.col(4) = mul(R2, b);
  p.Pi.col(5) = mul(R4, c);
  p.Pi.col(6) = mul(R1 + R3, a);
  p.Pi.col(7) = mul(R1 + R3, b);
  p.Pi.col(8) = mul(R1 + R2, c);
  p.Pi.col(9) = mul(R3, a);
  p.Pi.col(10) = mul(R3, b);
  p.Pi.col(11) = mul(R1, c);
  p.Z1 = p.Pi.leftCols<6>();
  p.Z2 = p.Pi.rightCols<6>();
  Eigen::PartialPivLU<Matrix6c> lu(p.Z1);
  if (!(std::abs(lu.determinant()) > 0.0)) throw NumericFailure("assemble_Pi: singular Z1");
  p.Omega = lu.solve(p.Z2);
  return p;
}

PeriodAssembly period_assembly(const Configuration& lam, const QuadratureSettings& q) {
  GammaPeriods g = gamma_periods(lam, q);
  return assemble_Pi(g.a, g.b, g.c);
}

double riemann_residual(const PeriodAssembly& p) {
  Eigen::Matrix<cplx, 12, 12> J = Eigen::Matrix<cplx, 12, 12>::Zero();
  J.topRightCorner<6, 6>().setIdentity();
  J.bottomLeftCorner<6, 6>() = -Matrix6c::Identity();
  const double s = p.Pi.cwiseAbs().maxCoeff();
  return (p.Pi * J * p.Pi.transpose()).cwiseAbs().maxCoeff() / (s * s);
}

BallPoint schwarz_map(const Configuration& lam, const QuadratureSettings& q) {
  const FormExponent& f = forms()[0];
  return BallPoint(chain_integral(lam, gamma1(), f, q), chain_integral(lam, gamma2(), f, q),
                   chain_integral(lam, gamma3(), f, q));
}

TorsionResult characteristic_of_vector(const Vector6c& v, const Matrix6c& omega, double max_residual) {
  const Eigen::Matrix<double, 6, 6> X = omega.real(), Y = omega.imag();
  const Eigen::Matrix<double, 6, 1> a = Y.partialPivLu().solve(v.imag()).eval();
  const Eigen::Matrix<double, 6, 1> b = v.real() - X * a;
  TorsionResult r;
  double res = 0.0;
  for (int k = 0; k < 6; ++k) {
    const double ra = std::round(10.0 * a(k)), rb = std::round(10.0 * b(k));
    res = std::max({res, std::abs(a(k) - ra / 10.0), std::abs(b(k) - rb / 10.0)});
    r.ch.a_num(k) = static_cast<long long>(ra);
    r.ch.b_num(k) = static_cast<long long>(rb);
  }
  r.ch = r.ch.reduced();
  r.residual = res;
  if (res > max_residual)
    throw NumericFailure("characteristic_of_vector: not a 10-torsion point at this precision (residual " +
                         std::to_string(res) + ")");
  return r;
}

Vector6c normalized_arc_integral(const Configuration& lam, const Chain& c, const PeriodAssembly& p,
                                 const QuadratureSettings& q) {
  return p.Z1.partialPivLu().solve(chain_integrals(lam, c, q));
}

AppellSystem AppellSystem::typeset() {
  return {6.0 / 5, 11.0 / 5, 3.0 / 5, 9.0 / 5, 2.0, 2.0 / 5, 6.0 / 5};
}

AppellSystem AppellSystem::from_exponents() {
  return {6.0 / 5, 2.0, 2.0 / 5, 6.0 / 25, 2.0, 2.0 / 5, 6.0 / 25};
}

std::array<cplx, 2> appell_operator(const AppellSystem& s, cplx x, cplx y, const Jet2& j, bool scaled) {
  const cplx t1[5] = {x * (1.0 - x) * j.uxx, y * (1.0 - x) * j.uxy, (s.c - s.p1 * x) * j.ux,
                      -s.q1 * y * j.uy, -s.r1 * j.u};
  const cplx t2[5] = {y * (1.0 - y) * j.uyy, x * (1.0 - y) * j.uxy, (s.c - s.p2 * y) * j.uy,
                      -s.q2 * x * j.ux, -s.r2 * j.u};
  std::array<cplx, 2> out{};
  double m1 = 0.0, m2 = 0.0;
  for (int k = 0; k < 5; ++k) {
    out[0] += t1[k];
    out[1] += t2[k];
    m1 += std::abs(t1[k]);
    m2 += std::abs(t2[k]);
  }
  if (scaled) {
    if (m1 > 0.0) out[0] /= m1;
    if (m2 > 0.0) out[1] /= m2;
  }
  return out;
}

Eigen::Matrix<cplx, 3, 1> appell_periods(cplx x, cplx y, const QuadratureSettings& q) {
  Configuration c;
  c.a = {1.0, 1.0, 1.0, 1.0, 0.0};
  c.b = {0.0, x, y, 1.0, 1.0};
  c.require_distinct();
  BallPoint e = schwarz_map(c, q);
  return e.v;
}

AppellResidual appell_residual(const AppellSystem& s, cplx x, cplx y, double h, const QuadratureSettings& q) {
  if (!(h > 1e-6)) throw InvalidInput("appell_residual: step too small, cancellation dominates");
  if (h > 0.05) throw InvalidInput("appell_residual: step too large, discretization dominates");
  using V3 = Eigen::Matrix<cplx, 3, 1>;
  auto f = [&](int i, int j) -> V3 { return appell_periods(x + double(i) * h, y + double(j) * h, q); };
  // first-derivative stencil (−2,−1,1,2)/12h and second-derivative stencil (−1,16,−30,16,−1)/12h²
  const int off[4] = {-2, -1, 1, 2};
  const double d1[4] = {1.0, -8.0, 8.0, -1.0};
  std::array<std::array<V3, 5>, 5> g;
  for (int i = -2; i <= 2; ++i)
    for (int j = -2; j <= 2; ++j)
      g[std::size_t(i + 2)][std::size_t(j + 2)] = f(i, j);
  auto at = [&](int i, int j) -> const V3& { return g[std::size_t(i + 2)][std::size_t(j + 2)]; };
  const V3 u = at(0, 0);
  const V3 ux = (at(-2, 0) - 8.0 * at(-1, 0) + 8.0 * at(1, 0) - at(2, 0)) / (12.0 * h);
  const V3 uy = (at(0, -2) - 8.0 * at(0, -1) + 8.0 * at(0, 1) - at(0, 2)) / (12.0 * h);
  const V3 uxx = (-at(-2, 0) + 16.0 * at(-1, 0) - 30.0 * u + 16.0 * at(1, 0) - at(2, 0)) / (12.0 * h * h);
  const V3 uyy = (-at(0, -2) + 16.0 * at(0, -1) - 30.0 * u + 16.0 * at(0, 1) - at(0, 2)) / (12.0 * h * h);
  V3 uxy = V3::Zero();
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) uxy += d1[a] * d1[b] * at(off[a], off[b]);
  uxy /= 144.0 * h * h;

  AppellResidual r;
  for (int k = 0; k < 3; ++k) {
    Jet2 j{uxx(k), uxy(k), uyy(k), ux(k), uy(k), u(k)};
    auto res = appell_operator(s, x, y, j, true);
    r.per_eta[std::size_t(k)] = {std::abs(res[0]), std::abs(res[1])};
    r.max_scaled = std::max({r.max_scaled, std::abs(res[0]), std::abs(res[1])});
  }
  return r;
}

namespace degenerate {

GaussSystem GaussSystem::typeset() { return {4.0 / 5, 8.0 / 5, 2.0 / 5}; }
GaussSystem GaussSystem::from_exponents() { return {6.0 / 5, 2.0, 6.0 / 25}; }
GaussSystem GaussSystem::rescaled() { return {4.0 / 5, 8.0 / 5, 2.0 / 25}; }

cplx gauss_operator(const GaussSystem& s, cplx t, cplx u, cplx du, cplx d2u) {
  return t * (1.0 - t) * d2u + (s.c - s.p * t) * du - s.r * u;
}

namespace {

using V2 = Eigen::Matrix<cplx, 2, 1>;

V2 periods_at(cplx t, const QuadratureSettings& q) {
  Configuration c;
  c.a = {1.0, 1.0, 1.0, 1.0, 0.0};
  c.b = {0.0, 0.0, 1.0, t, 1.0};
  BallPoint e = schwarz_map(c, q);
  return V2(e.v(1), e.v(2));
}

}  // namespace

V2 periods_real(double t, const QuadratureSettings& q) {
  if (!(t > 1.0)) throw InvalidInput("periods_real: requires t > 1");
  return periods_at(t, q);
}

std::vector<cplx> default_waypoints(cplx t, double t0, bool lower) {
  const double s = lower ? -1.0 : 1.0;
  return {cplx(t0, s), cplx(t.real(), s)};
}

V2 periods_continued(cplx t, const ContinuationSettings& cs, const QuadratureSettings& q) {
  const GaussSystem gs = GaussSystem::from_exponents();
  const double t0 = cs.t0;
  const double h = 2e-3;
  const V2 u0 = periods_real(t0, q);
  const V2 du0 = (periods_real(t0 - 2 * h, q) - 8.0 * periods_real(t0 - h, q) +
                  8.0 * periods_real(t0 + h, q) - periods_real(t0 + 2 * h, q)) /
                 (12.0 * h);
  std::vector<cplx> path{cplx(t0)};
  const std::vector<cplx> wp = cs.waypoints.empty() ? default_waypoints(t, t0) : cs.waypoints;
  path.insert(path.end(), wp.begin(), wp.end());
  path.push_back(t);

  // state (u, u') for both periods; u'' from the Gauss equation
  Eigen::Matrix<cplx, 2, 2> y;
  y.col(0) = u0;
  y.col(1) = du0;
  auto rhs = [&](cplx tt, const Eigen::Matrix<cplx, 2, 2>& s, cplx dir) {
    Eigen::Matrix<cplx, 2, 2> d;
    const cplx den = tt * (1.0 - tt);
    if (std::abs(den) < 1e-10) throw NumericFailure("periods_continued: path hits a singular point");
    d.col(0) = s.col(1) * dir;
    d.col(1) = (-(gs.c - gs.p * tt) * s.col(1) + gs.r * s.col(0)) / den * dir;
    return d;
  };
  for (std::size_t k = 0; k + 1 < path.size(); ++k) {
    const cplx a = path[k], b = path[k + 1];
    const double len = std::abs(b - a);
    if (len == 0.0) continue;
    const int n = std::max(1, static_cast<int>(std::ceil(len / cs.step)));
    const cplx dir = (b - a);
    const double ds = 1.0 / n;
    for (int i = 0; i < n; ++i) {
      const cplx tt = a + dir * (i * ds);
      auto k1 = rhs(tt, y, dir);
      auto k2 = rhs(tt + dir * (0.5 * ds), y + 0.5 * ds * k1, dir);
      auto k3 = rhs(tt + dir * (0.5 * ds), y + 0.5 * ds * k2, dir);
      auto k4 = rhs(tt + dir * ds, y + ds * k3, dir);
      y += (ds / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    }
  }
  return y.col(0);
}

}  // namespace degenerate

}  // namespace pentaperiod
