#include "pentaperiod/thetas.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include <Eigen/Cholesky>
#include <Eigen/LU>
#include <boost/math/special_functions/binomial.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include "pentaperiod/errors.hpp"

namespace pentaperiod {

namespace {

constexpr double kPi = std::numbers::pi;

cplx zpow(int k) { return std::polar(1.0, 2.0 * kPi * k / 5.0); }

/// Upper factor U with ᵗUU = Y.
Eigen::MatrixXd upper_factor(const Eigen::MatrixXd& y) {
  Eigen::LLT<Eigen::MatrixXd> llt(y);
  if (llt.info() != Eigen::Success) throw NumericFailure("Im(Omega) is not positive definite");
  return llt.matrixU();
}

/// Calls visit(n) for every n ∈ Zᵍ with ‖U(n − c)‖² ≤ r2, last coordinate outermost.
template <typename Visit>
void enumerate_ellipsoid(const Eigen::MatrixXd& U, const Eigen::VectorXd& c, double r2, Visit&& visit) {
  const int g = static_cast<int>(U.rows());
  Eigen::VectorXd n(g);
  std::vector<double> partial(static_cast<std::size_t>(g + 1), 0.0);
  // recursion on coordinate i given n_{i+1..g-1}
  auto rec = [&](auto&& self, int i) -> void {
    if (i < 0) {
      visit(n);
      return;
    }
    double shift = 0.0;
    for (int j = i + 1; j < g; ++j) shift += U(i, j) * (n(j) - c(j));
    const double center = c(i) - shift / U(i, i);
    const double rem = r2 - partial[static_cast<std::size_t>(i + 1)];
    if (rem < 0.0) return;
    const double w = std::sqrt(rem) / U(i, i);
    const long long lo = static_cast<long long>(std::ceil(center - w));
    const long long hi = static_cast<long long>(std::floor(center + w));
    for (long long k = lo; k <= hi; ++k) {
      n(i) = static_cast<double>(k);
      const double t = U(i, i) * (n(i) - c(i)) + shift;
      partial[static_cast<std::size_t>(i)] = partial[static_cast<std::size_t>(i + 1)] + t * t;
      if (partial[static_cast<std::size_t>(i)] <= r2) self(self, i - 1);
    }
  };
  rec(rec, g - 1);
}

cplx pairwise_sum(const std::vector<cplx>& v, std::size_t lo, std::size_t hi) {
  if (hi - lo <= 16) {
    cplx s = 0.0;
    for (std::size_t k = lo; k < hi; ++k) s += v[k];
    return s;
  }
  const std::size_t mid = lo + (hi - lo) / 2;
  return pairwise_sum(v, lo, mid) + pairwise_sum(v, mid, hi);
}

}  // namespace

SiegelPoint::SiegelPoint(MatrixXc m) : omega(std::move(m)) {}

double SiegelPoint::asymmetry() const { return (omega - omega.transpose()).cwiseAbs().maxCoeff(); }

bool SiegelPoint::imaginary_part_positive() const {
  Eigen::LLT<Eigen::MatrixXd> llt(omega.imag());
  return llt.info() == Eigen::Success;
}

void SiegelPoint::validate(double tol) const {
  if (omega.rows() != omega.cols() || omega.rows() == 0) throw NumericFailure("SiegelPoint: not square");
  if (asymmetry() > tol * std::max(1.0, omega.cwiseAbs().maxCoeff()))
    throw NumericFailure("SiegelPoint: not symmetric");
  if (!imaginary_part_positive()) throw NumericFailure("SiegelPoint: Im(Omega) not positive definite");
}

RealCharacteristic RealCharacteristic::from(const Characteristic& c) { return {c.a(), c.b()}; }

double lattice_tail_bound(int g, double rho, double R) {
  // At most (2r/ρ + 1)^g points lie within radius r, so the tail is bounded by
  // ∫_R^∞ (2r/ρ+1)^g 2r e^{−r²} dr = Σ_k C(g,k)(2/ρ)^k Γ(k/2+1, R²).
  double s = 0.0;
  for (int k = 0; k <= g; ++k)
    s += boost::math::binomial_coefficient<double>(static_cast<unsigned>(g), static_cast<unsigned>(k)) *
         std::pow(2.0 / rho, k) * boost::math::tgamma(k / 2.0 + 1.0, R * R);
  return s;
}

double shortest_vector(const SiegelPoint& omega) {
  const Eigen::MatrixXd U = std::sqrt(kPi) * upper_factor(omega.omega.imag());
  const int g = static_cast<int>(U.rows());
  double best2 = U.colwise().squaredNorm().minCoeff();
  const Eigen::VectorXd c = Eigen::VectorXd::Zero(g);
  enumerate_ellipsoid(U, c, best2 * (1.0 + 1e-12), [&](const Eigen::VectorXd& n) {
    if (n.cwiseAbs().maxCoeff() == 0.0) return;
    best2 = std::min(best2, (U * n).squaredNorm());
  });
  return std::sqrt(best2);
}

ThetaResult theta(const VectorXc& z, const SiegelPoint& omega, const RealCharacteristic& ch,
                  const TruncationPolicy& pol) {
  const int g = static_cast<int>(omega.genus());
  if (z.size() != g || ch.a.size() != g || ch.b.size() != g) throw InvalidInput("theta: dimension mismatch");
  if (!(pol.tol > 0.0)) throw InvalidInput("theta: tolerance must be positive");
  const Eigen::MatrixXd Y = omega.omega.imag();
  const Eigen::MatrixXd U = upper_factor(Y);
  const Eigen::VectorXd yz = z.imag();
  const Eigen::VectorXd x0 = Y.llt().solve(yz);
  // |term| = exp(−π‖U(n − c)‖² + π yᵗY⁻¹y) with c = −a − Y⁻¹ Im z
  const double growth = std::exp(kPi * yz.dot(x0));
  const Eigen::VectorXd c = -ch.a - x0;
  const double rho = shortest_vector(omega);

  double R = std::sqrt(std::max(0.0, std::log(growth / pol.tol)));
  double bound = growth * lattice_tail_bound(g, rho, R);
  while (bound > pol.tol) {
    R += 0.05;
    if (R > pol.max_radius)
      throw NumericFailure("theta: tolerance unreachable within max radius");
    bound = growth * lattice_tail_bound(g, rho, R);
  }

  const MatrixXc& W = omega.omega;
  const VectorXc zb = z + ch.b.cast<cplx>();
  std::vector<cplx> terms;
  enumerate_ellipsoid(U, c, R * R / kPi, [&](const Eigen::VectorXd& n) {
    const Eigen::VectorXd x = n + ch.a;
    const VectorXc xc = x.cast<cplx>();
    const cplx q = xc.dot(W * xc);  // dot conjugates its left argument, which is real
    const cplx lin = xc.dot(zb);
    terms.push_back(std::exp(cplx(0.0, kPi) * q + cplx(0.0, 2.0 * kPi) * lin));
  });
  ThetaResult r;
  r.value = terms.empty() ? cplx(0.0) : pairwise_sum(terms, 0, terms.size());
  r.tail_bound = bound;
  r.lattice_points = static_cast<long long>(terms.size());
  r.radius = R;
  return r;
}

ThetaResult theta_constant(const SiegelPoint& omega, const RealCharacteristic& ch, const TruncationPolicy& pol) {
  return theta(VectorXc::Zero(omega.genus()), omega, ch, pol);
}

cplx delta_den(const BallPoint& eta) {
  const cplx z = zpow(1);
  const cplx e1 = eta[0], e2 = eta[1], e3 = eta[2];
  return e1 * e1 + e2 * e2 - zpow(3) * (1.0 + z) * e3 * e3;
}

SiegelPoint omega_of_eta(const BallPoint& eta) {
  const cplx z = zpow(1), z2 = zpow(2), z3 = zpow(3), z4 = zpow(4);
  const cplx e1 = eta[0], e2 = eta[1], e3 = eta[2];
  const cplx s1 = e1 * e1, s2 = e2 * e2, s3 = e3 * e3;
  const cplx D = delta_den(eta);
  if (std::abs(D) <= 1e-12 * eta.v.squaredNorm()) throw NumericFailure("omega_of_eta: degenerate denominator");
  MatrixXc O = MatrixXc::Zero(6, 6);
  auto set = [&](int i, int j, cplx v) {
    O(i - 1, j - 1) = v / D;
    O(j - 1, i - 1) = v / D;
  };
  set(1, 1, (z3 - 1.0) * (s1 + (1.0 + z3) * s2 + s3));
  set(4, 4, -z2 * (s1 + z2 * s2 - (1.0 + z) * s3));
  set(2, 2, (z3 - 1.0) * ((1.0 + z3) * s1 + s2 + s3));
  set(5, 5, -z2 * (z2 * s1 + s2 - (1.0 + z) * s3));
  set(3, 3, (z2 - 1.0) * (s1 + s2 - z3 * s3));
  set(6, 6, -z3 * (s1 + s2 - (1.0 + z4) * s3));
  set(1, 2, (z3 - z) * e1 * e2);
  set(4, 5, (z4 - z2) * e1 * e2);
  set(1, 5, (z4 - z) * e1 * e2);
  set(2, 4, (z4 - z) * e1 * e2);
  set(1, 3, (1.0 - z2) * e1 * e3);
  set(2, 3, (1.0 - z2) * e2 * e3);
  set(4, 6, (z4 - z) * e1 * e3);
  set(5, 6, (z4 - z) * e2 * e3);
  set(1, 6, (z3 - z) * e1 * e3);
  set(2, 6, (z3 - z) * e2 * e3);
  set(3, 4, (1.0 - z3) * e1 * e3);
  set(3, 5, (1.0 - z3) * e2 * e3);
  set(1, 4, z3 * ((1.0 + z) * s1 + (1.0 + z3) * s2 + s3));
  set(2, 5, z3 * ((1.0 + z3) * s1 + (1.0 + z) * s2 + s3));
  set(3, 6, (z + z2) * (s1 + s2 - z3 * (1.0 + z2) * s3));
  return SiegelPoint(O);
}

Eigen::Matrix<CycNum, 2, 2> tau0_exact() {
  Eigen::Matrix<CycNum, 2, 2> t;
  t(0, 0) = CycNum::zeta() - CycNum(1);
  t(0, 1) = t(1, 0) = CycNum::zeta() + CycNum::zeta_pow(3);
  t(1, 1) = -CycNum::zeta_pow(4);
  return t;
}

Eigen::Matrix<CycNum, 2, 2> tau0_typeset() {
  Eigen::Matrix<CycNum, 2, 2> t = tau0_exact();
  t(0, 1) = t(1, 0) = CycNum::zeta_pow(2) + CycNum::zeta_pow(3);
  return t;
}

SiegelPoint tau0() { return SiegelPoint(embed(tau0_exact())); }

ThetaResult theta_triple(const SiegelPoint& omega, const TripleChar& t, const TruncationPolicy& pol) {
  return theta_constant(omega, RealCharacteristic::from(t.expand()), pol);
}

ThetaResult theta_triple(const BallPoint& eta, const TripleChar& t, const TruncationPolicy& pol) {
  return theta_triple(omega_of_eta(eta), t, pol);
}

RealCharacteristic pair_characteristic(int a) {
  RealCharacteristic c;
  c.a = Eigen::Vector2d(a, a) / 10.0;
  c.b = Eigen::Vector2d(-2 * a, -a) / 10.0;
  return c;
}

RealCharacteristic quad_characteristic(int a2, int a3) {
  RealCharacteristic c;
  c.a = Eigen::Vector4d(a2, a3, a2, a3) / 10.0;
  c.b = Eigen::Vector4d(-2 * a2, -2 * a3, -a2, -a3) / 10.0;
  return c;
}

SiegelPoint complementary_block(const SiegelPoint& omega) {
  const int idx[4] = {1, 2, 4, 5};
  MatrixXc m(4, 4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) m(i, j) = omega.omega(idx[i], idx[j]);
  return SiegelPoint(m);
}

SplitProduct split_product(const BallPoint& eta, const TripleChar& t, const TruncationPolicy& pol) {
  if (std::abs(eta[0]) > 1e-14 * eta.v.norm()) throw InvalidInput("split_product: requires eta1 = 0");
  const SiegelPoint om = omega_of_eta(eta);
  return {theta_constant(tau0(), pair_characteristic(t.a1), pol),
          theta_constant(complementary_block(om), quad_characteristic(t.a2, t.a3), pol)};
}

}  // namespace pentaperiod
