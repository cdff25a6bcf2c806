#include "pentaperiod/ball.hpp"

#include <cmath>
#include <stdexcept>

#include "pentaperiod/errors.hpp"

namespace pentaperiod {

namespace {

CycNum z(long long k) { return CycNum::zeta_pow(k); }

}  // namespace

CycMatrix3 DiagonalForm::matrix() const {
  CycMatrix3 m;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m(i, j) = i == j ? diag[static_cast<std::size_t>(i)] : CycNum(0);
  return m;
}

Vector3c DiagonalForm::embedded() const {
  return Vector3c(diag[0].embed(), diag[1].embed(), diag[2].embed());
}

const DiagonalForm& form_A() {
  static const DiagonalForm a{{CycNum(1), CycNum(1), CycNum(1) + z(2) + z(3)}};
  return a;
}

const DiagonalForm& form_H() {
  static const DiagonalForm h{{CycNum(1), CycNum(1), -(z(3) * (CycNum(1) + z(1)))}};
  return h;
}

double a_norm(const BallPoint& eta) { return a_inner(eta.v, eta.v).real(); }

cplx a_inner(const Vector3c& x, const Vector3c& y) {
  static const Vector3c a = form_A().embedded();
  cplx s = 0.0;
  for (int i = 0; i < 3; ++i) s += std::conj(x(i)) * a(i) * y(i);
  return s;
}

cplx h_pairing(const BallPoint& eta) {
  static const Vector3c h = form_H().embedded();
  cplx s = 0.0;
  for (int i = 0; i < 3; ++i) s += eta.v(i) * h(i) * eta.v(i);
  return s;
}

bool is_in_ball(const BallPoint& eta) {
  if (eta.v.squaredNorm() == 0.0) throw InvalidInput("is_in_ball: zero vector");
  return a_norm(eta) < 0.0;
}

BallPoint normalized(const BallPoint& eta) {
  Eigen::Index k = 0;
  eta.v.cwiseAbs().maxCoeff(&k);
  return BallPoint(eta.v / eta.v(k));
}

double projective_distance(const Vector3c& x, const Vector3c& y) {
  Vector3c u = x.normalized(), w = y.normalized();
  cplx ip = w.dot(u);
  if (std::abs(ip) > 0.0) w *= ip / std::abs(ip);
  return (u - w).norm();
}

CycNum a_inner_exact(const RootVector& x, const RootVector& y) {
  const auto& a = form_A().diag;
  CycNum s(0);
  for (int i = 0; i < 3; ++i) s += x(i).conj() * a[static_cast<std::size_t>(i)] * y(i);
  return s;
}

bool is_unitary(const GroupElement& g) {
  CycMatrix3 a = form_A().matrix();
  return equal(matmul(matmul(conj_transpose(g), a), g), a);
}

namespace {

GroupElement reflection(const RootVector& alpha, const CycNum& factor) {
  CycNum n = a_inner_exact(alpha, alpha);
  if (n.is_zero()) throw InvalidInput("reflection: isotropic root");
  const auto& a = form_A().diag;
  CycNum c = factor / n;
  GroupElement m = identity3();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      m(i, j) -= c * alpha(i) * alpha(j).conj() * a[static_cast<std::size_t>(j)];
  return m;
}

}  // namespace

GroupElement reflection_T(const RootVector& alpha) { return reflection(alpha, CycNum(1) + z(3)); }

GroupElement reflection_R(const RootVector& beta) { return reflection(beta, CycNum(1) - z(1)); }

RootVector make_root(const CycNum& x, const CycNum& y, const CycNum& w) {
  RootVector r;
  r << x, y, w;
  return r;
}

const DirectRoots& direct_roots() {
  static const DirectRoots r{
      make_root(1, 0, 0),
      make_root(z(3), 1, -(CycNum(1) + z(1))),
      make_root(0, 1, 0),
      make_root(0, 1, z(3)),
      make_root(1, -1, CycNum(1) + z(1)),
      make_root(1, z(3), CycNum(1) + z(1)),
  };
  return r;
}

const Generators& generators() {
  static const Generators g = [] {
    const auto& r = direct_roots();
    return Generators{reflection_T(r.a12), reflection_T(r.a23), reflection_T(r.a34),
                      reflection_T(r.a45)};
  }();
  return g;
}

const HGenerators& h_generators() {
  static const HGenerators h = [] {
    const auto& g = generators();
    GroupElement g12sq = matmul(g.g12, g.g12);
    GroupElement c = matmul(g.g23, g.g34);
    return HGenerators{
        g12sq,
        matmul(g.g23, g.g23),
        matmul(g.g34, g.g34),
        matmul(matmul(inverse(g.g23), g12sq), g.g23),
        matmul(matmul(inverse(c), g12sq), c),
    };
  }();
  return h;
}

Pair::Pair(int a, int b) {
  if (a > b) std::swap(a, b);
  if (a < 1 || b > 5 || a == b) throw InvalidInput("invalid pair " + std::to_string(a) + std::to_string(b));
  i = a;
  j = b;
}

std::string Pair::str() const { return std::to_string(i) + std::to_string(j); }

const std::array<Pair, 10>& all_pairs() {
  static const std::array<Pair, 10> p{Pair(1, 2), Pair(1, 3), Pair(1, 4), Pair(1, 5), Pair(2, 3),
                                      Pair(2, 4), Pair(2, 5), Pair(3, 4), Pair(3, 5), Pair(4, 5)};
  return p;
}

RootVector mirror_root(Pair p) {
  const auto& r = direct_roots();
  const auto& g = generators();
  const int key = 10 * p.i + p.j;
  switch (key) {
    case 12: return r.a12;
    case 23: return r.a23;
    case 34: return r.a34;
    case 45: return r.a45;
    case 13: return r.b13;
    case 14: return r.b14;
    case 24: return matmul(g.g34, r.a23);
    case 35: return matmul(g.g45, r.a34);
    case 15: return matmul(g.g45, r.b14);
    case 25: return matmul(g.g45, matmul(g.g34, r.a23));
    default: break;
  }
  throw InvalidInput("mirror_root: invalid pair");
}

Vector3c apply(const GroupElement& g, const Vector3c& eta) {
  Eigen::Matrix3cd m = embed(g);
  return m * eta;
}

BallPoint apply(const GroupElement& g, const BallPoint& eta) { return BallPoint(apply(g, eta.v)); }

cplx F_g(const GroupElement& g, const BallPoint& eta) {
  cplx den = h_pairing(eta);
  if (std::abs(den) <= 1e-14 * eta.v.squaredNorm()) throw NumericFailure("F_g: H-isotropic point");
  return h_pairing(apply(g, eta)) / den;
}

int exact_order(const GroupElement& g, int limit) {
  GroupElement p = g;
  const GroupElement id = identity3();
  for (int n = 1; n <= limit; ++n) {
    if (equal(p, id)) return n;
    p = matmul(p, g);
  }
  return 0;
}

}  // namespace pentaperiod
