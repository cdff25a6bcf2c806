#include "pentaperiod/symplectic.hpp"

#include <Eigen/LU>
#include <cmath>
#include <sstream>

#include "pentaperiod/errors.hpp"

namespace pentaperiod {

namespace {

using Rows = std::array<std::array<int, 12>, 12>;

Symp12 from_rows(const Rows& r) {
  Symp12 m;
  for (int i = 0; i < 12; ++i)
    for (int j = 0; j < 12; ++j) m(i, j) = r[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  return m;
}

constexpr Rows kSigma{{
    {-1, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0},
    {0, -1, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, -1, 0, 0, -1, 0, 0, -1},
    {-1, 0, 0, 0, 0, 0, -1, 0, 0, -1, 0, 0},
    {0, -1, 0, 0, 0, 0, 0, -1, 0, 0, -1, 0},
    {0, 0, 1, 0, 0, -1, 0, 0, 0, 0, 0, 0},
    {1, 0, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 1, 0, 0, -1, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0},
}};

constexpr Rows kG12{{
    {1, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0},
    {0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0, 0},
    {0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0},
    {-1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0},
    {0, 0, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1},
}};

constexpr Rows kG23{{
    {1, 1, 0, 1, -1, 1, 2, -1, -1, 1, -1, 1},
    {-1, 1, -1, -1, 1, 0, -2, 2, 0, -1, 1, -2},
    {1, -1, 2, 0, 0, -1, 0, -1, 1, 0, 0, 1},
    {0, 1, -1, 1, 0, 1, 1, 0, -1, 1, 0, 0},
    {0, 0, 0, -1, 1, -1, -1, 1, 0, -1, 1, -1},
    {1, 0, 1, 1, -1, 1, 2, -2, 0, 1, -1, 2},
    {-1, 0, -1, 0, 1, 1, 0, 1, 0, 0, 0, -1},
    {1, -1, 1, 0, 0, -1, 0, 0, 1, 0, 0, 1},
    {-1, 1, -2, -1, 1, 1, -1, 2, 0, 0, 1, -2},
    {0, 0, 0, -1, 0, -1, -1, 1, 0, 0, 1, -1},
    {0, 0, 1, 1, -1, 0, 1, -1, 0, 0, 0, 1},
    {1, -1, 2, 0, -1, -2, 0, -1, 1, -1, 0, 2},
}};

constexpr Rows kG34Typeset{{
    {1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 1, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0},
    {0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0},
    {0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0},
    {0, -1, 0, 0, 1, 0, 0, 1, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0},
    {0, 0, 0, 0, -1, 0, 0, 1, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1},
}};

constexpr Rows kG45{{
    {1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 1, -1, 0, 1, 0, 0, 2, 0, 0, 1, -1},
    {0, 0, 1, 0, -1, 0, 0, 0, 1, 0, 0, 1},
    {0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 1, 0, 0, 1, 1, 0, 1, 0},
    {0, 0, 0, 0, -1, 1, 0, -1, 0, 0, -1, 1},
    {0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0},
    {0, -1, 1, 0, 0, -1, 0, 0, 0, 0, 0, 0},
    {0, 0, -1, 0, 1, 0, 0, 1, 0, 0, 0, -1},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0},
    {0, 0, 0, 0, -1, 0, 0, -1, 0, 0, 0, 1},
    {0, -1, 1, 0, 0, -1, 0, -1, 0, 0, 0, 1},
}};

long long mod10(long long x) { return ((x % 10) + 10) % 10; }

Rational dot(const IntVector6& u, const IntVector6& v, long long den) {
  return Rational(u.dot(v), den);
}

}  // namespace

const Symp12& symplectic_J() {
  static const Symp12 j = [] {
    Symp12 m = Symp12::Zero();
    m.topRightCorner<6, 6>().setIdentity();
    m.bottomLeftCorner<6, 6>() = -Block6::Identity();
    return m;
  }();
  return j;
}

bool is_symplectic(const Symp12& g) {
  const Symp12& j = symplectic_J();
  return g.transpose() * j * g == j;
}

Symp12 symp_inverse(const Symp12& g) {
  const Symp12& j = symplectic_J();
  return -(j * g.transpose() * j);
}

Symp12 symp_pow(const Symp12& g, int n) {
  if (n < 0) return symp_pow(symp_inverse(g), -n);
  Symp12 r = Symp12::Identity();
  for (int k = 0; k < n; ++k) r = r * g;
  return r;
}

const BuiltinMatrices& builtin_matrices() {
  static const BuiltinMatrices m = [] {
    Symp12 g34 = from_rows(kG34Typeset);
    g34(7, 7) = 0;
    g34(10, 7) = 0;
    return BuiltinMatrices{from_rows(kSigma), from_rows(kG12), from_rows(kG23), g34, from_rows(kG45)};
  }();
  return m;
}

const Symp12& g34_as_typeset() {
  static const Symp12 m = from_rows(kG34Typeset);
  return m;
}

const HLifts& h_lifts() {
  static const HLifts h = [] {
    const auto& m = builtin_matrices();
    Symp12 g12sq = m.g12 * m.g12;
    Symp12 c = m.g23 * m.g34;
    return HLifts{g12sq, m.g23 * m.g23, m.g34 * m.g34, symp_inverse(m.g23) * g12sq * m.g23,
                  symp_inverse(c) * g12sq * c};
  }();
  return h;
}

Characteristic Characteristic::reduced() const {
  Characteristic r;
  for (int i = 0; i < 6; ++i) {
    r.a_num(i) = mod10(a_num(i));
    r.b_num(i) = mod10(b_num(i));
  }
  return r;
}

bool Characteristic::congruent(const Characteristic& o) const { return reduced() == o.reduced(); }

std::string Characteristic::str() const {
  std::ostringstream os;
  os << "a=(";
  for (int i = 0; i < 6; ++i) os << (i ? "," : "") << a_num(i);
  os << ")/10 b=(";
  for (int i = 0; i < 6; ++i) os << (i ? "," : "") << b_num(i);
  os << ")/10";
  return os.str();
}

Characteristic TripleChar::expand() const {
  Characteristic c;
  c.a_num << a1, a2, a3, a1, a2, a3;
  c.b_num << -2 * a1, -2 * a2, -2 * a3, -a1, -a2, -a3;
  return c;
}

TripleChar TripleChar::reduced() const {
  return TripleChar{static_cast<int>(mod10(a1)), static_cast<int>(mod10(a2)),
                    static_cast<int>(mod10(a3))};
}

std::string TripleChar::str() const {
  return "(" + std::to_string(a1) + "," + std::to_string(a2) + "," + std::to_string(a3) + ")";
}

bool to_triple(const Characteristic& c, TripleChar& out) {
  Characteristic r = c.reduced();
  TripleChar t{static_cast<int>(r.a_num(0)), static_cast<int>(r.a_num(1)), static_cast<int>(r.a_num(2))};
  if (!t.expand().congruent(r)) return false;
  out = t;
  return true;
}

Characteristic act_on_char(const Symp12& g, const Characteristic& c) {
  const Block6 A = block_A(g), B = block_B(g), C = block_C(g), D = block_D(g);
  const IntVector6 cd = (C * D.transpose()).diagonal();
  const IntVector6 ab = (A * B.transpose()).diagonal();
  Characteristic r;
  r.a_num = D * c.a_num - C * c.b_num + 5 * cd;
  r.b_num = -B * c.a_num + A * c.b_num + 5 * ab;
  return r;
}

TripleChar act_on_triple(const Symp12& g, const TripleChar& t) {
  TripleChar out;
  if (!to_triple(act_on_char(g, t.expand()), out))
    throw NumericFailure("act_on_triple: image has no triple form");
  return out;
}

Rational phi(const Symp12& g, const Characteristic& c) {
  const Block6 A = block_A(g), B = block_B(g), C = block_C(g), D = block_D(g);
  const IntVector6& a = c.a_num;
  const IntVector6& b = c.b_num;
  const IntVector6 ab = (A * B.transpose()).diagonal();
  Rational t1 = dot(a, D.transpose() * B * a, 100);
  Rational t2 = dot(a, B.transpose() * C * b, 100);
  Rational t3 = dot(b, C.transpose() * A * b, 100);
  Rational lin = dot(D * a - C * b, ab, 10);
  return Rational(-1, 2) * (t1 - 2 * t2 + t3) + Rational(1, 2) * lin;
}

Rational phi_prime(const Symp12& g, const TripleChar& t) {
  const Characteristic c = t.expand();
  const Characteristic gc = act_on_char(g, c);
  return phi(g, c) - dot(c.a_num, gc.b_num - c.b_num, 100);
}

Rational frac(const Rational& r) {
  long long fl = r.numerator() / r.denominator();
  if (r.numerator() % r.denominator() != 0 && r.numerator() < 0) --fl;
  return r - fl;
}

Matrix6c act_on_siegel(const Symp12& g, const Matrix6c& omega) {
  const Matrix6c A = block_A(g).cast<double>().cast<cplx>();
  const Matrix6c B = block_B(g).cast<double>().cast<cplx>();
  const Matrix6c C = block_C(g).cast<double>().cast<cplx>();
  const Matrix6c D = block_D(g).cast<double>().cast<cplx>();
  Eigen::PartialPivLU<Matrix6c> lu(C * omega + D);
  if (std::abs(lu.determinant()) < 1e-300) throw NumericFailure("act_on_siegel: singular CΩ+D");
  return (A * omega + B) * lu.inverse();
}

cplx automorphy_det(const Symp12& g, const Matrix6c& omega) {
  const Matrix6c C = block_C(g).cast<double>().cast<cplx>();
  const Matrix6c D = block_D(g).cast<double>().cast<cplx>();
  return (C * omega + D).determinant();
}

const std::array<TripleChar, 12>& invariant_list() {
  static const std::array<TripleChar, 12> l{{{1, 1, 1}, {1, 1, 9}, {1, 9, 1}, {9, 1, 1},
                                            {1, 3, 5}, {1, 7, 5}, {3, 1, 5}, {7, 1, 5},
                                            {3, 3, 3}, {3, 3, 7}, {3, 7, 3}, {7, 3, 3}}};
  return l;
}

std::vector<TripleChar> sigma_fixed_characteristics() {
  std::vector<TripleChar> out;
  const Symp12& s = builtin_matrices().sigma;
  for (int a1 = 1; a1 < 10; a1 += 2)
    for (int a2 = 1; a2 < 10; a2 += 2)
      for (int a3 = 1; a3 < 10; a3 += 2) {
        TripleChar t{a1, a2, a3};
        if (t.quadratic() % 5 != 0) continue;
        if (!act_on_char(s, t.expand()).congruent(t.expand()))
          throw NumericFailure("sigma_fixed_characteristics: " + t.str() + " not fixed by sigma");
        out.push_back(t);
      }
  return out;
}

}  // namespace pentaperiod
