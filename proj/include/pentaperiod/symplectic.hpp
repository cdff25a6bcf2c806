#pragma once

#include <array>
#include <string>
#include <vector>

#include <Eigen/Core>
#include <boost/rational.hpp>

#include "pentaperiod/cyclotomic.hpp"

namespace pentaperiod {

using Symp12 = Eigen::Matrix<long long, 12, 12>;
using Block6 = Eigen::Matrix<long long, 6, 6>;
using IntVector6 = Eigen::Matrix<long long, 6, 1>;
using Rational = boost::rational<long long>;
using Matrix6c = Eigen::Matrix<cplx, 6, 6>;

inline Block6 block_A(const Symp12& g) { return g.topLeftCorner<6, 6>(); }
inline Block6 block_B(const Symp12& g) { return g.topRightCorner<6, 6>(); }
inline Block6 block_C(const Symp12& g) { return g.bottomLeftCorner<6, 6>(); }
inline Block6 block_D(const Symp12& g) { return g.bottomRightCorner<6, 6>(); }

const Symp12& symplectic_J();
bool is_symplectic(const Symp12& g);
Symp12 symp_inverse(const Symp12& g);
Symp12 symp_pow(const Symp12& g, int n);

struct BuiltinMatrices {
  Symp12 sigma, g12, g23, g34, g45;
};

/// σ and the lifts ĝ₁₂…ĝ₄₅. ĝ₃₄ carries corrected rows 8 and 11.
const BuiltinMatrices& builtin_matrices();

/// ĝ₃₄ with rows 8 and 11 as typeset; not symplectic.
const Symp12& g34_as_typeset();

struct HLifts {
  Symp12 h12, h23, h34, h13, h14;
};
/// Lifts of h₁₂, h₂₃, h₃₄, h₁₃, h₁₄ built as the same words in the ĝ's.
const HLifts& h_lifts();

/// (a,b) with a = a_num/10 and b = b_num/10.
struct Characteristic {
  IntVector6 a_num = IntVector6::Zero();
  IntVector6 b_num = IntVector6::Zero();

  Characteristic reduced() const;
  bool congruent(const Characteristic& o) const;
  Eigen::Matrix<double, 6, 1> a() const { return a_num.cast<double>() / 10.0; }
  Eigen::Matrix<double, 6, 1> b() const { return b_num.cast<double>() / 10.0; }
  std::string str() const;
  friend bool operator==(const Characteristic& x, const Characteristic& y) {
    return x.a_num == y.a_num && x.b_num == y.b_num;
  }
};

struct TripleChar {
  int a1 = 1, a2 = 1, a3 = 1;

  Characteristic expand() const;
  bool sigma_invariant() const { return (a1 & 1) && (a2 & 1) && (a3 & 1); }
  int quadratic() const { return 2 * a1 * a1 + 2 * a2 * a2 + a3 * a3; }
  TripleChar reduced() const;
  std::string str() const;
  friend bool operator==(const TripleChar& x, const TripleChar& y) {
    return x.a1 == y.a1 && x.a2 == y.a2 && x.a3 == y.a3;
  }
};

/// Triple form of a characteristic mod Z, if it has one.
bool to_triple(const Characteristic& c, TripleChar& out);

/// g(a,b) = (Da − Cb, −Ba + Ab) + ½((CᵗD)₀, (AᵗB)₀), unreduced.
Characteristic act_on_char(const Symp12& g, const Characteristic& c);
TripleChar act_on_triple(const Symp12& g, const TripleChar& t);

Rational phi(const Symp12& g, const Characteristic& c);
Rational phi_prime(const Symp12& g, const TripleChar& t);
Rational frac(const Rational& r);

/// (AΩ+B)(CΩ+D)⁻¹; throws on singular CΩ+D.
Matrix6c act_on_siegel(const Symp12& g, const Matrix6c& omega);
cplx automorphy_det(const Symp12& g, const Matrix6c& omega);

/// The twelve invariant triples in the list order of the vanishing sieve.
const std::array<TripleChar, 12>& invariant_list();
/// Odd triples mod 10 with 2a₁²+2a₂²+a₃² ∈ 5Z.
std::vector<TripleChar> sigma_fixed_characteristics();

}  // namespace pentaperiod
