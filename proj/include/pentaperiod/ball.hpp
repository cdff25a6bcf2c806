#pragma once

#include <array>
#include <string>
#include <utility>

#include <Eigen/Core>

#include "pentaperiod/cyclotomic.hpp"

namespace pentaperiod {

using Vector3c = Eigen::Matrix<cplx, 3, 1>;

/// Homogeneous point [η₁:η₂:η₃].
struct BallPoint {
  Vector3c v;

  BallPoint() : v(Vector3c::Zero()) {}
  explicit BallPoint(const Vector3c& x) : v(x) {}
  BallPoint(cplx a, cplx b, cplx c) : v(a, b, c) {}

  cplx operator[](int i) const { return v(i); }
};

/// Diagonal forms. A is Hermitian; H is used as a symmetric bilinear form.
struct DiagonalForm {
  std::array<CycNum, 3> diag;

  CycMatrix3 matrix() const;
  Vector3c embedded() const;
};

const DiagonalForm& form_A();
const DiagonalForm& form_H();

/// ᵗη̄ A η.
double a_norm(const BallPoint& eta);
/// ᵗx̄ A y.
cplx a_inner(const Vector3c& x, const Vector3c& y);
/// ᵗη H η.
cplx h_pairing(const BallPoint& eta);

bool is_in_ball(const BallPoint& eta);

/// Representative scaled so that the largest coordinate is 1.
BallPoint normalized(const BallPoint& eta);
/// Distance between unit representatives after optimal phase alignment.
double projective_distance(const Vector3c& x, const Vector3c& y);

using GroupElement = CycMatrix3;
using RootVector = CycVector3;

CycNum a_inner_exact(const RootVector& x, const RootVector& y);
bool is_unitary(const GroupElement& g);

/// η ↦ η − (1+ζ³)(ᵗᾱAη / ᵗᾱAα) α.
GroupElement reflection_T(const RootVector& alpha);
/// η ↦ η − (1−ζ)(ᵗβ̄Aη / ᵗβ̄Aβ) β.
GroupElement reflection_R(const RootVector& beta);

RootVector make_root(const CycNum& x, const CycNum& y, const CycNum& z);

struct Generators {
  GroupElement g12, g23, g34, g45;
};
struct HGenerators {
  GroupElement h12, h23, h34, h13, h14;
};

const Generators& generators();
const HGenerators& h_generators();

/// Roots α₁₂, α₂₃, α₃₄, α₄₅ and β₁₃, β₁₄.
struct DirectRoots {
  RootVector a12, a23, a34, a45, b13, b14;
};
const DirectRoots& direct_roots();

/// Unordered pair {i,j} with 1 ≤ i < j ≤ 5.
struct Pair {
  int i = 1, j = 2;
  Pair() = default;
  Pair(int a, int b);
  std::string str() const;
  friend bool operator==(const Pair& x, const Pair& y) { return x.i == y.i && x.j == y.j; }
};

/// The ten pairs in lexicographic order.
const std::array<Pair, 10>& all_pairs();

/// Root whose A-orthogonal complement is the mirror ℓ(ij).
RootVector mirror_root(Pair p);

Vector3c apply(const GroupElement& g, const Vector3c& eta);
BallPoint apply(const GroupElement& g, const BallPoint& eta);

/// ⟨gη,gη⟩ / ⟨η,η⟩ for the H pairing.
cplx F_g(const GroupElement& g, const BallPoint& eta);

/// Smallest n ≥ 1 with gⁿ = I, searched up to limit; 0 if not found.
int exact_order(const GroupElement& g, int limit = 60);

}  // namespace pentaperiod
