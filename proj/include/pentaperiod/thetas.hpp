#pragma once

#include <utility>

#include <Eigen/Core>

#include "pentaperiod/ball.hpp"
#include "pentaperiod/symplectic.hpp"

namespace pentaperiod {

using MatrixXc = Eigen::MatrixXcd;
using VectorXc = Eigen::VectorXcd;

/// Symmetric g×g complex matrix with positive-definite imaginary part.
struct SiegelPoint {
  MatrixXc omega;

  SiegelPoint() = default;
  explicit SiegelPoint(MatrixXc m);

  Eigen::Index genus() const { return omega.rows(); }
  double asymmetry() const;
  bool imaginary_part_positive() const;
  /// Throws NumericFailure unless symmetric to tol and Im Ω is positive definite.
  void validate(double tol = 1e-9) const;
};

struct TruncationPolicy {
  double tol = 1e-10;
  /// Largest admissible radius of the scaled ellipsoid √π‖U(n − c)‖ ≤ R.
  double max_radius = 20.0;
};

/// Real characteristic (a, b) of any genus.
struct RealCharacteristic {
  Eigen::VectorXd a, b;
  static RealCharacteristic from(const Characteristic& c);
};

struct ThetaResult {
  cplx value = 0.0;
  double tail_bound = 0.0;
  long long lattice_points = 0;
  double radius = 0.0;
};

/// Σₙ exp(πi ᵗ(n+a)Ω(n+a) + 2πi ᵗ(n+a)(z+b)) over an ellipsoid chosen so that
/// the certified tail bound is below pol.tol.
ThetaResult theta(const VectorXc& z, const SiegelPoint& omega, const RealCharacteristic& ch,
                  const TruncationPolicy& pol = {});

/// Theta constant at z = 0.
ThetaResult theta_constant(const SiegelPoint& omega, const RealCharacteristic& ch,
                           const TruncationPolicy& pol = {});

/// Upper bound for Σ exp(−‖v‖²) over points of a shifted lattice of minimum ρ with ‖v‖ ≥ R.
double lattice_tail_bound(int g, double rho, double R);

/// Length of the shortest nonzero vector of √π·U·Zᵍ, where ᵗUU = Im Ω.
double shortest_vector(const SiegelPoint& omega);

/// Δ_den = η₁² + η₂² − ζ³(1+ζ)η₃².
cplx delta_den(const BallPoint& eta);

/// Closed-form period matrix Ω(η).
SiegelPoint omega_of_eta(const BallPoint& eta);

/// Block (1,4) of Ω([0:0:1]): [[ζ−1, ζ+ζ³], [ζ+ζ³, −ζ⁴]].
SiegelPoint tau0();
Eigen::Matrix<CycNum, 2, 2> tau0_exact();
/// The block with off-diagonal ζ²+ζ³ as typeset.
Eigen::Matrix<CycNum, 2, 2> tau0_typeset();

ThetaResult theta_triple(const BallPoint& eta, const TripleChar& t, const TruncationPolicy& pol = {});
ThetaResult theta_triple(const SiegelPoint& omega, const TripleChar& t, const TruncationPolicy& pol = {});

/// Genus-2 characteristic (a,a)/10, (−2a,−a)/10.
RealCharacteristic pair_characteristic(int a);
/// Genus-4 characteristic (a₂,a₃,a₂,a₃)/10, (−2a₂,−2a₃,−a₂,−a₃)/10.
RealCharacteristic quad_characteristic(int a2, int a3);

/// Complementary block of Ω(η) in coordinates 2,3,5,6.
SiegelPoint complementary_block(const SiegelPoint& omega);

struct SplitProduct {
  ThetaResult genus2;
  ThetaResult genus4;
};

/// Factors Θ_{a₁}(τ₀) and Ψ_{(a₂,a₃)}(Ω′) of Θ at η = [0:η₂:η₃].
SplitProduct split_product(const BallPoint& eta, const TripleChar& t, const TruncationPolicy& pol = {});

}  // namespace pentaperiod
