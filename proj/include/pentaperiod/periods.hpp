#pragma once

#include <array>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "pentaperiod/ball.hpp"
#include "pentaperiod/symplectic.hpp"

namespace pentaperiod {

using Vector6c = Eigen::Matrix<cplx, 6, 1>;
using Matrix6x12c = Eigen::Matrix<cplx, 6, 12>;

/// Five points [aᵢ:bᵢ] of P¹ with λᵢ = bᵢ/aᵢ; ∞ is [0:1].
struct Configuration {
  std::array<cplx, 5> a{1.0, 1.0, 1.0, 1.0, 1.0};
  std::array<cplx, 5> b{0.0, 1.0, 2.0, 3.0, 4.0};

  static Configuration finite(const std::array<cplx, 5>& lambda);
  static Configuration reference();

  bool is_finite(int i) const;
  /// λᵢ for a finite point (0-based index).
  cplx value(int i) const;
  std::array<cplx, 5> values() const;

  /// Throws InvalidInput naming the first colliding pair.
  void require_distinct(double tol = 1e-12) const;
};

struct FormExponent {
  int m;  ///< 1..6
  int e;  ///< power of 1/w
  int p;  ///< power of z
};

const std::array<FormExponent, 6>& forms();

/// Log with argument in (−π/2, 3π/2]; the base branch has its cuts pointing down.
cplx cut_log(cplx u);

struct QuadratureSettings {
  int nodes = 40;
  /// Other branch points whose Bernstein parameter for a piece is below this trigger grading.
  double grading_rho = 2.5;
};

/// Straight base-sheet segment from λᵢ to λⱼ (0-based). Points coinciding with
/// an endpoint merge into its Jacobi exponent; non-finite points are skipped.
cplx segment_integral(const Configuration& lam, int i, int j, const FormExponent& f,
                      const QuadratureSettings& q = {});

/// Base-sheet arc α(i,j) passing above the intermediate points, as the sum of
/// consecutive segments i→i±1→…→j.
cplx arc_integral(const Configuration& lam, int i, int j, const FormExponent& f,
                  const QuadratureSettings& q = {});

/// Arc α_k(i,j) on sheet k: ζ^{−k·e}·α(i,j).
cplx sheet_arc(const Configuration& lam, int k, int i, int j, const FormExponent& f,
               const QuadratureSettings& q = {});

/// A chain Σ α_{sheet}(from,to), indices 0-based.
struct ArcPiece {
  int sheet, from, to;
};
using Chain = std::vector<ArcPiece>;

Chain gamma1();
Chain gamma2();
Chain gamma3();

cplx chain_integral(const Configuration& lam, const Chain& c, const FormExponent& f,
                    const QuadratureSettings& q = {});
Vector6c chain_integrals(const Configuration& lam, const Chain& c, const QuadratureSettings& q = {});

struct GammaPeriods {
  Vector6c a, b, c;
};

GammaPeriods gamma_periods(const Configuration& lam, const QuadratureSettings& q = {});

struct PeriodAssembly {
  Vector6c a, b, c;
  Matrix6x12c Pi;
  Matrix6c Z1, Z2, Omega;
};

/// R = diag(ζ³, ζ², ζ², ζ, ζ, ζ).
Vector6c R_diagonal();
PeriodAssembly assemble_Pi(const Vector6c& a, const Vector6c& b, const Vector6c& c);
PeriodAssembly period_assembly(const Configuration& lam, const QuadratureSettings& q = {});

/// max |ΠJᵗΠ| / max |Π|².
double riemann_residual(const PeriodAssembly& p);

/// η = [a₁:b₁:c₁], using only φ₁.
BallPoint schwarz_map(const Configuration& lam, const QuadratureSettings& q = {});

struct TorsionResult {
  Characteristic ch;
  double residual = 0.0;
};

/// Solves v ≡ Ωa + b and rounds (a,b) to the tenth grid.
TorsionResult characteristic_of_vector(const Vector6c& v, const Matrix6c& omega,
                                       double max_residual = 1e-5);

/// Z₁⁻¹ · (∫ φ₁,…,∫ φ₆) over the chain.
Vector6c normalized_arc_integral(const Configuration& lam, const Chain& c, const PeriodAssembly& p,
                                 const QuadratureSettings& q = {});

/// u_xx, u_xy, u_yy, u_x, u_y, u of a function of two variables.
struct Jet2 {
  cplx uxx, uxy, uyy, ux, uy, u;
};

/// Coefficients of
///   x(1−x)u_xx + y(1−x)u_xy + (c − p₁x)u_x − q₁ y u_y − r₁ u = 0
///   y(1−y)u_yy + x(1−y)u_xy + (c − p₂y)u_y − q₂ x u_x − r₂ u = 0.
/// For F₁(a,b₁,b₂,c): pₖ = a+bₖ+1, qₖ = bₖ, rₖ = a·bₖ.
struct AppellSystem {
  double c, p1, q1, r1, p2, q2, r2;
  /// The system with the coefficients as typeset.
  static AppellSystem typeset();
  /// F₁(3/5, 2/5, 2/5, 6/5), satisfied by the periods of z^{−2/5}(z−1)^{−2/5}(z−x)^{−2/5}(z−y)^{−2/5}dz.
  static AppellSystem from_exponents();
};

/// The two left-hand sides, each divided by the sum of the moduli of its terms.
std::array<cplx, 2> appell_operator(const AppellSystem& s, cplx x, cplx y, const Jet2& j,
                                    bool scaled = true);

/// The three periods [η₁, η₂, η₃] of φ₁ for λ = (0, x, y, 1, ∞).
Eigen::Matrix<cplx, 3, 1> appell_periods(cplx x, cplx y, const QuadratureSettings& q = {});

struct AppellResidual {
  double max_scaled = 0.0;
  std::array<std::array<double, 2>, 3> per_eta{};
};

/// Fourth-order central differences of step h.
AppellResidual appell_residual(const AppellSystem& s, cplx x, cplx y, double h,
                               const QuadratureSettings& q = {});

/// Periods on the stratum λ = (0, 0, 1, t, ∞).
namespace degenerate {

/// t(1−t)u'' + (c − p t)u' − r u = 0.
struct GaussSystem {
  double c, p, r;
  /// The equation with the coefficients as typeset.
  static GaussSystem typeset();
  /// E(3/5, 2/5, 6/5), satisfied by [η₂, η₃] below.
  static GaussSystem from_exponents();
  /// E(1/5, 2/5, 4/5), satisfied by t^{1/5}·[η₂, η₃].
  static GaussSystem rescaled();
};

cplx gauss_operator(const GaussSystem& s, cplx t, cplx u, cplx du, cplx d2u);

/// [η₂, η₃] at real t > 1 by quadrature.
Eigen::Matrix<cplx, 2, 1> periods_real(double t, const QuadratureSettings& q = {});

struct ContinuationSettings {
  double t0 = 2.0;
  double step = 2e-3;
  /// Waypoints between t0 and the target; default passes through the upper half plane.
  std::vector<cplx> waypoints;
};

/// [η₂, η₃] continued from t0 to t along the polyline t0 → waypoints → t.
Eigen::Matrix<cplx, 2, 1> periods_continued(cplx t, const ContinuationSettings& cs = {},
                                            const QuadratureSettings& q = {});

/// Default waypoints t0+i, Re t + i (or −i when flipped).
std::vector<cplx> default_waypoints(cplx t, double t0, bool lower = false);

}  // namespace degenerate

}  // namespace pentaperiod
