#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "pentaperiod/configspace.hpp"
#include "pentaperiod/periods.hpp"
#include "pentaperiod/thetas.hpp"

namespace pentaperiod {

/// Identifier of the frozen branch and arc conventions used by every pipeline run.
inline constexpr const char* kCalibrationId = "sheet0-upper-arcs-v1";

struct VerificationReport {
  std::string name;
  int samples = 0;
  std::vector<double> deviations;
  double max_deviation = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  std::map<std::string, std::string> metadata;
  /// Human-readable lines, worst offenders first.
  std::vector<std::string> details;
  /// Optional tabular payload (vanishing-table magnitudes, singular values).
  Eigen::MatrixXd matrix;
  std::vector<std::string> row_labels, col_labels;

  /// Sets max_deviation and pass; NaN deviations fail.
  void finalize();
};

/// Worker count from PENTAPERIOD_THREADS, else the hardware concurrency.
unsigned thread_cap();

/// Runs f(0..n−1) on up to thread_cap() threads; f writes to its own slot.
void parallel_for(int n, const std::function<void(int)>& f);

/// |Θ₁(τ₀)| against 1.13746.
VerificationReport verify_theta_constant(double tol = 1e-3, const TruncationPolicy& pol = {});

/// Exact unitarity, congruence, order and symplecticity checks.
VerificationReport verify_group();

/// ĝ₂₃ and ĝ₄₅ on the twelve triples against the reference table; the 25-count.
VerificationReport verify_characteristic_action();

/// 5φ′ for ĥ₁₂, ĥ₁₃, ĥ₁₄, ĥ₂₃, ĥ₃₄ against the given values mod Z, and ĥ(t) ≡ t.
VerificationReport verify_phase_values(const std::array<Rational, 5>& expected);
std::array<Rational, 5> phase_values_typeset();
/// 5φ′ evaluated at (1,1,1).
std::array<Rational, 5> phase_values_computed();
/// Checks only that 5φ′ is the same for all twelve triples.
VerificationReport verify_phase_constancy();

/// Z₁⁻¹Z₂ against the closed form, Riemann relations, and the c₂, c₃ relations.
VerificationReport verify_omega_oracle(int samples, std::uint64_t seed, double tol = 1e-8);

/// Ω(gη) = ĝ·Ω(η), det(CΩ+D) = ζ³F_g(η), and det = 1 for σ⁴.
VerificationReport verify_equivariance(int samples, std::uint64_t seed, double tol = 1e-9);

/// |Θ| for σ-invariant triples with 2a₁²+2a₂²+a₃² ∉ 5Z, and for (5,5,5).
VerificationReport verify_vanishing_sweep(int triples, int points, std::uint64_t seed, double tol = 1e-9,
                                          const TruncationPolicy& pol = {1e-11, 20.0});

/// Vanishing table in the order of invariant_list(); columns ℓ(12),ℓ(13),…,ℓ(45). true = "v".
using VanishingTable = std::array<std::array<bool, 10>, 12>;
const VanishingTable& vanishing_table_typeset();
/// Pattern implied by the juzu labels: Θ_t vanishes on ℓ(ij) iff its label has edge ij.
VanishingTable vanishing_table_from_labels();

/// Sample points near each mirror, Θ⁵ magnitudes compared with the row scale.
VerificationReport verify_vanishing_table(int samples_per_line, std::uint64_t seed, double tol_zero = 1e-6,
                                 double tol_nonzero = 1e-2, double distance = 1e-3,
                                 const TruncationPolicy& pol = {});

/// Projective agreement of (Θₜ⁵)ₜ with (κᵢJᵢ)ᵢ, and constancy of normalized ratios.
VerificationReport verify_diagram(int samples, std::uint64_t seed, const std::array<CycNum, 12>& kappa,
                                  double tol = 1e-6, const TruncationPolicy& pol = {});

/// Θ₍₁,₁,₁₎⁵Θ₍₁,₃,₅₎⁵ / (Θ₍₃,₃,₇₎⁵Θ₍₁,₉,₁₎⁵) = −ζ²(λ₁−λ₃)(λ₅−λ₂)/((λ₁−λ₂)(λ₅−λ₃)).
VerificationReport verify_final_identity(int samples, std::uint64_t seed, double tol = 1e-6,
                                         const TruncationPolicy& pol = {});

/// Recovery of t from −Θ₍₁,₁,₉₎⁵/Θ₍₁,₁,₁₎⁵ on the stratum (0,0,1,t,∞).
VerificationReport verify_gauss_inverse(const std::vector<cplx>& ts, double tol = 1e-6,
                                        const TruncationPolicy& pol = {});
/// η(t) = [0:η₂:η₃], by quadrature for real t > 1, otherwise by continuation.
BallPoint gauss_eta(cplx t);

/// α₁(1,j) → (6,0,0), (8,2,6), (8,8,6), (8,0,8).
VerificationReport verify_torsion(double tol = 1e-5);

/// Scaled finite-difference residuals at (0.31, 0.57) and (0.2, 0.9+0.1i).
VerificationReport verify_appell(const AppellSystem& s, double h = 1e-3, double tol = 1e-4);

/// σ₆/σ₇ of the column-normalized 12×N matrix of Θ⁵ values.
VerificationReport verify_rank6(int samples, std::uint64_t seed, double min_gap = 1e6,
                                const TruncationPolicy& pol = {});

struct SlopeFit {
  double slope = 0.0;
  double residual = 0.0;
  std::vector<double> s, log_abs;
};

/// Least-squares slope of log|Θₜ| against log s along η_m + s·r̂ transversal to ℓ(ij).
SlopeFit vanishing_slope(const TripleChar& t, Pair p, std::uint64_t seed, int points = 9,
                         const TruncationPolicy& pol = {1e-14, 20.0});

/// (3,3,7) across ℓ(12) near 1; nonvanishing rows near 0.
VerificationReport verify_slopes(std::uint64_t seed, double tol = 0.05, const TruncationPolicy& pol = {1e-14, 20.0});

/// Point on ℓ(ij) projected from η₀, and the unit A-normal root.
struct MirrorFrame {
  Vector3c base;    ///< ⟨base,base⟩_A = −1
  Vector3c normal;  ///< ⟨normal,normal⟩_A = 1, A-orthogonal to base
};
MirrorFrame mirror_frame(Pair p, const BallPoint& eta0);

/// Θ⁵ in the order of theta_order(), at the period image of λ.
Eigen::Matrix<cplx, 12, 1> theta_fifth_powers(const Configuration& lam, const TruncationPolicy& pol = {});

/// Names accepted by run_suite.
const std::vector<std::string>& suite_names();

struct RunConfig {
  double tol = 0.0;  ///< 0 selects each suite's pinned default
  double theta_tol = 1e-10;
  double max_radius = 20.0;
  std::uint64_t seed = 20240601;
  int samples = 0;  ///< 0 selects each suite's default
};

/// Dispatches a suite by name; throws InvalidInput on an unknown name.
VerificationReport run_suite(const std::string& name, const RunConfig& cfg);

}  // namespace pentaperiod
