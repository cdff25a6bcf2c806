#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "pentaperiod/ball.hpp"
#include "pentaperiod/periods.hpp"
#include "pentaperiod/symplectic.hpp"

namespace pentaperiod {

/// d(ij) = aⱼbᵢ − aᵢbⱼ, indices 1..5.
cplx d(const Configuration& lam, int i, int j);

/// Cyclic pentagon (i,j,k,l,m), identified with its reversal.
struct JuzuLabel {
  std::array<int, 5> v;

  static JuzuLabel parse(const std::string& s);
  std::string str() const;
  bool has_edge(Pair p) const;
  JuzuLabel reversed() const;
  /// Same pentagon up to rotation and reflection.
  bool same_pentagon(const JuzuLabel& o) const;
};

/// The twelve labels in canonical order.
const std::array<JuzuLabel, 12>& juzu_labels();

/// d(ij)d(jk)d(kl)d(lm)d(mi).
cplx J(const Configuration& lam, const JuzuLabel& label);

using JVector = Eigen::Matrix<cplx, 12, 1>;

/// Throws InvalidInput on a triple collision.
JVector j_embed(const Configuration& lam);

/// Theta characteristic paired with each label.
const std::array<TripleChar, 12>& theta_order();

/// Constants as typeset: [1:−1:1:1:ζ³:ζ³:−ζ:ζ:ζ:−ζ:−1:−1].
const std::array<CycNum, 12>& constants_vector();
/// Constants for which the identity holds numerically: [1:−1:1:1:−ζ³:−ζ³:ζ:ζ:ζ:−ζ:−ζ³:−ζ³].
const std::array<CycNum, 12>& corrected_constants();

/// Deterministic generators; all randomness derives from the seed.
class Sampler {
public:
  explicit Sampler(std::uint64_t seed);

  /// λₖ = k + δ with Re δ ∈ ±0.3 and Im δ ∈ ±0.2.
  Configuration interior();
  std::vector<Configuration> interior(int count);

  /// λᵢ = λⱼ at the midpoint of their slots, shifted by 0.25i when other points lie between them.
  Configuration on_L(Pair p);

  /// [u₁:u₂:1] with |u₁|²+|u₂|² ≤ frac·(√5−1)/2.
  BallPoint ball_point(double frac = 0.6);

  double uniform(double lo, double hi);
  std::uint64_t next();

private:
  std::uint64_t state_;
};

std::vector<Configuration> sample_on_L(Pair p, int count, std::uint64_t seed);

/// Möbius image of homogeneous points by a 2×2 matrix acting on [a:b].
Configuration mobius(const Configuration& lam, cplx m00, cplx m01, cplx m10, cplx m11);

}  // namespace pentaperiod
