#pragma once

#include <memory>
#include <vector>

namespace pentaperiod {

/// Nodes and weights for ∫₋₁¹ (1−s)^α (1+s)^β f(s) ds.
struct JacobiRule {
  double alpha = 0.0, beta = 0.0;
  std::vector<double> nodes, weights;
};

/// Golub–Welsch rule with n nodes; tables are built once and shared.
std::shared_ptr<const JacobiRule> gauss_jacobi(int n, double alpha, double beta);

}  // namespace pentaperiod
