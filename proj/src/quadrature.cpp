#include "pentaperiod/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <tuple>

#include <Eigen/Eigenvalues>

#include "pentaperiod/errors.hpp"

namespace pentaperiod {

namespace {

JacobiRule build(int n, double a, double b) {
  // Recurrence coefficients of the monic Jacobi polynomials.
  Eigen::MatrixXd t = Eigen::MatrixXd::Zero(n, n);
  for (int k = 0; k < n; ++k) {
    const double s = 2.0 * k + a + b;
    double diag;
    if (k == 0) diag = (b - a) / (a + b + 2.0);
    else diag = (b * b - a * a) / (s * (s + 2.0));
    t(k, k) = diag;
    if (k + 1 < n) {
      const double m = k + 1.0;
      const double s1 = 2.0 * m + a + b;
      double off = 4.0 * m * (m + a) * (m + b) * (m + a + b) / (s1 * s1 * (s1 + 1.0) * (s1 - 1.0));
      if (m == 1.0) off = 4.0 * (1.0 + a) * (1.0 + b) / ((2.0 + a + b) * (2.0 + a + b) * (3.0 + a + b));
      t(k, k + 1) = t(k + 1, k) = std::sqrt(off);
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(t);
  if (es.info() != Eigen::Success) throw NumericFailure("gauss_jacobi: eigensolver failed");
  const double mu0 =
      std::exp((a + b + 1.0) * std::log(2.0) + std::lgamma(a + 1.0) + std::lgamma(b + 1.0) -
               std::lgamma(a + b + 2.0));
  JacobiRule r;
  r.alpha = a;
  r.beta = b;
  r.nodes.resize(static_cast<std::size_t>(n));
  r.weights.resize(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    const double v = es.eigenvectors()(0, k);
    r.nodes[static_cast<std::size_t>(k)] = es.eigenvalues()(k);
    r.weights[static_cast<std::size_t>(k)] = mu0 * v * v;
  }
  return r;
}

}  // namespace

std::shared_ptr<const JacobiRule> gauss_jacobi(int n, double alpha, double beta) {
  if (n < 1 || alpha <= -1.0 || beta <= -1.0) throw InvalidInput("gauss_jacobi: invalid parameters");
  static std::mutex mu;
  static std::map<std::tuple<int, double, double>, std::shared_ptr<const JacobiRule>> cache;
  const auto key = std::make_tuple(n, alpha, beta);
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  auto rule = std::make_shared<const JacobiRule>(build(n, alpha, beta));
  cache.emplace(key, rule);
  return rule;
}

}  // namespace pentaperiod
