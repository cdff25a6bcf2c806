#include <doctest.h>

#include <cmath>
#include <numeric>

#include <boost/math/quadrature/tanh_sinh.hpp>
#include <boost/math/special_functions/beta.hpp>

#include "pentaperiod/quadrature.hpp"

using namespace pentaperiod;

TEST_CASE("Jacobi weights are positive and sum to the zeroth moment") {
  for (double a : {0.0, -0.4, -0.8, 0.6})
    for (double b : {0.0, -0.2, -0.6, 1.2}) {
      auto r = gauss_jacobi(24, a, b);
      REQUIRE(r->nodes.size() == 24);
      for (double w : r->weights) CHECK(w > 0);
      for (double x : r->nodes) {
        CHECK(x > -1);
        CHECK(x < 1);
      }
      const double mu0 = std::pow(2.0, a + b + 1) * boost::math::beta(a + 1, b + 1);
      CHECK(std::accumulate(r->weights.begin(), r->weights.end(), 0.0) == doctest::Approx(mu0).epsilon(1e-13));
    }
}

TEST_CASE("Jacobi rule integrates polynomial moments up to degree 2n-1") {
  boost::math::quadrature::tanh_sinh<double> ts;
  const int n = 8;
  for (auto [a, b] : {std::pair{-0.4, -0.4}, std::pair{-0.8, 0.0}, std::pair{0.0, -0.6}, std::pair{-0.2, -0.8}}) {
    auto r = gauss_jacobi(n, a, b);
    for (int k = 0; k < 2 * n; ++k) {
      double q = 0;
      for (std::size_t i = 0; i < r->nodes.size(); ++i) q += r->weights[i] * std::pow(r->nodes[i], k);
      const auto f = [&](double s, double sc) {
        const double right = sc > 0 ? sc : 1 - s, left = sc < 0 ? -sc : 1 + s;
        return std::pow(right, a) * std::pow(left, b) * std::pow(s, k);
      };
      const double exact = ts.integrate(f, -1.0, 1.0, 1e-15);
      CHECK(std::abs(q - exact) < 1e-11);
    }
  }
}

TEST_CASE("Gauss-Legendre special case") {
  auto r = gauss_jacobi(2, 0.0, 0.0);
  CHECK(r->nodes[0] == doctest::Approx(-1.0 / std::sqrt(3.0)).epsilon(1e-14));
  CHECK(r->nodes[1] == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-14));
  CHECK(r->weights[0] == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("rules are cached") {
  CHECK(gauss_jacobi(30, -0.4, -0.6) == gauss_jacobi(30, -0.4, -0.6));
  CHECK(gauss_jacobi(30, -0.4, -0.6) != gauss_jacobi(30, -0.6, -0.4));
}
