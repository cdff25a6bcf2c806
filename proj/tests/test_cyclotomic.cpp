#include <doctest.h>

#include <cmath>
#include <random>

#include <Eigen/LU>

#include "pentaperiod/cyclotomic.hpp"

using namespace pentaperiod;

namespace {

CycInt random_int(std::mt19937_64& rng, int lo = -6, int hi = 6) {
  std::uniform_int_distribution<int> u(lo, hi);
  return CycInt(u(rng), u(rng), u(rng), u(rng));
}

bool close(cplx a, cplx b, double tol = 1e-12) { return std::abs(a - b) <= tol * (1.0 + std::abs(b)); }

}  // namespace

TEST_CASE("zeta has order five and the cyclotomic relation holds") {
  const CycInt z = CycInt::zeta();
  CycInt p(1);
  for (int k = 0; k < 5; ++k) p *= z;
  CHECK(p == CycInt(1));
  CHECK(CycInt::zeta_pow(4) == CycInt(-1, -1, -1, -1));
  CHECK(CycInt::zeta_pow(-1) == CycInt::zeta_pow(4));
  CHECK((CycInt(1) + z + CycInt::zeta_pow(2) + CycInt::zeta_pow(3) + CycInt::zeta_pow(4)).is_zero());
}

TEST_CASE("embedding of zeta powers matches the exponential") {
  for (int k = -7; k <= 12; ++k)
    CHECK(close(CycInt::zeta_pow(k).embed(), std::polar(1.0, 2.0 * M_PI * k / 5.0)));
}

TEST_CASE("ring operations commute with the embedding") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 200; ++t) {
    const CycInt a = random_int(rng), b = random_int(rng), c = random_int(rng);
    CHECK(close((a * b).embed(), a.embed() * b.embed(), 1e-11));
    CHECK(close((a + b).embed(), a.embed() + b.embed()));
    CHECK((a * (b + c)) == (a * b + a * c));
    CHECK(((a * b) * c) == (a * (b * c)));
    CHECK((a * b) == (b * a));
  }
}

TEST_CASE("Galois conjugates and complex conjugation") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 50; ++t) {
    const CycInt a = random_int(rng);
    CHECK(close(a.conj().embed(), std::conj(a.embed())));
    for (int k = 1; k <= 4; ++k) {
      cplx direct = 0;
      for (int i = 0; i < 4; ++i) direct += a[i].convert_to<double>() * std::polar(1.0, 2.0 * M_PI * i * k / 5.0);
      CHECK(close(a.galois(k).embed(), direct, 1e-11));
    }
  }
}

TEST_CASE("norms of 1 - zeta and of units") {
  const CycInt one_minus = CycInt(1) - CycInt::zeta();
  CHECK(one_minus.norm() == 5);
  CHECK(abs(CycInt(1, 1, 0, 0).norm()) == 1);
  CHECK(CycInt(2).norm() == 16);
}

TEST_CASE("divisibility by 1 - zeta agrees with 5 | norm") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 300; ++t) {
    const CycInt a = random_int(rng);
    if (a.is_zero()) continue;
    CHECK(divisible_by_one_minus_zeta(a) == (a.norm() % 5 == 0));
  }
}

TEST_CASE("quotient 5/(1 - zeta) agrees with exhaustive search") {
  const CycInt one_minus = CycInt(1) - CycInt::zeta();
  const CycNum q = CycNum(5) / CycNum(one_minus);
  REQUIRE(q.is_integral());
  int found = 0;
  CycInt hit;
  for (int a = -6; a <= 6; ++a)
    for (int b = -6; b <= 6; ++b)
      for (int c = -6; c <= 6; ++c)
        for (int d = -6; d <= 6; ++d) {
          const CycInt y(a, b, c, d);
          if (y * one_minus == CycInt(5)) {
            ++found;
            hit = y;
          }
        }
  CHECK(found == 1);
  CHECK(hit == q.numerator());
}

TEST_CASE("5 is a unit times (1 - zeta)^4") {
  const CycNum u = CycNum(1) - CycNum::zeta();
  const CycNum r = CycNum(5) / (u * u * u * u);
  CHECK(r.is_integral());
  CHECK(abs(r.numerator().norm()) == 1);
}

TEST_CASE("field inverse") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 100; ++t) {
    const CycNum a(random_int(rng), BigInt(1 + t % 7));
    if (a.is_zero()) continue;
    CHECK(a * a.inverse() == CycNum(1));
    CHECK(close(a.inverse().embed(), 1.0 / a.embed(), 1e-10));
  }
}

TEST_CASE("CycNum reduces to a canonical form") {
  const CycNum a(CycInt(2, 4, 6, 8), BigInt(4));
  CHECK(a.denominator() == 2);
  CHECK(a == CycNum(CycInt(1, 2, 3, 4), BigInt(2)));
  CHECK(CycNum(CycInt(3), BigInt(-6)) == CycNum(CycInt(-1), BigInt(2)));
}

TEST_CASE("A33 = 1 + zeta^2 + zeta^3 embeds to (1 - sqrt5)/2") {
  const CycNum a33 = CycNum(1) + CycNum::zeta_pow(2) + CycNum::zeta_pow(3);
  CHECK(std::abs(a33.embed() - cplx((1.0 - std::sqrt(5.0)) / 2.0, 0.0)) < 1e-14);
  CHECK(a33.conj() == a33);
}

TEST_CASE("3x3 exact inverse and determinant") {
  std::mt19937_64 rng(19);
  for (int t = 0; t < 20; ++t) {
    CycMatrix3 m;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) m(i, j) = CycNum(random_int(rng, -2, 2));
    if (determinant(m).is_zero()) continue;
    CHECK(equal(matmul(m, inverse(m)), identity3()));
    CHECK(std::abs(determinant(m).embed() - embed(m).determinant()) < 1e-9);
  }
  CHECK(equal(mat_pow(identity3(), 7), identity3()));
}

TEST_CASE("congruence to the identity mod 1 - zeta") {
  CycMatrix3 m = identity3();
  m(0, 0) = CycNum::zeta();
  CHECK(congruent_identity_mod_one_minus_zeta(m));
  m(0, 0) = -CycNum::zeta_pow(3);
  CHECK_FALSE(congruent_identity_mod_one_minus_zeta(m));
  m(0, 0) = CycNum(CycInt(1), BigInt(2));
  CHECK_FALSE(congruent_identity_mod_one_minus_zeta(m));
}
