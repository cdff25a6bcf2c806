#include <doctest.h>

#include <cmath>

#include "pentaperiod/ball.hpp"
#include "pentaperiod/configspace.hpp"
#include "pentaperiod/errors.hpp"

using namespace pentaperiod;

namespace {

/// A vector A-orthogonal to r, from the cross product with A applied.
Vector3c orthogonal_to(const Vector3c& r, const Vector3c& seed) {
  const Vector3c ar = form_A().embedded().cwiseProduct(r);
  return seed - (ar.dot(seed) / ar.dot(r)) * r;
}

}  // namespace

TEST_CASE("the forms A and H") {
  CHECK(form_A().diag[0] == CycNum(1));
  CHECK(std::abs(form_A().embedded()(2) - cplx((1 - std::sqrt(5.0)) / 2)) < 1e-14);
  CHECK(form_H().diag[2] == -CycNum::zeta_pow(3) * (CycNum(1) + CycNum::zeta()));
  CHECK(h_pairing(BallPoint(1, 2, 0)) == cplx(5.0));
}

TEST_CASE("ball membership") {
  CHECK(is_in_ball(BallPoint(0, 0, 1)));
  CHECK_FALSE(is_in_ball(BallPoint(1, 0, 0)));
  CHECK_FALSE(is_in_ball(BallPoint(0, 1, 1.2)));
  CHECK(is_in_ball(BallPoint(0, 1, 1.3)));
  CHECK_THROWS_AS(is_in_ball(BallPoint(0, 0, 0)), InvalidInput);
}

TEST_CASE("generators and h-generators are exactly A-unitary") {
  const auto& g = generators();
  for (const auto* m : {&g.g12, &g.g23, &g.g34, &g.g45}) CHECK(is_unitary(*m));
  const auto& h = h_generators();
  for (const auto* m : {&h.h12, &h.h23, &h.h34, &h.h13, &h.h14}) {
    CHECK(is_unitary(*m));
    CHECK(congruent_identity_mod_one_minus_zeta(*m));
  }
  CHECK_FALSE(congruent_identity_mod_one_minus_zeta(g.g23));
}

TEST_CASE("exact orders") {
  const auto& g = generators();
  for (const auto* m : {&g.g12, &g.g23, &g.g34, &g.g45}) CHECK(exact_order(*m) == 10);
  const auto& h = h_generators();
  for (const auto* m : {&h.h12, &h.h23, &h.h34, &h.h13, &h.h14}) CHECK(exact_order(*m) == 5);
  CycMatrix3 d = identity3();
  d(0, 0) = CycNum(-1);
  CHECK(equal(mat_pow(g.g12, 5), d));
}

TEST_CASE("reflections fix their mirror and rotate the root") {
  const auto& r = direct_roots();
  for (const RootVector* a : {&r.a12, &r.a23, &r.a34, &r.a45}) {
    const GroupElement t = reflection_T(*a);
    const RootVector ta = matmul(t, *a);
    for (int i = 0; i < 3; ++i) CHECK(ta(i) == -CycNum::zeta_pow(3) * (*a)(i));
    const Vector3c x = orthogonal_to(embed(*a), Vector3c(0.3, -0.2, 1.0));
    CHECK((apply(t, x) - x).norm() < 1e-12);
  }
  for (const RootVector* b : {&r.b13, &r.b14}) {
    const GroupElement t = reflection_R(*b);
    CHECK(is_unitary(t));
    const Vector3c x = orthogonal_to(embed(*b), Vector3c(0.1, 0.4, 1.0));
    CHECK((apply(t, x) - x).norm() < 1e-12);
  }
}

TEST_CASE("mirror roots of the first pairs") {
  const RootVector r12 = mirror_root({1, 2}), r34 = mirror_root({3, 4});
  CHECK(r12(1).is_zero());
  CHECK(r12(2).is_zero());
  CHECK_FALSE(r12(0).is_zero());
  CHECK(r34(0).is_zero());
  CHECK(r34(2).is_zero());
}

TEST_CASE("derived mirrors are images of the direct ones") {
  const auto& g = generators();
  const struct {
    Pair from, to;
    const GroupElement* by;
  } cases[] = {{{2, 3}, {2, 4}, &g.g34}, {{3, 4}, {3, 5}, &g.g45}, {{1, 4}, {1, 5}, &g.g45}, {{2, 4}, {2, 5}, &g.g45}};
  for (const auto& c : cases) {
    const Vector3c x = orthogonal_to(embed(mirror_root(c.from)), Vector3c(0.2, 0.1, 1.0));
    const Vector3c y = apply(*c.by, x);
    CHECK(std::abs(a_inner(embed(mirror_root(c.to)), y)) < 1e-12);
  }
  for (const Pair& p : all_pairs()) CHECK(a_inner(embed(mirror_root(p)), embed(mirror_root(p))).real() > 0);
}

TEST_CASE("ball is preserved by the group") {
  Sampler s(31);
  const auto& g = generators();
  for (int k = 0; k < 20; ++k) {
    const BallPoint e = s.ball_point(0.9);
    for (const auto* m : {&g.g12, &g.g23, &g.g34, &g.g45}) CHECK(is_in_ball(apply(*m, e)));
    const BallPoint out(s.uniform(1, 2), s.uniform(-1, 1), 0.5);
    for (const auto* m : {&g.g12, &g.g23, &g.g34, &g.g45}) CHECK_FALSE(is_in_ball(apply(*m, out)));
  }
}

TEST_CASE("F_g: identity, fixed point and cocycle law") {
  const auto& g = generators();
  const auto& h = h_generators();
  const BallPoint e0(0, 0, 1);
  CHECK(std::abs(F_g(identity3(), BallPoint(0.1, 0.2, 1)) - 1.0) < 1e-14);
  CHECK(std::abs(F_g(h.h12, e0) - 1.0) < 1e-14);
  Sampler s(2);
  for (int k = 0; k < 5; ++k) {
    const BallPoint e = s.ball_point();
    const cplx lhs = F_g(matmul(g.g12, g.g23), e);
    const cplx rhs = F_g(g.g12, apply(g.g23, e)) * F_g(g.g23, e);
    CHECK(std::abs(lhs - rhs) < 1e-12 * std::abs(rhs));
  }
}

TEST_CASE("F_g rejects H-isotropic points") {
  const cplx c = std::sqrt(form_H().embedded()(2));
  CHECK_THROWS_AS(F_g(identity3(), BallPoint(c * cplx(0, 1), 0, 1)), NumericFailure);
}

TEST_CASE("projective distance is scale invariant") {
  const Vector3c x(0.3, cplx(0.1, 0.2), 1.0);
  CHECK(projective_distance(x, cplx(2.0, -3.0) * x) < 1e-14);
  CHECK(projective_distance(x, Vector3c(0, 0, 1)) > 0.1);
}

TEST_CASE("pairs validate their indices") {
  CHECK_THROWS_AS(Pair(1, 1), InvalidInput);
  CHECK_THROWS_AS(Pair(0, 2), InvalidInput);
  CHECK(Pair(4, 2).str() == "24");
  CHECK(all_pairs().size() == 10);
}
