#include <doctest.h>

#include <set>

#include "pentaperiod/configspace.hpp"
#include "pentaperiod/errors.hpp"

using namespace pentaperiod;

namespace {

double proj_dist(const JVector& x, const JVector& y) {
  const cplx c = y.dot(x) / y.squaredNorm();
  return (x - c * y).norm() / x.norm();
}

}  // namespace

TEST_CASE("d is antisymmetric and vanishes on the diagonal") {
  Sampler s(1);
  const Configuration lam = s.interior();
  for (int i = 1; i <= 5; ++i) {
    CHECK(d(lam, i, i) == cplx(0));
    for (int j = 1; j <= 5; ++j) CHECK(d(lam, i, j) == -d(lam, j, i));
  }
  CHECK(d(Configuration::reference(), 1, 2) == cplx(-1));
}

TEST_CASE("twelve distinct pentagons, each edge in six of them") {
  const auto& L = juzu_labels();
  for (std::size_t i = 0; i < L.size(); ++i) {
    CHECK(L[i].v[0] == 1);
    CHECK(std::set<int>(L[i].v.begin(), L[i].v.end()).size() == 5);
    CHECK(L[i].same_pentagon(L[i].reversed()));
    for (std::size_t j = i + 1; j < L.size(); ++j) CHECK_FALSE(L[i].same_pentagon(L[j]));
  }
  for (const Pair& p : all_pairs()) {
    int n = 0;
    for (const auto& l : L) n += l.has_edge(p);
    CHECK(n == 6);
  }
  CHECK(JuzuLabel::parse("13245").str() == "13245");
  CHECK(JuzuLabel::parse("32451").same_pentagon(JuzuLabel::parse("15423")));
  CHECK_THROWS_AS(JuzuLabel::parse("13345"), InvalidInput);
  CHECK_THROWS_AS(JuzuLabel::parse("1234"), InvalidInput);
}

TEST_CASE("J depends only on the pentagon") {
  Sampler s(2);
  const Configuration lam = s.interior();
  for (const auto& l : juzu_labels()) {
    const cplx a = J(lam, l), b = J(lam, l.reversed());
    CHECK(std::abs(a + b) < 1e-12 * std::abs(a));
    JuzuLabel r = l;
    std::rotate(r.v.begin(), r.v.begin() + 2, r.v.end());
    CHECK(std::abs(J(lam, r) - a) < 1e-12 * std::abs(a));
  }
}

TEST_CASE("J components vanish exactly on the mirrors of their edges") {
  for (const Pair& p : all_pairs()) {
    Sampler s(3);
    const Configuration lam = s.on_L(p);
    for (const auto& l : juzu_labels()) {
      if (l.has_edge(p)) CHECK(std::abs(J(lam, l)) == 0.0);
      else CHECK(std::abs(J(lam, l)) > 1e-6);
    }
  }
}

TEST_CASE("the J embedding is Mobius invariant") {
  Sampler s(4);
  const Configuration lam = s.interior();
  const JVector j = j_embed(lam);
  const cplx m[][4] = {{1, 1, 0, 1}, {2, 0, 0, 1}, {0, 1, -1, 0}, {1, cplx(0.3, 0.1), cplx(0.2, -0.4), 1}};
  for (const auto& g : m) CHECK(proj_dist(j_embed(mobius(lam, g[0], g[1], g[2], g[3])), j) < 1e-12);
}

TEST_CASE("j_embed rejects triple collisions but accepts double ones") {
  Configuration lam = Configuration::finite({0.0, 0.0, 0.0, 3.0, 4.0});
  CHECK_THROWS_AS(j_embed(lam), InvalidInput);
  lam = Configuration::finite({0.0, 0.0, 2.0, 3.0, 4.0});
  CHECK_NOTHROW(j_embed(lam));
}

TEST_CASE("theta order and constants") {
  const auto& o = theta_order();
  for (const TripleChar& t : o) CHECK(std::find(invariant_list().begin(), invariant_list().end(), t) != invariant_list().end());
  for (std::size_t i = 0; i < o.size(); ++i)
    for (std::size_t j = i + 1; j < o.size(); ++j) CHECK_FALSE(o[i] == o[j]);
  for (const auto* k : {&constants_vector(), &corrected_constants()})
    for (const CycNum& c : *k) {
      CycNum p = c;
      for (int n = 1; n < 10; ++n) p *= c;
      CHECK(p == CycNum(1));
    }
  int differ = 0;
  for (std::size_t i = 0; i < 12; ++i) differ += constants_vector()[i] != corrected_constants()[i];
  CHECK(differ == 5);
}

TEST_CASE("sampler is deterministic and respects its ranges") {
  Sampler a(99), b(99), c(100);
  CHECK(a.next() == b.next());
  CHECK(a.next() != c.next());
  for (int k = 0; k < 100; ++k) {
    const double u = a.uniform(-2, 3);
    CHECK(u >= -2);
    CHECK(u < 3);
  }
  for (const Configuration& l : a.interior(20)) {
    for (int k = 0; k < 5; ++k) {
      CHECK(std::abs(l.value(k).real() - k) <= 0.3);
      CHECK(std::abs(l.value(k).imag()) <= 0.2);
    }
  }
  for (int k = 0; k < 20; ++k) {
    const BallPoint e = a.ball_point(0.6);
    CHECK(is_in_ball(e));
    CHECK(e[2] == cplx(1));
  }
}

TEST_CASE("points on L(ij) collide only at i and j") {
  for (const Pair& p : all_pairs()) {
    const auto ls = sample_on_L(p, 5, 17);
    CHECK(ls.size() == 5);
    for (const Configuration& l : ls) {
      for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j) {
          const bool same = std::abs(l.value(i) - l.value(j)) < 1e-14;
          CHECK(same == (i + 1 == p.i && j + 1 == p.j));
        }
    }
  }
}
