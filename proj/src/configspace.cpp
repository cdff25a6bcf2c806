#include "pentaperiod/configspace.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "pentaperiod/errors.hpp"

namespace pentaperiod {

cplx d(const Configuration& lam, int i, int j) {
  const auto a = [&](int k) { return lam.a[static_cast<std::size_t>(k - 1)]; };
  const auto b = [&](int k) { return lam.b[static_cast<std::size_t>(k - 1)]; };
  return a(j) * b(i) - a(i) * b(j);
}

JuzuLabel JuzuLabel::parse(const std::string& s) {
  if (s.size() != 5) throw InvalidInput("juzu label must have five digits: " + s);
  JuzuLabel l{};
  std::array<bool, 6> seen{};
  for (std::size_t k = 0; k < 5; ++k) {
    const int v = s[k] - '0';
    if (v < 1 || v > 5 || seen[static_cast<std::size_t>(v)]) throw InvalidInput("invalid juzu label: " + s);
    seen[static_cast<std::size_t>(v)] = true;
    l.v[k] = v;
  }
  return l;
}

std::string JuzuLabel::str() const {
  std::string s;
  for (int x : v) s += static_cast<char>('0' + x);
  return s;
}

bool JuzuLabel::has_edge(Pair p) const {
  for (std::size_t k = 0; k < 5; ++k) {
    const int x = v[k], y = v[(k + 1) % 5];
    if ((x == p.i && y == p.j) || (x == p.j && y == p.i)) return true;
  }
  return false;
}

JuzuLabel JuzuLabel::reversed() const {
  return JuzuLabel{{v[4], v[3], v[2], v[1], v[0]}};
}

bool JuzuLabel::same_pentagon(const JuzuLabel& o) const {
  for (const Pair& p : all_pairs())
    if (has_edge(p) != o.has_edge(p)) return false;
  return true;
}

const std::array<JuzuLabel, 12>& juzu_labels() {
  static const std::array<JuzuLabel, 12> l = [] {
    const char* s[12] = {"13245", "13524", "15324", "13254", "15234", "13425",
                         "12534", "12345", "13452", "15342", "12453", "12354"};
    std::array<JuzuLabel, 12> out{};
    for (std::size_t k = 0; k < 12; ++k) out[k] = JuzuLabel::parse(s[k]);
    return out;
  }();
  return l;
}

cplx J(const Configuration& lam, const JuzuLabel& label) {
  cplx p = 1.0;
  for (std::size_t k = 0; k < 5; ++k) p *= d(lam, label.v[k], label.v[(k + 1) % 5]);
  return p;
}

JVector j_embed(const Configuration& lam) {
  for (int i = 1; i <= 5; ++i)
    for (int j = i + 1; j <= 5; ++j)
      for (int k = j + 1; k <= 5; ++k) {
        const double s = std::max({std::abs(lam.a[std::size_t(i - 1)]) + std::abs(lam.b[std::size_t(i - 1)]),
                                   std::abs(lam.a[std::size_t(j - 1)]) + std::abs(lam.b[std::size_t(j - 1)]),
                                   std::abs(lam.a[std::size_t(k - 1)]) + std::abs(lam.b[std::size_t(k - 1)])});
        const double t = 1e-12 * s * s;
        if (std::abs(d(lam, i, j)) <= t && std::abs(d(lam, j, k)) <= t)
          throw InvalidInput("triple collision of lambda" + std::to_string(i) + ", lambda" + std::to_string(j) +
                             ", lambda" + std::to_string(k));
      }
  JVector v;
  for (std::size_t k = 0; k < 12; ++k) v(static_cast<Eigen::Index>(k)) = J(lam, juzu_labels()[k]);
  return v;
}

const std::array<TripleChar, 12>& theta_order() {
  static const std::array<TripleChar, 12> t{{{1, 1, 1}, {1, 1, 9}, {1, 9, 1}, {9, 1, 1},
                                            {1, 3, 5}, {1, 7, 5}, {3, 3, 3}, {3, 3, 7},
                                            {3, 7, 3}, {7, 3, 3}, {7, 1, 5}, {3, 1, 5}}};
  return t;
}

const std::array<CycNum, 12>& constants_vector() {
  static const std::array<CycNum, 12> c = [] {
    const CycNum z = CycNum::zeta(), z3 = CycNum::zeta_pow(3);
    return std::array<CycNum, 12>{1, -1, 1, 1, z3, z3, -z, z, z, -z, -1, -1};
  }();
  return c;
}

const std::array<CycNum, 12>& corrected_constants() {
  static const std::array<CycNum, 12> c = [] {
    const CycNum z = CycNum::zeta(), z3 = CycNum::zeta_pow(3);
    return std::array<CycNum, 12>{1, -1, 1, 1, -z3, -z3, z, z, z, -z, -z3, -z3};
  }();
  return c;
}

Sampler::Sampler(std::uint64_t seed) : state_(seed) {}

std::uint64_t Sampler::next() {
  // splitmix64
  std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

double Sampler::uniform(double lo, double hi) {
  const double u = static_cast<double>(next() >> 11) * 0x1.0p-53;
  return lo + (hi - lo) * u;
}

Configuration Sampler::interior() {
  std::array<cplx, 5> l;
  for (int k = 0; k < 5; ++k) l[static_cast<std::size_t>(k)] = cplx(k + uniform(-0.3, 0.3), uniform(-0.2, 0.2));
  return Configuration::finite(l);
}

std::vector<Configuration> Sampler::interior(int count) {
  std::vector<Configuration> out;
  out.reserve(static_cast<std::size_t>(std::max(count, 0)));
  for (int k = 0; k < count; ++k) out.push_back(interior());
  return out;
}

Configuration Sampler::on_L(Pair p) {
  Configuration c = interior();
  cplx mid = 0.5 * cplx(p.i - 1 + p.j - 1, 0.0) + cplx(uniform(-0.1, 0.1), uniform(-0.1, 0.1));
  if (p.j - p.i > 1 && (p.i + p.j) % 2 == 0) mid += cplx(0.0, 0.25);
  c.b[static_cast<std::size_t>(p.i - 1)] = mid;
  c.b[static_cast<std::size_t>(p.j - 1)] = mid;
  return c;
}

BallPoint Sampler::ball_point(double frac) {
  const double cap = frac * (std::sqrt(5.0) - 1.0) / 2.0;
  for (;;) {
    const cplx u1(uniform(-1, 1), uniform(-1, 1)), u2(uniform(-1, 1), uniform(-1, 1));
    if (std::norm(u1) + std::norm(u2) <= cap) return BallPoint(u1, u2, 1.0);
  }
}

std::vector<Configuration> sample_on_L(Pair p, int count, std::uint64_t seed) {
  Sampler s(seed);
  std::vector<Configuration> out;
  for (int k = 0; k < count; ++k) out.push_back(s.on_L(p));
  return out;
}

Configuration mobius(const Configuration& lam, cplx m00, cplx m01, cplx m10, cplx m11) {
  // z ↦ (m00 z + m01)/(m10 z + m11) on λ = b/a, i.e. [a:b] ↦ [m10 b + m11 a : m00 b + m01 a]
  Configuration out;
  for (std::size_t k = 0; k < 5; ++k) {
    out.a[k] = m10 * lam.b[k] + m11 * lam.a[k];
    out.b[k] = m00 * lam.b[k] + m01 * lam.a[k];
  }
  return out;
}

}  // namespace pentaperiod
