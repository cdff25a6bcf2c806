#include "pentaperiod/identities.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <sstream>
#include <thread>

#include <Eigen/Dense>
#include <Eigen/SVD>

#include "pentaperiod/errors.hpp"

namespace pentaperiod {

namespace {

using Vector12c = Eigen::Matrix<cplx, 12, 1>;

const cplx kZeta = std::polar(1.0, 2.0 * M_PI / 5.0);

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(6);
  os << x;
  return os.str();
}

std::string fmt(cplx z) {
  std::ostringstream os;
  os.precision(10);
  os << "(" << z.real() << (z.imag() < 0 ? "" : "+") << z.imag() << "i)";
  return os.str();
}

std::string fmt(const Rational& r) {
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

VerificationReport start(const std::string& name, double tol) {
  VerificationReport r;
  r.name = name;
  r.tolerance = tol;
  r.metadata["calibration_id"] = kCalibrationId;
  return r;
}

void set_policy(VerificationReport& r, const TruncationPolicy& pol) {
  r.metadata["theta_tol"] = fmt(pol.tol);
  r.metadata["max_radius"] = fmt(pol.max_radius);
}

void check(VerificationReport& r, const std::string& what, bool ok) {
  r.deviations.push_back(ok ? 0.0 : 1.0);
  if (!ok) r.details.push_back("failed: " + what);
}

/// Max over i of the distance between unit representatives after phase alignment.
double projective_distance12(const Vector12c& x, const Vector12c& y) {
  const Vector12c u = x / x.norm();
  const Vector12c v = y / y.norm();
  const cplx ip = v.dot(u);
  const cplx ph = std::abs(ip) > 0 ? ip / std::abs(ip) : cplx(1.0);
  return (u - ph * v).norm();
}

std::vector<std::size_t> worst_first(const std::vector<double>& d, std::size_t k) {
  std::vector<std::size_t> idx(d.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return d[a] > d[b]; });
  if (idx.size() > k) idx.resize(k);
  return idx;
}

void list_worst(VerificationReport& r, const std::vector<std::string>& labels, std::size_t k = 5) {
  for (std::size_t i : worst_first(r.deviations, k))
    if (i < labels.size()) r.details.push_back(labels[i] + ": " + fmt(r.deviations[i]));
}

std::string lambda_str(const Configuration& lam) {
  std::string s = "lambda=[";
  for (std::size_t k = 0; k < 5; ++k) s += (k ? "," : "") + fmt(lam.value(static_cast<int>(k)));
  return s + "]";
}

int theta_index(const TripleChar& t) {
  const auto& o = theta_order();
  for (std::size_t k = 0; k < o.size(); ++k)
    if (o[k] == t) return static_cast<int>(k);
  throw InvalidInput("not one of the twelve triples: " + t.str());
}

}  // namespace

void VerificationReport::finalize() {
  samples = std::max(samples, 0);
  max_deviation = 0.0;
  bool finite = true;
  for (double d : deviations) {
    if (!std::isfinite(d)) finite = false;
    else max_deviation = std::max(max_deviation, d);
  }
  if (!finite) max_deviation = std::numeric_limits<double>::infinity();
  pass = finite && !deviations.empty() && max_deviation <= tolerance;
}

unsigned thread_cap() {
  unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  if (const char* e = std::getenv("PENTAPERIOD_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(e, &end, 10);
    if (end != e && v >= 1) return static_cast<unsigned>(std::min<long>(v, 256));
  }
  return hw;
}

void parallel_for(int n, const std::function<void(int)>& f) {
  if (n <= 0) return;
  const unsigned workers = std::min<unsigned>(thread_cap(), static_cast<unsigned>(n));
  if (workers <= 1) {
    for (int i = 0; i < n; ++i) f(i);
    return;
  }
  std::atomic<int> next{0};
  std::exception_ptr err;
  std::atomic<bool> failed{false};
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (int i; (i = next.fetch_add(1)) < n;) {
        if (failed.load()) return;
        try {
          f(i);
        } catch (...) {
          if (!failed.exchange(true)) err = std::current_exception();
        }
      }
    });
  for (auto& t : pool) t.join();
  if (err) std::rethrow_exception(err);
}

VerificationReport verify_theta_constant(double tol, const TruncationPolicy& pol) {
  VerificationReport r = start("theta-constant", tol);
  set_policy(r, pol);
  const ThetaResult th = theta_constant(tau0(), pair_characteristic(1), pol);
  const double target = 1.13746;
  r.deviations.push_back(std::abs(std::abs(th.value) - target));
  r.samples = 1;
  r.metadata["abs_theta1_tau0"] = fmt(std::abs(th.value));
  r.metadata["tail_bound"] = fmt(th.tail_bound);
  r.metadata["lattice_points"] = std::to_string(th.lattice_points);
  const ThetaResult typeset = theta_constant(SiegelPoint(embed(tau0_typeset())), pair_characteristic(1), pol);
  r.details.push_back("typeset off-diagonal zeta^2+zeta^3 gives |Theta_1| = " + fmt(std::abs(typeset.value)));
  r.finalize();
  return r;
}

VerificationReport verify_group() {
  VerificationReport r = start("group", 0.0);
  const auto& g = generators();
  const auto& h = h_generators();
  const std::pair<const char*, const GroupElement*> gs[] = {
      {"g12", &g.g12}, {"g23", &g.g23}, {"g34", &g.g34}, {"g45", &g.g45}};
  const std::pair<const char*, const GroupElement*> hs[] = {
      {"h12", &h.h12}, {"h23", &h.h23}, {"h34", &h.h34}, {"h13", &h.h13}, {"h14", &h.h14}};
  const GroupElement id = identity3();
  for (const auto& [n, m] : gs) {
    check(r, std::string(n) + " A-unitary", is_unitary(*m));
    check(r, std::string(n) + "^10 = I", equal(mat_pow(*m, 10), id));
    r.metadata[std::string("order_") + n] = std::to_string(exact_order(*m));
  }
  for (const auto& [n, m] : hs) {
    check(r, std::string(n) + " A-unitary", is_unitary(*m));
    check(r, std::string(n) + " = I mod (1-zeta)", congruent_identity_mod_one_minus_zeta(*m));
    check(r, std::string(n) + "^10 = I", equal(mat_pow(*m, 10), id));
    r.metadata[std::string("order_") + n] = std::to_string(exact_order(*m));
  }
  check(r, "g23 not = I mod (1-zeta)", !congruent_identity_mod_one_minus_zeta(g.g23));

  const auto& b = builtin_matrices();
  const std::pair<const char*, const Symp12*> bs[] = {
      {"sigma", &b.sigma}, {"g12^", &b.g12}, {"g23^", &b.g23}, {"g34^", &b.g34}, {"g45^", &b.g45}};
  for (const auto& [n, m] : bs) check(r, std::string(n) + " symplectic", is_symplectic(*m));
  check(r, "sigma^5 = I", symp_pow(b.sigma, 5) == Symp12::Identity());
  const auto& l = h_lifts();
  const std::pair<const char*, const Symp12*> ls[] = {
      {"h12^", &l.h12}, {"h23^", &l.h23}, {"h34^", &l.h34}, {"h13^", &l.h13}, {"h14^", &l.h14}};
  for (const auto& [n, m] : ls) check(r, std::string(n) + " symplectic", is_symplectic(*m));
  r.metadata["g34_typeset_symplectic"] = is_symplectic(g34_as_typeset()) ? "true" : "false";
  r.samples = static_cast<int>(r.deviations.size());
  r.finalize();
  return r;
}

VerificationReport verify_characteristic_action() {
  VerificationReport r = start("characteristics", 0.0);
  static const TripleChar g23_table[12] = {{3, 3, 7}, {7, 7, 7}, {9, 7, 5}, {7, 9, 5}, {9, 1, 9}, {7, 3, 3},
                                           {1, 9, 9}, {3, 7, 3}, {9, 9, 1}, {1, 1, 1}, {7, 1, 5}, {1, 7, 5}};
  static const TripleChar g45_table[12] = {{1, 9, 9}, {1, 7, 5}, {1, 3, 5}, {9, 9, 9}, {1, 9, 1}, {1, 1, 9},
                                           {3, 3, 7}, {7, 3, 7}, {3, 7, 7}, {3, 1, 5}, {3, 9, 5}, {7, 7, 7}};
  const auto& b = builtin_matrices();
  const auto& tw = invariant_list();
  for (std::size_t k = 0; k < 12; ++k) {
    const TripleChar x = act_on_triple(b.g23, tw[k]).reduced();
    const TripleChar y = act_on_triple(b.g45, tw[k]).reduced();
    check(r, "g23^" + tw[k].str() + " = " + x.str() + " (table " + g23_table[k].str() + ")", x == g23_table[k]);
    check(r, "g45^" + tw[k].str() + " = " + y.str() + " (table " + g45_table[k].str() + ")", y == g45_table[k]);
  }
  const auto fixed = sigma_fixed_characteristics();
  r.metadata["sigma_fixed_count"] = std::to_string(fixed.size());
  check(r, "25 odd triples with 2a1^2+2a2^2+a3^2 in 5Z", fixed.size() == 25);
  r.samples = static_cast<int>(r.deviations.size());
  r.finalize();
  return r;
}

std::array<Rational, 5> phase_values_typeset() {
  return {Rational(1, 8), Rational(3, 4), Rational(1, 2), Rational(1, 2), Rational(3, 4)};
}

namespace {

std::array<const Symp12*, 5> lift_list() {
  const auto& l = h_lifts();
  return {&l.h12, &l.h13, &l.h14, &l.h23, &l.h34};
}

const char* kLiftNames[5] = {"h12", "h13", "h14", "h23", "h34"};

}  // namespace

std::array<Rational, 5> phase_values_computed() {
  std::array<Rational, 5> v;
  const auto lifts = lift_list();
  for (std::size_t k = 0; k < 5; ++k) v[k] = frac(Rational(5) * phi_prime(*lifts[k], TripleChar{1, 1, 1}));
  return v;
}

VerificationReport verify_phase_values(const std::array<Rational, 5>& expected) {
  VerificationReport r = start("phases", 0.0);
  const auto lifts = lift_list();
  for (std::size_t k = 0; k < 5; ++k) {
    for (const TripleChar& t : invariant_list()) {
      const Rational v = frac(Rational(5) * phi_prime(*lifts[k], t));
      check(r, std::string("5phi'(") + kLiftNames[k] + ", " + t.str() + ") = " + fmt(v) + ", expected " +
                   fmt(frac(expected[k])),
            v == frac(expected[k]));
      check(r, std::string(kLiftNames[k]) + " fixes " + t.str(),
            act_on_triple(*lifts[k], t).reduced() == t.reduced());
    }
    r.metadata[std::string("5phi_") + kLiftNames[k]] = fmt(frac(Rational(5) * phi_prime(*lifts[k], {1, 1, 1})));
  }
  r.samples = static_cast<int>(r.deviations.size());
  r.finalize();
  return r;
}

VerificationReport verify_phase_constancy() {
  VerificationReport r = start("phases-constancy", 0.0);
  const auto lifts = lift_list();
  for (std::size_t k = 0; k < 5; ++k) {
    const Rational first = frac(Rational(5) * phi_prime(*lifts[k], invariant_list()[0]));
    for (const TripleChar& t : invariant_list())
      check(r, std::string("5phi'(") + kLiftNames[k] + ", " + t.str() + ") constant",
            frac(Rational(5) * phi_prime(*lifts[k], t)) == first);
    r.metadata[std::string("5phi_") + kLiftNames[k]] = fmt(first);
  }
  r.samples = static_cast<int>(r.deviations.size());
  r.finalize();
  return r;
}

VerificationReport verify_omega_oracle(int samples, std::uint64_t seed, double tol) {
  VerificationReport r = start("omega", tol);
  r.metadata["seed"] = std::to_string(seed);
  const auto lams = Sampler(seed).interior(samples);
  std::vector<double> dev(lams.size());
  std::vector<std::array<double, 4>> parts(lams.size());
  const cplx s23 = std::pow(kZeta, 2) + std::pow(kZeta, 3);
  parallel_for(samples, [&](int i) {
    const auto& lam = lams[static_cast<std::size_t>(i)];
    const PeriodAssembly p = period_assembly(lam);
    const BallPoint eta(p.a(0), p.b(0), p.c(0));
    const double om = (p.Omega - omega_of_eta(eta).omega).cwiseAbs().maxCoeff();
    const double rr = riemann_residual(p);
    double cdev[2];
    for (int m = 1; m <= 2; ++m) {
      const cplx pred = -s23 * (p.a(0) * p.a(m) + p.b(0) * p.b(m)) / p.c(0);
      cdev[m - 1] = std::abs(pred - p.c(m)) / std::abs(p.c(m));
    }
    parts[static_cast<std::size_t>(i)] = {om, rr, cdev[0], cdev[1]};
    dev[static_cast<std::size_t>(i)] = std::max({om, rr, cdev[0], cdev[1]});
  });
  r.deviations = dev;
  r.samples = samples;
  std::array<double, 4> mx{};
  for (const auto& p : parts)
    for (std::size_t k = 0; k < 4; ++k) mx[k] = std::max(mx[k], p[k]);
  r.metadata["max_omega_diff"] = fmt(mx[0]);
  r.metadata["max_riemann_residual"] = fmt(mx[1]);
  r.metadata["max_c2_relative"] = fmt(mx[2]);
  r.metadata["max_c3_relative"] = fmt(mx[3]);
  std::vector<std::string> labels;
  for (const auto& l : lams) labels.push_back(lambda_str(l));
  list_worst(r, labels, 3);
  r.finalize();
  return r;
}

VerificationReport verify_equivariance(int samples, std::uint64_t seed, double tol) {
  VerificationReport r = start("equivariance", tol);
  r.metadata["seed"] = std::to_string(seed);
  Sampler s(seed);
  const auto& g = generators();
  const auto& b = builtin_matrices();
  const std::pair<const GroupElement*, const Symp12*> gs[4] = {
      {&g.g12, &b.g12}, {&g.g23, &b.g23}, {&g.g34, &b.g34}, {&g.g45, &b.g45}};
  const char* names[4] = {"g12", "g23", "g34", "g45"};
  const Symp12 s4 = symp_pow(b.sigma, 4);
  const cplx z3 = std::pow(kZeta, 3);
  std::vector<std::string> labels;
  std::array<double, 3> mx{};
  for (int k = 0; k < samples; ++k) {
    const BallPoint eta = s.ball_point();
    const Matrix6c om = omega_of_eta(eta).omega;
    for (int q = 0; q < 4; ++q) {
      const double e1 = (omega_of_eta(apply(*gs[q].first, eta)).omega - act_on_siegel(*gs[q].second, om))
                            .cwiseAbs()
                            .maxCoeff();
      const double e2 = std::abs(automorphy_det(*gs[q].second, om) - z3 * F_g(*gs[q].first, eta));
      r.deviations.push_back(e1);
      labels.push_back(std::string("omega ") + names[q] + " sample " + std::to_string(k));
      r.deviations.push_back(e2);
      labels.push_back(std::string("det ") + names[q] + " sample " + std::to_string(k));
      mx[0] = std::max(mx[0], e1);
      mx[1] = std::max(mx[1], e2);
    }
    const double e3 = std::max(std::abs(automorphy_det(s4, om) - 1.0),
                               (act_on_siegel(b.sigma, om) - om).cwiseAbs().maxCoeff());
    r.deviations.push_back(e3);
    labels.push_back("sigma sample " + std::to_string(k));
    mx[2] = std::max(mx[2], e3);
  }
  r.samples = samples;
  r.metadata["max_omega_diff"] = fmt(mx[0]);
  r.metadata["max_det_diff"] = fmt(mx[1]);
  r.metadata["max_sigma_diff"] = fmt(mx[2]);
  list_worst(r, labels, 3);
  r.finalize();
  return r;
}

VerificationReport verify_vanishing_sweep(int triples, int points, std::uint64_t seed, double tol,
                                          const TruncationPolicy& pol) {
  VerificationReport r = start("sweep", tol);
  set_policy(r, pol);
  r.metadata["seed"] = std::to_string(seed);
  std::vector<TripleChar> cand;
  for (int a1 = 1; a1 < 10; a1 += 2)
    for (int a2 = 1; a2 < 10; a2 += 2)
      for (int a3 = 1; a3 < 10; a3 += 2) {
        TripleChar t{a1, a2, a3};
        if (t.quadratic() % 5 != 0) cand.push_back(t);
      }
  Sampler s(seed);
  for (std::size_t k = cand.size(); k > 1; --k) std::swap(cand[k - 1], cand[s.next() % k]);
  cand.resize(std::min<std::size_t>(cand.size(), static_cast<std::size_t>(std::max(triples, 0))));
  cand.push_back({5, 5, 5});
  std::vector<BallPoint> etas;
  for (int k = 0; k < points; ++k) etas.push_back(s.ball_point());
  const int n = static_cast<int>(cand.size() * etas.size());
  std::vector<double> dev(static_cast<std::size_t>(n));
  std::vector<std::string> labels(static_cast<std::size_t>(n));
  parallel_for(n, [&](int i) {
    const auto& t = cand[static_cast<std::size_t>(i) / etas.size()];
    const auto& e = etas[static_cast<std::size_t>(i) % etas.size()];
    const ThetaResult th = theta_triple(e, t, pol);
    dev[static_cast<std::size_t>(i)] = std::abs(th.value);
    labels[static_cast<std::size_t>(i)] = t.str() + " at point " + std::to_string(static_cast<std::size_t>(i) % etas.size());
  });
  r.deviations = dev;
  r.samples = n;
  list_worst(r, labels, 3);
  r.finalize();
  return r;
}

const VanishingTable& vanishing_table_typeset() {
  static const VanishingTable t = [] {
    const char* rows[12] = {".v.vvv...v", ".vv..vv.v.", "..vvvv..v.", ".vv.v.v..v",
                            "..vvv.vv..", ".v.v.vvv..", "v.v.v...vv", "vv...v..vv",
                            "v.v...vvv.", "v..vv..v.v", "vv....vv.v", "v..v.v.vv."};
    VanishingTable out{};
    for (std::size_t i = 0; i < 12; ++i)
      for (std::size_t j = 0; j < 10; ++j) out[i][j] = rows[i][j] == 'v';
    return out;
  }();
  return t;
}

VanishingTable vanishing_table_from_labels() {
  VanishingTable out{};
  const auto& tw = invariant_list();
  for (std::size_t i = 0; i < 12; ++i) {
    const JuzuLabel& l = juzu_labels()[static_cast<std::size_t>(theta_index(tw[i]))];
    for (std::size_t j = 0; j < 10; ++j) out[i][j] = l.has_edge(all_pairs()[j]);
  }
  return out;
}

MirrorFrame mirror_frame(Pair p, const BallPoint& eta0) {
  const Vector3c r = embed(mirror_root(p));
  const double rr = a_inner(r, r).real();
  if (!(rr > 0)) throw NumericFailure("mirror root is not positive for the form A");
  MirrorFrame f;
  f.normal = r / std::sqrt(rr);
  Vector3c base = eta0.v - a_inner(f.normal, eta0.v) * f.normal;
  const double bb = a_inner(base, base).real();
  if (!(bb < 0)) throw NumericFailure("projection onto the mirror left the ball");
  f.base = base / std::sqrt(-bb);
  return f;
}

VerificationReport verify_vanishing_table(int samples_per_line, std::uint64_t seed, double tol_zero, double tol_nonzero,
                                 double distance, const TruncationPolicy& pol) {
  VerificationReport r = start("table", 0.0);
  set_policy(r, pol);
  r.metadata["seed"] = std::to_string(seed);
  r.metadata["tol_zero"] = fmt(tol_zero);
  r.metadata["tol_nonzero"] = fmt(tol_nonzero);
  r.metadata["distance"] = fmt(distance);
  r.metadata["quantity"] = "|Theta|^5";
  Sampler s(seed);
  std::vector<BallPoint> base;
  for (int k = 0; k < samples_per_line; ++k) base.push_back(s.ball_point(0.5));
  const auto& tw = invariant_list();
  const int m = samples_per_line;
  // vals[(row*10 + col)*m + sample]
  std::vector<double> vals(static_cast<std::size_t>(120 * m));
  parallel_for(10 * m, [&](int i) {
    const int col = i / m, smp = i % m;
    const MirrorFrame f = mirror_frame(all_pairs()[static_cast<std::size_t>(col)], base[static_cast<std::size_t>(smp)]);
    const BallPoint eta(f.base + distance * f.normal);
    const SiegelPoint om = omega_of_eta(eta);
    for (int row = 0; row < 12; ++row)
      vals[static_cast<std::size_t>((row * 10 + col) * m + smp)] =
          std::pow(std::abs(theta_triple(om, tw[static_cast<std::size_t>(row)], pol).value), 5);
  });
  const VanishingTable& expect = vanishing_table_typeset();
  r.matrix = Eigen::MatrixXd::Zero(12, 10);
  int ambiguous = 0, mismatched = 0;
  for (int row = 0; row < 12; ++row) {
    double scale = 0.0;
    for (int k = 0; k < 10 * m; ++k) scale = std::max(scale, vals[static_cast<std::size_t>(row * 10 * m + k)]);
    for (int col = 0; col < 10; ++col) {
      double mx = 0.0;
      for (int k = 0; k < m; ++k) mx = std::max(mx, vals[static_cast<std::size_t>((row * 10 + col) * m + k)]);
      const double rel = mx / scale;
      r.matrix(row, col) = rel;
      const bool zero = rel <= tol_zero, nonzero = rel >= tol_nonzero;
      if (!zero && !nonzero) ++ambiguous;
      const bool ok = expect[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] ? zero : nonzero;
      if (!ok) {
        ++mismatched;
        r.details.push_back("cell " + tw[static_cast<std::size_t>(row)].str() + " l(" +
                            all_pairs()[static_cast<std::size_t>(col)].str() + "): relative " + fmt(rel) +
                            (zero || nonzero ? "" : " (ambiguous)"));
      }
      r.deviations.push_back(ok ? 0.0 : 1.0);
    }
  }
  for (const auto& t : tw) r.row_labels.push_back(t.str());
  for (const auto& p : all_pairs()) r.col_labels.push_back("l(" + p.str() + ")");
  r.metadata["mismatched_cells"] = std::to_string(mismatched);
  r.metadata["ambiguous_cells"] = std::to_string(ambiguous);
  r.samples = 10 * m;
  r.finalize();
  return r;
}

Vector12c theta_fifth_powers(const Configuration& lam, const TruncationPolicy& pol) {
  const SiegelPoint om = omega_of_eta(schwarz_map(lam));
  Vector12c v;
  for (std::size_t k = 0; k < 12; ++k)
    v(static_cast<Eigen::Index>(k)) = std::pow(theta_triple(om, theta_order()[k], pol).value, 5);
  return v;
}

VerificationReport verify_diagram(int samples, std::uint64_t seed, const std::array<CycNum, 12>& kappa, double tol,
                                  const TruncationPolicy& pol) {
  VerificationReport r = start("diagram", tol);
  set_policy(r, pol);
  r.metadata["seed"] = std::to_string(seed);
  const auto lams = Sampler(seed).interior(samples);
  std::vector<double> dist(lams.size()), ratio(lams.size());
  std::vector<int> worst_comp(lams.size());
  parallel_for(samples, [&](int i) {
    const auto& lam = lams[static_cast<std::size_t>(i)];
    const Vector12c th = theta_fifth_powers(lam, pol);
    const JVector j = j_embed(lam);
    Vector12c kj;
    for (Eigen::Index k = 0; k < 12; ++k) kj(k) = kappa[static_cast<std::size_t>(k)].embed() * j(k);
    dist[static_cast<std::size_t>(i)] = projective_distance12(th, kj);
    const cplx r0 = th(0) / kj(0);
    double w = 0.0;
    int wc = 0;
    for (Eigen::Index k = 0; k < 12; ++k) {
      const double d = std::abs(th(k) / kj(k) / r0 - 1.0);
      if (d > w) w = d, wc = static_cast<int>(k);
    }
    ratio[static_cast<std::size_t>(i)] = w;
    worst_comp[static_cast<std::size_t>(i)] = wc;
  });
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < lams.size(); ++i) {
    r.deviations.push_back(std::max(dist[i], ratio[i]));
    labels.push_back(lambda_str(lams[i]) + " worst component " + juzu_labels()[static_cast<std::size_t>(worst_comp[i])].str());
  }
  r.metadata["max_projective_distance"] = fmt(*std::max_element(dist.begin(), dist.end()));
  r.metadata["max_ratio_deviation"] = fmt(*std::max_element(ratio.begin(), ratio.end()));
  r.samples = samples;
  list_worst(r, labels, 3);
  r.finalize();
  return r;
}

VerificationReport verify_final_identity(int samples, std::uint64_t seed, double tol, const TruncationPolicy& pol) {
  VerificationReport r = start("final-identity", tol);
  set_policy(r, pol);
  r.metadata["seed"] = std::to_string(seed);
  const auto lams = Sampler(seed).interior(samples);
  std::vector<double> dev(lams.size());
  const int i111 = theta_index({1, 1, 1}), i135 = theta_index({1, 3, 5});
  const int i337 = theta_index({3, 3, 7}), i191 = theta_index({1, 9, 1});
  parallel_for(samples, [&](int i) {
    const auto& lam = lams[static_cast<std::size_t>(i)];
    const Vector12c th = theta_fifth_powers(lam, pol);
    const cplx lhs = th(i111) * th(i135) / (th(i337) * th(i191));
    const cplx rhs = -kZeta * kZeta * d(lam, 1, 3) * d(lam, 5, 2) / (d(lam, 1, 2) * d(lam, 5, 3));
    dev[static_cast<std::size_t>(i)] = std::abs(lhs / rhs - 1.0);
  });
  r.deviations = dev;
  r.samples = samples;
  std::vector<std::string> labels;
  for (const auto& l : lams) labels.push_back(lambda_str(l));
  list_worst(r, labels, 3);
  r.finalize();
  return r;
}

BallPoint gauss_eta(cplx t) {
  Eigen::Matrix<cplx, 2, 1> e;
  if (t.imag() == 0.0 && t.real() > 1.0) e = degenerate::periods_real(t.real());
  else e = degenerate::periods_continued(t);
  return BallPoint(0.0, e(0), e(1));
}

VerificationReport verify_gauss_inverse(const std::vector<cplx>& ts, double tol, const TruncationPolicy& pol) {
  VerificationReport r = start("gauss", tol);
  set_policy(r, pol);
  std::vector<double> dev(ts.size());
  std::vector<cplx> rec(ts.size());
  parallel_for(static_cast<int>(ts.size()), [&](int i) {
    const cplx t = ts[static_cast<std::size_t>(i)];
    const SiegelPoint om = omega_of_eta(gauss_eta(t));
    const cplx a = theta_triple(om, {1, 1, 9}, pol).value, b = theta_triple(om, {1, 1, 1}, pol).value;
    const cplx ts_ = -std::pow(a, 5) / std::pow(b, 5);
    rec[static_cast<std::size_t>(i)] = ts_;
    dev[static_cast<std::size_t>(i)] = std::abs(ts_ - t) / std::abs(t);
  });
  r.deviations = dev;
  r.samples = static_cast<int>(ts.size());
  for (std::size_t i = 0; i < ts.size(); ++i)
    r.details.push_back("t=" + fmt(ts[i]) + " recovered " + fmt(rec[i]) + " relative " + fmt(dev[i]));
  r.finalize();
  return r;
}

VerificationReport verify_torsion(double tol) {
  VerificationReport r = start("torsion", tol);
  const Configuration lam = Configuration::finite(
      {cplx(0, 0.05), cplx(1.2, -0.05), cplx(2, 0.1), cplx(3.1, 0), cplx(4, -0.05)});
  r.metadata["lambda"] = lambda_str(lam);
  const PeriodAssembly p = period_assembly(lam);
  const TripleChar expect[4] = {{6, 0, 0}, {8, 2, 6}, {8, 8, 6}, {8, 0, 8}};
  for (int j = 1; j <= 4; ++j) {
    const Vector6c v = normalized_arc_integral(lam, Chain{{1, 0, j}}, p);
    const TorsionResult tr = characteristic_of_vector(v, p.Omega);
    TripleChar t;
    const bool triple = to_triple(tr.ch, t);
    const bool ok = triple && t.reduced() == expect[j - 1];
    r.deviations.push_back(ok ? tr.residual : std::numeric_limits<double>::infinity());
    r.details.push_back("alpha_1(1," + std::to_string(j + 1) + ") -> " + tr.ch.str() +
                        (triple ? " triple " + t.str() : " (no triple form)") + " residual " + fmt(tr.residual));
  }
  r.samples = 4;
  r.finalize();
  return r;
}

VerificationReport verify_appell(const AppellSystem& s, double h, double tol) {
  VerificationReport r = start("appell", tol);
  r.metadata["step"] = fmt(h);
  r.metadata["system"] = "c=" + fmt(s.c) + " p1=" + fmt(s.p1) + " q1=" + fmt(s.q1) + " r1=" + fmt(s.r1) +
                         " p2=" + fmt(s.p2) + " q2=" + fmt(s.q2) + " r2=" + fmt(s.r2);
  const std::pair<cplx, cplx> pts[2] = {{cplx(0.31), cplx(0.57)}, {cplx(0.2), cplx(0.9, 0.1)}};
  for (const auto& [x, y] : pts) {
    const AppellResidual res = appell_residual(s, x, y, h);
    for (std::size_t k = 0; k < 3; ++k)
      for (std::size_t q = 0; q < 2; ++q) {
        r.deviations.push_back(res.per_eta[k][q]);
        r.details.push_back("(x,y)=(" + fmt(x) + "," + fmt(y) + ") eta" + std::to_string(k + 1) + " eq" +
                            std::to_string(q + 1) + ": " + fmt(res.per_eta[k][q]));
      }
  }
  r.samples = 2;
  r.finalize();
  return r;
}

VerificationReport verify_rank6(int samples, std::uint64_t seed, double min_gap, const TruncationPolicy& pol) {
  VerificationReport r = start("rank", 1.0 / min_gap);
  set_policy(r, pol);
  r.metadata["seed"] = std::to_string(seed);
  const auto lams = Sampler(seed).interior(samples);
  Eigen::MatrixXcd m(12, samples);
  parallel_for(samples, [&](int i) {
    const Vector12c v = theta_fifth_powers(lams[static_cast<std::size_t>(i)], pol);
    m.col(i) = v / v.norm();
  });
  const Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
  const Eigen::VectorXd sv = svd.singularValues();
  r.matrix = sv;
  for (Eigen::Index k = 0; k < sv.size(); ++k) r.row_labels.push_back("sigma" + std::to_string(k + 1));
  r.col_labels = {"singular_value"};
  const double tiny = 1e-300;
  const double gap = sv.size() >= 7 ? sv(5) / std::max(sv(6), tiny) : 0.0;
  int rank = 0;
  for (Eigen::Index k = 0; k < sv.size(); ++k)
    if (sv(k) > sv(0) * 1e-9) ++rank;
  r.metadata["sigma6_over_sigma7"] = fmt(gap);
  r.metadata["numerical_rank"] = std::to_string(rank);
  r.deviations.push_back(gap > 0 ? 1.0 / gap : std::numeric_limits<double>::infinity());
  r.samples = samples;
  r.finalize();
  return r;
}

SlopeFit vanishing_slope(const TripleChar& t, Pair p, std::uint64_t seed, int points, const TruncationPolicy& pol) {
  if (points < 2) throw InvalidInput("vanishing_slope: need at least two points");
  Sampler s(seed);
  const MirrorFrame f = mirror_frame(p, s.ball_point(0.5));
  SlopeFit fit;
  for (int k = 0; k < points; ++k) {
    const double sk = std::pow(10.0, -2.0 - 2.0 * k / (points - 1));
    const BallPoint eta(f.base + sk * f.normal);
    fit.s.push_back(sk);
    fit.log_abs.push_back(std::log(std::abs(theta_triple(eta, t, pol).value)));
  }
  Eigen::MatrixXd a(points, 2);
  Eigen::VectorXd y(points);
  for (int k = 0; k < points; ++k) {
    a(k, 0) = std::log(fit.s[static_cast<std::size_t>(k)]);
    a(k, 1) = 1.0;
    y(k) = fit.log_abs[static_cast<std::size_t>(k)];
  }
  const Eigen::Vector2d c = a.colPivHouseholderQr().solve(y);
  fit.slope = c(0);
  fit.residual = (a * c - y).cwiseAbs().maxCoeff();
  return fit;
}

VerificationReport verify_slopes(std::uint64_t seed, double tol, const TruncationPolicy& pol) {
  VerificationReport r = start("slope", tol);
  set_policy(r, pol);
  r.metadata["seed"] = std::to_string(seed);
  struct Case {
    TripleChar t;
    Pair p;
    double expected;
  };
  const std::vector<Case> cases = {{{3, 3, 7}, {1, 2}, 1.0}, {{1, 1, 1}, {1, 2}, 0.0}, {{1, 1, 9}, {1, 2}, 0.0},
                                   {{1, 9, 1}, {1, 2}, 0.0}, {{9, 1, 1}, {1, 2}, 0.0}, {{1, 3, 5}, {1, 2}, 0.0},
                                   {{1, 7, 5}, {1, 2}, 0.0}, {{3, 1, 5}, {3, 4}, 0.0}};
  std::vector<SlopeFit> fits(cases.size());
  parallel_for(static_cast<int>(cases.size()), [&](int i) {
    const Case& c = cases[static_cast<std::size_t>(i)];
    fits[static_cast<std::size_t>(i)] = vanishing_slope(c.t, c.p, seed, 9, pol);
  });
  for (std::size_t i = 0; i < cases.size(); ++i) {
    r.deviations.push_back(std::abs(fits[i].slope - cases[i].expected));
    r.details.push_back(cases[i].t.str() + " across l(" + cases[i].p.str() + "): slope " + fmt(fits[i].slope) +
                        " expected " + fmt(cases[i].expected) + " fit residual " + fmt(fits[i].residual));
  }
  r.samples = static_cast<int>(cases.size());
  r.finalize();
  return r;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> n = {
      "theta-constant", "group",    "characteristics", "phases",  "phases-constancy", "omega",
      "equivariance",   "sweep",    "table",           "diagram", "diagram-corrected", "final-identity",
      "gauss",          "torsion",  "appell",          "appell-exponents", "rank", "slope"};
  return n;
}

VerificationReport run_suite(const std::string& name, const RunConfig& cfg) {
  if (!(cfg.theta_tol > 0) || !(cfg.max_radius > 0) || cfg.tol < 0 || cfg.samples < 0)
    throw InvalidInput("tolerances and sample counts must be positive");
  const TruncationPolicy pol{cfg.theta_tol, cfg.max_radius};
  const auto tol = [&](double d) { return cfg.tol > 0 ? cfg.tol : d; };
  const auto n = [&](int d) { return cfg.samples > 0 ? cfg.samples : d; };
  VerificationReport r;
  if (name == "theta-constant") r = verify_theta_constant(tol(1e-3), pol);
  else if (name == "group") r = verify_group();
  else if (name == "characteristics") r = verify_characteristic_action();
  else if (name == "phases") r = verify_phase_values(phase_values_typeset());
  else if (name == "phases-constancy") r = verify_phase_constancy();
  else if (name == "omega") r = verify_omega_oracle(n(20), cfg.seed, tol(1e-8));
  else if (name == "equivariance") r = verify_equivariance(n(10), cfg.seed, tol(1e-9));
  else if (name == "sweep") r = verify_vanishing_sweep(n(20), 5, cfg.seed, tol(1e-9), {std::min(pol.tol, 1e-11), pol.max_radius});
  else if (name == "table") r = verify_vanishing_table(n(16), cfg.seed, 1e-6, 1e-2, 1e-3, pol);
  else if (name == "diagram") r = verify_diagram(n(20), cfg.seed, constants_vector(), tol(1e-6), pol);
  else if (name == "diagram-corrected") r = verify_diagram(n(20), cfg.seed, corrected_constants(), tol(1e-6), pol);
  else if (name == "final-identity") r = verify_final_identity(n(10), cfg.seed, tol(1e-6), pol);
  else if (name == "gauss") r = verify_gauss_inverse({cplx(0.3), cplx(0.7), cplx(0.5, 0.2)}, tol(1e-6), pol);
  else if (name == "torsion") r = verify_torsion(tol(1e-5));
  else if (name == "appell") r = verify_appell(AppellSystem::typeset(), 1e-3, tol(1e-4));
  else if (name == "appell-exponents") r = verify_appell(AppellSystem::from_exponents(), 1e-3, tol(1e-4));
  else if (name == "rank") r = verify_rank6(n(40), cfg.seed, 1e6, pol);
  else if (name == "slope") r = verify_slopes(cfg.seed, tol(0.05), {std::min(pol.tol, 1e-14), pol.max_radius});
  else throw InvalidInput("unknown suite: " + name);
  r.metadata["seed"] = std::to_string(cfg.seed);
  return r;
}

}  // namespace pentaperiod
