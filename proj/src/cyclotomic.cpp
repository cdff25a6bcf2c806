#include "pentaperiod/cyclotomic.hpp"

#include <cmath>
#include <numbers>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace pentaperiod {

namespace {

BigInt gcd_big(BigInt a, BigInt b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    BigInt r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

int mod5(long long k) { return static_cast<int>(((k % 5) + 5) % 5); }

}  // namespace

CycInt::CycInt(BigInt c0, BigInt c1, BigInt c2, BigInt c3)
    : c_{std::move(c0), std::move(c1), std::move(c2), std::move(c3)} {}

CycInt CycInt::from_five(std::array<BigInt, 5> v) {
  // ζ⁴ = −1 − ζ − ζ² − ζ³
  return CycInt(v[0] - v[4], v[1] - v[4], v[2] - v[4], v[3] - v[4]);
}

CycInt CycInt::zeta_pow(long long k) {
  std::array<BigInt, 5> v{};
  v[static_cast<std::size_t>(mod5(k))] = 1;
  return from_five(v);
}

bool CycInt::is_zero() const {
  return c_[0] == 0 && c_[1] == 0 && c_[2] == 0 && c_[3] == 0;
}

cplx CycInt::embed() const {
  cplx s = 0.0;
  for (int k = 0; k < 4; ++k) {
    const double ang = 2.0 * std::numbers::pi * k / 5.0;
    s += static_cast<double>(c_[static_cast<std::size_t>(k)]) * cplx(std::cos(ang), std::sin(ang));
  }
  return s;
}

CycInt CycInt::galois(int k) const {
  if (mod5(k) == 0) throw std::invalid_argument("galois: exponent must be coprime to 5");
  std::array<BigInt, 5> v{};
  for (int j = 0; j < 4; ++j) v[static_cast<std::size_t>(mod5(static_cast<long long>(j) * k))] += c_[static_cast<std::size_t>(j)];
  return from_five(v);
}

BigInt CycInt::norm() const {
  CycInt p = *this * galois(2) * galois(3) * galois(4);
  return p[0];
}

int CycInt::residue_mod_one_minus_zeta() const {
  BigInt s = (c_[0] + c_[1] + c_[2] + c_[3]) % 5;
  if (s < 0) s += 5;
  return static_cast<int>(s);
}

BigInt CycInt::content() const {
  BigInt g = 0;
  for (const auto& c : c_) g = gcd_big(g, c);
  return g;
}

CycInt& CycInt::operator+=(const CycInt& o) {
  for (std::size_t i = 0; i < 4; ++i) c_[i] += o.c_[i];
  return *this;
}

CycInt& CycInt::operator-=(const CycInt& o) {
  for (std::size_t i = 0; i < 4; ++i) c_[i] -= o.c_[i];
  return *this;
}

CycInt& CycInt::operator*=(const CycInt& o) {
  std::array<BigInt, 5> v{};
  for (std::size_t i = 0; i < 4; ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < 4; ++j) v[(i + j) % 5] += c_[i] * o.c_[j];
  }
  *this = from_five(v);
  return *this;
}

CycInt CycInt::operator-() const { return CycInt(-c_[0], -c_[1], -c_[2], -c_[3]); }

CycInt CycInt::div_exact(const BigInt& d) const {
  return CycInt(c_[0] / d, c_[1] / d, c_[2] / d, c_[3] / d);
}

std::string CycInt::str() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

bool divisible_by_one_minus_zeta(const CycInt& x) { return x.residue_mod_one_minus_zeta() == 0; }

CycNum::CycNum(CycInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_ == 0) throw std::domain_error("CycNum: zero denominator");
  reduce();
}

void CycNum::reduce() {
  if (den_ < 0) {
    den_ = -den_;
    num_ = -num_;
  }
  BigInt g = gcd_big(num_.content(), den_);
  if (num_.is_zero()) g = den_;
  if (g > 1) {
    num_ = num_.div_exact(g);
    den_ /= g;
  }
}

cplx CycNum::embed() const { return num_.embed() / static_cast<double>(den_); }

CycNum CycNum::inverse() const {
  if (num_.is_zero()) throw std::domain_error("CycNum: division by zero");
  CycInt others = num_.galois(2) * num_.galois(3) * num_.galois(4);
  BigInt n = (num_ * others)[0];
  return CycNum(others * CycInt(den_, 0, 0, 0), n);
}

CycNum& CycNum::operator+=(const CycNum& o) {
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * CycInt(o.den_, 0, 0, 0) + o.num_ * CycInt(den_, 0, 0, 0);
    den_ *= o.den_;
  }
  reduce();
  return *this;
}

CycNum& CycNum::operator-=(const CycNum& o) { return *this += -o; }

CycNum& CycNum::operator*=(const CycNum& o) {
  num_ *= o.num_;
  den_ *= o.den_;
  reduce();
  return *this;
}

std::string CycNum::str() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const CycInt& x) {
  static const char* basis[4] = {"", "z", "z^2", "z^3"};
  bool first = true;
  for (int k = 0; k < 4; ++k) {
    const BigInt& c = x[k];
    if (c == 0) continue;
    if (!first) os << (c > 0 ? " + " : " - ");
    else if (c < 0) os << "-";
    BigInt a = c < 0 ? BigInt(-c) : c;
    if (k == 0) os << a;
    else {
      if (a != 1) os << a << "*";
      os << basis[k];
    }
    first = false;
  }
  if (first) os << "0";
  return os;
}

std::ostream& operator<<(std::ostream& os, const CycNum& x) {
  if (x.is_integral()) return os << x.numerator();
  return os << "(" << x.numerator() << ")/" << x.denominator();
}

CycMatrix3 identity3() {
  CycMatrix3 m;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m(i, j) = CycNum(i == j ? 1 : 0);
  return m;
}

CycMatrix3 mat_pow(const CycMatrix3& m, int n) {
  if (n < 0) return mat_pow(inverse(m), -n);
  CycMatrix3 result = identity3();
  CycMatrix3 base = m;
  while (n > 0) {
    if (n & 1) result = matmul(result, base);
    n >>= 1;
    if (n > 0) base = matmul(base, base);
  }
  return result;
}

CycNum determinant(const CycMatrix3& m) {
  return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
         m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
         m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
}

CycMatrix3 inverse(const CycMatrix3& m) {
  CycNum det = determinant(m);
  if (det.is_zero()) throw std::domain_error("inverse: singular matrix");
  CycNum inv = det.inverse();
  CycMatrix3 adj;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const int r0 = (j + 1) % 3, r1 = (j + 2) % 3;
      const int c0 = (i + 1) % 3, c1 = (i + 2) % 3;
      adj(i, j) = (m(r0, c0) * m(r1, c1) - m(r0, c1) * m(r1, c0)) * inv;
    }
  return adj;
}

bool equal(const CycMatrix3& a, const CycMatrix3& b) {
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (a(i, j) != b(i, j)) return false;
  return true;
}

bool congruent_identity_mod_one_minus_zeta(const CycMatrix3& m) {
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      CycNum d = m(i, j) - CycNum(i == j ? 1 : 0);
      if (!d.is_integral() || !divisible_by_one_minus_zeta(d.numerator())) return false;
    }
  return true;
}

}  // namespace pentaperiod
