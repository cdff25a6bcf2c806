#pragma once

#include <array>
#include <complex>
#include <iosfwd>
#include <string>

#include <Eigen/Core>
#include <boost/multiprecision/cpp_int.hpp>

namespace pentaperiod {

using BigInt = boost::multiprecision::cpp_int;
using cplx = std::complex<double>;

/// Element c0 + c1 ζ + c2 ζ² + c3 ζ³ of Z[ζ], ζ = exp(2πi/5).
class CycInt {
public:
  CycInt() = default;
  CycInt(long long c0) : c_{BigInt(c0), 0, 0, 0} {}
  CycInt(BigInt c0, BigInt c1, BigInt c2, BigInt c3);

  /// ζ^k for any integer k.
  static CycInt zeta_pow(long long k);
  static CycInt zeta() { return zeta_pow(1); }

  const BigInt& operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }
  const std::array<BigInt, 4>& coeffs() const { return c_; }

  bool is_zero() const;
  cplx embed() const;

  /// Galois automorphism ζ ↦ ζ^k, k coprime to 5.
  CycInt galois(int k) const;
  CycInt conj() const { return galois(4); }

  /// Field norm, the product of all four Galois conjugates (a rational integer).
  BigInt norm() const;

  /// Image in Z/5 under ζ ↦ 1.
  int residue_mod_one_minus_zeta() const;

  /// Gcd of the four coefficients (nonnegative).
  BigInt content() const;

  CycInt& operator+=(const CycInt& o);
  CycInt& operator-=(const CycInt& o);
  CycInt& operator*=(const CycInt& o);
  CycInt operator-() const;

  friend CycInt operator+(CycInt a, const CycInt& b) { return a += b; }
  friend CycInt operator-(CycInt a, const CycInt& b) { return a -= b; }
  friend CycInt operator*(CycInt a, const CycInt& b) { return a *= b; }
  friend bool operator==(const CycInt& a, const CycInt& b) { return a.c_ == b.c_; }

  /// Exact division by a rational integer; the caller guarantees divisibility.
  CycInt div_exact(const BigInt& d) const;

  std::string str() const;

private:
  static CycInt from_five(std::array<BigInt, 5> v);
  std::array<BigInt, 4> c_{};
};

bool divisible_by_one_minus_zeta(const CycInt& x);

/// Element of Q(ζ) as numerator / denominator with a positive reduced denominator.
class CycNum {
public:
  CycNum() = default;
  CycNum(int v) : num_(v) {}
  CycNum(long long v) : num_(v) {}
  CycNum(CycInt num) : num_(std::move(num)) {}
  CycNum(CycInt num, BigInt den);

  static CycNum zeta_pow(long long k) { return CycNum(CycInt::zeta_pow(k)); }
  static CycNum zeta() { return zeta_pow(1); }

  const CycInt& numerator() const { return num_; }
  const BigInt& denominator() const { return den_; }
  bool is_integral() const { return den_ == 1; }
  bool is_zero() const { return num_.is_zero(); }

  cplx embed() const;
  CycNum conj() const { return CycNum(num_.conj(), den_); }
  CycNum galois(int k) const { return CycNum(num_.galois(k), den_); }
  CycNum inverse() const;

  CycNum& operator+=(const CycNum& o);
  CycNum& operator-=(const CycNum& o);
  CycNum& operator*=(const CycNum& o);
  CycNum& operator/=(const CycNum& o) { return *this *= o.inverse(); }
  CycNum operator-() const { return CycNum(-num_, den_); }

  friend CycNum operator+(CycNum a, const CycNum& b) { return a += b; }
  friend CycNum operator-(CycNum a, const CycNum& b) { return a -= b; }
  friend CycNum operator*(CycNum a, const CycNum& b) { return a *= b; }
  friend CycNum operator/(CycNum a, const CycNum& b) { return a /= b; }
  friend bool operator==(const CycNum& a, const CycNum& b) {
    return a.den_ == b.den_ && a.num_ == b.num_;
  }
  friend bool operator!=(const CycNum& a, const CycNum& b) { return !(a == b); }

  std::string str() const;

private:
  void reduce();
  CycInt num_{};
  BigInt den_{1};
};

std::ostream& operator<<(std::ostream& os, const CycInt& x);
std::ostream& operator<<(std::ostream& os, const CycNum& x);

inline cplx embed(const CycNum& x) { return x.embed(); }
inline CycNum conj(const CycNum& x) { return x.conj(); }

}  // namespace pentaperiod

namespace Eigen {
template <>
struct NumTraits<pentaperiod::CycNum> : GenericNumTraits<pentaperiod::CycNum> {
  using Real = pentaperiod::CycNum;
  using NonInteger = pentaperiod::CycNum;
  using Literal = pentaperiod::CycNum;
  using Nested = pentaperiod::CycNum;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 16,
    MulCost = 64
  };
  static inline int digits10() { return 0; }
};
}  // namespace Eigen

namespace pentaperiod {

template <int R, int C>
using CycMatrixN = Eigen::Matrix<CycNum, R, C>;
using CycMatrix = Eigen::Matrix<CycNum, Eigen::Dynamic, Eigen::Dynamic>;
using CycMatrix3 = Eigen::Matrix<CycNum, 3, 3>;
using CycVector3 = Eigen::Matrix<CycNum, 3, 1>;

/// Entrywise complex embedding.
template <typename Derived>
Eigen::Matrix<cplx, Derived::RowsAtCompileTime, Derived::ColsAtCompileTime>
embed(const Eigen::MatrixBase<Derived>& m) {
  return m.unaryExpr([](const CycNum& x) { return x.embed(); });
}

/// Entrywise conjugate transpose over Q(ζ).
template <typename Derived>
Eigen::Matrix<CycNum, Derived::ColsAtCompileTime, Derived::RowsAtCompileTime>
conj_transpose(const Eigen::MatrixBase<Derived>& m) {
  return m.transpose().unaryExpr([](const CycNum& x) { return x.conj(); });
}

/// Exact product, evaluated without Eigen's blocked kernels.
template <typename DA, typename DB>
Eigen::Matrix<CycNum, DA::RowsAtCompileTime, DB::ColsAtCompileTime>
matmul(const Eigen::MatrixBase<DA>& a, const Eigen::MatrixBase<DB>& b) {
  Eigen::Matrix<CycNum, DA::RowsAtCompileTime, DB::ColsAtCompileTime> out(a.rows(), b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < b.cols(); ++j) {
      CycNum s(0);
      for (Eigen::Index k = 0; k < a.cols(); ++k) s += a(i, k) * b(k, j);
      out(i, j) = s;
    }
  return out;
}

CycMatrix3 identity3();
CycMatrix3 mat_pow(const CycMatrix3& m, int n);
CycMatrix3 inverse(const CycMatrix3& m);
CycNum determinant(const CycMatrix3& m);
bool equal(const CycMatrix3& a, const CycMatrix3& b);

/// True iff every entry of m − I is integral and lies in (1−ζ)Z[ζ].
bool congruent_identity_mod_one_minus_zeta(const CycMatrix3& m);

}  // namespace pentaperiod
