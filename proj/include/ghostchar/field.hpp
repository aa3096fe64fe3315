#pragma once

#include <complex>
#include <string>

#include "ghostchar/numeric.hpp"

namespace ghostchar {

// Element a + b*sqrt(d) of Q(sqrt(d)), d a squarefree integer different from 0 and 1.
class QuadraticNumber {
 public:
  QuadraticNumber() : d_(-1) {}
  QuadraticNumber(Rational a, Rational b, Integer d);

  const Rational& rational_part() const { return a_; }
  const Rational& radical_part() const { return b_; }
  const Integer& radicand() const { return d_; }

  bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
  bool is_rational() const { return sgn(b_) == 0; }
  QuadraticNumber conjugate() const { return QuadraticNumber(a_, -b_, d_); }
  Rational norm() const { return a_ * a_ - b_ * b_ * d_; }
  QuadraticNumber inverse() const;

  QuadraticNumber& operator+=(const QuadraticNumber& o);
  QuadraticNumber& operator-=(const QuadraticNumber& o);
  QuadraticNumber& operator*=(const QuadraticNumber& o);
  QuadraticNumber& operator/=(const QuadraticNumber& o) { return *this *= o.inverse(); }
  friend QuadraticNumber operator+(QuadraticNumber x, const QuadraticNumber& y) { return x += y; }
  friend QuadraticNumber operator-(QuadraticNumber x, const QuadraticNumber& y) { return x -= y; }
  friend QuadraticNumber operator*(QuadraticNumber x, const QuadraticNumber& y) { return x *= y; }
  friend QuadraticNumber operator/(QuadraticNumber x, const QuadraticNumber& y) { return x /= y; }
  QuadraticNumber operator-() const { return QuadraticNumber(-a_, -b_, d_); }
  bool operator==(const QuadraticNumber& o) const;

  BigComplex to_complex() const;
  std::string to_string() const;

 private:
  void check(const QuadraticNumber& o) const;
  Rational a_;
  Rational b_;
  Integer d_;
};

// Arithmetic context shared by the generic kernels.
template <class T>
struct Field;

template <>
struct Field<Rational> {
  static constexpr const char* name = "exact-rational";
  Rational lift(const Rational& q) const { return q; }
  bool is_zero(const Rational& x) const { return sgn(x) == 0; }
  std::complex<double> approx(const Rational& x) const { return {x.get_d(), 0.0}; }
  std::string text(const Rational& x) const { return x.get_str(); }
  bool exact() const { return true; }
};

template <>
struct Field<QuadraticNumber> {
  static constexpr const char* name = "exact-quadratic";
  Integer d;
  QuadraticNumber lift(const Rational& q) const { return QuadraticNumber(q, 0, d); }
  bool is_zero(const QuadraticNumber& x) const { return x.is_zero(); }
  std::complex<double> approx(const QuadraticNumber& x) const { return x.to_complex().to_double(); }
  std::string text(const QuadraticNumber& x) const { return x.to_string(); }
  bool exact() const { return true; }
};

template <>
struct Field<BigComplex> {
  static constexpr const char* name = "numeric";
  // Absolute threshold; values below it count as zero.
  Real tolerance;
  BigComplex lift(const Rational& q) const { return BigComplex(q); }
  bool is_zero(const BigComplex& x) const { return abs(x) <= tolerance; }
  std::complex<double> approx(const BigComplex& x) const { return x.to_double(); }
  std::string text(const BigComplex& x) const;
  bool exact() const { return false; }
};

bool is_squarefree(const Integer& d);

}  // namespace ghostchar
