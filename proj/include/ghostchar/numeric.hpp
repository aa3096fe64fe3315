#pragma once

#include <complex>
#include <string>

#include <boost/multiprecision/mpfr.hpp>
#include <gmpxx.h>

namespace ghostchar {

using Integer = mpz_class;
using Rational = mpq_class;
using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                           boost::multiprecision::et_off>;

// Global working precision for Real. Set once before any parallel region.
void set_working_precision(unsigned bits);
unsigned working_precision();

// Relative threshold below which a numerically evaluated quantity is treated as zero.
Real zero_threshold();

Real to_real(const Rational& q);
Real to_real(const Integer& z);
// Nearest integer, ties away from zero.
Integer round_to_integer(const Real& x);
std::string to_string(const Rational& q);
Rational parse_rational(const std::string& text);

struct BigComplex {
  Real re;
  Real im;

  BigComplex() : re(0), im(0) {}
  BigComplex(const Real& r) : re(r), im(0) {}
  BigComplex(const Real& r, const Real& i) : re(r), im(i) {}
  explicit BigComplex(const Rational& q) : re(to_real(q)), im(0) {}
  explicit BigComplex(std::complex<double> z) : re(z.real()), im(z.imag()) {}

  BigComplex& operator+=(const BigComplex& o) { re += o.re; im += o.im; return *this; }
  BigComplex& operator-=(const BigComplex& o) { re -= o.re; im -= o.im; return *this; }
  BigComplex& operator*=(const BigComplex& o);
  BigComplex& operator/=(const BigComplex& o);

  friend BigComplex operator+(BigComplex a, const BigComplex& b) { return a += b; }
  friend BigComplex operator-(BigComplex a, const BigComplex& b) { return a -= b; }
  friend BigComplex operator*(BigComplex a, const BigComplex& b) { return a *= b; }
  friend BigComplex operator/(BigComplex a, const BigComplex& b) { return a /= b; }
  BigComplex operator-() const { return BigComplex(-re, -im); }

  BigComplex conj() const { return BigComplex(re, -im); }
  Real norm() const { return re * re + im * im; }
  std::complex<double> to_double() const {
    return {static_cast<double>(re), static_cast<double>(im)};
  }
};

Real abs(const BigComplex& z);
BigComplex sqrt(const BigComplex& z);
BigComplex pow(const BigComplex& z, unsigned e);

}  // namespace ghostchar
