#include "ghostchar/numeric.hpp"

#include <atomic>
#include <cmath>
#include <stdexcept>

namespace ghostchar {

namespace {
std::atomic<unsigned> g_bits{0};

unsigned ensure_precision();
[[maybe_unused]] const bool g_initialized = (ensure_precision(), true);

unsigned ensure_precision() {
  unsigned bits = g_bits.load();
  if (bits == 0) {
    set_working_precision(256);
    bits = g_bits.load();
  }
  return bits;
}
}  // namespace

void set_working_precision(unsigned bits) {
  if (bits < 64) throw std::invalid_argument("working precision must be at least 64 bits");
  unsigned digits = static_cast<unsigned>(std::ceil(bits * 0.30102999566398120));
  Real::default_precision(digits);
  g_bits.store(bits);
}

unsigned working_precision() { return ensure_precision(); }

Real zero_threshold() {
  unsigned bits = ensure_precision();
  Real t = 2;
  return boost::multiprecision::pow(t, -static_cast<int>(bits * 5 / 8));
}

Real to_real(const Rational& q) {
  ensure_precision();
  Real r;
  mpfr_set_q(r.backend().data(), q.get_mpq_t(), MPFR_RNDN);
  return r;
}

Integer round_to_integer(const Real& x) {
  Integer z;
  mpfr_get_z(z.get_mpz_t(), x.backend().data(), MPFR_RNDNA);
  return z;
}

Real to_real(const Integer& z) {
  ensure_precision();
  Real r;
  mpfr_set_z(r.backend().data(), z.get_mpz_t(), MPFR_RNDN);
  return r;
}

std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(const std::string& text) {
  Rational q;
  if (q.set_str(text, 10) != 0) throw std::invalid_argument("bad rational: " + text);
  q.canonicalize();
  return q;
}

BigComplex& BigComplex::operator*=(const BigComplex& o) {
  Real r = re * o.re - im * o.im;
  Real i = re * o.im + im * o.re;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

BigComplex& BigComplex::operator/=(const BigComplex& o) {
  Real den = o.norm();
  if (den == 0) throw std::domain_error("complex division by zero");
  Real r = (re * o.re + im * o.im) / den;
  Real i = (im * o.re - re * o.im) / den;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

Real abs(const BigComplex& z) { return boost::multiprecision::sqrt(z.norm()); }

BigComplex sqrt(const BigComplex& z) {
  Real r = abs(z);
  if (r == 0) return BigComplex();
  Real a = boost::multiprecision::sqrt((r + z.re) / 2);
  Real b = boost::multiprecision::sqrt((r - z.re) / 2);
  if (z.im < 0) b = -b;
  return BigComplex(a, b);
}

BigComplex pow(const BigComplex& z, unsigned e) {
  BigComplex result(Real(1));
  BigComplex base = z;
  while (e) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e) base *= base;
  }
  return result;
}

}  // namespace ghostchar
