#include "ghostchar/field.hpp"

#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace ghostchar {

bool is_squarefree(const Integer& d) {
  Integer n = abs(d);
  if (n == 0) return false;
  for (Integer p = 2; p * p <= n; ++p) {
    if (n % (p * p) == 0) return false;
  }
  return true;
}

QuadraticNumber::QuadraticNumber(Rational a, Rational b, Integer d)
    : a_(std::move(a)), b_(std::move(b)), d_(std::move(d)) {
  if (d_ == 0 || d_ == 1) throw std::invalid_argument("radicand must differ from 0 and 1");
  a_.canonicalize();
  b_.canonicalize();
}

void QuadraticNumber::check(const QuadraticNumber& o) const {
  if (d_ != o.d_) throw std::invalid_argument("mixed quadratic fields");
}

QuadraticNumber QuadraticNumber::inverse() const {
  Rational n = norm();
  if (sgn(n) == 0) throw std::domain_error("inverse of zero in quadratic field");
  return QuadraticNumber(a_ / n, -b_ / n, d_);
}

QuadraticNumber& QuadraticNumber::operator+=(const QuadraticNumber& o) {
  check(o);
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

QuadraticNumber& QuadraticNumber::operator-=(const QuadraticNumber& o) {
  check(o);
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

QuadraticNumber& QuadraticNumber::operator*=(const QuadraticNumber& o) {
  check(o);
  Rational a = a_ * o.a_ + b_ * o.b_ * d_;
  Rational b = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  return *this;
}

bool QuadraticNumber::operator==(const QuadraticNumber& o) const {
  return d_ == o.d_ && a_ == o.a_ && b_ == o.b_;
}

BigComplex QuadraticNumber::to_complex() const {
  Real root = boost::multiprecision::sqrt(to_real(Integer(abs(d_))));
  if (d_ > 0) return BigComplex(to_real(a_) + to_real(b_) * root);
  return BigComplex(to_real(a_), to_real(b_) * root);
}

std::string QuadraticNumber::to_string() const {
  if (sgn(b_) == 0) return a_.get_str();
  std::string radical = "sqrt(" + d_.get_str() + ")";
  std::string coeff;
  Rational mag = abs(b_);
  if (mag != 1) coeff = mag.get_str() + "*";
  if (sgn(a_) == 0) return (sgn(b_) < 0 ? "-" : "") + coeff + radical;
  return a_.get_str() + (sgn(b_) < 0 ? " - " : " + ") + coeff + radical;
}

std::string Field<BigComplex>::text(const BigComplex& x) const {
  std::ostringstream os;
  os << std::setprecision(30) << x.re << (x.im < 0 ? " - " : " + ")
     << boost::multiprecision::abs(x.im) << "*I";
  return os.str();
}

}  // namespace ghostchar
