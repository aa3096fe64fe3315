#pragma once

#include <string>
#include <vector>

#include "ghostchar/numeric.hpp"

namespace ghostchar {

// Univariate polynomial over Q, coefficients c0, c1, ..., cd.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Rational> coeffs);
  static UPoly from_integers(const std::vector<Integer>& coeffs);
  static UPoly monomial(const Rational& c, int deg);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rational>& coefficients() const { return c_; }
  const Rational& leading() const { return c_.back(); }

  Rational operator()(const Rational& x) const;
  BigComplex operator()(const BigComplex& x) const;

  UPoly derivative() const;
  UPoly monic() const;
  // Primitive integer multiple with positive leading coefficient.
  std::vector<Integer> primitive() const;
  UPoly squarefree_part() const;

  friend UPoly operator+(const UPoly& a, const UPoly& b);
  friend UPoly operator-(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  bool operator==(const UPoly& o) const { return c_ == o.c_; }

  static void divmod(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r);
  static UPoly gcd(UPoly a, UPoly b);

  std::string to_string(const std::string& var = "z") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

struct IsolatedRoot {
  BigComplex center;
  Real radius;  // exactly one root lies in the closed disk
  bool real = false;
};

// Certified root isolation of a squarefree polynomial at the working precision.
// Throws if the inclusion disks cannot be separated.
std::vector<IsolatedRoot> isolate_roots(const UPoly& squarefree);

struct Factor {
  UPoly poly;  // primitive integer polynomial
  std::vector<IsolatedRoot> roots;
  bool irreducible = true;  // false: degree >= 10 with no factor of degree <= 4
};

// Factors a squarefree polynomial over Q into irreducibles of degree at most 4,
// with any remaining part of degree at least 5 reported as one candidate factor.
std::vector<Factor> factor_squarefree(const UPoly& squarefree);

}  // namespace ghostchar
