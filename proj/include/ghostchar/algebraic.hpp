#pragma once

#include <map>
#include <optional>
#include <vector>

#include <json.hpp>

#include "ghostchar/field.hpp"
#include "ghostchar/poly.hpp"
#include "ghostchar/upoly.hpp"

namespace ghostchar {

// Algebraic number given by an integer minimal polynomial and an isolating disk.
class AlgebraicNumber {
 public:
  AlgebraicNumber() = default;
  AlgebraicNumber(std::vector<Integer> minpoly, BigComplex approx, Real radius, bool certified);

  static AlgebraicNumber rational(const Rational& q);
  static AlgebraicNumber from_quadratic(const QuadraticNumber& x);
  // Every root of p, grouped by irreducible factor.
  static std::vector<AlgebraicNumber> roots_of(const UPoly& p);

  const std::vector<Integer>& minpoly() const { return minpoly_; }
  const BigComplex& approx() const { return approx_; }
  const Real& radius() const { return radius_; }
  // False when the polynomial is only a candidate (unfactored part of degree >= 10).
  bool certified_minimal() const { return certified_; }
  int degree() const { return static_cast<int>(minpoly_.size()) - 1; }

  bool is_rational() const { return degree() == 1; }
  Rational rational_value() const;
  std::optional<QuadraticNumber> as_quadratic() const;
  bool is_real() const { return approx_.im == 0; }

  std::string minpoly_string(const std::string& var = "z") const;
  std::string to_string() const;
  nlohmann::json to_json() const;
  static AlgebraicNumber from_json(const nlohmann::json& j);

 private:
  std::vector<Integer> minpoly_;
  BigComplex approx_;
  Real radius_ = 0;
  bool certified_ = true;
};

// Squarefree decomposition d = f^2 * core with core squarefree.
void square_decompose(const Integer& d, Integer& f, Integer& core);

struct SolutionPoint {
  std::map<PairVar, AlgebraicNumber> coordinates;

  const AlgebraicNumber& at(const PairVar& v) const;
  nlohmann::json to_json() const;
  static SolutionPoint from_json(const nlohmann::json& j);
};

}  // namespace ghostchar
