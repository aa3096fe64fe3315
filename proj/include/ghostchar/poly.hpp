#pragma once

#include <compare>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "ghostchar/field.hpp"

namespace ghostchar {

// Trace variable x[i,j] of the pair (i,j), stored with i < j.
struct PairVar {
  int i = 0;
  int j = 0;

  PairVar() = default;
  PairVar(int a, int b);

  auto operator<=>(const PairVar&) const = default;
  std::string to_string() const;
};

// Exponent vector stored sparsely and sorted by variable.
using Monomial = std::vector<std::pair<PairVar, unsigned>>;

// Lexicographic comparison with x[1,2] > x[1,3] > ... > x[2,3] > ...
int lex_compare(const Monomial& a, const Monomial& b);
unsigned degree(const Monomial& m);

struct LexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const { return lex_compare(a, b) > 0; }
};

// Sparse polynomial with rational coefficients in the pair variables.
class MultiPoly {
 public:
  using TermMap = std::map<Monomial, Rational, LexGreater>;

  MultiPoly() = default;
  MultiPoly(const Rational& c);
  MultiPoly(long c) : MultiPoly(Rational(c)) {}

  static MultiPoly variable(PairVar v);
  // x[i,j], with the diagonal value x[i,i] = 2.
  static MultiPoly pair(int i, int j);
  static MultiPoly from_terms(TermMap terms);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_term() const;
  const Rational& leading_coefficient() const;
  unsigned total_degree() const;
  std::set<PairVar> variables() const;
  std::size_t size() const { return terms_.size(); }

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const Rational& c);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
  MultiPoly operator-() const;
  MultiPoly pow(unsigned e) const;
  bool operator==(const MultiPoly& o) const { return terms_ == o.terms_; }

  // Ring homomorphism sending each listed variable to a polynomial.
  MultiPoly substitute(const std::map<PairVar, MultiPoly>& values) const;

  // Evaluates in a field; value_of maps each variable to a field element.
  template <class T, class F>
  T evaluate(const Field<T>& field, F&& value_of) const;

  // Primitive integer multiple with positive leading coefficient.
  MultiPoly canonical() const;

  std::string to_string() const;
  static MultiPoly parse(std::string_view text,
                         const std::map<std::string, PairVar>& aliases = {});
  nlohmann::json to_json() const;
  static MultiPoly from_json(const nlohmann::json& j);

 private:
  void add_term(const Monomial& m, const Rational& c);
  TermMap terms_;
};

std::ostream& operator<<(std::ostream& os, const MultiPoly& p);

// Determinant by cofactor expansion, sizes 1 to 4.
MultiPoly det(const std::vector<std::vector<MultiPoly>>& matrix);

template <class T>
T det_cofactor(const std::vector<std::vector<T>>& a);

template <class T, class F>
T MultiPoly::evaluate(const Field<T>& field, F&& value_of) const {
  std::map<PairVar, std::vector<T>> powers;
  T sum = field.lift(Rational(0));
  for (const auto& [mono, coeff] : terms_) {
    T term = field.lift(coeff);
    for (const auto& [v, e] : mono) {
      auto& table = powers[v];
      if (table.empty()) {
        table.push_back(field.lift(Rational(1)));
        table.push_back(value_of(v));
      }
      while (table.size() <= e) table.push_back(table.back() * table[1]);
      term = term * table[e];
    }
    sum = sum + term;
  }
  return sum;
}

template <class T>
T det_cofactor(const std::vector<std::vector<T>>& a) {
  const std::size_t n = a.size();
  if (n == 1) return a[0][0];
  if (n == 2) return a[0][0] * a[1][1] - a[0][1] * a[1][0];
  T total = a[0][0] - a[0][0];
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<std::vector<T>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<T> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(a[r][k]);
      minor.push_back(std::move(row));
    }
    T term = a[0][c] * det_cofactor(minor);
    if (c % 2 == 0)
      total = total + term;
    else
      total = total - term;
  }
  return total;
}

}  // namespace ghostchar
