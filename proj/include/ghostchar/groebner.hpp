#pragma once

#include <memory>
#include <vector>

#include "ghostchar/poly.hpp"

namespace ghostchar {

enum class MonomialOrder { Lex, GradedReverseLex };

// Reduced Groebner basis of a polynomial ideal for a fixed variable order.
// The first variable in the order is the largest.
class GroebnerBasis {
 public:
  struct Impl;

  GroebnerBasis() = default;
  explicit GroebnerBasis(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

  const std::vector<PairVar>& variables() const;
  MonomialOrder order() const;
  // Basis elements as primitive integer polynomials with positive leading coefficient, by
  // increasing leading monomial.
  const std::vector<MultiPoly>& polynomials() const;

  bool is_unit_ideal() const;
  bool is_zero_dimensional() const;
  MultiPoly normal_form(const MultiPoly& p) const;
  bool contains(const MultiPoly& p) const { return normal_form(p).is_zero(); }

  // Monic generator of the elimination ideal I cap Q[v], as coefficients c0..cd.
  // Requires a zero-dimensional ideal.
  std::vector<Rational> eliminant(const PairVar& v) const;

 const Impl* impl() const { return impl_.get(); }

 private:
  std::shared_ptr<const Impl> impl_;
};

GroebnerBasis groebner_basis(const std::vector<MultiPoly>& system,
                             const std::vector<PairVar>& variables, MonomialOrder order);

// Basis of the same zero-dimensional ideal in another order, by linear algebra on normal forms.
GroebnerBasis convert_order(const GroebnerBasis& basis, MonomialOrder target);

// Reduced lex basis, computed in graded reverse lex order and converted when zero-dimensional.
GroebnerBasis groebner_lex(const std::vector<MultiPoly>& system,
                           const std::vector<PairVar>& variables);

// Sorted list of all variables occurring in a system.
std::vector<PairVar> variables_of(const std::vector<MultiPoly>& system);

}  // namespace ghostchar
