#pragma once

#include <string>
#include <vector>

#include "ghostchar/algebraic.hpp"
#include "ghostchar/groebner.hpp"

namespace ghostchar {

enum class SolveStatus { Finite, Empty, PositiveDimensional };

struct SolveResult {
  SolveStatus status = SolveStatus::Empty;
  std::vector<PairVar> variables;
  GroebnerBasis basis;
  // Per-variable generator of the elimination ideal, primitive integer form.
  std::map<PairVar, std::vector<Integer>> eliminants;
  std::vector<SolutionPoint> points;
  std::string diagnostic;
};

// Isolated points of a zero-dimensional system over Q, multiplicities discarded.
// Variables default to those occurring in the system, in sorted order.
SolveResult solve_zero_dim(const std::vector<MultiPoly>& system,
                           std::vector<PairVar> variables = {},
                           MonomialOrder order = MonomialOrder::Lex);

// Largest relative residual |p(x)| / sum |c_m x^m| over the system at a numeric point.
Real relative_residual(const std::vector<MultiPoly>& system,
                       const std::map<PairVar, BigComplex>& point);

const char* to_string(SolveStatus s);

}  // namespace ghostchar
