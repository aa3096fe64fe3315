#include "ghostchar/solve.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace ghostchar {

namespace {

Real residual_of(const MultiPoly& p, const std::map<PairVar, BigComplex>& point) {
  BigComplex value;
  Real scale = 0;
  for (const auto& [mono, c] : p.terms()) {
    BigComplex t(c);
    for (const auto& [v, e] : mono) t *= pow(point.at(v), e);
    value += t;
    scale += abs(t);
  }
  if (scale == 0) return Real(0);
  return abs(value) / scale;
}

bool point_less(const SolutionPoint& a, const SolutionPoint& b) {
  for (const auto& [v, x] : a.coordinates) {
    const AlgebraicNumber& y = b.at(v);
    if (x.approx().re != y.approx().re) return x.approx().re < y.approx().re;
    if (x.approx().im != y.approx().im) return x.approx().im < y.approx().im;
  }
  return false;
}

}  // namespace

Real relative_residual(const std::vector<MultiPoly>& system,
                       const std::map<PairVar, BigComplex>& point) {
  Real worst = 0;
  for (const auto& p : system) worst = std::max<Real>(worst, residual_of(p, point));
  return worst;
}

const char* to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::Finite: return "finite";
    case SolveStatus::Empty: return "empty";
    case SolveStatus::PositiveDimensional: return "positive-dimensional";
  }
  return "unknown";
}

SolveResult solve_zero_dim(const std::vector<MultiPoly>& system, std::vector<PairVar> variables,
                           MonomialOrder order) {
  SolveResult result;
  if (variables.empty()) variables = variables_of(system);
  result.variables = variables;
  // Graded order first; lex output by order conversion.
  result.basis = groebner_basis(system, variables, MonomialOrder::GradedReverseLex);
  if (order != MonomialOrder::GradedReverseLex && result.basis.is_zero_dimensional())
    result.basis = convert_order(result.basis, order);
  if (result.basis.is_unit_ideal()) {
    result.status = SolveStatus::Empty;
    return result;
  }
  if (variables.empty()) {
    result.status = SolveStatus::Finite;
    result.points.push_back(SolutionPoint{});
    return result;
  }
  if (!result.basis.is_zero_dimensional()) {
    result.status = SolveStatus::PositiveDimensional;
    result.diagnostic = "some variable has no univariate eliminant";
    return result;
  }

  std::map<PairVar, std::vector<AlgebraicNumber>> candidates;
  for (const auto& v : variables) {
    UPoly e(result.basis.eliminant(v));
    result.eliminants[v] = e.primitive();
    candidates[v] = AlgebraicNumber::roots_of(e);
  }

  // Assign the last variable first; check basis elements once all their variables are set.
  std::vector<PairVar> sequence(variables.rbegin(), variables.rend());
  std::vector<std::vector<MultiPoly>> checks(sequence.size());
  for (const auto& g : result.basis.polynomials()) {
    auto vs = g.variables();
    std::size_t last = 0;
    for (std::size_t k = 0; k < sequence.size(); ++k)
      if (vs.count(sequence[k])) last = k;
    checks[last].push_back(g);
  }

  const Real threshold = zero_threshold();
  std::map<PairVar, BigComplex> numeric;
  std::map<PairVar, AlgebraicNumber> chosen;
  std::function<void(std::size_t)> search = [&](std::size_t level) {
    if (level == sequence.size()) {
      if (relative_residual(system, numeric) <= threshold)
        result.points.push_back(SolutionPoint{chosen});
      return;
    }
    const PairVar& v = sequence[level];
    for (const auto& cand : candidates[v]) {
      numeric[v] = cand.approx();
      bool ok = true;
      for (const auto& g : checks[level])
        if (residual_of(g, numeric) > threshold) {
          ok = false;
          break;
        }
      if (!ok) continue;
      chosen[v] = cand;
      search(level + 1);
      chosen.erase(v);
    }
    numeric.erase(v);
  };
  search(0);

  std::sort(result.points.begin(), result.points.end(), point_less);
  result.status = result.points.empty() ? SolveStatus::Empty : SolveStatus::Finite;
  return result;
}

}  // namespace ghostchar
