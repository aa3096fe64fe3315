#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ghostchar/slice.hpp"
#include "ghostchar/solve.hpp"

namespace ghostchar {

// Field element rendered for reports.
struct ScalarValue {
  std::string text;
  std::complex<double> approx;
  bool exact = false;

  nlohmann::json to_json() const;
};

// Assignment x_I = coefficient_I * sqrt(radicand) solving x_I x_J = D[I][J].
template <class T>
struct HexagonOutcome {
  bool feasible = true;
  std::optional<std::size_t> pivot;
  std::optional<T> radicand;
  std::vector<T> coefficients;
  std::optional<std::pair<std::size_t, std::size_t>> failure;
};

template <class T>
HexagonOutcome<T> hexagon_consistent(const HexagonMatrix<T>& d, const Field<T>& field,
                                     Execution exec = Execution::Parallel);

enum class Verdict { Lifts, Ghost };
const char* to_string(Verdict v);

struct FailingRectangle {
  std::array<int, 4> indices;
  ScalarValue value;
};

struct HexagonFailure {
  Triple pivot;
  Triple first;
  Triple second;
  ScalarValue determinant;  // D[I][J] of the failing pair
  ScalarValue product;      // D[P][I] D[P][J] / D[P][P]
};

struct LiftCertificate {
  Verdict verdict = Verdict::Lifts;
  std::string arithmetic;
  std::vector<FailingRectangle> failing_rectangles;
  bool hexagon_feasible = true;
  std::optional<ScalarValue> witness_radicand;
  std::vector<std::pair<Triple, ScalarValue>> witness;  // coefficient of sqrt(radicand)
  std::optional<HexagonFailure> hexagon_failure;
  std::size_t rectangles_checked = 0;

  nlohmann::json to_json(bool include_witness = true) const;
};

struct ClassifyOptions {
  bool all_rectangles = false;
  Execution execution = Execution::Parallel;
  double numeric_tolerance = 1e-20;
};

LiftCertificate classify_full_point(const FullPoint& point, const ClassifyOptions& opts = {});
LiftCertificate classify_point(const F2Presentation& pres, const SolutionPoint& base,
                               const ClassifyOptions& opts = {});

struct FindOptions {
  bool symmetry = true;
  ClassifyOptions classify;
};

struct ClassifiedPoint {
  SolutionPoint base;
  LiftCertificate certificate;
};

struct GhostReport {
  BraidWord braid;
  Diagram diagram;
  F2Presentation presentation;
  SolveResult solution;
  std::vector<ClassifiedPoint> points;

  std::size_t ghost_count() const;
};

GhostReport find_ghosts(const BraidWord& braid, const FindOptions& opts = {});

template <class T>
HexagonOutcome<T> hexagon_consistent(const HexagonMatrix<T>& d, const Field<T>& field, Execution exec) {
  HexagonOutcome<T> out;
  const std::size_t n = d.size();
  for (std::size_t I = 0; I < n; ++I)
    if (!field.is_zero(d.at(I, I))) {
      out.pivot = I;
      break;
    }
  if (!out.pivot) {
    for (std::size_t k = 0; k < d.upper.size(); ++k)
      if (!field.is_zero(d.upper[k])) {
        out.feasible = false;
        for (std::size_t I = 0; I < n && !out.failure; ++I)
          for (std::size_t J = I; J < n; ++J)
            if (d.index(I, J) == k) {
              out.failure = std::make_pair(I, J);
              break;
            }
        return out;
      }
    out.radicand = field.lift(Rational(0));
    out.coefficients.assign(n, field.lift(Rational(0)));
    return out;
  }
  const std::size_t p = *out.pivot;
  const T& dpp = d.at(p, p);
  out.radicand = dpp;
  out.coefficients.reserve(n);
  for (std::size_t J = 0; J < n; ++J) out.coefficients.push_back(d.at(p, J) / dpp);

  // x_J x_K = c_J c_K dpp must equal D[J][K]; compare D[P][J] D[P][K] with D[J][K] D[P][P].
  const long rows = static_cast<long>(n);
  long first_bad = rows;
#pragma omp parallel for schedule(dynamic, 8) if (exec == Execution::Parallel)
  for (long J = 0; J < rows; ++J) {
    bool bad = false;
    for (std::size_t K = static_cast<std::size_t>(J); K < n && !bad; ++K) {
      T lhs = d.at(p, static_cast<std::size_t>(J)) * d.at(p, K);
      T rhs = d.at(static_cast<std::size_t>(J), K) * dpp;
      if (!field.is_zero(lhs - rhs)) bad = true;
    }
    if (bad) {
#pragma omp critical(hexagon_first_bad)
      first_bad = std::min(first_bad, J);
    }
  }
  if (first_bad < rows) {
    const std::size_t J = static_cast<std::size_t>(first_bad);
    for (std::size_t K = J; K < n; ++K) {
      T lhs = d.at(p, J) * d.at(p, K);
      T rhs = d.at(J, K) * dpp;
      if (!field.is_zero(lhs - rhs)) {
        out.feasible = false;
        out.failure = std::make_pair(J, K);
        break;
      }
    }
  }
  return out;
}

}  // namespace ghostchar
