#pragma once

#include <array>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "ghostchar/algebraic.hpp"
#include "ghostchar/braid.hpp"
#include "ghostchar/poly.hpp"

namespace ghostchar {

// x[a,target] = x[over,under] * x[a,over] - x[a,under] for every spectator a.
struct RewriteRule {
  int target = 0;
  int over = 0;
  int under = 0;
  int crossing = 0;
  bool closure = false;

  std::string to_string() const;
};

// Non-closure rules by descending target, then closure rules by ascending target.
std::vector<RewriteRule> fundamental_rules(const Diagram& d);

// Instance of a rule at spectator a, as target minus replacement (diagonal entries are 2).
MultiPoly rule_instance(const RewriteRule& rule, int spectator);

struct F2Equation {
  int spectator = 0;  // equation reads x[spectator,target] = g_target(...)
  int target = 0;
  MultiPoly poly;

  std::string label() const;
};

struct F2Presentation {
  int strands = 0;
  int arcs = 0;
  std::vector<PairVar> base_vars;
  std::vector<F2Equation> equations;
  std::map<PairVar, MultiPoly> rewrite_table;  // every arc pair, in base variables
  bool symmetry_reduced = false;
  std::map<PairVar, PairVar> orbit_representative;
  std::vector<std::string> diagnostics;

  std::vector<MultiPoly> polynomials() const;
  // Rewrite of x[i,j] for any arcs, with x[i,i] = 2.
  MultiPoly rewrite(int i, int j) const;
  nlohmann::json to_json() const;
};

// Presents F2 in base variables by rewriting the open braid from the top and closing it.
F2Presentation eliminate(const Diagram& d);

// Identifies variables along orbits of the closure permutation after verifying that
// the identities x[i,j] = x[perm(i),perm(j)] lie in the ideal. On failure the input
// is returned with a diagnostic.
F2Presentation symmetry_reduce(const F2Presentation& pres, const std::vector<int>& perm);

// Values x[i,j] over all arcs in a fixed field.
template <class T>
struct ArcValues {
  int arcs = 0;
  Field<T> field;
  std::vector<T> upper;  // pairs i < j in lexicographic order

  std::size_t index(int i, int j) const {
    if (i > j) std::swap(i, j);
    // Row-major offset of (i,j) among pairs with 1 <= i < j <= arcs.
    std::size_t r = static_cast<std::size_t>(i - 1);
    return r * static_cast<std::size_t>(arcs) - r * (r + 1) / 2 + static_cast<std::size_t>(j - i - 1);
  }
  T at(int i, int j) const {
    if (i == j) return field.lift(Rational(2));
    return upper[index(i, j)];
  }
};

using FullPoint = std::variant<ArcValues<Rational>, ArcValues<QuadraticNumber>, ArcValues<BigComplex>>;

// Chooses exact rational, exact quadratic or numeric arithmetic for a base point.
// Numeric points treat values below numeric_tolerance as zero. Throws if the point
// fails an equation.
FullPoint extend_point(const F2Presentation& pres, const SolutionPoint& base,
                       double numeric_tolerance = 1e-20);

const char* arithmetic_name(const FullPoint& p);
int arc_count(const FullPoint& p);
std::complex<double> approx_value(const FullPoint& p, int i, int j);
// Exact coordinate when the point is rational or quadratic.
AlgebraicNumber coordinate(const FullPoint& p, int i, int j);
nlohmann::json to_json(const FullPoint& p);

enum class Execution { Serial, Parallel };

struct Triple {
  int a, b, c;
  std::string to_string() const;
};
std::vector<Triple> arc_triples(int arcs);

// Half the 3x3 minor of (x[i,j]) on rows I and columns J, stored upper-triangular.
template <class T>
struct HexagonMatrix {
  std::vector<Triple> triples;
  std::vector<T> upper;

  std::size_t size() const { return triples.size(); }
  std::size_t index(std::size_t I, std::size_t J) const {
    if (I > J) std::swap(I, J);
    return I * size() - I * (I + 1) / 2 + J;
  }
  const T& at(std::size_t I, std::size_t J) const { return upper[index(I, J)]; }
};

template <class T>
struct RectangleValue {
  std::array<int, 4> indices;  // rows and columns of the 4x4 minor
  T value;
};

// Stated family uses indices {1,2,a,b}, 3 <= a < b <= n; exhaustive uses every 4-subset.
template <class T>
HexagonMatrix<T> hexagon_data(const ArcValues<T>& point, Execution exec = Execution::Parallel);

template <class T>
std::vector<RectangleValue<T>> rectangle_values(const ArcValues<T>& point,
                                                Execution exec = Execution::Parallel,
                                                bool all_subsets = false);

}  // namespace ghostchar

#include "ghostchar/slice_kernels.hpp"
