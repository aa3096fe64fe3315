#pragma once

#include <complex>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "ghostchar/cover.hpp"
#include "ghostchar/slice.hpp"

namespace ghostchar {

template <class T>
struct Mat2 {
  T a, b, c, d;

  static Mat2 identity() { return {T(1), T(0), T(0), T(1)}; }
  T trace() const { return a + d; }
  T det() const { return a * d - b * c; }
  Mat2 inverse() const {
    T dt = det();
    return {d / dt, -b / dt, -c / dt, a / dt};
  }
  friend Mat2 operator*(const Mat2& x, const Mat2& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
  }
  friend Mat2 operator-(const Mat2& x, const Mat2& y) { return {x.a - y.a, x.b - y.b, x.c - y.c, x.d - y.d}; }
};

using Complex = std::complex<double>;
using Mat2d = Mat2<Complex>;

// Largest singular value of a 2x2 complex matrix.
double operator_norm(const Mat2d& m);

// Assignment of SL2 matrices to the cover generators, keyed by generator name.
struct Representation {
  std::map<std::string, Mat2d> matrices;
  double tolerance = 1e-9;

  nlohmann::json to_json() const;
  static Representation from_json(const nlohmann::json& j);
};

Mat2d evaluate(const CoverPresentation& pres, const Representation& rep, const GroupWord& word);

// Largest operator-norm distance from the identity over all relators.
double verify(const CoverPresentation& pres, const Representation& rep);

// Largest |det - 1| over the assigned matrices.
double det_defect(const Representation& rep);

std::map<std::string, Complex> traces(const CoverPresentation& pres, const Representation& rep,
                                      const std::vector<GroupWord>& words);

// Trace of m_i m_j in the cover, via m_i m_j = x_i^-1 x_j with the base generator trivial.
Complex pair_trace(const CoverPresentation& pres, const Representation& rep, int i, int j);

struct SnappedPoint {
  SolutionPoint point;                        // base variables of the presentation
  std::map<PairVar, Complex> raw_traces;      // every pair among the strands
  std::map<PairVar, AlgebraicNumber> snapped;
  double max_snap_error = 0;
  bool satisfies_equations = false;
  std::string diagnostic;
};

// Snaps to a rational with denominator <= 64, else a quadratic irrationality a z^2 + b z + c,
// within `tolerance`.
std::optional<AlgebraicNumber> snap_value(Complex value, double tolerance = 1e-9);

// Pair traces of a verified cover representation as a point of the F2 presentation.
SnappedPoint rep_to_f2_point(const Representation& rep, const CoverPresentation& cover,
                             const F2Presentation& pres);

struct TraceFreeCharacter {
  std::map<PairVar, Complex> pairs;
  std::map<std::array<int, 3>, Complex> triples;
};

struct CoverCharacterCoordinates {
  std::map<PairVar, Complex> z_pairs;
  std::map<std::array<int, 4>, Complex> z_quads;  // keys (1,c,d,e)
};

// z_ab = x_ab and z_1cde = (x_1c x_de + x_1e x_cd - x_1d x_ce) / 2 over all 1 < c < d < e <= n.
CoverCharacterCoordinates phi_hat(const TraceFreeCharacter& chi, int arcs);

// |tr(AB) - tr(A) tr(B) + tr(AB^-1)|
double trace_identity_check(const Mat2d& a, const Mat2d& b);

// Representations of the torus knot T(4,5) cover group built from exact minimal polynomials.
namespace t45 {
// Non-abelian representation through the ghost character; root selects the root of 2t^2 + t + 2.
Representation ghost_representation(int root = 0);
// Same with (i + 2 alpha)/3 as the (1,2) entry of the third matrix; the relators fail.
Representation ghost_representation_as_printed(int root = 0);
// x, z diagonal with fifth roots of unity, y trivial; k = 0..4.
Representation diagonal_representation(int k);
// Reducible family through the points ((3 +- sqrt 5)/2, 1 +- sqrt 5); root selects a root of
// t^4 + 4 t^2 - 176.
Representation beta_representation(int root);
}  // namespace t45

}  // namespace ghostchar
