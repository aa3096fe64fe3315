// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include <algorithm>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <set>
#include <sstream>

#include "corpus.hpp"
#include "ghostchar/groebner.hpp"

using namespace ghostchar;

namespace {

const PairVar kA(1, 2), kB(1, 3);

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (!pass) detail << "; ";
      pass = false;
      detail << what;
    }
  }
};

MultiPoly P(const std::string& s) { return MultiPoly::parse(s, {{"a", kA}, {"b", kB}}); }

// Right-hand sides of the reduced torus(4,5) equations and the values they take.
struct ReducedEquation {
  MultiPoly rhs;
  MultiPoly lhs;
};

std::vector<ReducedEquation> reduced_equations() {
  return {{P("a^5 - 4*a^3*b + 3*a^3 + 3*a*b^2 - 2*a*b - 3*a"), P("2")},
          {P("a^6 - 4*a^4*b + 2*a^4 + 3*a^2*b^2 + a^2*b - 5*a^2 - b^2 + 2"), P("a")},
          {P("a^4*b - a^4 - 3*a^2*b^2 + 4*a^2*b + b^3 - 3*b"), P("a")},
          {P("a^5*b - a^5 - 4*a^3*b^2 + 6*a^3*b + 3*a*b^3 - a^3 - 3*a*b^2 - 5*a*b + 3*a"), P("b")},
          {P("a^5 - 3*a^3*b + a^3 + a*b^2 + 2*a*b - 3*a"), P("b")}};
}

template <class T>
T leibniz(const std::vector<std::vector<T>>& m, const T& zero) {
  std::vector<int> perm(m.size());
  std::iota(perm.begin(), perm.end(), 0);
  T total = zero;
  do {
    int inv = 0;
    for (std::size_t a = 0; a < perm.size(); ++a)
      for (std::size_t b = a + 1; b < perm.size(); ++b) inv += perm[a] > perm[b];
    T term = m[0][static_cast<std::size_t>(perm[0])];
    for (std::size_t r = 1; r < perm.size(); ++r) term = term * m[r][static_cast<std::size_t>(perm[r])];
    if (inv % 2)
      total = total - term;
    else
      total = total + term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

template <class T>
bool witness_holds(const ArcValues<T>& v) {
  const HexagonMatrix<T> d = hexagon_data(v, Execution::Serial);
  const HexagonOutcome<T> h = hexagon_consistent(d, v.field, Execution::Serial);
  if (!h.feasible) return false;
  for (std::size_t I = 0; I < d.size(); ++I)
    for (std::size_t J = I; J < d.size(); ++J)
      if (!v.field.is_zero(h.coefficients[I] * h.coefficients[J] * *h.radicand - d.at(I, J))) return false;
  return true;
}

// D[I][J] and D[J][I] from 3x3 permutation expansions, against the kernel.
template <class T>
bool hexagon_symmetric(const ArcValues<T>& v, std::size_t stride) {
  const HexagonMatrix<T> h = hexagon_data(v, Execution::Parallel);
  const T zero = v.field.lift(Rational(0)), half = v.field.lift(Rational(1, 2));
  auto block = [&](const Triple& r, const Triple& c) -> T {
    const int rs[3] = {r.a, r.b, r.c}, cs[3] = {c.a, c.b, c.c};
    std::vector<std::vector<T>> m(3, std::vector<T>(3));
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) m[i][j] = v.at(rs[i], cs[j]);
    return leibniz(m, zero) * half;
  };
  for (std::size_t I = 0; I < h.size(); I += stride)
    for (std::size_t J = I; J < h.size(); ++J) {
      const T ij = block(h.triples[I], h.triples[J]);
      if (!v.field.is_zero(ij - block(h.triples[J], h.triples[I]))) return false;
      if (!v.field.is_zero(ij - h.at(I, J))) return false;
    }
  return true;
}

bool same_point(const SolutionPoint& p, const SolutionPoint& q) {
  for (const auto& [v, a] : p.coordinates) {
    auto it = q.coordinates.find(v);
    if (it == q.coordinates.end() || it->second.to_string() != a.to_string()) return false;
  }
  return p.coordinates.size() == q.coordinates.size();
}

// Index into the torus(4,5) points, or -1.
int point_index(const SolutionPoint& p) {
  const auto& pts = corpus::torus45().points;
  for (std::size_t k = 0; k < pts.size(); ++k)
    if (same_point(p, pts[k].base)) return static_cast<int>(k);
  return -1;
}

const CoverPresentation& torus45_cover() {
  static const CoverPresentation c = compute_cover(corpus::torus45().diagram).cover;
  return c;
}

// Six points: (2,2), (-1,1), (r, 2r - 2) for r^2 - 3r + 1 = 0, (s, 2) for s^2 + s - 1 = 0.
Outcome criterion_points() {
  Outcome o;
  const GhostReport& r = corpus::torus45();
  o.require(r.points.size() == 6, "expected 6 points, found " + std::to_string(r.points.size()));
  int rational = 0, golden_r = 0, golden_s = 0;
  std::set<std::pair<double, double>> seen;
  const auto eqs = reduced_equations();
  for (const auto& p : r.points) {
    const AlgebraicNumber& a = p.base.at(kA);
    const AlgebraicNumber& b = p.base.at(kB);
    seen.insert(corpus::base_xy(p.base));
    if (a.is_rational() && b.is_rational()) {
      const Rational x = a.rational_value(), y = b.rational_value();
      const bool known = (x == 2 && y == 2) || (x == -1 && y == 1);
      o.require(known, "unexpected rational point (" + x.get_str() + ", " + y.get_str() + ")");
      rational += known;
      Field<Rational> f;
      auto at = [&](const PairVar& v) -> Rational { return v == kA ? x : y; };
      for (const auto& e : eqs)
        o.require(sgn(e.rhs.evaluate(f, at) - e.lhs.evaluate(f, at)) == 0,
                  "equation not exact at (" + x.get_str() + ", " + y.get_str() + ")");
      continue;
    }
    auto qa = a.as_quadratic();
    auto qb = b.as_quadratic();
    if (a.minpoly() == std::vector<Integer>{1, -3, 1} && qa && qb) {
      const QuadraticNumber want = QuadraticNumber(-2, 0, qa->radicand()) + QuadraticNumber(2, 0, qa->radicand()) * *qa;
      o.require(qb->radicand() == qa->radicand() && *qb == want, "second coordinate is not 2r - 2 at " + a.to_string());
      ++golden_r;
    } else if (a.minpoly() == std::vector<Integer>{-1, 1, 1} && b.is_rational() && b.rational_value() == 2) {
      ++golden_s;
    } else {
      o.require(false, "unexpected point " + a.to_string() + ", " + b.to_string());
    }
    Field<BigComplex> f{Real(0)};
    auto at = [&](const PairVar& v) -> BigComplex { return v == kA ? a.approx() : b.approx(); };
    for (const auto& e : eqs) {
      const Real err = abs(e.rhs.evaluate(f, at) - e.lhs.evaluate(f, at));
      o.require(err < Real(1e-20), "residual " + err.str(6) + " at " + a.to_string());
    }
  }
  o.require(rational == 2 && golden_r == 2 && golden_s == 2 && seen.size() == 6, "point families incomplete");
  o.detail << (o.pass ? "6 points, 5 equations hold (exact at rational points, < 1e-20 elsewhere)" : "");
  return o;
}

Outcome criterion_ghost() {
  Outcome o;
  const GhostReport& r = corpus::torus45();
  const F2Presentation& pres = r.presentation;
  int ghosts = 0, lifts = 0;
  for (const auto& p : r.points) {
    const LiftCertificate& c = p.certificate;
    if (c.verdict == Verdict::Ghost) {
      ++ghosts;
      const auto& a = p.base.at(kA);
      const auto& b = p.base.at(kB);
      o.require(a.is_rational() && b.is_rational() && a.rational_value() == -1 && b.rational_value() == 1,
                "ghost at " + a.to_string() + ", " + b.to_string());
      Field<Rational> q;
      std::vector<std::vector<Rational>> m(4, std::vector<Rational>(4));
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
          m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
              pres.rewrite(i + 1, j + 1).evaluate(q, [](const PairVar& v) -> Rational {
                return v == kA ? Rational(-1) : Rational(1);
              });
      const Rational oracle = leibniz(m, Rational(0));
      o.require(oracle == 5, "permutation expansion gives " + oracle.get_str());
      o.require(!c.failing_rectangles.empty() &&
                    c.failing_rectangles.front().indices == std::array<int, 4>{1, 2, 3, 4} &&
                    c.failing_rectangles.front().value.text == oracle.get_str(),
                "first failing rectangle is not (1,2,3,4) with the oracle value");
    } else {
      ++lifts;
      const bool ok = std::visit([](const auto& v) { return witness_holds(v); }, extend_point(pres, p.base));
      o.require(ok && c.failing_rectangles.empty(), "witness does not verify at " + p.base.at(kA).to_string());
    }
  }
  o.require(ghosts == 1 && lifts == 5, std::to_string(ghosts) + " ghosts, " + std::to_string(lifts) + " lifting");
  if (o.pass) o.detail << "ghost (-1,1) fails rectangle (3,4) of arcs 1..4 with value 5; 5 witnesses re-verified";
  return o;
}

// |aba - bab| for trace-free a, b with -tr(ab) = x.
double trefoil_residual(std::complex<double> x) {
  const Complex i(0, 1);
  const Mat2d a{i, 0, 0, -i};
  const Complex p = i * x / 2.0, q = std::sqrt(-1.0 - p * p);
  const Mat2d b{p, q, q, -p};
  return operator_norm(a * b * a - b * a * b);
}

Outcome criterion_small_knots() {
  Outcome o;
  for (const char* braid : {corpus::kTrefoil, corpus::kFigureEight}) {
    const GhostReport& r = corpus::report(braid);
    o.require(r.solution.status == SolveStatus::Finite, std::string(braid) + " not zero-dimensional");
    o.require(r.ghost_count() == 0, std::string(braid) + " has " + std::to_string(r.ghost_count()) + " ghosts");
  }
  std::vector<Rational> values;
  for (const auto& p : corpus::report(corpus::kTrefoil).solution.points)
    values.push_back(p.at(kA).is_rational() ? p.at(kA).rational_value() : Rational(99));
  std::sort(values.begin(), values.end());
  o.require(values == std::vector<Rational>{-1, 2}, "trefoil solutions differ from {-1, 2}");
  // Grid search of the complex plane for matrix pairs satisfying the trefoil relation.
  std::set<int> hits;
  for (int re = -200; re <= 200; ++re)
    for (int im = -200; im <= 200; ++im) {
      const std::complex<double> x(re * 0.025, im * 0.025);
      if (trefoil_residual(x) > 0.05) continue;
      if (std::abs(x + 1.0) < 0.1) hits.insert(-1);
      else if (std::abs(x - 2.0) < 0.1) hits.insert(2);
      else hits.insert(1000);
    }
  o.require(hits == std::set<int>{-1, 2}, "grid search disagrees with {-1, 2}");
  o.require(trefoil_residual(-1.0) < 1e-12 && trefoil_residual(2.0) < 1e-12, "matrix residual at {-1, 2}");
  if (o.pass) o.detail << "trefoil and figure-eight have 0 ghosts; trefoil points {-1, 2} match the grid oracle";
  return o;
}

// A drop is admissible when Tietze reduction still reaches the left-edge generators.
Outcome criterion_cover() {
  Outcome o;
  const Diagram& d = corpus::torus45().diagram;
  const auto want = corpus::torus45_relators();
  const std::vector<std::size_t> order = relator_order(d);
  std::vector<std::string> admissible, bad;
  for (std::size_t drop = 0; drop < order.size(); ++drop) {
    CoverComputation c = compute_cover(d, drop);
    if (!c.tietze.diagnostic.empty()) continue;
    const std::string arc = std::to_string(d.crossings[order[drop]].out);
    admissible.push_back(arc);
    std::vector<std::string> got;
    for (std::size_t k = 0; k < c.cover.relators.size(); ++k) got.push_back(c.cover.relator_string(k));
    if (got != want) bad.push_back(arc);
  }
  auto join = [](const std::vector<std::string>& xs) {
    std::string out;
    for (const auto& x : xs) out += (out.empty() ? "" : ",") + x;
    return out;
  };
  o.require(!admissible.empty(), "no admissible dropped relator");
  o.require(bad.empty(), "relators differ from w1..w6 when dropping the relator with out-arc " + join(bad) +
                             " (admissible out-arcs " + join(admissible) + ")");
  if (o.pass) o.detail << "w1..w6 for every admissible dropped relator (out-arcs " << join(admissible) << ")";
  return o;
}

Outcome criterion_ghost_rep() {
  Outcome o;
  const int ghost = [] {
    const auto& pts = corpus::torus45().points;
    for (std::size_t k = 0; k < pts.size(); ++k)
      if (pts[k].certificate.verdict == Verdict::Ghost) return static_cast<int>(k);
    return -1;
  }();
  for (int root : {0, 1}) {
    const Representation rep = t45::ghost_representation(root);
    const double res = verify(torus45_cover(), rep);
    o.require(res < 1e-9, "residual " + std::to_string(res));
    const Complex want[3] = {-1.0, 1.0, -1.0};
    for (int g = 2; g <= 4; ++g) {
      const Complex t = evaluate(torus45_cover(), rep, GroupWord::generator(g)).trace();
      o.require(std::abs(t - want[g - 2]) < 1e-12, "trace of generator " + std::to_string(g));
    }
    const SnappedPoint s = rep_to_f2_point(rep, torus45_cover(), corpus::torus45().presentation);
    o.require(s.satisfies_equations && ghost >= 0 && point_index(s.point) == ghost,
              "root " + std::to_string(root) + " does not snap to the ghost");
  }
  if (o.pass) o.detail << "both roots: residual < 1e-9, traces (-1, 1, -1), snapped to the ghost";
  return o;
}

Outcome criterion_families() {
  Outcome o;
  std::set<int> reached;
  std::vector<std::pair<std::string, Representation>> reps;
  for (int k = 0; k < 5; ++k) reps.emplace_back("diagonal " + std::to_string(k), t45::diagonal_representation(k));
  for (int r = 0; r < 4; ++r) reps.emplace_back("beta " + std::to_string(r), t45::beta_representation(r));
  for (const auto& [name, rep] : reps) {
    const double res = verify(torus45_cover(), rep);
    o.require(res < 1e-9, name + " residual " + std::to_string(res));
    const SnappedPoint s = rep_to_f2_point(rep, torus45_cover(), corpus::torus45().presentation);
    const int k = s.satisfies_equations ? point_index(s.point) : -1;
    o.require(k >= 0, name + " does not snap to a solution");
    if (k < 0) continue;
    o.require(corpus::torus45().points[static_cast<std::size_t>(k)].certificate.verdict == Verdict::Lifts,
              name + " snaps to the ghost");
    reached.insert(k);
  }
  o.require(reached.size() == 5, "families reach " + std::to_string(reached.size()) + " of 5 lifting points");
  if (o.pass) o.detail << "9 representations verify and reach all 5 lifting points";
  return o;
}

Outcome criterion_properties() {
  Outcome o;
  double worst = 0;
  for (int k = 0; k < 1000; ++k) worst = std::max(worst, trace_identity_check(corpus::random_sl2(), corpus::random_sl2()));
  o.require(worst < 1e-10, "(a) trace identity error " + std::to_string(worst));

  worst = 0;
  for (int k = 0; k < 200; ++k) {
    std::vector<Mat2d> m(6);
    for (int i = 1; i <= 5; ++i) m[static_cast<std::size_t>(i)] = corpus::random_trace_free();
    TraceFreeCharacter chi;
    for (int i = 1; i <= 5; ++i)
      for (int j = i + 1; j <= 5; ++j)
        chi.pairs[PairVar(i, j)] = -(m[static_cast<std::size_t>(i)] * m[static_cast<std::size_t>(j)]).trace();
    for (const auto& [key, value] : phi_hat(chi, 5).z_quads) {
      const Complex t = (m[1] * m[static_cast<std::size_t>(key[1])] * m[static_cast<std::size_t>(key[2])] *
                         m[static_cast<std::size_t>(key[3])]).trace();
      worst = std::max(worst, std::abs(value - t));
    }
  }
  o.require(worst < 1e-10, "(b) four-matrix trace error " + std::to_string(worst));

  for (const char* braid : {corpus::kTrefoil, corpus::kFigureEight, corpus::kTorus45}) {
    const GhostReport& r = corpus::report(braid);
    const std::size_t stride = r.presentation.arcs > 10 ? 7 : 1;
    for (const auto& p : r.points) {
      const bool ok = std::visit([&](const auto& v) { return hexagon_symmetric(v, stride); },
                                 extend_point(r.presentation, p.base));
      o.require(ok, std::string("(c) hexagon data not symmetric for ") + braid);
    }
  }

  std::mt19937_64 pick(7);
  for (const char* braid : {corpus::kTrefoil, corpus::kFigureEight, corpus::kTorus45}) {
    const GhostReport& r = corpus::report(braid);
    const F2Presentation& pres = r.presentation;
    GroebnerBasis g = groebner_basis(pres.polynomials(), pres.base_vars, MonomialOrder::GradedReverseLex);
    std::vector<std::pair<RewriteRule, int>> instances;
    for (const auto& rule : fundamental_rules(r.diagram))
      for (int a = 1; a <= pres.arcs; ++a) instances.emplace_back(rule, a);
    if (instances.size() > 200) {
      std::shuffle(instances.begin(), instances.end(), pick);
      instances.resize(200);
    }
    for (const auto& [rule, a] : instances) {
      const MultiPoly inst = rule_instance(rule, a);
      std::map<PairVar, MultiPoly> sub;
      for (const auto& v : inst.variables()) sub.emplace(v, pres.rewrite(v.i, v.j));
      if (!g.contains(inst.substitute(sub))) {
        o.require(false, std::string("(d) rule instance outside the ideal for ") + braid);
        break;
      }
    }
  }

  const std::pair<const char*, int> orders[] = {{corpus::kTrefoil, 3}, {corpus::kFigureEight, 5}, {corpus::kTorus45, 5}};
  for (const auto& [braid, order] : orders) {
    const Integer h = first_homology_order(compute_cover(build_diagram(parse_braid(braid))).cover);
    o.require(h == order, std::string("(e) |H1| of ") + braid + " is " + h.get_str());
  }
  if (o.pass) o.detail << "(a) trace identity, (b) four-matrix traces, (c) hexagon symmetry, (d) rule instances, (e) |H1| = 3, 5, 5";
  return o;
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Outcome()>> criteria[] = {
      {"torus(4,5) solution points", criterion_points},
      {"torus(4,5) ghost classification", criterion_ghost},
      {"trefoil and figure-eight", criterion_small_knots},
      {"cover relators for every dropped relator", criterion_cover},
      {"ghost representation", criterion_ghost_rep},
      {"reducible families", criterion_families},
      {"property suites", criterion_properties}};
  int failed = 0;
  int n = 0;
  for (const auto& [name, run] : criteria) {
    ++n;
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    failed += !o.pass;
    std::cout << "criterion " << n << " " << (o.pass ? "PASS" : "FAIL") << " " << name << ": " << o.detail.str()
              << std::endl;
  }
  std::cout << (n - failed) << "/" << n << " criteria pass" << std::endl;
  return failed ? 1 : 0;
}
