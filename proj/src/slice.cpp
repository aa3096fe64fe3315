#include "ghostchar/slice.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "ghostchar/groebner.hpp"
#include "ghostchar/solve.hpp"

namespace ghostchar {

std::string RewriteRule::to_string() const {
  std::ostringstream os;
  os << "x[a," << target << "] = x[" << std::min(over, under) << "," << std::max(over, under)
     << "] * x[a," << over << "] - x[a," << under << "]";
  return os.str();
}

std::vector<RewriteRule> fundamental_rules(const Diagram& d) {
  std::vector<RewriteRule> rules;
  for (std::size_t t = 0; t < d.crossings.size(); ++t) {
    const Crossing& c = d.crossings[t];
    rules.push_back({c.out, c.over, c.in, static_cast<int>(t), c.closure});
  }
  std::stable_sort(rules.begin(), rules.end(), [](const RewriteRule& a, const RewriteRule& b) {
    if (a.closure != b.closure) return !a.closure;
    return a.closure ? a.target < b.target : a.target > b.target;
  });
  return rules;
}

MultiPoly rule_instance(const RewriteRule& r, int a) {
  return MultiPoly::pair(a, r.target) -
         (MultiPoly::pair(r.over, r.under) * MultiPoly::pair(a, r.over) - MultiPoly::pair(a, r.under));
}

std::string F2Equation::label() const {
  return "g" + std::to_string(target) + "(x" + std::to_string(std::min(spectator, target)) +
         std::to_string(std::max(spectator, target)) + ")";
}

std::vector<MultiPoly> F2Presentation::polynomials() const {
  std::vector<MultiPoly> out;
  for (const auto& e : equations) out.push_back(e.poly);
  return out;
}

MultiPoly F2Presentation::rewrite(int i, int j) const {
  if (i == j) return MultiPoly(2);
  auto it = rewrite_table.find(PairVar(i, j));
  if (it == rewrite_table.end())
    throw std::out_of_range("no rewrite for " + PairVar(i, j).to_string());
  return it->second;
}

nlohmann::json F2Presentation::to_json() const {
  nlohmann::json vars = nlohmann::json::array();
  for (const auto& v : base_vars) vars.push_back(v.to_string());
  nlohmann::json eqs = nlohmann::json::array();
  for (const auto& e : equations)
    eqs.push_back({{"label", e.label()}, {"poly", e.poly.to_string()}, {"terms", e.poly.to_json()}});
  nlohmann::json table = nlohmann::json::object();
  for (const auto& [v, p] : rewrite_table)
    table[std::to_string(v.i) + "," + std::to_string(v.j)] = p.to_string();
  nlohmann::json out = {{"m", strands},
                        {"arcs", arcs},
                        {"base_vars", vars},
                        {"equations", eqs},
                        {"rewrite_table", table},
                        {"symmetry_reduced", symmetry_reduced},
                        {"diagnostics", diagnostics}};
  if (symmetry_reduced) {
    nlohmann::json reps = nlohmann::json::object();
    for (const auto& [v, r] : orbit_representative) reps[v.to_string()] = r.to_string();
    out["orbit_representative"] = reps;
  }
  return out;
}

namespace {

// Rewrites pair values of open-braid segments into top-segment variables.
class SegmentRewriter {
 public:
  explicit SegmentRewriter(const Diagram& d) : d_(d), m_(d.strands) {}

  const MultiPoly& rw(int a, int b) {
    if (a > b) std::swap(a, b);
    auto key = std::make_pair(a, b);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    MultiPoly value;
    if (a == b) {
      value = MultiPoly(2);
    } else if (b <= m_) {
      value = MultiPoly::pair(a, b);
    } else {
      const Crossing& c = d_.crossings[static_cast<std::size_t>(b - m_ - 1)];
      MultiPoly over_in = rw(c.over_segment, c.in_segment);
      MultiPoly a_over = rw(a, c.over_segment);
      MultiPoly a_in = rw(a, c.in_segment);
      value = over_in * a_over - a_in;
    }
    return memo_.emplace(key, std::move(value)).first->second;
  }

 private:
  const Diagram& d_;
  int m_;
  std::map<std::pair<int, int>, MultiPoly> memo_;
};

}  // namespace

F2Presentation eliminate(const Diagram& d) {
  const int m = d.strands;
  F2Presentation pres;
  pres.strands = m;
  pres.arcs = d.arc_count;
  for (int i = 1; i <= m; ++i)
    for (int j = i + 1; j <= m; ++j) pres.base_vars.emplace_back(i, j);

  SegmentRewriter rw(d);
  for (int k = 1; k <= m; ++k) {
    const int bottom = d.bottom_segments[static_cast<std::size_t>(k - 1)];
    for (int a = 1; a <= m; ++a) {
      MultiPoly eq = rw.rw(a, k) - rw.rw(a, bottom);
      if (eq.is_zero()) continue;
      if (eq.is_constant()) pres.diagnostics.push_back("inconsistent closure equation at (" +
                                                       std::to_string(a) + "," + std::to_string(k) + ")");
      pres.equations.push_back({a, k, eq.canonical()});
    }
  }

  // Representative open-braid segment of each arc: the first segment carrying it.
  std::vector<int> arc_segment(static_cast<std::size_t>(d.arc_count) + 1, 0);
  for (std::size_t s = 1; s < d.segment_arc.size(); ++s) {
    int& slot = arc_segment[static_cast<std::size_t>(d.segment_arc[s])];
    if (!slot) slot = static_cast<int>(s);
  }
  for (int i = 1; i <= d.arc_count; ++i)
    for (int j = i + 1; j <= d.arc_count; ++j)
      pres.rewrite_table[PairVar(i, j)] = rw.rw(arc_segment[static_cast<std::size_t>(i)],
                                                arc_segment[static_cast<std::size_t>(j)]);
  return pres;
}

F2Presentation symmetry_reduce(const F2Presentation& pres, const std::vector<int>& perm) {
  const int m = pres.strands;
  if (static_cast<int>(perm.size()) != m) throw std::invalid_argument("permutation size mismatch");
  auto image = [&](const PairVar& v) { return PairVar(perm[v.i - 1], perm[v.j - 1]); };

  std::vector<MultiPoly> identities;
  for (const auto& v : pres.base_vars) {
    PairVar w = image(v);
    if (w != v) identities.push_back(MultiPoly::variable(v) - MultiPoly::variable(w));
  }
  if (identities.empty()) return pres;

  GroebnerBasis full = groebner_basis(pres.polynomials(), pres.base_vars, MonomialOrder::GradedReverseLex);
  for (const auto& id : identities) {
    if (!full.contains(id)) {
      F2Presentation out = pres;
      out.diagnostics.push_back("symmetry identity " + id.to_string() +
                                " is not implied by the equations; presentation left unreduced");
      return out;
    }
  }

  // Orbit representatives: smallest pair in each orbit.
  std::map<PairVar, PairVar> rep;
  for (const auto& v : pres.base_vars) {
    PairVar best = v;
    PairVar cur = image(v);
    while (cur != v) {
      best = std::min(best, cur);
      cur = image(cur);
    }
    rep[v] = best;
  }
  std::map<PairVar, MultiPoly> subst;
  std::set<PairVar> reps;
  for (const auto& [v, r] : rep) {
    reps.insert(r);
    if (v != r) subst[v] = MultiPoly::variable(r);
  }

  F2Presentation out;
  out.strands = pres.strands;
  out.arcs = pres.arcs;
  out.base_vars.assign(reps.begin(), reps.end());
  out.symmetry_reduced = true;
  out.orbit_representative = rep;
  out.diagnostics = pres.diagnostics;
  for (const auto& [v, p] : pres.rewrite_table) out.rewrite_table[v] = p.substitute(subst);

  // Keep g_i(x_ij) and g_j(x_ij) at each representative pair and the diagonal equation at (1,1).
  auto kept_key = [&](const F2Equation& e) {
    if (e.spectator == e.target) return e.spectator == 1;
    PairVar v(e.spectator, e.target);
    return reps.count(v) > 0;
  };
  std::vector<F2Equation> kept, dropped;
  for (const auto& e : pres.equations) {
    F2Equation r{e.spectator, e.target, e.poly.substitute(subst)};
    if (r.poly.is_zero()) continue;
    r.poly = r.poly.canonical();
    (kept_key(e) ? kept : dropped).push_back(r);
  }
  auto dedupe = [](std::vector<F2Equation>& eqs) {
    std::vector<F2Equation> unique;
    for (auto& e : eqs) {
      bool seen = std::any_of(unique.begin(), unique.end(), [&](const F2Equation& u) { return u.poly == e.poly; });
      if (!seen) unique.push_back(std::move(e));
    }
    eqs = std::move(unique);
  };
  dedupe(kept);
  std::vector<MultiPoly> kept_polys;
  for (const auto& e : kept) kept_polys.push_back(e.poly);
  GroebnerBasis reduced = groebner_basis(kept_polys, out.base_vars, MonomialOrder::GradedReverseLex);
  bool implied = std::all_of(dropped.begin(), dropped.end(),
                             [&](const F2Equation& e) { return reduced.contains(e.poly); });
  out.equations = kept;
  if (!implied) {
    out.diagnostics.push_back("representative equations do not imply the rest; all equations kept");
    for (auto& e : dropped) out.equations.push_back(e);
    dedupe(out.equations);
  }
  return out;
}

std::string Triple::to_string() const {
  return "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
}

std::vector<Triple> arc_triples(int arcs) {
  std::vector<Triple> out;
  for (int a = 1; a <= arcs; ++a)
    for (int b = a + 1; b <= arcs; ++b)
      for (int c = b + 1; c <= arcs; ++c) out.push_back({a, b, c});
  return out;
}

namespace {

template <class T, class Lookup>
ArcValues<T> evaluate_table(const F2Presentation& pres, Field<T> field, Lookup&& value_of) {
  ArcValues<T> out;
  out.arcs = pres.arcs;
  out.field = field;
  out.upper.reserve(pres.rewrite_table.size());
  for (int i = 1; i <= pres.arcs; ++i)
    for (int j = i + 1; j <= pres.arcs; ++j)
      out.upper.push_back(pres.rewrite_table.at(PairVar(i, j)).evaluate(field, value_of));
  return out;
}

}  // namespace

FullPoint extend_point(const F2Presentation& pres, const SolutionPoint& base,
                       double numeric_tolerance) {
  std::map<PairVar, BigComplex> numeric;
  for (const auto& v : pres.base_vars) numeric[v] = base.at(v).approx();
  Real residual = relative_residual(pres.polynomials(), numeric);
  if (residual > zero_threshold())
    throw std::invalid_argument("point does not satisfy the F2 equations (relative residual " +
                                std::to_string(static_cast<double>(residual)) + ")");

  bool rational = true;
  std::optional<Integer> radicand;
  bool quadratic = true;
  for (const auto& v : pres.base_vars) {
    const AlgebraicNumber& x = base.at(v);
    if (x.is_rational()) continue;
    rational = false;
    auto q = x.as_quadratic();
    if (!q || (radicand && *radicand != q->radicand())) {
      quadratic = false;
      continue;
    }
    radicand = q->radicand();
  }

  if (rational) {
    Field<Rational> f;
    auto p = evaluate_table(pres, f, [&](const PairVar& v) { return base.at(v).rational_value(); });
    for (const auto& e : pres.equations)
      if (sgn(e.poly.evaluate(f, [&](const PairVar& v) { return base.at(v).rational_value(); })) != 0)
        throw std::invalid_argument("point does not satisfy " + e.label());
    return p;
  }
  if (quadratic) {
    Field<QuadraticNumber> f{*radicand};
    auto value_of = [&](const PairVar& v) {
      const AlgebraicNumber& x = base.at(v);
      return x.is_rational() ? f.lift(x.rational_value()) : *x.as_quadratic();
    };
    for (const auto& e : pres.equations)
      if (!e.poly.evaluate(f, value_of).is_zero())
        throw std::invalid_argument("point does not satisfy " + e.label());
    return evaluate_table(pres, f, value_of);
  }
  Field<BigComplex> f{Real(numeric_tolerance)};
  return evaluate_table(pres, f, [&](const PairVar& v) { return base.at(v).approx(); });
}

const char* arithmetic_name(const FullPoint& p) {
  return std::visit([](const auto& x) { return std::decay_t<decltype(x.field)>::name; }, p);
}

int arc_count(const FullPoint& p) {
  return std::visit([](const auto& x) { return x.arcs; }, p);
}

std::complex<double> approx_value(const FullPoint& p, int i, int j) {
  return std::visit([&](const auto& x) { return x.field.approx(x.at(i, j)); }, p);
}

AlgebraicNumber coordinate(const FullPoint& p, int i, int j) {
  if (auto r = std::get_if<ArcValues<Rational>>(&p)) return AlgebraicNumber::rational(r->at(i, j));
  if (auto q = std::get_if<ArcValues<QuadraticNumber>>(&p)) return AlgebraicNumber::from_quadratic(q->at(i, j));
  throw std::domain_error("numeric point has no exact coordinates");
}

nlohmann::json to_json(const FullPoint& p) {
  nlohmann::json coords = nlohmann::json::object();
  std::visit(
      [&](const auto& x) {
        for (int i = 1; i <= x.arcs; ++i)
          for (int j = i + 1; j <= x.arcs; ++j) {
            auto z = x.field.approx(x.at(i, j));
            coords[PairVar(i, j).to_string()] = {{"value", x.field.text(x.at(i, j))},
                                                  {"approx", {z.real(), z.imag()}}};
          }
      },
      p);
  return {{"arithmetic", arithmetic_name(p)}, {"arcs", arc_count(p)}, {"coordinates", coords}};
}

}  // namespace ghostchar
