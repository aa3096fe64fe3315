#include "ghostchar/ghost.hpp"

#include <algorithm>

namespace ghostchar {

nlohmann::json ScalarValue::to_json() const {
  return {{"value", text}, {"approx", {approx.real(), approx.imag()}}, {"exact", exact}};
}

const char* to_string(Verdict v) { return v == Verdict::Lifts ? "lifts" : "ghost"; }

namespace {

template <class T>
ScalarValue scalar(const Field<T>& f, const T& x) {
  return {f.text(x), f.approx(x), f.exact()};
}

template <class T>
LiftCertificate classify_typed(const ArcValues<T>& point, const ClassifyOptions& opts) {
  LiftCertificate cert;
  cert.arithmetic = Field<T>::name;
  const Field<T>& f = point.field;

  auto rects = rectangle_values(point, opts.execution, opts.all_rectangles);
  cert.rectangles_checked = rects.size();
  for (const auto& r : rects)
    if (!f.is_zero(r.value)) cert.failing_rectangles.push_back({r.indices, scalar(f, r.value)});

  HexagonMatrix<T> d = hexagon_data(point, opts.execution);
  HexagonOutcome<T> h = hexagon_consistent(d, f, opts.execution);
  cert.hexagon_feasible = h.feasible;
  if (h.feasible) {
    cert.witness_radicand = scalar(f, *h.radicand);
    for (std::size_t I = 0; I < d.size(); ++I) cert.witness.emplace_back(d.triples[I], scalar(f, h.coefficients[I]));
  } else if (h.failure) {
    auto [I, J] = *h.failure;
    HexagonFailure fail;
    fail.first = d.triples[I];
    fail.second = d.triples[J];
    fail.determinant = scalar(f, d.at(I, J));
    if (h.pivot) {
      fail.pivot = d.triples[*h.pivot];
      const T& dpp = d.at(*h.pivot, *h.pivot);
      fail.product = scalar(f, T(d.at(*h.pivot, I) * d.at(*h.pivot, J) / dpp));
    } else {
      fail.pivot = d.triples[I];
      fail.product = scalar(f, f.lift(Rational(0)));
    }
    cert.hexagon_failure = fail;
  }
  cert.verdict = (cert.failing_rectangles.empty() && cert.hexagon_feasible) ? Verdict::Lifts : Verdict::Ghost;
  return cert;
}

}  // namespace

nlohmann::json LiftCertificate::to_json(bool include_witness) const {
  nlohmann::json rects = nlohmann::json::array();
  for (const auto& r : failing_rectangles) {
    nlohmann::json entry = {{"indices", r.indices}, {"value", r.value.to_json()}};
    if (r.indices[0] == 1 && r.indices[1] == 2) entry["pair"] = {r.indices[2], r.indices[3]};
    rects.push_back(entry);
  }
  nlohmann::json out = {{"verdict", ghostchar::to_string(verdict)},
                        {"arithmetic", arithmetic},
                        {"rectangles_checked", rectangles_checked},
                        {"failing_rectangles", rects},
                        {"hexagon_feasible", hexagon_feasible}};
  if (hexagon_failure) {
    out["hexagon_failure"] = {{"pivot", hexagon_failure->pivot.to_string()},
                              {"first", hexagon_failure->first.to_string()},
                              {"second", hexagon_failure->second.to_string()},
                              {"determinant", hexagon_failure->determinant.to_json()},
                              {"pivot_product", hexagon_failure->product.to_json()}};
  }
  if (include_witness && witness_radicand) {
    nlohmann::json coeffs = nlohmann::json::object();
    for (const auto& [t, v] : witness) coeffs[t.to_string()] = v.text;
    out["witness"] = {{"radicand", witness_radicand->to_json()}, {"coefficients", coeffs}};
  }
  return out;
}

LiftCertificate classify_full_point(const FullPoint& point, const ClassifyOptions& opts) {
  return std::visit([&](const auto& p) { return classify_typed(p, opts); }, point);
}

LiftCertificate classify_point(const F2Presentation& pres, const SolutionPoint& base,
                               const ClassifyOptions& opts) {
  return classify_full_point(extend_point(pres, base, opts.numeric_tolerance), opts);
}

std::size_t GhostReport::ghost_count() const {
  return static_cast<std::size_t>(std::count_if(points.begin(), points.end(), [](const ClassifiedPoint& p) {
    return p.certificate.verdict == Verdict::Ghost;
  }));
}

GhostReport find_ghosts(const BraidWord& braid, const FindOptions& opts) {
  GhostReport report;
  report.braid = braid;
  report.diagram = build_diagram(braid);
  report.presentation = eliminate(report.diagram);
  if (opts.symmetry) report.presentation = symmetry_reduce(report.presentation, report.diagram.closure_permutation);
  report.solution = solve_zero_dim(report.presentation.polynomials(), report.presentation.base_vars);
  for (const auto& p : report.solution.points)
    report.points.push_back({p, classify_point(report.presentation, p, opts.classify)});
  return report;
}

}  // namespace ghostchar
