#include "ghostchar/repcheck.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ghostchar {

double operator_norm(const Mat2d& m) {
  // Largest eigenvalue of M^* M.
  double p = std::norm(m.a) + std::norm(m.b) + std::norm(m.c) + std::norm(m.d);
  double q = std::norm(m.a * m.d - m.b * m.c);
  double disc = std::max(0.0, p * p / 4 - q);
  return std::sqrt(p / 2 + std::sqrt(disc));
}

nlohmann::json Representation::to_json() const {
  nlohmann::json gens = nlohmann::json::object();
  for (const auto& [name, m] : matrices) {
    nlohmann::json entries = nlohmann::json::array();
    for (const Complex& z : {m.a, m.b, m.c, m.d}) entries.push_back({z.real(), z.imag()});
    gens[name] = entries;
  }
  return {{"generators", gens}, {"tolerance", tolerance}};
}

Representation Representation::from_json(const nlohmann::json& j) {
  Representation rep;
  rep.tolerance = j.value("tolerance", 1e-9);
  for (const auto& [name, entries] : j.at("generators").items()) {
    if (entries.size() != 4) throw std::invalid_argument("matrix " + name + " needs 4 entries");
    Complex z[4];
    for (std::size_t k = 0; k < 4; ++k) {
      const auto& e = entries.at(k);
      z[k] = e.is_array() ? Complex(e.at(0).get<double>(), e.at(1).get<double>()) : Complex(e.get<double>(), 0.0);
    }
    rep.matrices[name] = {z[0], z[1], z[2], z[3]};
  }
  return rep;
}

Mat2d evaluate(const CoverPresentation& pres, const Representation& rep, const GroupWord& word) {
  Mat2d out = Mat2d::identity();
  for (const auto& l : word.letters()) {
    std::string name = pres.name(l.generator);
    auto it = rep.matrices.find(name);
    if (it == rep.matrices.end()) throw std::invalid_argument("generator " + name + " has no matrix");
    out = out * (l.exponent > 0 ? it->second : it->second.inverse());
  }
  return out;
}

double verify(const CoverPresentation& pres, const Representation& rep) {
  for (int g : pres.generators)
    if (!rep.matrices.count(pres.name(g))) throw std::invalid_argument("generator " + pres.name(g) + " has no matrix");
  double worst = 0;
  for (const auto& r : pres.relators)
    worst = std::max(worst, operator_norm(evaluate(pres, rep, r) - Mat2d::identity()));
  return worst;
}

double det_defect(const Representation& rep) {
  double worst = 0;
  for (const auto& [name, m] : rep.matrices) worst = std::max(worst, std::abs(m.det() - 1.0));
  return worst;
}

std::map<std::string, Complex> traces(const CoverPresentation& pres, const Representation& rep,
                                      const std::vector<GroupWord>& words) {
  std::map<std::string, Complex> out;
  for (const auto& w : words)
    out[w.to_string([&](int g) { return pres.name(g); })] = evaluate(pres, rep, w).trace();
  return out;
}

Complex pair_trace(const CoverPresentation& pres, const Representation& rep, int i, int j) {
  std::vector<Letter> w;
  if (i != pres.base) w.push_back({i, -1});
  if (j != pres.base) w.push_back({j, 1});
  return evaluate(pres, rep, GroupWord(std::move(w))).trace();
}

std::optional<AlgebraicNumber> snap_value(Complex v, double tol) {
  if (std::abs(v.imag()) < tol) {
    for (long den = 1; den <= 64; ++den) {
      double num = std::round(v.real() * static_cast<double>(den));
      if (std::abs(v.real() - num / static_cast<double>(den)) < tol) {
        Rational q(static_cast<long>(num), den);
        q.canonicalize();
        return AlgebraicNumber::rational(q);
      }
    }
  }
  const Complex v2 = v * v;
  for (long a = 1; a <= 16; ++a) {
    for (long mag = 0; mag <= 64; ++mag) {
      for (long b : {mag, -mag}) {
        Complex c = -(static_cast<double>(a) * v2 + static_cast<double>(b) * v);
        double scale = 1 + std::abs(static_cast<double>(a) * v2) + std::abs(static_cast<double>(b) * v);
        if (std::abs(c.imag()) > tol * scale || std::abs(c.real() - std::round(c.real())) > tol * scale) continue;
        long cc = std::lround(c.real());
        UPoly p(std::vector<Rational>{Rational(cc), Rational(b), Rational(a)});
        auto mp = p.primitive();
        Integer disc = mp[1] * mp[1] - 4 * mp[2] * mp[0];
        if (disc >= 0 && mpz_perfect_square_p(disc.get_mpz_t())) continue;
        Integer f, core;
        square_decompose(disc, f, core);
        Rational ra(-mp[1], 2 * mp[2]);
        Rational rb(f, 2 * mp[2]);
        ra.canonicalize();
        rb.canonicalize();
        for (const auto& root : {QuadraticNumber(ra, rb, core), QuadraticNumber(ra, -rb, core)}) {
          if (std::abs(root.to_complex().to_double() - v) < tol) return AlgebraicNumber::from_quadratic(root);
        }
        if (mag == 0) break;
      }
    }
  }
  return std::nullopt;
}

SnappedPoint rep_to_f2_point(const Representation& rep, const CoverPresentation& cover,
                             const F2Presentation& pres) {
  SnappedPoint out;
  for (int i = 1; i <= pres.strands; ++i)
    for (int j = i + 1; j <= pres.strands; ++j) out.raw_traces[PairVar(i, j)] = pair_trace(cover, rep, i, j);
  for (const auto& [v, t] : out.raw_traces) {
    auto s = snap_value(t, rep.tolerance);
    if (!s) {
      out.diagnostic = "trace of " + v.to_string() + " does not snap to an exact value";
      return out;
    }
    out.max_snap_error = std::max(out.max_snap_error, std::abs(s->approx().to_double() - t));
    out.snapped.emplace(v, *s);
  }
  for (const auto& v : pres.base_vars) out.point.coordinates.emplace(v, out.snapped.at(v));
  // Pairs identified by a symmetry reduction must carry equal traces.
  for (const auto& [v, r] : pres.orbit_representative)
    if (out.snapped.at(v).to_string() != out.snapped.at(r).to_string()) {
      out.diagnostic = "traces of " + v.to_string() + " and " + r.to_string() + " differ";
      return out;
    }
  try {
    extend_point(pres, out.point);
    out.satisfies_equations = true;
  } catch (const std::invalid_argument& e) {
    out.diagnostic = std::string("representation traces inconsistent: ") + e.what();
  }
  return out;
}

CoverCharacterCoordinates phi_hat(const TraceFreeCharacter& chi, int arcs) {
  auto x = [&](int i, int j) -> Complex {
    if (i == j) return 2.0;
    auto it = chi.pairs.find(PairVar(i, j));
    if (it == chi.pairs.end()) throw std::invalid_argument("missing coordinate " + PairVar(i, j).to_string());
    return it->second;
  };
  CoverCharacterCoordinates out;
  out.z_pairs = chi.pairs;
  for (int c = 2; c <= arcs; ++c)
    for (int d = c + 1; d <= arcs; ++d)
      for (int e = d + 1; e <= arcs; ++e)
        out.z_quads[{1, c, d, e}] = 0.5 * (x(1, c) * x(d, e) + x(1, e) * x(c, d) - x(1, d) * x(c, e));
  return out;
}

double trace_identity_check(const Mat2d& a, const Mat2d& b) {
  return std::abs((a * b).trace() - a.trace() * b.trace() + (a * b.inverse()).trace());
}

namespace t45 {

namespace {

// Root of an integer polynomial nearest a hint, computed at working precision.
Complex root_near(const std::vector<long>& coeffs, Complex hint) {
  std::vector<Integer> c(coeffs.begin(), coeffs.end());
  auto roots = AlgebraicNumber::roots_of(UPoly::from_integers(c));
  const AlgebraicNumber* best = nullptr;
  for (const auto& r : roots)
    if (!best || std::abs(r.approx().to_double() - hint) < std::abs(best->approx().to_double() - hint)) best = &r;
  return best->approx().to_double();
}

std::vector<Complex> sorted_roots(const std::vector<long>& coeffs) {
  std::vector<Integer> c(coeffs.begin(), coeffs.end());
  std::vector<Complex> out;
  for (const auto& r : AlgebraicNumber::roots_of(UPoly::from_integers(c))) out.push_back(r.approx().to_double());
  std::sort(out.begin(), out.end(), [](Complex a, Complex b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });
  return out;
}

Representation ghost(int root, bool printed) {
  auto alphas = sorted_roots({2, 1, 2});
  const Complex alpha = alphas.at(static_cast<std::size_t>(root));
  const Complex omega = root_near({1, 1, 1}, {-0.5, 0.87});      // e^{2 pi i / 3}
  const Complex sixth = root_near({1, -1, 1}, {0.5, 0.87});      // e^{pi i / 3}
  const Complex i = root_near({1, 0, 1}, {0.0, 1.0});
  const Complex sqrt3 = root_near({-3, 0, 1}, {1.7, 0.0});
  const Complex u = i / sqrt3 * sixth;
  const Complex v = i / sqrt3 / sixth;
  Representation rep;
  rep.matrices["x"] = {omega, 0.0, 0.0, 1.0 / omega};
  rep.matrices["y"] = {-u, -2.0 / 3.0, 1.0, v};
  const Complex corner = printed ? (i + 2.0 * alpha) / 3.0 : (1.0 + 2.0 * alpha) / 3.0;
  rep.matrices["z"] = {u, corner, alpha, -v};
  return rep;
}

}  // namespace

Representation ghost_representation(int root) { return ghost(root, false); }
Representation ghost_representation_as_printed(int root) { return ghost(root, true); }

Representation diagonal_representation(int k) {
  const double angle = 2 * M_PI * k / 5;
  const Complex zeta = root_near({-1, 0, 0, 0, 0, 1}, std::polar(1.0, angle));
  Representation rep;
  rep.matrices["x"] = {zeta, 0.0, 0.0, 1.0 / zeta};
  rep.matrices["y"] = Mat2d::identity();
  rep.matrices["z"] = {zeta, 0.0, 0.0, 1.0 / zeta};
  return rep;
}

Representation beta_representation(int root) {
  auto betas = sorted_roots({-176, 0, 4, 0, 1});
  const Complex beta = betas.at(static_cast<std::size_t>(root));
  const Complex s = (beta * beta + 2.0) / 6.0;  // +-sqrt(5)
  const Complex b3 = beta * beta * beta;
  const Complex corner = (1.0 + 3.0 * s) / 11.0;
  Representation rep;
  rep.matrices["x"] = {(3.0 + s + beta) / 4.0, 0.0, 0.0, (3.0 + s - beta) / 4.0};
  rep.matrices["y"] = {(66.0 * (1.0 + s) + 26.0 * beta + b3) / 132.0, corner, 1.0,
                       (66.0 * (1.0 + s) - 26.0 * beta - b3) / 132.0};
  rep.matrices["z"] = {(33.0 * (3.0 + s) - 7.0 * beta + b3) / 132.0, corner, 1.0,
                       (33.0 * (3.0 + s) + 7.0 * beta - b3) / 132.0};
  return rep;
}

}  // namespace t45

}  // namespace ghostchar
