#include "ghostchar/algebraic.hpp"

#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace ghostchar {

AlgebraicNumber::AlgebraicNumber(std::vector<Integer> minpoly, BigComplex approx, Real radius,
                                 bool certified)
    : minpoly_(std::move(minpoly)),
      approx_(std::move(approx)),
      radius_(std::move(radius)),
      certified_(certified) {
  if (minpoly_.size() < 2) throw std::invalid_argument("minimal polynomial must have degree >= 1");
}

AlgebraicNumber AlgebraicNumber::rational(const Rational& q) {
  return AlgebraicNumber({-q.get_num(), q.get_den()}, BigComplex(q), Real(0), true);
}

AlgebraicNumber AlgebraicNumber::from_quadratic(const QuadraticNumber& x) {
  if (x.is_rational()) return rational(x.rational_part());
  // (z - a)^2 - b^2 d
  const Rational& a = x.rational_part();
  const Rational& b = x.radical_part();
  UPoly p(std::vector<Rational>{a * a - b * b * x.radicand(), -2 * a, Rational(1)});
  return AlgebraicNumber(p.primitive(), x.to_complex(), Real(0), true);
}

std::vector<AlgebraicNumber> AlgebraicNumber::roots_of(const UPoly& p) {
  std::vector<AlgebraicNumber> out;
  for (const auto& f : factor_squarefree(p.squarefree_part())) {
    std::vector<Integer> mp = f.poly.primitive();
    for (const auto& r : f.roots) out.emplace_back(mp, r.center, r.radius, f.irreducible);
  }
  return out;
}

Rational AlgebraicNumber::rational_value() const {
  if (!is_rational()) throw std::domain_error("algebraic number is not rational");
  Rational q(-minpoly_[0], minpoly_[1]);
  q.canonicalize();
  return q;
}

void square_decompose(const Integer& d, Integer& f, Integer& core) {
  Integer n = abs(d);
  f = 1;
  core = 1;
  for (Integer p = 2; p * p <= n && p < 100000; ++p) {
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    for (unsigned k = 0; k < e / 2; ++k) f *= p;
    if (e % 2) core *= p;
  }
  if (n > 1) {
    if (mpz_perfect_square_p(n.get_mpz_t())) {
      Integer s;
      mpz_sqrt(s.get_mpz_t(), n.get_mpz_t());
      f *= s;
    } else {
      core *= n;
    }
  }
  if (d < 0) core = -core;
}

std::optional<QuadraticNumber> AlgebraicNumber::as_quadratic() const {
  if (degree() != 2) return std::nullopt;
  const Integer& c0 = minpoly_[0];
  const Integer& c1 = minpoly_[1];
  const Integer& c2 = minpoly_[2];
  Integer disc = c1 * c1 - 4 * c2 * c0;
  Integer f, core;
  square_decompose(disc, f, core);
  if (core == 1) return std::nullopt;
  Rational a(-c1, 2 * c2);
  Rational b(f, 2 * c2);
  a.canonicalize();
  b.canonicalize();
  QuadraticNumber plus(a, b, core);
  QuadraticNumber minus(a, -b, core);
  if (abs(plus.to_complex() - approx_) <= abs(minus.to_complex() - approx_)) return plus;
  return minus;
}

std::string AlgebraicNumber::minpoly_string(const std::string& var) const {
  return UPoly::from_integers(minpoly_).to_string(var);
}

std::string AlgebraicNumber::to_string() const {
  if (is_rational()) return rational_value().get_str();
  if (auto q = as_quadratic()) return q->to_string();
  std::ostringstream os;
  os << "root of " << minpoly_string() << " near " << std::setprecision(20)
     << static_cast<double>(approx_.re);
  if (approx_.im != 0)
    os << (approx_.im < 0 ? " - " : " + ") << std::abs(static_cast<double>(approx_.im)) << "*I";
  return os.str();
}

nlohmann::json AlgebraicNumber::to_json() const {
  nlohmann::json mp = nlohmann::json::array();
  for (const auto& c : minpoly_) mp.push_back(c.get_str());
  return {{"minpoly", mp},
          {"approx", {static_cast<double>(approx_.re), static_cast<double>(approx_.im)}},
          {"radius", static_cast<double>(radius_)},
          {"certified_minimal", certified_},
          {"value", to_string()}};
}

AlgebraicNumber AlgebraicNumber::from_json(const nlohmann::json& j) {
  std::vector<Integer> mp;
  for (const auto& c : j.at("minpoly")) mp.emplace_back(c.get<std::string>());
  BigComplex hint(Real(j.at("approx").at(0).get<double>()), Real(j.at("approx").at(1).get<double>()));
  if (mp.size() == 2) {
    Rational q(-mp[0], mp[1]);
    q.canonicalize();
    return rational(q);
  }
  // Re-isolate at full precision and pick the root nearest the stored approximation.
  auto roots = isolate_roots(UPoly::from_integers(mp));
  const IsolatedRoot* best = nullptr;
  for (const auto& r : roots)
    if (!best || abs(r.center - hint) < abs(best->center - hint)) best = &r;
  return AlgebraicNumber(mp, best->center, best->radius, j.value("certified_minimal", true));
}

const AlgebraicNumber& SolutionPoint::at(const PairVar& v) const {
  auto it = coordinates.find(v);
  if (it == coordinates.end()) throw std::out_of_range("no coordinate " + v.to_string());
  return it->second;
}

nlohmann::json SolutionPoint::to_json() const {
  nlohmann::json out = nlohmann::json::object();
  for (const auto& [v, a] : coordinates) out[v.to_string()] = a.to_json();
  return out;
}

SolutionPoint SolutionPoint::from_json(const nlohmann::json& j) {
  SolutionPoint p;
  for (const auto& [key, value] : j.items()) {
    int a = 0, b = 0;
    if (std::sscanf(key.c_str(), "x[%d,%d]", &a, &b) != 2)
      throw std::invalid_argument("bad coordinate key " + key);
    p.coordinates.emplace(PairVar(a, b), AlgebraicNumber::from_json(value));
  }
  return p;
}

}  // namespace ghostchar
