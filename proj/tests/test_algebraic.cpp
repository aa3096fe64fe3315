#include <doctest.h>

#include "corpus.hpp"
#include "ghostchar/algebraic.hpp"

using namespace ghostchar;

namespace {

UPoly Z(std::vector<long> c) {
  std::vector<Integer> ints(c.begin(), c.end());
  return UPoly::from_integers(ints);
}

std::multiset<int> factor_degrees(const UPoly& p) {
  std::multiset<int> out;
  for (const auto& f : factor_squarefree(p)) out.insert(f.poly.degree());
  return out;
}

std::complex<double> d(const BigComplex& z) { return z.to_double(); }

}  // namespace

TEST_CASE("univariate arithmetic and division") {
  UPoly a = Z({-1, 0, 0, 1}), b = Z({1, 1});
  UPoly q, r;
  UPoly::divmod(a, b, q, r);
  CHECK(q * b + r == a);
  CHECK(r == Z({-2}));
  CHECK(a.derivative() == Z({0, 0, 3}));
  CHECK(UPoly::gcd(Z({-1, 0, 1}), Z({1, 2, 1})).monic() == Z({1, 1}));
  CHECK((Z({1, -2, 1}) * Z({2, 1})).squarefree_part().monic() == (Z({-1, 1}) * Z({2, 1})).monic());
  CHECK(Z({0, 6, -4}).primitive() == std::vector<Integer>{0, -3, 2});
  CHECK(a(Rational(2)) == Rational(7));
  CHECK(a.to_string() == "z^3 - 1");
}

TEST_CASE("division identity on random polynomials") {
  std::uniform_int_distribution<long> c(-6, 6);
  for (int k = 0; k < 40; ++k) {
    std::vector<long> ca(6), cb(3);
    for (auto& x : ca) x = c(corpus::rng());
    for (auto& x : cb) x = c(corpus::rng());
    cb.back() = cb.back() == 0 ? 1 : cb.back();
    UPoly a = Z(ca), b = Z(cb), q, r;
    UPoly::divmod(a, b, q, r);
    CHECK(q * b + r == a);
    CHECK(r.degree() < b.degree());
  }
}

TEST_CASE("root isolation disks each hold a root") {
  UPoly p = Z({-2, 0, 0, 1});
  auto roots = isolate_roots(p);
  REQUIRE(roots.size() == 3);
  int real = 0;
  for (const auto& r : roots) {
    real += r.real;
    CHECK(std::abs(std::pow(d(r.center), 3) - 2.0) < 1e-12);
    CHECK(r.radius < Real(1e-30));
  }
  CHECK(real == 1);
  for (std::size_t i = 0; i < roots.size(); ++i)
    for (std::size_t j = i + 1; j < roots.size(); ++j)
      CHECK(abs(roots[i].center - roots[j].center) > roots[i].radius + roots[j].radius);
}

TEST_CASE("factorization into small irreducibles") {
  CHECK(factor_degrees(Z({-5, 0, 1}) * Z({-3, 1}) * Z({1, 1, 1})) == std::multiset<int>{1, 2, 2});
  CHECK(factor_degrees(Z({6, 0, -5, 0, 1})) == std::multiset<int>{2, 2});
  CHECK(factor_degrees(Z({-2, 0, 0, 1}) * Z({1, 0, 0, 0, 1})) == std::multiset<int>{3, 4});
  CHECK(factor_degrees(Z({-1, 3}) * Z({1, 2})) == std::multiset<int>{1, 1});
  for (const auto& f : factor_squarefree(Z({-5, 0, 1}) * Z({-3, 1}) * Z({1, 1, 1}))) {
    CHECK(f.irreducible);
    CHECK(static_cast<int>(f.roots.size()) == f.poly.degree());
    for (const auto& r : f.roots) CHECK(abs(f.poly(r.center)) < Real(1e-40));
  }
}

TEST_CASE("quintics and beyond") {
  auto quintic = factor_squarefree(Z({-1, -1, 0, 0, 0, 1}));
  REQUIRE(quintic.size() == 1);
  CHECK(quintic[0].irreducible);
  auto ten = factor_squarefree(Z({-1, -1, 0, 0, 0, 1}) * Z({1, -1, 0, 0, 0, 1}));
  REQUIRE(ten.size() == 1);
  CHECK_FALSE(ten[0].irreducible);
  auto roots = AlgebraicNumber::roots_of(Z({-1, -1, 0, 0, 0, 1}) * Z({1, -1, 0, 0, 0, 1}));
  CHECK(roots.size() == 10);
  for (const auto& a : roots) CHECK_FALSE(a.certified_minimal());
}

TEST_CASE("algebraic numbers from roots") {
  auto roots = AlgebraicNumber::roots_of(Z({4, 0, -1}) * Z({-1, 1, 1}));
  REQUIRE(roots.size() == 4);
  int rational = 0, quadratic = 0;
  for (const auto& a : roots) {
    if (a.is_rational()) {
      ++rational;
      CHECK(abs(a.rational_value()) == 2);
    } else {
      ++quadratic;
      auto q = a.as_quadratic();
      REQUIRE(q);
      CHECK(q->radicand() == 5);
      CHECK(std::abs(d(q->to_complex()) - d(a.approx())) < 1e-15);
      CHECK_THROWS_AS(a.rational_value(), std::domain_error);
    }
  }
  CHECK(rational == 2);
  CHECK(quadratic == 2);
}

TEST_CASE("quadratic conversions round trip") {
  const QuadraticNumber x(Rational(3, 2), Rational(-1, 2), 5);
  AlgebraicNumber a = AlgebraicNumber::from_quadratic(x);
  CHECK(a.degree() == 2);
  CHECK(a.minpoly() == std::vector<Integer>{1, -3, 1});
  CHECK(*a.as_quadratic() == x);
  CHECK(a.to_string() == x.to_string());
  AlgebraicNumber r = AlgebraicNumber::rational(Rational(-7, 4));
  CHECK(r.minpoly() == std::vector<Integer>{7, 4});
  CHECK(r.to_string() == "-7/4");
}

TEST_CASE("json round trip re-isolates the same root") {
  for (const auto& a : AlgebraicNumber::roots_of(Z({-1, -1, 0, 0, 0, 1}) * Z({-3, 1}) * Z({2, 2, 1}))) {
    nlohmann::json j = nlohmann::json::parse(a.to_json().dump());
    AlgebraicNumber b = AlgebraicNumber::from_json(j);
    CHECK(b.minpoly() == a.minpoly());
    CHECK(abs(b.approx() - a.approx()) < Real(1e-14));
    CHECK(b.certified_minimal() == a.certified_minimal());
  }
  SolutionPoint p;
  p.coordinates.emplace(PairVar(1, 2), AlgebraicNumber::rational(Rational(-1)));
  p.coordinates.emplace(PairVar(1, 3), AlgebraicNumber::from_quadratic(QuadraticNumber(1, 1, 5)));
  SolutionPoint q = SolutionPoint::from_json(p.to_json());
  CHECK(q.at(PairVar(1, 2)).rational_value() == -1);
  CHECK(*q.at(PairVar(1, 3)).as_quadratic() == QuadraticNumber(1, 1, 5));
  CHECK_THROWS_AS(q.at(PairVar(2, 3)), std::out_of_range);
}

TEST_CASE("square decomposition") {
  Integer f, core;
  square_decompose(Integer(-180), f, core);
  CHECK(f == 6);
  CHECK(core == -5);
  square_decompose(Integer(49), f, core);
  CHECK(f == 7);
  CHECK(core == 1);
}
