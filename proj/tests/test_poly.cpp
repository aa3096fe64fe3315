#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "corpus.hpp"
#include "ghostchar/poly.hpp"

using namespace ghostchar;

namespace {

MultiPoly X(int i, int j) { return MultiPoly::pair(i, j); }

MultiPoly random_poly(int vars, int terms) {
  std::uniform_int_distribution<int> coeff(-5, 5), var(1, vars), expo(0, 2);
  MultiPoly p;
  for (int t = 0; t < terms; ++t) {
    MultiPoly m(coeff(corpus::rng()));
    for (int k = 0; k < 2; ++k) m = m * MultiPoly::pair(1, 1 + var(corpus::rng())).pow(expo(corpus::rng()));
    p += m;
  }
  return p;
}

// Leibniz expansion over all permutations.
MultiPoly permutation_det(const std::vector<std::vector<MultiPoly>>& m) {
  std::vector<int> perm(m.size());
  std::iota(perm.begin(), perm.end(), 0);
  MultiPoly total;
  do {
    int inversions = 0;
    for (std::size_t a = 0; a < perm.size(); ++a)
      for (std::size_t b = a + 1; b < perm.size(); ++b) inversions += perm[a] > perm[b];
    MultiPoly term(inversions % 2 ? -1 : 1);
    for (std::size_t r = 0; r < perm.size(); ++r) term = term * m[r][static_cast<std::size_t>(perm[r])];
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

}  // namespace

TEST_CASE("pair variables are unordered and off-diagonal") {
  CHECK(PairVar(3, 1) == PairVar(1, 3));
  CHECK(PairVar(1, 2) < PairVar(1, 3));
  CHECK(PairVar(1, 9) < PairVar(2, 3));
  CHECK_THROWS_AS(PairVar(2, 2), std::invalid_argument);
  CHECK_THROWS_AS(PairVar(0, 2), std::invalid_argument);
  CHECK(MultiPoly::pair(4, 4) == MultiPoly(2));
  CHECK(X(2, 5).to_string() == "x[2,5]");
}

TEST_CASE("lex order ranks x[1,2] highest") {
  MultiPoly p = X(2, 3).pow(5) + X(1, 3) * X(2, 3) + X(1, 2);
  CHECK(p.to_string() == "x[1,2] + x[1,3] * x[2,3] + x[2,3]^5");
  CHECK(p.leading_coefficient() == Rational(1));
  CHECK(p.total_degree() == 5);
  CHECK(p.variables() == std::set<PairVar>{PairVar(1, 2), PairVar(1, 3), PairVar(2, 3)});
}

TEST_CASE("ring axioms on random polynomials") {
  for (int k = 0; k < 40; ++k) {
    MultiPoly a = random_poly(4, 5), b = random_poly(4, 5), c = random_poly(4, 4);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a * b) * c == a * (b * c));
    CHECK((a - a).is_zero());
    CHECK(a.pow(3) == a * a * a);
  }
}

TEST_CASE("zero coefficients never survive") {
  MultiPoly p = X(1, 2) + X(1, 3);
  p -= X(1, 3);
  CHECK(p.size() == 1);
  CHECK((X(1, 2) * Rational(0)).is_zero());
  CHECK(MultiPoly(Rational(7, 3)).is_constant());
  CHECK(MultiPoly(Rational(7, 3)).constant_term() == Rational(7, 3));
}

TEST_CASE("text round trip") {
  for (int k = 0; k < 40; ++k) {
    MultiPoly p = random_poly(5, 6) * Rational(1, 1 + k % 4);
    CHECK(MultiPoly::parse(p.to_string()) == p);
  }
  CHECK(MultiPoly::parse("2 * x[1,2]^2 - 1/3 * x[2,1] + 4") ==
        X(1, 2).pow(2) * Rational(2) - X(1, 2) * Rational(1, 3) + MultiPoly(4));
  CHECK(MultiPoly::parse("-x[1,3]*x[3,3]") == X(1, 3) * MultiPoly(-2));
  CHECK(MultiPoly::parse("a^2 - b", {{"a", PairVar(1, 2)}, {"b", PairVar(1, 3)}}) ==
        X(1, 2).pow(2) - X(1, 3));
  CHECK_THROWS_WITH_AS(MultiPoly::parse("x[1,2] +* 3"), doctest::Contains("parse error at offset"),
                       std::invalid_argument);
  CHECK_THROWS_AS(MultiPoly::parse("y"), std::invalid_argument);
  CHECK_THROWS_AS(MultiPoly::parse(""), std::invalid_argument);
}

TEST_CASE("json round trip uses keyed monomials") {
  MultiPoly p = X(1, 2).pow(3) * Rational(-5, 2) + X(2, 4) + MultiPoly(1);
  nlohmann::json j = p.to_json();
  CHECK(j[0]["coeff"] == "-5/2");
  CHECK(j[0]["monomial"]["1,2"] == 3);
  CHECK(j[2]["monomial"].empty());
  CHECK(MultiPoly::from_json(j) == p);
  CHECK(MultiPoly::from_json(nlohmann::json::parse(j.dump())) == p);
  for (int k = 0; k < 20; ++k) {
    MultiPoly q = random_poly(5, 6);
    CHECK(MultiPoly::from_json(q.to_json()) == q);
  }
}

TEST_CASE("canonical form is primitive with positive leading coefficient") {
  MultiPoly p = X(1, 2) * Rational(-2, 3) + X(1, 3) * Rational(4, 9) - MultiPoly(Rational(2, 9));
  MultiPoly c = p.canonical();
  CHECK(c == X(1, 2) * MultiPoly(3) - X(1, 3) * MultiPoly(2) + MultiPoly(1));
  CHECK(c.canonical() == c);
  CHECK((p * Rational(-17)).canonical() == c);
}

TEST_CASE("substitution and evaluation agree") {
  Field<Rational> q;
  for (int k = 0; k < 20; ++k) {
    MultiPoly p = random_poly(3, 6);
    MultiPoly s = random_poly(3, 3);
    std::map<PairVar, MultiPoly> sub{{PairVar(1, 2), s}};
    MultiPoly composed = p.substitute(sub);
    auto value = [](const PairVar& v) -> Rational { return Rational(v.i + 2 * v.j) / 3; };
    Rational s_val = s.evaluate(q, value);
    Rational direct = p.evaluate(q, [&](const PairVar& v) { return v == PairVar(1, 2) ? s_val : value(v); });
    CHECK(composed.evaluate(q, value) == direct);
  }
}

TEST_CASE("symbolic determinant matches the permutation expansion") {
  CHECK_THROWS_AS(det({}), std::invalid_argument);
  CHECK_THROWS_AS(det(std::vector<std::vector<MultiPoly>>(5, std::vector<MultiPoly>(5))),
                  std::invalid_argument);
  for (int n = 1; n <= 4; ++n) {
    std::vector<std::vector<MultiPoly>> m(static_cast<std::size_t>(n), std::vector<MultiPoly>(static_cast<std::size_t>(n)));
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) m[r][c] = X(r + 1, c + 1);
    CHECK(det(m) == permutation_det(m));
  }
  // Gram-style 3x3 in trace coordinates.
  std::vector<std::vector<MultiPoly>> g{{2, X(1, 2), X(1, 3)}, {X(1, 2), 2, X(2, 3)}, {X(1, 3), X(2, 3), 2}};
  CHECK(det(g) == MultiPoly::parse("8 - 2*x[1,2]^2 - 2*x[1,3]^2 - 2*x[2,3]^2 + 2*x[1,2]*x[1,3]*x[2,3]"));
}
