#include <doctest.h>

#include "corpus.hpp"
#include "ghostchar/field.hpp"

using namespace ghostchar;

TEST_CASE("working precision is global and bounded below") {
  const unsigned before = working_precision();
  CHECK(before >= 64);
  CHECK_THROWS_AS(set_working_precision(32), std::invalid_argument);
  set_working_precision(128);
  CHECK(working_precision() == 128);
  CHECK(zero_threshold() < Real(1e-20));
  set_working_precision(before);
  CHECK(working_precision() == before);
}

TEST_CASE("rational conversion and rounding") {
  CHECK(parse_rational("-7/21") == Rational(-1, 3));
  CHECK(parse_rational("5") == Rational(5));
  CHECK_THROWS_AS(parse_rational("1/x"), std::invalid_argument);
  CHECK(to_string(parse_rational("-6/4")) == "-3/2");

  Real third = to_real(Rational(1, 3));
  CHECK(boost::multiprecision::abs(third * 3 - 1) < zero_threshold());
  CHECK(round_to_integer(Real(2.5)) == 3);
  CHECK(round_to_integer(Real(-2.5)) == -3);
  CHECK(round_to_integer(to_real(Integer("123456789012345678901234567890"))) ==
        Integer("123456789012345678901234567890"));
}

TEST_CASE("complex arithmetic agrees with std::complex") {
  for (int k = 0; k < 50; ++k) {
    auto a = corpus::random_complex(), b = corpus::random_complex();
    BigComplex A(a), B(b);
    CHECK(std::abs((A * B).to_double() - a * b) < 1e-12);
    CHECK(std::abs((A / B).to_double() - a / b) < 1e-9);
    CHECK(std::abs(sqrt(A).to_double() - std::sqrt(a)) < 1e-12);
    CHECK(std::abs(pow(A, 5).to_double() - std::pow(a, 5)) < 1e-9);
  }
  CHECK_THROWS_AS(BigComplex(Real(1)) / BigComplex(), std::domain_error);
}

TEST_CASE("quadratic field arithmetic") {
  const QuadraticNumber phi(Rational(1, 2), Rational(1, 2), 5);
  CHECK(phi * phi == phi + QuadraticNumber(1, 0, 5));
  CHECK(phi.norm() == Rational(-1));
  CHECK(phi * phi.inverse() == QuadraticNumber(1, 0, 5));
  CHECK(phi.to_string() == "1/2 + 1/2*sqrt(5)");
  CHECK(std::abs(phi.to_complex().to_double().real() - (1 + std::sqrt(5.0)) / 2) < 1e-15);

  const QuadraticNumber i(0, 1, -1);
  CHECK(i * i == QuadraticNumber(-1, 0, -1));
  CHECK(std::abs(i.to_complex().to_double() - std::complex<double>(0, 1)) < 1e-15);

  CHECK_THROWS_AS(QuadraticNumber(1, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(phi + i, std::invalid_argument);
  CHECK_THROWS_AS(QuadraticNumber(0, 0, 5).inverse(), std::domain_error);
}

TEST_CASE("quadratic field axioms on random elements") {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
  auto draw = [&] {
    return QuadraticNumber(Rational(num(corpus::rng()), den(corpus::rng())),
                           Rational(num(corpus::rng()), den(corpus::rng())), 13);
  };
  for (int k = 0; k < 100; ++k) {
    QuadraticNumber a = draw(), b = draw(), c = draw();
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a * b) * c == a * (b * c));
    CHECK((a * b).norm() == a.norm() * b.norm());
    if (!b.is_zero()) CHECK((a / b) * b == a);
    auto approx = (a * b).to_complex().to_double();
    auto direct = a.to_complex().to_double() * b.to_complex().to_double();
    CHECK(std::abs(approx - direct) < 1e-10);
  }
}

TEST_CASE("squarefree test") {
  CHECK(is_squarefree(5));
  CHECK(is_squarefree(-1));
  CHECK(is_squarefree(30));
  CHECK_FALSE(is_squarefree(12));
  CHECK_FALSE(is_squarefree(-9));
}

TEST_CASE("field contexts") {
  Field<Rational> q;
  CHECK(q.is_zero(q.lift(Rational(0))));
  CHECK(q.exact());
  Field<QuadraticNumber> k{5};
  CHECK(k.lift(Rational(3)) == QuadraticNumber(3, 0, 5));
  Field<BigComplex> c{Real(1e-20)};
  CHECK(c.is_zero(BigComplex(Real(1e-25))));
  CHECK_FALSE(c.is_zero(BigComplex(Real(1e-15))));
  CHECK_FALSE(c.exact());
}
