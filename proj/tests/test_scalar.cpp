#include "doctest.h"

#include <random>

#include "daha/scalar.hpp"

using namespace daha;

namespace {

Scalar q(int e, int two_m = 2) { return q_power(Rational(e), two_m); }
Scalar t(int e) { return t_power(true, Rational(e)); }

// Random Laurent polynomial with small support in v, u_l.
Scalar random_laurent(std::mt19937& rng) {
  std::uniform_int_distribution<int> ex(-2, 3), co(-3, 3), n(1, 4);
  std::vector<Term> terms;
  int k = n(rng);
  for (int i = 0; i < k; ++i) terms.push_back(Term{Exponent{ex(rng), ex(rng), 0, 0}, Rational(co(rng))});
  return Scalar(Poly::from_terms(terms));
}

Scalar random_scalar(std::mt19937& rng) {
  Scalar d = random_laurent(rng);
  while (d.is_zero()) d = random_laurent(rng);
  return random_laurent(rng) / d;
}

}  // namespace

TEST_CASE("q_power and t_power") {
  CHECK(q_power(Rational(0), 4).is_one());
  CHECK(q_power(make_rational(1, 4), 4) == qt_monomial(1, 0, 0));
  CHECK(q_power(Rational(-1), 4) == qt_monomial(-4, 0, 0));
  CHECK_THROWS(q_power(make_rational(1, 8), 4));
  CHECK(t_power(true, make_rational(1, 2)) == qt_monomial(0, 1, 0));
}

TEST_CASE("canonical form and text") {
  const int tm = 2;  // A1: v = q^{1/4}... here 2m=2 for readability
  Scalar a = (Scalar(1) - q(1, tm) * t(1)) / (Scalar(1) - q(1, tm));
  CHECK(to_string(a, tm) == "(q*t_l - 1)/(q - 1)");
  CHECK(a.den().leading_coefficient() == 1);
  Scalar b = (Scalar(1) - q(2, tm)) / (Scalar(1) - q(1, tm));
  CHECK(b == Scalar(1) + q(1, tm));
  CHECK(laurent_membership(b, tm));
  Scalar c = q(1, tm) * (Scalar(1) - t(1)) / (Scalar(1) - q(1, tm) * t(1));
  CHECK_FALSE(laurent_membership(c, tm));
  CHECK(laurent_membership(q(-1, tm) * t(2) + Scalar(3), tm));
  CHECK_FALSE(laurent_membership(qt_monomial(1, 0, 0), 4));
}

TEST_CASE("specialize") {
  SpecPoint p = spec_point_from_qt(0.25, 4, 8.0, 1.0);
  CHECK(std::abs(specialize(Scalar(1), p) - 1.0) < 1e-15);
  CHECK(std::abs(specialize(qt_monomial(2, 0, 0), p) - 0.5) < 1e-12);
  Scalar a = (Scalar(1) - q(1, 4) * t(1)) / (Scalar(1) - q(1, 4));
  CHECK(std::abs(specialize(a, p) - (-4.0 / 3.0)) < 1e-12);
  CHECK_THROWS(specialize(Scalar(1) / (Scalar(1) - q(1, 4)), spec_point_from_qt(1.0, 4, 1.0, 1.0)));
}

TEST_CASE("field axioms on random scalars") {
  std::mt19937 rng(7);
  SpecPoint p = spec_point_from_qt({0.31, 0.17}, 2, {1.7, -0.4}, 1.0);
  for (int iter = 0; iter < 60; ++iter) {
    Scalar a = random_scalar(rng), b = random_scalar(rng), c = random_scalar(rng);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == Scalar(0));
    if (!a.is_zero()) CHECK(a * a.inverse() == Scalar(1));
    // Canonical form agrees with cross multiplication.
    bool cross = (a.num() * b.den() == b.num() * a.den());
    CHECK(cross == (a == b));
    Scalar renorm(a.num(), a.den());
    CHECK(renorm == a);
    NumericScalar lhs = specialize(a * b + c, p);
    NumericScalar rhs = specialize(a, p) * specialize(b, p) + specialize(c, p);
    CHECK(std::abs(lhs - rhs) <= 1e-9 * (1 + std::abs(rhs)));
    CHECK(conj(conj(a)) == a);
  }
}

TEST_CASE("jets") {
  KappaScalar k = KappaScalar::monomial(Exponent{0, 1, 0, 0});
  JetScalar x = jet_of(t_power(true, make_rational(1, 2)), 4, k, k);
  CHECK(x.a0 == KappaScalar(1));
  CHECK(x.a1 == k * KappaScalar(make_rational(1, 2)));
  JetScalar y = jet_of(q(1, 4), 4, k, k);
  JetScalar xy = x * y;
  CHECK(xy.a1 == x.a0 * y.a1 + x.a1 * y.a0);
  CHECK(jet_of(t_power(true, make_rational(1, 2)) * q(1, 4), 4, k, k) == xy);
  CHECK((x * x.inverse()) == JetScalar(KappaScalar(1)));
}

TEST_CASE("gcd of products with a planted common factor") {
  std::mt19937 rng(19);
  std::uniform_int_distribution<int> ex(0, 4), co(-5, 5), n(2, 6);
  auto random_poly = [&]() {
    std::vector<Term> terms;
    const int k = n(rng);
    for (int i = 0; i < k; ++i) terms.push_back(Term{Exponent{ex(rng), ex(rng), ex(rng), 0}, Rational(co(rng))});
    Poly p = Poly::from_terms(terms);
    return p.is_zero() ? Poly(1) + Poly::variable(0) : p;
  };
  for (int iter = 0; iter < 40; ++iter) {
    const Poly f = random_poly() + Poly(1), a = random_poly(), b = random_poly();
    const Poly af = a * f, bf = b * f;
    const Poly g = gcd(af, bf);
    REQUIRE(divide_exact(g, f.shifted(-f.min_exponent())).has_value());
    const auto ca = divide_exact(af, g), cb = divide_exact(bf, g);
    REQUIRE(ca.has_value());
    REQUIRE(cb.has_value());
    // Any common factor of the cofactors would enlarge g.
    const Poly h = gcd(ca->shifted(-ca->min_exponent()), cb->shifted(-cb->min_exponent()));
    CHECK(h.is_constant());
    CHECK(g.leading_coefficient() == 1);
  }
}
