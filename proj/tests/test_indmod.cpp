#include "doctest.h"

#include <random>

#include "daha/indmod.hpp"

using namespace daha;

namespace {

std::vector<ExtWeyl> ball(const RootDatum& d, int radius) {
  std::vector<ExtWeyl> out;
  for (const auto& layer : ball_by_length(d, radius)) out.insert(out.end(), layer.begin(), layer.end());
  return out;
}

}  // namespace

TEST_CASE("classify on A1") {
  const RootDatum d = RootDatum::build('A', 1);

  const Classification gen = classify(d, character_generic(d));
  CHECK(gen.irreducible);
  CHECK(gen.cospherical);
  CHECK(gen.spherical_dual);
  CHECK(gen.induced_irreducible);
  CHECK(gen.witnesses.empty());

  const Classification rho = classify(d, character_t_minus_rho(d));
  CHECK_FALSE(rho.irreducible);
  CHECK_FALSE(rho.cospherical);
  CHECK(rho.spherical_dual);
  REQUIRE(rho.witnesses.size() == 1);
  CHECK(rho.witnesses[0] == Witness{0, false, 0, -1});

  // xi_1^2 = q^{-2} t^{-1}.
  const Classification shifted = classify(d, character_from_exponents(d, {{-1, Rational(-1, 2), 0}}));
  CHECK_FALSE(shifted.cospherical);
  CHECK(shifted.spherical_dual);
  REQUIRE(shifted.witnesses.size() == 1);
  CHECK(shifted.witnesses[0] == Witness{0, false, 2, -1});

  // xi_1^2 = t: the witness sits on the positive root; its mirror for -alpha has j = 0 and is not affine positive.
  const Classification dual = classify(d, character_from_exponents(d, {{0, Rational(1, 2), 0}}));
  CHECK(dual.cospherical);
  CHECK_FALSE(dual.spherical_dual);

  // xi_1 = q^{1/2}: x_alpha = q, so q^{-1} x_alpha = 1.
  const Classification unit = classify(d, character_from_exponents(d, {{Rational(1, 2), 0, 0}}));
  CHECK(unit.irreducible);
  CHECK_FALSE(unit.induced_irreducible);
  REQUIRE(unit.witnesses.size() == 1);
  CHECK(unit.witnesses[0] == Witness{0, false, -1, 0});

  CHECK_THROWS_AS(character_from_exponents(d, {}), std::invalid_argument);
}

TEST_CASE("numeric classify agrees with the exact solve") {
  const std::complex<double> q = 0.3, t = 0.7;
  for (auto [type, rank] : {std::pair{'A', 1}, {'A', 2}, {'C', 2}, {'G', 2}}) {
    CAPTURE(type);
    const RootDatum d = RootDatum::build(type, rank);
    const std::complex<double> ts = std::pow(t, 1.3);
    const SpecPoint pt = spec_point_from_qt(q, d.two_m(), t, ts);
    std::mt19937 rng(17);
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<QTExponents> exps;
      for (int i = 0; i < rank; ++i)
        exps.push_back({Rational(int(rng() % 9) - 4, d.two_m()), Rational(int(rng() % 5) - 2, 2),
                        Rational(int(rng() % 5) - 2, 2)});
      const Character xi = character_from_exponents(d, exps);
      NumericCharacter nx{q, t, ts, {}};
      for (const auto& v : xi.xi) nx.xi.push_back(specialize(v, pt));
      const Classification a = classify(d, xi), b = classify(d, nx);
      CHECK(a.witnesses == b.witnesses);
      CHECK(a.irreducible == b.irreducible);
    }
  }
  const RootDatum d = RootDatum::build('A', 1);
  CHECK_THROWS_AS(classify(d, NumericCharacter{std::polar(1.0, 0.4), 0.5, 0.5, {0.3}}), std::domain_error);
}

TEST_CASE("irreducibility is constant on W^b-orbits") {
  for (auto [type, rank] : {std::pair{'A', 1}, {'A', 2}, {'C', 2}}) {
    CAPTURE(type);
    const RootDatum d = RootDatum::build(type, rank);
    for (const Character& xi : {character_t_minus_rho(d), character_generic(d),
                                character_from_exponents(d, std::vector<QTExponents>(rank, {Rational(1, 2), 0, 0}))}) {
      const bool base = classify(d, xi).irreducible;
      for (const auto& u : ball(d, 3)) CHECK(classify(d, shifted_character(d, u, xi)).irreducible == base);
    }
  }
}

TEST_CASE("primitive characters") {
  const RootDatum d = RootDatum::build('A', 1);
  const PrimitiveReport gen = find_primitive(d, character_generic(d), 4);
  CHECK(gen.found);
  CHECK(gen.u0 == ext_identity(d));
  CHECK(gen.simple_stabilizer.empty());
  CHECK(gen.bound == 4);

  const PrimitiveReport one = find_primitive(d, character_from_exponents(d, {{0, 0, 0}}), 4);
  CHECK(one.found);
  CHECK(one.u0 == ext_identity(d));
  CHECK(one.simple_stabilizer == std::vector<int>{1});

  const PrimitiveReport rho = find_primitive(d, character_t_minus_rho(d), 4);
  CHECK(rho.found);
  CHECK(rho.u0 == ext_identity(d));
  CHECK(rho.simple_stabilizer.empty());

  const RootDatum a2 = RootDatum::build('A', 2);
  const PrimitiveReport trivial = find_primitive(a2, character_from_exponents(a2, {{0, 0, 0}, {0, 0, 0}}), 3);
  CHECK(trivial.found);
  CHECK(trivial.simple_stabilizer == std::vector<int>{1, 2});
}

TEST_CASE("eigenvector transport") {
  const RootDatum d = RootDatum::build('A', 1);
  const ExtWeyl id = ext_identity(d);
  const Character gen = character_generic(d);
  const Scalar th = t_half(d, 1);

  const TransportResult empty = transport(d, {}, id, gen);
  CHECK(empty.vector == FinSupp::single(Basis::Delta, id));
  CHECK(empty.multiplier == Scalar(1));

  const Scalar x = x_of(d, d.simple_coroot(1), gen);
  const TransportResult one = transport(d, {1}, id, gen);
  CHECK(one.end == ext_simple(d, 1));
  CHECK(one.vector == FinSupp::single(Basis::Delta, ext_simple(d, 1), th * x - th.inverse()));

  const TransportResult zero = transport(d, {1}, id, character_t_minus_rho(d));
  CHECK(zero.vector.coeffs.empty());
  CHECK(zero.multiplier == Scalar(0));

  for (auto [type, rank] : {std::pair{'A', 2}, {'C', 2}, {'G', 2}}) {
    CAPTURE(type);
    const RootDatum dd = RootDatum::build(type, rank);
    const Character xi = character_generic(dd);
    std::mt19937 rng(5);
    for (int trial = 0; trial < 6; ++trial) {
      std::vector<int> word;
      for (int i = 0; i < 5; ++i) word.push_back(int(rng() % (rank + 1)));
      const TransportResult r = transport(dd, word, ext_identity(dd), xi);
      ExtWeyl prod = ext_identity(dd);
      for (int j : word) prod = ext_simple(dd, j) * prod;
      CHECK(r.end == prod);
      REQUIRE(r.vector.coeffs.size() == 1);
      CHECK(shifted_character(dd, r.vector.coeffs.begin()->first, xi).xi == shifted_character(dd, prod, xi).xi);
      std::vector<int> there_and_back = word;
      there_and_back.insert(there_and_back.end(), word.rbegin(), word.rend());
      const TransportResult back = transport(dd, there_and_back, ext_identity(dd), xi);
      CHECK(back.end == ext_identity(dd));
      CHECK(back.vector.coeffs.size() == 1);
      CHECK(back.multiplier != Scalar(0));
    }
  }
}
