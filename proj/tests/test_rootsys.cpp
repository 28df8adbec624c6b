#include "doctest.h"

#include <vector>

#include "daha/rootsys.hpp"

using namespace daha;

namespace {

struct TypeCase {
  char family;
  int rank;
};

const std::vector<TypeCase> kTypes = {{'A', 1}, {'A', 2}, {'A', 3}, {'A', 4}, {'B', 2}, {'B', 3}, {'B', 4},
                                      {'C', 2}, {'C', 3}, {'C', 4}, {'D', 4}, {'F', 4}, {'G', 2}};

RootCoords simple(int i) {
  RootCoords c{};
  c[i - 1] = 1;
  return c;
}

}  // namespace

TEST_CASE("A1 datum") {
  auto d = RootDatum::build('A', 1);
  CHECK(d.root_gram(0, 0) == 2);
  CHECK(d.coweight_gram(0, 0) == make_rational(1, 2));
  CHECK(d.num_positive() == 1);
  CHECK(d.root(d.theta()).coords == simple(1));
  CHECK(d.m() == 2);
  // b_1 = alpha_1 / 2: the coroot alpha^vee = alpha has b-coordinate 2.
  CHECK(d.simple_coroot(1)[0] == 2);
  CHECK(d.pair(d.fundamental(1), d.fundamental(1)) == make_rational(1, 2));
  CHECK(d.pair(d.fundamental(1), d.simple_root(1)) == 1);
  REQUIRE(d.minuscule().size() == 1);
  CHECK(d.minuscule()[0].b_r == d.fundamental(1));
  CHECK(d.minuscule()[0].omega == d.simple_reflection(1));
  CHECK(d.star(1) == 1);
}

TEST_CASE("G2 root lengths") {
  auto d = RootDatum::build('G', 2);
  CHECK(d.num_positive() == 6);
  CHECK(d.has_short());
  CHECK(d.short_nu() == make_rational(2, 3));
  int longs = 0, shorts = 0;
  for (int k = 0; k < d.num_positive(); ++k) (d.root(k).is_long ? longs : shorts)++;
  CHECK(longs == 3);
  CHECK(shorts == 3);
  CHECK(d.minuscule().empty());
}

TEST_CASE("A2 coweight pairing by brute-force inversion") {
  auto d = RootDatum::build('A', 2);
  // Independent 2x2 inverse of [[2,-1],[-1,2]].
  Rational det = 2 * 2 - 1;
  CHECK(d.pair(d.fundamental(1), d.fundamental(2)) == Rational(1) / det);
  CHECK(d.pair(d.fundamental(1), d.fundamental(1)) == Rational(2) / det);
  // r* swaps the two nontrivial nodes.
  CHECK(d.star(1) == 2);
  CHECK(d.star(2) == 1);
}

TEST_CASE("C2 against an independent orthonormal model") {
  // Model: Z^2 with (x, y) = (x . y) / 2; long roots +-2e_i, short +-e1+-e2.
  auto ip = [](std::array<int, 2> x, std::array<int, 2> y) { return make_rational(x[0] * y[0] + x[1] * y[1], 2); };
  std::array<int, 2> a1{1, -1}, a2{0, 2};
  auto d = RootDatum::build('C', 2);
  CHECK(d.root_gram(0, 0) == ip(a1, a1));
  CHECK(d.root_gram(0, 1) == ip(a1, a2));
  CHECK(d.root_gram(1, 1) == ip(a2, a2));
  std::vector<std::array<int, 2>> pos = {{1, -1}, {1, 1}, {2, 0}, {0, 2}};
  CHECK(d.num_positive() == 4);
  // theta = 2e1 = 2 a1 + a2 in simple coordinates.
  CHECK(d.root(d.theta()).coords == RootCoords{2, 1});
  std::array<int, 2> rl{0, 0}, rs{0, 0};  // doubled rho_nu
  for (auto r : pos) {
    auto& t = ip(r, r) == 2 ? rl : rs;
    t[0] += r[0];
    t[1] += r[1];
  }
  // (rho_nu, alpha_j) = (doubled, alpha_j)/2 gives the b-coordinates.
  CHECK(d.rho(true)[0] == ip(rl, a1) / 2);
  CHECK(d.rho(true)[1] == ip(rl, a2) / 2);
  CHECK(d.rho(false)[0] == ip(rs, a1) / 2);
  CHECK(d.rho(false)[1] == ip(rs, a2) / 2);
  // Pi: theta = 2a1 + a2 so only node 2 is minuscule.
  REQUIRE(d.minuscule().size() == 1);
  CHECK(d.minuscule()[0].r == 2);
  CHECK(d.m() == 1);
}

TEST_CASE("E8, F4 have trivial Pi; E6/E7 data builds") {
  CHECK(RootDatum::build('E', 8).minuscule().empty());
  CHECK(RootDatum::build('F', 4).minuscule().empty());
  CHECK(RootDatum::build('E', 8).num_positive() == 120);
  CHECK(RootDatum::build('E', 7).minuscule().size() == 1);
  CHECK(RootDatum::build('E', 6).minuscule().size() == 2);
  CHECK(RootDatum::build('D', 5).minuscule().size() == 3);
}

TEST_CASE("invalid types are rejected") {
  CHECK_THROWS_AS(RootDatum::build('B', 1), std::invalid_argument);
  CHECK_THROWS_AS(RootDatum::build('E', 5), std::invalid_argument);
  CHECK_THROWS_AS(RootDatum::build('G', 3), std::invalid_argument);
  CHECK_THROWS_AS(RootDatum::build('X', 2), std::invalid_argument);
  CHECK_THROWS_AS(RootDatum::build('A', 9), std::invalid_argument);
}

TEST_CASE("datum invariants across types") {
  for (auto tc : kTypes) {
    CAPTURE(tc.family);
    CAPTURE(tc.rank);
    auto d = RootDatum::build(tc.family, tc.rank);
    const int n = d.rank();
    // (b_i, alpha_j) = delta_ij.
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) CHECK(d.pair(d.fundamental(i), d.simple_root(j)) == (i == j ? 1 : 0));
    // Long roots have length 2; theta is long and the unique highest root.
    Rational maxlen = 0;
    for (int k = 0; k < d.num_roots(); ++k) maxlen = std::max(maxlen, d.root(k).nu);
    CHECK(maxlen == 2);
    CHECK(d.root(d.theta()).is_long);
    for (int k = 0; k < d.num_positive(); ++k)
      for (int j = 0; j < n; ++j) CHECK(d.root(d.theta()).coords[j] >= d.root(k).coords[j]);
    // rho_nu by root sum equals (nu/2) sum_{nu_i = nu} b_i.
    for (int j = 1; j <= n; ++j) {
      bool lj = d.simple_is_long(j);
      CHECK(d.rho(true)[j - 1] == (lj ? Rational(1) : Rational(0)));
      CHECK(d.rho(false)[j - 1] == (lj ? Rational(0) : d.short_nu() / 2));
    }
    // w0 maps R_+ onto R_-.
    for (int k = 0; k < d.num_positive(); ++k) {
      int img = d.root_index(d.longest().apply_root(d.root(k).coords));
      REQUIRE(img >= 0);
      CHECK_FALSE(d.root(img).positive);
    }
    // q-powers q^{(a,b)} and q^{(b,b)/2} live in (1/2m)Z.
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Rational g = d.coweight_gram(i, j) * d.two_m();
        CHECK(g.get_den() == 1);
        if (i == j) CHECK(Rational(d.coweight_gram(i, i) * d.m()).get_den() == 1);
      }
    // Minuscule coweights pair with positive roots in {0, 1}; omega_r omega_{r*} = 1.
    for (const auto& e : d.minuscule()) {
      for (int k = 0; k < d.num_positive(); ++k) {
        int p = d.pair(e.b_r, k);
        CHECK((p == 0 || p == 1));
      }
      CHECK(e.omega.apply(e.b_r) == d.antidominant(e.b_r));
      const auto* es = d.minuscule_entry(e.star);
      REQUIRE(es != nullptr);
      CHECK((e.omega * es->omega).is_identity(n));
      CHECK(d.star(e.star) == e.r);
    }
  }
}

TEST_CASE("pair_rho is the inner product with rho_nu") {
  const RootDatum a1 = RootDatum::build('A', 1);
  Coweight w;
  w[0] = 1;
  CHECK(a1.pair_rho(w, true) == make_rational(1, 2));
  for (auto [f, n] : std::vector<std::pair<char, int>>{{'B', 2}, {'C', 3}, {'G', 2}, {'A', 3}}) {
    const RootDatum d = RootDatum::build(f, n);
    // (alpha_i^vee, rho_nu) = 1 for simple roots of length nu, else 0.
    for (int i = 1; i <= d.rank(); ++i) {
      const bool l = d.simple_is_long(i);
      CHECK(d.pair_rho(d.simple_coroot(i), true) == (l ? 1 : 0));
      CHECK(d.pair_rho(d.simple_coroot(i), false) == (l ? 0 : 1));
    }
  }
}
