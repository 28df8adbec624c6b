#include "doctest.h"

#include <random>

#include "daha/discrete.hpp"

using namespace daha;

namespace {

Coweight cw(std::initializer_list<int> xs) {
  Coweight b;
  int i = 0;
  for (int x : xs) b[i++] = x;
  return b;
}

std::vector<ExtWeyl> ball(const RootDatum& d, int radius) {
  std::vector<ExtWeyl> out;
  for (const auto& layer : ball_by_length(d, radius)) out.insert(out.end(), layer.begin(), layer.end());
  return out;
}

// The discretization w -> p(w) of a Laurent polynomial.
Scalar discretize(const RootDatum& d, const LaurentPoly& p, const ExtWeyl& w, const Character& xi) {
  Scalar s;
  for (const auto& [e, c] : p.terms()) s += c * x_at(d, e, w, xi);
  return s;
}

FinSupp apply_in(const RootDatum& d, const Generator& g, const FinSupp& v, const Character& xi) {
  return v.basis == Basis::Characteristic ? apply_gen_functional(d, g, v, xi) : apply_gen_delta(d, g, v, xi);
}

// Bilinear pairing {f_u, delta_w} = [u = w].
Scalar natural_pairing(const FinSupp& f, const FinSupp& v) {
  Scalar s;
  for (const auto& [w, c] : f.coeffs) s += c * v.at(w);
  return s;
}

}  // namespace

TEST_CASE("A1 values at t^{-rho}") {
  const RootDatum d = RootDatum::build('A', 1);
  const Character rho = character_t_minus_rho(d);
  const ExtWeyl id = ext_identity(d), s0 = ext_simple(d, 0), s1 = ext_simple(d, 1), p1 = ext_pi(d, 1);
  const Scalar q = q_pow(d, 1), th = t_half(d, 1), t = th * th;

  CHECK(x_at(d, d.simple_coroot(1), id, rho) == t.inverse());
  CHECK(x_simple_at(d, 0, id, rho) == q * t);
  CHECK(mu1(d, id, rho) == Scalar(1));
  CHECK(mu1(d, s1, rho) == Scalar(0));
  CHECK(mu1(d, p1, rho) != Scalar(0));
  CHECK(delta_gaussian(d, p1, rho) == q_pow(d, Rational(1, 4)) * th);

  const Character gen = character_generic(d);
  const Scalar x = x_of(d, d.simple_coroot(1), gen);
  CHECK(mu1(d, s1, gen) == (th.inverse() - th * x) / (th - th.inverse() * x));
  CHECK(mu1(d, s0 * s1, gen) == mu1_telescoped(d, s0 * s1, gen));

  const FinSupp tv = apply_gen_delta(d, Generator::t(1), FinSupp::single(Basis::Delta, id), rho);
  CHECK(tv == FinSupp::single(Basis::Delta, id, th));
}

TEST_CASE("mu_1 weights") {
  for (auto [type, rank, radius] : {std::tuple{'A', 1, 6}, {'A', 2, 4}, {'C', 2, 4}, {'G', 2, 3}}) {
    CAPTURE(type);
    const RootDatum d = RootDatum::build(type, rank);
    const Character gen = character_generic(d);
    for (const auto& w : ball(d, radius)) {
      const Scalar m = mu1(d, w, gen);
      CHECK(m == mu1_telescoped(d, w, gen));
      CHECK(conj(m) == m);
    }
  }
  const RootDatum d = RootDatum::build('A', 2);
  const Character rho = character_t_minus_rho(d);
  for (const auto& w : ball(d, 4)) CHECK(conj(mu1(d, w, rho)) == mu1(d, w, rho));
}

TEST_CASE("functional representation matches the discretized polynomial action") {
  for (auto [type, rank] : {std::pair{'A', 1}, {'A', 2}, {'C', 2}, {'G', 2}}) {
    CAPTURE(type);
    const RootDatum d = RootDatum::build(type, rank);
    const Character gen = character_generic(d);
    const int radius = 3;
    const auto layers = ball_by_length(d, radius);
    Coweight b;
    b[0] = 1;
    b[rank - 1] -= 1;
    const LaurentPoly p = LaurentPoly::monomial(b, Scalar(1)) + LaurentPoly::monomial(Coweight{}, q_pow(d, 1)) +
                          LaurentPoly::monomial(d.fundamental(rank), t_half(d, rank));
    FinSupp f;
    for (const auto& layer : layers)
      for (const auto& w : layer) f.add(w, discretize(d, p, w, gen));

    auto compare = [&](const FinSupp& image, const LaurentPoly& expected) {
      for (int l = 0; l < radius; ++l)
        for (const auto& w : layers[l]) CHECK(image.at(w) == discretize(d, expected, w, gen));
    };
    for (int j = 0; j <= rank; ++j)
      compare(apply_gen_functional(d, Generator::t(j), f, gen), apply_T(d, j, p, Level::Zero));
    for (const auto& e : d.minuscule())
      compare(apply_gen_functional(d, Generator::pi(e.r), f, gen), apply_pi(d, e.r, p, Level::Zero));
    for (int i = 1; i <= rank; ++i)
      compare(apply_gen_functional(d, Generator::x(d.fundamental(i)), f, gen),
              apply_x(d, d.fundamental(i), p));
  }
}

TEST_CASE("isomorphism f_w -> mu_1(w) delta_w") {
  for (auto [type, rank] : {std::pair{'A', 1}, {'A', 2}, {'C', 2}}) {
    CAPTURE(type);
    const RootDatum d = RootDatum::build(type, rank);
    const Character gen = character_generic(d);
    const auto support = ball(d, 3);
    const CheckReport rep = iso_check(d, gen, support);
    CHECK(rep.ok());
    CHECK(rep.checks > 0);
    // Dropping one factor of mu_1 breaks the intertwining.
    CHECK_FALSE(iso_check(d, gen, support, 0).ok());
  }
}

TEST_CASE("pairing compatibility and adjointness") {
  std::mt19937 rng(20261016);
  for (auto [type, rank] : {std::pair{'A', 1}, {'A', 2}, {'C', 2}}) {
    CAPTURE(type);
    const RootDatum d = RootDatum::build(type, rank);
    const Character gen = character_generic(d);
    const auto pts = ball(d, 2);
    auto random_supp = [&](Basis basis) {
      FinSupp f;
      f.basis = basis;
      for (int i = 0; i < 3; ++i) {
        const Scalar c = qt_monomial(int(rng() % 3) - 1, int(rng() % 3) - 1, 0, 0) + Scalar(int(rng() % 3) + 1);
        f.add(pts[rng() % pts.size()], c);
      }
      return f;
    };
    std::vector<Generator> gens;
    for (int j = 0; j <= rank; ++j) gens.push_back(Generator::t(j));
    for (const auto& e : d.minuscule()) gens.push_back(Generator::pi(e.r));
    for (int i = 1; i <= rank; ++i) gens.push_back(Generator::x(d.fundamental(i)));

    for (const auto& g : gens) {
      CAPTURE(to_string(g));
      Generator g_star = g;
      g_star.inverse = true;
      for (Basis basis : {Basis::Characteristic, Basis::Delta})
        for (int r = 0; r < 3; ++r) {
          const FinSupp f = random_supp(basis), h = random_supp(basis);
          CHECK(inner1(d, apply_in(d, g, f, gen), h, gen) == inner1(d, f, apply_in(d, g_star, h, gen), gen));
        }
      if (g.kind != Generator::T) continue;
      for (int r = 0; r < 3; ++r) {
        const FinSupp f = random_supp(Basis::Characteristic);
        for (const auto& w : pts) {
          const FinSupp delta = FinSupp::single(Basis::Delta, w);
          CHECK(natural_pairing(apply_gen_functional(d, g, f, gen), delta) ==
                natural_pairing(f, apply_gen_delta(d, g, delta, gen)));
        }
      }
    }
    CHECK_THROWS_AS(inner1(d, random_supp(Basis::Characteristic), random_supp(Basis::Delta), gen),
                    std::invalid_argument);
  }
}

TEST_CASE("delta_# at t^{-rho}") {
  for (auto [type, rank, radius] : {std::tuple{'A', 1, 6}, {'A', 2, 4}, {'C', 2, 4}}) {
    CAPTURE(type);
    const RootDatum d = RootDatum::build(type, rank);
    const CheckReport rep = delta_sharp_check(d, radius);
    CHECK(rep.ok());
    CHECK(rep.checks > 0);
  }
}

TEST_CASE("duality map: X on delta_{pi_b} against Y on hat e_b") {
  for (auto [type, rank, radius] : {std::tuple{'A', 1, 4}, {'A', 2, 3}, {'C', 2, 3}}) {
    CAPTURE(type);
    const RootDatum d = RootDatum::build(type, rank);
    const Character rho = character_t_minus_rho(d);
    for (const auto& w : ball(d, radius)) {
      if (!is_pi_form(d, w)) continue;
      const LaurentPoly e = nonsym_hat(d, w.b);
      for (int i = 1; i <= rank; ++i) {
        const Coweight bi = d.fundamental(i);
        const Scalar x = x_at(d, bi, w, rho);
        CHECK(x == x_at_sharp(d, bi, 0, w.b));
        const FinSupp image = apply_gen_delta(d, Generator::x(bi), FinSupp::single(Basis::Delta, w), rho);
        CHECK(image == FinSupp::single(Basis::Delta, w, x));
        CHECK(apply_Y(d, bi, e) == e * x.inverse());
      }
    }
  }
}

TEST_CASE("convergence conditions") {
  const RootDatum d = RootDatum::build('A', 1);
  const Coweight w = cw({1});
  const KParams k{-1.37, -1.37};
  CHECK(jackson_condition(d, k, w, -w).ok);
  CHECK(jackson_condition(d, k, -w, -w).ok);
  const ConvergenceCondition bad = jackson_condition(d, k, -2 * w, -2 * w);
  CHECK_FALSE(bad.ok);
  CHECK(bad.p[0] == doctest::Approx(0.63));
  CHECK_THROWS_AS(jackson_check(d, 2 * w, -2 * w, 0.25, k, 10), std::domain_error);
  CHECK_THROWS_AS(aomoto_estimate(d, 0.25, k, 10, w, 2 * w), std::domain_error);
}

TEST_CASE("Jackson sums on A1") {
  const RootDatum d = RootDatum::build('A', 1);
  const Coweight w = cw({1});
  const KParams k{-1.37, -1.37};

  const JacksonReport unit = jackson_check(d, Coweight{}, Coweight{}, 0.25, k, 40);
  for (const auto& row : unit.shells) CHECK(std::abs(row.ratio - 1.0) < 1e-14);

  CHECK(std::abs(jackson_check(d, w, -w, 0.25, k, 40).ratio) < 1e-6);

  const JacksonReport diag = jackson_check(d, -w, -w, 0.25, k, 40);
  const SpecPoint pt = spec_point(d, 0.25, k);
  const std::complex<double> q0 = 0.25, t0 = std::pow(q0, k.k_long);
  CHECK(std::abs(diag.expected - t0 * (1.0 - q0) / (1.0 - q0 * t0 * t0)) < 1e-12);
  CHECK(std::abs(diag.expected - specialize(norm_closed(d, -w), pt)) < 1e-12);
  CHECK(diag.error < 1e-6);
  CHECK(diag.shells.size() == 41);
  CHECK(diag.shells.back().tail_estimate < 1e-6);

  CHECK(jackson_check(d, w, w, 0.25, k, 40).error < 1e-6);
}

TEST_CASE("Aomoto sums on A1") {
  const RootDatum d = RootDatum::build('A', 1);
  const Coweight w = cw({1});
  const Character rho = character_t_minus_rho(d);
  CHECK(mu1_prime(d, Coweight{}, rho) == Scalar(1));
  CHECK(mu1_prime(d, w, rho) == Scalar(0));
  CHECK(mu1_prime(d, -w, rho) != Scalar(0));
  // The condition with v = a_+ - (b_+)_- = 3w needs k < -3/2.
  const KParams k{-2.37, -2.37};
  const AomotoReport r10 = aomoto_estimate(d, 0.25, k, 10, w, 2 * w);
  const AomotoReport r20 = aomoto_estimate(d, 0.25, k, 20, w, 2 * w);
  const AomotoReport r40 = aomoto_estimate(d, 0.25, k, 40, w, 2 * w);
  CHECK(std::abs(r40.pairing) < 1e-6);
  CHECK(std::abs(r10.a_xi - r20.a_xi) >= std::abs(r20.a_xi - r40.a_xi));
  CHECK(std::abs(r40.a_xi - aomoto_estimate(d, 0.25, k, 80, w, 2 * w).a_xi) < 1e-9);
}
