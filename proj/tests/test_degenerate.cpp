#include "doctest.h"

#include <random>

#include "daha/degenerate.hpp"

using namespace daha;

namespace {

Coweight omega1() {
  Coweight w;
  w[0] = 1;
  return w;
}

// 1 is a joint eigenvector with y_i = rho_kappa(b_i).
TaggedVector unit_vector(const RootDatum& d, const KappaParams& k) {
  TaggedVector v{KLaurentPoly::monomial(Coweight{}), {}};
  for (int i = 1; i <= d.rank(); ++i) v.y_values.push_back(rho_kappa(d, d.fundamental(i), k));
  return v;
}

bool is_tagged_eigenvector(const RootDatum& d, const TaggedVector& v, const KappaParams& k) {
  for (int i = 1; i <= d.rank(); ++i)
    if (apply_dunkl(d, d.fundamental(i), 0, v.vector, k) != v.vector * v.y_values[i - 1]) return false;
  return true;
}

}  // namespace

TEST_CASE("derivatives and Dunkl operators on A1") {
  const RootDatum d = RootDatum::build('A', 1);
  const KappaParams k = kappa_formal();
  const KappaScalar kappa = k.long_root;
  const Coweight w = omega1();
  const KLaurentPoly one = KLaurentPoly::monomial(Coweight{}), xw = KLaurentPoly::monomial(w);

  CHECK(apply_partial(d, w, one).is_zero());
  CHECK(apply_partial(d, w, xw) == xw * KappaScalar(Rational(-1, 2)));
  const KLaurentPoly sum = xw + KLaurentPoly::monomial(-2 * w, kappa);
  CHECK(apply_partial(d, w, sum) == apply_partial(d, w, xw) + apply_partial(d, w, KLaurentPoly::monomial(-2 * w, kappa)));

  CHECK(apply_dunkl(d, w, 0, one, k) == one * (kappa * KappaScalar(Rational(1, 2))));
  CHECK(apply_dunkl(d, w, 0, xw, k) == xw * (-(KappaScalar(1) + kappa) * KappaScalar(Rational(1, 2))));
  for (const auto& c : monomial_box(d, 3)) {
    const KLaurentPoly p = KLaurentPoly::monomial(c, kappa + KappaScalar(2));
    CHECK(apply_dunkl(d, w, 1, p, k) == apply_dunkl(d, w, 0, p, k) - p);
  }
  CHECK(rho_kappa(d, d.simple_coroot(1), k) == kappa);
  CHECK(h_kappa(d, k) == kappa * KappaScalar(2));
}

TEST_CASE("degenerate relations") {
  const KappaParams k = kappa_formal();
  for (auto [type, rank, degree] : {std::tuple{'A', 1, 3}, {'A', 2, 2}, {'C', 2, 2}, {'G', 2, 2}}) {
    CAPTURE(type);
    const RootDatum d = RootDatum::build(type, rank);
    const DegenerateReport rep = check_degenerate_relations(d, degree, k);
    CHECK(rep.ok());
    CHECK(rep.checks > 0);
    CHECK_FALSE(check_degenerate_relations(d, degree, k, true).ok());
  }
  const RootDatum a2 = RootDatum::build('A', 2);
  for (const auto& c : monomial_box(a2, 2)) {
    const KLaurentPoly p = KLaurentPoly::monomial(c);
    const Coweight b1 = a2.fundamental(1), b2 = a2.fundamental(2);
    CHECK(apply_dunkl(a2, b1, 0, apply_dunkl(a2, b2, 0, p, k), k) ==
          apply_dunkl(a2, b2, 0, apply_dunkl(a2, b1, 0, p, k), k));
  }
}

TEST_CASE("first-order degeneration of Y") {
  const KappaParams k = kappa_formal();
  const RootDatum d = RootDatum::build('A', 1);
  const Coweight w = omega1();
  const JetImage unit = jet_of_Y(d, w, Coweight{}, k);
  CHECK(unit.order0 == KLaurentPoly::monomial(Coweight{}));
  CHECK(unit.order1 == KLaurentPoly::monomial(Coweight{}, k.long_root * KappaScalar(Rational(1, 2))));
  const JetImage xw = jet_of_Y(d, w, w, k);
  CHECK(xw.order1.coefficient(w) == -(KappaScalar(1) + k.long_root) * KappaScalar(Rational(1, 2)));
  CHECK(xw.order1 == apply_dunkl(d, w, 0, KLaurentPoly::monomial(w), k));

  for (auto [type, rank, degree] : {std::tuple{'A', 1, 3}, {'A', 2, 2}, {'C', 2, 2}, {'G', 2, 2}}) {
    CAPTURE(type);
    const RootDatum dd = RootDatum::build(type, rank);
    const DegenerateReport rep = check_degeneration(dd, degree, k);
    CHECK(rep.ok());
    CHECK(rep.checks > 0);
  }
  const RootDatum c2 = RootDatum::build('C', 2);
  CHECK(check_degeneration(c2, 2, kappa_rational(Rational(1, 3), Rational(-2, 5))).ok());
}

TEST_CASE("degenerate intertwiners") {
  const KappaParams k = kappa_formal();
  const KappaScalar kappa = k.long_root;
  const RootDatum d = RootDatum::build('A', 1);
  const Coweight w = omega1();

  const TaggedVector one = unit_vector(d, k);
  const TaggedVector xw = apply_degen_pi(d, 1, one);
  CHECK(xw.vector == KLaurentPoly::monomial(w));
  CHECK(is_tagged_eigenvector(d, xw, k));
  CHECK(xw.y_values[0] == -(KappaScalar(1) + kappa) * KappaScalar(Rational(1, 2)));

  CHECK(y_eigenvalue(d, xw, d.simple_coroot(1)) == -(KappaScalar(1) + kappa));
  const TaggedVector phi = apply_degen_intertwiner(d, 1, xw, k);
  CHECK(phi.vector == KLaurentPoly::monomial(-w) + KLaurentPoly::monomial(w, kappa / (KappaScalar(1) + kappa)));
  CHECK(is_tagged_eigenvector(d, phi, k));

  TaggedVector zero{KLaurentPoly::monomial(Coweight{}), {KappaScalar()}};
  CHECK_THROWS_AS(apply_degen_intertwiner(d, 1, zero, k), std::domain_error);
  TaggedVector minus_one{KLaurentPoly::monomial(Coweight{}), {KappaScalar(Rational(-1, 2))}};
  CHECK_THROWS_AS(apply_degen_intertwiner(d, 0, minus_one, k), std::domain_error);

  for (auto [type, rank] : {std::pair{'A', 1}, {'A', 2}, {'C', 2}, {'G', 2}}) {
    CAPTURE(type);
    const RootDatum dd = RootDatum::build(type, rank);
    std::mt19937 rng(11);
    TaggedVector v = unit_vector(dd, k);
    const auto& pis = dd.minuscule();
    int nonzero_steps = 0;
    for (int step = 0; step < 12; ++step) {
      const int choice = int(rng() % (rank + 1 + pis.size()));
      if (choice <= rank) {
        const KappaScalar denom = choice == 0 ? y_eigenvalue(dd, v, dd.theta_coroot()) + KappaScalar(1)
                                              : y_eigenvalue(dd, v, dd.simple_coroot(choice));
        if (denom.is_zero()) continue;
        v = apply_degen_intertwiner(dd, choice, v, k);
      } else {
        v = apply_degen_pi(dd, pis[choice - rank - 1].r, v);
      }
      CHECK(is_tagged_eigenvector(dd, v, k));
      // Phi'_i kills s_i-invariant eigenvectors such as 1.
      if (v.vector.is_zero()) v = unit_vector(dd, k);
      else ++nonzero_steps;
    }
    CHECK(nonzero_steps > 0);
  }
}
