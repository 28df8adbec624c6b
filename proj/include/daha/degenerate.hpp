// Degenerate double affine Hecke algebra at eta = 1: derivatives and
// trigonometric Dunkl operators on C(kappa)[x], the degenerate intertwiners,
// and the first-order jet of Y_b at q = 1 + h, t_nu = 1 + kappa_nu h.
#pragma once

#include <map>
#include <string>
#include <vector>

#include "daha/polyrep.hpp"

namespace daha {

// Finitely supported B -> KappaScalar; no zero coefficients are stored.
class KLaurentPoly {
 public:
  using Map = std::map<Coweight, KappaScalar>;

  KLaurentPoly() = default;
  static KLaurentPoly monomial(const Coweight& b, const KappaScalar& c = KappaScalar(1));

  const Map& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  KappaScalar coefficient(const Coweight& b) const;
  void add_term(const Coweight& b, const KappaScalar& c);

  KLaurentPoly& operator+=(const KLaurentPoly& o);
  KLaurentPoly& operator-=(const KLaurentPoly& o);
  KLaurentPoly& operator*=(const KappaScalar& c);
  friend KLaurentPoly operator+(KLaurentPoly a, const KLaurentPoly& b) { return a += b; }
  friend KLaurentPoly operator-(KLaurentPoly a, const KLaurentPoly& b) { return a -= b; }
  friend KLaurentPoly operator*(KLaurentPoly a, const KappaScalar& c) { return a *= c; }
  friend KLaurentPoly operator*(const KappaScalar& c, KLaurentPoly a) { return a *= c; }
  friend bool operator==(const KLaurentPoly& a, const KLaurentPoly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const KLaurentPoly& a, const KLaurentPoly& b) { return !(a == b); }

 private:
  Map terms_;
};

std::string to_string(const KLaurentPoly& p, const RootDatum& d);

// kappa_long, kappa_short: formal symbols or rationals.
struct KappaParams {
  KappaScalar long_root;
  KappaScalar short_root;
};
KappaParams kappa_formal();
KappaParams kappa_rational(const Rational& k_long, const Rational& k_short);

// kappa_j for the node j in 0..n (kappa_0 = kappa_long).
KappaScalar kappa_node(const RootDatum& d, int j, const KappaParams& k);
// rho_kappa(b) = sum_nu kappa_nu (rho_nu, b), so rho_kappa(a_j) = kappa_j.
KappaScalar rho_kappa(const RootDatum& d, const Coweight& b, const KappaParams& k);
// h_kappa = kappa_0 + rho_kappa(theta^vee).
KappaScalar h_kappa(const RootDatum& d, const KappaParams& k);

// d_a(x_b) = -(a, b) x_b; `flip_sign` drops the minus (negative control).
KLaurentPoly apply_partial(const RootDatum& d, const Coweight& a, const KLaurentPoly& p, bool flip_sign = false);
// x_c -> x_{w(c) + b} for g = b w in W x| B_X.
KLaurentPoly apply_group(const RootDatum& d, const ExtWeyl& g, const KLaurentPoly& p);

// y_{[b,v]} = d_b + sum_{alpha > 0} kappa_alpha (b, alpha) (X_{alpha^vee}^{-1} - 1)^{-1} (1 - s_alpha)
//             + rho_kappa(b) - v.
// Throws std::logic_error if a divided difference is not exact.
KLaurentPoly apply_dunkl(const RootDatum& d, const Coweight& b, const Rational& v, const KLaurentPoly& p,
                         const KappaParams& k, bool flip_partial_sign = false);

struct DegenerateFailure {
  std::string relation;
  Coweight witness;
};
struct DegenerateReport {
  int checks = 0;
  std::vector<DegenerateFailure> failures;
  bool ok() const { return failures.empty(); }
};

// On monomials of the box: [y_{b_i}, y_{b_j}] = 0,
// s_j y_[a,u] - y_{s_j[a,u]} s_j = kappa_j (a, alpha_j) for 0 <= j <= n,
// pi_r y_[a,u] = y_{pi_r[a,u]} pi_r; a runs over b_1..b_n and u over {0, 1}.
DegenerateReport check_degenerate_relations(const RootDatum& d, int degree_bound, const KappaParams& k,
                                            bool flip_partial_sign = false);

// Jet of Y_{b_i} x_c over Q(kappa)[h]/(h^2): order 0 is x_c, order 1 is y_{b_i}(x_c).
DegenerateReport check_degeneration(const RootDatum& d, int degree_bound, const KappaParams& k);

// Order-0 and order-1 parts of Y_b(x_c).
struct JetImage {
  KLaurentPoly order0, order1;
};
JetImage jet_of_Y(const RootDatum& d, const Coweight& b, const Coweight& c, const KappaParams& k);

// A joint y-eigenvector: y_{b_i} v = y_values[i-1] v.
struct TaggedVector {
  KLaurentPoly vector;
  std::vector<KappaScalar> y_values;
};

// Eigenvalue of y_[a,u] on a tagged vector: sum_i (a, alpha_i) y_i - u.
KappaScalar y_eigenvalue(const RootDatum& d, const TaggedVector& v, const Coweight& a, const Rational& u = 0);

// Phi'_i = s_i - kappa_i / y_{a_i} (1 <= i <= n), Phi'_0 = X_theta s_theta + kappa_0 / (y_theta + 1),
// with y replaced by its value on v. The tag becomes y_i -> value of y_{s_j^{-1}[b_i,0]}.
// Throws std::domain_error when the denominator vanishes.
TaggedVector apply_degen_intertwiner(const RootDatum& d, int j, const TaggedVector& v, const KappaParams& k);
// pi'_r = X_r omega_r^{-1}; the tag becomes y_i -> value of y_{pi_r^{-1}[b_i,0]}.
TaggedVector apply_degen_pi(const RootDatum& d, int r, const TaggedVector& v);

}  // namespace daha
