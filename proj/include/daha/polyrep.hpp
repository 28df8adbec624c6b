// Polynomial representations V_0 and V_1: Laurent polynomials in x_b (b in B)
// over the q,t field with the X, group, Demazure-Lusztig, pi_r and Y actions
// and the X-intertwiners.
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "daha/scalar.hpp"
#include "daha/weyl.hpp"

namespace daha {

// Finitely supported B -> Scalar; no zero coefficients are stored.
class LaurentPoly {
 public:
  using Map = std::map<Coweight, Scalar>;

  LaurentPoly() = default;
  static LaurentPoly constant(const Scalar& c);
  static LaurentPoly monomial(const Coweight& b, const Scalar& c = Scalar(1));

  const Map& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Scalar coefficient(const Coweight& b) const;
  void add_term(const Coweight& b, const Scalar& c);

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const Scalar& c);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(LaurentPoly a, const Scalar& c) { return a *= c; }
  friend LaurentPoly operator*(const Scalar& c, LaurentPoly a) { return a *= c; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly operator-() const;

  // Multiplies by x_b.
  LaurentPoly shifted(const Coweight& b) const;

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

 private:
  Map terms_;
};

// Zero: V_0. One: V_1 (level-0 action of tau(H)). MinusOne: level-0 action of
// tau^{-1}(H) (T_0 -> T_0^{-1} X_0^{-1}, pi_r -> q^{(b_r,b_r)/2} X_r^{-1} pi_r);
// group actions are not defined at MinusOne.
enum class Level { Zero = 0, One = 1, MinusOne = -1 };

// q^e in the field of the datum (e in (1/2m)Z).
Scalar q_pow(const RootDatum& d, const Rational& e);
// t_j^{1/2} for the simple affine root alpha_j (t_0 = t_long).
Scalar t_half(const RootDatum& d, int j);
// t_alpha^{e} for a finite root.
Scalar t_root_pow(const RootDatum& d, int root_idx, const Rational& e);

// X_{[b,k]} p = x_b q^k p.
LaurentPoly apply_x(const RootDatum& d, const Coweight& b, const LaurentPoly& p, const Rational& k = 0);
// X_{a_j} with a_0 = [-theta, 1].
LaurentPoly apply_x_simple(const RootDatum& d, int j, const LaurentPoly& p, int power = 1);

// w^(x_b) at level 0, w^<<x_b>> at level 1.
LaurentPoly apply_group(const RootDatum& d, const ExtWeyl& x, const LaurentPoly& p, Level level);
LaurentPoly apply_pi(const RootDatum& d, int r, const LaurentPoly& p, Level level);
LaurentPoly apply_pi_inv(const RootDatum& d, int r, const LaurentPoly& p, Level level);

// Demazure-Lusztig operator hat T_j, j in 0..n, and its inverse.
LaurentPoly apply_T(const RootDatum& d, int j, const LaurentPoly& p, Level level);
LaurentPoly apply_T_inv(const RootDatum& d, int j, const LaurentPoly& p, Level level);
// T_w = pi_r T_{j_l} ... T_{j_1} for the word [pi_r, s_{j_l}, ..., s_{j_1}].
LaurentPoly apply_T_word(const RootDatum& d, const Word& w, const LaurentPoly& p, Level level);
// (T_w)^{-1}.
LaurentPoly apply_T_word_inv(const RootDatum& d, const Word& w, const LaurentPoly& p, Level level);

// Y_b = Y_{b1} Y_{b2}^{-1}, b = b1 - b2 with b1, b2 dominant and disjoint supports.
LaurentPoly apply_Y(const RootDatum& d, const Coweight& b, const LaurentPoly& p, Level level = Level::Zero);

enum class IntertwinerKind { Phi, G, GTilde };

// Phi_j = T_j + (t_j^{1/2} - t_j^{-1/2}) / (X_{a_j} - 1) with X_{a_j} replaced by
// the scalar `x_aj`; G_j = Phi_j / phi_j(x_aj). At a fixed character G and
// G-tilde coincide. Throws std::domain_error naming the vanishing factor when
// x_aj = 1 or phi_j(x_aj) = 0.
LaurentPoly apply_intertwiner(const RootDatum& d, int j, const LaurentPoly& p, Level level, IntertwinerKind kind,
                              const Scalar& x_aj);
// phi_j(x) = t_j^{1/2} + (t_j^{1/2} - t_j^{-1/2}) / (x - 1).
Scalar phi_value(const RootDatum& d, int j, const Scalar& x_aj);
// (X_{a_j} - 1) Phi_j: the unspecialized intertwiner with its denominator cleared.
LaurentPoly apply_intertwiner_cleared(const RootDatum& d, int j, const LaurentPoly& p, Level level);

// x_{[a,k]}(#c) = q^{(a,c)+k} prod_nu t_nu^{-(omega_c^{-1}(rho_nu), a)}.
Scalar x_at_sharp(const RootDatum& d, const Coweight& a, const Rational& k, const Coweight& c);
// x_{a_j}(#c).
Scalar x_simple_at_sharp(const RootDatum& d, int j, const Coweight& c);

// Monomials x_b with sum |k_i| <= degree, sorted.
std::vector<Coweight> monomial_box(const RootDatum& d, int degree);

struct RelationFailure {
  std::string relation;
  Level level = Level::Zero;
  Coweight witness;
};

struct RelationReport {
  int checks = 0;
  std::vector<RelationFailure> failures;
  bool ok() const { return failures.empty(); }
};

struct RelationOptions {
  // Replaces t_j^{1/2} by q t_j^{1/2} in the quadratic relation (negative control).
  bool mutate_quadratic = false;
  bool both_levels = true;
};

// Exact operator identities of the presentation on monomials of the box.
RelationReport verify_relations(const RootDatum& d, int degree_bound, const RelationOptions& opt = {});
// Level 1 equals level 0 twisted by tau: T_0 -> X_0^{-1} T_0^{-1},
// Y_r -> q^{-(b_r,b_r)/2} X_r Y_r, pi_r -> q^{-(b_r,b_r)/2} X_r pi_r.
RelationReport verify_level_shift(const RootDatum& d, int degree_bound);

// Order of s_i s_j in W^b, or 0 when infinite.
int braid_order(const RootDatum& d, int i, int j);

std::string to_string(const LaurentPoly& p, const RootDatum& d);

}  // namespace daha
