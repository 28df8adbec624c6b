// Nonsymmetric Macdonald polynomials e_b from intertwiner chains along pi_b,
// the renormalized hat e_b, the Y-eigenvector oracle, values, norms, pairings
// and the symmetric polynomials p_b.
#pragma once

#include <map>
#include <vector>

#include "daha/polyrep.hpp"

namespace daha {

struct PathStep {
  bool is_pi = false;
  int index = 0;  // j for s_j, r for pi_r
  Coweight c;     // point the step is applied at
};

// Steps from 0 to b realizing pi_b = pi_r s_{j_l} ... s_{j_1}, first step first.
// Each s_j step satisfies (alpha_j, c + d) > 0.
std::vector<PathStep> pi_path(const RootDatum& d, const Coweight& b);
// The same along a given word of pi_b; throws std::invalid_argument when the
// word does not spell pi_b or a step violates (alpha_j, c + d) > 0.
std::vector<PathStep> pi_path(const RootDatum& d, const Coweight& b, const Word& word);

// hat e_b = (pi_r G_l^{c_l} ... G_1^{c_1})<<1>>.
LaurentPoly nonsym_hat(const RootDatum& d, const Coweight& b);
LaurentPoly nonsym_hat(const RootDatum& d, const Coweight& b, const Word& word);

// x_a(t^rho) = prod_nu t_nu^{(rho_nu, a)} for a = alpha^vee.
Scalar x_coroot_at_t_rho(const RootDatum& d, int root_idx);
// q_alpha^j = q^{2j/nu_alpha}.
Scalar q_alpha_pow(const RootDatum& d, int root_idx, int j);

// q^{(b,b)/2} prod_{lambda'(pi_b)} (1 - q_a^j t_a x_a(t^rho)) / (1 - q_a^j x_a(t^rho)).
Scalar hat_factor(const RootDatum& d, const Coweight& b);
// q^{(b,b)/2} prod_k t_{j_k}^{1/2} phi_{j_k}(#c_k) along pi_path.
Scalar hat_factor_chain(const RootDatum& d, const Coweight& b);

struct MacRecord {
  Coweight b;
  LaurentPoly e_hat;
  LaurentPoly e;
  Scalar factor;                    // e = factor * e_hat
  std::map<int, Scalar> eigenvalues;  // i -> x_{b_i}(#b)
};

// Throws std::logic_error when e is not monic on x_b.
MacRecord e_from_hat(const RootDatum& d, const Coweight& b);

// Monic-on-x_b solution of Y_{-b_i}(e) = x_{b_i}(#b) e in span{x_c : c in sigma(b)},
// from the Y matrices on the slice {c : c_+ <= b_+}.
LaurentPoly oracle_e(const RootDatum& d, const Coweight& b);

// p(#c): x_a -> x_a(#c) termwise.
Scalar eval_at_sharp(const RootDatum& d, const LaurentPoly& p, const Coweight& c);

// hat e_b(#0) == prod_nu t_nu^{(rho_nu, b_-)} q^{-(b,b)/2}.
bool check_evaluation(const RootDatum& d, const Coweight& b);
Scalar evaluation_closed(const RootDatum& d, const Coweight& b);

// prod_{lambda'(pi_b)} (t^{1/2} - q_a^j t^{-1/2} x_a(t^rho)) / (t^{-1/2} - q_a^j t^{1/2} x_a(t^rho)).
Scalar norm_closed(const RootDatum& d, const Coweight& b);

// L_{f(x^{-1})} = sum_c f_c Y_{-c} at the given level.
LaurentPoly apply_L_bar(const RootDatum& d, const LaurentPoly& f, const LaurentPoly& g, Level level);
// [[f,g]]_0 = {L_{bar f}(g)}(#0) with level-0 Y operators; [[f,g]]_1 uses the
// tau^{-1}-shifted Y operators (Level::MinusOne), so [[hat e_b, hat e_c]]_1 =
// hat e_c(#b). [[,]]_0 is symmetric, [[,]]_1 is not.
Scalar pairing_Y(const RootDatum& d, const LaurentPoly& f, const LaurentPoly& g, Level level);

// b' = s_j<b>, c' = s_j<c>.
// Literal: hat e_b(#c) == hat e_{b'}(#c'); needs (alpha_j, c + d) = -(alpha_j, b + d).
// Normalized: hat e_b(#c) / hat e_b(#) == hat e_{b'}(#c') / hat e_{b'}(#); needs
// x_{a_j}(#b) x_{a_j}(#c) = 1. Throws std::invalid_argument when the hypothesis fails.
enum class RecurrenceForm { Literal, Normalized };
bool check_value_recurrence(const RootDatum& d, const Coweight& b, const Coweight& c, int j,
                            RecurrenceForm form = RecurrenceForm::Normalized);

// Elements of W with reduced words (node indices, leftmost first), by length.
struct FiniteElement {
  WeylElem w;
  std::vector<int> word;
};
std::vector<FiniteElement> finite_weyl_elements(const RootDatum& d);

// Coset: sum_{c in W(b)} t^{l(w_c)/2} T_{w_c}, w_c = omega_c^{-1} w0.
// CosetUnit: the same sum with unit weights; not W-invariant in general.
// Full: sum_{w in W} t^{l(w)/2} T_w.
enum class Symmetrizer { Coset, CosetUnit, Full };

// The symmetrizer applied to e_{b+}, scaled so that the coefficient of x_{b+}
// is 1. Throws std::invalid_argument for non-dominant input.
LaurentPoly symmetrize(const RootDatum& d, const Coweight& b_plus, Symmetrizer kind = Symmetrizer::Coset);

// Clearing factors of e_b, p_{b+} and hat e_b give Laurent coefficients.
struct IntegralityReport {
  bool e = false;
  bool e_hat = false;
  bool p = false;  // only meaningful when b is dominant
  bool ok() const { return e && e_hat && p; }
};
IntegralityReport check_integrality(const RootDatum& d, const Coweight& b);

}  // namespace daha
