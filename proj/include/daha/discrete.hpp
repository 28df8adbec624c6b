// Discretized representations on W^b: characters, the weight mu_1, the
// functional representation F_xi on finitely supported functions, the delta
// representation Delta_xi, the two inner products, the submodule Delta_#, and
// the numeric Jackson and Aomoto sums.
#pragma once

#include <complex>
#include <map>
#include <string>
#include <vector>

#include "daha/macdonald.hpp"

namespace daha {

// xi_i = x_{b_i}(xi); every value is a monomial q^a t_l^c t_s^e z^g.
struct Character {
  std::vector<Scalar> xi;
  bool t_minus_rho = false;
};

// xi = t^{-rho}: x_a(xi) = prod_nu t_nu^{-(a, rho_nu)}.
Character character_t_minus_rho(const RootDatum& d);
// xi_i = z^{g_i} with sum_i g_i c_i != 0 for every coroot c (in the b_i basis).
Character character_generic(const RootDatum& d);
// Throws std::invalid_argument unless there are n monomial values.
Character character_from_values(const RootDatum& d, std::vector<Scalar> xi);
// xi_i -> xi_i^{-1}.
Character conj(const Character& xi);

// x_a(xi) = prod xi_i^{a_i}.
Scalar x_of(const RootDatum& d, const Coweight& a, const Character& xi);
// x_{[a,k]}(bw) = q^{(a,b)+k} x_{w^{-1}(a)}(xi).
Scalar x_at(const RootDatum& d, const Coweight& a, const ExtWeyl& w, const Character& xi, const Rational& k = 0);
// x_{a_j}(w) with a_0 = [-theta^vee, 1].
Scalar x_simple_at(const RootDatum& d, int j, const ExtWeyl& w, const Character& xi);

// prod over lambda(w) of (t^{-1/2} - q_a^j t^{1/2} x_a(xi)) / (t^{1/2} - q_a^j t^{-1/2} x_a(xi)),
// a = alpha^vee. Throws std::domain_error naming [alpha,j] at a vanishing denominator.
// `skip_factor` >= 0 drops that factor (negative control).
Scalar mu1(const RootDatum& d, const ExtWeyl& w, const Character& xi, int skip_factor = -1);
// The same value from mu_1(s_j u) = mu_1(u) g(x_{a_j}(u)), mu_1(pi_r u) = mu_1(u),
// g(x) = (t_j^{-1/2} - t_j^{1/2} x) / (t_j^{1/2} - t_j^{-1/2} x), along a reduced word.
Scalar mu1_telescoped(const RootDatum& d, const ExtWeyl& w, const Character& xi);

enum class Basis { Characteristic, Delta };

// Sum of c_w f_w (Characteristic) or c_w delta_w (Delta); no zero coefficients.
struct FinSupp {
  Basis basis = Basis::Characteristic;
  std::map<ExtWeyl, Scalar> coeffs;

  static FinSupp single(Basis basis, const ExtWeyl& w, const Scalar& c = Scalar(1));
  void add(const ExtWeyl& w, const Scalar& c);
  Scalar at(const ExtWeyl& w) const;
  friend bool operator==(const FinSupp& a, const FinSupp& b) { return a.basis == b.basis && a.coeffs == b.coeffs; }
  friend bool operator!=(const FinSupp& a, const FinSupp& b) { return !(a == b); }
};

struct Generator {
  enum Kind { T, Pi, X } kind = T;
  int index = 0;   // j in 0..n for T, r in O for Pi
  Coweight b;      // for X
  bool inverse = false;

  static Generator t(int j, bool inv = false) { return {T, j, {}, inv}; }
  static Generator pi(int r, bool inv = false) { return {Pi, r, {}, inv}; }
  static Generator x(const Coweight& b, bool inv = false) { return {X, 0, b, inv}; }
};
std::string to_string(const Generator& g);

// Functional representation in the f-basis:
// T_i f_w = A(x^{-1}) f_{s_i w} - B(x) f_w, x = x_{a_i}(w),
// A(x) = (t^{1/2} x - t^{-1/2}) / (x - 1), B(x) = (t^{1/2} - t^{-1/2}) / (x - 1);
// pi_r f_w = f_{pi_r w}; X_b f_w = x_b(w) f_w.
// Throws std::domain_error when x_{a_i}(w) = 1 on the support.
FinSupp apply_gen_functional(const RootDatum& d, const Generator& g, const FinSupp& f, const Character& xi);
// Delta representation: T_i delta_w = A(x) delta_{s_i w} - B(x) delta_w, pi_r delta_w = delta_{pi_r w},
// X_b delta_w = x_b(w) delta_w.
FinSupp apply_gen_delta(const RootDatum& d, const Generator& g, const FinSupp& v, const Character& xi);

// f_w -> mu_1(w) delta_w.
FinSupp to_delta(const RootDatum& d, const FinSupp& f, const Character& xi, int skip_factor = -1);

struct CheckFailure {
  std::string what;
  ExtWeyl where;
};
struct CheckReport {
  int checks = 0;
  std::vector<CheckFailure> failures;
  bool ok() const { return failures.empty(); }
};

// For T_j, pi_r^{+-1}, X_{b_i} and every w in the support: the map f_w -> mu_1(w) delta_w
// commutes with the action. `skip_factor` mutates mu_1.
CheckReport iso_check(const RootDatum& d, const Character& xi, const std::vector<ExtWeyl>& support,
                      int skip_factor = -1);

// q^{(b,b)/2} x_b(w(xi)) for w = b w.
Scalar delta_gaussian(const RootDatum& d, const ExtWeyl& w, const Character& xi);

// <f,g>_1 = sum mu_1 f g^* (Characteristic) or <f,g>_{-1} = sum mu_1^{-1} u v^* (Delta);
// * inverts q, t and xi. Throws std::invalid_argument on mixed bases.
Scalar inner1(const RootDatum& d, const FinSupp& f, const FinSupp& g, const Character& xi);

// At xi = t^{-rho}: every generator maps delta_{pi_b} (l(pi_b) <= L) into span{delta_{pi_c}},
// and within the ball of radius L, mu_1(w) = 0 exactly when w is not a pi_c.
CheckReport delta_sharp_check(const RootDatum& d, int max_length);

// t_nu = q_nu^{k_nu}.
struct KParams {
  std::complex<double> k_long;
  std::complex<double> k_short;
};

// 2 Re(r_k) + v = sum p_i alpha_i^vee, r_k = sum k_{nu(i)} b_i. ok when all p_i < 0.
struct ConvergenceCondition {
  std::vector<double> p;
  bool ok = false;
};
ConvergenceCondition convergence_condition(const RootDatum& d, const KParams& k, const Coweight& v);
// Condition for <hat e_a, hat e_b>_1: v = a_+ - b_-, which bounds w(a' - b') over the supports
// of e_a and e_b; v = c_+ - c_- for a = b = c.
ConvergenceCondition jackson_condition(const RootDatum& d, const KParams& k, const Coweight& a, const Coweight& b);

struct ShellRow {
  int length = 0;
  std::complex<double> shell_sum;    // numerator contribution of this shell
  std::complex<double> cumulative;   // numerator up to this shell
  std::complex<double> ratio;        // cumulative / <1,1>_1 up to this shell
  double tail_estimate = 0;          // |ratio - previous ratio|
};

struct JacksonReport {
  ConvergenceCondition condition;
  std::vector<ShellRow> shells;
  std::complex<double> ratio;
  std::complex<double> expected;  // delta_ab norm_closed(b) at (q0, t0)
  double error = 0;
};

// sum over l(w) <= L of mu_1(w) hat e_a(w) hat e_b(w)^* at xi = t^{-rho}, over the same sum for 1.
// Throws std::domain_error naming the offending p_i when the condition fails,
// and naming w when mu_1 hits a pole.
JacksonReport jackson_check(const RootDatum& d, const Coweight& a, const Coweight& b, std::complex<double> q0,
                            const KParams& k, int max_length);

struct AomotoRow {
  int length = 0;
  std::complex<double> a_xi;      // partial sum of mu'_1 over d with l(d) <= length
  std::complex<double> pairing;   // partial <p_{a+}, p_{b+}>'_1
};

struct AomotoReport {
  ConvergenceCondition condition;
  std::vector<AomotoRow> rows;
  std::complex<double> a_xi;
  std::complex<double> pairing;
};

// mu'_1(q^c xi) at xi = t^{-rho}: a finite product of q-Pochhammer ratios.
// Zero unless c is antidominant.
Scalar mu1_prime(const RootDatum& d, const Coweight& c, const Character& xi);

// A_xi = sum_c mu'_1(q^c xi) and <p_{a+}, p_{b+}>'_1 = sum_c mu'_1 p_{a+}(q^c xi) p_{b+}(q^c xi)
// over translations with l(c) <= L, xi = t^{-rho}. The condition uses v = a+ - (b+)_-.
// Throws std::domain_error when the condition fails.
AomotoReport aomoto_estimate(const RootDatum& d, std::complex<double> q0, const KParams& k, int max_length,
                             const Coweight& a_plus, const Coweight& b_plus);

// Threads used for shell sums; 0 restores the hardware default.
void set_worker_limit(int workers);
int worker_limit();

// Numeric point for q0 and t_nu = q_nu^{k_nu}.
SpecPoint spec_point(const RootDatum& d, std::complex<double> q0, const KParams& k);

}  // namespace daha
