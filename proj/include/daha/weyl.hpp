// Extended affine Weyl group W^b = Pi x| W^a: elements b*w, their action on
// affine roots and on the space, lengths via lambda-sets, reduced words, the
// canonical factorization b = pi_b omega_b and the orderings on B.
#pragma once

#include <compare>
#include <string>
#include <vector>

#include "daha/rootsys.hpp"

namespace daha {

// [alpha, k]; alpha is a root index of the datum.
struct AffineRoot {
  int root = 0;
  int k = 0;
  friend auto operator<=>(const AffineRoot&, const AffineRoot&) = default;
  friend bool operator==(const AffineRoot&, const AffineRoot&) = default;
};

// The element b*w: first w, then translation by b.
struct ExtWeyl {
  Coweight b;
  WeylElem w;

  friend ExtWeyl operator*(const ExtWeyl& x, const ExtWeyl& y) {
    return ExtWeyl{x.b + x.w.apply(y.b), x.w * y.w};
  }
  ExtWeyl inverse() const { return ExtWeyl{-w.apply_inverse(b), w.inverse()}; }
  friend auto operator<=>(const ExtWeyl& x, const ExtWeyl& y) {
    if (auto c = x.b <=> y.b; c != 0) return c;
    return x.w <=> y.w;
  }
  friend bool operator==(const ExtWeyl& x, const ExtWeyl& y) { return x.b == y.b && x.w == y.w; }
};

// pi_r followed by simple reflections: element = pi_r s_{letters[0]} ... s_{letters.back()}.
struct Word {
  int pi = 0;                 // r in O (0 means no pi factor)
  std::vector<int> letters;   // indices in 0..n
  std::size_t length() const { return letters.size(); }
  friend bool operator==(const Word&, const Word&) = default;
};

ExtWeyl ext_identity(const RootDatum& d);
ExtWeyl ext_translation(const RootDatum& d, const Coweight& b);
ExtWeyl ext_finite(const Coweight& b, const WeylElem& w);
ExtWeyl ext_simple(const RootDatum& d, int j);  // s_j, j in 0..n; s_0 = theta^vee s_theta
ExtWeyl ext_pi(const RootDatum& d, int r);      // pi_r = b_r omega_r^{-1}; pi_0 = 1
WeylElem reflection(const RootDatum& d, int root_idx);
// s_[alpha,k] = (-k alpha^vee) s_alpha.
ExtWeyl affine_reflection(const RootDatum& d, const AffineRoot& a);

// The affine simple root alpha_j (alpha_0 = [-theta, 1]).
AffineRoot simple_affine_root(const RootDatum& d, int j);
bool is_positive(const RootDatum& d, const AffineRoot& a);
AffineRoot negate(const RootDatum& d, const AffineRoot& a);

// w^([alpha,k]) = [w alpha, k - (w alpha, b)].
AffineRoot act_linear(const RootDatum& d, const ExtWeyl& x, const AffineRoot& a);
// (b w)<z> = w(z) + b.
Coweight act_affine(const ExtWeyl& x, const Coweight& z);

struct LengthInfo {
  int length = 0;
  int length_long = 0;
  int length_short = 0;
  std::vector<AffineRoot> lambda;  // sorted
};

LengthInfo length_and_lambda(const RootDatum& d, const ExtWeyl& x);
int length(const RootDatum& d, const ExtWeyl& x);
// Whether alpha_j lies in lambda(x), i.e. l(x s_j) < l(x).
bool has_right_descent(const RootDatum& d, const ExtWeyl& x, int j);

// Greedy peeling of right descents, smallest index first.
Word reduced_word(const RootDatum& d, const ExtWeyl& x);
ExtWeyl from_word(const RootDatum& d, const Word& w);
std::vector<std::string> word_tokens(const Word& w);  // ["pi:1","s0","s1"]

struct PiDecomposition {
  ExtWeyl pi_b;
  Word word;               // reduced word of pi_b
  WeylElem omega;          // omega_b with omega_b(b) = b_-
  std::vector<int> omega_word;  // reduced word of omega_b, leftmost first
  Coweight b_minus;
  Coweight b_plus;
};

PiDecomposition pi_decomposition(const RootDatum& d, const Coweight& b);

// {[alpha, j] : [-alpha, j] in lambda(pi_b)}, alpha positive; sorted.
std::vector<AffineRoot> lambda_prime(const RootDatum& d, const Coweight& b);
// Closed j-ranges split by the sign of (alpha, b): j < -(alpha, b_-) when
// (alpha, b) > 0, j <= -(alpha, b_-) when (alpha, b) < 0. Equals lambda_prime
// in rank 1 but not in general: the j-ranges are right when indexed by gamma
// in R_+ with bound |(gamma, b)| and attached to the root +-omega_b(gamma).
std::vector<AffineRoot> lambda_prime_display(const RootDatum& d, const Coweight& b);

enum class Order { Less, Equal, Greater, Incomparable };

// b <= c iff c - b in A_+.
Order leq_order(const RootDatum& d, const Coweight& b, const Coweight& c);

struct PreceqResult {
  Order order = Order::Incomparable;
  // True when b and c are comparable under <= as well (the refinement
  // preceq is then decided inside one W-orbit or agrees with <=).
  bool leq_comparable = false;
};
PreceqResult preceq(const RootDatum& d, const Coweight& b, const Coweight& c);

// (alpha_j, c + d): (alpha_j, c) for j >= 1 and 1 - (theta, c) for j = 0.
int affine_pairing(const RootDatum& d, int j, const Coweight& c);
// s_j<c>.
Coweight simple_affine_action(const RootDatum& d, int j, const Coweight& c);

struct Descent {
  bool flag = false;
  Coweight b;  // s_j<c> when flag
};
Descent descent(const RootDatum& d, int j, const Coweight& c);

// All c with c_+ <= bound (bound dominant), sorted.
std::vector<Coweight> saturated_set(const RootDatum& d, const Coweight& dominant_bound);
std::vector<Coweight> orbit(const RootDatum& d, const Coweight& b);
// sigma(b) = {c : c >= b in preceq}; sigma_*(b) strict; sigma_+(b) = {c : c_- > b_-}.
bool in_sigma(const RootDatum& d, const Coweight& b, const Coweight& c);
bool in_sigma_star(const RootDatum& d, const Coweight& b, const Coweight& c);
bool in_sigma_plus(const RootDatum& d, const Coweight& b, const Coweight& c);

// Elements of length <= L grouped by length (index = length), each layer
// sorted canonically.
std::vector<std::vector<ExtWeyl>> ball_by_length(const RootDatum& d, int max_length);

// Whether x equals pi_c for c = x<0> (membership in #B).
bool is_pi_form(const RootDatum& d, const ExtWeyl& x);

}  // namespace daha
