// Conditions on X-induced modules over monomial characters, primitive
// characters in a W^b-orbit, and eigenvector transport by the renormalized
// intertwiners T_j (X_{a_j} - 1) + (t_j^{1/2} - t_j^{-1/2}).
#pragma once

#include <complex>
#include <vector>

#include "daha/discrete.hpp"

namespace daha {

// xi_i = q^{q_exp} t_l^{t_long} t_s^{t_short}.
struct QTExponents {
  Rational q_exp, t_long, t_short;
};
// Throws std::invalid_argument unless there is one entry per node and the exponents
// are representable (2m q_exp and 2 t_exp integral).
Character character_from_exponents(const RootDatum& d, const std::vector<QTExponents>& exps);

// Values at a numeric point; |q| != 1 is required by classify.
struct NumericCharacter {
  std::complex<double> q, t_long, t_short;
  std::vector<std::complex<double>> xi;
};

// q_alpha^j x_{alpha^vee}(xi) = t_alpha^sign for alpha = +-root(root) (negative picks the sign).
// sign = +-1 solutions are reported over positive affine roots (j >= 0, and j > 0 when negative);
// sign = 0 reports q_alpha^j x_{alpha^vee}(xi) = 1 for a positive alpha and any integer j.
struct Witness {
  int root = 0;
  bool negative = false;
  int j = 0;
  int sign = 0;
  friend bool operator==(const Witness&, const Witness&) = default;
};

struct Classification {
  bool irreducible = true;          // no witness with sign +-1
  bool cospherical = true;          // no witness with sign -1
  bool spherical_dual = true;       // no witness with sign +1
  bool induced_irreducible = true;  // irreducible and no witness with sign 0
  std::vector<Witness> witnesses;
};

// Exact solve on monomial exponents.
Classification classify(const RootDatum& d, const Character& xi);
// Solves for j from the moduli and confirms to relative tolerance `tol`.
// Throws std::domain_error when |q| = 1.
Classification classify(const RootDatum& d, const NumericCharacter& xi, double tol = 1e-9);

// The character delta_u: xi_i -> x_{b_i}(u).
Character shifted_character(const RootDatum& d, const ExtWeyl& u, const Character& xi);

struct PrimitiveReport {
  bool found = false;
  ExtWeyl u0;
  std::vector<int> simple_stabilizer;  // S^o, indices in 0..n
  int bound = 0;                       // evidence radius, not a proof
};

// First u0 by length in the ball of radius L whose stabilizer {w in W^a, l(w) <= L : delta_{w u0} = delta_{u0}}
// lies in the parabolic subgroup of its simple stabilizing reflections.
PrimitiveReport find_primitive(const RootDatum& d, const Character& xi, int max_length);

struct TransportResult {
  FinSupp vector;      // Delta basis
  Scalar multiplier;   // coefficient of the single delta, 0 for the zero vector
  ExtWeyl end;         // word product times w0
};

// Applies the renormalized intertwiners for word[0], word[1], ... to delta_{w0}.
// Each step multiplies by x_{a_j}(u) t_j^{1/2} - t_j^{-1/2} and moves u to s_j u.
// Throws std::logic_error if an intermediate vector is not an X-eigenvector with character delta_{s_j u}.
TransportResult transport(const RootDatum& d, const std::vector<int>& word, const ExtWeyl& w0, const Character& xi);

}  // namespace daha
