// Sparse multivariate Laurent polynomials over Q in a fixed set of four
// variables, with exact division and a recursive gcd.
#pragma once

#include <gmpxx.h>

#include <array>
#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace daha {

using Rational = mpq_class;

// Canonicalized n/d (the two-argument mpq_class constructor does not reduce).
inline Rational make_rational(long n, long d) {
  Rational r(n, d);
  r.canonicalize();
  return r;
}

inline constexpr int kNumVars = 4;
using Exponent = std::array<int32_t, kNumVars>;

// Graded lexicographic order; variable kNumVars-1 is most significant,
// variable 0 least significant.
int grlex_compare(const Exponent& a, const Exponent& b);

Exponent operator+(const Exponent& a, const Exponent& b);
Exponent operator-(const Exponent& a, const Exponent& b);
Exponent operator-(const Exponent& a);

struct Term {
  Exponent exp{};
  Rational coeff;
};

// Terms are kept strictly decreasing in grlex order with nonzero coefficients.
class Poly {
 public:
  Poly() = default;
  Poly(const Rational& c);  // NOLINT(google-explicit-constructor)
  Poly(long c) : Poly(Rational(c)) {}  // NOLINT(google-explicit-constructor)

  static Poly monomial(const Exponent& e, const Rational& c = 1);
  static Poly variable(int var, int power = 1);
  // Builds from arbitrary terms: sorts, merges, drops zeros.
  static Poly from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }
  bool is_one() const;
  const Term& lead() const { return terms_.front(); }
  std::size_t size() const { return terms_.size(); }

  // Componentwise minimum / maximum of exponents (poly must be nonzero).
  Exponent min_exponent() const;
  Exponent max_exponent() const;
  bool is_polynomial() const;  // all exponents nonnegative

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const Rational& c);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }

  Poly shifted(const Exponent& e) const;  // multiply by x^e
  Poly inverted() const;                  // substitute x_i -> 1/x_i
  // Replaces every exponent vector e by (map(e)) where map is linear given by
  // the matrix rows (result_i = sum_j rows[i][j]*e_j).
  Poly substituted_exponents(const std::array<std::array<int32_t, kNumVars>, kNumVars>& rows) const;

  Rational content() const;  // positive rational with primitive integer quotient
  Rational leading_coefficient() const { return lead().coeff; }
  Rational coefficient(const Exponent& e) const;
  Rational sum_of_coefficients() const;

  std::complex<double> evaluate(const std::array<std::complex<double>, kNumVars>& point) const;

  friend bool operator==(const Poly& a, const Poly& b);
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }
  // Total order used for map keys; not mathematically meaningful.
  friend bool operator<(const Poly& a, const Poly& b);

  std::size_t hash() const;

 private:
  std::vector<Term> terms_;
};

// Exact quotient a/b, or nullopt when b does not divide a. Works on Laurent
// polynomials (monomials are units).
std::optional<Poly> divide_exact(const Poly& a, const Poly& b);

// Greatest common divisor over Q, normalized to be monic in grlex and free of
// monomial factors unless both inputs share them. Inputs must be polynomials
// (nonnegative exponents). gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);

// Text names for variables; a power of variable i whose exponent is divisible
// by `divisor[i]` prints with `alias[i]` and exponent e/divisor[i].
struct VarStyle {
  std::array<std::string, kNumVars> name;
  std::array<std::string, kNumVars> alias;
  std::array<int, kNumVars> divisor{1, 1, 1, 1};
};

std::string to_string(const Poly& p, const VarStyle& style);
std::string to_string(const Rational& r);

}  // namespace daha
