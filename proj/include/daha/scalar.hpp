// Coefficient fields: exact rational functions in v = q^{1/2m}, u_l, u_s
// (u_nu = t_nu^{1/2}) and a spare generic symbol z; numeric specializations;
// first-order jets for the q -> 1 degeneration.
#pragma once

#include <complex>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>

#include "daha/poly.hpp"

namespace daha {

// Variable slots of the q,t field.
inline constexpr int kVarV = 0;
inline constexpr int kVarULong = 1;
inline constexpr int kVarUShort = 2;
inline constexpr int kVarZ = 3;

// Canonical pair (num, den): den is a polynomial without monomial factors,
// monic in grlex, coprime to num; num may carry negative exponents.
void normalize_fraction(Poly& num, Poly& den);
void add_fractions(const Poly& an, const Poly& ad, const Poly& bn, const Poly& bd, bool subtract, Poly& rn,
                   Poly& rd);
void mul_fractions(const Poly& an, const Poly& ad, const Poly& bn, const Poly& bd, Poly& rn, Poly& rd);

template <class Tag>
class RatFunc {
 public:
  RatFunc() : den_(1) {}
  RatFunc(const Rational& c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  RatFunc(long c) : RatFunc(Rational(c)) {}         // NOLINT(google-explicit-constructor)
  explicit RatFunc(const Poly& p) : num_(p), den_(1) {}
  RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("zero denominator");
    normalize_fraction(num_, den_);
  }

  static RatFunc monomial(const Exponent& e, const Rational& c = 1) { return RatFunc(Poly::monomial(e, c)); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return den_.is_one() && num_.is_one(); }
  bool is_laurent() const { return den_.is_one(); }
  bool is_monomial() const { return den_.is_one() && num_.is_monomial(); }

  RatFunc operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
  }
  RatFunc& operator+=(const RatFunc& o) { return combine(o, false); }
  RatFunc& operator-=(const RatFunc& o) { return combine(o, true); }
  RatFunc& operator*=(const RatFunc& o) {
    Poly n, d;
    mul_fractions(num_, den_, o.num_, o.den_, n, d);
    num_ = std::move(n);
    den_ = std::move(d);
    return *this;
  }
  RatFunc& operator/=(const RatFunc& o) { return *this *= o.inverse(); }
  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }

  RatFunc inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    return RatFunc(den_, num_);
  }
  RatFunc pow(long e) const {
    RatFunc base = e < 0 ? inverse() : *this;
    unsigned long n = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    RatFunc r(1);
    while (n) {
      if (n & 1) r *= base;
      base *= base;
      n >>= 1;
    }
    return r;
  }
  // Substitutes every variable by its inverse.
  RatFunc inverted_variables() const { return RatFunc(num_.inverted(), den_.inverted()); }

  friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
  friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }
  friend bool operator<(const RatFunc& a, const RatFunc& b) {
    if (a.den_ != b.den_) return a.den_ < b.den_;
    return a.num_ < b.num_;
  }

  std::complex<double> evaluate(const std::array<std::complex<double>, kNumVars>& point, double pole_tol = 1e-12) const {
    std::complex<double> d = den_.evaluate(point);
    if (std::abs(d) < pole_tol) throw std::domain_error("pole at specialization point");
    return num_.evaluate(point) / d;
  }

 private:
  RatFunc& combine(const RatFunc& o, bool subtract) {
    if (o.is_zero()) return *this;
    Poly n, d;
    add_fractions(num_, den_, o.num_, o.den_, subtract, n, d);
    num_ = std::move(n);
    den_ = std::move(d);
    return *this;
  }

  Poly num_;
  Poly den_;
};

struct QTTag {};
struct KappaTag {};

using Scalar = RatFunc<QTTag>;
using KappaScalar = RatFunc<KappaTag>;
using NumericScalar = std::complex<double>;

// Kappa variables reuse the u slots: kappa_long in slot 1, kappa_short in 2.
inline constexpr int kVarKappaLong = kVarULong;
inline constexpr int kVarKappaShort = kVarUShort;

// Monomial v^{ev} u_l^{el} u_s^{es} z^{ez}.
Scalar qt_monomial(int ev, int el, int es, int ez = 0, const Rational& c = 1);

// q^e with two_m = 2m; throws when 2m*e is not an integer.
Scalar q_power(const Rational& e, int two_m);

// t_nu^e for the long (is_long) or short variable; e must be in (1/2)Z.
Scalar t_power(bool is_long, const Rational& e);

// True iff s lies in Q[q^{+-1}, t_nu^{+-1}].
bool laurent_membership(const Scalar& s, int two_m);

// Conjugation q, t, z -> inverses.
inline Scalar conj(const Scalar& s) { return s.inverted_variables(); }

// Values of v, u_l, u_s, z at a specialization.
using SpecPoint = std::array<std::complex<double>, kNumVars>;

// Principal-branch point from q0 and t0 values (z0 defaults to 1).
SpecPoint spec_point_from_qt(std::complex<double> q0, int two_m, std::complex<double> t_long,
                             std::complex<double> t_short, std::complex<double> z0 = 1.0);

NumericScalar specialize(const Scalar& s, const SpecPoint& p, double pole_tol = 1e-12);

std::string to_string(const Scalar& s, int two_m);
std::string to_string(const KappaScalar& s);

// a0 + a1*h modulo h^2 over Q(kappa).
struct JetScalar {
  KappaScalar a0;
  KappaScalar a1;

  JetScalar() = default;
  JetScalar(KappaScalar x0, KappaScalar x1 = KappaScalar()) : a0(std::move(x0)), a1(std::move(x1)) {}

  JetScalar operator-() const { return {-a0, -a1}; }
  friend JetScalar operator+(const JetScalar& x, const JetScalar& y) { return {x.a0 + y.a0, x.a1 + y.a1}; }
  friend JetScalar operator-(const JetScalar& x, const JetScalar& y) { return {x.a0 - y.a0, x.a1 - y.a1}; }
  friend JetScalar operator*(const JetScalar& x, const JetScalar& y) {
    return {x.a0 * y.a0, x.a0 * y.a1 + x.a1 * y.a0};
  }
  JetScalar inverse() const {
    KappaScalar i0 = a0.inverse();
    return {i0, -(a1 * i0 * i0)};
  }
  friend bool operator==(const JetScalar& x, const JetScalar& y) { return x.a0 == y.a0 && x.a1 == y.a1; }
};

// Degeneration substitution q = 1+h, t_nu = 1 + kappa_nu h with
// (1+h)^e = 1 + e h. `kappa_long`/`kappa_short` give kappa_nu.
JetScalar jet_of(const Scalar& s, int two_m, const KappaScalar& kappa_long, const KappaScalar& kappa_short);

}  // namespace daha
