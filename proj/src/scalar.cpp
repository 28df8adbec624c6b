#include "daha/scalar.hpp"

#include <cmath>

namespace daha {

namespace {

Poly monic(const Poly& p) {
  if (p.is_zero()) return p;
  Rational lc = p.leading_coefficient();
  return lc == 1 ? p : p * Rational(1 / lc);
}

// gcd of a Laurent numerator with a monomial-free polynomial denominator.
Poly gcd_with_den(const Poly& n, const Poly& d) {
  if (d.is_one() || n.is_zero()) return Poly(1);
  return gcd(n.shifted(-n.min_exponent()), d);
}

Poly exact(const Poly& a, const Poly& b) {
  auto q = divide_exact(a, b);
  if (!q) throw std::logic_error("inexact division in fraction arithmetic");
  return *q;
}

}  // namespace

void normalize_fraction(Poly& num, Poly& den) {
  if (num.is_zero()) {
    den = Poly(1);
    return;
  }
  Exponent md = den.min_exponent();
  if (md != Exponent{}) {
    den = den.shifted(-md);
    num = num.shifted(-md);
  }
  if (den.is_constant()) {
    num *= Rational(1 / den.leading_coefficient());
    den = Poly(1);
    return;
  }
  Poly g = gcd_with_den(num, den);
  if (!g.is_one()) {
    num = exact(num, g);
    den = exact(den, g);
  }
  Rational lc = den.leading_coefficient();
  if (lc != 1) {
    Rational inv = 1 / lc;
    num *= inv;
    den *= inv;
  }
}

void add_fractions(const Poly& an, const Poly& ad, const Poly& bn, const Poly& bd, bool subtract, Poly& rn,
                   Poly& rd) {
  if (ad == bd) {
    rn = subtract ? an - bn : an + bn;
    rd = ad;
    if (!rd.is_one()) normalize_fraction(rn, rd);
    if (rn.is_zero()) rd = Poly(1);
    return;
  }
  const Poly sbn = subtract ? -bn : bn;
  if (ad.is_one()) {
    rn = an * bd + sbn;
    rd = bd;
    if (rn.is_zero()) rd = Poly(1);
    return;
  }
  if (bd.is_one()) {
    rn = an + sbn * ad;
    rd = ad;
    if (rn.is_zero()) rd = Poly(1);
    return;
  }
  Poly g = gcd(ad, bd);
  if (g.is_one()) {
    rn = an * bd + sbn * ad;
    rd = ad * bd;
    if (rn.is_zero()) rd = Poly(1);
    return;
  }
  Poly da = exact(ad, g), db = exact(bd, g);
  rn = an * db + sbn * da;
  if (rn.is_zero()) {
    rd = Poly(1);
    return;
  }
  Poly g2 = gcd_with_den(rn, g);
  if (!g2.is_one()) {
    rn = exact(rn, g2);
    g = exact(g, g2);
  }
  rd = monic(da * db * g);
  Rational fix = 1 / (da * db * g).leading_coefficient();
  if (fix != 1) rn *= fix;
}

void mul_fractions(const Poly& an, const Poly& ad, const Poly& bn, const Poly& bd, Poly& rn, Poly& rd) {
  if (an.is_zero() || bn.is_zero()) {
    rn = Poly();
    rd = Poly(1);
    return;
  }
  if (ad.is_one() && bd.is_one()) {
    rn = an * bn;
    rd = Poly(1);
    return;
  }
  Poly a1 = an, b1 = bn, ad1 = ad, bd1 = bd;
  Poly g1 = gcd_with_den(an, bd);
  if (!g1.is_one()) {
    a1 = exact(a1, g1);
    bd1 = exact(bd1, g1);
  }
  Poly g2 = gcd_with_den(bn, ad);
  if (!g2.is_one()) {
    b1 = exact(b1, g2);
    ad1 = exact(ad1, g2);
  }
  rn = a1 * b1;
  rd = ad1 * bd1;
  Rational lc = rd.leading_coefficient();
  if (lc != 1) {
    Rational inv = 1 / lc;
    rn *= inv;
    rd *= inv;
  }
}

Scalar qt_monomial(int ev, int el, int es, int ez, const Rational& c) {
  return Scalar::monomial(Exponent{ev, el, es, ez}, c);
}

Scalar q_power(const Rational& e, int two_m) {
  Rational s = e * two_m;
  if (s.get_den() != 1) throw std::invalid_argument("q exponent " + e.get_str() + " not in (1/2m)Z");
  return qt_monomial(static_cast<int>(s.get_num().get_si()), 0, 0);
}

Scalar t_power(bool is_long, const Rational& e) {
  Rational s = e * 2;
  if (s.get_den() != 1) throw std::invalid_argument("t exponent " + e.get_str() + " not in (1/2)Z");
  int k = static_cast<int>(s.get_num().get_si());
  return is_long ? qt_monomial(0, k, 0) : qt_monomial(0, 0, k);
}

bool laurent_membership(const Scalar& s, int two_m) {
  if (!s.is_laurent()) return false;
  for (const auto& t : s.num().terms()) {
    if (t.exp[kVarV] % two_m != 0) return false;
    if (t.exp[kVarULong] % 2 != 0 || t.exp[kVarUShort] % 2 != 0) return false;
    if (t.exp[kVarZ] != 0) return false;
  }
  return true;
}

SpecPoint spec_point_from_qt(std::complex<double> q0, int two_m, std::complex<double> t_long,
                             std::complex<double> t_short, std::complex<double> z0) {
  SpecPoint p;
  p[kVarV] = std::exp(std::log(q0) / static_cast<double>(two_m));
  p[kVarULong] = std::sqrt(t_long);
  p[kVarUShort] = std::sqrt(t_short);
  p[kVarZ] = z0;
  return p;
}

NumericScalar specialize(const Scalar& s, const SpecPoint& p, double pole_tol) { return s.evaluate(p, pole_tol); }

std::string to_string(const Scalar& s, int two_m) {
  VarStyle st;
  st.name = {"v", "u_l", "u_s", "z"};
  st.alias = {"q", "t_l", "t_s", ""};
  st.divisor = {two_m > 0 ? two_m : 1, 2, 2, 1};
  if (s.is_laurent()) return to_string(s.num(), st);
  return "(" + to_string(s.num(), st) + ")/(" + to_string(s.den(), st) + ")";
}

std::string to_string(const KappaScalar& s) {
  VarStyle st;
  st.name = {"x0", "k_l", "k_s", "x3"};
  if (s.is_laurent()) return to_string(s.num(), st);
  return "(" + to_string(s.num(), st) + ")/(" + to_string(s.den(), st) + ")";
}

namespace {

// Jet of a Laurent polynomial: (sum c, sum c * linear exponent form).
void jet_poly(const Poly& p, int two_m, const KappaScalar& kl, const KappaScalar& ks, KappaScalar& j0,
              KappaScalar& j1) {
  Rational c0 = 0, cv = 0, cl = 0, cs = 0;
  for (const auto& t : p.terms()) {
    if (t.exp[kVarZ] != 0) throw std::invalid_argument("jet of a scalar involving the generic symbol");
    c0 += t.coeff;
    cv += t.coeff * make_rational(t.exp[kVarV], two_m);
    cl += t.coeff * make_rational(t.exp[kVarULong], 2);
    cs += t.coeff * make_rational(t.exp[kVarUShort], 2);
  }
  j0 = KappaScalar(c0);
  j1 = KappaScalar(cv) + KappaScalar(cl) * kl + KappaScalar(cs) * ks;
}

}  // namespace

JetScalar jet_of(const Scalar& s, int two_m, const KappaScalar& kappa_long, const KappaScalar& kappa_short) {
  KappaScalar n0, n1, d0, d1;
  jet_poly(s.num(), two_m, kappa_long, kappa_short, n0, n1);
  jet_poly(s.den(), two_m, kappa_long, kappa_short, d0, d1);
  if (d0.is_zero()) throw std::domain_error("jet of a scalar with a pole at q = t = 1");
  KappaScalar i0 = d0.inverse();
  return JetScalar(n0 * i0, (n1 * d0 - n0 * d1) * i0 * i0);
}

}  // namespace daha
