#include "daha/poly.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace daha {

int grlex_compare(const Exponent& a, const Exponent& b) {
  int64_t da = 0, db = 0;
  for (int i = 0; i < kNumVars; ++i) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return da < db ? -1 : 1;
  for (int i = kNumVars - 1; i >= 0; --i) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

Exponent operator+(const Exponent& a, const Exponent& b) {
  Exponent r;
  for (int i = 0; i < kNumVars; ++i) r[i] = a[i] + b[i];
  return r;
}

Exponent operator-(const Exponent& a, const Exponent& b) {
  Exponent r;
  for (int i = 0; i < kNumVars; ++i) r[i] = a[i] - b[i];
  return r;
}

Exponent operator-(const Exponent& a) {
  Exponent r;
  for (int i = 0; i < kNumVars; ++i) r[i] = -a[i];
  return r;
}

namespace {

bool term_greater(const Term& x, const Term& y) { return grlex_compare(x.exp, y.exp) > 0; }

// Sorts and merges equal exponents, dropping zero coefficients.
void canonicalize(std::vector<Term>& t) {
  std::sort(t.begin(), t.end(), term_greater);
  std::size_t out = 0;
  for (std::size_t i = 0; i < t.size();) {
    std::size_t j = i + 1;
    Rational c = t[i].coeff;
    while (j < t.size() && t[j].exp == t[i].exp) {
      c += t[j].coeff;
      ++j;
    }
    if (c != 0) {
      t[out].exp = t[i].exp;
      t[out].coeff = c;
      ++out;
    }
    i = j;
  }
  t.resize(out);
}

}  // namespace

Poly::Poly(const Rational& c) {
  if (c != 0) terms_.push_back(Term{Exponent{}, c});
}

Poly Poly::monomial(const Exponent& e, const Rational& c) {
  Poly p;
  if (c != 0) p.terms_.push_back(Term{e, c});
  return p;
}

Poly Poly::variable(int var, int power) {
  Exponent e{};
  e[var] = power;
  return monomial(e);
}

Poly Poly::from_terms(std::vector<Term> terms) {
  canonicalize(terms);
  Poly p;
  p.terms_ = std::move(terms);
  return p;
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].exp == Exponent{});
}

bool Poly::is_one() const {
  return terms_.size() == 1 && terms_[0].exp == Exponent{} && terms_[0].coeff == 1;
}

Exponent Poly::min_exponent() const {
  Exponent m = terms_.front().exp;
  for (const auto& t : terms_)
    for (int i = 0; i < kNumVars; ++i) m[i] = std::min(m[i], t.exp[i]);
  return m;
}

Exponent Poly::max_exponent() const {
  Exponent m = terms_.front().exp;
  for (const auto& t : terms_)
    for (int i = 0; i < kNumVars; ++i) m[i] = std::max(m[i], t.exp[i]);
  return m;
}

bool Poly::is_polynomial() const {
  for (const auto& t : terms_)
    for (int i = 0; i < kNumVars; ++i)
      if (t.exp[i] < 0) return false;
  return true;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

namespace {

std::vector<Term> merge_terms(const std::vector<Term>& a, const std::vector<Term>& b, bool subtract) {
  std::vector<Term> r;
  r.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    int c;
    if (i == a.size())
      c = -1;
    else if (j == b.size())
      c = 1;
    else
      c = grlex_compare(a[i].exp, b[j].exp);
    if (c > 0) {
      r.push_back(a[i++]);
    } else if (c < 0) {
      r.push_back(Term{b[j].exp, subtract ? Rational(-b[j].coeff) : b[j].coeff});
      ++j;
    } else {
      Rational s = subtract ? Rational(a[i].coeff - b[j].coeff) : Rational(a[i].coeff + b[j].coeff);
      if (s != 0) r.push_back(Term{a[i].exp, s});
      ++i;
      ++j;
    }
  }
  return r;
}

}  // namespace

Poly& Poly::operator+=(const Poly& o) {
  if (o.terms_.empty()) return *this;
  terms_ = merge_terms(terms_, o.terms_, false);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.terms_.empty()) return *this;
  terms_ = merge_terms(terms_, o.terms_, true);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  if (b.terms_.size() == 1) {
    Poly r;
    r.terms_.reserve(a.terms_.size());
    for (const auto& t : a.terms_) r.terms_.push_back(Term{t.exp + b.terms_[0].exp, t.coeff * b.terms_[0].coeff});
    return r;
  }
  if (a.terms_.size() == 1) return b * a;
  std::vector<Term> prod;
  prod.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& x : a.terms_)
    for (const auto& y : b.terms_) prod.push_back(Term{x.exp + y.exp, x.coeff * y.coeff});
  return Poly::from_terms(std::move(prod));
}

Poly& Poly::operator*=(const Poly& o) {
  *this = *this * o;
  return *this;
}

Poly& Poly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coeff *= c;
  return *this;
}

Poly Poly::shifted(const Exponent& e) const {
  Poly r = *this;
  for (auto& t : r.terms_) t.exp = t.exp + e;
  return r;
}

Poly Poly::inverted() const {
  std::vector<Term> t = terms_;
  for (auto& x : t) x.exp = -x.exp;
  return from_terms(std::move(t));
}

Poly Poly::substituted_exponents(const std::array<std::array<int32_t, kNumVars>, kNumVars>& rows) const {
  std::vector<Term> t;
  t.reserve(terms_.size());
  for (const auto& x : terms_) {
    Exponent e{};
    for (int i = 0; i < kNumVars; ++i)
      for (int j = 0; j < kNumVars; ++j) e[i] += rows[i][j] * x.exp[j];
    t.push_back(Term{e, x.coeff});
  }
  return from_terms(std::move(t));
}

Rational Poly::content() const {
  if (terms_.empty()) return Rational(0);
  mpz_class g = 0, l = 1;
  for (const auto& t : terms_) {
    mpz_class n = abs(t.coeff.get_num());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.coeff.get_den_mpz_t());
  }
  Rational r(g, l);
  r.canonicalize();
  return r;
}

Rational Poly::coefficient(const Exponent& e) const {
  for (const auto& t : terms_)
    if (t.exp == e) return t.coeff;
  return Rational(0);
}

Rational Poly::sum_of_coefficients() const {
  Rational s = 0;
  for (const auto& t : terms_) s += t.coeff;
  return s;
}

std::complex<double> Poly::evaluate(const std::array<std::complex<double>, kNumVars>& point) const {
  std::complex<double> s = 0;
  for (const auto& t : terms_) {
    std::complex<double> m = t.coeff.get_d();
    for (int i = 0; i < kNumVars; ++i)
      if (t.exp[i] != 0) m *= std::pow(point[i], t.exp[i]);
    s += m;
  }
  return s;
}

bool operator==(const Poly& a, const Poly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (a.terms_[i].exp != b.terms_[i].exp || a.terms_[i].coeff != b.terms_[i].coeff) return false;
  return true;
}

bool operator<(const Poly& a, const Poly& b) {
  if (a.terms_.size() != b.terms_.size()) return a.terms_.size() < b.terms_.size();
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    int c = grlex_compare(a.terms_[i].exp, b.terms_[i].exp);
    if (c != 0) return c < 0;
    if (a.terms_[i].coeff != b.terms_[i].coeff) return a.terms_[i].coeff < b.terms_[i].coeff;
  }
  return false;
}

std::size_t Poly::hash() const {
  std::size_t h = terms_.size();
  for (const auto& t : terms_) {
    for (int i = 0; i < kNumVars; ++i) h = h * 1000003u ^ std::hash<int32_t>()(t.exp[i]);
    h = h * 31u ^ std::hash<double>()(t.coeff.get_d());
  }
  return h;
}

namespace {

bool exp_divides(const Exponent& small, const Exponent& big) {
  for (int i = 0; i < kNumVars; ++i)
    if (small[i] > big[i]) return false;
  return true;
}

// Division of polynomials with nonnegative exponents.
std::optional<Poly> divide_exact_poly(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  if (a.is_zero()) return Poly();
  if (b.is_monomial()) {
    const Term& lb = b.lead();
    std::vector<Term> t;
    t.reserve(a.size());
    for (const auto& x : a.terms()) {
      if (!exp_divides(lb.exp, x.exp)) return std::nullopt;
      t.push_back(Term{x.exp - lb.exp, x.coeff / lb.coeff});
    }
    return Poly::from_terms(std::move(t));
  }
  const Term lb = b.lead();
  // Degree bound: the quotient has total degree at most deg(a) - deg(b).
  Poly r = a;
  std::vector<Term> q;
  while (!r.is_zero()) {
    const Term& lr = r.lead();
    if (!exp_divides(lb.exp, lr.exp)) return std::nullopt;
    Term qt{lr.exp - lb.exp, lr.coeff / lb.coeff};
    q.push_back(qt);
    r -= b * Poly::monomial(qt.exp, qt.coeff);
  }
  return Poly::from_terms(std::move(q));
}

}  // namespace

std::optional<Poly> divide_exact(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  if (a.is_zero()) return Poly();
  Exponent sa = a.min_exponent(), sb = b.min_exponent();
  auto q = divide_exact_poly(a.shifted(-sa), b.shifted(-sb));
  if (!q) return std::nullopt;
  return q->shifted(sa - sb);
}

namespace {

int degree_in(const Poly& p, int var) {
  int d = 0;
  for (const auto& t : p.terms()) d = std::max(d, t.exp[var]);
  return d;
}

std::vector<Poly> coefficients_in(const Poly& p, int var) {
  std::vector<std::vector<Term>> buckets(degree_in(p, var) + 1);
  for (const auto& t : p.terms()) {
    Term u = t;
    u.exp[var] = 0;
    buckets[t.exp[var]].push_back(u);
  }
  std::vector<Poly> out;
  out.reserve(buckets.size());
  // Terms inside a bucket remain in decreasing grlex order after zeroing var
  // only up to ties; rebuild canonically.
  for (auto& b : buckets) out.push_back(Poly::from_terms(std::move(b)));
  return out;
}

Poly from_coefficients(const std::vector<Poly>& c, int var) {
  std::vector<Term> t;
  for (std::size_t d = 0; d < c.size(); ++d)
    for (const auto& x : c[d].terms()) {
      Term u = x;
      u.exp[var] += static_cast<int32_t>(d);
      t.push_back(u);
    }
  return Poly::from_terms(std::move(t));
}

Poly make_monic(const Poly& p) {
  if (p.is_zero()) return p;
  Rational lc = p.leading_coefficient();
  if (lc == 1) return p;
  return p * Rational(1 / lc);
}

Poly gcd_rec(const Poly& a, const Poly& b);

Poly content_in(const Poly& p, int var) {
  auto cs = coefficients_in(p, var);
  Poly g;
  for (const auto& c : cs) {
    if (c.is_zero()) continue;
    g = g.is_zero() ? make_monic(c) : gcd_rec(g, c);
    if (g.is_constant()) return Poly(1);
  }
  return g;
}

Poly primitive_in(const Poly& p, int var) {
  Poly c = content_in(p, var);
  Poly q = c.is_one() ? p : *divide_exact_poly(p, c);
  return make_monic(q);
}

void trim(std::vector<Poly>& v) {
  while (!v.empty() && v.back().is_zero()) v.pop_back();
}

// Pseudo-remainder of a by b with respect to var, content-reduced.
Poly pseudo_remainder(const Poly& a, const Poly& b, int var) {
  auto r = coefficients_in(a, var);
  auto bb = coefficients_in(b, var);
  trim(r);
  trim(bb);
  const std::size_t db = bb.size() - 1;
  const Poly& lcb = bb.back();
  while (!r.empty() && r.size() - 1 >= db) {
    const std::size_t d = r.size() - 1;
    Poly lr = r.back();
    for (std::size_t i = 0; i + 1 < r.size(); ++i) r[i] = lcb * r[i];
    r.back() = Poly();
    for (std::size_t i = 0; i < db; ++i) r[i + d - db] -= lr * bb[i];
    trim(r);
    // Keep rational coefficient sizes in check.
    if (!r.empty()) {
      Rational c = Poly(from_coefficients(r, var)).content();
      if (c != 1)
        for (auto& x : r) x *= Rational(1 / c);
    }
  }
  return from_coefficients(r, var);
}

Poly gcd_rec(const Poly& a, const Poly& b) {
  if (a.is_zero()) return make_monic(b);
  if (b.is_zero()) return make_monic(a);
  if (a.is_constant() || b.is_constant()) return Poly(1);
  // Monomial factors.
  Exponent ma = a.min_exponent(), mb = b.min_exponent();
  Exponent mg;
  for (int i = 0; i < kNumVars; ++i) mg[i] = std::min(ma[i], mb[i]);
  const Poly a1 = a.shifted(-ma), b1 = b.shifted(-mb);
  const Poly mono = Poly::monomial(mg);
  if (a1.is_constant() || b1.is_constant()) return mono;
  if (make_monic(a1) == make_monic(b1)) return make_monic(a1) * mono;

  Exponent xa = a1.max_exponent(), xb = b1.max_exponent();
  int var = -1;
  int best = 0;
  for (int i = 0; i < kNumVars; ++i) {
    if ((xa[i] > 0) != (xb[i] > 0)) {
      // Variable present in only one argument: reduce through its content.
      const Poly& with = xa[i] > 0 ? a1 : b1;
      const Poly& without = xa[i] > 0 ? b1 : a1;
      Poly g = make_monic(without);
      for (const auto& c : coefficients_in(with, i)) {
        if (c.is_zero()) continue;
        g = gcd_rec(g, c);
        if (g.is_constant()) break;
      }
      return make_monic(g * mono);
    }
    if (xa[i] > 0) {
      int cost = std::max(xa[i], xb[i]);
      if (var < 0 || cost < best) {
        var = i;
        best = cost;
      }
    }
  }
  // Cheap exact-divisibility shortcut.
  if (grlex_compare(b1.lead().exp, a1.lead().exp) <= 0) {
    if (divide_exact_poly(a1, b1)) return make_monic(b1) * mono;
  } else if (divide_exact_poly(b1, a1)) {
    return make_monic(a1) * mono;
  }

  Poly ca = content_in(a1, var), cb = content_in(b1, var);
  Poly pa = ca.is_one() ? a1 : *divide_exact_poly(a1, ca);
  Poly pb = cb.is_one() ? b1 : *divide_exact_poly(b1, cb);
  Poly gc = gcd_rec(ca, cb);
  Poly A = pa, B = pb;
  if (degree_in(A, var) < degree_in(B, var)) std::swap(A, B);
  Poly gp;
  for (;;) {
    Poly r = pseudo_remainder(A, B, var);
    if (r.is_zero()) {
      gp = primitive_in(B, var);
      break;
    }
    if (degree_in(r, var) == 0) {
      gp = Poly(1);
      break;
    }
    A = std::move(B);
    B = primitive_in(r, var);
  }
  return make_monic(gc * gp * mono);
}

// Heuristic gcd over Z (evaluate one variable at a large integer, recurse,
// interpolate xi-adically, verify by division). Inputs have integer
// coefficients; the result has positive leading coefficient. nullopt when the
// heuristic gives up.
mpz_class integer_content(const Poly& p) {
  mpz_class g = 0;
  for (const auto& t : p.terms()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coeff.get_num_mpz_t());
    if (g == 1) break;
  }
  return g;
}

mpz_class max_norm(const Poly& p) {
  mpz_class m = 0;
  for (const auto& t : p.terms()) {
    mpz_class a = abs(t.coeff.get_num());
    if (a > m) m = a;
  }
  return m;
}

Poly positive_lead(const Poly& p) { return !p.is_zero() && p.leading_coefficient() < 0 ? -p : p; }

Poly evaluate_at(const Poly& p, int var, const mpz_class& xi) {
  std::vector<Term> out;
  out.reserve(p.size());
  for (const auto& t : p.terms()) {
    mpz_class w;
    mpz_pow_ui(w.get_mpz_t(), xi.get_mpz_t(), static_cast<unsigned long>(t.exp[var]));
    Term u{t.exp, t.coeff * Rational(w)};
    u.exp[var] = 0;
    out.push_back(std::move(u));
  }
  return Poly::from_terms(std::move(out));
}

Poly interpolate_at(const Poly& g, int var, const mpz_class& xi) {
  const mpz_class half = xi / 2;
  std::vector<Term> out;
  for (const auto& t : g.terms()) {
    mpz_class c = t.coeff.get_num();
    int32_t i = 0;
    while (c != 0) {
      mpz_class r;
      mpz_fdiv_r(r.get_mpz_t(), c.get_mpz_t(), xi.get_mpz_t());
      if (r > half) r -= xi;
      if (r != 0) {
        Term u{t.exp, Rational(r)};
        u.exp[var] += i;
        out.push_back(std::move(u));
      }
      c = (c - r) / xi;
      ++i;
    }
  }
  return Poly::from_terms(std::move(out));
}

std::optional<Poly> heu_gcd(const Poly& a, const Poly& b) {
  if (a.is_zero()) return positive_lead(b);
  if (b.is_zero()) return positive_lead(a);
  const mpz_class ca = integer_content(a), cb = integer_content(b);
  mpz_class c;
  mpz_gcd(c.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  const Poly pa = a * Rational(1 / Rational(ca)), pb = b * Rational(1 / Rational(cb));
  if (pa.is_constant() || pb.is_constant()) return Poly(Rational(c));

  const Exponent xa = pa.max_exponent(), xb = pb.max_exponent();
  int var = -1;
  for (int i = kNumVars - 1; i >= 0; --i) {
    if ((xa[i] > 0) != (xb[i] > 0)) {
      // x occurs on one side only: the gcd divides each x-coefficient.
      const Poly& with = xa[i] > 0 ? pa : pb;
      Poly g = xa[i] > 0 ? pb : pa;
      for (const auto& k : coefficients_in(with, i)) {
        if (k.is_zero()) continue;
        auto h = heu_gcd(g, k);
        if (!h) return std::nullopt;
        g = *h;
        if (g.is_constant()) break;
      }
      g = positive_lead(g * Rational(1 / Rational(integer_content(g))));
      return g * Rational(c);
    }
    if (var < 0 && xa[i] > 0) var = i;
  }
  if (var < 0) return Poly(Rational(c));

  mpz_class xi = 2 * std::min(max_norm(pa), max_norm(pb)) + 29;
  for (int attempt = 0; attempt < 6; ++attempt) {
    auto gamma = heu_gcd(evaluate_at(pa, var, xi), evaluate_at(pb, var, xi));
    if (!gamma) return std::nullopt;
    Poly g = interpolate_at(*gamma, var, xi);
    if (!g.is_zero()) {
      g = positive_lead(g * Rational(1 / Rational(integer_content(g))));
      if (divide_exact_poly(pa, g) && divide_exact_poly(pb, g)) return g * Rational(c);
    }
    xi = xi * 73794 / 27011;
  }
  return std::nullopt;
}

}  // namespace

Poly gcd(const Poly& a, const Poly& b) {
  if (!a.is_polynomial() || !b.is_polynomial())
    throw std::invalid_argument("gcd requires nonnegative exponents");
  if (a.is_zero() && b.is_zero()) return Poly();
  if (a.is_zero() || b.is_zero()) return make_monic(a.is_zero() ? b : a);
  if (auto g = heu_gcd(a * Rational(1 / a.content()), b * Rational(1 / b.content()))) return make_monic(*g);
  return gcd_rec(a, b);
}

std::string to_string(const Rational& r) {
  return r.get_str();
}

std::string to_string(const Poly& p, const VarStyle& style) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : p.terms()) {
    Rational c = t.coeff;
    bool neg = c < 0;
    if (neg) c = -c;
    if (first)
      os << (neg ? "-" : "");
    else
      os << (neg ? " - " : " + ");
    first = false;
    std::vector<std::string> factors;
    for (int i = 0; i < kNumVars; ++i) {
      int32_t e = t.exp[i];
      if (e == 0) continue;
      std::string nm = style.name[i];
      if (style.divisor[i] > 1 && e % style.divisor[i] == 0 && !style.alias[i].empty()) {
        nm = style.alias[i];
        e /= style.divisor[i];
      }
      factors.push_back(e == 1 ? nm : nm + "^" + std::to_string(e));
    }
    bool unit = (c == 1);
    if (!unit || factors.empty()) os << c.get_str();
    for (std::size_t k = 0; k < factors.size(); ++k) os << ((k == 0 && unit) ? "" : "*") << factors[k];
  }
  return os.str();
}

}  // namespace daha
