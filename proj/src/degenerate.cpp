#include "daha/degenerate.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace daha {

KLaurentPoly KLaurentPoly::monomial(const Coweight& b, const KappaScalar& c) {
  KLaurentPoly p;
  p.add_term(b, c);
  return p;
}

KappaScalar KLaurentPoly::coefficient(const Coweight& b) const {
  auto it = terms_.find(b);
  return it == terms_.end() ? KappaScalar() : it->second;
}

void KLaurentPoly::add_term(const Coweight& b, const KappaScalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(b, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

KLaurentPoly& KLaurentPoly::operator+=(const KLaurentPoly& o) {
  for (const auto& [b, c] : o.terms_) add_term(b, c);
  return *this;
}

KLaurentPoly& KLaurentPoly::operator-=(const KLaurentPoly& o) {
  for (const auto& [b, c] : o.terms_) add_term(b, -c);
  return *this;
}

KLaurentPoly& KLaurentPoly::operator*=(const KappaScalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [b, x] : terms_) x *= c;
  return *this;
}

std::string to_string(const KLaurentPoly& p, const RootDatum& d) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [b, c] : p.terms()) {
    if (!first) os << " + ";
    first = false;
    os << "(" << to_string(c) << ")";
    if (!b.is_zero()) {
      os << "*x[";
      for (int i = 0; i < d.rank(); ++i) os << (i ? "," : "") << b[i];
      os << "]";
    }
  }
  return os.str();
}

KappaParams kappa_formal() {
  Exponent el{}, es{};
  el[kVarKappaLong] = 1;
  es[kVarKappaShort] = 1;
  return {KappaScalar::monomial(el), KappaScalar::monomial(es)};
}

KappaParams kappa_rational(const Rational& k_long, const Rational& k_short) {
  return {KappaScalar(k_long), KappaScalar(k_short)};
}

KappaScalar kappa_node(const RootDatum& d, int j, const KappaParams& k) {
  return d.simple_is_long(j) ? k.long_root : k.short_root;
}

KappaScalar rho_kappa(const RootDatum& d, const Coweight& b, const KappaParams& k) {
  return KappaScalar(d.pair_rho(b, true)) * k.long_root + KappaScalar(d.pair_rho(b, false)) * k.short_root;
}

KappaScalar h_kappa(const RootDatum& d, const KappaParams& k) {
  return kappa_node(d, 0, k) + rho_kappa(d, d.theta_coroot(), k);
}

KLaurentPoly apply_partial(const RootDatum& d, const Coweight& a, const KLaurentPoly& p, bool flip_sign) {
  KLaurentPoly r;
  for (const auto& [b, c] : p.terms()) {
    const Rational s = flip_sign ? d.pair(a, b) : -d.pair(a, b);
    r.add_term(b, c * KappaScalar(s));
  }
  return r;
}

KLaurentPoly apply_group(const RootDatum&, const ExtWeyl& g, const KLaurentPoly& p) {
  KLaurentPoly r;
  for (const auto& [b, c] : p.terms()) r.add_term(act_affine(g, b), c);
  return r;
}

namespace {

// f / (x_{-a} - 1) for a = alpha^vee, peeling the term with the largest (alpha, c).
KLaurentPoly divide_by_shift(const RootDatum& d, int idx, KLaurentPoly f) {
  const Coweight a = d.root(idx).coroot;
  KLaurentPoly g;
  if (f.is_zero()) return g;
  auto level = [&](const Coweight& c) { return d.pair(c, idx); };
  int floor_level = level(f.terms().begin()->first);
  for (const auto& [c, x] : f.terms()) floor_level = std::min(floor_level, level(c));
  while (!f.is_zero()) {
    auto top = std::max_element(f.terms().begin(), f.terms().end(),
                                [&](const auto& x, const auto& y) { return level(x.first) < level(y.first); });
    const Coweight c = top->first;
    const KappaScalar coef = top->second;
    if (level(c) < floor_level) throw std::logic_error("divided difference is not exact");
    g.add_term(c, -coef);
    f.add_term(c, -coef);
    f.add_term(c - a, coef);
  }
  return g;
}

std::string label_node(const std::string& what, int j) { return what + std::to_string(j); }

}  // namespace

KLaurentPoly apply_dunkl(const RootDatum& d, const Coweight& b, const Rational& v, const KLaurentPoly& p,
                         const KappaParams& k, bool flip_partial_sign) {
  KLaurentPoly r = apply_partial(d, b, p, flip_partial_sign);
  for (int idx = 0; idx < d.num_positive(); ++idx) {
    const int pairing = d.pair(b, idx);
    if (pairing == 0) continue;
    const KappaScalar kappa = d.root(idx).is_long ? k.long_root : k.short_root;
    KLaurentPoly diff = p;
    diff -= apply_group(d, ext_finite(Coweight{}, reflection(d, idx)), p);
    r += divide_by_shift(d, idx, diff) * (kappa * KappaScalar(pairing));
  }
  r += p * (rho_kappa(d, b, k) - KappaScalar(v));
  return r;
}

namespace {

// g[a,u] = [w a, u - (w a, b)] for g = b w.
std::pair<Coweight, Rational> act_on_affine(const RootDatum& d, const ExtWeyl& g, const Coweight& a, const Rational& u) {
  const Coweight wa = g.w.apply(a);
  return {wa, u - d.pair(wa, g.b)};
}

// (a, alpha_j) with alpha_0 = [-theta, 1].
int pair_simple(const RootDatum& d, const Coweight& a, int j) {
  return j == 0 ? -d.pair(a, d.theta()) : d.pair(a, d.simple_root(j));
}

}  // namespace

DegenerateReport check_degenerate_relations(const RootDatum& d, int degree_bound, const KappaParams& k,
                                            bool flip_partial_sign) {
  DegenerateReport rep;
  const int n = d.rank();
  auto y = [&](const Coweight& a, const Rational& u, const KLaurentPoly& p) {
    return apply_dunkl(d, a, u, p, k, flip_partial_sign);
  };
  auto record = [&](bool ok, const std::string& what, const Coweight& c) {
    ++rep.checks;
    if (!ok) rep.failures.push_back({what, c});
  };
  for (const auto& c : monomial_box(d, degree_bound)) {
    const KLaurentPoly p = KLaurentPoly::monomial(c);
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) {
        const Coweight bi = d.fundamental(i), bj = d.fundamental(j);
        record(y(bi, 0, y(bj, 0, p)) == y(bj, 0, y(bi, 0, p)),
               "commute y" + std::to_string(i) + " y" + std::to_string(j), c);
      }
    for (int i = 1; i <= n; ++i)
      for (int u = 0; u <= 1; ++u) {
        const Coweight a = d.fundamental(i);
        for (int j = 0; j <= n; ++j) {
          const ExtWeyl s = ext_simple(d, j);
          const auto [a2, u2] = act_on_affine(d, s, a, u);
          const KLaurentPoly lhs = apply_group(d, s, y(a, u, p)) - y(a2, u2, apply_group(d, s, p));
          record(lhs == p * (kappa_node(d, j, k) * KappaScalar(pair_simple(d, a, j))), label_node("cross s", j), c);
        }
        for (const auto& e : d.minuscule()) {
          const ExtWeyl pi = ext_pi(d, e.r);
          const auto [a2, u2] = act_on_affine(d, pi, a, u);
          record(apply_group(d, pi, y(a, u, p)) == y(a2, u2, apply_group(d, pi, p)), label_node("pi", e.r), c);
        }
      }
  }
  return rep;
}

JetImage jet_of_Y(const RootDatum& d, const Coweight& b, const Coweight& c, const KappaParams& k) {
  JetImage img;
  const LaurentPoly image = apply_Y(d, b, LaurentPoly::monomial(c), Level::Zero);
  for (const auto& [m, coef] : image.terms()) {
    const JetScalar j = jet_of(coef, d.two_m(), k.long_root, k.short_root);
    img.order0.add_term(m, j.a0);
    img.order1.add_term(m, j.a1);
  }
  return img;
}

DegenerateReport check_degeneration(const RootDatum& d, int degree_bound, const KappaParams& k) {
  DegenerateReport rep;
  for (const auto& c : monomial_box(d, degree_bound)) {
    const KLaurentPoly p = KLaurentPoly::monomial(c);
    for (int i = 1; i <= d.rank(); ++i) {
      const Coweight bi = d.fundamental(i);
      const JetImage img = jet_of_Y(d, bi, c, k);
      ++rep.checks;
      if (img.order0 != p) rep.failures.push_back({"order 0 of Y" + std::to_string(i), c});
      ++rep.checks;
      if (img.order1 != apply_dunkl(d, bi, 0, p, k)) rep.failures.push_back({"order 1 of Y" + std::to_string(i), c});
    }
  }
  return rep;
}

KappaScalar y_eigenvalue(const RootDatum& d, const TaggedVector& v, const Coweight& a, const Rational& u) {
  KappaScalar s = -KappaScalar(u);
  for (int i = 1; i <= d.rank(); ++i) s += KappaScalar(d.pair(a, d.simple_root(i))) * v.y_values[i - 1];
  return s;
}

namespace {

std::vector<KappaScalar> moved_tag(const RootDatum& d, const ExtWeyl& g, const TaggedVector& v) {
  std::vector<KappaScalar> out;
  const ExtWeyl inv = g.inverse();
  for (int i = 1; i <= d.rank(); ++i) {
    const auto [a, u] = act_on_affine(d, inv, d.fundamental(i), 0);
    out.push_back(y_eigenvalue(d, v, a, u));
  }
  return out;
}

}  // namespace

TaggedVector apply_degen_intertwiner(const RootDatum& d, int j, const TaggedVector& v, const KappaParams& k) {
  const ExtWeyl s = ext_simple(d, j);
  const KappaScalar denom =
      j == 0 ? y_eigenvalue(d, v, d.theta_coroot()) + KappaScalar(1) : y_eigenvalue(d, v, d.simple_coroot(j));
  if (denom.is_zero()) throw std::domain_error("degenerate intertwiner " + label_node("s", j) + ": zero denominator");
  const KappaScalar ratio = kappa_node(d, j, k) / denom;
  TaggedVector r;
  r.vector = apply_group(d, s, v.vector);
  r.vector += j == 0 ? v.vector * ratio : v.vector * (-ratio);
  r.y_values = moved_tag(d, s, v);
  return r;
}

TaggedVector apply_degen_pi(const RootDatum& d, int r, const TaggedVector& v) {
  const ExtWeyl pi = ext_pi(d, r);
  return {apply_group(d, pi, v.vector), moved_tag(d, pi, v)};
}

}  // namespace daha
