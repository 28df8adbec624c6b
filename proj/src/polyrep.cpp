#include "daha/polyrep.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace daha {

LaurentPoly LaurentPoly::constant(const Scalar& c) { return monomial(Coweight{}, c); }

LaurentPoly LaurentPoly::monomial(const Coweight& b, const Scalar& c) {
  LaurentPoly p;
  p.add_term(b, c);
  return p;
}

Scalar LaurentPoly::coefficient(const Coweight& b) const {
  auto it = terms_.find(b);
  return it == terms_.end() ? Scalar() : it->second;
}

void LaurentPoly::add_term(const Coweight& b, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(b, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [b, c] : o.terms_) add_term(b, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [b, c] : o.terms_) add_term(b, -c);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [b, x] : terms_) x *= c;
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
  return r;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& [b, x] : r.terms_) x = -x;
  return r;
}

LaurentPoly LaurentPoly::shifted(const Coweight& s) const {
  LaurentPoly r;
  for (const auto& [b, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), b + s, c);
  return r;
}

Scalar q_pow(const RootDatum& d, const Rational& e) { return q_power(e, d.two_m()); }

Scalar t_half(const RootDatum& d, int j) { return t_power(d.simple_is_long(j), make_rational(1, 2)); }

Scalar t_root_pow(const RootDatum& d, int root_idx, const Rational& e) { return t_power(d.root(root_idx).is_long, e); }

LaurentPoly apply_x(const RootDatum& d, const Coweight& b, const LaurentPoly& p, const Rational& k) {
  LaurentPoly r = p.shifted(b);
  if (k != 0) r *= q_pow(d, k);
  return r;
}

namespace {

// a_j as a coweight: alpha_j^vee for j >= 1, -theta^vee for j = 0.
Coweight simple_coweight(const RootDatum& d, int j) { return j == 0 ? -d.theta_coroot() : d.simple_coroot(j); }

// The exponent n with s_j(x_b) = x_b X_{a_j}^{-n} at the given level.
int reflection_exponent(const RootDatum& d, int j, const Coweight& b, Level level) {
  if (j == 0 && level == Level::Zero) return -d.pair(b, d.theta());
  return affine_pairing(d, j, b);
}

}  // namespace

LaurentPoly apply_x_simple(const RootDatum& d, int j, const LaurentPoly& p, int power) {
  return apply_x(d, power * simple_coweight(d, j), p, j == 0 ? Rational(power) : Rational(0));
}

LaurentPoly apply_group(const RootDatum& d, const ExtWeyl& x, const LaurentPoly& p, Level level) {
  if (level == Level::MinusOne) throw std::invalid_argument("group action is not defined at the tau^{-1} level");
  LaurentPoly r;
  const Rational shift_sq = level == Level::One ? Rational(d.pair(x.b, x.b) / 2) : Rational(0);
  for (const auto& [b, c] : p.terms()) {
    Coweight wb = x.w.apply(b);
    Rational e = -d.pair(wb, x.b) - shift_sq;
    Coweight img = level == Level::One ? wb + x.b : wb;
    r.add_term(img, e == 0 ? c : c * q_pow(d, e));
  }
  return r;
}

LaurentPoly apply_pi(const RootDatum& d, int r, const LaurentPoly& p, Level level) {
  if (level == Level::MinusOne) {
    const Coweight br = d.fundamental(r);
    return apply_x(d, -br, apply_group(d, ext_pi(d, r), p, Level::Zero), Rational(d.pair(br, br) / 2));
  }
  return apply_group(d, ext_pi(d, r), p, level);
}

LaurentPoly apply_pi_inv(const RootDatum& d, int r, const LaurentPoly& p, Level level) {
  if (level == Level::MinusOne) {
    const Coweight br = d.fundamental(r);
    return apply_group(d, ext_pi(d, r).inverse(), apply_x(d, br, p, Rational(-d.pair(br, br) / 2)), Level::Zero);
  }
  return apply_group(d, ext_pi(d, r).inverse(), p, level);
}

// s_j x_b = x_b Y^{-n} with Y = X_{a_j}; the divided difference
// (Y - 1)^{-1}(s_j - 1) x_b = x_b (Y^{-n} - 1)/(Y - 1) telescopes to
// -sum_{k=1..n} Y^{-k} (n > 0) or sum_{k=0..|n|-1} Y^k (n < 0).
LaurentPoly apply_T(const RootDatum& d, int j, const LaurentPoly& p, Level level) {
  if (j < 0 || j > d.rank()) throw std::out_of_range("T index");
  if (level == Level::MinusOne && j == 0) return apply_T_inv(d, 0, apply_x_simple(d, 0, p, -1), Level::Zero);
  const Scalar th = t_half(d, j);
  const Scalar diff = th - th.inverse();
  const Coweight a = simple_coweight(d, j);
  const bool affine = j == 0;
  LaurentPoly r;
  for (const auto& [b, c] : p.terms()) {
    const int n = reflection_exponent(d, j, b, level);
    auto y_power = [&](int k) { return affine && k != 0 ? q_pow(d, k) : Scalar(1); };
    r.add_term(b - n * a, c * th * y_power(-n));
    if (n == 0) continue;
    const Scalar cd = c * diff;
    if (n > 0)
      for (int k = 1; k <= n; ++k) r.add_term(b - k * a, -(cd * y_power(-k)));
    else
      for (int k = 0; k < -n; ++k) r.add_term(b + k * a, cd * y_power(k));
  }
  return r;
}

LaurentPoly apply_T_inv(const RootDatum& d, int j, const LaurentPoly& p, Level level) {
  const Scalar th = t_half(d, j);
  LaurentPoly r = apply_T(d, j, p, level);
  r += p * (th.inverse() - th);
  return r;
}

LaurentPoly apply_T_word(const RootDatum& d, const Word& w, const LaurentPoly& p, Level level) {
  LaurentPoly r = p;
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) r = apply_T(d, *it, r, level);
  if (w.pi != 0) r = apply_pi(d, w.pi, r, level);
  return r;
}

LaurentPoly apply_T_word_inv(const RootDatum& d, const Word& w, const LaurentPoly& p, Level level) {
  LaurentPoly r = p;
  if (w.pi != 0) r = apply_pi_inv(d, w.pi, r, level);
  for (int j : w.letters) r = apply_T_inv(d, j, r, level);
  return r;
}

LaurentPoly apply_Y(const RootDatum& d, const Coweight& b, const LaurentPoly& p, Level level) {
  Coweight plus, minus;
  for (int i = 0; i < d.rank(); ++i) {
    plus[i] = std::max(b[i], 0);
    minus[i] = std::max(-b[i], 0);
  }
  LaurentPoly r = p;
  if (!minus.is_zero()) r = apply_T_word_inv(d, reduced_word(d, ext_translation(d, minus)), r, level);
  if (!plus.is_zero()) r = apply_T_word(d, reduced_word(d, ext_translation(d, plus)), r, level);
  return r;
}

Scalar phi_value(const RootDatum& d, int j, const Scalar& x_aj) {
  if (x_aj == Scalar(1)) throw std::domain_error("x_{a_" + std::to_string(j) + "} - 1 vanishes");
  const Scalar th = t_half(d, j);
  return th + (th - th.inverse()) / (x_aj - Scalar(1));
}

LaurentPoly apply_intertwiner(const RootDatum& d, int j, const LaurentPoly& p, Level level, IntertwinerKind kind,
                              const Scalar& x_aj) {
  if (x_aj == Scalar(1)) throw std::domain_error("x_{a_" + std::to_string(j) + "} - 1 vanishes");
  const Scalar th = t_half(d, j);
  LaurentPoly r = apply_T(d, j, p, level);
  r += p * ((th - th.inverse()) / (x_aj - Scalar(1)));
  if (kind == IntertwinerKind::Phi) return r;
  const Scalar phi = phi_value(d, j, x_aj);
  if (phi.is_zero()) throw std::domain_error("phi_" + std::to_string(j) + " vanishes at the character");
  return r * phi.inverse();
}

LaurentPoly apply_intertwiner_cleared(const RootDatum& d, int j, const LaurentPoly& p, Level level) {
  const Scalar th = t_half(d, j);
  LaurentPoly tp = apply_T(d, j, p, level);
  LaurentPoly r = apply_x_simple(d, j, tp) - tp;
  r += p * (th - th.inverse());
  return r;
}

Scalar x_at_sharp(const RootDatum& d, const Coweight& a, const Rational& k, const Coweight& c) {
  const Coweight wa = pi_decomposition(d, c).omega.apply(a);
  Scalar r = q_pow(d, d.pair(a, c) + k);
  r *= t_power(true, -d.pair_rho(wa, true));
  if (d.has_short()) r *= t_power(false, -d.pair_rho(wa, false));
  return r;
}

Scalar x_simple_at_sharp(const RootDatum& d, int j, const Coweight& c) {
  return x_at_sharp(d, simple_coweight(d, j), j == 0 ? 1 : 0, c);
}

std::vector<Coweight> monomial_box(const RootDatum& d, int degree) {
  std::vector<Coweight> out;
  Coweight cur;
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == d.rank()) {
      out.push_back(cur);
      return;
    }
    for (int k = -left; k <= left; ++k) {
      cur[i] = k;
      rec(i + 1, left - std::abs(k));
    }
    cur[i] = 0;
  };
  rec(0, degree);
  std::sort(out.begin(), out.end());
  return out;
}

int braid_order(const RootDatum& d, int i, int j) {
  const ExtWeyl g = ext_simple(d, i) * ext_simple(d, j);
  ExtWeyl x = g;
  for (int m = 1; m <= 6; ++m) {
    if (x == ext_identity(d)) return m;
    x = x * g;
  }
  return 0;
}

namespace {

using Op = std::function<LaurentPoly(const LaurentPoly&)>;

struct Checker {
  const RootDatum& d;
  const std::vector<Coweight>& box;
  Level level;
  RelationReport& report;

  void expect(const std::string& name, const Op& lhs, const Op& rhs) {
    for (const auto& b : box) {
      ++report.checks;
      const LaurentPoly x = LaurentPoly::monomial(b);
      if (lhs(x) != rhs(x)) {
        report.failures.push_back({name, level, b});
        return;
      }
    }
  }
};

Op compose(std::vector<Op> ops) {
  return [ops = std::move(ops)](const LaurentPoly& p) {
    LaurentPoly r = p;
    for (auto it = ops.rbegin(); it != ops.rend(); ++it) r = (*it)(r);
    return r;
  };
}

// The index j with alpha_j = x(alpha_i), or -1.
int image_simple(const RootDatum& d, const ExtWeyl& x, int i) {
  const AffineRoot a = act_linear(d, x, simple_affine_root(d, i));
  for (int j = 0; j <= d.rank(); ++j)
    if (simple_affine_root(d, j) == a) return j;
  return -1;
}

Word finite_word(const std::vector<int>& letters) {
  Word w;
  w.letters = letters;
  return w;
}

void check_level(const RootDatum& d, const std::vector<Coweight>& box, Level level, const RelationOptions& opt,
                 RelationReport& report) {
  Checker ck{d, box, level, report};
  const int n = d.rank();
  auto T = [&](int j) -> Op { return [&d, j, level](const LaurentPoly& p) { return apply_T(d, j, p, level); }; };
  auto X = [&](const Coweight& b, Rational k) -> Op {
    return [&d, b, k](const LaurentPoly& p) { return apply_x(d, b, p, k); };
  };
  auto Pi = [&](int r) -> Op { return [&d, r, level](const LaurentPoly& p) { return apply_pi(d, r, p, level); }; };
  auto PiInv = [&](int r) -> Op {
    return [&d, r, level](const LaurentPoly& p) { return apply_pi_inv(d, r, p, level); };
  };
  const Op zero = [](const LaurentPoly&) { return LaurentPoly(); };

  for (int j = 0; j <= n; ++j) {
    Scalar th = t_half(d, j);
    if (opt.mutate_quadratic) th *= q_pow(d, 1);
    const Scalar thi = th.inverse();
    ck.expect("quadratic T" + std::to_string(j),
              [&, j, th, thi](const LaurentPoly& p) {
                LaurentPoly u = apply_T(d, j, p, level) + p * thi;
                return apply_T(d, j, u, level) - u * th;
              },
              zero);
  }

  for (int i = 0; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      const int m = braid_order(d, i, j);
      if (m == 0) continue;
      std::vector<Op> lhs, rhs;
      for (int k = 0; k < m; ++k) {
        lhs.push_back(T(k % 2 ? j : i));
        rhs.push_back(T(k % 2 ? i : j));
      }
      ck.expect("braid T" + std::to_string(i) + " T" + std::to_string(j), compose(lhs), compose(rhs));
    }

  for (const auto& e : d.minuscule()) {
    const ExtWeyl pi = ext_pi(d, e.r);
    for (int i = 0; i <= n; ++i) {
      const int j = image_simple(d, pi, i);
      if (j < 0) throw std::logic_error("pi_r does not permute the simple affine roots");
      ck.expect("pi" + std::to_string(e.r) + " T" + std::to_string(i) + " pi^-1",
                compose({Pi(e.r), T(i), PiInv(e.r)}), T(j));
    }
  }

  // Cross relations on the fundamental coweights and their negatives.
  std::vector<Coweight> gens;
  for (int i = 1; i <= n; ++i) {
    gens.push_back(d.fundamental(i));
    gens.push_back(-d.fundamental(i));
  }
  gens.push_back(d.theta_coroot());
  gens.push_back(-d.theta_coroot());
  for (const auto& b : gens) {
    for (int i = 0; i <= n; ++i) {
      const int p = i == 0 ? d.pair(b, d.theta()) : b[i - 1];
      const std::string tag = "T" + std::to_string(i) + " X";
      if (i >= 1 && p == 1)
        ck.expect(tag + " T = X X_a^-1", compose({T(i), X(b, 0), T(i)}),
                  compose({X(b, 0), X(-d.simple_coroot(i), 0)}));
      if (i == 0 && p == -1)
        ck.expect(tag + " T = X X_theta q^-1", compose({T(0), X(b, 0), T(0)}), X(b + d.theta_coroot(), -1));
      if (p == 0) ck.expect(tag + " = X T", compose({T(i), X(b, 0)}), compose({X(b, 0), T(i)}));
    }
    for (const auto& e : d.minuscule()) {
      const Coweight target = e.omega.apply_inverse(b);
      const Rational k = d.pair(b, d.fundamental(e.star));
      ck.expect("pi" + std::to_string(e.r) + " X pi^-1", compose({Pi(e.r), X(b, 0), PiInv(e.r)}), X(target, k));
    }
  }

  for (const auto& e : d.minuscule()) {
    const Coweight br = e.b_r, bs = d.fundamental(e.star);
    const std::string r = std::to_string(e.r);
    ck.expect("pi" + r + " X_r* pi^-1 = q^(b_r,b_r) X_r^-1", compose({Pi(e.r), X(bs, 0), PiInv(e.r)}),
              X(-br, d.pair(br, br)));
    const MinusculeEntry* es = d.minuscule_entry(e.star);
    const Word wr = finite_word(e.omega_word);
    const Word ws = finite_word(es->omega_word);
    ck.expect("X_r* T_omega_r X_r = T_omega_r*^-1",
              [&d, bs, br, wr, level](const LaurentPoly& p) {
                return apply_x(d, bs, apply_T_word(d, wr, apply_x(d, br, p), level));
              },
              [&d, ws, level](const LaurentPoly& p) { return apply_T_word_inv(d, ws, p, level); });
  }
}

}  // namespace

RelationReport verify_relations(const RootDatum& d, int degree_bound, const RelationOptions& opt) {
  RelationReport report;
  const auto box = monomial_box(d, degree_bound);
  check_level(d, box, Level::Zero, opt, report);
  if (opt.both_levels) {
    check_level(d, box, Level::One, opt, report);
    check_level(d, box, Level::MinusOne, opt, report);
  }
  return report;
}

RelationReport verify_level_shift(const RootDatum& d, int degree_bound) {
  RelationReport report;
  const auto box = monomial_box(d, degree_bound);
  Checker ck{d, box, Level::One, report};
  ck.expect("T0 -> X0^-1 T0^-1", [&](const LaurentPoly& p) { return apply_T(d, 0, p, Level::One); },
            [&](const LaurentPoly& p) { return apply_x_simple(d, 0, apply_T_inv(d, 0, p, Level::Zero), -1); });
  for (int i = 1; i <= d.rank(); ++i)
    ck.expect("T" + std::to_string(i) + " unchanged",
              [&, i](const LaurentPoly& p) { return apply_T(d, i, p, Level::One); },
              [&, i](const LaurentPoly& p) { return apply_T(d, i, p, Level::Zero); });
  for (const auto& e : d.minuscule()) {
    const Coweight br = e.b_r;
    const Rational k = -d.pair(br, br) / 2;
    const int r = e.r;
    ck.expect("Y" + std::to_string(r) + " -> q^-(b_r,b_r)/2 X_r Y_r",
              [&, br](const LaurentPoly& p) { return apply_Y(d, br, p, Level::One); },
              [&, br, k](const LaurentPoly& p) { return apply_x(d, br, apply_Y(d, br, p, Level::Zero), k); });
    ck.expect("pi" + std::to_string(r) + " -> q^-(b_r,b_r)/2 X_r pi_r",
              [&, r](const LaurentPoly& p) { return apply_pi(d, r, p, Level::One); },
              [&, r, br, k](const LaurentPoly& p) { return apply_x(d, br, apply_pi(d, r, p, Level::Zero), k); });
  }
  return report;
}

std::string to_string(const LaurentPoly& p, const RootDatum& d) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [b, c] : p.terms()) {
    if (!first) os << " + ";
    first = false;
    os << "(" << to_string(c, d.two_m()) << ")";
    if (!b.is_zero()) {
      os << "*x[";
      for (int i = 0; i < d.rank(); ++i) os << (i ? "," : "") << b[i];
      os << "]";
    }
  }
  return os.str();
}

}  // namespace daha
