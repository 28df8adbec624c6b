#include "daha/discrete.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <future>
#include <limits>
#include <set>
#include <sstream>
#include <thread>
#include <stdexcept>

namespace daha {

namespace {

std::string root_label(const AffineRoot& a) {
  return "[root " + std::to_string(a.root) + ", " + std::to_string(a.k) + "]";
}

std::string element_label(const RootDatum& d, const ExtWeyl& w) {
  std::string s = "w = ";
  for (const auto& tok : word_tokens(reduced_word(d, w))) s += tok + " ";
  if (s.back() == ' ') s.pop_back();
  return s;
}

// prefactor * prod (1 - num_i) / prod (1 - den_i) with monomial num_i, den_i.
struct FactorList {
  Scalar prefactor = Scalar(1);
  std::vector<Scalar> num, den;
  std::vector<std::string> den_label;

  bool vanishes() const {
    return std::any_of(num.begin(), num.end(), [](const Scalar& m) { return m == Scalar(1); });
  }
  void check_poles() const {
    for (std::size_t i = 0; i < den.size(); ++i)
      if (den[i] == Scalar(1)) throw std::domain_error("vanishing denominator at " + den_label[i]);
  }
  Scalar exact() const {
    check_poles();
    if (vanishes()) return Scalar();
    Scalar r = prefactor;
    for (const auto& m : num) r *= Scalar(1) - m;
    for (const auto& m : den) r /= Scalar(1) - m;
    return r;
  }
  std::complex<double> numeric(const SpecPoint& p, double pole_tol = 1e-12) const {
    check_poles();
    if (vanishes()) return 0.0;
    // Accumulated as a complex logarithm: single factors reach q^{-L}.
    std::complex<double> lg = std::log(specialize(prefactor, p));
    for (const auto& m : num) {
      const std::complex<double> f = 1.0 - specialize(m, p);
      if (f == 0.0) return 0.0;
      lg += std::log(f);
    }
    for (std::size_t i = 0; i < den.size(); ++i) {
      const std::complex<double> f = 1.0 - specialize(den[i], p);
      if (std::abs(f) < pole_tol * std::max(1.0, std::abs(specialize(den[i], p))))
        throw std::domain_error("numeric pole at " + den_label[i]);
      lg -= std::log(f);
    }
    return std::exp(lg);
  }
};

// (t^{-1/2} - q_a^j t^{1/2} x) / (t^{1/2} - q_a^j t^{-1/2} x) = t^{-1} (1 - q_a^j t x) / (1 - q_a^j t^{-1} x).
FactorList mu1_factors(const RootDatum& d, const ExtWeyl& w, const Character& xi, int skip_factor) {
  FactorList fl;
  const auto info = length_and_lambda(d, w);
  for (std::size_t i = 0; i < info.lambda.size(); ++i) {
    if (static_cast<int>(i) == skip_factor) continue;
    const AffineRoot& a = info.lambda[i];
    const Scalar x = q_alpha_pow(d, a.root, a.k) * x_of(d, d.root(a.root).coroot, xi);
    const Scalar t = t_root_pow(d, a.root, 1);
    fl.prefactor *= t.inverse();
    fl.num.push_back(x * t);
    fl.den.push_back(x * t.inverse());
    fl.den_label.push_back(root_label(a));
  }
  return fl;
}

std::vector<Generator> all_generators(const RootDatum& d) {
  std::vector<Generator> gens;
  for (int j = 0; j <= d.rank(); ++j) gens.push_back(Generator::t(j));
  for (const auto& e : d.minuscule()) {
    gens.push_back(Generator::pi(e.r));
    gens.push_back(Generator::pi(e.r, true));
  }
  for (int i = 1; i <= d.rank(); ++i) gens.push_back(Generator::x(d.fundamental(i)));
  return gens;
}

Scalar two_term_a(const Scalar& th, const Scalar& x) { return (th * x - th.inverse()) / (x - Scalar(1)); }
Scalar two_term_b(const Scalar& th, const Scalar& x) { return (th - th.inverse()) / (x - Scalar(1)); }

ExtWeyl pi_element(const RootDatum& d, const Generator& g) {
  const ExtWeyl p = ext_pi(d, g.index);
  return g.inverse ? p.inverse() : p;
}

template <class Step>
FinSupp apply_generator(const RootDatum& d, const Generator& g, const FinSupp& v, const Character& xi, Step&& t_step) {
  FinSupp r;
  r.basis = v.basis;
  for (const auto& [w, c] : v.coeffs) {
    switch (g.kind) {
      case Generator::X: {
        const Scalar x = x_at(d, g.b, w, xi);
        r.add(w, g.inverse ? c / x : c * x);
        break;
      }
      case Generator::Pi:
        r.add(pi_element(d, g) * w, c);
        break;
      case Generator::T: {
        const Scalar x = x_simple_at(d, g.index, w, xi);
        if (x == Scalar(1)) throw std::domain_error("x_{a_" + std::to_string(g.index) + "} = 1 at " + element_label(d, w));
        const Scalar th = t_half(d, g.index);
        t_step(r, w, c, th, x);
        if (g.inverse) r.add(w, -c * (th - th.inverse()));
        break;
      }
    }
  }
  return r;
}

double real_pair(const RootDatum& d, const std::vector<double>& v, int j) {
  double s = 0;
  for (int i = 0; i < d.rank(); ++i) {
    Coweight bi = d.fundamental(i + 1), bj = d.fundamental(j);
    s += v[i] * d.pair(bi, bj).get_d();
  }
  return s;
}

double root_nu(const RootDatum& d, int i) { return d.root(d.simple_root(i)).nu.get_d(); }

// Precomputed numeric terms of a polynomial for evaluation at group elements.
struct NumericPoly {
  std::vector<Coweight> exps;
  std::vector<std::complex<double>> coef, coef_conj;

  NumericPoly(const LaurentPoly& p, const SpecPoint& pt) {
    for (const auto& [c, x] : p.terms()) {
      exps.push_back(c);
      coef.push_back(specialize(x, pt));
      coef_conj.push_back(specialize(conj(x), pt));
    }
  }
  std::complex<double> at(const RootDatum& d, const ExtWeyl& w, const Character& xi, const SpecPoint& pt,
                          bool conjugate) const {
    std::complex<double> s = 0;
    for (std::size_t i = 0; i < exps.size(); ++i) {
      const Scalar m = x_at(d, exps[i], w, xi);
      s += conjugate ? coef_conj[i] * specialize(conj(m), pt) : coef[i] * specialize(m, pt);
    }
    return s;
  }
};

// Appends R(z, m) = (y^m z; y)_inf / (z; y)_inf (multiplies) or its inverse.
void pochhammer_shift(const Scalar& z, const Scalar& y, int m, bool multiplies, FactorList& fl,
                      const std::string& label) {
  auto put = [&](const Scalar& mono, bool in_num) {
    if (in_num) {
      fl.num.push_back(mono);
    } else {
      fl.den.push_back(mono);
      fl.den_label.push_back(label);
    }
  };
  if (m >= 0) {
    for (int i = 0; i < m; ++i) put(y.pow(i) * z, !multiplies);
  } else {
    for (int i = 0; i < -m; ++i) put(y.pow(m + i) * z, multiplies);
  }
}

// mu'(q^c xi) / mu'(xi): per positive root, with m = (alpha, c), x = x_a(xi), y = q_alpha,
// R(z, m) = (y^m z; y)_inf / (z; y)_inf and factor R(x,m) R(x^{-1},-m) / (R(tx,m) R(tx^{-1},-m)).
FactorList mu1_prime_factors(const RootDatum& d, const Coweight& c, const Character& xi) {
  FactorList fl;
  for (int idx = 0; idx < d.num_positive(); ++idx) {
    const int m = d.pair(c, idx);
    if (m == 0) continue;
    const Scalar x = x_of(d, d.root(idx).coroot, xi);
    const Scalar y = q_alpha_pow(d, idx, 1);
    const Scalar t = t_root_pow(d, idx, 1);
    const std::string label = "root " + std::to_string(idx);
    pochhammer_shift(x, y, m, true, fl, label);
    pochhammer_shift(x.inverse(), y, -m, true, fl, label);
    pochhammer_shift(t * x, y, m, false, fl, label);
    pochhammer_shift(t * x.inverse(), y, -m, false, fl, label);
  }
  return fl;
}

}  // namespace

Character character_t_minus_rho(const RootDatum& d) {
  Character c;
  c.t_minus_rho = true;
  for (int i = 1; i <= d.rank(); ++i) {
    const Coweight b = d.fundamental(i);
    Scalar x = t_power(true, -d.pair_rho(b, true));
    if (d.has_short()) x *= t_power(false, -d.pair_rho(b, false));
    c.xi.push_back(x);
  }
  return c;
}

Character character_generic(const RootDatum& d) {
  const int n = d.rank();
  std::vector<int> g(n, 1);
  auto regular = [&] {
    for (int idx = 0; idx < d.num_positive(); ++idx) {
      long s = 0;
      const Coweight& a = d.root(idx).coroot;
      for (int i = 0; i < n; ++i) s += static_cast<long>(g[i]) * a[i];
      if (s == 0) return false;
    }
    return true;
  };
  // Odometer over g in {1..9}^n; a regular vector exists for every datum of rank <= 8.
  while (!regular()) {
    int i = 0;
    while (i < n && ++g[i] > 9) g[i++] = 1;
    if (i == n) throw std::logic_error("no regular exponent vector");
  }
  Character c;
  for (int i = 0; i < n; ++i) c.xi.push_back(qt_monomial(0, 0, 0, g[i]));
  return c;
}

Character character_from_values(const RootDatum& d, std::vector<Scalar> xi) {
  if (static_cast<int>(xi.size()) != d.rank()) throw std::invalid_argument("character needs one value per node");
  for (const auto& x : xi)
    if (!x.is_monomial()) throw std::invalid_argument("character values must be monomials");
  Character c;
  c.xi = std::move(xi);
  c.t_minus_rho = c.xi == character_t_minus_rho(d).xi;
  return c;
}

Character conj(const Character& xi) {
  Character c;
  for (const auto& x : xi.xi) c.xi.push_back(x.inverse());
  return c;
}

Scalar x_of(const RootDatum& d, const Coweight& a, const Character& xi) {
  Scalar r(1);
  for (int i = 0; i < d.rank(); ++i)
    if (a[i] != 0) r *= xi.xi[i].pow(a[i]);
  return r;
}

Scalar x_at(const RootDatum& d, const Coweight& a, const ExtWeyl& w, const Character& xi, const Rational& k) {
  const Rational e = d.pair(a, w.b) + k;
  Scalar r = x_of(d, w.w.apply_inverse(a), xi);
  return e == 0 ? r : r * q_pow(d, e);
}

Scalar x_simple_at(const RootDatum& d, int j, const ExtWeyl& w, const Character& xi) {
  if (j == 0) return x_at(d, -d.theta_coroot(), w, xi, 1);
  return x_at(d, d.simple_coroot(j), w, xi);
}

Scalar mu1(const RootDatum& d, const ExtWeyl& w, const Character& xi, int skip_factor) {
  return mu1_factors(d, w, xi, skip_factor).exact();
}

Scalar mu1_telescoped(const RootDatum& d, const ExtWeyl& w, const Character& xi) {
  const Word word = reduced_word(d, w);
  ExtWeyl u = ext_identity(d);
  Scalar r(1);
  for (auto it = word.letters.rbegin(); it != word.letters.rend(); ++it) {
    const int j = *it;
    const Scalar x = x_simple_at(d, j, u, xi);
    const Scalar th = t_half(d, j);
    const Scalar den = th - th.inverse() * x;
    if (den.is_zero()) throw std::domain_error("vanishing denominator at s_" + std::to_string(j));
    r *= (th.inverse() - th * x) / den;
    u = ext_simple(d, j) * u;
  }
  if (word.pi != 0) u = ext_pi(d, word.pi) * u;
  if (!(u == w)) throw std::logic_error("telescoped word does not rebuild the element");
  return r;
}

FinSupp FinSupp::single(Basis basis, const ExtWeyl& w, const Scalar& c) {
  FinSupp f;
  f.basis = basis;
  f.add(w, c);
  return f;
}

void FinSupp::add(const ExtWeyl& w, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = coeffs.emplace(w, c);
  if (fresh) return;
  it->second += c;
  if (it->second.is_zero()) coeffs.erase(it);
}

Scalar FinSupp::at(const ExtWeyl& w) const {
  auto it = coeffs.find(w);
  return it == coeffs.end() ? Scalar() : it->second;
}

std::string to_string(const Generator& g) {
  std::string s;
  switch (g.kind) {
    case Generator::T:
      s = "T" + std::to_string(g.index);
      break;
    case Generator::Pi:
      s = "pi" + std::to_string(g.index);
      break;
    case Generator::X: {
      s = "X[";
      for (int i = 0; i < kMaxRank; ++i) {
        if (i) s += ",";
        s += std::to_string(g.b[i]);
      }
      while (s.size() > 2 && s.substr(s.size() - 2) == ",0") s.resize(s.size() - 2);
      s += "]";
      break;
    }
  }
  return g.inverse ? s + "^-1" : s;
}

FinSupp apply_gen_functional(const RootDatum& d, const Generator& g, const FinSupp& f, const Character& xi) {
  if (f.basis != Basis::Characteristic) throw std::invalid_argument("functional action needs the f-basis");
  return apply_generator(d, g, f, xi, [&](FinSupp& r, const ExtWeyl& w, const Scalar& c, const Scalar& th,
                                          const Scalar& x) {
    r.add(ext_simple(d, g.index) * w, c * two_term_a(th, x.inverse()));
    r.add(w, -c * two_term_b(th, x));
  });
}

FinSupp apply_gen_delta(const RootDatum& d, const Generator& g, const FinSupp& v, const Character& xi) {
  if (v.basis != Basis::Delta) throw std::invalid_argument("delta action needs the delta-basis");
  return apply_generator(d, g, v, xi, [&](FinSupp& r, const ExtWeyl& w, const Scalar& c, const Scalar& th,
                                          const Scalar& x) {
    r.add(ext_simple(d, g.index) * w, c * two_term_a(th, x));
    r.add(w, -c * two_term_b(th, x));
  });
}

FinSupp to_delta(const RootDatum& d, const FinSupp& f, const Character& xi, int skip_factor) {
  if (f.basis != Basis::Characteristic) throw std::invalid_argument("to_delta needs the f-basis");
  FinSupp r;
  r.basis = Basis::Delta;
  for (const auto& [w, c] : f.coeffs) r.add(w, c * mu1(d, w, xi, skip_factor));
  return r;
}

CheckReport iso_check(const RootDatum& d, const Character& xi, const std::vector<ExtWeyl>& support, int skip_factor) {
  CheckReport rep;
  for (const auto& w : support) {
    const FinSupp f = FinSupp::single(Basis::Characteristic, w);
    const FinSupp image = to_delta(d, f, xi, skip_factor);
    for (const auto& g : all_generators(d)) {
      ++rep.checks;
      if (to_delta(d, apply_gen_functional(d, g, f, xi), xi, skip_factor) != apply_gen_delta(d, g, image, xi))
        rep.failures.push_back({"iso " + to_string(g), w});
    }
  }
  return rep;
}

Scalar delta_gaussian(const RootDatum& d, const ExtWeyl& w, const Character& xi) {
  return q_pow(d, d.pair(w.b, w.b) / 2) * x_of(d, w.w.apply_inverse(w.b), xi);
}

Scalar inner1(const RootDatum& d, const FinSupp& f, const FinSupp& g, const Character& xi) {
  if (f.basis != g.basis) throw std::invalid_argument("inner product of mixed bases");
  Scalar s;
  for (const auto& [w, c] : f.coeffs) {
    const Scalar other = g.at(w);
    if (other.is_zero()) continue;
    const Scalar m = mu1(d, w, xi);
    s += (f.basis == Basis::Characteristic ? m : m.inverse()) * c * conj(other);
  }
  return s;
}

CheckReport delta_sharp_check(const RootDatum& d, int max_length) {
  CheckReport rep;
  const Character xi = character_t_minus_rho(d);
  const auto gens = all_generators(d);
  for (const auto& layer : ball_by_length(d, max_length))
    for (const auto& w : layer) {
      const bool sharp = is_pi_form(d, w);
      ++rep.checks;
      if (mu1(d, w, xi).is_zero() == sharp) rep.failures.push_back({sharp ? "mu_1 vanishes on pi_b" : "mu_1 nonzero off #B", w});
      if (!sharp) continue;
      for (const auto& g : gens) {
        ++rep.checks;
        for (const auto& [u, c] : apply_gen_delta(d, g, FinSupp::single(Basis::Delta, w), xi).coeffs)
          if (!is_pi_form(d, u)) {
            rep.failures.push_back({"image of " + to_string(g) + " leaves Delta_#", w});
            break;
          }
      }
    }
  return rep;
}

SpecPoint spec_point(const RootDatum& d, std::complex<double> q0, const KParams& k) {
  double nu_short = 2;
  for (int i = 1; i <= d.rank(); ++i)
    if (!d.simple_is_long(i)) nu_short = root_nu(d, i);
  const std::complex<double> t_long = std::pow(q0, k.k_long);
  const std::complex<double> t_short = std::pow(q0, (2.0 / nu_short) * k.k_short);
  return spec_point_from_qt(q0, d.two_m(), t_long, t_short);
}

ConvergenceCondition convergence_condition(const RootDatum& d, const KParams& k, const Coweight& v) {
  const int n = d.rank();
  std::vector<double> vec(n);
  for (int i = 1; i <= n; ++i) {
    const double ki = (d.simple_is_long(i) ? k.k_long : k.k_short).real();
    vec[i - 1] = 2 * ki + v[i - 1];
  }
  // p_j = (v, b_j) nu_j / 2 since (alpha_i^vee, b_j) = 2 delta_ij / nu_j.
  ConvergenceCondition c;
  c.ok = true;
  for (int j = 1; j <= n; ++j) {
    c.p.push_back(real_pair(d, vec, j) * root_nu(d, j) / 2);
    if (!(c.p.back() < 0)) c.ok = false;
  }
  return c;
}

ConvergenceCondition jackson_condition(const RootDatum& d, const KParams& k, const Coweight& a, const Coweight& b) {
  return convergence_condition(d, k, d.dominant(a) - d.antidominant(b));
}

namespace {

[[noreturn]] void refuse_condition(const ConvergenceCondition& c) {
  std::ostringstream os;
  os << "convergence condition fails:";
  for (std::size_t i = 0; i < c.p.size(); ++i)
    if (!(c.p[i] < 0)) os << " p_" << i + 1 << " = " << c.p[i];
  throw std::domain_error(os.str());
}

int g_worker_limit = 0;

// Runs f(index) for every index on at most worker_limit() threads and returns results in index order.
template <class F>
auto ordered_map(std::size_t count, F&& f) {
  using R = decltype(f(std::size_t{0}));
  const std::size_t batch = static_cast<std::size_t>(worker_limit());
  std::vector<R> out;
  out.reserve(count);
  for (std::size_t start = 0; start < count; start += batch) {
    std::vector<std::future<R>> futs;
    for (std::size_t i = start; i < std::min(count, start + batch); ++i)
      futs.push_back(std::async(std::launch::async, f, i));
    for (auto& fu : futs) out.push_back(fu.get());
  }
  return out;
}

}  // namespace

void set_worker_limit(int workers) { g_worker_limit = std::max(0, workers); }

int worker_limit() {
  if (g_worker_limit > 0) return g_worker_limit;
  return std::max(1u, std::thread::hardware_concurrency());
}

JacksonReport jackson_check(const RootDatum& d, const Coweight& a, const Coweight& b, std::complex<double> q0,
                            const KParams& k, int max_length) {
  JacksonReport rep;
  rep.condition = jackson_condition(d, k, a, b);
  if (!rep.condition.ok) refuse_condition(rep.condition);
  const SpecPoint pt = spec_point(d, q0, k);
  const Character xi = character_t_minus_rho(d);
  const NumericPoly ea(nonsym_hat(d, a), pt), eb(nonsym_hat(d, b), pt);
  const auto layers = ball_by_length(d, max_length);

  struct ShellSums {
    std::complex<double> num, den;
  };
  const auto shells = ordered_map(layers.size(), [&](std::size_t l) {
    ShellSums s;
    for (const auto& w : layers[l]) {
      const FactorList fl = mu1_factors(d, w, xi, -1);
      if (fl.vanishes()) continue;
      std::complex<double> m;
      try {
        m = fl.numeric(pt);
      } catch (const std::domain_error& e) {
        throw std::domain_error(std::string(e.what()) + " for " + element_label(d, w));
      }
      s.den += m;
      s.num += m * ea.at(d, w, xi, pt, false) * eb.at(d, w, xi, pt, true);
    }
    return s;
  });

  std::complex<double> num, den, prev;
  for (std::size_t l = 0; l < shells.size(); ++l) {
    num += shells[l].num;
    den += shells[l].den;
    ShellRow row;
    row.length = static_cast<int>(l);
    row.shell_sum = shells[l].num;
    row.cumulative = num;
    row.ratio = num / den;
    row.tail_estimate = l == 0 ? std::abs(row.ratio) : std::abs(row.ratio - prev);
    prev = row.ratio;
    rep.shells.push_back(row);
  }
  rep.ratio = prev;
  rep.expected = a == b ? specialize(norm_closed(d, b), pt) : std::complex<double>(0);
  rep.error = std::abs(rep.ratio - rep.expected);
  return rep;
}

Scalar mu1_prime(const RootDatum& d, const Coweight& c, const Character& xi) {
  return mu1_prime_factors(d, c, xi).exact();
}

AomotoReport aomoto_estimate(const RootDatum& d, std::complex<double> q0, const KParams& k, int max_length,
                             const Coweight& a_plus, const Coweight& b_plus) {
  AomotoReport rep;
  rep.condition = convergence_condition(d, k, a_plus - d.antidominant(b_plus));
  if (!rep.condition.ok) refuse_condition(rep.condition);
  const SpecPoint pt = spec_point(d, q0, k);
  const Character xi = character_t_minus_rho(d);
  const NumericPoly pa(symmetrize(d, a_plus), pt), pb(symmetrize(d, b_plus), pt);

  const int n = d.rank();
  std::vector<std::vector<Coweight>> by_length(max_length + 1);
  Coweight c;
  std::function<void(int)> rec = [&](int i) {
    if (i == n) {
      int len = 0;
      for (int idx = 0; idx < d.num_positive(); ++idx) len += std::abs(d.pair(c, idx));
      if (len <= max_length) by_length[len].push_back(c);
      return;
    }
    for (int v = -max_length; v <= max_length; ++v) {
      c[i] = v;
      rec(i + 1);
    }
    c[i] = 0;
  };
  rec(0);

  struct Sums {
    std::complex<double> a, p;
  };
  const auto shells = ordered_map(by_length.size(), [&](std::size_t l) {
    Sums s;
    for (const auto& cc : by_length[l]) {
      const FactorList fl = mu1_prime_factors(d, cc, xi);
      if (fl.vanishes()) continue;
      const std::complex<double> m = fl.numeric(pt);
      const ExtWeyl shift = ext_translation(d, cc);
      s.a += m;
      s.p += m * pa.at(d, shift, xi, pt, false) * pb.at(d, shift, xi, pt, false);
    }
    return s;
  });
  std::complex<double> a_sum, p_sum;
  for (std::size_t l = 0; l < shells.size(); ++l) {
    a_sum += shells[l].a;
    p_sum += shells[l].p;
    rep.rows.push_back({static_cast<int>(l), a_sum, p_sum});
  }
  rep.a_xi = a_sum;
  rep.pairing = p_sum;
  return rep;
}

}  // namespace daha
