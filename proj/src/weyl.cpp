#include "daha/weyl.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

namespace daha {

ExtWeyl ext_identity(const RootDatum& d) { return ExtWeyl{Coweight{}, WeylElem::identity(d.rank())}; }

ExtWeyl ext_translation(const RootDatum& d, const Coweight& b) { return ExtWeyl{b, WeylElem::identity(d.rank())}; }

ExtWeyl ext_finite(const Coweight& b, const WeylElem& w) { return ExtWeyl{b, w}; }

WeylElem reflection(const RootDatum& d, int root_idx) {
  // s_alpha(b) = b - (b, alpha) alpha^vee; column j is the image of b_j.
  const RootInfo& r = d.root(root_idx);
  WeylElem w = WeylElem::identity(d.rank());
  for (int j = 0; j < d.rank(); ++j) {
    int c = r.coords[j];
    if (c == 0) continue;
    for (int i = 0; i < d.rank(); ++i) w.mat[i * kMaxRank + j] -= c * r.coroot[i];
  }
  w.inv = w.mat;
  return w;
}

ExtWeyl affine_reflection(const RootDatum& d, const AffineRoot& a) {
  return ExtWeyl{-a.k * d.root(a.root).coroot, reflection(d, a.root)};
}

ExtWeyl ext_simple(const RootDatum& d, int j) {
  if (j < 0 || j > d.rank()) throw std::out_of_range("simple reflection index");
  if (j == 0) return ExtWeyl{d.theta_coroot(), reflection(d, d.theta())};
  return ExtWeyl{Coweight{}, d.simple_reflection(j)};
}

ExtWeyl ext_pi(const RootDatum& d, int r) {
  if (r == 0) return ext_identity(d);
  const MinusculeEntry* e = d.minuscule_entry(r);
  if (!e) throw std::invalid_argument("pi_r requested for a non-minuscule node");
  return ExtWeyl{e->b_r, e->omega.inverse()};
}

AffineRoot simple_affine_root(const RootDatum& d, int j) {
  if (j == 0) return AffineRoot{d.negate(d.theta()), 1};
  return AffineRoot{d.simple_root(j), 0};
}

bool is_positive(const RootDatum& d, const AffineRoot& a) {
  return a.k > 0 || (a.k == 0 && d.root(a.root).positive);
}

AffineRoot negate(const RootDatum& d, const AffineRoot& a) { return AffineRoot{d.negate(a.root), -a.k}; }

AffineRoot act_linear(const RootDatum& d, const ExtWeyl& x, const AffineRoot& a) {
  RootCoords wc = x.w.apply_root(d.root(a.root).coords);
  int idx = d.root_index(wc);
  if (idx < 0) throw std::logic_error("Weyl action left the root system");
  return AffineRoot{idx, a.k - d.pair(x.b, wc)};
}

Coweight act_affine(const ExtWeyl& x, const Coweight& z) { return x.w.apply(z) + x.b; }

namespace {

// For each root alpha, the k with [alpha,k] > 0 and x([alpha,k]) < 0 form an
// interval [kmin, kmax]; visit(alpha, kmin, kmax) is called when it is nonempty.
template <class F>
void scan_lambda(const RootDatum& d, const ExtWeyl& x, F&& visit) {
  for (int a = 0; a < d.num_roots(); ++a) {
    RootCoords wc = x.w.apply_root(d.root(a).coords);
    int p = d.pair(x.b, wc);
    int kmin = d.root(a).positive ? 0 : 1;
    bool w_negative = false;
    bool any_negative = false;
    for (int j = 0; j < d.rank(); ++j) {
      if (wc[j] < 0) any_negative = true;
      if (wc[j] != 0) {
        w_negative = any_negative;
        break;
      }
    }
    int kmax = w_negative ? p : p - 1;
    if (kmax >= kmin) visit(a, kmin, kmax);
  }
}

}  // namespace

LengthInfo length_and_lambda(const RootDatum& d, const ExtWeyl& x) {
  LengthInfo info;
  scan_lambda(d, x, [&](int a, int kmin, int kmax) {
    int cnt = kmax - kmin + 1;
    info.length += cnt;
    (d.root(a).is_long ? info.length_long : info.length_short) += cnt;
    for (int k = kmin; k <= kmax; ++k) info.lambda.push_back(AffineRoot{a, k});
  });
  std::sort(info.lambda.begin(), info.lambda.end());
  return info;
}

int length(const RootDatum& d, const ExtWeyl& x) {
  int l = 0;
  scan_lambda(d, x, [&](int, int kmin, int kmax) { l += kmax - kmin + 1; });
  return l;
}

bool has_right_descent(const RootDatum& d, const ExtWeyl& x, int j) {
  return !is_positive(d, act_linear(d, x, simple_affine_root(d, j)));
}

Word reduced_word(const RootDatum& d, const ExtWeyl& x) {
  ExtWeyl y = x;
  std::vector<int> peeled;
  for (;;) {
    int j = 0;
    for (; j <= d.rank(); ++j)
      if (has_right_descent(d, y, j)) break;
    if (j > d.rank()) break;
    peeled.push_back(j);
    y = y * ext_simple(d, j);
  }
  Word w;
  w.letters.assign(peeled.rbegin(), peeled.rend());
  if (!y.b.is_zero()) {
    for (const auto& e : d.minuscule())
      if (e.b_r == y.b) w.pi = e.r;
    if (w.pi == 0) throw std::logic_error("length-zero element is not a pi_r");
  }
  if (!(ext_pi(d, w.pi) == y)) throw std::logic_error("length-zero element mismatch");
  return w;
}

ExtWeyl from_word(const RootDatum& d, const Word& w) {
  ExtWeyl x = ext_pi(d, w.pi);
  for (int j : w.letters) x = x * ext_simple(d, j);
  return x;
}

std::vector<std::string> word_tokens(const Word& w) {
  std::vector<std::string> out;
  if (w.pi != 0) out.push_back("pi:" + std::to_string(w.pi));
  for (int j : w.letters) out.push_back("s" + std::to_string(j));
  return out;
}

PiDecomposition pi_decomposition(const RootDatum& d, const Coweight& b) {
  PiDecomposition p;
  std::vector<int> applied;
  p.b_minus = d.antidominant(b, &applied);
  p.b_plus = d.longest().apply(p.b_minus);
  p.omega = WeylElem::identity(d.rank());
  for (int i : applied) p.omega = d.simple_reflection(i) * p.omega;
  p.omega_word.assign(applied.rbegin(), applied.rend());
  p.pi_b = ExtWeyl{b, p.omega.inverse()};
  p.word = reduced_word(d, p.pi_b);
  return p;
}

std::vector<AffineRoot> lambda_prime(const RootDatum& d, const Coweight& b) {
  std::vector<AffineRoot> out;
  for (const auto& a : length_and_lambda(d, pi_decomposition(d, b).pi_b).lambda)
    out.push_back(AffineRoot{d.negate(a.root), a.k});
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<AffineRoot> lambda_prime_display(const RootDatum& d, const Coweight& b) {
  const Coweight bm = d.antidominant(b);
  std::vector<AffineRoot> out;
  for (int a = 0; a < d.num_positive(); ++a) {
    int p = d.pair(b, a);
    int n = -d.pair(bm, a);
    if (p > 0)
      for (int j = 1; j < n; ++j) out.push_back(AffineRoot{a, j});
    else if (p < 0)
      for (int j = 1; j <= n; ++j) out.push_back(AffineRoot{a, j});
  }
  return out;
}

Order leq_order(const RootDatum& d, const Coweight& b, const Coweight& c) {
  if (b == c) return Order::Equal;
  if (d.coroot_leq(b, c)) return Order::Less;
  if (d.coroot_leq(c, b)) return Order::Greater;
  return Order::Incomparable;
}

PreceqResult preceq(const RootDatum& d, const Coweight& b, const Coweight& c) {
  PreceqResult r;
  const Order plain = leq_order(d, b, c);
  r.leq_comparable = plain != Order::Incomparable;
  const Coweight bm = d.antidominant(b), cm = d.antidominant(c);
  if (bm == cm) {
    r.order = plain;
    return r;
  }
  Order o = leq_order(d, bm, cm);
  r.order = (o == Order::Less || o == Order::Greater) ? o : Order::Incomparable;
  return r;
}

int affine_pairing(const RootDatum& d, int j, const Coweight& c) {
  if (j == 0) return 1 - d.pair(c, d.theta());
  return c[j - 1];
}

Coweight simple_affine_action(const RootDatum& d, int j, const Coweight& c) {
  const int p = affine_pairing(d, j, c);
  if (j == 0) return c + p * d.theta_coroot();
  return c - p * d.simple_coroot(j);
}

Descent descent(const RootDatum& d, int j, const Coweight& c) {
  Descent r;
  r.flag = affine_pairing(d, j, c) > 0;
  if (r.flag) r.b = simple_affine_action(d, j, c);
  return r;
}

std::vector<Coweight> saturated_set(const RootDatum& d, const Coweight& dominant_bound) {
  std::set<Coweight> seen{dominant_bound};
  std::deque<Coweight> queue{dominant_bound};
  while (!queue.empty()) {
    Coweight c = queue.front();
    queue.pop_front();
    for (int a = 0; a < d.num_positive(); ++a) {
      int p = d.pair(c, a);
      const Coweight& cor = d.root(a).coroot;
      for (int j = 1; j <= std::abs(p); ++j) {
        Coweight x = p > 0 ? c - j * cor : c + j * cor;
        if (seen.insert(x).second) queue.push_back(x);
      }
    }
  }
  return {seen.begin(), seen.end()};
}

std::vector<Coweight> orbit(const RootDatum& d, const Coweight& b) {
  std::set<Coweight> seen{b};
  std::deque<Coweight> queue{b};
  while (!queue.empty()) {
    Coweight c = queue.front();
    queue.pop_front();
    for (int i = 1; i <= d.rank(); ++i) {
      Coweight x = c - c[i - 1] * d.simple_coroot(i);
      if (seen.insert(x).second) queue.push_back(x);
    }
  }
  return {seen.begin(), seen.end()};
}

bool in_sigma(const RootDatum& d, const Coweight& b, const Coweight& c) {
  Order o = preceq(d, b, c).order;
  return o == Order::Less || o == Order::Equal;
}

bool in_sigma_star(const RootDatum& d, const Coweight& b, const Coweight& c) {
  return preceq(d, b, c).order == Order::Less;
}

bool in_sigma_plus(const RootDatum& d, const Coweight& b, const Coweight& c) {
  const Coweight bm = d.antidominant(b), cm = d.antidominant(c);
  return bm != cm && d.coroot_leq(bm, cm);
}

std::vector<std::vector<ExtWeyl>> ball_by_length(const RootDatum& d, int max_length) {
  std::vector<std::vector<ExtWeyl>> layers;
  std::vector<ExtWeyl> layer{ext_identity(d)};
  for (const auto& e : d.minuscule()) layer.push_back(ext_pi(d, e.r));
  std::sort(layer.begin(), layer.end());
  layers.push_back(layer);
  for (int l = 1; l <= max_length; ++l) {
    std::set<ExtWeyl> next;
    for (const auto& x : layers.back())
      for (int j = 0; j <= d.rank(); ++j)
        if (!has_right_descent(d, x, j)) next.insert(x * ext_simple(d, j));
    layers.emplace_back(next.begin(), next.end());
  }
  return layers;
}

bool is_pi_form(const RootDatum& d, const ExtWeyl& x) {
  const Coweight c = act_affine(x, Coweight{});
  if (c != x.b) return false;
  return pi_decomposition(d, c).pi_b == x;
}

}  // namespace daha
