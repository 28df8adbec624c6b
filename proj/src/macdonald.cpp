#include "daha/macdonald.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

namespace daha {

std::vector<PathStep> pi_path(const RootDatum& d, const Coweight& b, const Word& word) {
  if (!(from_word(d, word) == pi_decomposition(d, b).pi_b)) throw std::invalid_argument("word does not spell pi_b");
  std::vector<PathStep> steps;
  Coweight c;
  for (auto it = word.letters.rbegin(); it != word.letters.rend(); ++it) {
    if (affine_pairing(d, *it, c) <= 0) throw std::invalid_argument("chain step with (alpha_j, c+d) <= 0");
    steps.push_back(PathStep{false, *it, c});
    c = simple_affine_action(d, *it, c);
  }
  if (word.pi != 0) {
    steps.push_back(PathStep{true, word.pi, c});
    c = act_affine(ext_pi(d, word.pi), c);
  }
  if (c != b) throw std::logic_error("chain does not end at b");
  return steps;
}

std::vector<PathStep> pi_path(const RootDatum& d, const Coweight& b) {
  return pi_path(d, b, pi_decomposition(d, b).word);
}

LaurentPoly nonsym_hat(const RootDatum& d, const Coweight& b, const Word& word) {
  LaurentPoly p = LaurentPoly::constant(1);
  for (const auto& s : pi_path(d, b, word)) {
    if (s.is_pi)
      p = apply_pi(d, s.index, p, Level::One);
    else
      p = apply_intertwiner(d, s.index, p, Level::One, IntertwinerKind::G, x_simple_at_sharp(d, s.index, s.c));
  }
  return p;
}

LaurentPoly nonsym_hat(const RootDatum& d, const Coweight& b) { return nonsym_hat(d, b, pi_decomposition(d, b).word); }

Scalar x_coroot_at_t_rho(const RootDatum& d, int root_idx) {
  const Coweight& a = d.root(root_idx).coroot;
  Scalar r = t_power(true, d.pair_rho(a, true));
  if (d.has_short()) r *= t_power(false, d.pair_rho(a, false));
  return r;
}

Scalar q_alpha_pow(const RootDatum& d, int root_idx, int j) { return q_pow(d, Rational(2 * j) / d.root(root_idx).nu); }

namespace {

Scalar half_norm_q(const RootDatum& d, const Coweight& b) { return q_pow(d, Rational(d.pair(b, b) / 2)); }

// prod over lambda'(pi_b) of num(qj, t^{1/2}, x) / den(qj, t^{1/2}, x).
template <class F>
Scalar lambda_prime_product(const RootDatum& d, const Coweight& b, F&& term) {
  Scalar r(1);
  for (const auto& a : lambda_prime(d, b)) {
    const Scalar qj = q_alpha_pow(d, a.root, a.k);
    const Scalar th = t_root_pow(d, a.root, make_rational(1, 2));
    r *= term(qj, th, x_coroot_at_t_rho(d, a.root));
  }
  return r;
}

}  // namespace

Scalar hat_factor(const RootDatum& d, const Coweight& b) {
  const Scalar one(1);
  return half_norm_q(d, b) * lambda_prime_product(d, b, [&](const Scalar& qj, const Scalar& th, const Scalar& x) {
           return (one - qj * th * th * x) / (one - qj * x);
         });
}

Scalar hat_factor_chain(const RootDatum& d, const Coweight& b) {
  Scalar r = half_norm_q(d, b);
  for (const auto& s : pi_path(d, b))
    if (!s.is_pi) r *= t_half(d, s.index) * phi_value(d, s.index, x_simple_at_sharp(d, s.index, s.c));
  return r;
}

MacRecord e_from_hat(const RootDatum& d, const Coweight& b) {
  MacRecord m;
  m.b = b;
  m.e_hat = nonsym_hat(d, b);
  m.factor = hat_factor(d, b);
  m.e = m.e_hat * m.factor;
  if (m.e.coefficient(b) != Scalar(1)) throw std::logic_error("e_b is not monic on x_b");
  for (int i = 1; i <= d.rank(); ++i) m.eigenvalues[i] = x_at_sharp(d, d.fundamental(i), 0, b);
  return m;
}

LaurentPoly oracle_e(const RootDatum& d, const Coweight& b) {
  std::vector<Coweight> slice;
  for (const auto& c : saturated_set(d, d.dominant(b)))
    if (in_sigma(d, b, c)) slice.push_back(c);
  const std::set<Coweight> members(slice.begin(), slice.end());

  // Linear extension of preceq: by the size of the strict down-set.
  std::map<Coweight, int> below;
  for (const auto& c : slice) {
    int k = 0;
    for (const auto& x : slice) k += preceq(d, x, c).order == Order::Less;
    below[c] = k;
  }
  std::stable_sort(slice.begin(), slice.end(), [&](const Coweight& x, const Coweight& y) { return below[x] < below[y]; });
  if (slice.front() != b) throw std::logic_error("b is not minimal in sigma(b)");

  const int n = d.rank();
  std::vector<std::map<Coweight, LaurentPoly>> ymat(n + 1);
  std::vector<Scalar> lambda(n + 1);
  for (int i = 1; i <= n; ++i) {
    lambda[i] = x_at_sharp(d, d.fundamental(i), 0, b).inverse();
    for (const auto& c : slice) {
      LaurentPoly img = apply_Y(d, d.fundamental(i), LaurentPoly::monomial(c));
      for (const auto& [a, x] : img.terms())
        if (!members.count(a)) throw std::logic_error("slice is not Y-invariant");
      ymat[i][c] = std::move(img);
    }
  }

  std::map<Coweight, Scalar> v{{b, Scalar(1)}};
  for (std::size_t k = 1; k < slice.size(); ++k) {
    const Coweight& a = slice[k];
    int i = 1;
    for (; i <= n; ++i)
      if (ymat[i][a].coefficient(a) != lambda[i]) break;
    if (i > n) throw std::domain_error("eigenvalue collision in the Y-oracle");
    Scalar s;
    for (std::size_t m = 0; m < k; ++m) {
      auto it = v.find(slice[m]);
      if (it == v.end()) continue;
      s += it->second * ymat[i][slice[m]].coefficient(a);
    }
    if (!s.is_zero()) v[a] = -s / (ymat[i][a].coefficient(a) - lambda[i]);
  }

  LaurentPoly e;
  for (const auto& [c, x] : v) e.add_term(c, x);
  for (int i = 1; i <= n; ++i)
    if (apply_Y(d, d.fundamental(i), e) != e * lambda[i]) throw std::logic_error("oracle solution fails an eigen-equation");
  return e;
}

Scalar eval_at_sharp(const RootDatum& d, const LaurentPoly& p, const Coweight& c) {
  Scalar r;
  for (const auto& [a, x] : p.terms()) r += x * x_at_sharp(d, a, 0, c);
  return r;
}

Scalar evaluation_closed(const RootDatum& d, const Coweight& b) {
  const Coweight bm = d.antidominant(b);
  Scalar r = half_norm_q(d, b).inverse() * t_power(true, d.pair_rho(bm, true));
  if (d.has_short()) r *= t_power(false, d.pair_rho(bm, false));
  return r;
}

bool check_evaluation(const RootDatum& d, const Coweight& b) {
  return eval_at_sharp(d, nonsym_hat(d, b), Coweight{}) == evaluation_closed(d, b);
}

Scalar norm_closed(const RootDatum& d, const Coweight& b) {
  return lambda_prime_product(d, b, [](const Scalar& qj, const Scalar& th, const Scalar& x) {
    const Scalar ti = th.inverse();
    return (th - qj * ti * x) / (ti - qj * th * x);
  });
}

LaurentPoly apply_L_bar(const RootDatum& d, const LaurentPoly& f, const LaurentPoly& g, Level level) {
  LaurentPoly r;
  for (const auto& [c, x] : f.terms()) r += apply_Y(d, -c, g, level) * x;
  return r;
}

Scalar pairing_Y(const RootDatum& d, const LaurentPoly& f, const LaurentPoly& g, Level level) {
  const Level y_level = level == Level::One ? Level::MinusOne : level;
  return eval_at_sharp(d, apply_L_bar(d, f, g, y_level), Coweight{});
}

bool check_value_recurrence(const RootDatum& d, const Coweight& b, const Coweight& c, int j, RecurrenceForm form) {
  const Coweight b2 = simple_affine_action(d, j, b), c2 = simple_affine_action(d, j, c);
  if (form == RecurrenceForm::Literal) {
    if (affine_pairing(d, j, c) != -affine_pairing(d, j, b))
      throw std::invalid_argument("value recurrence needs (alpha_j, c+d) = -(alpha_j, b+d)");
    return eval_at_sharp(d, nonsym_hat(d, b), c) == eval_at_sharp(d, nonsym_hat(d, b2), c2);
  }
  if (x_simple_at_sharp(d, j, b) * x_simple_at_sharp(d, j, c) != Scalar(1))
    throw std::invalid_argument("value recurrence needs x_{a_j}(#b) x_{a_j}(#c) = 1");
  return eval_at_sharp(d, nonsym_hat(d, b), c) * evaluation_closed(d, b2) ==
         eval_at_sharp(d, nonsym_hat(d, b2), c2) * evaluation_closed(d, b);
}

std::vector<FiniteElement> finite_weyl_elements(const RootDatum& d) {
  std::vector<FiniteElement> out{{WeylElem::identity(d.rank()), {}}};
  std::set<WeylElem> seen{out.front().w};
  for (std::size_t k = 0; k < out.size(); ++k)
    for (int i = 1; i <= d.rank(); ++i) {
      FiniteElement next{out[k].w * d.simple_reflection(i), out[k].word};
      next.word.push_back(i);
      if (seen.insert(next.w).second) out.push_back(std::move(next));
    }
  return out;
}

LaurentPoly symmetrize(const RootDatum& d, const Coweight& b_plus, Symmetrizer kind) {
  if (d.dominant(b_plus) != b_plus) throw std::invalid_argument("symmetrize needs a dominant coweight");
  const LaurentPoly e = e_from_hat(d, b_plus).e;
  const auto elements = finite_weyl_elements(d);
  std::set<WeylElem> chosen;
  if (kind != Symmetrizer::Full)
    for (const auto& c : orbit(d, b_plus)) chosen.insert(pi_decomposition(d, c).omega.inverse() * d.longest());
  LaurentPoly p;
  for (const auto& el : elements) {
    if (kind != Symmetrizer::Full && !chosen.count(el.w)) continue;
    Word w;
    w.letters = el.word;
    Scalar weight(1);
    if (kind != Symmetrizer::CosetUnit) {
      int nl = 0, ns = 0;
      for (int i : el.word) (d.simple_is_long(i) ? nl : ns)++;
      weight = t_power(true, make_rational(nl, 2)) * t_power(false, make_rational(ns, 2));
    }
    p += apply_T_word(d, w, e, Level::Zero) * weight;
  }
  const Scalar lead = p.coefficient(b_plus);
  if (lead.is_zero()) throw std::logic_error("symmetrization lost the leading monomial");
  return p * lead.inverse();
}

IntegralityReport check_integrality(const RootDatum& d, const Coweight& b) {
  const Scalar one(1);
  auto laurent = [&](const LaurentPoly& p) {
    for (const auto& [c, x] : p.terms())
      if (!laurent_membership(x, d.two_m())) return false;
    return true;
  };
  auto clear_plain = [&](const Coweight& c) {
    return lambda_prime_product(d, c, [&](const Scalar& qj, const Scalar&, const Scalar& x) { return one - qj * x; });
  };
  IntegralityReport r;
  const MacRecord m = e_from_hat(d, b);
  r.e = laurent(m.e * clear_plain(b));
  r.e_hat = laurent(m.e_hat * (half_norm_q(d, b) * lambda_prime_product(d, b, [&](const Scalar& qj, const Scalar& th,
                                                                                   const Scalar& x) {
                                 return one - qj * th * th * x;
                               })));
  const Coweight bp = d.dominant(b);
  r.p = laurent(symmetrize(d, bp) * clear_plain(bp));
  return r;
}

}  // namespace daha
