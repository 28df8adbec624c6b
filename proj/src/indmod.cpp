#include "daha/indmod.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>

namespace daha {

Character character_from_exponents(const RootDatum& d, const std::vector<QTExponents>& exps) {
  if (static_cast<int>(exps.size()) != d.rank()) throw std::invalid_argument("character needs one value per node");
  std::vector<Scalar> xi;
  for (const auto& e : exps)
    xi.push_back(q_power(e.q_exp, d.two_m()) * t_power(true, e.t_long) * t_power(false, e.t_short));
  return character_from_values(d, std::move(xi));
}

namespace {

// v-exponent of q_alpha.
int q_alpha_step(const RootDatum& d, int idx) {
  const Scalar qa = q_alpha_pow(d, idx, 1);
  return qa.num().lead().exp[kVarV];
}

// Integer j with q_alpha^j m = 1 for a monomial m, if any.
std::optional<int> solve_exact(const RootDatum& d, int idx, const Scalar& m) {
  const Term& term = m.num().lead();
  if (term.coeff != 1) return std::nullopt;
  for (int slot = 1; slot < kNumVars; ++slot)
    if (term.exp[slot] != 0) return std::nullopt;
  const int step = q_alpha_step(d, idx);
  if (term.exp[kVarV] % step != 0) return std::nullopt;
  return -term.exp[kVarV] / step;
}

void finish(Classification& c) {
  for (const auto& w : c.witnesses) {
    if (w.sign != 0) c.irreducible = false;
    if (w.sign < 0) c.cospherical = false;
    if (w.sign > 0) c.spherical_dual = false;
  }
  c.induced_irreducible =
      c.irreducible && std::none_of(c.witnesses.begin(), c.witnesses.end(), [](const Witness& w) { return w.sign == 0; });
}

// Solves q_alpha^j x t^{-sign} = 1 per positive root for both orientations.
template <class Solve>
Classification classify_with(const RootDatum& d, Solve&& solve) {
  Classification c;
  for (int idx = 0; idx < d.num_positive(); ++idx) {
    for (bool negative : {false, true})
      for (int sign : {-1, 1}) {
        const auto j = solve(idx, negative, sign);
        if (j && (*j > 0 || (*j == 0 && !negative))) c.witnesses.push_back({idx, negative, *j, sign});
      }
    if (const auto j = solve(idx, false, 0)) c.witnesses.push_back({idx, false, *j, 0});
  }
  finish(c);
  return c;
}

}  // namespace

Classification classify(const RootDatum& d, const Character& xi) {
  return classify_with(d, [&](int idx, bool negative, int sign) {
    Scalar x = x_of(d, d.root(idx).coroot, xi);
    if (negative) x = x.inverse();
    return solve_exact(d, idx, x * t_root_pow(d, idx, -sign));
  });
}

Classification classify(const RootDatum& d, const NumericCharacter& xi, double tol) {
  if (static_cast<int>(xi.xi.size()) != d.rank()) throw std::invalid_argument("character needs one value per node");
  if (std::abs(std::abs(xi.q) - 1.0) < 1e-12) throw std::domain_error("|q| = 1: the witness set is not locally finite");
  return classify_with(d, [&](int idx, bool negative, int sign) -> std::optional<int> {
    const RootInfo& r = d.root(idx);
    std::complex<double> x = 1.0;
    for (int i = 0; i < d.rank(); ++i) x *= std::pow(xi.xi[i], r.coroot[i]);
    if (negative) x = 1.0 / x;
    const std::complex<double> t = r.is_long ? xi.t_long : xi.t_short;
    const std::complex<double> qa = std::pow(xi.q, 2.0 / r.nu.get_d());
    const std::complex<double> m = x * std::pow(t, -sign);
    const int j = static_cast<int>(std::lround(-std::log(std::abs(m)) / std::log(std::abs(qa))));
    if (std::abs(std::pow(qa, j) * m - 1.0) < tol) return j;
    return std::nullopt;
  });
}

Character shifted_character(const RootDatum& d, const ExtWeyl& u, const Character& xi) {
  std::vector<Scalar> vals;
  for (int i = 1; i <= d.rank(); ++i) vals.push_back(x_at(d, d.fundamental(i), u, xi));
  return character_from_values(d, std::move(vals));
}

PrimitiveReport find_primitive(const RootDatum& d, const Character& xi, int max_length) {
  PrimitiveReport rep;
  rep.bound = max_length;
  const auto layers = ball_by_length(d, max_length);
  auto values = [&](const ExtWeyl& u) { return shifted_character(d, u, xi).xi; };

  for (const auto& layer : layers)
    for (const auto& u : layer) {
      const auto base = values(u);
      std::vector<int> simple;
      for (int j = 0; j <= d.rank(); ++j)
        if (values(ext_simple(d, j) * u) == base) simple.push_back(j);
      bool primitive = true;
      for (const auto& lay : layers) {
        for (const auto& w : lay) {
          const Word word = reduced_word(d, w);
          if (word.pi != 0 || values(w * u) != base) continue;
          if (!std::all_of(word.letters.begin(), word.letters.end(),
                           [&](int j) { return std::find(simple.begin(), simple.end(), j) != simple.end(); })) {
            primitive = false;
            break;
          }
        }
        if (!primitive) break;
      }
      if (primitive) {
        rep.found = true;
        rep.u0 = u;
        rep.simple_stabilizer = simple;
        return rep;
      }
    }
  return rep;
}

TransportResult transport(const RootDatum& d, const std::vector<int>& word, const ExtWeyl& w0, const Character& xi) {
  TransportResult res;
  res.vector = FinSupp::single(Basis::Delta, w0);
  ExtWeyl u = w0;
  for (int j : word) {
    const Scalar x = x_simple_at(d, j, u, xi);
    const Scalar th = t_half(d, j);
    FinSupp next;
    next.basis = Basis::Delta;
    if (x != Scalar(1)) {
      for (const auto& [w, c] : apply_gen_delta(d, Generator::t(j), res.vector, xi).coeffs) next.add(w, c * (x - Scalar(1)));
    }
    for (const auto& [w, c] : res.vector.coeffs) next.add(w, c * (th - th.inverse()));
    res.vector = std::move(next);
    u = ext_simple(d, j) * u;
    for (int i = 1; i <= d.rank(); ++i) {
      const Coweight bi = d.fundamental(i);
      FinSupp expected;
      expected.basis = Basis::Delta;
      for (const auto& [w, c] : res.vector.coeffs) expected.add(w, c * x_at(d, bi, u, xi));
      if (apply_gen_delta(d, Generator::x(bi), res.vector, xi) != expected)
        throw std::logic_error("transport: step s_" + std::to_string(j) + " is not an X-eigenvector");
    }
  }
  res.end = u;
  if (res.vector.coeffs.size() == 1) res.multiplier = res.vector.coeffs.begin()->second;
  return res;
}

}  // namespace daha
