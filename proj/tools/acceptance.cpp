// Acceptance run: one PASS/FAIL line per criterion. An argument cN (or N) runs only that criterion;
// the exit status is 0 iff every selected criterion passes.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "daha/degenerate.hpp"
#include "daha/indmod.hpp"

using namespace daha;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (ok) return;
    if (pass) detail << "first failure: " << what << "; ";
    pass = false;
  }
};

std::vector<Coweight> points_up_to(const RootDatum& d, int max_len) {
  std::vector<Coweight> out;
  for (const auto& layer : ball_by_length(d, max_len))
    for (const auto& x : layer)
      if (is_pi_form(d, x)) out.push_back(x.b);
  return out;
}

std::string point_str(const RootDatum& d, const Coweight& b) {
  std::string s = "[";
  for (int i = 0; i < d.rank(); ++i) s += (i ? "," : "") + std::to_string(b[i]);
  return s + "]";
}

struct Case {
  char family;
  int rank;
  int bound;
};

// Points of the chain/oracle set: l(pi_b) <= 6, and <= 4 on G2.
const std::vector<Case> kMacCases{{'A', 1, 6}, {'A', 2, 6}, {'C', 2, 6}, {'G', 2, 4}};

void relations(Outcome& out) {
  int checks = 0;
  for (const auto& [f, rank] : {std::pair{'A', 1}, {'A', 2}, {'B', 2}, {'C', 2}, {'G', 2}}) {
    const RootDatum d = RootDatum::build(f, rank);
    const RelationReport rel = verify_relations(d, 3);
    const RelationReport shift = verify_level_shift(d, 3);
    checks += rel.checks + shift.checks;
    for (const auto& x : rel.failures) out.require(false, d.label() + " " + x.relation + " at " + point_str(d, x.witness));
    for (const auto& x : shift.failures) out.require(false, d.label() + " " + x.relation + " at " + point_str(d, x.witness));
  }
  out.detail << checks << " operator identities on degree <= 3 monomials of A1, A2, B2, C2, G2";
}

void chain_oracle(Outcome& out) {
  int n = 0;
  for (const auto& [f, rank, bound] : kMacCases) {
    const RootDatum d = RootDatum::build(f, rank);
    for (const auto& b : points_up_to(d, bound)) {
      ++n;
      out.require(e_from_hat(d, b).e == oracle_e(d, b), d.label() + " e_b at " + point_str(d, b));
    }
  }
  const RootDatum a1 = RootDatum::build('A', 1);
  const Scalar q = q_pow(a1, 1), t = t_half(a1, 1) * t_half(a1, 1), one(1);
  Coweight two;
  two[0] = 2;
  LaurentPoly golden = LaurentPoly::monomial(two);
  golden.add_term(Coweight{}, q * (one - t) / (one - q * t));
  out.require(e_from_hat(a1, two).e == golden, "A1 e_{2 omega} golden value");
  out.detail << n << " points, chain equals oracle; A1 e_{2 omega} = x_{2 omega} + q(1-t)/(1-qt)";
}

void evaluation(Outcome& out) {
  int n = 0;
  for (const auto& [f, rank, bound] : kMacCases) {
    const RootDatum d = RootDatum::build(f, rank);
    for (const auto& b : points_up_to(d, bound)) {
      ++n;
      out.require(check_evaluation(d, b), d.label() + " evaluation at " + point_str(d, b));
    }
  }
  out.detail << n << " points, hat e_b(t^-rho) equals the closed product exactly";
}

void jackson(Outcome& out) {
  const std::complex<double> q0 = 0.25;
  const KParams k{-1.37, -1.37};
  for (const auto& [rank, truncate] : {std::pair{1, 40}, std::pair{2, 25}}) {
    const RootDatum d = RootDatum::build('A', rank);
    const auto pts = points_up_to(d, 4);
    int refused = 0, checked = 0, off = 0;
    double worst = 0;
    for (const auto& a : pts)
      for (const auto& b : pts) {
        const ConvergenceCondition cond = jackson_condition(d, k, a, b);
        if (!cond.ok) {
          ++refused;
          std::ostringstream p;
          for (double x : cond.p) p << x << " ";
          out.require(false, d.label() + " precondition fails for (" + point_str(d, a) + ", " + point_str(d, b) +
                                 "), p = " + p.str());
          continue;
        }
        ++checked;
        const JacksonReport rep = jackson_check(d, a, b, q0, k, truncate);
        worst = std::max(worst, rep.error);
        if (rep.error >= 1e-6) {
          ++off;
          out.require(false, d.label() + " ratio off for (" + point_str(d, a) + ", " + point_str(d, b) + ")");
        }
      }
    out.detail << d.label() << " L=" << truncate << ": " << pts.size() * pts.size() << " pairs, " << refused
               << " refused by the precondition, " << checked << " summed, " << off << " off, max error " << worst
               << "; ";
  }
}

void discrete(Outcome& out) {
  int iso = 0, sharp = 0;
  for (const auto& [f, rank, bound] : kMacCases) {
    const RootDatum d = RootDatum::build(f, rank);
    std::vector<ExtWeyl> ball;
    for (const auto& layer : ball_by_length(d, 3)) ball.insert(ball.end(), layer.begin(), layer.end());
    const CheckReport r = iso_check(d, character_generic(d), ball);
    iso += r.checks;
    for (const auto& x : r.failures) out.require(false, d.label() + " iso: " + x.what);
    if (f == 'G') continue;
    const CheckReport s = delta_sharp_check(d, 6);
    sharp += s.checks;
    for (const auto& x : s.failures) out.require(false, d.label() + " delta_#: " + x.what);
  }
  out.detail << iso << " isomorphism checks on radius-3 generic balls (A1, A2, C2, G2); " << sharp
             << " delta_# closure and radical checks with l <= 6 (A1, A2, C2)";
}

void integrality(Outcome& out) {
  int n = 0;
  for (const auto& [f, rank, bound] : kMacCases) {
    const RootDatum d = RootDatum::build(f, rank);
    for (const auto& b : points_up_to(d, bound)) {
      ++n;
      out.require(check_integrality(d, b).ok(), d.label() + " integrality at " + point_str(d, b));
    }
  }
  out.detail << n << " points, cleared e_b, hat e_b and p_b are Laurent in q, t";
}

void degeneration(Outcome& out) {
  int jets = 0, rels = 0;
  for (const auto& [f, rank] : {std::pair{'A', 1}, {'A', 2}, {'C', 2}}) {
    const RootDatum d = RootDatum::build(f, rank);
    const DegenerateReport lim = check_degeneration(d, 3, kappa_formal());
    const DegenerateReport rel = check_degenerate_relations(d, 3, kappa_formal());
    jets += lim.checks;
    rels += rel.checks;
    for (const auto& x : lim.failures) out.require(false, d.label() + " " + x.relation + " at " + point_str(d, x.witness));
    for (const auto& x : rel.failures) out.require(false, d.label() + " " + x.relation + " at " + point_str(d, x.witness));
  }
  out.detail << jets << " jet checks (order 0 is identity, order 1 is the Dunkl operator) and " << rels
             << " commutativity and cross checks over Q(kappa), degree <= 3";
}

void induced(Outcome& out) {
  const RootDatum a1 = RootDatum::build('A', 1);
  const Classification rho = classify(a1, character_t_minus_rho(a1));
  out.require(!rho.irreducible && !rho.cospherical, "A1 t^-rho flags");
  out.require(rho.witnesses == std::vector<Witness>{{0, false, 0, -1}}, "A1 t^-rho witness (alpha, 0)");
  int generic = 0, steps = 0, zeros = 0;
  for (const auto& [f, rank] : {std::pair{'A', 1}, {'A', 2}, {'C', 2}, {'G', 2}}) {
    const RootDatum d = RootDatum::build(f, rank);
    const Classification gen = classify(d, character_generic(d));
    ++generic;
    out.require(gen.irreducible && gen.cospherical && gen.spherical_dual && gen.induced_irreducible &&
                    gen.witnesses.empty(),
                d.label() + " generic character");
    // The one-step multiplier vanishes exactly when x_{a_j}(u(xi)) = t_j^{-1}.
    for (const Character& xi : {character_t_minus_rho(d), character_generic(d)})
      for (const auto& layer : ball_by_length(d, 3))
        for (const auto& u : layer)
          for (int j = 0; j <= d.rank(); ++j) {
            const Scalar th = t_half(d, j);
            const bool special = x_simple_at(d, j, u, xi) == (th * th).inverse();
            const TransportResult r = transport(d, {j}, u, xi);
            ++steps;
            zeros += r.multiplier.is_zero();
            out.require(r.multiplier.is_zero() == special, d.label() + " transport multiplier at s" + std::to_string(j));
          }
  }
  out.detail << "A1 t^-rho: reducible, not cospherical, witness (alpha, 0); " << generic
             << " generic characters all-true; " << steps << " transport steps, " << zeros
             << " zero multipliers, each at x = t^-1";
}

void symmetric(Outcome& out) {
  int n = 0;
  for (int rank : {1, 2}) {
    const RootDatum d = RootDatum::build('A', rank);
    for (const auto& b : points_up_to(d, 6)) {
      if (d.dominant(b) != b) continue;
      ++n;
      const std::string at = d.label() + " " + point_str(d, b);
      const LaurentPoly p = symmetrize(d, b);
      for (int i = 1; i <= d.rank(); ++i) {
        out.require(apply_group(d, ext_simple(d, i), p, Level::Zero) == p, at + " W-invariance");
        out.require(apply_T(d, i, p, Level::Zero) == p * t_half(d, i), at + " T_i eigenvalue");
      }
      const Coweight bo = -d.longest().apply(b);
      for (int i = 1; i <= d.rank(); ++i) {
        LaurentPoly lf;
        Scalar value;
        for (const auto& c : orbit(d, d.fundamental(i))) {
          lf += apply_Y(d, c, p);
          value += q_pow(d, d.pair(c, bo)) * t_power(true, d.pair_rho(c, true));
        }
        out.require(lf == p * value, at + " L_f eigenvalue");
      }
    }
  }
  out.detail << n << " dominant points: W-invariant, T_i p = t^{1/2} p, L_f p = f(q^{b} t^rho) p";
}

struct Criterion {
  int id;
  const char* name;
  std::function<void(Outcome&)> run;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> all{
      {1, "relation suite", relations},        {2, "chain-oracle equivalence", chain_oracle},
      {3, "evaluation formula", evaluation},   {4, "norm/Jackson", jackson},
      {5, "discrete structure", discrete},     {6, "integrality", integrality},
      {7, "degeneration bridge", degeneration}, {8, "induced-module checkers", induced},
      {9, "symmetric sector", symmetric},
  };
  int only = 0;
  if (argc > 2) {
    std::cerr << "usage: " << argv[0] << " [cN]\n";
    return 2;
  }
  if (argc == 2) {
    std::string a = argv[1];
    if (!a.empty() && a[0] == 'c') a.erase(0, 1);
    try {
      only = std::stoi(a);
    } catch (const std::exception&) {
      only = -1;
    }
    if (only < 1 || only > static_cast<int>(all.size())) {
      std::cerr << "unknown criterion '" << argv[1] << "'\n";
      return 2;
    }
  }
  bool all_pass = true;
  for (const auto& c : all) {
    if (only && c.id != only) continue;
    Outcome out;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.run(out);
    } catch (const std::exception& e) {
      out.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s c%d %s (%.1fs): %s\n", out.pass ? "PASS" : "FAIL", c.id, c.name, secs, out.detail.str().c_str());
    all_pass &= out.pass;
  }
  return all_pass ? 0 : 1;
}
