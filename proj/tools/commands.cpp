#include "commands.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"

#include "daha/degenerate.hpp"
#include "daha/indmod.hpp"

namespace daha::cli {

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Config {
  std::string type = "A";
  int rank = 1;
  std::string out_path;
  bool dump_datum = false;
  std::string weight = "0", a = "0", b = "0";
  int degree = 3;
  int maxlen = 5;
  double q0 = 0.25;
  double k_long = -1.37;
  double k_short = 0;
  bool k_short_set = false;
  int truncate = 40;
  double tol = 1e-6;
  std::string suite;
  bool xi_rho = false, xi_generic = false;
  std::string xi;
  int primitive = 0;
  std::string check = "relations";
  std::string kappa = "formal", kappa_short;
};

RootDatum datum_of(const Config& c) {
  if (c.type.size() != 1) throw UsageError("--type must be one letter");
  try {
    return RootDatum::build(c.type[0], c.rank);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

Rational parse_rational(const std::string& s) {
  try {
    Rational r(s, 10);
    r.canonicalize();
    return r;
  } catch (const std::invalid_argument&) {
    throw UsageError("not a rational number: '" + s + "'");
  }
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) parts.push_back(item);
  return parts;
}

Coweight parse_weight(const RootDatum& d, const std::string& s) {
  const auto parts = split(s, ',');
  if (static_cast<int>(parts.size()) != d.rank())
    throw UsageError("weight '" + s + "' needs " + std::to_string(d.rank()) + " comma-separated integers");
  Coweight b;
  for (int i = 0; i < d.rank(); ++i) {
    try {
      std::size_t pos = 0;
      b[i] = std::stoi(parts[i], &pos);
      if (pos != parts[i].size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw UsageError("weight entry '" + parts[i] + "' is not an integer");
    }
  }
  return b;
}

json weight_json(const RootDatum& d, const Coweight& b) {
  json a = json::array();
  for (int i = 0; i < d.rank(); ++i) a.push_back(b[i]);
  return a;
}

json rational_json(const Rational& r) { return r.get_str(); }

json poly_json(const RootDatum& d, const LaurentPoly& p) {
  json terms = json::array();
  for (const auto& [b, c] : p.terms()) terms.push_back({{"exp", weight_json(d, b)}, {"coeff", to_string(c, d.two_m())}});
  return terms;
}

KParams kparams(const Config& c) { return {c.k_long, c.k_short_set ? c.k_short : c.k_long}; }

std::string complex_str(std::complex<double> z) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g%+.15gi", z.real(), z.imag());
  return buf;
}

// ---- datum

json datum_json(const RootDatum& d) {
  json j;
  j["family"] = std::string(1, d.family());
  j["rank"] = d.rank();
  j["two_m"] = d.two_m();
  json roots = json::array();
  for (int idx = 0; idx < d.num_positive(); ++idx) {
    const RootInfo& r = d.root(idx);
    json coords = json::array();
    for (int i = 0; i < d.rank(); ++i) coords.push_back(r.coords[i]);
    roots.push_back({{"simple_coords", coords},
                     {"coroot", weight_json(d, r.coroot)},
                     {"norm", rational_json(r.nu)},
                     {"long", r.is_long},
                     {"height", r.height}});
  }
  j["positive_roots"] = roots;
  j["theta"] = d.theta();
  auto matrix = [](const std::vector<std::vector<Rational>>& m) {
    json a = json::array();
    for (const auto& row : m) {
      json r = json::array();
      for (const auto& x : row) r.push_back(rational_json(x));
      a.push_back(r);
    }
    return a;
  };
  j["root_gram"] = matrix(d.root_gram_matrix());
  j["coweight_gram"] = matrix(d.coweight_gram_matrix());
  json cartan = json::array();
  for (const auto& row : d.cartan_matrix()) {
    json r = json::array();
    for (int x : row) r.push_back(std::to_string(x));
    cartan.push_back(r);
  }
  j["cartan"] = cartan;
  json mins = json::array();
  for (const auto& e : d.minuscule()) mins.push_back({{"r", e.r}, {"star", e.star}, {"omega_word", e.omega_word}});
  j["minuscule"] = mins;
  return j;
}

// ---- poly

json poly_record(const RootDatum& d, const Coweight& b) {
  const MacRecord rec = e_from_hat(d, b);
  json j;
  j["type"] = std::string(1, d.family());
  j["rank"] = d.rank();
  j["weight"] = weight_json(d, b);
  j["terms"] = poly_json(d, rec.e);
  j["hat_terms"] = poly_json(d, rec.e_hat);
  j["factor"] = to_string(rec.factor, d.two_m());
  json eig = json::object();
  for (const auto& [i, v] : rec.eigenvalues) eig[std::to_string(i)] = to_string(v, d.two_m());
  j["eigenvalues"] = eig;
  j["evaluation"] = to_string(evaluation_closed(d, b), d.two_m());
  j["norm"] = to_string(norm_closed(d, b), d.two_m());
  return j;
}

// ---- verify

struct Suite {
  json groups = json::array();
  json failures = json::array();
  json notes = json::array();
  bool pass = true;

  void group(const std::string& name, int checks, int failed) {
    groups.push_back({{"name", name}, {"checks", checks}, {"failures", failed}});
    if (failed > 0) pass = false;
  }
  void failure(const std::string& check, const json& where) { failures.push_back({{"check", check}, {"where", where}}); }
};

std::vector<Coweight> points_up_to(const RootDatum& d, int max_len) {
  std::vector<Coweight> out;
  for (const auto& layer : ball_by_length(d, max_len))
    for (const auto& x : layer)
      if (is_pi_form(d, x)) out.push_back(x.b);
  return out;
}

json word_json(const RootDatum& d, const ExtWeyl& w) { return word_tokens(reduced_word(d, w)); }

void suite_relations(const RootDatum& d, const Config& c, Suite& s) {
  const RelationReport rep = verify_relations(d, c.degree);
  s.group("DAHA relations on monomials (quadratic, braid, pi conjugation, cross relations)", rep.checks,
          static_cast<int>(rep.failures.size()));
  for (const auto& f : rep.failures)
    s.failure(f.relation, {{"level", static_cast<int>(f.level)}, {"monomial", weight_json(d, f.witness)}});
  const RelationReport shift = verify_level_shift(d, c.degree);
  s.group("level 1 equals level 0 twisted by tau", shift.checks, static_cast<int>(shift.failures.size()));
  for (const auto& f : shift.failures) s.failure(f.relation, {{"monomial", weight_json(d, f.witness)}});
}

void suite_macdonald(const RootDatum& d, const Config& c, Suite& s) {
  int n = 0, chain_bad = 0, eval_bad = 0, int_bad = 0;
  for (const auto& b : points_up_to(d, c.maxlen)) {
    ++n;
    if (e_from_hat(d, b).e != oracle_e(d, b)) {
      ++chain_bad;
      s.failure("intertwiner chain equals Y-eigenvector oracle", weight_json(d, b));
    }
    if (!check_evaluation(d, b)) {
      ++eval_bad;
      s.failure("evaluation formula", weight_json(d, b));
    }
    if (!check_integrality(d, b).ok()) {
      ++int_bad;
      s.failure("integrality of cleared polynomials", weight_json(d, b));
    }
  }
  s.group("intertwiner chain equals Y-eigenvector oracle", n, chain_bad);
  s.group("evaluation formula", n, eval_bad);
  s.group("integrality of cleared polynomials", n, int_bad);
}

void suite_discrete(const RootDatum& d, const Config& c, Suite& s) {
  const Character gen = character_generic(d);
  std::vector<ExtWeyl> ball;
  for (const auto& layer : ball_by_length(d, std::min(c.maxlen, 3))) ball.insert(ball.end(), layer.begin(), layer.end());
  const CheckReport iso = iso_check(d, gen, ball);
  s.group("functional and delta representations are isomorphic (generic character)", iso.checks,
          static_cast<int>(iso.failures.size()));
  for (const auto& f : iso.failures) s.failure(f.what, word_json(d, f.where));
  int tele_bad = 0;
  for (const auto& w : ball)
    if (mu1(d, w, gen) != mu1_telescoped(d, w, gen)) {
      ++tele_bad;
      s.failure("mu_1 product equals telescoped product", word_json(d, w));
    }
  s.group("mu_1 product equals telescoped product", static_cast<int>(ball.size()), tele_bad);
  const CheckReport sharp = delta_sharp_check(d, c.maxlen);
  s.group("delta_# closure and support of mu_1 at t^{-rho}", sharp.checks, static_cast<int>(sharp.failures.size()));
  for (const auto& f : sharp.failures) s.failure(f.what, word_json(d, f.where));
}

void suite_jackson(const RootDatum& d, const Config& c, Suite& s) {
  const auto pts = points_up_to(d, c.maxlen);
  int checked = 0, bad = 0;
  for (const auto& a : pts)
    for (const auto& b : pts) {
      const ConvergenceCondition cond = jackson_condition(d, kparams(c), a, b);
      if (!cond.ok) {
        s.notes.push_back({{"refused", {weight_json(d, a), weight_json(d, b)}}, {"p", cond.p}});
        continue;
      }
      ++checked;
      const JacksonReport rep = jackson_check(d, a, b, c.q0, kparams(c), c.truncate);
      if (rep.error >= c.tol) {
        ++bad;
        s.failure("Jackson ratio equals the norm formula",
                  {{"a", weight_json(d, a)}, {"b", weight_json(d, b)}, {"error", rep.error}});
      }
    }
  s.group("Jackson ratio equals the norm formula (pairs meeting the convergence condition)", checked, bad);
}

void suite_degenerate(const RootDatum& d, const Config& c, Suite& s) {
  const KappaParams k = kappa_formal();
  const DegenerateReport rel = check_degenerate_relations(d, c.degree, k);
  s.group("degenerate relations and Dunkl commutativity", rel.checks, static_cast<int>(rel.failures.size()));
  for (const auto& f : rel.failures) s.failure(f.relation, weight_json(d, f.witness));
  const DegenerateReport lim = check_degeneration(d, c.degree, k);
  s.group("first-order jet of Y equals the Dunkl operator", lim.checks, static_cast<int>(lim.failures.size()));
  for (const auto& f : lim.failures) s.failure(f.relation, weight_json(d, f.witness));
}

// ---- classify

Character parse_character(const RootDatum& d, const std::string& s) {
  const auto nodes = split(s, ';');
  if (static_cast<int>(nodes.size()) != d.rank())
    throw UsageError("--xi needs " + std::to_string(d.rank()) + " ';'-separated entries");
  std::vector<QTExponents> exps;
  for (const auto& node : nodes) {
    QTExponents e{0, 0, 0};
    for (const auto& kv : split(node, ',')) {
      const auto parts = split(kv, ':');
      if (parts.size() != 2) throw UsageError("--xi entry '" + kv + "' is not key:value");
      const Rational v = parse_rational(parts[1]);
      if (parts[0] == "q")
        e.q_exp = v;
      else if (parts[0] == "t_l")
        e.t_long = v;
      else if (parts[0] == "t_s")
        e.t_short = v;
      else
        throw UsageError("--xi key '" + parts[0] + "' is not q, t_l or t_s");
    }
    exps.push_back(e);
  }
  try {
    return character_from_exponents(d, exps);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

json classification_json(const RootDatum& d, const Classification& cl) {
  json w = json::array();
  for (const auto& x : cl.witnesses) {
    const RootInfo& r = d.root(x.root);
    json coords = json::array();
    for (int i = 0; i < d.rank(); ++i) coords.push_back(x.negative ? -r.coords[i] : r.coords[i]);
    w.push_back({{"root", coords}, {"j", x.j}, {"value", x.sign == 0 ? "1" : (x.sign > 0 ? "t" : "t^-1")}});
  }
  return {{"flags",
           {{"irreducible", cl.irreducible},
            {"cospherical", cl.cospherical},
            {"spherical_dual", cl.spherical_dual},
            {"induced_irreducible", cl.induced_irreducible}}},
          {"witnesses", w}};
}

// ---- output

void emit(const Config& c, const std::string& text, std::ostream& out) {
  if (c.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(c.out_path);
  if (!f) throw UsageError("cannot write " + c.out_path);
  f << text;
}

std::string csv_header() { return "shell_length,shell_sum,cumulative,ratio,tail_estimate\n"; }

void add_common(CLI::App* sub, Config& c) {
  sub->add_option("--type", c.type, "Family letter A..G")->capture_default_str();
  sub->add_option("--rank", c.rank, "Rank")->capture_default_str();
  sub->add_option("--out", c.out_path, "Write output to this file instead of stdout");
  sub->add_flag("--dump-datum", c.dump_datum, "Print the root datum JSON and exit");
}

void add_numeric(CLI::App* sub, Config& c) {
  sub->add_option("--q", c.q0, "Numeric q0 (|q0| != 1)")->capture_default_str();
  sub->add_option("--k", c.k_long, "k for long roots (t = q^k)")->capture_default_str();
  sub->add_option("--k-short", c.k_short, "k for short roots (defaults to --k)")
      ->each([&c](const std::string&) { c.k_short_set = true; });
  sub->add_option("--truncate", c.truncate, "Truncation length L")->capture_default_str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config c;
  CLI::App app{"Double affine Hecke algebra computations"};
  app.require_subcommand(1, 1);

  auto* datum = app.add_subcommand("datum", "Dump the root datum as JSON");
  add_common(datum, c);

  auto* poly = app.add_subcommand("poly", "Nonsymmetric Macdonald polynomial record as JSON");
  add_common(poly, c);
  poly->add_option("--weight", c.weight, "Lattice point, comma-separated b-coordinates")->capture_default_str();

  auto* verify = app.add_subcommand("verify", "Run a check suite; exit 0 iff every check passes");
  add_common(verify, c);
  add_numeric(verify, c);
  verify->add_option("suite", c.suite, "relations | macdonald | discrete | jackson | degenerate")
      ->required()
      ->check(CLI::IsMember({"relations", "macdonald", "discrete", "jackson", "degenerate"}));
  verify->add_option("--degree", c.degree, "Monomial degree bound")->capture_default_str();
  verify->add_option("--maxlen", c.maxlen, "Length bound for lattice points and balls")->capture_default_str();
  verify->add_option("--tol", c.tol, "Numeric tolerance")->capture_default_str();

  auto* jackson = app.add_subcommand("jackson", "Truncated Jackson sum trace as CSV");
  add_common(jackson, c);
  add_numeric(jackson, c);
  jackson->add_option("--a", c.a, "First lattice point")->capture_default_str();
  jackson->add_option("--b", c.b, "Second lattice point")->capture_default_str();

  auto* aomoto = app.add_subcommand("aomoto", "Symmetric lattice sum trace as CSV");
  add_common(aomoto, c);
  add_numeric(aomoto, c);
  aomoto->add_option("--a", c.a, "Dominant lattice point a_+")->capture_default_str();
  aomoto->add_option("--b", c.b, "Dominant lattice point b_+")->capture_default_str();

  auto* classify_cmd = app.add_subcommand("classify", "Induced-module conditions for a monomial character");
  add_common(classify_cmd, c);
  auto* rho_flag = classify_cmd->add_flag("--xi-rho,--xi-rho-inverse", c.xi_rho, "Use xi = t^{-rho}");
  auto* gen_flag = classify_cmd->add_flag("--generic", c.xi_generic, "Use a generic symbolic character");
  auto* xi_opt = classify_cmd->add_option("--xi", c.xi, "Per node 'q:a,t_l:b,t_s:c', nodes separated by ';'");
  rho_flag->excludes(gen_flag)->excludes(xi_opt);
  gen_flag->excludes(xi_opt);
  classify_cmd->add_option("--primitive", c.primitive, "Also search a primitive element in this length ball");

  auto* degen = app.add_subcommand("degenerate", "Degenerate DAHA checks as JSON");
  add_common(degen, c);
  degen->add_option("--check", c.check, "relations | limit")
      ->check(CLI::IsMember({"relations", "limit"}))
      ->capture_default_str();
  degen->add_option("--degree", c.degree, "Monomial degree bound")->capture_default_str();
  degen->add_option("--kappa", c.kappa, "'formal' or a rational kappa for long roots")->capture_default_str();
  degen->add_option("--kappa-short", c.kappa_short, "Rational kappa for short roots (defaults to --kappa)");

  std::vector<const char*> argv{"daha"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (const char* env = std::getenv(kWorkersEnv)) {
    try {
      set_worker_limit(std::stoi(env));
    } catch (const std::exception&) {
      err << kWorkersEnv << " must be an integer\n";
      return kExitUsage;
    }
  }

  try {
    const RootDatum d = datum_of(c);
    if (*datum || c.dump_datum) {
      emit(c, datum_json(d).dump(2) + "\n", out);
      return kExitOk;
    }
    if (*poly) {
      emit(c, poly_record(d, parse_weight(d, c.weight)).dump(2) + "\n", out);
      return kExitOk;
    }
    if (*verify) {
      Suite s;
      if (c.suite == "relations") suite_relations(d, c, s);
      if (c.suite == "macdonald") suite_macdonald(d, c, s);
      if (c.suite == "discrete") suite_discrete(d, c, s);
      if (c.suite == "jackson") suite_jackson(d, c, s);
      if (c.suite == "degenerate") suite_degenerate(d, c, s);
      const json report = {{"suite", c.suite}, {"datum", d.label()}, {"groups", s.groups},
                           {"failures", s.failures}, {"notes", s.notes}, {"pass", s.pass}};
      emit(c, report.dump(2) + "\n", out);
      return s.pass ? kExitOk : kExitCheckFailed;
    }
    if (*jackson) {
      const JacksonReport rep =
          jackson_check(d, parse_weight(d, c.a), parse_weight(d, c.b), c.q0, kparams(c), c.truncate);
      std::string text = csv_header();
      for (const auto& r : rep.shells)
        text += std::to_string(r.length) + "," + complex_str(r.shell_sum) + "," + complex_str(r.cumulative) + "," +
                complex_str(r.ratio) + "," + complex_str(r.tail_estimate) + "\n";
      emit(c, text, out);
      return kExitOk;
    }
    if (*aomoto) {
      const Coweight a = parse_weight(d, c.a), b = parse_weight(d, c.b);
      if (d.dominant(a) != a || d.dominant(b) != b) throw UsageError("aomoto needs dominant --a and --b");
      const AomotoReport rep = aomoto_estimate(d, c.q0, kparams(c), c.truncate, a, b);
      std::string text = csv_header();
      std::complex<double> prev_pair = 0, prev_a = 0;
      for (const auto& r : rep.rows) {
        text += std::to_string(r.length) + "," + complex_str(r.pairing - prev_pair) + "," + complex_str(r.pairing) +
                "," + complex_str(r.pairing / r.a_xi) + "," + complex_str(std::abs(r.a_xi - prev_a)) + "\n";
        prev_pair = r.pairing;
        prev_a = r.a_xi;
      }
      emit(c, text, out);
      return kExitOk;
    }
    if (*classify_cmd) {
      Character xi;
      if (c.xi_rho)
        xi = character_t_minus_rho(d);
      else if (c.xi_generic)
        xi = character_generic(d);
      else if (!c.xi.empty())
        xi = parse_character(d, c.xi);
      else
        throw UsageError("classify needs --xi-rho, --generic or --xi");
      json j = classification_json(d, classify(d, xi));
      if (c.primitive > 0) {
        const PrimitiveReport p = find_primitive(d, xi, c.primitive);
        j["primitive"] = {{"found", p.found},
                          {"u0", p.found ? word_json(d, p.u0) : json()},
                          {"simple_stabilizer", p.simple_stabilizer},
                          {"bound", p.bound}};
      }
      emit(c, j.dump(2) + "\n", out);
      return kExitOk;
    }
    if (*degen) {
      KappaParams k = kappa_formal();
      if (c.kappa != "formal") {
        const Rational kl = parse_rational(c.kappa);
        k = kappa_rational(kl, c.kappa_short.empty() ? kl : parse_rational(c.kappa_short));
      }
      const DegenerateReport rep =
          c.check == "relations" ? check_degenerate_relations(d, c.degree, k) : check_degeneration(d, c.degree, k);
      json fails = json::array();
      for (const auto& f : rep.failures) fails.push_back({{"check", f.relation}, {"monomial", weight_json(d, f.witness)}});
      const json report = {{"check", c.check}, {"datum", d.label()}, {"degree", c.degree},
                           {"checks", rep.checks}, {"failures", fails}, {"pass", rep.ok()}};
      emit(c, report.dump(2) + "\n", out);
      return rep.ok() ? kExitOk : kExitCheckFailed;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    err << "refused: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace daha::cli
