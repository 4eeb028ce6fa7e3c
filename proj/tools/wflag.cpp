// wflag: weighted homogeneous varieties from Lie data.
//
// Subcommands: catalog, hilbert, construct, search, groebner, verify.
// Every subcommand accepts --json for a machine-readable report; reports are
// byte-deterministic for fixed inputs (independent of --jobs).
// Exit codes: 0 success, 1 invalid input or usage, 2 internal failure.

#include <algorithm>
#include <iostream>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <wflag/catalog.hpp>
#include <wflag/construct.hpp>
#include <wflag/errors.hpp>
#include <wflag/ideals.hpp>
#include <wflag/invariants.hpp>
#include <wflag/lattice.hpp>
#include <wflag/series.hpp>

using json = nlohmann::json;
using namespace wflag;

namespace {

// ---------------------------------------------------------------- reporting

json poly_json(const LaurentPoly& p) {
  json j;
  if (p.is_zero()) {
    j["low"] = 0;
    j["coeffs"] = json::array({"0"});
    return j;
  }
  long lo = p.low_degree();
  long hi = p.high_degree();
  json coeffs = json::array();
  for (long e = lo; e <= hi; ++e) coeffs.push_back(rat_to_string(p.coeff(e)));
  j["low"] = lo;
  j["coeffs"] = std::move(coeffs);
  return j;
}

json series_json(const HilbertSeries& hs) {
  json j;
  j["numerator"] = poly_json(hs.numerator);
  j["denominator_exponents"] = hs.denom_exponents;
  return j;
}

std::string weights_summary(const std::vector<long>& ws) {
  std::map<long, long> mult;
  for (long w : ws) mult[w] += 1;
  std::ostringstream out;
  bool first = true;
  for (const auto& [w, m] : mult) {
    if (!first) out << ", ";
    first = false;
    out << w << "^" << m;
  }
  return out.str();
}

std::string join_longs(const std::vector<long>& v) {
  std::ostringstream out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out << ",";
    out << v[i];
  }
  return out.str();
}

void emit(const json& j, bool as_json, const std::string& text) {
  if (as_json) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << text;
  }
}

// ------------------------------------------------------------- subcommands

int run_catalog(const std::string& id, bool as_json) {
  std::vector<CatalogEntry> rows;
  if (id.empty()) {
    rows = catalog();
  } else {
    rows.push_back(catalog_entry(id));
  }
  auto pad = [](const std::string& s, std::size_t width) {
    return s.size() >= width ? s + " " : s + std::string(width - s.size(), ' ');
  };
  json j;
  j["command"] = "catalog";
  j["entries"] = json::array();
  std::ostringstream text;
  text << pad("id", 9) << pad("type", 6) << pad("dim", 5) << pad("ambient", 9)
       << pad("codim", 7) << pad("quadrics", 10) << "description\n";
  for (const CatalogEntry& e : rows) {
    json row;
    row["id"] = e.id;
    row["description"] = e.description;
    row["lie_type"] = lie_type_to_string(e.lie_type);
    row["rank"] = e.rank;
    json lambda = json::array();
    for (const Rat& c : e.lambda) lambda.push_back(rat_to_string(c));
    row["lambda"] = std::move(lambda);
    row["dim"] = e.dim;
    row["ambient_dim"] = e.ambient_dim;
    row["codim"] = e.codim;
    row["num_quadrics"] = e.num_quadrics;
    j["entries"].push_back(std::move(row));

    std::string type = lie_type_to_string(e.lie_type);
    if (type.size() == 1) type += std::to_string(e.rank);
    text << pad(e.id, 9) << pad(type, 6) << pad(std::to_string(e.dim), 5)
         << pad("P" + std::to_string(e.ambient_dim), 9) << pad(std::to_string(e.codim), 7)
         << pad(std::to_string(e.num_quadrics), 10) << e.description << "\n";
  }
  emit(j, as_json, text.str());
  return 0;
}

int run_hilbert(const std::string& id, const Coweight& mu, long u, long order, bool as_json) {
  const CatalogEntry& entry = catalog_entry(id);
  WeightedVariety w = make_weighted(entry, mu, u);
  SymmetryReport sym = numerator_symmetry_check(w.series);
  std::vector<Int> h = expand(w.series, order);

  json j;
  j["command"] = "hilbert";
  j["entry"] = entry.id;
  j["mu"] = mu;
  j["u"] = u;
  j["dim"] = w.dim;
  j["weights"] = w.weights;
  j["series"] = series_json(w.series);
  j["canonical_degree"] = w.canonical_degree;
  j["adjunction"] = sym.adjunction;
  j["palindromic"] = w.palindromic;
  json exp = json::array();
  for (const Int& x : h) exp.push_back(x.get_str());
  j["expansion"] = std::move(exp);

  std::ostringstream text;
  text << entry.id << "  mu=(" << join_longs(mu) << ")  u=" << u << "\n"
       << "dimension        " << w.dim << "\n"
       << "ambient weights  {" << weights_summary(w.weights) << "}\n"
       << "numerator        " << w.series.numerator.to_string() << "\n"
       << "canonical degree " << w.canonical_degree << "\n"
       << "adjunction       " << sym.adjunction << "\n"
       << "palindromic      " << (w.palindromic ? "yes" : "no") << "\n"
       << "h(0.." << order << ")        ";
  for (std::size_t i = 0; i < h.size(); ++i) text << (i ? " " : "") << h[i].get_str();
  text << "\n";
  emit(j, as_json, text.str());
  return 0;
}

struct Op {
  std::string kind;  // "cone" or "section"
  long value = 0;
};

Op parse_op(const std::string& s) {
  Op op;
  auto colon = s.find(':');
  op.kind = s.substr(0, colon);
  if (op.kind == "cone") {
    op.value = 1;
  } else if (op.kind != "section") {
    throw validation_error("unknown op '" + s + "'; expected cone[:w] or section:d");
  }
  if (colon != std::string::npos) {
    std::string rest = s.substr(colon + 1);
    try {
      std::size_t used = 0;
      op.value = std::stol(rest, &used);
      if (used != rest.size()) throw std::invalid_argument(rest);
    } catch (const std::exception&) {
      throw validation_error("bad numeric argument in op '" + s + "'");
    }
  } else if (op.kind == "section") {
    throw validation_error("section op needs a degree, e.g. section:3");
  }
  return op;
}

json fit_json(const QuasiPolyFit& fit) {
  json f;
  f["period"] = fit.period;
  f["start"] = fit.start;
  f["cubic"] = rat_to_string(fit.cubic);
  f["d3"] = rat_to_string(fit.d3);
  f["linear_average"] = rat_to_string(fit.linear_average);
  f["dc2_estimate"] = rat_to_string(fit.dc2_estimate);
  return f;
}

int run_construct(const std::string& id, const Coweight& mu, long u,
                  const std::vector<std::string>& op_specs, bool allow_general, bool as_json) {
  const CatalogEntry& entry = catalog_entry(id);
  Polarized p = polarize(make_weighted(entry, mu, u));
  json ops = json::array();
  for (const std::string& spec : op_specs) {
    Op op = parse_op(spec);
    json jop;
    jop["op"] = op.kind;
    if (op.kind == "cone") {
      p = cone(p, op.value);
      jop["weight"] = op.value;
    } else {
      bool quasilinear =
          std::find(p.weights.begin(), p.weights.end(), op.value) != p.weights.end();
      p = section(p, op.value, allow_general);
      jop["degree"] = op.value;
      jop["quasilinear"] = quasilinear;
    }
    ops.push_back(std::move(jop));
  }

  json j;
  j["command"] = "construct";
  j["entry"] = entry.id;
  j["mu"] = mu;
  j["u"] = u;
  j["ops"] = std::move(ops);
  j["dim"] = p.dim;
  j["weights"] = p.weights;
  j["series"] = series_json(p.series);
  j["canonical_degree"] = p.canonical_degree;
  j["palindromic"] = p.palindromic;
  j["wellformed"] = wellformed_wps(p.weights);

  std::ostringstream text;
  text << entry.id << "  mu=(" << join_longs(mu) << ")  u=" << u << "  ops=" << op_specs.size()
       << "\n"
       << "dimension        " << p.dim << "\n"
       << "ambient weights  {" << weights_summary(p.weights) << "}\n"
       << "numerator        " << p.series.numerator.to_string() << "\n"
       << "canonical degree " << p.canonical_degree << "\n"
       << "well formed      " << (wellformed_wps(p.weights) ? "yes" : "no") << "\n";

  if (p.dim == 3) {
    Rat d3 = degree(p.series, 3);
    j["degree"] = rat_to_string(d3);
    text << "degree D^3       " << rat_to_string(d3) << "\n";
    QuasiPolyFit fit = quasipoly_fit(p.series);
    j["fit"] = fit_json(fit);
    text << "fit              period=" << fit.period << " cubic=" << rat_to_string(fit.cubic)
         << " dc2_estimate=" << rat_to_string(fit.dc2_estimate) << " (informational)\n";
    if (p.canonical_degree == -1) {
      Rat g = fano_genus(p.series);
      j["fano_genus"] = rat_to_string(g);
      text << "fano genus       " << rat_to_string(g) << "\n";
    }
  }
  emit(j, as_json, text.str());
  return 0;
}

json candidate_json(const Candidate& c) {
  json j;
  j["mu"] = c.mu;
  j["u"] = c.u;
  j["cones"] = c.cones;
  j["sections"] = c.sections;
  j["ambient"] = c.ambient;
  j["canonical_degree"] = c.canonical_degree;
  j["note"] = c.note;
  return j;
}

int run_search(const std::string& id, const std::string& target, long mu_bound, long u_bound,
               int max_sections, int jobs, bool as_json) {
  const CatalogEntry& entry = catalog_entry(id);
  SearchParams params;
  params.target = (target == "CY3") ? SearchTarget::CY3 : SearchTarget::Fano3;
  params.mu_bound = mu_bound;
  params.u_bound = u_bound;
  params.max_sections = max_sections;
  params.jobs = jobs;
  std::vector<Candidate> found = search(entry, params);

  json j;
  j["command"] = "search";
  j["entry"] = entry.id;
  j["target"] = target;
  j["mu_bound"] = mu_bound;
  j["u_bound"] = u_bound;
  j["max_sections"] = max_sections;
  j["count"] = found.size();
  j["candidates"] = json::array();
  for (const Candidate& c : found) j["candidates"].push_back(candidate_json(c));

  std::ostringstream text;
  text << entry.id << "  target=" << target << "  mu<=" << mu_bound << "  u<=" << u_bound
       << "  sections<=" << max_sections << "\n"
       << found.size() << " candidates\n";
  for (const Candidate& c : found) {
    text << "  mu=(" << join_longs(c.mu) << ") u=" << c.u << " cones=" << c.cones
         << " sections=[" << join_longs(c.sections) << "]"
         << " ambient={" << weights_summary(c.ambient) << "} K=" << c.canonical_degree << "  ("
         << c.note << ")\n";
  }
  emit(j, as_json, text.str());
  return 0;
}

json gb_poly_json(const Poly& p, const MonomialOrder& order) {
  // Terms from the leading monomial downward.
  std::vector<const Monomial*> ms;
  for (const auto& [m, c] : p) ms.push_back(&m);
  std::sort(ms.begin(), ms.end(),
            [&](const Monomial* a, const Monomial* b) { return order.less(*b, *a); });
  json terms = json::array();
  for (const Monomial* m : ms) {
    json t;
    t["coeff"] = rat_to_string(p.at(*m));
    t["monomial"] = *m;
    terms.push_back(std::move(t));
  }
  return terms;
}

int run_groebner(const std::string& id, const std::string& grading,
                 const std::vector<long>& weights_arg, const std::string& kind, long step_cap,
                 bool print_basis, bool as_json) {
  const IdealData& ideal = defining_ideal(id);
  std::vector<long> weights;
  std::string grading_name;
  if (!weights_arg.empty()) {
    weights = weights_arg;
    grading_name = "custom";
  } else {
    auto it = ideal.gradings.find(grading);
    if (it == ideal.gradings.end()) {
      std::string known;
      for (const auto& entry : ideal.gradings) {
        if (!known.empty()) known += ", ";
        known += entry.first;
      }
      throw validation_error("ideal '" + id + "' has no grading '" + grading +
                             "'; recorded gradings: " + known);
    }
    weights = it->second;
    grading_name = grading;
  }

  std::vector<long> degrees = homogeneous_degrees(ideal, weights);
  OrderKind order_kind = (kind == "lex") ? OrderKind::WLex : OrderKind::WGrevlex;
  MonomialOrder order{weights, order_kind};
  GroebnerStats stats;
  std::vector<Poly> basis = groebner_basis(ideal.generators, order, &stats, step_cap);

  std::vector<Monomial> initial;
  for (const Poly& g : basis) initial.push_back(leading_monomial(g, order));
  HilbertSeries hs = quotient_hilbert_series(ideal.generators, weights, order_kind, step_cap);

  json j;
  j["command"] = "groebner";
  j["ideal"] = ideal.id;
  j["variables"] = ideal.variables;
  j["grading"] = {{"name", grading_name}, {"weights", weights}};
  j["order"] = (order_kind == OrderKind::WLex) ? "wlex" : "wgrevlex";
  j["generator_degrees"] = degrees;
  j["basis_size"] = stats.basis_size;
  j["spairs_processed"] = stats.spairs_processed;
  j["reduction_steps"] = stats.reduction_steps;
  j["quotient"] = series_json(hs);
  if (print_basis) {
    json b = json::array();
    for (const Poly& g : basis) b.push_back(gb_poly_json(g, order));
    j["basis"] = std::move(b);
  }

  std::ostringstream text;
  text << ideal.id << "  grading=" << grading_name << "  order="
       << ((order_kind == OrderKind::WLex) ? "wlex" : "wgrevlex") << "\n"
       << "generators       " << ideal.generators.size() << " (all homogeneous)\n"
       << "basis size       " << stats.basis_size << "\n"
       << "s-pairs          " << stats.spairs_processed << "\n"
       << "reduction steps  " << stats.reduction_steps << "\n"
       << "quotient num.    " << hs.numerator.to_string() << "\n"
       << "denominators     {" << weights_summary(hs.denom_exponents) << "}\n";
  emit(j, as_json, text.str());
  return 0;
}

// ------------------------------------------------------------------ verify

struct VerifyState {
  json checks = json::array();
  json info = json::array();
  int passed = 0;
  int failed = 0;
  std::ostringstream text;

  void check(const std::string& name, bool ok, const std::string& detail = "") {
    json c;
    c["name"] = name;
    c["status"] = ok ? "pass" : "fail";
    if (!detail.empty()) c["detail"] = detail;
    checks.push_back(std::move(c));
    (ok ? passed : failed) += 1;
    text << (ok ? "PASS  " : "FAIL  ") << name;
    if (!detail.empty()) text << "  (" << detail << ")";
    text << "\n";
  }

  void note(const std::string& name, const std::string& value) {
    json n;
    n["name"] = name;
    n["value"] = value;
    info.push_back(std::move(n));
    text << "INFO  " << name << " = " << value << "\n";
  }
};

void verify_examples(VerifyState& vs) {
  struct Case {
    const char* label;
    const char* entry;
    Coweight mu;
    long u;
    bool take_cone;
    std::vector<long> sections;
  };
  const std::vector<Case> cases = {
      {"lgr36 mu=(1,0,0) u=2 sections 3,3,2", "lgr36", {1, 0, 0}, 2, false, {3, 3, 2}},
      {"fl13 mu=(0,0,1,1) u=0 cone + 2,2,3", "fl13", {0, 0, 1, 1}, 0, true, {2, 2, 3}},
      {"fl13 mu=(0,1,1,1) u=-1 cone + 2,2,3", "fl13", {0, 1, 1, 1}, -1, true, {2, 2, 3}},
  };
  for (const Case& c : cases) {
    Polarized p = polarize(make_weighted(catalog_entry(c.entry), c.mu, c.u));
    if (auto formula = canonical_formula(c.entry, c.mu, c.u)) {
      vs.check(std::string(c.label) + ": closed-form canonical degree",
               *formula == p.canonical_degree,
               "formula " + std::to_string(*formula) + ", computed " +
                   std::to_string(p.canonical_degree));
    }
    if (c.take_cone) p = cone(p);
    for (long d : c.sections) p = section(p, d);
    vs.check(std::string(c.label) + ": threefold with trivial canonical class",
             p.dim == 3 && p.canonical_degree == 0);
    vs.check(std::string(c.label) + ": well-formed ambient weights",
             wellformed_wps(p.weights), "{" + weights_summary(p.weights) + "}");
    Rat d3 = degree(p.series, 3);
    QuasiPolyFit fit = quasipoly_fit(p.series);
    vs.check(std::string(c.label) + ": degree agrees between limit and fit", d3 == fit.d3,
             "D^3 = " + rat_to_string(d3));
    vs.check(std::string(c.label) + ": palindromic numerator", p.palindromic);
    vs.note(std::string(c.label) + ": dc2_estimate (orbifold corrections included)",
            rat_to_string(fit.dc2_estimate));
  }

  // Straight linear sections with classical degrees and genera.
  Polarized lgr = polarize(make_weighted(catalog_entry("lgr36"), {0, 0, 0}, 1));
  lgr = section(section(section(lgr, 1), 1), 1);
  Rat dl = degree(lgr.series, 3);
  vs.check("lgr36 triple hyperplane section degree 16 genus 9",
           dl == Rat(16) && fano_genus(lgr.series) == Rat(9),
           "D^3 = " + rat_to_string(dl));
  Polarized fl = polarize(make_weighted(catalog_entry("fl13"), {0, 0, 0, 0}, 1));
  fl = section(section(fl, 1), 1);
  Rat df = degree(fl.series, 3);
  vs.check("fl13 double hyperplane section degree 20 genus 11",
           df == Rat(20) && fano_genus(fl.series) == Rat(11),
           "D^3 = " + rat_to_string(df));
}

void verify_ideals(VerifyState& vs) {
  struct Config {
    const char* ideal;
    const char* grading;
    Coweight mu;
    long u;
  };
  const std::vector<Config> configs = {
      {"lgr36", "straight", {0, 0, 0}, 1},
      {"lgr36", "mu100_u2", {1, 0, 0}, 2},
      {"fl13", "straight", {0, 0, 0, 0}, 1},
      {"fl13", "mu0011_u0", {0, 0, 1, 1}, 0},
      {"fl13", "mu0111_um1", {0, 1, 1, 1}, -1},
  };
  for (const Config& cfg : configs) {
    const IdealData& ideal = defining_ideal(cfg.ideal);
    const std::vector<long>& w = ideal.gradings.at(cfg.grading);
    std::string label = std::string(cfg.ideal) + " @ " + cfg.grading;
    bool homogeneous = true;
    try {
      homogeneous_degrees(ideal, w);
    } catch (const validation_error&) {
      homogeneous = false;
    }
    vs.check(label + ": generators homogeneous", homogeneous);

    HilbertSeries from_ideal = quotient_hilbert_series(ideal.generators, w);
    WeightedVariety from_series = make_weighted(catalog_entry(cfg.ideal), cfg.mu, cfg.u);
    vs.check(label + ": quotient matches the character-theoretic series",
             from_ideal == from_series.series);
  }
  // Order independence on both straight ideals.
  for (const char* id : {"lgr36", "fl13"}) {
    const IdealData& ideal = defining_ideal(id);
    const std::vector<long>& w = ideal.gradings.at("straight");
    HilbertSeries a = quotient_hilbert_series(ideal.generators, w, OrderKind::WGrevlex);
    HilbertSeries b = quotient_hilbert_series(ideal.generators, w, OrderKind::WLex);
    vs.check(std::string(id) + ": quotient independent of the monomial order", a == b);
  }
}

void verify_compact(VerifyState& vs) {
  const CatalogEntry& lgr = catalog_entry("lgr36");
  RootSystem rs_l = build_root_system(lgr.lie_type, lgr.rank);
  WeightSystem nabla_l = weight_system(rs_l, lgr.lambda);
  long points = 0, equal = 0;
  for (long a1 = 0; a1 <= 2; ++a1) {
    for (long a2 = 0; a2 <= a1; ++a2) {
      for (long a3 = 0; a3 <= a2; ++a3) {
        long s = a1 + a2 + a3;
        for (long u = s + 1; u <= s + 3; ++u) {
          Coweight mu{a1, a2, a3};
          HilbertSeries general = hilbert_series_weyl(rs_l, lgr.lambda, mu, u, nabla_l);
          HilbertSeries compact = compact_lgr36(mu, u);
          ++points;
          if (general == compact) ++equal;
        }
      }
    }
  }
  vs.check("lgr36 closed form equals the general formula on the grid", points == equal,
           std::to_string(equal) + "/" + std::to_string(points) + " points");

  const CatalogEntry& fl = catalog_entry("fl13");
  RootSystem rs_f = build_root_system(fl.lie_type, fl.rank);
  WeightSystem nabla_f = weight_system(rs_f, fl.lambda);
  points = equal = 0;
  for (long a1 = 0; a1 <= 2; ++a1) {
    for (long a2 = 0; a2 <= a1; ++a2) {
      for (long a3 = 0; a3 <= a2; ++a3) {
        for (long a4 = 0; a4 <= a3; ++a4) {
          for (long u = 1; u <= 3; ++u) {
            Coweight mu{a1, a2, a3, a4};
            HilbertSeries general = hilbert_series_weyl(rs_f, fl.lambda, mu, u, nabla_f);
            HilbertSeries compact = compact_fl13(mu, u);
            ++points;
            if (general == compact) ++equal;
          }
        }
      }
    }
  }
  vs.check("fl13 closed form equals the general formula on the grid", points == equal,
           std::to_string(equal) + "/" + std::to_string(points) + " points");
}

int run_verify(const std::string& suite, bool as_json) {
  if (suite != "all" && suite != "examples" && suite != "ideals" && suite != "compact") {
    throw validation_error("unknown suite '" + suite +
                           "'; expected examples, ideals, compact or all");
  }
  VerifyState vs;
  if (suite == "all" || suite == "examples") verify_examples(vs);
  if (suite == "all" || suite == "ideals") verify_ideals(vs);
  if (suite == "all" || suite == "compact") verify_compact(vs);

  json j;
  j["command"] = "verify";
  j["suite"] = suite;
  j["checks"] = vs.checks;
  j["info"] = vs.info;
  j["passed"] = vs.passed;
  j["failed"] = vs.failed;

  vs.text << vs.passed << " passed, " << vs.failed << " failed\n";
  emit(j, as_json, vs.text.str());
  return vs.failed == 0 ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weighted homogeneous varieties: series, constructions and checks"};
  app.require_subcommand(1);

  bool as_json = false;
  app.add_flag("--json", as_json, "emit a JSON report on stdout");

  auto* cat = app.add_subcommand("catalog", "list the built-in variety table");
  std::string cat_id;
  cat->add_option("--id", cat_id, "show a single entry");
  cat->add_flag("--json", as_json, "emit a JSON report on stdout");

  auto* hil = app.add_subcommand("hilbert", "Hilbert series of a weighted variety");
  std::string hil_id;
  Coweight hil_mu;
  long hil_u = 1;
  long hil_order = 12;
  hil->add_option("--entry", hil_id, "catalog entry id")->required();
  hil->add_option("--mu", hil_mu, "grading, comma separated")->required()->delimiter(',');
  hil->add_option("--u", hil_u, "grading shift")->required();
  hil->add_option("--order", hil_order, "how many coefficients to expand")
      ->check(CLI::Range(0L, 100000L));
  hil->add_flag("--json", as_json, "emit a JSON report on stdout");

  auto* con = app.add_subcommand("construct", "apply cones and sections");
  std::string con_id;
  Coweight con_mu;
  long con_u = 1;
  std::vector<std::string> con_ops;
  bool con_general = false;
  con->add_option("--entry", con_id, "catalog entry id")->required();
  con->add_option("--mu", con_mu, "grading, comma separated")->required()->delimiter(',');
  con->add_option("--u", con_u, "grading shift")->required();
  con->add_option("--op", con_ops, "operation: cone[:w] or section:d (repeatable, in order)");
  con->add_flag("--allow-general", con_general,
                "permit sections whose degree is not an ambient weight");
  con->add_flag("--json", as_json, "emit a JSON report on stdout");

  auto* sea = app.add_subcommand("search", "enumerate threefold candidates");
  std::string sea_id;
  std::string sea_target = "CY3";
  long sea_mu_bound = 1;
  long sea_u_bound = 3;
  int sea_max_sections = 4;
  int sea_jobs = 1;
  sea->add_option("--entry", sea_id, "catalog entry id")->required();
  sea->add_option("--target", sea_target, "CY3 or Fano3")
      ->check(CLI::IsMember({"CY3", "Fano3"}));
  sea->add_option("--mu-bound", sea_mu_bound, "componentwise bound for mu");
  sea->add_option("--u-bound", sea_u_bound, "largest shift u");
  sea->add_option("--max-sections", sea_max_sections, "cap on the number of sections");
  sea->add_option("--jobs", sea_jobs, "worker threads (output is independent of this)");
  sea->add_flag("--json", as_json, "emit a JSON report on stdout");

  auto* gro = app.add_subcommand("groebner", "Groebner basis of a recorded ideal");
  std::string gro_id;
  std::string gro_grading = "straight";
  std::vector<long> gro_weights;
  std::string gro_kind = "grevlex";
  long gro_cap = 1000000;
  bool gro_basis = false;
  gro->add_option("--ideal", gro_id, "ideal id (lgr36 or fl13)")->required();
  gro->add_option("--grading", gro_grading, "named grading recorded with the ideal");
  gro->add_option("--weights", gro_weights, "explicit variable weights, comma separated")
      ->delimiter(',');
  gro->add_option("--kind", gro_kind, "monomial order tie-break")
      ->check(CLI::IsMember({"grevlex", "lex"}));
  gro->add_option("--step-cap", gro_cap, "reduction step budget")->check(CLI::PositiveNumber);
  gro->add_flag("--print-basis", gro_basis, "include the full basis in the report");
  gro->add_flag("--json", as_json, "emit a JSON report on stdout");

  auto* ver = app.add_subcommand("verify", "cross-check the independent engines");
  std::string ver_suite = "all";
  ver->add_option("--suite", ver_suite, "examples, ideals, compact or all");
  ver->add_flag("--json", as_json, "emit a JSON report on stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (app.got_subcommand(cat)) return run_catalog(cat_id, as_json);
    if (app.got_subcommand(hil)) return run_hilbert(hil_id, hil_mu, hil_u, hil_order, as_json);
    if (app.got_subcommand(con))
      return run_construct(con_id, con_mu, con_u, con_ops, con_general, as_json);
    if (app.got_subcommand(sea))
      return run_search(sea_id, sea_target, sea_mu_bound, sea_u_bound, sea_max_sections,
                        sea_jobs, as_json);
    if (app.got_subcommand(gro))
      return run_groebner(gro_id, gro_grading, gro_weights, gro_kind, gro_cap, gro_basis,
                          as_json);
    if (app.got_subcommand(ver)) return run_verify(ver_suite, as_json);
  } catch (const validation_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const resource_error& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return 1;
  } catch (const internal_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 2;  // unreachable: a subcommand is required
}
