// Command-line frontend. Every run is determined by its arguments and
// input files; JSON output uses a fixed key order so reruns are
// byte-identical.
//
// Exit codes: 0 success, 2 usage or parse error, 3 matrix budget exceeded,
// 4 search exhausted, 5 hypothesis violated (vanishing resultant,
// non-regular system, uncertified witness).

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "dalg/bounds.hpp"
#include "dalg/eliminate.hpp"
#include "dalg/errors.hpp"
#include "dalg/hilbert.hpp"
#include "dalg/parse.hpp"
#include "dalg/resultant.hpp"
#include "dalg/series.hpp"

namespace {

using Json = nlohmann::ordered_json;
using namespace dalg;

constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;
constexpr int kExitNotFound = 4;
constexpr int kExitHypothesis = 5;

struct Common {
  std::string format = "json";
  std::size_t budget = 0;  // 0: default (DALG_BUDGET or built-in)
  std::size_t effective_budget() const { return budget != 0 ? budget : default_budget(); }
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

// Integers as JSON numbers when they fit in 64 bits, else decimal strings.
Json int_json(const Integer& v) { return v.fits_slong_p() ? Json(v.get_si()) : Json(v.get_str()); }

void emit(const Json& j, const std::string& format) {
  if (format == "text") {
    for (const auto& [k, v] : j.items()) std::cout << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
  } else {
    std::cout << j.dump(2) << '\n';
  }
}

Json bound_json(const ThresholdBound& b) {
  Json j;
  j["threshold"] = b.threshold_text();
  j["threshold_exact"] = b.exact;
  j["threshold_lower"] = b.lower.get_str();
  j["threshold_upper"] = b.upper.get_str();
  j["k_min"] = int_json(b.k_min);
  return j;
}

// ---------------------------------------------------------------------------
// Witnesses: `--witness-lib FILE --use FAMILY=NAME`.

struct WitnessArgs {
  std::string library;
  std::vector<std::string> uses;
  std::size_t n = 24;
};

void add_witness_options(CLI::App* app, WitnessArgs& w) {
  app->add_option("--witness-lib", w.library, "witness library file");
  app->add_option("--use", w.uses, "FAMILY=NAME binding a library witness to a family (repeatable)");
  app->add_option("--n", w.n, "series truncation")->check(CLI::Range(2, 400));
}

Witnesses build_witnesses(const WitnessArgs& args) {
  Witnesses out;
  if (args.uses.empty()) return out;
  if (args.library.empty()) throw DomainError("--use needs --witness-lib");
  std::istringstream in(read_file(args.library));
  const auto lib = parse_witness_library(in);
  for (const auto& use : args.uses) {
    const auto eq = use.find('=');
    if (eq == std::string::npos) throw DomainError("--use expects FAMILY=NAME, got " + use);
    const Family f = parse_family(use.substr(0, eq));
    const std::string name = use.substr(eq + 1);
    auto it = std::find_if(lib.begin(), lib.end(), [&](const WitnessSpec& w) { return w.name == name; });
    if (it == lib.end()) throw DomainError("no witness named " + name);
    out[f] = solve_ode_series(it->equation, it->family, it->initial, args.n, it->point);
  }
  return out;
}

Json annihilator_json(const Annihilator& a, const FieldDesc& field) {
  Json j;
  j["target"] = a.target.name();
  j["order"] = a.order;
  j["degree"] = a.degree;
  j["k_searched"] = a.k_searched;
  j["polynomial"] = to_string(a.poly, field);
  j["membership_certified"] = a.membership_certified;
  j["series_certified"] = a.series ? Json(a.series->certified) : Json(nullptr);
  j["residual_valuation"] = a.series ? Json(a.series->residual_valuation) : Json(nullptr);
  return j;
}

// ---------------------------------------------------------------------------
// bound

struct BoundArgs {
  bool thm = false, sum = false, prod = false, div = false, comp = false;
  long d = 1, rmin = 1, rl = 0, r = 1, degq = 1, degqn = 1, degqd = 1;
  long r1 = 0, r2 = 0, d1 = 1, d2 = 1;
  unsigned digits = 12;
};

int cmd_bound(const BoundArgs& a, const Common& c) {
  const int kinds = a.thm + a.sum + a.prod + a.div + a.comp;
  if (kinds != 1) throw DomainError("choose exactly one of --thm, --sum, --prod, --div, --comp");
  for (long v : {a.d, a.degq, a.degqn, a.degqd, a.d1, a.d2})
    if (v < 1) throw DomainError("degrees must be at least 1");
  for (long v : {a.rmin, a.rl, a.r, a.r1, a.r2})
    if (v < 0) throw DomainError("orders must be non-negative");
  const auto u = [](long v) { return static_cast<std::uint32_t>(v); };
  Json j;
  if (a.comp) {
    j["kind"] = "composition";
    j["r1"] = a.r1;
    j["r2"] = a.r2;
    j["d1"] = a.d1;
    j["d2"] = a.d2;
    j.update(bound_json(composition_bound(u(a.r1), u(a.r2), a.d1, a.d2)));
  } else if (a.thm) {
    j["kind"] = "theorem";
    j["d"] = a.d;
    j["r_min"] = a.rmin;
    j["r_l"] = a.rl;
    j["r"] = a.r;
    j.update(bound_json(theorem_bound(a.d, u(a.rmin), u(a.rl), u(a.r), a.digits)));
    j["sufficiency_k"] = int_json(sufficiency_k(a.d, u(a.rmin), u(a.rl), u(a.r)));
  } else if (a.div) {
    j["kind"] = "quotient";
    j["deg_qn"] = a.degqn;
    j["deg_qd"] = a.degqd;
    j["d"] = a.d;
    j["r_min"] = a.rmin;
    j["r"] = a.r;
    j.update(bound_json(div_bound(a.degqn, a.degqd, a.d, u(a.rmin), u(a.r), a.digits)));
  } else {
    j["kind"] = a.sum ? "sum" : "product";
    j["deg_q"] = a.degq;
    j["d"] = a.d;
    j["r_min"] = a.rmin;
    j["r"] = a.r;
    j.update(bound_json(plus_times_bound(a.degq, a.d, u(a.rmin), u(a.r), a.digits)));
  }
  emit(j, c.format);
  return 0;
}

// ---------------------------------------------------------------------------
// curve

struct CurveArgs {
  long d = 2, rmin = 2, rl = 1, from = -1, to = -1;
  std::string plot;
};

int cmd_curve(const CurveArgs& a, const Common& c) {
  if (a.d < 1 || a.rmin < 0 || a.rl < 0) throw DomainError("invalid curve parameters");
  const auto from = static_cast<std::uint32_t>(a.from < 0 ? a.rmin : a.from);
  const auto to = static_cast<std::uint32_t>(a.to < 0 ? from + 6 : a.to);
  const auto pts = curve(a.d, static_cast<std::uint32_t>(a.rmin), static_cast<std::uint32_t>(a.rl), from, to);
  if (!a.plot.empty()) {
    std::ofstream out(a.plot);
    if (!out) throw DomainError("cannot write " + a.plot);
    out << "# Reads the CSV printed by `dalg curve` (argument 1) and plots\n"
           "# the number of degree-k_min monomials against the order r.\n"
           "import csv, sys\n"
           "import matplotlib.pyplot as plt\n"
           "rows = list(csv.DictReader(open(sys.argv[1])))\n"
           "r = [int(x['r']) for x in rows]\n"
           "m = [int(x['monomial_count']) for x in rows]\n"
           "plt.semilogy(r, m, marker='o')\n"
           "plt.xlabel('order r')\n"
           "plt.ylabel('monomials of degree k_min')\n"
           "plt.title('d="
        << a.d << ", r_min=" << a.rmin << ", r_l=" << a.rl
        << "')\n"
           "plt.savefig(sys.argv[2] if len(sys.argv) > 2 else 'curve.png')\n";
  }
  if (c.format == "json") {
    Json j;
    j["d"] = a.d;
    j["r_min"] = a.rmin;
    j["r_l"] = a.rl;
    j["points"] = Json::array();
    for (const auto& p : pts)
      j["points"].push_back({{"r", p.r}, {"k_min", int_json(p.k_min)}, {"monomial_count", int_json(p.monomial_count)}});
    emit(j, c.format);
  } else {
    std::cout << curve_csv(pts);
  }
  return 0;
}

// ---------------------------------------------------------------------------
// eliminate

struct EliminateArgs {
  std::string file;
  bool sum = false, prod = false, div = false, compose = false, raw = false;
  std::string q, qn, qd, target;
  long r = -1;
  unsigned kmax = 8;
  WitnessArgs witness;
};

int cmd_eliminate(const EliminateArgs& a, const Common& c) {
  const int kinds = a.sum + a.prod + a.div + a.compose + a.raw;
  if (kinds > 1) throw DomainError("choose at most one of --sum, --prod, --div, --compose, --raw");
  const SystemFile sf = parse_system_text(read_file(a.file));
  const FieldDesc& field = sf.field;

  std::optional<SystemSpec> sys;
  std::optional<DPoly> q, qn, qd;
  std::uint32_t r_default = 0;
  Json closure = nullptr;
  // Order sum and degree product of the components (closure presets).
  std::uint32_t comp_r = 0;
  Integer comp_d = 1;
  for (const auto& g : sf.generators) {
    for (Family f : families(g)) comp_r += order_in(g, f);
    comp_d *= jet_degree(g);
  }
  if (a.sum || a.prod) {
    DPoly acc = a.sum ? DPoly() : DPoly(Coeff(1));
    for (std::uint32_t i = 1; i <= sf.generators.size(); ++i)
      acc = a.sum ? acc + dvar(yvar(i)) : acc * dvar(yvar(i));
    q = a.q.empty() ? acc : parse(a.q, field);
    sys = sum_product_system(field, sf.generators, *q);
  } else if (a.div) {
    if (a.qn.empty() || a.qd.empty()) throw DomainError("--div needs --qn and --qd");
    qn = parse(a.qn, field);
    qd = parse(a.qd, field);
    sys = rational_system(field, sf.generators, *qn, *qd);
  } else if (a.compose) {
    if (sf.generators.size() != 2) throw DomainError("--compose needs exactly two equations (y1 and y2)");
    sys = composition_system(field, sf.generators[0], sf.generators[1]);
  } else {
    std::optional<Family> t = sf.target;
    if (!a.target.empty()) t = parse_family(a.target);
    if (!t) throw DomainError("raw systems need a target (file header or --target)");
    sys = SystemSpec(field, sf.generators, t);
  }
  const Family target = *sys->target();
  if (a.compose) {
    r_default = sys->order(target);
  } else if (a.sum || a.prod || a.div) {
    r_default = comp_r;
  } else {
    r_default = std::max(sys->order_sum(), sys->order(target));
  }
  const auto r = a.r < 0 ? r_default : static_cast<std::uint32_t>(a.r);

  // Closure bounds for the preset shapes.
  if ((a.sum || a.prod) && r >= comp_r) {
    closure = bound_json(plus_times_bound(jet_degree(*q), comp_d, comp_r, r));
    closure["kind"] = a.sum ? "sum" : "product";
  } else if (a.div && r >= comp_r) {
    closure = bound_json(div_bound(jet_degree(*qn), jet_degree(*qd), comp_d, comp_r, r));
    closure["kind"] = "quotient";
  } else if (a.compose) {
    const auto& g = sf.generators;
    closure = bound_json(composition_bound(order_in(g[0], Family::y(1)), order_in(g[1], Family::y(2)),
                                           jet_degree(g[0]), jet_degree(g[1])));
    closure["kind"] = "composition";
  }

  SearchReport rep = eliminate_search(*sys, target, r, a.kmax, c.effective_budget());

  Json layers = Json::array();
  for (const auto& l : rep.layers) layers.push_back({{"k", l.k}, {"rows", l.rows}, {"cols", l.cols}, {"rank", l.rank}});
  Json bounds;
  bounds["d"] = int_json(rep.d);
  bounds["r_min"] = rep.r_min;
  bounds["r_l"] = rep.r_l;
  bounds["sufficiency_k"] = rep.sufficiency ? int_json(*rep.sufficiency) : Json(nullptr);
  bounds["theorem"] = rep.theorem ? bound_json(*rep.theorem) : Json(nullptr);
  bounds["closure"] = closure;

  Json j;
  if (rep.found) {
    Annihilator& ann = *rep.found;
    Witnesses ws = build_witnesses(a.witness);
    if (!ws.count(target) && !ws.empty()) {
      if (q) {
        ws[target] = apply_dpoly(*q, ws);
      } else if (qn) {
        ws[target] = apply_dpoly(*qn, ws) * invert(apply_dpoly(*qd, ws));
      }
    }
    if (ws.count(target)) certify(ann, {{target, ws.at(target)}});
    j = annihilator_json(ann, field);
    j["found"] = true;
  } else {
    j["target"] = target.name();
    j["found"] = false;
  }
  j["r"] = r;
  j["k_max"] = a.kmax;
  j["prolongation"] = r - sys->order(target);
  j["layers"] = layers;
  j["bounds"] = bounds;
  emit(j, c.format);
  if (!rep.found) return kExitNotFound;
  if (rep.found->series && !rep.found->series->certified) return kExitHypothesis;
  return 0;
}

// ---------------------------------------------------------------------------
// reselim

struct ResElimArgs {
  bool algebraic = false, hyperexp = false, x = false;
  std::string field = "Q(;x)", p, qg, u = "0", v = "1";
  WitnessArgs witness;
};

int cmd_reselim(const ResElimArgs& a, const Common& c) {
  if (a.algebraic + a.hyperexp + a.x != 1) throw DomainError("choose exactly one of --algebraic, --hyperexp, --x");
  if (a.p.empty()) throw DomainError("--p is required");
  const FieldDesc field = FieldDesc::parse(a.field);
  const DPoly p = parse(a.p, field);
  ResultantElimination e;
  std::string kind;
  if (a.algebraic) {
    if (a.qg.empty()) throw DomainError("--algebraic needs --qg");
    e = elim_algebraic(p, parse(a.qg, field));
    kind = "algebraic";
  } else if (a.hyperexp) {
    e = elim_hyperexp(p, parse_coeff(a.u, field), parse_coeff(a.v, field));
    kind = "hyperexponential";
  } else {
    e = elim_x(p);
    kind = "x";
  }
  const Witnesses ws = build_witnesses(a.witness);
  if (ws.count(e.annihilator.target)) certify(e.annihilator, {{e.annihilator.target, ws.at(e.annihilator.target)}});
  Json j = annihilator_json(e.annihilator, field);
  // Resultants lie in the ideal by construction; no row certificate exists.
  j["membership_certified"] = nullptr;
  j["kind"] = kind;
  Json b;
  for (const auto& bc : e.bounds) b[bc.name] = Json::array({bc.value, int_json(bc.bound)});
  j["bounds_checked"] = b;
  j["bounds_ok"] = e.bounds_ok();
  emit(j, c.format);
  if (e.annihilator.series && !e.annihilator.series->certified) return kExitHypothesis;
  return 0;
}

// ---------------------------------------------------------------------------
// hilbert and checkdreg

struct HilbertArgs {
  std::string file;
  bool homogenize = false;
  long cutoff = -1;
};

int cmd_hilbert(const HilbertArgs& a, const Common& c) {
  const SystemFile sf = parse_system_text(read_file(a.file));
  std::vector<DPoly> gens;
  for (const auto& g : sf.generators) gens.push_back(a.homogenize ? homogenize(g) : g);
  const SystemSpec spec(sf.field, sf.generators);
  std::vector<VarId> vars = ring_variables(spec);
  if (!a.homogenize) vars.erase(vars.begin());  // s
  const auto cutoff = a.cutoff < 0 ? default_cutoff(gens) : static_cast<std::uint32_t>(a.cutoff);
  const RegularityReport rep = check_regular_sequence(gens, vars, cutoff, c.effective_budget());
  if (c.format == "json") {
    Json j;
    j["variables"] = vars.size();
    j["cutoff"] = cutoff;
    j["regular"] = rep.regular;
    j["profile"] = Json::array();
    const auto& p = rep.profile;
    for (std::size_t k = 0; k < p.values.size(); ++k) {
      Json row;
      row["degree"] = k;
      row["hf"] = int_json(p.values[k]);
      row["closed_form"] = p.closed_form ? int_json((*p.closed_form)[k]) : Json(nullptr);
      row["verdict"] = to_string(p.verdicts[k]);
      j["profile"].push_back(row);
    }
    emit(j, c.format);
  } else {
    std::cout << to_csv(rep.profile);
  }
  return 0;
}

struct CheckDregArgs {
  std::string file;
  long rho = 0;
  long cutoff = -1;
};

int cmd_checkdreg(const CheckDregArgs& a, const Common& c) {
  const SystemFile sf = parse_system_text(read_file(a.file));
  const SystemSpec spec(sf.field, sf.generators, sf.target);
  if (a.rho < 0) throw DomainError("rho must be non-negative");
  const auto rho = static_cast<std::uint32_t>(a.rho);
  std::uint32_t cutoff = 0;
  if (a.cutoff < 0) {
    std::vector<DPoly> h;
    const SystemSpec prolonged = prolong(spec, rho);
    for (const auto& g : prolonged.generators()) h.push_back(homogenize(g));
    cutoff = default_cutoff(h);
  } else {
    cutoff = static_cast<std::uint32_t>(a.cutoff);
  }
  const DRegularityReport rep = check_dregular(spec, rho, cutoff, c.effective_budget());
  Json j;
  j["rho"] = rho;
  j["generators"] = rep.homogenized.size();
  j["variables"] = rep.variables.size();
  j["cutoff"] = cutoff;
  j["regular"] = rep.sequence.regular;
  j["first_failure"] = rep.sequence.first_failure
                           ? Json({{"prefix", rep.sequence.first_failure->first},
                                   {"degree", rep.sequence.first_failure->second}})
                           : Json(nullptr);
  j["expected_dimension"] = rep.expected_dimension;
  if (rep.fitted) {
    Json poly = Json::array();
    for (const auto& q : rep.fitted->polynomial) poly.push_back(q.get_str());
    j["fitted"] = {{"degree", rep.fitted->degree}, {"polynomial", poly}, {"stable", rep.fitted->stable}};
  } else {
    j["fitted"] = nullptr;
  }
  emit(j, c.format);
  return rep.sequence.regular ? 0 : kExitHypothesis;
}

// ---------------------------------------------------------------------------
// verify, experiment, dpoly, series

struct VerifyArgs {
  std::string field = "Q", poly;
  WitnessArgs witness;
};

int cmd_verify(const VerifyArgs& a, const Common& c) {
  const FieldDesc field = FieldDesc::parse(a.field);
  const DPoly p = parse(a.poly, field);
  const Witnesses ws = build_witnesses(a.witness);
  if (ws.empty()) throw DomainError("verify needs at least one --use binding");
  const Certification cert = verify_annihilator(p, ws);
  Json j;
  j["polynomial"] = to_string(p, field);
  j["certified"] = cert.certified;
  j["residual_valuation"] = cert.residual_valuation;
  j["residual_truncation"] = cert.residual_truncation;
  emit(j, c.format);
  return cert.certified ? 0 : kExitHypothesis;
}

struct ExperimentArgs {
  unsigned n = 1, d = 3;
  std::uint64_t seed = 7;
};

int cmd_experiment(const ExperimentArgs& a, const Common& c) {
  const RelationReport r = relation_experiment(a.n, a.d, a.seed);
  Json j;
  j["n"] = r.n;
  j["d"] = r.d;
  j["seed"] = r.seed;
  j["k_observed"] = r.k_observed;
  j["k_counting"] = r.k_counting;
  j["k_paper_bound"] = int_json(r.k_degree_bound);
  j["attempts"] = r.attempts;
  emit(j, c.format);
  return 0;
}

struct DpolyArgs {
  std::string field = "Q", poly;
  unsigned derive = 0;
  bool chain = false, homogenize = false;
};

int cmd_dpoly(const DpolyArgs& a, const Common& c) {
  const FieldDesc field = FieldDesc::parse(a.field);
  DPoly p = parse(a.poly, field);
  for (unsigned k = 0; k < a.derive; ++k) p = a.chain ? derive_chain(p) : derive(p);
  if (a.homogenize) p = homogenize(p);
  const DegreeProfile prof = degree_profile(p);
  Json j;
  j["polynomial"] = to_string(p, field);
  j["terms"] = p.size();
  j["total_degree"] = prof.total_degree;
  Json orders;
  for (const auto& [f, o] : prof.order) orders[f.name()] = o;
  j["order"] = orders.is_null() ? Json::object() : orders;
  emit(j, c.format);
  return 0;
}

struct SeriesArgs {
  std::string library, name;
  std::size_t n = 12;
};

int cmd_series(const SeriesArgs& a, const Common& c) {
  std::istringstream in(read_file(a.library));
  const auto lib = parse_witness_library(in);
  auto it = std::find_if(lib.begin(), lib.end(), [&](const WitnessSpec& w) { return w.name == a.name; });
  if (it == lib.end()) throw DomainError("no witness named " + a.name);
  const Series s = solve_ode_series(it->equation, it->family, it->initial, a.n, it->point);
  const NameFn names = it->field.names();
  Json j;
  j["name"] = it->name;
  j["equation"] = to_string(it->equation, it->field);
  j["point"] = it->point.to_string(names);
  j["truncation"] = s.truncation();
  j["coefficients"] = Json::array();
  for (const auto& co : s.coefficients()) j["coefficients"].push_back(co.to_string(names));
  emit(j, c.format);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact elimination for differential-algebraic systems"};
  app.require_subcommand(1);
  app.fallthrough();
  Common common;
  app.add_option("--format", common.format, "json, csv or text")
      ->check(CLI::IsMember({"json", "csv", "text"}))
      ->capture_default_str();
  app.add_option("--budget", common.budget, "rows x columns cap per Macaulay layer (default: $DALG_BUDGET or 2e7)");

  BoundArgs bound;
  auto* b = app.add_subcommand("bound", "degree bounds: threshold, k_min and the counting bound");
  b->add_flag("--thm", bound.thm, "general elimination bound");
  b->add_flag("--sum", bound.sum, "sum closure");
  b->add_flag("--prod", bound.prod, "product closure");
  b->add_flag("--div", bound.div, "quotient closure");
  b->add_flag("--comp", bound.comp, "composition closure");
  b->add_option("--d", bound.d, "product of generator degrees");
  b->add_option("--rmin", bound.rmin, "sum of orders");
  b->add_option("--rl", bound.rl, "order of the target");
  b->add_option("--r", bound.r, "order r");
  b->add_option("--degq", bound.degq, "deg Q");
  b->add_option("--degqn", bound.degqn, "deg Q_n");
  b->add_option("--degqd", bound.degqd, "deg Q_d");
  b->add_option("--r1", bound.r1, "order of the outer equation");
  b->add_option("--r2", bound.r2, "order of the inner equation");
  b->add_option("--d1", bound.d1, "degree of the outer equation");
  b->add_option("--d2", bound.d2, "degree of the inner equation");
  b->add_option("--digits", bound.digits, "enclosure digits for irrational thresholds")->check(CLI::Range(1, 200));

  CurveArgs curve_args;
  auto* cu = app.add_subcommand("curve", "order versus monomial-count curve (CSV)");
  cu->add_option("--d", curve_args.d, "product of generator degrees");
  cu->add_option("--rmin", curve_args.rmin, "sum of orders");
  cu->add_option("--rl", curve_args.rl, "order of the target");
  cu->add_option("--from", curve_args.from, "first order (default r_min)");
  cu->add_option("--to", curve_args.to, "last order (default from + 6)");
  cu->add_option("--plot", curve_args.plot, "write a matplotlib script reading the CSV");

  EliminateArgs elim;
  auto* el = app.add_subcommand("eliminate", "search an annihilator of the target by Macaulay elimination");
  el->add_option("file", elim.file, "system file")->required();
  el->add_flag("--sum", elim.sum, "components P_i(y_i); z = y_1 + ... + y_n (or --q)");
  el->add_flag("--prod", elim.prod, "components P_i(y_i); z = y_1 * ... * y_n (or --q)");
  el->add_flag("--div", elim.div, "components P_i(y_i); Q_d z = Q_n");
  el->add_flag("--compose", elim.compose, "two equations P1(y1), P2(y2); z = f1 o f2");
  el->add_flag("--raw", elim.raw, "generators as given (default)");
  el->add_option("--q", elim.q, "Q for --sum/--prod");
  el->add_option("--qn", elim.qn, "numerator for --div");
  el->add_option("--qd", elim.qd, "denominator for --div");
  el->add_option("--target", elim.target, "target family for raw systems");
  el->add_option("--r", elim.r, "order of the annihilator sought");
  el->add_option("--kmax", elim.kmax, "largest layer degree")->check(CLI::Range(1, 64));
  add_witness_options(el, elim.witness);

  ResElimArgs res;
  auto* re = app.add_subcommand("reselim", "resultant eliminations of algebraic, hyperexponential or x");
  re->add_flag("--algebraic", res.algebraic, "Res_y1(P, Q_g)");
  re->add_flag("--hyperexp", res.hyperexp, "g'/g = u/v");
  re->add_flag("--x", res.x, "eliminate x");
  re->add_option("--field", res.field, "coefficient field")->capture_default_str();
  re->add_option("--p", res.p, "P");
  re->add_option("--qg", res.qg, "minimal polynomial of g in x, y1");
  re->add_option("--u", res.u, "numerator of g'/g");
  re->add_option("--v", res.v, "denominator of g'/g");
  add_witness_options(re, res.witness);

  HilbertArgs hil;
  auto* hi = app.add_subcommand("hilbert", "Hilbert function profile of a homogeneous system (CSV)");
  hi->add_option("file", hil.file, "system file")->required();
  hi->add_flag("--homogenize", hil.homogenize, "homogenize with s first");
  hi->add_option("--cutoff", hil.cutoff, "regularity cutoff degree");

  CheckDregArgs dreg;
  auto* cd = app.add_subcommand("checkdreg", "D-regularity at order rho");
  cd->add_option("file", dreg.file, "system file")->required();
  cd->add_option("--rho", dreg.rho, "prolongation order")->required();
  cd->add_option("--cutoff", dreg.cutoff, "regularity cutoff degree");

  VerifyArgs ver;
  auto* vf = app.add_subcommand("verify", "certify a polynomial against series witnesses");
  vf->add_option("--field", ver.field, "coefficient field")->capture_default_str();
  vf->add_option("--poly", ver.poly, "differential polynomial")->required();
  add_witness_options(vf, ver.witness);

  ExperimentArgs exp;
  auto* ex = app.add_subcommand("experiment", "smallest algebraic relation among random polynomials");
  ex->add_option("--n", exp.n, "number of variables")->check(CLI::Range(1, 3));
  ex->add_option("--d", exp.d, "degree")->check(CLI::Range(1, 4));
  ex->add_option("--seed", exp.seed, "generator seed");

  DpolyArgs dp;
  auto* dpc = app.add_subcommand("dpoly", "canonical form, derivatives and degree profile");
  dpc->add_option("poly", dp.poly, "differential polynomial")->required();
  dpc->add_option("--field", dp.field, "coefficient field")->capture_default_str();
  dpc->add_option("--derive", dp.derive, "number of derivations");
  dpc->add_flag("--chain", dp.chain, "use the chain derivation y1^(l) -> y2' y1^(l+1)");
  dpc->add_flag("--homogenize", dp.homogenize, "homogenize with s");

  SeriesArgs ser;
  auto* se = app.add_subcommand("series", "series coefficients of a library witness");
  se->add_option("--witness-lib", ser.library, "witness library file")->required();
  se->add_option("--name", ser.name, "witness name")->required();
  se->add_option("--n", ser.n, "truncation")->check(CLI::Range(1, 400));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*b) return cmd_bound(bound, common);
    if (*cu) return cmd_curve(curve_args, common);
    if (*el) return cmd_eliminate(elim, common);
    if (*re) return cmd_reselim(res, common);
    if (*hi) return cmd_hilbert(hil, common);
    if (*cd) return cmd_checkdreg(dreg, common);
    if (*vf) return cmd_verify(ver, common);
    if (*ex) return cmd_experiment(exp, common);
    if (*dpc) return cmd_dpoly(dp, common);
    if (*se) return cmd_series(ser, common);
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBudget;
  } catch (const HypothesisViolation& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitHypothesis;
  } catch (const dalg::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
