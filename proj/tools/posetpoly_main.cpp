#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "pp/acceptance.hpp"
#include "pp/counting.hpp"
#include "pp/facets.hpp"
#include "pp/partitions.hpp"
#include "pp/points.hpp"
#include "pp/polynomial.hpp"
#include "pp/poset_json.hpp"
#include "pp/subsets.hpp"
#include "pp/toric.hpp"

namespace {

using nlohmann::ordered_json;
using namespace pp;

constexpr int kCountingGuard = 7;  // box scans are exponential in n
constexpr int kScanGuard = 5;      // labeled-poset enumeration limit
constexpr int kGroebnerGuard = 4;  // S-pair counts grow very fast

struct Options {
  std::string poset_file;
  std::string inline_json;
  std::string format = "json";
  bool force = false;
};

void add_common(CLI::App* cmd, Options& opt, bool poset_required = true) {
  auto* file = cmd->add_option("--poset", opt.poset_file, "poset JSON file");
  auto* inl = cmd->add_option("--inline", opt.inline_json, "poset JSON literal");
  file->excludes(inl);
  if (poset_required) {
    // exactly one source; checked again at load time for a clear message
  }
  cmd->add_option("--format", opt.format, "output format: json or text")
      ->check(CLI::IsMember({"json", "text"}));
  cmd->add_flag("--force", opt.force, "override the size guards");
}

Poset load_poset(const Options& opt) {
  if (!opt.poset_file.empty()) {
    std::ifstream in(opt.poset_file);
    if (!in) throw std::invalid_argument("cannot open poset file: " + opt.poset_file);
    std::stringstream buf;
    buf << in.rdbuf();
    return poset_from_json_text(buf.str());
  }
  if (!opt.inline_json.empty()) return poset_from_json_text(opt.inline_json);
  throw std::invalid_argument("a poset is required: pass --poset FILE or --inline JSON");
}

void guard(int n, int limit, bool force, const std::string& what) {
  if (n <= limit || force) return;
  throw std::invalid_argument(what + " is limited to n <= " + std::to_string(limit) +
                              " (got n = " + std::to_string(n) +
                              "); pass --force to override");
}

PolytopeKind parse_kind(const std::string& s) {
  for (PolytopeKind k : {PolytopeKind::Order, PolytopeKind::Chain, PolytopeKind::EOrder,
                         PolytopeKind::EChain, PolytopeKind::EOrderDualForm})
    if (s == kind_name(k)) return k;
  throw std::invalid_argument("unknown polytope kind: " + s +
                              " (use order, chain, eorder, echain, eorder-dual-form)");
}

RingKind parse_ring_kind(const std::string& s) {
  for (RingKind k : {RingKind::O, RingKind::C, RingKind::Oe, RingKind::Ce})
    if (s == ring_kind_name(k)) return k;
  throw std::invalid_argument("unknown ring kind: " + s + " (use O, C, Oe, Ce)");
}

ordered_json subset_json(Subset s) {
  auto arr = ordered_json::array();
  for (int i : subset_elements(s)) arr.push_back(i + 1);
  return arr;
}

ordered_json points_json(const std::vector<Point>& pts) {
  auto arr = ordered_json::array();
  for (const auto& p : pts) arr.push_back(p);
  return arr;
}

ordered_json polynomial_json(const RationalPolynomial& poly) {
  ordered_json j;
  j["degree"] = poly.degree();
  j["coefficients"] = poly.coefficient_strings();
  return j;
}

ordered_json relabeling_json(const Relabeling& r) {
  ordered_json j;
  j["changed"] = r.changed;
  auto arr = ordered_json::array();
  for (int v : r.old_to_new) arr.push_back(v + 1);
  j["old_to_new"] = arr;
  return j;
}

ordered_json check_results_json(const std::vector<CheckResult>& rows) {
  auto arr = ordered_json::array();
  for (const auto& r : rows) {
    ordered_json row;
    if (r.id > 0) row["id"] = r.id;
    row["name"] = r.name;
    row["pass"] = r.pass;
    if (!r.details.empty()) row["details"] = r.details;
    row["seconds"] = r.seconds;
    if (r.budget_seconds > 0) row["budget_seconds"] = r.budget_seconds;
    arr.push_back(row);
  }
  return arr;
}

void render_text(const ordered_json& j, int indent, std::ostream& os) {
  std::string pad(indent, ' ');
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      if (value.is_object() || (value.is_array() && !value.empty() &&
                                (value[0].is_object() || value[0].is_array()))) {
        os << pad << key << ":\n";
        render_text(value, indent + 2, os);
      } else {
        os << pad << key << ": " << (value.is_string() ? value.get<std::string>()
                                                       : value.dump())
           << "\n";
      }
    }
  } else if (j.is_array()) {
    for (const auto& value : j) {
      if (value.is_object() || value.is_array()) {
        os << pad << "-\n";
        render_text(value, indent + 2, os);
      } else {
        os << pad << "- " << (value.is_string() ? value.get<std::string>() : value.dump())
           << "\n";
      }
    }
  } else {
    os << pad << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  }
}

void emit(const ordered_json& report, const Options& opt) {
  if (opt.format == "text")
    render_text(report, 0, std::cout);
  else
    std::cout << report.dump(2) << "\n";
}

// Each verb returns the process exit code: 0 ok, 1 verification failure.
int verb_info(const Options& opt) {
  Poset p = load_poset(opt);
  guard(p.n, kCountingGuard, opt.force, "info");
  ordered_json j = poset_to_json(p);
  j["minimal"] = subset_json(p.minimal_elements());
  j["maximal"] = subset_json(p.maximal_elements());
  j["naturally_labeled"] = is_naturally_labeled(p);
  j["contains_pattern"] = contains_x_poset(p);
  j["filters"] = filters(p).members.size();
  j["ideals"] = poset_ideals(p).members.size();
  j["antichains"] = antichains(p).members.size();
  FacetFormulas f = facet_count_formulas(p);
  ordered_json counts;
  counts["order"] = f.f_order;
  counts["chain"] = f.f_chain;
  counts["eorder"] = f.f_eorder;
  counts["echain"] = f.f_echain;
  counts["saturated_chains_to_max"] = f.sc;
  counts["maximal_chains"] = f.mc;
  j["facet_counts"] = counts;
  emit(j, opt);
  return 0;
}

int verb_points(const Options& opt, const std::string& kind_str) {
  Poset p = load_poset(opt);
  guard(p.n, kCountingGuard, opt.force, "points");
  PolytopeKind kind = parse_kind(kind_str);
  std::vector<Point> pts = lattice_points(p, kind);
  ordered_json j;
  j["kind"] = kind_name(kind);
  j["count"] = pts.size();
  j["points"] = points_json(pts);
  emit(j, opt);
  return 0;
}

int verb_facets(const Options& opt, const std::string& kind_str) {
  Poset p = load_poset(opt);
  guard(p.n, kCountingGuard, opt.force, "facets");
  PolytopeKind kind = parse_kind(kind_str);
  std::vector<Halfspace> hs = facets(p, kind);
  ordered_json j;
  j["kind"] = kind_name(kind);
  j["count"] = hs.size();
  auto arr = ordered_json::array();
  for (const auto& h : hs) {
    ordered_json row;
    row["normal"] = h.normal;
    row["rhs"] = h.rhs;
    arr.push_back(row);
  }
  j["halfspaces"] = arr;
  emit(j, opt);
  return 0;
}

int verb_count(const Options& opt, const std::string& kind_str, Int m) {
  Poset p = load_poset(opt);
  guard(p.n, kCountingGuard, opt.force, "count");
  if (m < 0) throw std::invalid_argument("-m must be nonnegative");
  PolytopeKind kind = parse_kind(kind_str);
  ordered_json j;
  j["kind"] = kind_name(kind);
  j["m"] = m;
  j["count"] = count_dilation(p, kind, m);
  if (m >= 1) j["interior"] = interior_count(p, kind, m);
  emit(j, opt);
  return 0;
}

int verb_ehrhart(const Options& opt, const std::string& kind_str) {
  Poset p = load_poset(opt);
  guard(p.n, kCountingGuard, opt.force, "ehrhart");
  PolytopeKind kind = parse_kind(kind_str);
  RationalPolynomial poly = ehrhart(p, kind);
  ordered_json j;
  j["kind"] = kind_name(kind);
  j.update(polynomial_json(poly));
  auto vals = ordered_json::array();
  for (int m = 0; m <= p.n + 1; ++m)
    vals.push_back(rational_to_string(poly.eval(m)));
  j["values"] = vals;
  emit(j, opt);
  return 0;
}

int verb_poly(const Options& opt, Int m, bool enriched) {
  Poset input = load_poset(opt);
  guard(input.n, kCountingGuard, opt.force, "polynomial interpolation");
  Relabeling r = naturally_relabel(input);
  const Poset& p = r.poset;
  if (m < 0) m = p.n + 1;
  ordered_json j;
  if (r.changed) j["relabeling"] = relabeling_json(r);
  RationalPolynomial poly = enriched ? left_enriched_polynomial(p) : order_polynomial(p);
  j.update(polynomial_json(poly));
  auto vals = ordered_json::array();
  for (Int k = 0; k <= m; ++k)
    vals.push_back(enriched ? count_left_enriched(p, k) : count_order_preserving(p, k));
  j["values"] = vals;
  emit(j, opt);
  return 0;
}

int verb_diff_sets(const Options& opt, Int m) {
  Poset input = load_poset(opt);
  guard(input.n, kCountingGuard, opt.force, "diff-sets");
  if (m < 0) throw std::invalid_argument("-m must be nonnegative");
  Relabeling r = naturally_relabel(input);
  SetDifferenceReport rep = set_difference_demo(r.poset, m);
  ordered_json j;
  if (r.changed) j["relabeling"] = relabeling_json(r);
  j["m"] = m;
  j["map_count"] = rep.partition_count;
  j["point_count"] = rep.dilation_count;
  j["equal_sizes"] = rep.partition_count == rep.dilation_count;
  j["only_maps"] = points_json(rep.only_partitions);
  j["only_points"] = points_json(rep.only_dilation);
  emit(j, opt);
  return rep.partition_count == rep.dilation_count ? 0 : 1;
}

int verb_groebner(const Options& opt, const std::string& kind_str, bool verify, bool initial,
                  bool compare_initial) {
  Poset p = load_poset(opt);
  guard(p.n, kGroebnerGuard, opt.force, "groebner");
  RingKind kind = parse_ring_kind(kind_str);
  if (!verify && !initial && !compare_initial) verify = initial = compare_initial = true;
  ToricRing ring = build_ring(p, kind);
  std::vector<Binomial> gens = generators(ring);
  MonomialOrder ord = order_for(ring);
  ordered_json j;
  j["kind"] = ring_kind_name(kind);
  j["variables"] = ring.vars.size();
  j["generators"] = gens.size();
  bool failed = false;
  if (verify) {
    GroebnerReport rep = buchberger_verify(gens, ord);
    ordered_json v;
    v["s_pairs"] = rep.pair_count;
    auto fails = ordered_json::array();
    for (auto [a, b] : rep.failures) fails.push_back({a, b});
    v["failures"] = fails;
    v["pass"] = rep.pass();
    j["verify"] = v;
    failed = failed || !rep.pass();
  }
  if (initial) {
    InitialIdeal init = initial_ideal(ring, gens, ord);
    ordered_json v;
    v["minimal_generators"] = init.min_generators.size();
    v["squarefree"] = init.squarefree;
    v["quadratic"] = init.quadratic;
    v["origin_free"] = init.origin_free;
    j["initial"] = v;
    failed = failed || !(init.squarefree && init.quadratic && init.origin_free);
  }
  if (compare_initial) {
    bool enriched = is_enriched_kind(kind);
    RingKind from = enriched ? RingKind::Oe : RingKind::O;
    RingKind to = enriched ? RingKind::Ce : RingKind::C;
    bool iso = initial_isomorphism_check(p, from, to);
    ordered_json v;
    v["pair"] = std::string(ring_kind_name(from)) + "/" + ring_kind_name(to);
    v["isomorphic"] = iso;
    j["compare_initial"] = v;
    failed = failed || !iso;
  }
  emit(j, opt);
  return failed ? 1 : 0;
}

int verb_reflexive(const Options& opt, const std::string& kind_str) {
  Poset p = load_poset(opt);
  guard(p.n, kCountingGuard, opt.force, "reflexive");
  std::vector<PolytopeKind> kinds;
  if (kind_str.empty())
    kinds = {PolytopeKind::EOrder, PolytopeKind::EChain};
  else
    kinds = {parse_kind(kind_str)};
  ordered_json j;
  auto arr = ordered_json::array();
  bool all = true;
  for (PolytopeKind kind : kinds) {
    bool reflexive = reflexivity_check(p, kind);
    bool span = integer_span_check(lattice_points(p, kind), p.n);
    ordered_json row;
    row["kind"] = kind_name(kind);
    row["reflexive"] = reflexive;
    row["integer_span"] = span;
    arr.push_back(row);
    all = all && reflexive && span;
  }
  j["checks"] = arr;
  j["pass"] = all;
  emit(j, opt);
  return all ? 0 : 1;
}

int verb_symmetry(const Options& opt, const std::string& kind_str) {
  Poset p = load_poset(opt);
  guard(p.n, kCountingGuard, opt.force, "symmetry");
  PolytopeKind kind = parse_kind(kind_str);
  bool symmetric = central_symmetry_check(lattice_points(p, kind));
  ordered_json j;
  j["kind"] = kind_name(kind);
  j["symmetric"] = symmetric;
  int code = 0;
  if (kind == PolytopeKind::EOrder) {
    bool is_antichain = p.covers.empty();
    FacetFormulas f = facet_count_formulas(p);
    j["antichain"] = is_antichain;
    j["facet_counts_equal"] = f.f_eorder == f.f_echain;
    bool consistent = (symmetric == is_antichain) && (symmetric == (f.f_eorder == f.f_echain));
    j["consistent"] = consistent;
    code = consistent ? 0 : 1;
  } else if (kind == PolytopeKind::EChain) {
    j["consistent"] = symmetric;  // always symmetric
    code = symmetric ? 0 : 1;
  }
  emit(j, opt);
  return code;
}

int verb_bounds(const Options& opt, int n_flag) {
  ordered_json j;
  int code = 0;
  if (!opt.poset_file.empty() || !opt.inline_json.empty()) {
    Poset p = load_poset(opt);
    guard(p.n, kCountingGuard, opt.force, "bounds");
    FacetBounds b = max_facet_bounds(p.n);
    FacetFormulas f = facet_count_formulas(p);
    j["n"] = p.n;
    j["mu"] = b.mu;
    j["eorder_bound"] = b.eorder_bound;
    j["echain_bound"] = b.echain_bound;
    j["eorder"] = f.f_eorder;
    j["echain"] = f.f_echain;
    bool within = f.f_eorder <= b.eorder_bound && f.f_echain <= b.echain_bound;
    j["within_bounds"] = within;
    code = within ? 0 : 1;
  } else {
    if (n_flag < 1) throw std::invalid_argument("bounds needs a poset or -n N");
    FacetBounds b = max_facet_bounds(n_flag);
    j["n"] = n_flag;
    j["mu"] = b.mu;
    j["eorder_bound"] = b.eorder_bound;
    j["echain_bound"] = b.echain_bound;
  }
  emit(j, opt);
  return code;
}

int verb_scan_max_facets(const Options& opt, int n) {
  if (n < 1 || n > kScanGuard)
    throw std::invalid_argument("scan-max-facets is limited to 1 <= n <= " +
                                std::to_string(kScanGuard));
  Int best_eorder = -1, best_echain = -1;
  Poset arg_eorder, arg_echain;
  std::size_t total = 0;
  for (const Poset& p : enumerate_posets(n)) {
    ++total;
    FacetFormulas f = facet_count_formulas(p);
    if (f.f_eorder > best_eorder) {
      best_eorder = f.f_eorder;
      arg_eorder = p;
    }
    if (f.f_echain > best_echain) {
      best_echain = f.f_echain;
      arg_echain = p;
    }
  }
  FacetBounds b = max_facet_bounds(n);
  ordered_json j;
  j["n"] = n;
  j["posets"] = total;
  ordered_json eo;
  eo["value"] = best_eorder;
  eo["poset"] = poset_to_json(arg_eorder);
  j["max_eorder"] = eo;
  ordered_json ec;
  ec["value"] = best_echain;
  ec["poset"] = poset_to_json(arg_echain);
  j["max_echain"] = ec;
  ordered_json bounds;
  bounds["eorder"] = b.eorder_bound;
  bounds["echain"] = b.echain_bound;
  j["bounds"] = bounds;
  bool within = best_eorder <= b.eorder_bound && best_echain <= b.echain_bound;
  j["within_bounds"] = within;
  j["tight"] = best_eorder == b.eorder_bound && best_echain == b.echain_bound;
  emit(j, opt);
  return within ? 0 : 1;
}

int verb_reproduce_paper(const Options& opt) {
  std::vector<CheckResult> examples = run_paper_examples();
  std::vector<CheckResult> criteria = run_acceptance();
  bool all = true;
  for (const auto& r : examples) all = all && r.pass;
  for (const auto& r : criteria) all = all && r.pass;
  if (opt.format == "text") {
    std::printf("-- examples --\n");
    for (const auto& r : examples)
      std::printf("[%s] %-55s %7.2fs%s%s\n", r.pass ? "PASS" : "FAIL", r.name.c_str(),
                  r.seconds, r.details.empty() ? "" : "  ", r.details.c_str());
    std::printf("-- acceptance criteria --\n");
    for (const auto& r : criteria)
      std::printf("[%s] %2d %-55s %7.2fs%s%s\n", r.pass ? "PASS" : "FAIL", r.id,
                  r.name.c_str(), r.seconds, r.details.empty() ? "" : "  ",
                  r.details.c_str());
    std::printf("%s\n", all ? "ALL CHECKS PASSED" : "SOME CHECKS FAILED");
  } else {
    ordered_json j;
    j["examples"] = check_results_json(examples);
    j["criteria"] = check_results_json(criteria);
    j["pass"] = all;
    std::cout << j.dump(2) << "\n";
  }
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"poset polytope toolkit: lattice points, facets, Ehrhart polynomials,"
               " enriched P-partitions, and toric Groebner verification"};
  app.require_subcommand(1);

  Options opt;
  std::string kind;
  std::string ring_kind = "O";
  Int m = 1;
  int n_flag = 0;
  bool flag_verify = false, flag_initial = false, flag_compare = false;

  auto* c_info = app.add_subcommand("info", "poset summary and facet count formulas");
  add_common(c_info, opt);

  auto* c_points = app.add_subcommand("points", "lattice points of a polytope");
  add_common(c_points, opt);
  c_points->add_option("--kind", kind, "order|chain|eorder|echain|eorder-dual-form")
      ->required();

  auto* c_facets = app.add_subcommand("facets", "facet halfspaces of a polytope");
  add_common(c_facets, opt);
  c_facets->add_option("--kind", kind, "order|chain|eorder|echain|eorder-dual-form")
      ->required();

  auto* c_count = app.add_subcommand("count", "lattice points of the m-th dilation");
  add_common(c_count, opt);
  c_count->add_option("--kind", kind, "polytope kind")->required();
  c_count->add_option("-m,--max-value", m, "dilation factor (default 1)");

  auto* c_ehrhart = app.add_subcommand("ehrhart", "Ehrhart polynomial by interpolation");
  add_common(c_ehrhart, opt);
  c_ehrhart->add_option("--kind", kind, "polytope kind")->required();

  auto* c_opoly = app.add_subcommand("order-poly", "order polynomial of the poset");
  add_common(c_opoly, opt);
  Int poly_m = -1;
  c_opoly->add_option("-m,--max-value", poly_m, "largest argument to tabulate");

  auto* c_lpoly =
      app.add_subcommand("left-enriched-poly", "left enriched order polynomial");
  add_common(c_lpoly, opt);
  c_lpoly->add_option("-m,--max-value", poly_m, "largest argument to tabulate");

  auto* c_diff = app.add_subcommand(
      "diff-sets", "left enriched maps vs dilation points at the same m");
  add_common(c_diff, opt);
  Int diff_m = 2;
  c_diff->add_option("-m,--max-value", diff_m, "bound on |f| and dilation (default 2)");

  auto* c_groebner =
      app.add_subcommand("groebner", "toric generator families and their verification");
  add_common(c_groebner, opt);
  c_groebner->add_option("--kind", ring_kind, "O|C|Oe|Ce")->required();
  c_groebner->add_flag("--verify", flag_verify, "reduce every S-pair");
  c_groebner->add_flag("--initial", flag_initial, "initial-ideal minimal generators and flags");
  c_groebner->add_flag("--compare-initial", flag_compare,
                       "initial-ideal bijection with the partner ring");

  auto* c_reflexive = app.add_subcommand("reflexive", "reflexivity and lattice-span checks");
  add_common(c_reflexive, opt);
  c_reflexive->add_option("--kind", kind, "eorder|echain (default: both)");

  auto* c_symmetry = app.add_subcommand("symmetry", "central symmetry of the point set");
  add_common(c_symmetry, opt);
  std::string sym_kind = "eorder";
  c_symmetry->add_option("--kind", sym_kind, "polytope kind (default eorder)");

  auto* c_bounds = app.add_subcommand("bounds", "facet count bounds for size n");
  add_common(c_bounds, opt, false);
  c_bounds->add_option("-n", n_flag, "poset size (when no poset is given)");

  auto* c_scan = app.add_subcommand("scan-max-facets",
                                    "maximum facet counts over all posets of size n");
  add_common(c_scan, opt, false);
  c_scan->add_option("-n", n_flag, "poset size, 1..5")->required();

  auto* c_repro = app.add_subcommand("reproduce-paper",
                                     "run every example reproduction and acceptance criterion");
  add_common(c_repro, opt, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (c_info->parsed()) return verb_info(opt);
    if (c_points->parsed()) return verb_points(opt, kind);
    if (c_facets->parsed()) return verb_facets(opt, kind);
    if (c_count->parsed()) return verb_count(opt, kind, m);
    if (c_ehrhart->parsed()) return verb_ehrhart(opt, kind);
    if (c_opoly->parsed()) return verb_poly(opt, poly_m, false);
    if (c_lpoly->parsed()) return verb_poly(opt, poly_m, true);
    if (c_diff->parsed()) return verb_diff_sets(opt, diff_m);
    if (c_groebner->parsed())
      return verb_groebner(opt, ring_kind, flag_verify, flag_initial, flag_compare);
    if (c_reflexive->parsed()) return verb_reflexive(opt, kind);
    if (c_symmetry->parsed()) return verb_symmetry(opt, sym_kind);
    if (c_bounds->parsed()) return verb_bounds(opt, n_flag);
    if (c_scan->parsed()) return verb_scan_max_facets(opt, n_flag);
    if (c_repro->parsed()) return verb_reproduce_paper(opt);
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::logic_error& e) {
    std::cerr << "verification failure: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
