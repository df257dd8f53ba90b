// mfc: command-line front end. Prints one JSON document per run.

#include <chrono>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "mfc/mfc.hpp"

using json = nlohmann::ordered_json;
using namespace mfc;

namespace {

constexpr int kOk = 0, kVerificationFailed = 1, kInputError = 2, kResourceGuard = 3;

struct CommonOptions {
  std::string gen;
  std::string facets;
  unsigned threads = 1;
  std::size_t guard = 40;

  [[nodiscard]] Limits limits() const { return {guard, threads}; }
  [[nodiscard]] SimplicialComplex load() const { return facets.empty() ? generate(gen) : load_facet_file(facets); }
  [[nodiscard]] std::string source() const { return facets.empty() ? "gen:" + gen : "facets:" + facets; }
};

void add_common(CLI::App* app, CommonOptions& o) {
  auto* g = app->add_option("--gen", o.gen, "generated family, e.g. cycle:5, complete:4, simplex:3, pseudotree:3:0");
  auto* f = app->add_option("--facets", o.facets, "facet file, one facet per line");
  g->excludes(f);
  f->excludes(g);
  app->add_option("--threads", o.threads, "worker threads")->check(CLI::Range(1u, 256u));
  app->add_option("--guard", o.guard, "largest face-poset arc count accepted for matching enumeration");
}

json header(const std::string& command, const CommonOptions& o, const SimplicialComplex& X) {
  json j;
  j["schema"] = "mfc/1";
  j["command"] = command;
  j["input"] = o.source();
  j["f_vector"] = X.f_vector();
  return j;
}

json ranks_json(const HomologyTable& h) {
  json out = json::array();
  for (const auto& [key, r] : h.ranks) out.push_back({{"degree", key.first}, {"rank", r}});
  return out;
}

json torsion_json(const HomologyTable& h) {
  json out = json::array();
  for (const auto& [d, factors] : h.torsion) {
    if (factors.empty()) continue;
    json f = json::array();
    for (const auto& v : factors) f.push_back(v.str());
    out.push_back({{"degree", d}, {"factors", f}});
  }
  return out;
}

json bigraded_json(const HomologyTable& h) {
  json out = json::array();
  for (const auto& [key, r] : h.ranks) out.push_back({{"i", key.first}, {"j", key.second}, {"rank", r}});
  return out;
}

json poly_json(const EulerPolynomial& p) { return p.to_vector(); }

json homology_entry(const SimplicialComplex& X, int k, bool integer, bool reduced, const Limits& limits) {
  auto M = filtration_complex(X, k, limits);
  auto h = integer ? simplicial_homology_integer(M, reduced) : simplicial_homology_mod2(M, reduced);
  json e{{"k", k}, {"simplices", M.size()}, {"homology", ranks_json(h)}};
  if (integer) e["torsion"] = torsion_json(h);
  return e;
}

int cmd_info(const CommonOptions& o) {
  auto X = o.load();
  FacePoset F(X);
  auto j = header("info", o, X);
  j["dimension"] = X.dimension();
  j["poset_nodes"] = F.node_count();
  j["poset_arcs"] = F.arc_count();
  check_arc_guard(F.arc_count(), o.limits());
  MatchingLevels levels(PosetSubgraph::full(F));
  std::vector<std::size_t> by_size;
  for (std::size_t s = 0; s < levels.level_count(); ++s) by_size.push_back(levels.count(s));
  j["matchings_by_size"] = by_size;
  j["acyclic_matchings"] = count_acyclic_matchings(F);
  j["eta"] = eta(X, o.limits());
  std::map<std::string, std::size_t> census;
  for (auto kind : {CollectionKind::empty, CollectionKind::non_maximal, CollectionKind::maximal}) census[to_string(kind)] = 0;
  std::map<std::size_t, std::size_t> by_count;
  for (const auto& sc : supported_collections(X, o.limits())) {
    ++census[to_string(sc.cycles.kind())];
    ++by_count[sc.cycles.count()];
  }
  j["supported_collections"] = census;
  json counts = json::array();
  for (auto [c, n] : by_count) counts.push_back({{"cycles", c}, {"collections", n}});
  j["collections_by_cycle_count"] = counts;
  if (X.is_graph()) {
    j["eta_vertex_disjoint_cycles"] = eta_via_cycles(X);
    j["two_factors"] = two_factors(X).size();
  }
  std::cout << j.dump() << "\n";
  return kOk;
}

int cmd_homology(const CommonOptions& o, std::optional<int> k, const std::string& coeff, bool reduced) {
  auto X = o.load();
  auto j = header("homology", o, X);
  const bool integer = coeff == "z";
  j["coefficients"] = integer ? "Z" : "F2";
  j["reduced"] = reduced;
  json entries = json::array();
  if (k) {
    entries.push_back(homology_entry(X, *k, integer, reduced, o.limits()));
  } else {
    const int top = static_cast<int>(eta(X, o.limits()));
    for (int t = 0; t <= top; ++t) entries.push_back(homology_entry(X, t, integer, reduced, o.limits()));
  }
  j["filtration"] = entries;
  std::cout << j.dump() << "\n";
  return kOk;
}

int cmd_hh(const CommonOptions& o, bool reduced) {
  auto X = o.load();
  auto j = header("hh", o, X);
  j["reduced"] = reduced;
  j["ranks"] = bigraded_json(horizontal_homology(X, reduced, o.limits()));
  std::cout << j.dump() << "\n";
  return kOk;
}

int cmd_dh(const CommonOptions& o) {
  auto X = o.load();
  auto j = header("dh", o, X);
  j["ranks"] = bigraded_json(diagonal_homology(X, o.limits()));
  std::cout << j.dump() << "\n";
  return kOk;
}

int cmd_decat(const CommonOptions& o, bool reduced) {
  auto X = o.load();
  auto j = header("decat", o, X);
  j["reduced"] = reduced;
  j["chi_t"] = poly_json(chi_t(X, reduced, o.limits()));
  if (X.is_graph()) {
    auto L = laplacian(X);
    j["laplacian"] = L.laplacian;
    j["charpoly"] = L.charpoly;
    j["charpoly_L_minus_x"] = L.charpoly_signed;
    j["rho"] = L.rho;
    j["det_id_plus_L"] = L.det_id_plus_l;
    j["det_id_minus_L"] = L.det_id_minus_l;
    auto terms = chi_t_graph_terms(X);
    j["chi_t_graph"] = poly_json(terms.shifted);
    j["chi_t_graph_unsigned_complement"] = poly_json(terms.unsigned_complement);
  }
  std::cout << j.dump() << "\n";
  return kOk;
}

int cmd_verify(const CommonOptions& o, const std::string& rule_name) {
  auto X = o.load();
  auto j = header("verify", o, X);
  const auto rule = rule_name == "ambient" ? ComplementRule::ambient : ComplementRule::standalone;
  auto cc = BigradedChainComplex::build(X, o.limits());
  auto d = verify_differentials(cc);
  auto word = [](bool zero) { return zero ? "zero" : "nonzero"; };
  j["dJ_squared"] = word(d.horizontal_squared_zero);
  j["d_squared"] = word(d.full_squared_zero && d.full_squared_zero_integer);
  if (X.is_graph()) j["dd_squared"] = word(d.diagonal_squared_zero);
  auto r = verify_decomposition(X, rule, o.limits());
  j["decomposition"] = r.pass ? "match" : "mismatch";
  j["complement_rule"] = to_string(rule);
  j["standalone"] = r.standalone_matches ? "match" : "mismatch";
  j["ambient"] = r.ambient_matches ? "match" : "mismatch";
  if (r.graph_form_matches) j["graph_form"] = *r.graph_form_matches ? "match" : "mismatch";
  if (r.first_mismatch) j["first_mismatch"] = {r.first_mismatch->first, r.first_mismatch->second};
  const bool ok = d.horizontal_squared_zero && d.full_squared_zero && d.full_squared_zero_integer &&
                  (!X.is_graph() || d.diagonal_squared_zero) && r.pass;
  std::cout << j.dump() << "\n";
  return ok ? kOk : kVerificationFailed;
}

struct Row {
  std::string table;
  std::string spec;
  int k;
  std::map<int, std::size_t> expected;
};

int cmd_reproduce(const CommonOptions& o, int table, double budget) {
  const std::vector<Row> rows = {
      {"1", "simplex:2", 0, {{1, 4}}},          {"1", "simplex:2", 1, {{1, 2}}},
      {"1", "simplex:3", 0, {{4, 99}}},         {"1", "simplex:3", 1, {{4, 39}}},
      {"1", "simplex:3", 2, {{4, 39}}},         {"2", "complete:3", 0, {{1, 4}}},
      {"2", "complete:3", 1, {{1, 2}}},         {"2", "complete:4", 0, {{2, 27}}},
      {"2", "complete:4", 1, {{2, 5}}},         {"2", "complete:5", 0, {{3, 256}}},
      {"2", "complete:5", 1, {{3, 5}, {4, 23}}}, {"2", "complete:6", 0, {{4, 3125}}},
      {"2", "complete:6", 1, {{4, 6}, {5, 927}}}, {"2", "complete:6", 2, {{4, 6}, {5, 967}}},
  };
  json j;
  j["schema"] = "mfc/1";
  j["command"] = "reproduce";
  j["budget_seconds"] = budget;
  json out = json::array();
  bool all_match = true;
  const auto start = std::chrono::steady_clock::now();
  for (const auto& row : rows) {
    if (table != 0 && row.table != std::to_string(table)) continue;
    json e{{"table", row.table}, {"complex", row.spec}, {"k", row.k}};
    const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (elapsed > budget) {
      e["status"] = "skipped";
      out.push_back(e);
      continue;
    }
    auto t0 = std::chrono::steady_clock::now();
    auto h = filtered_homology(generate(row.spec), row.k, o.limits());
    std::map<int, std::size_t> got;
    for (const auto& [key, r] : h.ranks) got[key.first] += r;
    const bool match = got == row.expected && h.torsion_free();
    all_match = all_match && match;
    e["homology"] = ranks_json(h);
    e["torsion"] = torsion_json(h);
    e["status"] = match ? "match" : "mismatch";
    std::cerr << row.spec << " k=" << row.k << ": "
              << std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() << " s\n";
    out.push_back(e);
  }
  j["rows"] = out;
  std::cout << j.dump() << "\n";
  return all_match ? kOk : kVerificationFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Matching complexes of face posets: filtered and bigraded homology"};
  app.require_subcommand(1);
  CommonOptions common;

  auto* info = app.add_subcommand("info", "sizes, eta and the supported-collection census");
  add_common(info, common);

  auto* homology = app.add_subcommand("homology", "homology of the filtration complexes M_k");
  add_common(homology, common);
  std::optional<int> k;
  std::string coeff = "z";
  bool unreduced = false;
  homology->add_option("--k", k, "filtration level (default: every level up to eta)");
  homology->add_option("--coeff", coeff, "coefficients")->check(CLI::IsMember({"z", "f2"}));
  auto* h_red = homology->add_flag("--reduced", "reduced homology (default)");
  auto* h_unred = homology->add_flag("--unreduced", unreduced, "unreduced homology");
  h_red->excludes(h_unred);

  auto* hh = app.add_subcommand("hh", "horizontal homology, bigraded");
  add_common(hh, common);
  bool hh_reduced = false;
  auto* hh_red = hh->add_flag("--reduced", hh_reduced, "include the empty matching at (-1, 0)");
  auto* hh_unred = hh->add_flag("--unreduced", "unreduced (default)");
  hh_red->excludes(hh_unred);

  auto* dh = app.add_subcommand("dh", "diagonal homology of a graph, bigraded");
  add_common(dh, common);

  auto* decat = app.add_subcommand("decat", "graded Euler characteristic and Laplacian data");
  add_common(decat, common);
  bool decat_unreduced = false;
  auto* d_red = decat->add_flag("--reduced", "reduced convention (default)");
  auto* d_unred = decat->add_flag("--unreduced", decat_unreduced, "unreduced convention");
  d_red->excludes(d_unred);

  auto* verify = app.add_subcommand("verify", "differential and decomposition checks");
  add_common(verify, common);
  std::string rule = "standalone";
  verify->add_option("--complement-rule", rule, "how complement complexes are cut out")
      ->check(CLI::IsMember({"standalone", "ambient"}));

  auto* reproduce = app.add_subcommand("reproduce", "recompute the reference homology tables");
  reproduce->add_option("--threads", common.threads, "worker threads")->check(CLI::Range(1u, 256u));
  reproduce->add_option("--guard", common.guard, "largest face-poset arc count accepted for matching enumeration");
  int table = 0;
  double budget = 600;
  reproduce->add_option("--table", table, "1: simplices, 2: complete graphs (default: both)")->check(CLI::IsMember({0, 1, 2}));
  reproduce->add_option("--budget", budget, "seconds; rows starting after the budget is spent are skipped");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e, std::cerr, std::cerr);
    std::cerr << app.help();
    return kInputError;
  }

  auto* used = app.get_subcommands().front();
  if (used != reproduce && common.gen.empty() && common.facets.empty()) {
    std::cerr << "one of --gen or --facets is required\n" << used->help();
    return kInputError;
  }

  try {
    if (used == info) return cmd_info(common);
    if (used == homology) return cmd_homology(common, k, coeff, !unreduced);
    if (used == hh) return cmd_hh(common, hh_reduced);
    if (used == dh) return cmd_dh(common);
    if (used == decat) return cmd_decat(common, !decat_unreduced);
    if (used == verify) return cmd_verify(common, rule);
    return cmd_reproduce(common, table, budget);
  } catch (const ResourceError& e) {
    std::cerr << "resource guard: " << e.what() << "\n";
    return kResourceGuard;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const PreconditionError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  }
}
