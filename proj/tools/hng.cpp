#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "hng/canon.hpp"
#include "hng/enumeration.hpp"
#include "hng/error.hpp"
#include "hng/graph6.hpp"
#include "hng/invariants.hpp"
#include "hng/membership.hpp"
#include "hng/miner.hpp"
#include "hng/structure.hpp"
#include "hng/verify.hpp"

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitError = 2;

json vertex_list(hng::VertexMask m) { return hng::to_vertices(m); }

/// Loads a named obstruction set from the cache directory, deriving and
/// storing it on first use.
hng::ObstructionSet obstruction_set(const std::string& name, hng::CatalogCache& cache, int max_edges = 8) {
  const fs::path file = cache.dir() / (name + ".g6");
  if (fs::exists(file)) return hng::load_obstruction_set(file);
  hng::ObstructionSet set;
  if (name == "f") {
    set = hng::derive_F(8, &cache);
  } else if (name == "claw") {
    set = hng::derive_claw_obstructions(obstruction_set("f", cache));
  } else if (name == "triangle") {
    set = hng::derive_trianglefree_obstructions(obstruction_set("f", cache));
  } else if (name == "line-obstructions") {
    set = hng::derive_line_obstructions(max_edges);
  } else {
    throw hng::Error(hng::Errc::usage, "unknown obstruction set '" + name + "'");
  }
  fs::create_directories(cache.dir());
  hng::save_obstruction_set(set, file);
  return set;
}

void print(const json& j, const std::string& format) {
  if (format == "json") {
    std::cout << j.dump(2) << '\n';
    return;
  }
  for (const auto& [key, value] : j.items()) {
    std::cout << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
  }
}

json invariants_json(const hng::Graph& g) {
  const auto r = hng::compute_invariants(g);
  const auto d = hng::hereditary_ng_defect(g);
  json j;
  j["graph6"] = hng::graph6_encode(g);
  j["order"] = r.order;
  j["edges"] = g.edge_count();
  j["omega"] = r.omega;
  j["alpha"] = r.alpha;
  j["chi"] = r.chi;
  j["theta"] = r.theta;
  j["nu"] = r.nu;
  j["flags"] = {{"bipartite", r.flags.bipartite},     {"triangle-free", r.flags.triangle_free},
                {"claw-free", r.flags.claw_free},     {"c5-free", r.flags.c5_free},
                {"perfect", r.flags.perfect},         {"threshold", r.flags.threshold},
                {"sum-perfect", r.flags.sum_perfect}};
  j["defect"] = d.defect;
  j["hereditary_defect"] = d.hereditary_defect;
  j["witness"] = vertex_list(d.witness);
  return j;
}

struct Options {
  std::string graph6;
  std::string format = "text";
  std::string out;
  std::string predicate;
  std::string set_name;
  std::string theorem;
  std::string suite = "all";
  int n = 8;
  int a = 1;
  bool timing = false;
  hng::SuiteOptions suite_options;
};

int run_verify(const Options& o, hng::CatalogCache& cache) {
  hng::SuiteOptions so = o.suite_options;
  so.cache = &cache;
  hng::VerificationContext ctx(so);
  std::vector<std::string> ids;
  if (o.suite == "all") {
    ids = hng::suite_ids();
  } else {
    ids.push_back(o.suite);
  }
  std::ofstream file;
  if (!o.out.empty()) {
    file.open(o.out);
    if (!file) throw hng::Error(hng::Errc::io_error, "cannot open " + o.out);
  }
  std::ostream& out = o.out.empty() ? std::cout : file;
  const auto format = o.format == "json" ? hng::ReportFormat::json : hng::ReportFormat::text;
  bool all_pass = true;
  for (const auto& id : ids) {
    const auto report = hng::run_suite(id, ctx);
    hng::emit_report(report, format, out, o.timing);
    all_pass = all_pass && report.passed();
  }
  return all_pass ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hereditary Nordhaus-Gaddum graph classes: invariants, obstruction sets and verification suites"};
  app.require_subcommand(1);
  Options o;
  const char* cache_help = "Catalogs and obstruction sets live in $HNG_CACHE_DIR (default .hng-cache)";
  app.footer(cache_help);

  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  };

  auto* enumerate = app.add_subcommand("enumerate", "Build the catalog of graphs of one order");
  enumerate->add_option("--n", o.n, "Order")->required()->check(CLI::Range(1, hng::kMaxEnumerationOrder));
  enumerate->add_option("--out", o.out, "Catalog file (default: the cache directory)");

  auto* mine = app.add_subcommand("mine", "Minimal forbidden induced subgraphs of a hereditary class");
  mine->add_option("--class", o.predicate, "threshold, sum-perfect, perfect, claw-free, triangle-free, "
                                           "bipartite, c5-free or <a>-hng")->required();
  mine->add_option("--nmax", o.n, "Largest order searched")->check(CLI::Range(1, hng::kMaxEnumerationOrder));
  mine->add_option("--out", o.out, "Obstruction file (a .json sidecar is written next to it)");

  auto* derive = app.add_subcommand("derive", "Derive a named obstruction set");
  derive->add_option("--set", o.set_name, "Set name")
      ->required()
      ->check(CLI::IsMember({"f", "claw", "triangle", "line-obstructions"}));
  derive->add_option("--max-edges", o.suite_options.max_edges, "Edge bound for line-obstructions")
      ->check(CLI::Range(1, 16));
  derive->add_option("--out", o.out, "Obstruction file (default: the cache directory)");

  auto* invariants = app.add_subcommand("invariants", "Exact invariants and defects of a graph");
  invariants->add_option("graph6", o.graph6)->required();
  add_format(invariants);

  auto* membership = app.add_subcommand("membership", "a-NG and a-HNG membership");
  membership->add_option("graph6", o.graph6)->required();
  membership->add_option("--amax", o.a, "Largest a reported")->check(CLI::Range(0, 16));
  add_format(membership);

  auto* profile = app.add_subcommand("profile-c5", "Vertex types relative to an induced C5");
  profile->add_option("graph6", o.graph6)->required();
  add_format(profile);

  auto* fast = app.add_subcommand("fast-invariants", "Polynomial-time algorithms for 1-HNG graphs");
  fast->add_option("graph6", o.graph6)->required();
  add_format(fast);

  auto* check = app.add_subcommand("check", "Evaluate the clauses of a characterization on one graph");
  check->add_option("--theorem", o.theorem, "5.1, 5.3 or 5.5")
      ->required()
      ->check(CLI::IsMember({"5.1", "5.3", "5.5", "thm-5.1", "thm-5.3", "thm-5.5"}));
  check->add_option("graph6", o.graph6)->required();
  add_format(check);

  auto* verify = app.add_subcommand("verify", "Run verification suites");
  auto& so = o.suite_options;
  verify->add_option("--suite", o.suite, "Suite id or 'all'")->check([](const std::string& s) {
    if (s == "all") return std::string();
    for (const auto& id : hng::suite_ids()) {
      if (id == s) return std::string();
    }
    return "unknown suite '" + s + "'";
  });
  verify->add_option("--nmax", so.n_max, "Order bound for exhaustive phases")
      ->check(CLI::Range(1, hng::kMaxEnumerationOrder));
  verify->add_option("--amax", so.a_max, "Inclusion chain checked for a < amax")->check(CLI::Range(0, 8));
  verify->add_option("--seed", so.seed, "Seed for sampled phases");
  verify->add_option("--samples", so.samples, "Sampled graphs per sampled phase")->check(CLI::NonNegativeNumber);
  verify->add_option("--max-edges", so.max_edges, "Edge bound for the line-graph suite")->check(CLI::Range(1, 16));
  verify->add_option("--out", o.out, "Write the reports here instead of stdout");
  verify->add_flag("--timing", o.timing, "Include per-phase wall-clock times");
  add_format(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitError;
  }

  try {
    hng::CatalogCache cache = hng::CatalogCache::from_environment();
    auto graph = [&] { return hng::graph6_decode(o.graph6); };

    if (*enumerate) {
      if (o.out.empty()) {
        const auto& c = cache.get(o.n);
        std::cout << "order " << o.n << ": " << c.size() << " graphs -> " << cache.file_for(o.n).string() << '\n';
      } else {
        const auto c = o.n == 1 ? hng::enumerate_order(1) : hng::extend_catalog(cache.get(o.n - 1));
        hng::store_catalog(c, o.out);
        std::cout << "order " << o.n << ": " << c.size() << " graphs -> " << o.out << '\n';
      }
      return kExitPass;
    }
    if (*mine) {
      const auto set = hng::mine_minimal_fis(hng::predicate_by_name(o.predicate), o.n, &cache);
      const fs::path file = o.out.empty() ? cache.dir() / (o.predicate + ".g6") : fs::path(o.out);
      if (o.out.empty()) fs::create_directories(cache.dir());
      hng::save_obstruction_set(set, file);
      std::cout << set.members.size() << " minimal obstructions -> " << file.string() << '\n';
      return kExitPass;
    }
    if (*derive) {
      const auto set = obstruction_set(o.set_name, cache, so.max_edges);
      if (!o.out.empty()) hng::save_obstruction_set(set, o.out);
      std::cout << set.name << ": " << set.members.size() << " members";
      for (const auto& [order, count] : set.counts_by_order()) std::cout << ' ' << order << ':' << count;
      std::cout << '\n';
      return kExitPass;
    }
    if (*invariants) {
      print(invariants_json(graph()), o.format);
      return kExitPass;
    }
    if (*membership) {
      const auto g = graph();
      const auto d = hng::hereditary_ng_defect(g);
      json j;
      j["graph6"] = hng::graph6_encode(g);
      j["defect"] = d.defect;
      j["hereditary_defect"] = d.hereditary_defect;
      j["witness"] = vertex_list(d.witness);
      for (int a = 0; a <= o.a; ++a) {
        j["in_" + std::to_string(a) + "-NG"] = d.defect <= a;
        j["in_" + std::to_string(a) + "-HNG"] = d.hereditary_defect <= a;
      }
      print(j, o.format);
      return kExitPass;
    }
    if (*profile) {
      const auto g = graph();
      json j;
      j["graph6"] = hng::graph6_encode(g);
      const auto p = hng::find_induced_c5(g);
      j["has_c5"] = p.has_value();
      if (p) {
        j["c5"] = p->c5;
        json types = json::object();
        for (const auto& [v, t] : p->types) types[std::to_string(v)] = hng::type_name(t);
        j["types"] = types;
        json normalized = json::object();
        for (const auto& [v, t] : p->normalized()) normalized[std::to_string(v)] = hng::type_name(t);
        j["normalized"] = normalized;
      }
      print(j, o.format);
      return kExitPass;
    }
    if (*fast) {
      const auto g = graph();
      const auto f = obstruction_set("f", cache);
      json j;
      j["graph6"] = hng::graph6_encode(g);
      const bool member = hng::is_1hng_fast(g, f);
      j["in_1-HNG"] = member;
      bool agree = member == hng::in_hng(g, 1);
      if (member) {
        const int values[4] = {hng::clique_number_fast(g, f), hng::independence_number_fast(g, f),
                               hng::chromatic_number_fast(g, f), hng::clique_cover_number_fast(g, f)};
        const int exact[4] = {hng::clique_number(g), hng::independence_number(g), hng::chromatic_number(g),
                              hng::clique_cover_number(g)};
        const char* names[4] = {"omega", "alpha", "chi", "theta"};
        for (int i = 0; i < 4; ++i) {
          j[names[i]] = values[i];
          agree = agree && values[i] == exact[i];
        }
        const auto apex = hng::apex_perfect_witness(g, f);
        j["perfect"] = apex.already_perfect;
        if (apex.vertex) j["apex_vertex"] = *apex.vertex;
      }
      j["agrees_with_exact"] = agree;
      print(j, o.format);
      return agree ? kExitPass : kExitFail;
    }
    if (*check) {
      const auto g = graph();
      const std::string t = o.theorem.starts_with("thm-") ? o.theorem.substr(4) : o.theorem;
      const auto f = obstruction_set("f", cache);
      hng::CharacterizationSets sets{&f, nullptr, nullptr, nullptr};
      hng::ObstructionSet extra;
      hng::Characterization which = hng::Characterization::thm_5_1;
      if (t == "5.1") {
        extra = obstruction_set("line-obstructions", cache);
        sets.line = &extra;
      } else if (t == "5.3") {
        which = hng::Characterization::thm_5_3;
        extra = obstruction_set("claw", cache);
        sets.claw = &extra;
      } else {
        which = hng::Characterization::thm_5_5;
        extra = obstruction_set("triangle", cache);
        sets.triangle = &extra;
      }
      const auto r = hng::check_characterization(which, g, sets);
      json j;
      j["graph6"] = hng::graph6_encode(g);
      for (const auto& c : r.clauses) j[c.clause] = c.value;
      j["consistent"] = r.consistent;
      print(j, o.format);
      return r.consistent ? kExitPass : kExitFail;
    }
    if (*verify) return run_verify(o, cache);
  } catch (const hng::Error& e) {
    std::cerr << "hng: " << e.what() << '\n';
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "hng: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}
