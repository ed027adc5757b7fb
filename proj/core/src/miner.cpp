#include "hng/miner.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <unordered_map>

#include <nlohmann/json.hpp>

#include "hng/error.hpp"
#include "hng/families.hpp"
#include "hng/graph6.hpp"
#include "hng/invariants.hpp"
#include "hng/membership.hpp"
#include "hng/structure.hpp"

namespace hng {

namespace fs = std::filesystem;
using json = nlohmann::json;

HereditaryPredicate predicate_by_name(std::string_view name) {
  const std::string id(name);
  if (name == "threshold") return {id, [](const Graph& g) { return is_threshold(g); }};
  if (name == "sum-perfect") return {id, [](const Graph& g) { return is_sum_perfect(g); }};
  if (name == "perfect") return {id, [](const Graph& g) { return is_perfect(g); }};
  if (name == "claw-free") return {id, [](const Graph& g) { return is_claw_free(g); }};
  if (name == "triangle-free") return {id, [](const Graph& g) { return is_triangle_free(g); }};
  if (name == "bipartite") return {id, [](const Graph& g) { return is_bipartite(g); }};
  if (name == "c5-free") return {id, [](const Graph& g) { return is_c5_free(g); }};
  if (name.ends_with("-hng")) {
    const std::string_view digits = name.substr(0, name.size() - 4);
    int a = -1;
    const auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), a);
    if (ec == std::errc() && end == digits.data() + digits.size() && a >= 0) {
      return {id, [a](const Graph& g) { return in_hng(g, a); }};
    }
  }
  throw Error(Errc::parameter_out_of_range, "unknown predicate '" + id + "'");
}

std::map<int, int> ObstructionSet::counts_by_order() const {
  std::map<int, int> counts;
  for (const auto& c : members) ++counts[c.order()];
  return counts;
}

bool ObstructionSet::contains(const CanonicalCode& code) const {
  return std::binary_search(members.begin(), members.end(), code);
}

std::vector<Graph> ObstructionSet::graphs() const {
  std::vector<Graph> out;
  out.reserve(members.size());
  for (const auto& c : members) out.push_back(c.graph());
  return out;
}

std::uint64_t ObstructionSet::hash() const {
  std::uint64_t h = 1469598103934665603ULL;
  for (const auto& c : members) {
    for (unsigned char ch : c.graph6() + "\n") {
      h ^= ch;
      h *= 1099511628211ULL;
    }
  }
  return h;
}

bool check_complement_closure(ObstructionSet& set) {
  bool closed = true;
  for (const auto& c : set.members) {
    if (!set.contains(canonical_code(complement(c.graph())))) {
      closed = false;
      break;
    }
  }
  set.complement_closed = closed;
  return closed;
}

bool is_antichain(const ObstructionSet& set) {
  const auto gs = set.graphs();
  for (std::size_t i = 0; i < gs.size(); ++i) {
    for (std::size_t j = 0; j < gs.size(); ++j) {
      if (i == j || gs[j].order() > gs[i].order()) continue;
      const bool inside = set.containment == ContainmentOrder::induced
                              ? contains_induced(gs[i], gs[j]).has_value()
                              : contains_subgraph(gs[i], gs[j]).has_value();
      if (inside) return false;
    }
  }
  return true;
}

std::optional<ObstructionHit> find_obstruction(const Graph& g, const ObstructionSet& set) {
  for (std::size_t i = 0; i < set.members.size(); ++i) {
    const Graph pattern = set.members[i].graph();
    if (pattern.order() > g.order()) continue;
    if (set.containment == ContainmentOrder::induced) {
      if (auto s = contains_induced(g, pattern)) return ObstructionHit{i, *s};
    } else {
      if (pattern.edge_count() > g.edge_count()) continue;
      if (auto m = contains_subgraph(g, pattern)) {
        VertexMask s = 0;
        for (Vertex v : *m) s |= bit(v);
        return ObstructionHit{i, s};
      }
    }
  }
  return std::nullopt;
}

ObstructionSet mine_minimal_fis(const HereditaryPredicate& predicate, int n_max, CatalogCache* cache) {
  if (n_max < 1 || n_max > kMaxEnumerationOrder) {
    throw Error(Errc::order_out_of_range, "mining supports n_max in 1..9, got " + std::to_string(n_max));
  }
  ObstructionSet out;
  out.name = predicate.id + "-obstructions";
  out.provenance = {predicate.id, "minimal-failing-by-vertex-deletion", n_max, 0};

  std::unordered_map<CanonicalCode, bool, CanonicalCodeHash> previous;
  GraphCatalog in_memory;
  for (int n = 1; n <= n_max; ++n) {
    const GraphCatalog* catalog = nullptr;
    if (cache != nullptr) {
      catalog = &cache->get(n);
    } else {
      in_memory = n == 1 ? enumerate_order(1) : extend_catalog(in_memory);
      catalog = &in_memory;
    }
    std::unordered_map<CanonicalCode, bool, CanonicalCodeHash> current;
    current.reserve(catalog->codes.size());
    for (const auto& code : catalog->codes) {
      const Graph g = code.graph();
      bool deletions_hold = true;
      for (Vertex v = 0; v < n && deletions_hold; ++v) {
        if (n == 1) break;
        deletions_hold = previous.at(canonical_code(delete_vertex(g, v)));
      }
      // A hereditary property fails on g as soon as it fails on a deletion.
      const bool holds = deletions_hold && predicate.holds(g);
      current.emplace(code, holds);
      if (deletions_hold && !holds) out.members.push_back(code);
    }
    previous = std::move(current);
  }
  std::sort(out.members.begin(), out.members.end());
  return out;
}

ObstructionSet derive_F(int n_max, CatalogCache* cache) {
  ObstructionSet f = mine_minimal_fis(predicate_by_name("1-hng"), n_max, cache);
  f.name = "F";
  auto& fs_part = f.parts["F_S"];
  auto& fc_part = f.parts["F_C"];
  for (const auto& c : f.members) (is_c5_free(c.graph()) ? fs_part : fc_part).push_back(c);
  check_complement_closure(f);
  return f;
}

namespace {

ObstructionSet with_extra_member(const ObstructionSet& f, const std::string& name, const Graph& extra,
                                 const std::string& method, bool (*keep)(const Graph&)) {
  ObstructionSet out;
  out.name = name;
  out.provenance = {f.provenance.predicate, method, f.provenance.order_bound, 0};
  out.members.push_back(canonical_code(extra));
  for (const auto& c : f.members) {
    if (keep(c.graph())) out.members.push_back(c);
  }
  std::sort(out.members.begin(), out.members.end());
  out.members.erase(std::unique(out.members.begin(), out.members.end()), out.members.end());
  return out;
}

}  // namespace

ObstructionSet derive_claw_obstructions(const ObstructionSet& f) {
  return with_extra_member(f, "B", claw(), "claw plus claw-free members of F", is_claw_free);
}

ObstructionSet derive_trianglefree_obstructions(const ObstructionSet& f) {
  return with_extra_member(f, "triangle-free", complete(3), "K3 plus triangle-free members of F",
                           is_triangle_free);
}

ObstructionSet derive_line_obstructions(int max_edges) {
  ObstructionSet out;
  out.name = "A";
  out.containment = ContainmentOrder::subgraph;
  out.provenance = {"line-graph-in-1-hng", "minimal-failing-by-edge-deletion", 0, max_edges};
  const auto levels = enumerate_by_edges(max_edges);
  for (const auto& level : levels) {
    for (const auto& code : level) {
      const Graph h = code.graph();
      if (h.edge_count() == 0) continue;
      const Graph lg = line_graph(h);
      if (in_hng(lg, 1)) continue;
      // Deleting edge e of H deletes vertex e of L(H).
      bool minimal = true;
      for (Vertex e = 0; e < lg.order() && minimal; ++e) minimal = in_hng(delete_vertex(lg, e), 1);
      if (minimal) out.members.push_back(code);
    }
  }
  std::sort(out.members.begin(), out.members.end());
  return out;
}

void save_obstruction_set(const ObstructionSet& set, const fs::path& path) {
  std::error_code ec;
  if (path.has_parent_path()) fs::create_directories(path.parent_path(), ec);
  auto write_atomic = [](const fs::path& target, const std::string& body) {
    fs::path tmp = target;
    tmp += ".tmp";
    {
      std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
      if (!out) throw Error(Errc::io_error, "cannot write " + tmp.string());
      out << body;
      if (!out) throw Error(Errc::io_error, "write failed for " + tmp.string());
    }
    std::error_code rename_ec;
    fs::rename(tmp, target, rename_ec);
    if (rename_ec) throw Error(Errc::io_error, "cannot rename onto " + target.string());
  };

  std::string lines;
  for (const auto& c : set.members) lines += c.graph6() + "\n";

  json meta;
  meta["schema_version"] = 1;
  meta["name"] = set.name;
  meta["containment"] = set.containment == ContainmentOrder::induced ? "induced" : "subgraph";
  meta["size"] = set.members.size();
  json counts = json::object();
  for (auto [order, count] : set.counts_by_order()) counts[std::to_string(order)] = count;
  meta["counts_by_order"] = counts;
  json parts = json::object();
  for (const auto& [name, codes] : set.parts) {
    json list = json::array();
    for (const auto& c : codes) list.push_back(c.graph6());
    parts[name] = list;
  }
  meta["parts"] = parts;
  meta["provenance"] = {{"predicate", set.provenance.predicate},
                        {"method", set.provenance.method},
                        {"order_bound", set.provenance.order_bound},
                        {"edge_bound", set.provenance.edge_bound}};
  meta["complement_closed"] = set.complement_closed ? json(*set.complement_closed) : json(nullptr);
  char hash[17];
  std::snprintf(hash, sizeof hash, "%016llx", static_cast<unsigned long long>(set.hash()));
  meta["hash"] = hash;

  write_atomic(path, lines);
  fs::path sidecar = path;
  sidecar += ".json";
  write_atomic(sidecar, meta.dump(2) + "\n");
}

ObstructionSet load_obstruction_set(const fs::path& path) {
  fs::path sidecar = path;
  sidecar += ".json";
  std::ifstream lines_in(path, std::ios::binary);
  std::ifstream meta_in(sidecar, std::ios::binary);
  if (!lines_in || !meta_in) {
    throw Error(Errc::missing_obstruction_set, "cannot read " + path.string() + " and its .json sidecar");
  }
  ObstructionSet set;
  try {
    const json meta = json::parse(meta_in);
    set.name = meta.at("name").get<std::string>();
    set.containment =
        meta.at("containment").get<std::string>() == "subgraph" ? ContainmentOrder::subgraph : ContainmentOrder::induced;
    const json& prov = meta.at("provenance");
    set.provenance = {prov.at("predicate").get<std::string>(), prov.at("method").get<std::string>(),
                      prov.at("order_bound").get<int>(), prov.at("edge_bound").get<int>()};
    if (!meta.at("complement_closed").is_null()) set.complement_closed = meta["complement_closed"].get<bool>();
    for (const auto& [name, list] : meta.at("parts").items()) {
      auto& codes = set.parts[name];
      for (const auto& line : list) codes.push_back(CanonicalCode::of_labeled(graph6_decode(line.get<std::string>())));
    }
  } catch (const json::exception& e) {
    throw Error(Errc::corrupt_catalog, sidecar.string() + ": " + e.what());
  }
  std::string line;
  while (std::getline(lines_in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    set.members.push_back(canonical_code(graph6_decode(line)));
  }
  std::sort(set.members.begin(), set.members.end());
  return set;
}

}  // namespace hng
