#include "hng/enumeration.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <regex>
#include <sstream>
#include <system_error>
#include <unordered_set>

#include "hng/error.hpp"
#include "hng/graph6.hpp"

namespace hng {

namespace fs = std::filesystem;

GraphCatalog extend_catalog(const GraphCatalog& parents) {
  const int n = parents.order + 1;
  if (n > kMaxEnumerationOrder) {
    throw Error(Errc::order_out_of_range, "enumeration supports orders 1..9, got " + std::to_string(n));
  }
  std::unordered_set<CanonicalCode, CanonicalCodeHash> seen;
  long long candidates = 0;
  for (const auto& parent : parents.codes) {
    const Graph base = parent.graph();
    for (VertexMask nb = 0; nb < bit(parents.order); ++nb) {
      seen.insert(canonical_code(add_vertex(base, nb)));
      ++candidates;
    }
  }
  GraphCatalog out;
  out.order = n;
  out.codes.assign(seen.begin(), seen.end());
  std::sort(out.codes.begin(), out.codes.end());
  out.provenance = {"extension", static_cast<long long>(parents.codes.size()), candidates};
  return out;
}

GraphCatalog enumerate_order(int n) {
  if (n < 1 || n > kMaxEnumerationOrder) {
    throw Error(Errc::order_out_of_range, "enumeration supports orders 1..9, got " + std::to_string(n));
  }
  GraphCatalog c;
  c.order = 1;
  c.codes.push_back(canonical_code(Graph(1)));
  c.provenance = {"extension", 1, 1};
  while (c.order < n) c = extend_catalog(c);
  return c;
}

std::vector<GraphCatalog> enumerate_up_to(int n) {
  if (n < 1 || n > kMaxEnumerationOrder) {
    throw Error(Errc::order_out_of_range, "enumeration supports orders 1..9, got " + std::to_string(n));
  }
  std::vector<GraphCatalog> out;
  out.push_back(enumerate_order(1));
  while (static_cast<int>(out.size()) < n) out.push_back(extend_catalog(out.back()));
  return out;
}

std::vector<std::vector<CanonicalCode>> enumerate_by_edges(int max_edges) {
  if (max_edges < 0 || 2 * max_edges > kMaxOrder) {
    throw Error(Errc::parameter_out_of_range, "edge bound must be in 0..16");
  }
  std::vector<std::vector<CanonicalCode>> levels(static_cast<std::size_t>(max_edges) + 1);
  levels[0].push_back(canonical_code(Graph(0)));
  Graph k2(2);
  k2.add_edge(0, 1);
  for (int m = 1; m <= max_edges; ++m) {
    std::unordered_set<CanonicalCode, CanonicalCodeHash> seen;
    for (const auto& code : levels[m - 1]) {
      const Graph g = code.graph();
      const int n = g.order();
      for (Vertex v = 1; v < n; ++v) {
        for (Vertex u = 0; u < v; ++u) {
          if (g.adjacent(u, v)) continue;
          Graph h = g;
          h.add_edge(u, v);
          seen.insert(canonical_code(h));
        }
      }
      for (Vertex u = 0; u < n; ++u) seen.insert(canonical_code(add_vertex(g, bit(u))));
      if (n + 2 <= kMaxOrder) seen.insert(canonical_code(disjoint_union(g, k2)));
    }
    levels[m].assign(seen.begin(), seen.end());
    std::sort(levels[m].begin(), levels[m].end());
  }
  return levels;
}

namespace {

std::string header_line(const GraphCatalog& c) {
  return "# hng-catalog version=" + std::to_string(kCatalogFormatVersion) +
         " order=" + std::to_string(c.order) + " count=" + std::to_string(c.codes.size());
}

[[noreturn]] void corrupt(const fs::path& path, std::size_t line, const std::string& why) {
  throw Error(Errc::corrupt_catalog, path.string() + ":" + std::to_string(line) + ": " + why);
}

}  // namespace

void store_catalog(const GraphCatalog& catalog, const fs::path& path) {
  std::error_code ec;
  if (path.has_parent_path()) fs::create_directories(path.parent_path(), ec);
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(Errc::io_error, "cannot write " + tmp.string());
    out << header_line(catalog) << '\n';
    for (const auto& code : catalog.codes) out << code.graph6() << '\n';
    out.flush();
    if (!out) throw Error(Errc::io_error, "write failed for " + tmp.string());
  }
  fs::rename(tmp, path, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw Error(Errc::io_error, "cannot rename onto " + path.string());
  }
}

GraphCatalog load_catalog(const fs::path& path, std::optional<int> expected_order) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::io_error, "cannot read " + path.string());
  GraphCatalog c;
  c.order = expected_order.value_or(0);
  c.provenance.method = "file";
  bool order_known = expected_order.has_value();
  std::string line;
  std::size_t lineno = 0;
  static const std::regex version_re(R"(version=(\d+))");
  static const std::regex order_re(R"(order=(\d+))");
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line[0] == '#') {
      std::smatch m;
      if (std::regex_search(line, m, version_re) && std::stoi(m[1]) != kCatalogFormatVersion) {
        throw Error(Errc::stale_cache, path.string() + " has format version " + m[1].str() +
                                           ", expected " + std::to_string(kCatalogFormatVersion) +
                                           "; delete it to regenerate");
      }
      if (std::regex_search(line, m, order_re)) {
        const int declared = std::stoi(m[1]);
        if (order_known && declared != c.order) corrupt(path, lineno, "header declares a different order");
        c.order = declared;
        order_known = true;
      }
      continue;
    }
    Graph g;
    try {
      g = graph6_decode(line);
    } catch (const Error& e) {
      corrupt(path, lineno, e.what());
    }
    if (!order_known) {
      c.order = g.order();
      order_known = true;
    } else if (g.order() != c.order) {
      corrupt(path, lineno, "graph of order " + std::to_string(g.order()) + " in a catalog of order " +
                                std::to_string(c.order));
    }
    const CanonicalCode code = CanonicalCode::of_labeled(g);
    if (!c.codes.empty() && !(c.codes.back() < code)) {
      corrupt(path, lineno, c.codes.back() == code ? "duplicate entry" : "entries not sorted");
    }
    c.codes.push_back(code);
  }
  c.provenance.candidates = static_cast<long long>(c.codes.size());
  return c;
}

CatalogCache::CatalogCache(fs::path dir) : dir_(std::move(dir)) {}

CatalogCache CatalogCache::from_environment() {
  const char* env = std::getenv("HNG_CACHE_DIR");
  return CatalogCache(env != nullptr && *env != '\0' ? fs::path(env) : fs::path(".hng-cache"));
}

fs::path CatalogCache::file_for(int order, int version) const {
  char name[64];
  std::snprintf(name, sizeof name, "graphs_n%02d.v%d.g6", order, version);
  return dir_ / name;
}

void CatalogCache::refuse_stale(int n) const {
  std::error_code ec;
  if (!fs::exists(dir_, ec)) return;
  char prefix[32];
  std::snprintf(prefix, sizeof prefix, "graphs_n%02d.v", n);
  const std::string current = file_for(n).filename().string();
  for (const auto& entry : fs::directory_iterator(dir_, ec)) {
    const std::string name = entry.path().filename().string();
    if (name.starts_with(prefix) && name.ends_with(".g6") && name != current) {
      throw Error(Errc::stale_cache, entry.path().string() + " was written by another format version; " +
                                         "delete it to regenerate");
    }
  }
}

const GraphCatalog& CatalogCache::get_existing(int n) {
  if (auto it = loaded_.find(n); it != loaded_.end()) return it->second;
  refuse_stale(n);
  const fs::path file = file_for(n);
  if (!fs::exists(file)) {
    throw Error(Errc::missing_dependency, "no catalog for order " + std::to_string(n) + " at " +
                                              file.string() + "; run `hng enumerate --n " +
                                              std::to_string(n) + "` first");
  }
  return loaded_[n] = load_catalog(file, n);
}

const GraphCatalog& CatalogCache::get(int n) {
  if (n < 1 || n > kMaxEnumerationOrder) {
    throw Error(Errc::order_out_of_range, "enumeration supports orders 1..9, got " + std::to_string(n));
  }
  if (auto it = loaded_.find(n); it != loaded_.end()) return it->second;
  refuse_stale(n);
  const fs::path file = file_for(n);
  if (fs::exists(file)) return loaded_[n] = load_catalog(file, n);
  GraphCatalog built;
  if (n == 1) {
    built = enumerate_order(1);
  } else {
    built = extend_catalog(get(n - 1));
  }
  store_catalog(built, file);
  return loaded_[n] = std::move(built);
}

}  // namespace hng
