#ifndef HNG_ENUMERATION_HPP
#define HNG_ENUMERATION_HPP

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hng/canon.hpp"

namespace hng {

inline constexpr int kCatalogFormatVersion = 1;
inline constexpr int kMaxEnumerationOrder = 9;

struct CatalogProvenance {
  std::string method;  // "extension" or "file"
  long long parents = 0;
  long long candidates = 0;
};

struct GraphCatalog {
  int order = 0;
  /// Strictly increasing; each entry is the canonical code of one class.
  std::vector<CanonicalCode> codes;
  CatalogProvenance provenance;

  std::size_t size() const noexcept { return codes.size(); }
};

/// Extends every class of order n - 1 by a new vertex with each of the
/// 2^(n-1) possible neighborhoods and deduplicates by canonical code.
GraphCatalog extend_catalog(const GraphCatalog& parents);

/// All isomorphism classes on n vertices, 1 <= n <= 9, built from K_1 upward.
GraphCatalog enumerate_order(int n);

/// Catalogs for orders 1..n, index k holding order k + 1.
std::vector<GraphCatalog> enumerate_up_to(int n);

/// Isolated-vertex-free classes with exactly m edges for m = 0..max_edges
/// (index m), grown one edge at a time: between two present vertices, from a
/// present vertex to a new one, or as a new K_2.
std::vector<std::vector<CanonicalCode>> enumerate_by_edges(int max_edges);

/// Writes sorted graph6 lines under a one-line `#` header, via temp file and rename.
void store_catalog(const GraphCatalog& catalog, const std::filesystem::path& path);

/// Reads a catalog; header comments are skipped (and version-checked when
/// present). Lines must decode, share one order and be strictly sorted.
/// Throws io_error, corrupt_catalog or stale_cache.
GraphCatalog load_catalog(const std::filesystem::path& path,
                          std::optional<int> expected_order = std::nullopt);

/// Cache of catalogs on disk, one file per order and format version.
class CatalogCache {
 public:
  explicit CatalogCache(std::filesystem::path dir);

  /// Uses $HNG_CACHE_DIR, or ".hng-cache" when unset.
  static CatalogCache from_environment();

  const std::filesystem::path& dir() const noexcept { return dir_; }
  std::filesystem::path file_for(int order, int version = kCatalogFormatVersion) const;

  /// Loads the order-n catalog, building and storing it (and its smaller
  /// orders) when absent. A file left by another format version is refused.
  const GraphCatalog& get(int n);

  /// Loads only; throws missing_dependency if the file is absent.
  const GraphCatalog& get_existing(int n);

 private:
  void refuse_stale(int n) const;

  std::filesystem::path dir_;
  std::map<int, GraphCatalog> loaded_;
};

}  // namespace hng

#endif  // HNG_ENUMERATION_HPP
