#include "hng/membership.hpp"

#include "hng/enumeration.hpp"
#include "hng/error.hpp"
#include "hng/families.hpp"
#include "hng/graph6.hpp"
#include "hng/invariants.hpp"

namespace hng {

namespace {

void require_scan_order(const Graph& g) {
  if (g.order() > kMaxSubsetScanOrder) {
    throw Error(Errc::order_cap_exceeded,
                "hereditary scan supports order <= 16, got " + std::to_string(g.order()));
  }
}

/// Walks every nonempty vertex subset in ascending mask order, feeding the
/// defect of each induced subgraph to `visit`; a false return stops the walk.
template <typename Visit>
void scan_subset_defects(const Graph& g, Visit&& visit) {
  require_scan_order(g);
  SubsetChromaticTable chi(g);
  SubsetChromaticTable theta(complement(g));
  while (!chi.done()) {
    const VertexMask s = chi.next_mask();
    const int c = chi.advance();
    const int t = theta.advance();
    if (!visit(s, popcount(s) + 1 - c - t)) return;
  }
}

}  // namespace

int ng_defect(const Graph& g) {
  if (g.order() == 0) return 0;
  return g.order() + 1 - chromatic_number(g) - clique_cover_number(g);
}

DefectReport hereditary_ng_defect(const Graph& g) {
  DefectReport r;
  r.defect = ng_defect(g);
  if (g.order() == 0) return r;
  r.hereditary_defect = -1;
  scan_subset_defects(g, [&](VertexMask s, int d) {
    if (d > r.hereditary_defect || (d == r.hereditary_defect && popcount(s) > popcount(r.witness))) {
      r.hereditary_defect = d;
      r.witness = s;
    }
    return true;
  });
  return r;
}

bool in_ng(const Graph& g, int a) { return ng_defect(g) <= a; }

bool in_hng(const Graph& g, int a) {
  // chi and theta are at least 1, so no subgraph of g has defect above n - 1.
  if (g.order() - 1 <= a) return true;
  bool ok = true;
  scan_subset_defects(g, [&](VertexMask, int d) {
    ok = d <= a;
    return ok;
  });
  return ok;
}

bool InclusionChainReport::passed() const {
  if (!violations.empty()) return false;
  for (const auto& w : witnesses) {
    if (!w.holds) return false;
  }
  return true;
}

InclusionChainReport verify_inclusion_chain(int a_max, int n_max) {
  if (a_max < 0) throw Error(Errc::parameter_out_of_range, "a_max must be >= 0");
  if (n_max < 1 || n_max > 9) throw Error(Errc::order_out_of_range, "n_max must be in 1..9");
  InclusionChainReport report;
  report.a_max = a_max;
  report.n_max = n_max;
  for (int n = 1; n <= n_max; ++n) {
    for (const auto& code : enumerate_order(n).codes) {
      const Graph g = code.graph();
      const DefectReport d = hereditary_ng_defect(g);
      ++report.graphs_checked;
      for (int a = 0; a < a_max; ++a) {
        auto flag = [&](const char* relation) {
          report.violations.push_back({graph6_encode(g), a, relation, d.defect, d.hereditary_defect});
        };
        if (d.hereditary_defect <= a && d.defect > a) flag("a-HNG in a-NG");
        if (d.defect <= a && d.hereditary_defect > a + 1) flag("a-NG in (a+1)-HNG");
      }
    }
  }
  for (int a = 0; a < a_max; ++a) {
    if (2 * a + 5 <= kMaxSubsetScanOrder) {
      const Graph c = cycle(2 * a + 5);
      const DefectReport d = hereditary_ng_defect(c);
      report.witnesses.push_back({"C" + std::to_string(2 * a + 5), a, "in a-NG, not in a-HNG",
                                  d.defect <= a && d.hereditary_defect > a});
    }
    if (2 * a + 4 <= kMaxSubsetScanOrder) {
      const Graph p = path(2 * a + 4);
      const DefectReport d = hereditary_ng_defect(p);
      report.witnesses.push_back({"P" + std::to_string(2 * a + 4), a, "in (a+1)-HNG, not in a-NG",
                                  d.hereditary_defect <= a + 1 && d.defect > a});
    }
  }
  return report;
}

}  // namespace hng
