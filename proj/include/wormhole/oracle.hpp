#pragma once

// Independent brute-force ground truth: exhaustive triangulation enumeration,
// exhaustive singularity scans over coprime (m,q), and cross-validation
// reports. The scan evaluates decrement pairs through prefix/suffix
// continuant tables, a different algebraic route than the chain evaluator it
// cross-checks.

#include "wormhole/triangulation.hpp"
#include "wormhole/ww.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace wormhole::oracle {

// All triangulations of the convex p-gon, Catalan(p-2) of them, in a fixed
// deterministic order.
std::vector<Triangulation> enumerate_triangulations(int p);

// Decrement pairs (alpha, beta) of an entries->=2 chain whose double
// decrement is an admissible zero chain. Continuant arithmetic in 128-bit
// integers; valid far beyond the supported scan bound.
std::vector<std::pair<int, int>> decomposition_pairs_fast(const std::vector<std::int64_t>& dual);

struct ScanRecord {
    std::int64_t m = 0;
    std::int64_t q = 0;
    int count = 0;
    std::int64_t index = 0; // meaningful when has_index
    bool has_index = false;
    bool basic = false;
    int htu = 0; // 0 none, 1 basic outcome, 2 degenerate outcome

    std::string jsonl() const;
};

// Streams one record per coprime pair 0 < q < m <= m_max in ascending (m,q)
// order, independent of the number of jobs.
void scan_wormholes(std::int64_t m_max, int jobs, const std::function<void(const ScanRecord&)>& sink);

struct TheoremReport {
    std::int64_t m_max = 0;
    int max_count = 0;
    std::map<int, std::int64_t> count_histogram;
    std::vector<std::pair<std::int64_t, std::int64_t>> violations; // count >= 3
    double seconds = 0.0;
};

// Scans all coprime pairs up to m_max and checks that no singularity admits
// three or more extremal P-resolutions.
TheoremReport verify_theorem_43(std::int64_t m_max, int jobs = 1);

struct FamilyCheckReport {
    int n_max = 0;
    int families = 0;
    int instantiations = 0;
    int reframings_checked = 0;
    std::vector<std::string> failures;
};

// For every family with n <= n_max weights and a sweep of parameter values:
// recover the singularity, re-derive the decompositions from the dual, and
// require the instantiated pair to be exactly that decomposition set; every
// valid reframing must again recover a wormhole singularity.
FamilyCheckReport family_roundtrip_check(int n_max, int sweep);

} // namespace wormhole::oracle
