#include "wormhole/oracle.hpp"

#include "wormhole/errors.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <numeric>
#include <thread>

namespace wormhole::oracle {

std::vector<Triangulation> enumerate_triangulations(int p) {
    if (p < 3 || p > 14) throw InvalidInput("enumerate_triangulations: p must be in 3..14");

    // Diagonal sets for the sub-polygon on vertices lo..hi (edge lo-hi).
    std::function<std::vector<std::vector<std::pair<int, int>>>(int, int)> gen =
        [&](int lo, int hi) -> std::vector<std::vector<std::pair<int, int>>> {
        if (hi - lo < 2) return {{}};
        std::vector<std::vector<std::pair<int, int>>> out;
        for (int k = lo + 1; k < hi; ++k) {
            auto left = gen(lo, k);
            auto right = gen(k, hi);
            for (const auto& l : left)
                for (const auto& r : right) {
                    std::vector<std::pair<int, int>> d;
                    d.reserve(l.size() + r.size() + 2);
                    d.insert(d.end(), l.begin(), l.end());
                    d.insert(d.end(), r.begin(), r.end());
                    if (k - lo > 1) d.emplace_back(lo, k);
                    if (hi - k > 1) d.emplace_back(k, hi);
                    out.push_back(std::move(d));
                }
        }
        return out;
    };

    std::vector<Triangulation> out;
    for (auto& d : gen(0, p - 1)) {
        Triangulation t;
        t.size = p;
        t.diagonals = std::move(d);
        t.normalize();
        out.push_back(std::move(t));
    }
    return out;
}

namespace {

using i128 = __int128;

// Continuant K satisfies K(c_a..c_b) = c_a*K(c_{a+1}..c_b) - K(c_{a+2}..c_b)
// and is the matrix element (prod [[c,-1],[1,0]])_00. For a chain with
// entries >= 2 every window continuant is bounded by the full value m.
struct ContinuantTables {
    // prefix[i] = product of M(c_1)..M(c_i), det 1
    std::vector<std::array<i128, 4>> prefix; // row-major a,b,c,d
    std::vector<i128> suffix;                // suffix[i] = K(c_i..c_s), 1-based, s+2 entries

    explicit ContinuantTables(const std::vector<std::int64_t>& c) {
        const int s = static_cast<int>(c.size());
        prefix.resize(s + 1);
        prefix[0] = {1, 0, 0, 1};
        for (int i = 1; i <= s; ++i) {
            const auto& p = prefix[i - 1];
            i128 e = c[i - 1];
            prefix[i] = {p[0] * e + p[1], -p[0], p[2] * e + p[3], -p[2]};
        }
        suffix.assign(s + 3, 0);
        suffix[s + 1] = 1;
        suffix[s + 2] = 0;
        for (int i = s; i >= 1; --i) suffix[i] = i128(c[i - 1]) * suffix[i + 1] - suffix[i + 2];
    }

    i128 full(int s) const { return prefix[s][0]; }
    i128 head(int i) const { return i >= 0 ? prefix[i][0] : 0; } // K(c_1..c_i), K of empty = 1
    // K(c_{a}..c_{b}) for a window, via prefix[a-1]^{-1} * prefix[b].
    i128 window(int a, int b) const {
        if (a > b) return 1;
        const auto& l = prefix[a - 1];
        const auto& r = prefix[b];
        // inverse of det-1 matrix [[l0,l1],[l2,l3]] is [[l3,-l1],[-l2,l0]]
        return l[3] * r[0] - l[1] * r[2];
    }
};

} // namespace

std::vector<std::pair<int, int>> decomposition_pairs_fast(const std::vector<std::int64_t>& dual) {
    const int s = static_cast<int>(dual.size());
    for (std::int64_t e : dual)
        if (e < 2) throw InvalidInput("decomposition_pairs_fast: entries must be >= 2");

    std::vector<std::pair<int, int>> out;
    if (s < 2) return out;
    ContinuantTables t(dual);
    const i128 full = t.full(s);

    for (int a = 1; a <= s; ++a) {
        const i128 head_a = t.head(a - 1);      // K(c_1..c_{a-1})
        const i128 tail_a = t.suffix[a + 1];    // K(c_{a+1}..c_s)
        const i128 base = full - head_a * tail_a; // decrement at a only
        for (int b = a + 1; b <= s; ++b) {
            // Decrementing entries is linear per position:
            // K' = K - head(a)tail(a) - head(b)tail(b) + head(a)window(a+1,b-1)tail(b).
            i128 tail_b = t.suffix[b + 1];
            i128 k2 = base - t.head(b - 1) * tail_b + head_a * t.window(a + 1, b - 1) * tail_b;
            if (k2 != 0) continue;

            // Candidate: confirm admissibility with modified suffix continuants.
            i128 s2 = 0, s1 = 1; // K at i+2, i+1
            bool ok = true;
            for (int i = s; i >= 1; --i) {
                i128 e = dual[i - 1] - (i == a || i == b ? 1 : 0);
                i128 cur = e * s1 - s2;
                if (i >= 2 && cur <= 0) {
                    ok = false;
                    break;
                }
                s2 = s1;
                s1 = cur;
            }
            if (ok && s1 == 0) out.emplace_back(a, b);
        }
    }
    return out;
}

namespace {

// HJ expansion of m/k in plain integers; entries bounded by m.
std::vector<std::int64_t> expand_int(std::int64_t num, std::int64_t den) {
    std::vector<std::int64_t> out;
    while (true) {
        std::int64_t e = (num + den - 1) / den;
        out.push_back(e);
        std::int64_t r = e * den - num;
        if (r == 0) break;
        num = den;
        den = r;
    }
    return out;
}

ScanRecord scan_one(std::int64_t m, std::int64_t q, bool with_htu) {
    ScanRecord rec;
    rec.m = m;
    rec.q = q;
    std::vector<std::int64_t> dual = expand_int(m, m - q);
    auto pairs = decomposition_pairs_fast(dual);
    rec.count = static_cast<int>(pairs.size());
    if (rec.count > 0) {
        long long s = static_cast<long long>(dual.size());
        long long sum = std::accumulate(dual.begin(), dual.end(), 0LL);
        rec.index = 3 * (s - 1) - (sum - 2);
        rec.has_index = true;
        rec.basic = rec.count >= 2 && rec.index > 1;
    }
    if (with_htu && rec.count >= 2) {
        Chain seq(dual.begin(), dual.end());
        HtuOutcome outcome = htu_reduce(seq);
        rec.htu = outcome.degenerate ? 2 : 1;
    }
    return rec;
}

} // namespace

std::string ScanRecord::jsonl() const {
    std::string line = "{\"m\":" + std::to_string(m) + ",\"q\":" + std::to_string(q) +
                       ",\"count\":" + std::to_string(count) + ",\"ww_index\":";
    line += has_index ? std::to_string(index) : "null";
    line += std::string(",\"basic\":") + (basic ? "true" : "false");
    if (count >= 2) line += std::string(",\"htu\":\"") + (htu == 2 ? "degenerate" : "basic") + "\"";
    line += "}";
    return line;
}

void scan_wormholes(std::int64_t m_max, int jobs,
                    const std::function<void(const ScanRecord&)>& sink) {
    if (m_max < 2) throw InvalidInput("scan_wormholes: m_max must be >= 2");
    if (m_max > 2000000) throw InvalidInput("scan_wormholes: m_max above the supported bound 2000000");

    if (jobs <= 1) {
        for (std::int64_t m = 2; m <= m_max; ++m)
            for (std::int64_t q = 1; q < m; ++q)
                if (std::gcd(m, q) == 1) sink(scan_one(m, q, true));
        return;
    }

    // Workers own m values round-robin and share nothing; the merge walks m
    // in ascending order, so output does not depend on the worker count.
    std::vector<std::vector<ScanRecord>> per_m(static_cast<std::size_t>(m_max - 1));
    std::vector<std::thread> pool;
    for (int w = 0; w < jobs; ++w)
        pool.emplace_back([&, w]() {
            for (std::int64_t m = 2 + w; m <= m_max; m += jobs) {
                auto& bucket = per_m[static_cast<std::size_t>(m - 2)];
                for (std::int64_t q = 1; q < m; ++q)
                    if (std::gcd(m, q) == 1) bucket.push_back(scan_one(m, q, true));
            }
        });
    for (auto& th : pool) th.join();
    for (const auto& bucket : per_m)
        for (const ScanRecord& rec : bucket) sink(rec);
}

TheoremReport verify_theorem_43(std::int64_t m_max, int jobs) {
    if (m_max < 2) throw InvalidInput("verify_theorem_43: m_max must be >= 2");
    if (m_max > 2000000) throw InvalidInput("verify_theorem_43: m_max above the supported bound 2000000");
    auto t0 = std::chrono::steady_clock::now();

    TheoremReport rep;
    rep.m_max = m_max;
    if (jobs < 1) jobs = 1;
    std::vector<std::map<int, std::int64_t>> hists(jobs);
    std::vector<std::vector<std::pair<std::int64_t, std::int64_t>>> viols(jobs);
    std::vector<std::thread> pool;
    for (int w = 0; w < jobs; ++w)
        pool.emplace_back([&, w]() {
            for (std::int64_t m = 2 + w; m <= m_max; m += jobs)
                for (std::int64_t q = 1; q < m; ++q) {
                    if (std::gcd(m, q) != 1) continue;
                    std::vector<std::int64_t> dual = expand_int(m, m - q);
                    int count = static_cast<int>(decomposition_pairs_fast(dual).size());
                    ++hists[w][count];
                    if (count >= 3) viols[w].emplace_back(m, q);
                }
        });
    for (auto& th : pool) th.join();

    for (int w = 0; w < jobs; ++w) {
        for (auto [k, v] : hists[w]) rep.count_histogram[k] += v;
        rep.violations.insert(rep.violations.end(), viols[w].begin(), viols[w].end());
    }
    std::sort(rep.violations.begin(), rep.violations.end());
    rep.max_count = rep.count_histogram.empty() ? 0 : rep.count_histogram.rbegin()->first;
    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

FamilyCheckReport family_roundtrip_check(int n_max, int sweep) {
    FamilyCheckReport rep;
    rep.n_max = n_max;
    auto fail = [&](const std::string& msg) { rep.failures.push_back(msg); };

    for (int n = 2; n <= n_max; ++n) {
        for (const ClassifiedPair& base : classify_families(n)) {
            ++rep.families;
            for (int dt = 0; dt < sweep; ++dt) {
                std::vector<long long> params = base.family.param_min;
                for (auto& p : params) p += dt;
                ClassifiedPair pair = instantiate_pair(base.family, params);
                ++rep.instantiations;

                std::string tag = "n=" + std::to_string(n) + " m=" + std::to_string(base.family.m) +
                                  " t=+" + std::to_string(dt);
                RecoveredSingularity rec;
                try {
                    rec = recover_singularity(pair.first, pair.second);
                } catch (const std::exception& e) {
                    fail(tag + ": recovery failed: " + e.what());
                    continue;
                }
                std::vector<WWDecomposition> decs = ww_decompositions(rec.dual);
                if (decs.size() != 2) {
                    fail(tag + ": expected exactly two decompositions, got " + std::to_string(decs.size()));
                    continue;
                }
                bool exact = (decs[0].chain.body == pair.first.body && decs[1].chain.body == pair.second.body) ||
                             (decs[0].chain.body == pair.second.body && decs[1].chain.body == pair.first.body);
                if (!exact) fail(tag + ": instantiated chains are not the decomposition set");

                for (int r : pair.valid_reframings) {
                    auto [ra, rb] = reframe_pair(pair, r);
                    ++rep.reframings_checked;
                    try {
                        RecoveredSingularity rr = recover_singularity(ra, rb);
                        PResolutionReport prr = p_resolution_report(rr.label.m, rr.label.q);
                        if (!prr.wormhole)
                            fail(tag + " r=" + std::to_string(r) + ": reframing is not a wormhole");
                    } catch (const std::exception& e) {
                        fail(tag + " r=" + std::to_string(r) + ": " + e.what());
                    }
                }
            }
        }
    }
    return rep;
}

} // namespace wormhole::oracle
