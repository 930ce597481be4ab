#include "wormhole/coherent.hpp"

#include "wormhole/errors.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace wormhole {

namespace {

int mod1(int v, int n) { // residues 1..n, 0 -> n
    int r = v % n;
    if (r <= 0) r += n;
    return r;
}

} // namespace

CoherentGraph build_coherent_graph(const ExtZeroChain& chain) {
    const int s = static_cast<int>(chain.length());
    if (s < 4) throw InvalidInput("coherent graph: needs s >= 4");
    Chain v = chain.reading_vector();

    CoherentGraph g;
    std::vector<int> positions;
    for (int i = 0; i < s + 1; ++i)
        if (v[i] > 2) {
            g.weights.push_back(v[i]);
            positions.push_back(i + 1);
        }
    const int n = static_cast<int>(g.weights.size());
    if (n == 0) throw InvalidInput("coherent graph: no weights");

    if (n == 1) {
        g.labels.push_back(s + 1 - 1);
        return g;
    }
    long long used = 0;
    for (int i = 0; i + 1 < n; ++i) {
        g.labels.push_back(positions[i + 1] - positions[i] - 1);
        used += g.labels.back();
    }
    g.labels.push_back((s + 1) - n - used);
    return g;
}

CoherentGraph build_coherent_graph(const FramedTriangulation& ft) {
    return build_coherent_graph(index_vector(ft));
}

std::vector<Relation> relation_system_of(const FramedTriangulation& ft) {
    std::vector<WeightRef> ws = weights_of(ft);
    const int n = static_cast<int>(ws.size());
    if (n == 0) throw InvalidInput("relation system: no weights");
    if (n == 1) return {Relation{1, 1, -1}};
    if (!is_accordion(ft.tri)) throw InvalidInput("relation system: not an accordion triangulation");

    std::vector<Relation> rels(n);
    std::vector<bool> seen(n + 1, false);
    int ones = 0;
    for (int i = 1; i <= n; ++i) {
        WeightFan fan = weight_type(ft, i);
        int gap = fan.pair_start;
        if (seen[gap]) throw InvariantFailure("two fans claim one gap");
        seen[gap] = true;
        int k = fan.type_one ? 1 : 3;
        ones += k == 1;
        rels[gap - 1] = Relation{gap, i, k};
    }
    if (ones != 2) throw InvariantFailure("relation system: expected exactly two constants equal to 1");

    // The relations must hold on the actual labels.
    CoherentGraph g = build_coherent_graph(ft);
    for (const Relation& r : rels)
        if (g.labels[r.gap - 1] != g.weights[r.weight - 1] - r.constant)
            throw InvariantFailure("relation system does not match the coherent graph");
    return rels;
}

std::vector<int> k_vector(int n, int m) {
    if (n < 2) throw InvalidInput("k_vector: needs n >= 2");
    if (m < 0 || m >= n) throw InvalidInput("k_vector: m out of range");
    int a, b;
    if (n % 2 == 1) {
        a = mod1((n - 1) / 2 + (m + 1) / 2, n);
        b = mod1(n + m / 2, n);
    } else {
        a = mod1(n / 2 + m / 2, n);
        b = mod1(n + m / 2, n);
    }
    if (a == b) throw InvariantFailure("k_vector: the two unit positions collided");
    std::vector<int> k(n, 3);
    k[a - 1] = 1;
    k[b - 1] = 1;
    return k;
}

std::vector<Relation> rotation_relations(int n, int m) {
    std::vector<int> k = k_vector(n, m);
    std::vector<Relation> rels;
    rels.reserve(n);
    for (int i = 1; i <= n; ++i)
        rels.push_back(Relation{i, mod1((n - i) + m, n), k[i - 1]});
    return rels;
}

bool consistency(int n, int m) {
    if (n < 2) throw InvalidInput("consistency: needs n >= 2");
    if (m < 1 || m >= n) throw InvalidInput("consistency: m must be in 1..n-1");
    int g = std::gcd(n, m);
    if (n % 2 == 0)
        return (n - m / 2) % g == 0 || (n / 2 - m / 2) % g == 0;
    return (n - (m + 1) / 2) % g == 0 || ((n - 1) / 2 - m / 2) % g == 0;
}

namespace {

std::vector<long long> difference_vector(int n, int m) {
    std::vector<int> k0 = k_vector(n, 0);
    std::vector<int> km = k_vector(n, m);
    std::vector<long long> v(n);
    for (int i = 1; i <= n; ++i) {
        int idx = mod1(n - i, n);
        v[i - 1] = k0[idx - 1] - km[idx - 1];
    }
    return v;
}

} // namespace

bool cycle_sum_consistency(int n, int m) {
    if (n < 2) throw InvalidInput("cycle_sum_consistency: needs n >= 2");
    if (m < 1 || m >= n) throw InvalidInput("cycle_sum_consistency: m must be in 1..n-1");
    std::vector<long long> v = difference_vector(n, m);
    std::vector<bool> done(n + 1, false);
    for (int start = 1; start <= n; ++start) {
        if (done[start]) continue;
        long long sum = 0;
        int pos = start;
        do {
            done[pos] = true;
            sum += v[pos - 1];
            pos = mod1(pos + m, n);
        } while (pos != start);
        if (sum != 0) return false;
    }
    return true;
}

ParametricFamily solve_parametric(int n, int m) {
    if (!consistency(n, m)) throw InvalidInput("solve_parametric: system is inconsistent");
    std::vector<long long> v = difference_vector(n, m);

    ParametricFamily fam;
    fam.n = n;
    fam.m = m;
    fam.param_count = std::gcd(n, m);
    fam.offsets.assign(n, 0);
    fam.param_min.assign(fam.param_count, 3);

    const int orbit_len = n / fam.param_count;
    for (int rep = 1; rep <= fam.param_count; ++rep) {
        long long off = 0;
        long long min_off = 0;
        int pos = rep;
        for (int j = 1; j < orbit_len; ++j) {
            off -= v[pos - 1];
            pos = mod1(pos + m, n);
            fam.offsets[pos - 1] = off;
            min_off = std::min(min_off, off);
        }
        // Orbit must close: x_rep - sum of v over the orbit = x_rep.
        if (off - v[pos - 1] != 0) throw InvariantFailure("parametric orbit failed to close");
        fam.param_min[rep - 1] = 3 - min_off;
    }
    return fam;
}

std::vector<Entry> ParametricFamily::instantiate(const std::vector<long long>& params) const {
    if (static_cast<int>(params.size()) != param_count)
        throw InvalidInput("instantiate: expected " + std::to_string(param_count) + " parameters");
    for (int i = 0; i < param_count; ++i)
        if (params[i] < param_min[i])
            throw InvalidInput("instantiate: parameter below its minimum");
    std::vector<Entry> x(n);
    for (int pos = 1; pos <= n; ++pos) {
        int rep = mod1(pos, param_count);
        x[pos - 1] = params[rep - 1] + offsets[pos - 1];
    }
    return x;
}

} // namespace wormhole
