#include "wormhole/triangulation.hpp"

#include "wormhole/errors.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

namespace wormhole {

namespace {

int cyclic_dist(int a, int b, int p) {
    int d = (b - a) % p;
    if (d < 0) d += p;
    return std::min(d, p - d);
}

} // namespace

void ExtZeroChain::validate() const {
    if (body.empty()) throw InvalidInput("extended chain: empty body");
    for (Entry e : body)
        if (e < 1) throw InvalidInput("extended chain: body entries must be >= 1");
    if (hidden < 1) throw InvalidInput("extended chain: hidden index must be >= 1");
    long long s = static_cast<long long>(body.size());
    long long total = hidden + std::accumulate(body.begin(), body.end(), 0LL);
    if (total != 3 * (s - 1))
        throw InvalidInput("extended chain: index sum must equal 3(s-1)");
    if (!is_zero_chain(body))
        throw InvalidInput("extended chain: body is not a zero chain");
}

void Triangulation::normalize() {
    for (auto& d : diagonals)
        if (d.first > d.second) std::swap(d.first, d.second);
    std::sort(diagonals.begin(), diagonals.end());
    diagonals.erase(std::unique(diagonals.begin(), diagonals.end()), diagonals.end());
}

void Triangulation::validate() const {
    if (size < 3) throw InvalidInput("triangulation: polygon needs >= 3 vertices");
    if (static_cast<int>(diagonals.size()) != size - 3)
        throw InvalidInput("triangulation: expected size-3 diagonals");
    for (auto [a, b] : diagonals) {
        if (a < 0 || b >= size || a >= b)
            throw InvalidInput("triangulation: diagonal endpoints out of range");
        if (cyclic_dist(a, b, size) < 2)
            throw InvalidInput("triangulation: diagonal joins adjacent vertices");
    }
    // Chords {a,b}, {c,d} of a convex polygon cross iff exactly one of c,d
    // lies strictly between a and b.
    for (std::size_t i = 0; i < diagonals.size(); ++i)
        for (std::size_t j = i + 1; j < diagonals.size(); ++j) {
            auto [a, b] = diagonals[i];
            auto [c, d] = diagonals[j];
            bool c_in = a < c && c < b;
            bool d_in = a < d && d < b;
            if (c_in != d_in && c != a && c != b && d != a && d != b)
                throw InvalidInput("triangulation: crossing diagonals");
        }
}

std::vector<int> Triangulation::vertex_indices() const {
    std::vector<int> idx(size, 1);
    for (auto [a, b] : diagonals) {
        ++idx[a];
        ++idx[b];
    }
    return idx;
}

bool FramedTriangulation::operator==(const FramedTriangulation& o) const {
    return index_vector(*this) == index_vector(o);
}

ExtZeroChain index_vector(const FramedTriangulation& ft) {
    const int p = ft.tri.size;
    if (ft.hidden < 0 || ft.hidden >= p) throw InvalidInput("framed triangulation: bad hidden vertex");
    std::vector<int> idx = ft.tri.vertex_indices();
    ExtZeroChain out;
    out.body.reserve(p - 1);
    for (int i = 1; i < p; ++i)
        out.body.push_back(idx[(ft.hidden + i) % p]);
    out.hidden = idx[ft.hidden];
    return out;
}

FramedTriangulation from_extended_chain(const ExtZeroChain& chain) {
    chain.validate();
    const int p = static_cast<int>(chain.length()) + 1;

    // Vertex 0 carries the hidden index, vertex i carries body position i.
    std::vector<Entry> val(p);
    val[0] = chain.hidden;
    for (int i = 1; i < p; ++i) val[i] = chain.body[i - 1];

    std::vector<int> next(p), prev(p);
    for (int i = 0; i < p; ++i) {
        next[i] = (i + 1) % p;
        prev[i] = (i + p - 1) % p;
    }
    std::vector<bool> alive(p, true);

    Triangulation tri;
    tri.size = p;
    int remaining = p;
    while (remaining > 3) {
        int ear = -1;
        for (int v = 0; v < p; ++v)
            if (alive[v] && val[v] == 1) {
                ear = v;
                break;
            }
        if (ear == -1)
            throw InvariantFailure("ear-cutting stuck on a validated zero chain");
        int a = prev[ear], b = next[ear];
        if (val[a] < 2 || val[b] < 2)
            throw InvariantFailure("ear-cutting produced a non-positive index");
        tri.diagonals.emplace_back(a, b);
        --val[a];
        --val[b];
        alive[ear] = false;
        next[a] = b;
        prev[b] = a;
        --remaining;
    }
    for (int v = 0; v < p; ++v)
        if (alive[v] && val[v] != 1)
            throw InvariantFailure("ear-cutting left a non-triangle remainder");

    tri.normalize();
    tri.validate();
    return FramedTriangulation{std::move(tri), 0};
}

FramedTriangulation reframe(const FramedTriangulation& ft, int new_hidden) {
    if (new_hidden < 0 || new_hidden >= ft.tri.size)
        throw InvalidInput("reframe: hidden vertex out of range");
    return FramedTriangulation{ft.tri, new_hidden};
}

bool is_accordion(const Triangulation& t) {
    std::vector<int> idx = t.vertex_indices();
    return std::count(idx.begin(), idx.end(), 1) == 2;
}

std::vector<WeightRef> weights_of(const FramedTriangulation& ft) {
    ExtZeroChain c = index_vector(ft);
    std::vector<WeightRef> out;
    Chain v = c.reading_vector();
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] > 2) out.push_back(WeightRef{static_cast<int>(i) + 1, v[i]});
    return out;
}

WeightFan weight_type(const FramedTriangulation& ft, int weight_index) {
    if (!is_accordion(ft.tri)) throw InvalidInput("weight_type: not an accordion triangulation");
    const int p = ft.tri.size;
    std::vector<WeightRef> ws = weights_of(ft);
    const int n = static_cast<int>(ws.size());
    if (n < 2) throw InvalidInput("weight_type: needs at least two weights");
    if (weight_index < 1 || weight_index > n) throw InvalidInput("weight_type: weight index out of range");

    // Reading position pos (1..p) sits at vertex (hidden + pos) mod p.
    auto vertex_of_pos = [&](int pos) { return (ft.hidden + pos) % p; };
    std::vector<int> wvert(n);
    std::vector<int> weight_at(p, 0); // vertex -> weight number or 0
    for (int i = 0; i < n; ++i) {
        wvert[i] = vertex_of_pos(ws[i].pos);
        weight_at[wvert[i]] = i + 1;
    }

    const int apex = wvert[weight_index - 1];
    std::vector<bool> partner(p, false);
    for (auto [a, b] : ft.tri.diagonals) {
        if (a == apex) partner[b] = true;
        if (b == apex) partner[a] = true;
    }

    // Partners form one contiguous cyclic block; find its first and last
    // element in counterclockwise order starting after the apex.
    int first = -1, last = -1;
    bool in_block = false, block_done = false;
    for (int step = 1; step < p; ++step) {
        int v = (apex + step) % p;
        if (partner[v]) {
            if (block_done) throw InvariantFailure("weight fan is not contiguous");
            if (!in_block) first = v;
            last = v;
            in_block = true;
        } else if (in_block) {
            block_done = true;
            in_block = false;
        }
    }
    if (first == -1) throw InvariantFailure("weight vertex has no diagonals");

    WeightFan fan;
    const int i = weight_index;
    if (weight_at[first] && weight_at[last]) {
        fan.type_one = false;
        fan.pair_start = weight_at[first];
        if (weight_at[last] != fan.pair_start % n + 1)
            throw InvariantFailure("weight fan does not span consecutive weights");
    } else if (weight_at[last] && !weight_at[first]) {
        // The vertex next to the apex got no diagonal: pair (x_i, x_{i+1}).
        fan.type_one = true;
        fan.pair_start = i;
        if (weight_at[last] != i % n + 1)
            throw InvariantFailure("type (I) fan does not end at the next weight");
    } else if (weight_at[first] && !weight_at[last]) {
        fan.type_one = true;
        fan.pair_start = i == 1 ? n : i - 1;
        if (weight_at[first] != fan.pair_start)
            throw InvariantFailure("type (I) fan does not start at the previous weight");
    } else {
        throw InvariantFailure("weight fan touches no weight");
    }
    return fan;
}

FramedTriangulation accordion_family_member(const std::vector<Entry>& weights, int m) {
    const int n = static_cast<int>(weights.size());
    if (n < 2) throw InvalidInput("accordion construction: needs n >= 2 weights");
    for (Entry x : weights)
        if (x < 3) throw InvalidInput("accordion construction: weights must be >= 3");
    if (m < 0 || m >= n) throw InvalidInput("accordion construction: m out of range");

    auto mod1 = [&](int v) { // residues 1..n, 0 -> n
        int r = v % n;
        if (r <= 0) r += n;
        return r;
    };

    // Fan targets: start from the hidden weight's fan landing on (x_m, x_{m+1})
    // and propagate the local rule sigma(i)=j  =>  sigma(j)=i, sigma(j+1)=i-1.
    std::vector<int> sigma(n + 1, 0);
    std::vector<int> work;
    sigma[n] = mod1(m);
    work.push_back(n);
    while (!work.empty()) {
        int i = work.back();
        work.pop_back();
        int j = sigma[i];
        for (auto [from, to] : {std::pair<int, int>{j, i}, {mod1(j + 1), mod1(i - 1)}}) {
            if (sigma[from] == 0) {
                sigma[from] = to;
                work.push_back(from);
            } else if (sigma[from] != to) {
                throw InvariantFailure("fan propagation reached a contradiction");
            }
        }
    }
    for (int i = 1; i <= n; ++i)
        if (sigma[i] == 0) throw InvariantFailure("fan propagation left a weight unassigned");

    std::vector<bool> type_one(n + 1, false);
    for (int i = 1; i <= n; ++i)
        type_one[i] = sigma[i] == i || sigma[i] == mod1(i - 1);

    // Gap sizes from fan arithmetic: the fan at x_t with x_t - 1 diagonals
    // fills its target gap completely, except that a type (I) fan leaves the
    // vertex adjacent to its apex untouched (that vertex gets index 1).
    std::vector<int> covered_by(n + 1, 0);
    for (int t = 1; t <= n; ++t) {
        if (covered_by[sigma[t]] != 0) throw InvariantFailure("two fans target one gap");
        covered_by[sigma[t]] = t;
    }
    std::vector<Entry> gap(n + 1, 0);
    for (int g = 1; g <= n; ++g) {
        int t = covered_by[g];
        gap[g] = weights[t - 1] - (type_one[t] ? 1 : 3);
        if (gap[g] < 0) throw InvariantFailure("negative gap in accordion construction");
    }

    // Reading positions 1..p, hidden weight x_n at position p, vertex ids pos mod p.
    std::vector<long long> pos(n + 1, 0);
    pos[1] = gap[n] + 1;
    for (int i = 1; i < n; ++i) pos[i + 1] = pos[i] + gap[i] + 1;
    long long p = pos[n];

    Triangulation tri;
    tri.size = static_cast<int>(p);
    // position k (1..p) -> vertex k mod p, so the hidden position p is vertex 0
    auto vertex = [&](long long position) { return static_cast<int>((position % p + p) % p); };

    std::set<std::pair<int, int>> diag;
    for (int t = 1; t <= n; ++t) {
        int g = sigma[t];
        long long from = pos[g];
        long long to = g == n ? pos[1] + p : pos[g + 1];
        if (to < from) to += p;
        int apex = vertex(pos[t]);
        long long added = 0;
        for (long long k = from; k <= to; ++k) {
            int v = vertex(k);
            if (cyclic_dist(apex, v, tri.size) < 2) continue;
            auto d = std::minmax(apex, v);
            diag.insert({d.first, d.second});
            ++added;
        }
        if (added != weights[t - 1] - 1)
            throw InvariantFailure("fan size does not match weight " + std::to_string(t));
    }
    tri.diagonals.assign(diag.begin(), diag.end());
    if (static_cast<long long>(tri.diagonals.size()) != p - 3)
        throw InvariantFailure("accordion construction: wrong diagonal count");
    tri.normalize();
    tri.validate();

    FramedTriangulation ft{std::move(tri), 0};
    if (!is_accordion(ft.tri)) throw InvariantFailure("accordion construction: not an accordion");
    std::vector<WeightRef> ws = weights_of(ft);
    if (static_cast<int>(ws.size()) != n) throw InvariantFailure("accordion construction: weight count drifted");
    for (int i = 0; i < n; ++i)
        if (ws[i].value != weights[i]) throw InvariantFailure("accordion construction: weight values drifted");
    WeightFan check = weight_type(ft, n);
    if (check.pair_start != mod1(m)) throw InvariantFailure("accordion construction: hidden fan landed wrong");
    return ft;
}

std::optional<FramedTriangulation> standard_frame(const Triangulation& t) {
    if (!is_accordion(t)) throw InvalidInput("standard_frame: not an accordion triangulation");
    std::vector<int> idx = t.vertex_indices();

    std::optional<FramedTriangulation> best;
    std::optional<ExtZeroChain> best_chain;
    int weight_count = static_cast<int>(std::count_if(idx.begin(), idx.end(), [](int v) { return v > 2; }));
    for (int v = 0; v < t.size; ++v) {
        if (idx[v] <= 2) continue;
        FramedTriangulation ft{t, v};
        ExtZeroChain chain = index_vector(ft);
        if (chain.body.front() != 1) continue;
        if (weight_count >= 2) {
            WeightFan fan = weight_type(ft, weight_count); // hidden is the last weight
            if (!fan.type_one) continue;
        }
        if (!best_chain || chain < *best_chain) {
            best = ft;
            best_chain = chain;
        }
    }
    return best;
}

} // namespace wormhole
