#pragma once

// Triangulated convex polygons, the bijection with extended zero chains,
// accordion triangulations and framing utilities.

#include "wormhole/hj.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace wormhole {

// Zero chain [b_1,...,b_s | b_0] with its hidden index made explicit.
// The hidden index is forced by the sum rule b_0 + sum b_i = 3(s-1).
struct ExtZeroChain {
    Chain body;
    Entry hidden = 0;

    std::size_t length() const { return body.size(); }

    // Full cyclic reading vector (b_1,...,b_s,b_0).
    Chain reading_vector() const {
        Chain v = body;
        v.push_back(hidden);
        return v;
    }

    bool operator==(const ExtZeroChain& o) const { return hidden == o.hidden && body == o.body; }
    bool operator!=(const ExtZeroChain& o) const { return !(*this == o); }
    bool operator<(const ExtZeroChain& o) const {
        return body != o.body ? body < o.body : hidden < o.hidden;
    }

    // Checks the sum rule and that the body is a zero chain; throws otherwise.
    void validate() const;
};

// Full triangulation of a convex polygon, vertices 0..size-1 counterclockwise.
struct Triangulation {
    int size = 0;
    std::vector<std::pair<int, int>> diagonals; // normalized i < j, sorted

    void normalize();
    void validate() const; // non-adjacent, non-crossing, count == size-3

    std::vector<int> vertex_indices() const; // index = diagonals at vertex + 1

    bool operator==(const Triangulation& o) const {
        return size == o.size && diagonals == o.diagonals;
    }
    bool operator!=(const Triangulation& o) const { return !(*this == o); }
};

// Triangulation with a chosen hidden vertex. Two framed triangulations are
// equal exactly when their extended zero chains agree entrywise.
struct FramedTriangulation {
    Triangulation tri;
    int hidden = 0;

    bool operator==(const FramedTriangulation& o) const;
    bool operator!=(const FramedTriangulation& o) const { return !(*this == o); }
};

// Chain entry for vertex v is (diagonals at v) + 1; the body reads vertices
// hidden+1, ..., hidden+s (mod p) counterclockwise.
ExtZeroChain index_vector(const FramedTriangulation& ft);

// Inverse bijection by iterated ear-cutting. The result places the hidden
// vertex at 0 and body position i at vertex i.
FramedTriangulation from_extended_chain(const ExtZeroChain& chain);

FramedTriangulation reframe(const FramedTriangulation& ft, int new_hidden);

// Exactly two vertices of index 1.
bool is_accordion(const Triangulation& t);

struct WeightRef {
    int pos = 0;    // reading-order position 1..s+1; s+1 is the hidden slot
    Entry value = 0;
};

// Entries > 2 of the reading vector (b_1,...,b_s,b_0), in reading order.
std::vector<WeightRef> weights_of(const FramedTriangulation& ft);

struct WeightFan {
    bool type_one = false; // fan lands on (x_j, x_{j+1}) with j = i or j = i-1
    int pair_start = 0;    // j in 1..n, pair is (x_j, x_{j+1 mod n})
};

// Which consecutive pair of weights the fan of diagonals at weight i spans.
// Requires a framed accordion triangulation with n >= 2 weights.
WeightFan weight_type(const FramedTriangulation& ft, int weight_index);

// The unique accordion triangulation with weights x_1..x_n in cyclic order,
// hidden vertex x_n, whose diagonals from x_n span (x_m, x_{m+1}) (residue
// 0 -> n). Built by fan propagation over an explicit diagonal set.
FramedTriangulation accordion_family_member(const std::vector<Entry>& weights, int m);

// Framing whose hidden vertex is a type (I) weight and whose chain starts
// with 1; lexicographically smallest extended chain when several qualify.
std::optional<FramedTriangulation> standard_frame(const Triangulation& t);

} // namespace wormhole
