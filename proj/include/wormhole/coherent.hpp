#pragma once

// Coherent graphs of framed triangulations, the induced linear relation
// systems, the closed-form consistency test and parametric solving.

#include "wormhole/triangulation.hpp"

#include <vector>

namespace wormhole {

// Cycle on the weights x_1..x_n with gap labels y_1..y_n.
struct CoherentGraph {
    std::vector<Entry> weights;
    std::vector<Entry> labels;

    bool operator==(const CoherentGraph& o) const {
        return weights == o.weights && labels == o.labels;
    }
    bool operator!=(const CoherentGraph& o) const { return !(*this == o); }
};

CoherentGraph build_coherent_graph(const FramedTriangulation& ft);
CoherentGraph build_coherent_graph(const ExtZeroChain& chain);

// One relation y_gap = x_weight - constant. For the single-weight convention
// the constant is -1, i.e. y_1 = x_1 + 1.
struct Relation {
    int gap = 0;
    int weight = 0;
    int constant = 0;

    bool operator==(const Relation& o) const {
        return gap == o.gap && weight == o.weight && constant == o.constant;
    }
};

// Relations read off the diagonal arrangement of a framed accordion
// triangulation, one per gap; exactly two carry constant 1 when n >= 2.
std::vector<Relation> relation_system_of(const FramedTriangulation& ft);

// Constants of the rotated system: entries in {1,3}, two positions equal 1.
std::vector<int> k_vector(int n, int m);

// The closed-form system for the standard family after an m-fold rotation:
// y_i = x_{(n-i)+m (mod n)} - k_i^(m).
std::vector<Relation> rotation_relations(int n, int m);

// Whether the combined systems for rotations 0 and m admit a solution.
bool consistency(int n, int m);

// Independent route: orbit sums of v_i = k^(0) - k^(m) under i -> i+m.
bool cycle_sum_consistency(int n, int m);

// Solution lattice of the combined system, anchored at positions 1..gcd(n,m).
struct ParametricFamily {
    int n = 0;
    int m = 0;
    std::vector<long long> offsets;   // per weight position 1..n
    int param_count = 0;              // gcd(n,m)
    std::vector<long long> param_min; // least value keeping the orbit >= 3

    // Weight tuple at the given parameter values (one per orbit).
    std::vector<Entry> instantiate(const std::vector<long long>& params) const;
    std::vector<Entry> instantiate_minimal() const { return instantiate(param_min); }
};

ParametricFamily solve_parametric(int n, int m);

} // namespace wormhole
