#pragma once

// WW-sequences and decompositions, extremal P-resolution counting, the HTU
// reduction, the classification of basic wormhole triangulations, and
// singularity recovery from companion pairs.

#include "wormhole/coherent.hpp"
#include "wormhole/triangulation.hpp"

#include <optional>
#include <string>
#include <vector>

namespace wormhole {

// Zero chain obtained from a sequence of entries >= 2 by decrementing the
// two marked positions 1 <= alpha < beta <= s.
struct WWDecomposition {
    int alpha = 0;
    int beta = 0;
    ExtZeroChain chain;
};

// All marks (alpha, beta) whose double decrement yields a zero chain, in
// lexicographic order.
std::vector<WWDecomposition> ww_decompositions(const Chain& seq);

// Shared hidden index of the decompositions; empty when none exist.
std::optional<Entry> ww_index(const Chain& seq);

struct PResolutionReport {
    SingularityLabel label;
    Chain minimal_resolution; // chain of m/q
    Chain dual;               // chain of m/(m-q)
    std::vector<WWDecomposition> decompositions;
    std::optional<Entry> index;
    bool wormhole = false; // >= 2 extremal P-resolutions
    bool basic = false;    // wormhole with WW-index > 1
};

PResolutionReport p_resolution_report(const BigInt& m, const BigInt& q);

// Rotate the extended vector (b_1,...,b_s,b_0) r steps and drop the last
// entry; empty result when an entry <= 1 would enter the sequence.
std::optional<Chain> cyclic_permutation(const Chain& seq, int r);

enum class PolygonEnd { front, back }; // new hidden at P_1 resp. P_s

struct HtuStep {
    bool degenerate = false;
    PolygonEnd end = PolygonEnd::back;
    Chain next;
    std::string note; // set when the step rule could not be applied cleanly
};

// One ear removal on a WW-sequence with index 1 and >= 2 decompositions.
// Degenerate when the decompositions force opposite ends (or the forced
// rule is not applicable), which is exactly the 3..3,2,2,3..3 obstruction.
HtuStep htu_step(const Chain& seq);

struct HtuOutcome {
    bool degenerate = false;
    Chain seq; // final sequence: index > 1 (basic) or the degenerate one
    std::vector<HtuStep> trace;
    std::size_t decomposition_count = 0;
    bool matches_degenerate_pattern = false; // 3^a,2,2,3^b, only set when degenerate
    std::string note;
};

HtuOutcome htu_reduce(const Chain& seq);

bool matches_degenerate_pattern(const Chain& seq);

// One parametric family together with its template pair instantiated at the
// given parameters and the cyclic shifts that stay valid for both chains.
struct ClassifiedPair {
    ParametricFamily family;
    std::vector<long long> params;
    ExtZeroChain first;  // rotation 0 member
    ExtZeroChain second; // rotation m companion
    std::vector<int> valid_reframings; // shift amounts r, 0 = identity
};

// Template pair of the family at the given parameter values.
ClassifiedPair instantiate_pair(const ParametricFamily& fam, const std::vector<long long>& params);

// Shift amounts r for which the rotated hidden entry exceeds 1 in both chains.
std::vector<int> valid_reframings(const ExtZeroChain& a, const ExtZeroChain& b);

// Both chains rotated by the same shift r.
std::pair<ExtZeroChain, ExtZeroChain> reframe_pair(const ClassifiedPair& pair, int r);
ExtZeroChain rotate_extended(const ExtZeroChain& chain, int r);

// All parametric families of basic wormhole triangulation pairs with n
// weights, instantiated at their minimal parameters.
std::vector<ClassifiedPair> classify_families(int n);

struct RecoveredSingularity {
    SingularityLabel label;
    Chain dual;
    Chain minimal_resolution;
};

// Reads the wormhole singularity off a companion pair: the two chains must
// agree except at four positions swapping {1,1} with {2,2}.
RecoveredSingularity recover_singularity(const ExtZeroChain& a, const ExtZeroChain& b);

} // namespace wormhole
