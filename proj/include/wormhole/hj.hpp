#pragma once

// Hirzebruch-Jung continued fractions over exact rationals: evaluation,
// expansion, Riemenschneider duality and the W-chain calculus.

#include "wormhole/rational.hpp"

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace wormhole {

using Entry = std::int64_t;
using Chain = std::vector<Entry>;

// Cyclic quotient singularity 1/m(1,q), 0 < q < m, gcd(m,q) = 1.
struct SingularityLabel {
    BigInt m;
    BigInt q;

    bool operator==(const SingularityLabel& o) const { return m == o.m && q == o.q; }
};

// Value of [e_1,...,e_r] = e_1 - 1/(e_2 - 1/(... - 1/e_r)) by back-to-front
// numerator/denominator recursion. Returns the undefined rational when the
// chain is not admissible: some entry < 1, a proper tail <= 0 (or exactly 0,
// which would divide by zero one level up), or a negative total value.
Rational eval_chain(const Chain& chain);

bool is_zero_chain(const Chain& chain);

// The unique expansion of a rational > 1 into a chain with all entries >= 2.
Chain expand_rational(const Rational& value);

// Dual of a chain with entries >= 2 via the Riemenschneider dot diagram:
// if the chain evaluates to m/q, the result evaluates to m/(m-q).
Chain dual_chain(const Chain& chain);

// If the chain is the minimal resolution of a Wahl singularity 1/n^2(1,na-1),
// i.e. it reduces to [4] by inverting the L/R operations, returns (n, a).
std::optional<std::pair<BigInt, BigInt>> recognize_w_chain(const Chain& chain);

// L-operation [e_1,...,e_r] -> [2,e_1,...,e_r+1] and
// R-operation [e_1,...,e_r] -> [e_1+1,...,e_r,2] generating W-chains from [4].
Chain l_op(const Chain& chain);
Chain r_op(const Chain& chain);

// The companion operations on dual W-chains, generating from [2,2,2]:
// R^v : [k_1,...,k_s] -> [2,k_1,...,k_s+1], L^v : [k_1,...,k_s] -> [k_1+1,...,k_s,2].
Chain dual_r_op(const Chain& chain);
Chain dual_l_op(const Chain& chain);

// Reads m/(m-q) off a dual chain and returns the label 1/m(1,q).
SingularityLabel singularity_from_dual(const Chain& dual);

} // namespace wormhole
