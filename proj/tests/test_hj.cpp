#include "wormhole/hj.hpp"

#include "wormhole/errors.hpp"

#include <doctest.h>

#include <functional>
#include <random>

using namespace wormhole;

namespace {

Rational ratio(long long n, long long d) { return Rational(BigInt(n), BigInt(d)); }

// Small deterministic corpus of admissible chains with entries in 2..6:
// exhaustive up to length 6, seeded samples for lengths 7..12.
std::vector<Chain> bounded_chain_corpus() {
    std::vector<Chain> out;
    std::function<void(Chain&)> rec = [&](Chain& c) {
        if (!c.empty()) out.push_back(c);
        if (c.size() == 6) return;
        for (Entry e = 2; e <= 6; ++e) {
            c.push_back(e);
            rec(c);
            c.pop_back();
        }
    };
    Chain c;
    rec(c);
    std::mt19937 rng(20250810);
    std::uniform_int_distribution<int> entry(2, 6);
    for (int len = 7; len <= 12; ++len)
        for (int i = 0; i < 400; ++i) {
            Chain chain(len);
            for (auto& e : chain) e = entry(rng);
            out.push_back(chain);
        }
    return out;
}

} // namespace

TEST_CASE("eval_chain pinned values") {
    CHECK(eval_chain({2, 1, 2}) == ratio(0, 1));
    CHECK(eval_chain({2, 2, 7, 2, 2, 3, 2, 2, 2, 2, 5, 5, 2, 2, 2, 2}) == ratio(31901, 21901));
    CHECK_FALSE(eval_chain({1, 1, 2}).defined());
    // Tail hitting zero before the outermost level divides by zero.
    CHECK_FALSE(eval_chain({3, 2, 1, 2}).defined());
    CHECK(eval_chain({4}) == ratio(4, 1));
    CHECK(eval_chain({1, 1}) == ratio(0, 1));
    CHECK_FALSE(eval_chain({}).defined());
    CHECK_FALSE(eval_chain({0, 2}).defined());
}

TEST_CASE("is_zero_chain") {
    CHECK(is_zero_chain({1, 1}));
    CHECK(is_zero_chain({2, 2, 1, 3}));
    CHECK_FALSE(is_zero_chain({2, 2, 2, 2}));
    CHECK_FALSE(is_zero_chain({1, 1, 2}));
}

TEST_CASE("expand_rational pinned values") {
    CHECK(expand_rational(ratio(31901, 10000)) ==
          Chain{4, 2, 2, 2, 2, 5, 7, 2, 2, 3, 2, 2, 6});
    CHECK(expand_rational(ratio(4, 1)) == Chain{4});
    CHECK(expand_rational(ratio(9, 2)) == Chain{5, 2});
    CHECK_THROWS_AS(expand_rational(ratio(1, 1)), InvalidInput);
    CHECK_THROWS_AS(expand_rational(ratio(2, 3)), InvalidInput);
}

TEST_CASE("dual_chain pinned values") {
    CHECK(dual_chain({4, 2, 2, 2, 2, 5, 7, 2, 2, 3, 2, 2, 6}) ==
          Chain{2, 2, 7, 2, 2, 3, 2, 2, 2, 2, 5, 5, 2, 2, 2, 2});
    CHECK(dual_chain({2}) == Chain{2});
    CHECK(dual_chain({4}) == Chain{2, 2, 2});
    CHECK(dual_chain({2, 2, 2}) == Chain{4});
    CHECK_THROWS_AS(dual_chain({3, 1, 3}), InvalidInput);
}

TEST_CASE("duality properties over bounded corpus") {
    for (const Chain& c : bounded_chain_corpus()) {
        Chain dual = dual_chain(c);

        // Involution.
        CHECK(dual_chain(dual) == c);

        // expand . eval is the identity on entries >= 2.
        Rational v = eval_chain(c);
        REQUIRE(v.defined());
        CHECK(expand_rational(v) == c);

        // Dual agrees with expanding m/(m-q) directly.
        Rational dv = Rational(v.num(), v.num() - v.den());
        CHECK(expand_rational(dv) == dual);

        // Duality closure: [e_1..e_r, 1, k_s..k_1] = 0.
        Chain closed = c;
        closed.push_back(1);
        closed.insert(closed.end(), dual.rbegin(), dual.rend());
        CHECK(is_zero_chain(closed));
    }
}

TEST_CASE("w-chain recognition pinned values") {
    auto four = recognize_w_chain({4});
    REQUIRE(four.has_value());
    CHECK(four->first == 2);
    CHECK(four->second == 1);

    auto fifty_two = recognize_w_chain({5, 2});
    REQUIRE(fifty_two.has_value());
    CHECK(fifty_two->first == 3);
    CHECK(fifty_two->second == 1);

    CHECK_FALSE(recognize_w_chain({2, 2}).has_value());
    CHECK_FALSE(recognize_w_chain({3, 3}).has_value());
    CHECK_FALSE(recognize_w_chain({2, 5, 2}).has_value());
}

TEST_CASE("w-chain generation and recognition are inverse up to 8 operations") {
    for (int mask_len = 0; mask_len <= 8; ++mask_len)
        for (int mask = 0; mask < (1 << mask_len); ++mask) {
            Chain c{4};
            for (int i = 0; i < mask_len; ++i) c = (mask >> i) & 1 ? l_op(c) : r_op(c);
            auto na = recognize_w_chain(c);
            REQUIRE_MESSAGE(na.has_value(), "ops mask " << mask << " len " << mask_len);
            const BigInt& n = na->first;
            const BigInt& a = na->second;
            CHECK(a > 0);
            CHECK(a < n);
            CHECK(boost::multiprecision::gcd(n, a) == 1);
            CHECK(eval_chain(c) == Rational(n * n, n * a - 1));

            // The dual of a W-chain reduces to [2,2,2] by inverting the
            // companion operations on dual chains.
            Chain dual = dual_chain(c);
            while (dual.size() > 3) {
                if (dual.front() == 2 && dual.back() != 2) { // invert R^v
                    dual.erase(dual.begin());
                    --dual.back();
                } else if (dual.back() == 2 && dual.front() != 2) { // invert L^v
                    dual.pop_back();
                    --dual.front();
                } else {
                    break;
                }
            }
            CHECK(dual == Chain{2, 2, 2});
        }
}

TEST_CASE("singularity_from_dual pinned values") {
    SingularityLabel a = singularity_from_dual({2, 2, 7, 2, 2, 3, 2, 2, 2, 2, 5, 5, 2, 2, 2, 2});
    CHECK(a.m == 31901);
    CHECK(a.q == 10000);

    SingularityLabel b = singularity_from_dual({7, 2, 2, 3, 2, 2, 2, 2, 5, 5, 2, 2, 2, 2, 3, 2});
    CHECK(b.m == 40223);
    CHECK(b.q == 33798);

    SingularityLabel c = singularity_from_dual({2});
    CHECK(c.m == 2);
    CHECK(c.q == 1);
}
