#include "wormhole/ww.hpp"

#include "wormhole/errors.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace wormhole;

namespace {

const Chain kDual31901{2, 2, 7, 2, 2, 3, 2, 2, 2, 2, 5, 5, 2, 2, 2, 2};

std::vector<std::pair<int, int>> marks_of(const std::vector<WWDecomposition>& decs) {
    std::vector<std::pair<int, int>> out;
    for (const auto& d : decs) out.emplace_back(d.alpha, d.beta);
    return out;
}

} // namespace

TEST_CASE("ww_decompositions pinned values") {
    std::vector<WWDecomposition> decs = ww_decompositions(kDual31901);
    REQUIRE(decs.size() == 2);
    CHECK(marks_of(decs) == std::vector<std::pair<int, int>>{{1, 10}, {5, 13}});
    CHECK(decs[0].chain == ExtZeroChain{{1, 2, 7, 2, 2, 3, 2, 2, 2, 1, 5, 5, 2, 2, 2, 2}, 3});
    CHECK(decs[1].chain == ExtZeroChain{{2, 2, 7, 2, 1, 3, 2, 2, 2, 2, 5, 5, 1, 2, 2, 2}, 3});

    CHECK(marks_of(ww_decompositions({3, 2, 2, 3})) ==
          std::vector<std::pair<int, int>>{{1, 3}, {2, 4}});
    CHECK(marks_of(ww_decompositions({2, 2, 2})) == std::vector<std::pair<int, int>>{{1, 3}});
    CHECK(ww_decompositions({2}).empty());
    CHECK_THROWS_AS(ww_decompositions({2, 1, 2}), InvalidInput);
}

TEST_CASE("ww_index pinned values") {
    CHECK(ww_index(kDual31901) == Entry{3});
    CHECK(ww_index({3, 2, 2, 3}) == Entry{1});
    CHECK(ww_index({2, 2}) == Entry{1});
    CHECK_FALSE(ww_index({5, 5}).has_value());
}

TEST_CASE("p_resolution_report pinned values") {
    PResolutionReport a = p_resolution_report(31901, 10000);
    CHECK(a.dual == kDual31901);
    CHECK(a.minimal_resolution == Chain{4, 2, 2, 2, 2, 5, 7, 2, 2, 3, 2, 2, 6});
    CHECK(a.decompositions.size() == 2);
    CHECK(a.index == Entry{3});
    CHECK(a.wormhole);
    CHECK(a.basic);

    PResolutionReport b = p_resolution_report(40223, 33798);
    CHECK(b.decompositions.size() == 2);
    CHECK(b.index == Entry{2});
    CHECK(b.basic);

    PResolutionReport c = p_resolution_report(16, 9);
    CHECK(c.dual == Chain{3, 2, 2, 3});
    CHECK(c.decompositions.size() == 2);
    CHECK(c.index == Entry{1});
    CHECK(c.wormhole);
    CHECK_FALSE(c.basic);

    CHECK_THROWS_AS(p_resolution_report(10, 4), InvalidInput);
    CHECK_THROWS_AS(p_resolution_report(10, 10), InvalidInput);
}

TEST_CASE("cyclic_permutation pinned values") {
    CHECK(cyclic_permutation(kDual31901, 0) == kDual31901);
    CHECK(cyclic_permutation(kDual31901, 17) == kDual31901); // full rotation, s+1 steps

    // The rotation that realizes the worked change of frame.
    CHECK(cyclic_permutation(kDual31901, 15) ==
          Chain{7, 2, 2, 3, 2, 2, 2, 2, 5, 5, 2, 2, 2, 2, 3, 2});

    // Index-1 sequences cannot rotate: the hidden 1 would enter the body.
    CHECK_FALSE(cyclic_permutation({3, 2, 2, 3}, 1).has_value());

    CHECK_THROWS_AS(cyclic_permutation({5, 5}, 1), InvalidInput);
}

TEST_CASE("rotations keep at least as many decompositions when the guard holds") {
    // b_{s-(r-1)} >= 3 guards the rotation; check over every scanned wormhole
    // dual of small order and every guarded shift.
    for (const Chain& seq : {kDual31901, Chain{7, 2, 2, 3, 2, 2, 2, 2, 5, 5, 2, 2, 2, 2, 3, 2}}) {
        std::size_t base = ww_decompositions(seq).size();
        const int s = static_cast<int>(seq.size());
        for (int r = 1; r <= s; ++r) {
            if (seq[s - r] < 3) continue; // guard entry b_{s-(r-1)}
            auto rotated = cyclic_permutation(seq, r);
            if (!rotated) continue;
            CHECK(ww_decompositions(*rotated).size() >= base);
        }
    }
}

TEST_CASE("htu_step pinned values") {
    HtuStep deg = htu_step({3, 2, 2, 3});
    CHECK(deg.degenerate);
    CHECK(deg.note == "decompositions force opposite ends");

    HtuStep deg2 = htu_step({3, 3, 2, 2, 3, 3});
    CHECK(deg2.degenerate);

    CHECK_THROWS_AS(htu_step(kDual31901), InvalidInput);  // index 3, precondition fails
    CHECK_THROWS_AS(htu_step({2, 2, 2}), InvalidInput);   // single decomposition
}

TEST_CASE("htu_reduce pinned values") {
    HtuOutcome basic = htu_reduce(kDual31901);
    CHECK_FALSE(basic.degenerate);
    CHECK(basic.trace.empty());
    CHECK(basic.seq == kDual31901);
    CHECK(basic.decomposition_count == 2);

    HtuOutcome deg = htu_reduce({3, 2, 2, 3});
    CHECK(deg.degenerate);
    CHECK(deg.seq == Chain{3, 2, 2, 3});
    CHECK(deg.matches_degenerate_pattern);
    CHECK(deg.decomposition_count == 2);
}

TEST_CASE("degenerate pattern matcher") {
    CHECK(matches_degenerate_pattern({2, 2}));
    CHECK(matches_degenerate_pattern({3, 2, 2, 3}));
    CHECK(matches_degenerate_pattern({3, 3, 2, 2, 3}));
    CHECK_FALSE(matches_degenerate_pattern({3, 2, 3}));
    CHECK_FALSE(matches_degenerate_pattern({3, 2, 2, 2, 3}));
}

TEST_CASE("classify_families pinned tables") {
    std::vector<ClassifiedPair> two = classify_families(2);
    REQUIRE(two.size() == 1);
    CHECK(two[0].family.m == 1);
    CHECK(two[0].family.offsets == std::vector<long long>{0, 0});
    CHECK(two[0].family.param_min == std::vector<long long>{3});

    std::vector<ClassifiedPair> three = classify_families(3);
    REQUIRE(three.size() == 2);
    CHECK(three[0].family.m == 1);
    CHECK(three[0].family.offsets == std::vector<long long>{0, -2, 0});
    CHECK(three[0].family.param_min == std::vector<long long>{5});
    CHECK(three[1].family.m == 2);
    CHECK(three[1].family.offsets == std::vector<long long>{0, 0, -2});
    CHECK(three[1].family.param_min == std::vector<long long>{5});

    std::vector<ClassifiedPair> four = classify_families(4);
    REQUIRE(four.size() == 2); // m = 2 is inconsistent
    CHECK(four[0].family.m == 1);
    CHECK(four[0].family.offsets == std::vector<long long>{0, 0, 0, 0});
    CHECK(four[0].family.param_min == std::vector<long long>{3});
    CHECK(four[1].family.m == 3);
    CHECK(four[1].family.offsets == std::vector<long long>{0, -2, 0, -2});
    CHECK(four[1].family.param_min == std::vector<long long>{5});

    std::vector<ClassifiedPair> five = classify_families(5);
    REQUIRE(five.size() == 4);
    std::vector<std::vector<long long>> offsets;
    std::vector<long long> minima;
    for (const auto& p : five) {
        offsets.push_back(p.family.offsets);
        minima.push_back(p.family.param_min[0]);
    }
    CHECK(offsets == std::vector<std::vector<long long>>{
                         {0, 0, -2, 0, 0}, {0, 4, 0, 2, 2}, {0, -4, -2, -2, -4}, {0, 0, 0, 0, -2}});
    CHECK(minima == std::vector<long long>{5, 3, 7, 5});
}

TEST_CASE("classified pairs are companions at every sweep instantiation") {
    for (int n = 2; n <= 5; ++n)
        for (const ClassifiedPair& base : classify_families(n))
            for (int dt = 0; dt < 3; ++dt) {
                std::vector<long long> params = base.family.param_min;
                for (auto& p : params) p += dt;
                ClassifiedPair pair = instantiate_pair(base.family, params);

                CHECK(pair.first != pair.second);
                CHECK(build_coherent_graph(pair.first) == build_coherent_graph(pair.second));

                // Chains differ at exactly four positions swapping 1s and 2s.
                int diffs = 0, ones_a = 0, ones_b = 0;
                REQUIRE(pair.first.length() == pair.second.length());
                for (std::size_t i = 0; i < pair.first.length(); ++i) {
                    Entry x = pair.first.body[i], y = pair.second.body[i];
                    if (x != y) {
                        ++diffs;
                        CHECK(((x == 1 && y == 2) || (x == 2 && y == 1)));
                    }
                    ones_a += x == 1;
                    ones_b += y == 1;
                }
                CHECK(diffs == 4);
                CHECK(ones_a == 2);
                CHECK(ones_b == 2);
            }
}

TEST_CASE("valid reframings are exactly the shifts keeping both hiddens above 1") {
    ClassifiedPair pair = classify_families(2)[0];
    Chain wa = pair.first.reading_vector();
    Chain wb = pair.second.reading_vector();
    std::set<int> got(pair.valid_reframings.begin(), pair.valid_reframings.end());
    const int len = static_cast<int>(wa.size());
    for (int r = 0; r < len; ++r) {
        bool ok = wa[len - 1 - r] > 1 && wb[len - 1 - r] > 1;
        CHECK(ok == (got.count(r) > 0));
        if (!ok) continue;
        // A valid shift still yields a two-decomposition wormhole sequence.
        auto [ra, rb] = reframe_pair(pair, r);
        RecoveredSingularity rec = recover_singularity(ra, rb);
        CHECK(ww_decompositions(rec.dual).size() == 2);
    }
    CHECK(got.count(0) == 1);
}

TEST_CASE("recover_singularity pinned values") {
    // Family (n=5, m=3) at t=7 gives the 17-gon pair.
    ParametricFamily fam = solve_parametric(5, 3);
    ClassifiedPair pair = instantiate_pair(fam, {7});
    CHECK(pair.first == ExtZeroChain{{1, 2, 7, 2, 2, 3, 2, 2, 2, 1, 5, 5, 2, 2, 2, 2}, 3});
    CHECK(pair.second == ExtZeroChain{{2, 2, 7, 2, 1, 3, 2, 2, 2, 2, 5, 5, 1, 2, 2, 2}, 3});

    RecoveredSingularity rec = recover_singularity(pair.first, pair.second);
    CHECK(rec.label.m == 31901);
    CHECK(rec.label.q == 10000);
    CHECK(rec.dual == kDual31901);
    CHECK(rec.minimal_resolution == Chain{4, 2, 2, 2, 2, 5, 7, 2, 2, 3, 2, 2, 6});

    // The r=15 change of frame recovers the second wormhole of the example.
    REQUIRE(std::count(pair.valid_reframings.begin(), pair.valid_reframings.end(), 15) == 1);
    auto [ra, rb] = reframe_pair(pair, 15);
    CHECK(ra == ExtZeroChain{{7, 2, 2, 3, 2, 2, 2, 1, 5, 5, 2, 2, 2, 2, 3, 1}, 2});
    CHECK(rb == ExtZeroChain{{7, 2, 1, 3, 2, 2, 2, 2, 5, 5, 1, 2, 2, 2, 3, 2}, 2});
    RecoveredSingularity rec2 = recover_singularity(ra, rb);
    CHECK(rec2.label.m == 40223);
    CHECK(rec2.label.q == 33798);
    CHECK(rec2.minimal_resolution == Chain{2, 2, 2, 2, 2, 5, 7, 2, 2, 3, 2, 2, 7, 3});

    // n=2 at the minimum recovers a two-decomposition wormhole.
    ClassifiedPair small = classify_families(2)[0];
    RecoveredSingularity rec3 = recover_singularity(small.first, small.second);
    PResolutionReport rep = p_resolution_report(rec3.label.m, rec3.label.q);
    CHECK(rep.decompositions.size() == 2);

    CHECK_THROWS_AS(recover_singularity(pair.first, pair.first), InvalidInput);
}
