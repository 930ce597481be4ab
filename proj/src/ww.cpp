#include "wormhole/ww.hpp"

#include "wormhole/errors.hpp"

#include <algorithm>
#include <numeric>

namespace wormhole {

namespace {

void require_ww_entries(const Chain& seq, const char* who) {
    if (seq.empty()) throw InvalidInput(std::string(who) + ": empty sequence");
    for (Entry e : seq)
        if (e < 2) throw InvalidInput(std::string(who) + ": entries must be >= 2");
}

Entry hidden_for(const Chain& body) {
    long long s = static_cast<long long>(body.size());
    return 3 * (s - 1) - std::accumulate(body.begin(), body.end(), 0LL);
}

} // namespace

std::vector<WWDecomposition> ww_decompositions(const Chain& seq) {
    require_ww_entries(seq, "ww_decompositions");
    const int s = static_cast<int>(seq.size());
    std::vector<WWDecomposition> out;
    Chain body = seq;
    for (int a = 1; a <= s; ++a) {
        --body[a - 1];
        for (int b = a + 1; b <= s; ++b) {
            --body[b - 1];
            if (is_zero_chain(body))
                out.push_back(WWDecomposition{a, b, ExtZeroChain{body, hidden_for(body)}});
            ++body[b - 1];
        }
        ++body[a - 1];
    }
    return out;
}

std::optional<Entry> ww_index(const Chain& seq) {
    require_ww_entries(seq, "ww_index");
    const int s = static_cast<int>(seq.size());
    Chain body = seq;
    for (int a = 1; a <= s; ++a) {
        --body[a - 1];
        for (int b = a + 1; b <= s; ++b) {
            --body[b - 1];
            bool zero = is_zero_chain(body);
            ++body[b - 1];
            if (zero) {
                --body[b - 1]; // any decomposition shares the hidden index
                Entry h = hidden_for(body);
                ++body[b - 1];
                ++body[a - 1];
                return h;
            }
        }
        ++body[a - 1];
    }
    return std::nullopt;
}

PResolutionReport p_resolution_report(const BigInt& m, const BigInt& q) {
    if (!(m >= 2) || !(q > 0) || !(q < m)) throw InvalidInput("p_resolution_report: need 0 < q < m");
    if (boost::multiprecision::gcd(m, q) != 1) throw InvalidInput("p_resolution_report: m and q must be coprime");

    PResolutionReport rep;
    rep.label = SingularityLabel{m, q};
    rep.minimal_resolution = expand_rational(Rational(m, q));
    rep.dual = dual_chain(rep.minimal_resolution);
    rep.decompositions = ww_decompositions(rep.dual);
    if (!rep.decompositions.empty()) rep.index = rep.decompositions.front().chain.hidden;
    rep.wormhole = rep.decompositions.size() >= 2;
    rep.basic = rep.wormhole && *rep.index > 1;
    return rep;
}

std::optional<Chain> cyclic_permutation(const Chain& seq, int r) {
    require_ww_entries(seq, "cyclic_permutation");
    std::optional<Entry> idx = ww_index(seq);
    if (!idx) throw InvalidInput("cyclic_permutation: sequence has no WW-index");

    Chain w = seq;
    w.push_back(*idx);
    const int len = static_cast<int>(w.size());
    r = ((r % len) + len) % len;
    // Rotate right r times, then drop the last entry.
    std::rotate(w.begin(), w.begin() + (len - r), w.end());
    w.pop_back();
    for (Entry e : w)
        if (e < 2) return std::nullopt;
    return w;
}

HtuStep htu_step(const Chain& seq) {
    require_ww_entries(seq, "htu_step");
    std::vector<WWDecomposition> decs = ww_decompositions(seq);
    if (decs.size() < 2) throw InvalidInput("htu_step: needs at least two decompositions");
    if (decs.front().chain.hidden != 1) throw InvalidInput("htu_step: WW-index must be 1");
    const std::size_t s = seq.size();

    // Hiding at P_1 drops b_1 and decrements b_s; a mark at position 1 would
    // be swallowed, and the decremented boundary entry must stay >= 2. The
    // mirror constraints govern hiding at P_s.
    bool front_value_ok = seq.back() >= 3;
    bool back_value_ok = seq.front() >= 3;
    bool front_marks_ok = true, back_marks_ok = true;
    for (const WWDecomposition& d : decs) {
        if (d.alpha == 1) front_marks_ok = false;
        if (d.beta == s) back_marks_ok = false;
    }
    bool front_ok = front_value_ok && front_marks_ok;
    bool back_ok = back_value_ok && back_marks_ok;

    HtuStep step;
    if (!front_ok && !back_ok) {
        step.degenerate = true;
        step.note = !front_marks_ok && !back_marks_ok ? "decompositions force opposite ends"
                                                      : "no admissible end for a common reframing";
        return step;
    }
    if (front_ok && back_ok) step.note = "both ends viable";
    step.end = back_ok ? PolygonEnd::back : PolygonEnd::front;

    Chain next;
    if (step.end == PolygonEnd::back) {
        next.assign(seq.begin(), seq.end() - 1);
        --next.front();
    } else {
        next.assign(seq.begin() + 1, seq.end());
        --next.back();
    }
    for (Entry e : next)
        if (e < 2) throw InvariantFailure("htu_step produced an entry below 2 past the end guards");
    std::size_t next_count = ww_decompositions(next).size();
    if (next_count != decs.size())
        throw InvariantFailure("htu_step changed the decomposition count from " +
                               std::to_string(decs.size()) + " to " + std::to_string(next_count) +
                               " at length " + std::to_string(s));
    step.next = std::move(next);
    return step;
}

bool matches_degenerate_pattern(const Chain& seq) {
    // 3,...,3,2,2,3,...,3 with a,b >= 0 threes.
    const int s = static_cast<int>(seq.size());
    for (int a = 0; a + 2 <= s; ++a) {
        bool ok = true;
        for (int i = 0; i < s && ok; ++i) {
            Entry want = (i >= a && i < a + 2) ? 2 : 3;
            ok = seq[i] == want;
        }
        if (ok) return true;
    }
    return false;
}

HtuOutcome htu_reduce(const Chain& seq) {
    require_ww_entries(seq, "htu_reduce");
    HtuOutcome out;
    out.seq = seq;
    std::vector<WWDecomposition> decs = ww_decompositions(seq);
    if (decs.size() < 2) throw InvalidInput("htu_reduce: needs at least two decompositions");
    out.decomposition_count = decs.size();

    while (true) {
        std::optional<Entry> idx = ww_index(out.seq);
        if (!idx) throw InvariantFailure("htu_reduce lost all decompositions");
        if (*idx > 1) {
            out.degenerate = false;
            return out;
        }
        HtuStep step = htu_step(out.seq);
        if (step.degenerate) {
            out.degenerate = true;
            out.note = step.note;
            out.matches_degenerate_pattern = matches_degenerate_pattern(out.seq);
            out.trace.push_back(step);
            return out;
        }
        out.seq = step.next;
        out.trace.push_back(step);
    }
}

ExtZeroChain rotate_extended(const ExtZeroChain& chain, int r) {
    Chain w = chain.reading_vector();
    const int len = static_cast<int>(w.size());
    r = ((r % len) + len) % len;
    std::rotate(w.begin(), w.begin() + (len - r), w.end());
    ExtZeroChain out;
    out.hidden = w.back();
    w.pop_back();
    out.body = std::move(w);
    return out;
}

std::vector<int> valid_reframings(const ExtZeroChain& a, const ExtZeroChain& b) {
    if (a.length() != b.length()) throw InvalidInput("valid_reframings: length mismatch");
    Chain wa = a.reading_vector();
    Chain wb = b.reading_vector();
    const int len = static_cast<int>(wa.size());
    std::vector<int> out;
    for (int r = 0; r < len; ++r) {
        int idx = len - 1 - r; // entry that becomes the hidden one, 0-based
        if (wa[idx] > 1 && wb[idx] > 1) out.push_back(r);
    }
    return out;
}

ClassifiedPair instantiate_pair(const ParametricFamily& fam, const std::vector<long long>& params) {
    ClassifiedPair pair;
    pair.family = fam;
    pair.params = params;
    std::vector<Entry> x = fam.instantiate(params);
    pair.first = index_vector(accordion_family_member(x, 0));
    pair.second = index_vector(accordion_family_member(x, fam.m));
    pair.valid_reframings = valid_reframings(pair.first, pair.second);
    return pair;
}

std::pair<ExtZeroChain, ExtZeroChain> reframe_pair(const ClassifiedPair& pair, int r) {
    return {rotate_extended(pair.first, r), rotate_extended(pair.second, r)};
}

std::vector<ClassifiedPair> classify_families(int n) {
    if (n < 2) throw InvalidInput("classify_families: needs n >= 2");
    std::vector<ClassifiedPair> out;
    for (int m = 1; m < n; ++m) {
        if (!consistency(n, m)) continue;
        ParametricFamily fam = solve_parametric(n, m);
        out.push_back(instantiate_pair(fam, fam.param_min));
    }
    return out;
}

RecoveredSingularity recover_singularity(const ExtZeroChain& a, const ExtZeroChain& b) {
    if (a.length() != b.length()) throw InvalidInput("recover_singularity: not companions (length mismatch)");
    if (a.hidden != b.hidden) throw InvalidInput("recover_singularity: not companions (hidden mismatch)");
    if (a.hidden < 2) throw InvalidInput("recover_singularity: hidden index must exceed 1");

    int a_ones = 0, b_ones = 0, diffs = 0;
    for (std::size_t i = 0; i < a.length(); ++i) {
        Entry x = a.body[i], y = b.body[i];
        if (x == 1) {
            ++a_ones;
            if (y != 2) throw InvalidInput("recover_singularity: not companions (1 not matched by 2)");
        }
        if (y == 1) {
            ++b_ones;
            if (x != 2) throw InvalidInput("recover_singularity: not companions (1 not matched by 2)");
        }
        if (x != y) ++diffs;
    }
    if (a_ones != 2 || b_ones != 2 || diffs != 4)
        throw InvalidInput("recover_singularity: not companions (four-position swap pattern fails)");

    Chain dual = a.body;
    for (Entry& e : dual)
        if (e == 1) e = 2;

    RecoveredSingularity rec;
    rec.label = singularity_from_dual(dual);
    rec.minimal_resolution = dual_chain(dual);
    rec.dual = std::move(dual);

    std::vector<WWDecomposition> decs = ww_decompositions(rec.dual);
    bool found_a = false, found_b = false;
    for (const WWDecomposition& d : decs) {
        found_a = found_a || d.chain.body == a.body;
        found_b = found_b || d.chain.body == b.body;
    }
    if (!found_a || !found_b)
        throw InvariantFailure("recover_singularity: chains are not decompositions of their own dual");
    return rec;
}

} // namespace wormhole
