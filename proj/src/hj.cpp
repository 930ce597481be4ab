#include "wormhole/hj.hpp"

#include "wormhole/errors.hpp"

#include <algorithm>
#include <limits>

namespace wormhole {

Rational eval_chain(const Chain& chain) {
    if (chain.empty()) return Rational::undefined();
    for (Entry e : chain)
        if (e < 1) return Rational::undefined();

    // Tail value as num/den, kept coprime automatically: each step maps
    // (num, den) -> (e*num - den, num) and gcd(e*num - den, num) = gcd(den, num).
    BigInt num = chain.back();
    BigInt den = 1;
    for (std::size_t i = chain.size() - 1; i-- > 0;) {
        // The tail just computed sits at level i+1 >= 2 and must be > 0.
        if (num <= 0) return Rational::undefined();
        BigInt next_num = BigInt(chain[i]) * num - den;
        den = num;
        num = next_num;
    }
    if (num < 0) return Rational::undefined();
    return Rational(num, den);
}

bool is_zero_chain(const Chain& chain) {
    Rational v = eval_chain(chain);
    return v.defined() && v.num() == 0;
}

namespace {

Entry checked_entry(const BigInt& e) {
    if (e > std::numeric_limits<Entry>::max())
        throw InvalidInput("chain entry exceeds supported magnitude");
    return static_cast<Entry>(e);
}

} // namespace

Chain expand_rational(const Rational& value) {
    if (!value.defined()) throw InvalidInput("expand_rational: undefined rational");
    if (value.num() <= value.den()) throw InvalidInput("expand_rational: value must be > 1");

    Chain out;
    BigInt num = value.num();
    BigInt den = value.den();
    while (true) {
        BigInt e = (num + den - 1) / den; // ceil(num/den)
        out.push_back(checked_entry(e));
        BigInt r = e * den - num;
        if (r == 0) break;
        num = den;
        den = r;
    }
    return out;
}

Chain dual_chain(const Chain& chain) {
    if (chain.empty()) throw InvalidInput("dual_chain: empty chain");
    for (Entry e : chain)
        if (e < 2) throw InvalidInput("dual_chain: entries must be >= 2");

    // Split as [2^{a_1}, b_1, 2^{a_2}, b_2, ..., b_{c-1}, 2^{a_c}] with b_i >= 3.
    std::vector<Entry> runs;   // a_1, ..., a_c
    std::vector<Entry> bigs;   // b_1, ..., b_{c-1}
    Entry run = 0;
    for (Entry e : chain) {
        if (e == 2) {
            ++run;
        } else {
            runs.push_back(run);
            bigs.push_back(e);
            run = 0;
        }
    }
    runs.push_back(run);

    if (bigs.empty()) {
        // [2,...,2] of length a has value (a+1)/a, dual (a+1)/1 = [a+1].
        return Chain{runs[0] + 1};
    }

    Chain out;
    out.push_back(runs.front() + 2);
    for (std::size_t i = 0; i < bigs.size(); ++i) {
        out.insert(out.end(), static_cast<std::size_t>(bigs[i] - 3), 2);
        if (i + 1 < bigs.size())
            out.push_back(runs[i + 1] + 3);
    }
    out.push_back(runs.back() + 2);
    return out;
}

Chain l_op(const Chain& chain) {
    Chain out;
    out.reserve(chain.size() + 1);
    out.push_back(2);
    out.insert(out.end(), chain.begin(), chain.end());
    out.back() += 1;
    return out;
}

Chain r_op(const Chain& chain) {
    Chain out = chain;
    out.front() += 1;
    out.push_back(2);
    return out;
}

Chain dual_r_op(const Chain& chain) { return l_op(chain); }

Chain dual_l_op(const Chain& chain) { return r_op(chain); }

std::optional<std::pair<BigInt, BigInt>> recognize_w_chain(const Chain& chain) {
    if (chain.empty()) throw InvalidInput("recognize_w_chain: empty chain");
    for (Entry e : chain)
        if (e < 2) throw InvalidInput("recognize_w_chain: entries must be >= 2");

    // Undo L (strip leading 2, decrement last) / R (strip trailing 2,
    // decrement first) until [4]. L/R outputs have exactly one end equal to 2,
    // so at most one inverse applies at each step.
    Chain cur = chain;
    while (cur.size() >= 2) {
        bool front2 = cur.front() == 2;
        bool back2 = cur.back() == 2;
        if (front2 == back2) return std::nullopt;
        if (front2) {
            cur.erase(cur.begin());
            if (--cur.back() < 2) return std::nullopt;
        } else {
            cur.pop_back();
            if (--cur.front() < 2) return std::nullopt;
        }
    }
    if (cur != Chain{4}) return std::nullopt;

    // Recover (n, a) from the value n^2/(na-1) rather than replaying steps.
    Rational v = eval_chain(chain);
    if (!v.defined()) return std::nullopt;
    BigInt n = boost::multiprecision::sqrt(v.num());
    if (n * n != v.num()) return std::nullopt;
    BigInt a = (v.den() + 1) / n;
    if (a * n != v.den() + 1) return std::nullopt;
    if (!(a > 0 && a < n) || boost::multiprecision::gcd(n, a) != 1) return std::nullopt;
    return std::make_pair(n, a);
}

SingularityLabel singularity_from_dual(const Chain& dual) {
    for (Entry e : dual)
        if (e < 2) throw InvalidInput("singularity_from_dual: entries must be >= 2");
    Rational v = eval_chain(dual);
    if (!v.defined()) throw InvalidInput("singularity_from_dual: chain is not admissible");
    // v = m/(m-q) in lowest terms.
    BigInt m = v.num();
    BigInt q = m - v.den();
    if (q <= 0 || q >= m) throw InvalidInput("singularity_from_dual: value must exceed 1");
    return SingularityLabel{m, q};
}

} // namespace wormhole
