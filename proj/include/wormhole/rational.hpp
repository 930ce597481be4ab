#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace wormhole {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational with arbitrary-precision numerator/denominator.
// Always stored in lowest terms with positive denominator. A distinguished
// undefined state (den == 0) marks division-by-zero during chain evaluation.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }
    explicit Rational(BigInt n) : num_(std::move(n)), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}

    static Rational undefined() {
        Rational r;
        r.num_ = 0;
        r.den_ = 0;
        return r;
    }

    bool defined() const { return den_ != 0; }
    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    bool is_zero() const { return defined() && num_ == 0; }
    int sign() const { return num_ == 0 ? 0 : (num_ > 0 ? 1 : -1); }

    // e - 1/x for integer e; undefined stays undefined, 1/0 becomes undefined.
    static Rational hj_step(const BigInt& e, const Rational& x) {
        if (!x.defined() || x.num_ == 0) return undefined();
        Rational r;
        r.num_ = e * x.num_ - x.den_;
        r.den_ = x.num_;
        r.normalize();
        return r;
    }

    Rational reciprocal() const {
        if (!defined() || num_ == 0) return undefined();
        return Rational(den_, num_);
    }

    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Rational& o) const { return !(*this == o); }

    bool operator<(const Rational& o) const {
        if (!defined() || !o.defined()) throw std::domain_error("comparison with undefined rational");
        return num_ * o.den_ < o.num_ * den_;
    }
    bool operator>(const Rational& o) const { return o < *this; }
    bool operator<=(const Rational& o) const { return !(o < *this); }
    bool operator>=(const Rational& o) const { return !(*this < o); }

    std::string str() const {
        if (!defined()) return "undefined";
        return num_.str() + "/" + den_.str();
    }

private:
    void normalize() {
        if (den_ == 0) {
            num_ = 0;
            return;
        }
        if (den_ < 0) {
            den_ = -den_;
            num_ = -num_;
        }
        BigInt g = boost::multiprecision::gcd(num_ < 0 ? BigInt(-num_) : num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    BigInt num_;
    BigInt den_;
};

} // namespace wormhole
