#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

#include "graviton/amounts.hpp"

namespace graviton {

using bigint = boost::multiprecision::cpp_int;

inline bigint to_bigint(u128 v) {
    bigint hi = static_cast<std::uint64_t>(v >> 64);
    bigint lo = static_cast<std::uint64_t>(v);
    return (hi << 64) | lo;
}

// Exact rational, always normalized with a positive denominator. Used for
// queries (spot price, slippage), feed values and metrics; token arithmetic
// itself never touches this type.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(bigint n, bigint d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }
    explicit Rational(std::int64_t n) : num_(n), den_(1) {}
    static Rational from_u128(u128 n, u128 d) { return Rational(to_bigint(n), to_bigint(d)); }

    const bigint& num() const { return num_; }
    const bigint& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_positive() const { return num_ > 0; }

    Rational operator+(const Rational& o) const { return {num_ * o.den_ + o.num_ * den_, den_ * o.den_}; }
    Rational operator-(const Rational& o) const { return {num_ * o.den_ - o.num_ * den_, den_ * o.den_}; }
    Rational operator*(const Rational& o) const { return {num_ * o.num_, den_ * o.den_}; }
    Rational operator/(const Rational& o) const { return {num_ * o.den_, den_ * o.num_}; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return a.num_ * b.den_ < b.num_ * a.den_;
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    // Canonical "num/den" form, e.g. "4/1", "-1/2".
    std::string str() const { return num_.str() + "/" + den_.str(); }

private:
    void normalize() {
        check(den_ != 0, Errc::Overflow, "rational with zero denominator");
        if (den_ < 0) { num_ = -num_; den_ = -den_; }
        bigint g = boost::multiprecision::gcd(num_ < 0 ? bigint(-num_) : num_, den_);
        if (g > 1) { num_ /= g; den_ /= g; }
        if (num_ == 0) den_ = 1;
    }

    bigint num_;
    bigint den_;
};

} // namespace graviton
