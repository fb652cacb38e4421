#ifndef SCX_RATIONAL_HPP
#define SCX_RATIONAL_HPP

#include <limits>
#include <string>
#include <stdexcept>
#include <compare>

#include "scx/bigint.hpp"

namespace scx {

// Exact rational with canonical form: reduced, denominator > 0.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}
    Rational(int n) : num_(n), den_(1) {}
    Rational(BigInt n) : num_(std::move(n)), den_(1) {}
    Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }
    Rational(long long n, long long d) : num_(n), den_(d) { normalize(); }

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_integer() const { return den_.is_one(); }
    int sign() const { return num_.sign(); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw std::domain_error("Rational: division by zero");
        return Rational(a.num_ * b.den_, a.den_ * b.num_);
    }
    Rational operator-() const {
        Rational r = *this;
        r.num_ = -r.num_;
        return r;
    }
    Rational& operator+=(const Rational& o) { *this = *this + o; return *this; }
    Rational& operator-=(const Rational& o) { *this = *this - o; return *this; }
    Rational& operator*=(const Rational& o) { *this = *this * o; return *this; }
    Rational& operator/=(const Rational& o) { *this = *this / o; return *this; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        return (a.num_ * b.den_) <=> (b.num_ * a.den_);
    }

    std::string to_string() const {
        if (den_.is_one()) return num_.to_string();
        return num_.to_string() + "/" + den_.to_string();
    }

    BigInt floor() const {
        BigInt q, r;
        BigInt::divmod(num_, den_, q, r);
        if (!r.is_zero() && num_.sign() < 0) q -= BigInt(1);
        return q;
    }
    BigInt ceil() const { return -((-*this).floor()); }

private:
    BigInt num_, den_;
    void normalize() {
        if (den_.is_zero()) throw std::domain_error("Rational: zero denominator");
        if (den_.sign() < 0) { num_ = -num_; den_ = -den_; }
        if (num_.is_zero()) { den_ = BigInt(1); return; }
        BigInt g = gcd(num_, den_);
        if (!g.is_one()) { num_ = num_ / g; den_ = den_ / g; }
    }
};

// Rational extended by a single point at infinity; the value type of the
// Gamma invariant. Infinity compares greater than every finite value.
class GammaValue {
public:
    GammaValue() : finite_(true), value_(0) {}
    GammaValue(Rational v) : finite_(true), value_(std::move(v)) {}
    static GammaValue infinity() {
        GammaValue g;
        g.finite_ = false;
        return g;
    }
    bool is_infinite() const { return !finite_; }
    const Rational& value() const {
        if (!finite_) throw std::logic_error("GammaValue: infinite");
        return value_;
    }
    friend bool operator==(const GammaValue& a, const GammaValue& b) {
        if (a.finite_ != b.finite_) return false;
        return !a.finite_ || a.value_ == b.value_;
    }
    friend bool operator<(const GammaValue& a, const GammaValue& b) {
        if (!a.finite_) return false;
        if (!b.finite_) return true;
        return a.value_ < b.value_;
    }
    bool operator<=(const GammaValue& b) const { return *this < b || *this == b; }
    std::string to_string() const { return finite_ ? value_.to_string() : "inf"; }

private:
    bool finite_;
    Rational value_;
};

// The field with two elements, used for characteristic-2 computations.
struct F2 {
    unsigned char v = 0;
    F2() = default;
    F2(int x) : v(static_cast<unsigned char>(((x % 2) + 2) % 2)) {}
    F2(const BigInt& x) : v(x.even() ? 0 : 1) {}
    bool is_zero() const { return v == 0; }
    friend F2 operator+(F2 a, F2 b) { return F2(a.v ^ b.v); }
    friend F2 operator-(F2 a, F2 b) { return F2(a.v ^ b.v); }
    friend F2 operator*(F2 a, F2 b) { return F2(a.v & b.v); }
    friend F2 operator/(F2 a, F2 b) {
        if (b.is_zero()) throw std::domain_error("F2: division by zero");
        return a;
    }
    F2 operator-() const { return *this; }
    friend bool operator==(F2 a, F2 b) { return a.v == b.v; }
    std::string to_string() const { return v ? "1" : "0"; }
};

} // namespace scx

#endif
