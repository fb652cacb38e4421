#ifndef SCX_RATFUNC_HPP
#define SCX_RATFUNC_HPP

#include <stdexcept>
#include <string>
#include <utility>

#include "scx/laurent.hpp"

namespace scx {

// Element of the fraction field of Z[T^{+-1}] (or of F2[T^{+-1}] when the
// operands are reduced mod 2 beforehand). Stored as num/den with a light
// normalization: denominator primitive with positive leading coefficient and
// min exponent 0. Equality is cross multiplication; full gcd reduction runs
// only when entries start growing.
class RationalFunction {
public:
    RationalFunction() : num_(), den_(1) {}
    RationalFunction(long long n) : num_(n), den_(1) {}
    RationalFunction(LaurentPoly n) : num_(std::move(n)), den_(1) {}
    RationalFunction(LaurentPoly n, LaurentPoly d) : num_(std::move(n)), den_(std::move(d)) {
        if (den_.is_zero()) throw std::domain_error("RationalFunction: zero denominator");
        normalize();
    }

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
        if (b.is_zero()) throw std::domain_error("RationalFunction: division by zero");
        return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
    }
    RationalFunction operator-() const {
        RationalFunction r = *this;
        r.num_ = -r.num_;
        return r;
    }
    RationalFunction& operator+=(const RationalFunction& o) { *this = *this + o; return *this; }
    RationalFunction& operator-=(const RationalFunction& o) { *this = *this - o; return *this; }
    RationalFunction& operator*=(const RationalFunction& o) { *this = *this * o; return *this; }
    RationalFunction& operator/=(const RationalFunction& o) { *this = *this / o; return *this; }

    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return (a.num_ * b.den_) == (b.num_ * a.den_);
    }

    std::string to_string() const {
        if (den_.is_one()) return num_.to_string();
        return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
    }

private:
    LaurentPoly num_, den_;

    void normalize() {
        if (num_.is_zero()) { den_ = LaurentPoly(1); return; }
        // pull out the T-power and content of den
        std::int64_t sh = den_.min_exp();
        if (sh != 0) {
            num_ = num_ * LaurentPoly::t_power(-sh);
            den_ = den_ * LaurentPoly::t_power(-sh);
        }
        BigInt cd = den_.content();
        BigInt cn = num_.content();
        BigInt g = gcd(cn.abs(), cd.abs());
        if (cd.sign() < 0) g = -g;
        if (!g.is_one()) {
            num_ = divide_content(num_, g);
            den_ = divide_content(den_, g);
        }
        if (den_.is_one()) return;
        if (num_.term_count() * den_.term_count() > 16) {
            LaurentPoly g2 = laurent_gcd(num_, den_);
            if (!g2.is_unit() && !g2.is_zero() && g2.term_count() > 1) {
                num_ = exact_div(num_, g2);
                den_ = exact_div(den_, g2);
                normalize();
            }
        }
    }
    static LaurentPoly divide_content(const LaurentPoly& p, const BigInt& g) {
        LaurentPoly r;
        for (const auto& [e, c] : p.terms()) r.set_coeff(e, c / g);
        return r;
    }
};

} // namespace scx

#endif
