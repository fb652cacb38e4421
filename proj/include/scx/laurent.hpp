#ifndef SCX_LAURENT_HPP
#define SCX_LAURENT_HPP

#include <cstdint>
#include <map>
#include <string>
#include <stdexcept>
#include <utility>

#include "scx/bigint.hpp"
#include "scx/rational.hpp"

namespace scx {

// Coefficient rings supported throughout: Z[T^{+-1}], its quotient by T^4-1,
// and F2[T^{+-1}].
enum class RingSpec { Generic, T4Quotient, Char2 };

inline std::string ring_name(RingSpec r) {
    switch (r) {
        case RingSpec::Generic: return "generic";
        case RingSpec::T4Quotient: return "t4";
        case RingSpec::Char2: return "char2";
    }
    return "?";
}

inline RingSpec ring_from_name(const std::string& s) {
    if (s == "generic") return RingSpec::Generic;
    if (s == "t4" || s == "t4-quotient") return RingSpec::T4Quotient;
    if (s == "char2" || s == "char2-generic") return RingSpec::Char2;
    throw std::invalid_argument("unknown ring: " + s);
}

// Element of Z[T^{+-1}]: finite map exponent -> nonzero coefficient.
class LaurentPoly {
public:
    using Terms = std::map<std::int64_t, BigInt>;

    LaurentPoly() = default;
    LaurentPoly(long long c) {
        if (c != 0) terms_[0] = BigInt(c);
    }
    LaurentPoly(const BigInt& c) {
        if (!c.is_zero()) terms_[0] = c;
    }

    static LaurentPoly monomial(const BigInt& c, std::int64_t exp) {
        LaurentPoly p;
        if (!c.is_zero()) p.terms_[exp] = c;
        return p;
    }
    static LaurentPoly t_power(std::int64_t exp) { return monomial(BigInt(1), exp); }
    // T^2 - T^{-2}, the universal matrix-entry unit of 2-bridge complexes.
    static LaurentPoly epsilon() {
        LaurentPoly p;
        p.terms_[2] = BigInt(1);
        p.terms_[-2] = BigInt(-1);
        return p;
    }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const {
        return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second.is_one();
    }
    // Unit of Z[T^{+-1}]: +-T^k.
    bool is_unit() const {
        return terms_.size() == 1 &&
               (terms_.begin()->second.is_one() || terms_.begin()->second.is_neg_one());
    }
    std::size_t term_count() const { return terms_.size(); }
    std::int64_t min_exp() const {
        if (terms_.empty()) throw std::logic_error("min_exp of zero");
        return terms_.begin()->first;
    }
    std::int64_t max_exp() const {
        if (terms_.empty()) throw std::logic_error("max_exp of zero");
        return terms_.rbegin()->first;
    }
    BigInt coeff(std::int64_t exp) const {
        auto it = terms_.find(exp);
        return it == terms_.end() ? BigInt() : it->second;
    }
    void set_coeff(std::int64_t exp, const BigInt& c) {
        if (c.is_zero()) terms_.erase(exp);
        else terms_[exp] = c;
    }

    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r = a;
        for (const auto& [e, c] : b.terms_) {
            BigInt s = r.coeff(e) + c;
            r.set_coeff(e, s);
        }
        return r;
    }
    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return a + (-b); }
    LaurentPoly operator-() const {
        LaurentPoly r;
        for (const auto& [e, c] : terms_) r.terms_[e] = -c;
        return r;
    }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                std::int64_t e = ea + eb;
                BigInt s = r.coeff(e) + ca * cb;
                r.set_coeff(e, s);
            }
        return r;
    }
    LaurentPoly& operator+=(const LaurentPoly& o) { *this = *this + o; return *this; }
    LaurentPoly& operator-=(const LaurentPoly& o) { *this = *this - o; return *this; }
    LaurentPoly& operator*=(const LaurentPoly& o) { *this = *this * o; return *this; }

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator<(const LaurentPoly& a, const LaurentPoly& b) {
        auto key = [](const LaurentPoly& p) {
            std::string s;
            for (const auto& [e, c] : p.terms())
                s += std::to_string(e) + ":" + c.to_string() + ";";
            return s;
        };
        return key(a) < key(b);
    }

    LaurentPoly pow(unsigned k) const {
        LaurentPoly r(1);
        for (unsigned i = 0; i < k; ++i) r *= *this;
        return r;
    }

    // Reduce into the chosen ring; idempotent.
    LaurentPoly reduced(RingSpec ring) const {
        switch (ring) {
            case RingSpec::Generic: return *this;
            case RingSpec::T4Quotient: {
                LaurentPoly r;
                for (const auto& [e, c] : terms_) {
                    std::int64_t f = ((e % 4) + 4) % 4;
                    r.set_coeff(f, r.coeff(f) + c);
                }
                return r;
            }
            case RingSpec::Char2: {
                LaurentPoly r;
                for (const auto& [e, c] : terms_)
                    if (!c.even()) r.terms_[e] = BigInt(1);
                return r;
            }
        }
        return *this;
    }
    bool is_zero_in(RingSpec ring) const { return reduced(ring).is_zero(); }

    // Integer content with the sign of the leading (highest-exponent) term.
    BigInt content() const {
        BigInt g;
        for (const auto& [e, c] : terms_) g = gcd(g, c);
        if (!g.is_zero() && terms_.rbegin()->second.sign() < 0) g = -g;
        return g;
    }

    // Exact division; throws if the division has a remainder.
    friend LaurentPoly exact_div(const LaurentPoly& a, const LaurentPoly& b) {
        if (b.is_zero()) throw std::domain_error("LaurentPoly: division by zero");
        if (a.is_zero()) return LaurentPoly();
        LaurentPoly rem = a, q;
        const std::int64_t db = b.max_exp();
        const BigInt& lb = b.terms_.rbegin()->second;
        // any exact quotient has exponents in [a.min - b.min, a.max - b.max]
        const std::int64_t lo = a.min_exp() - b.min_exp();
        while (!rem.is_zero()) {
            std::int64_t e = rem.max_exp() - db;
            if (e < lo) throw std::domain_error("LaurentPoly: inexact division");
            BigInt c = rem.terms_.rbegin()->second;
            BigInt qq, rr;
            BigInt::divmod(c, lb, qq, rr);
            if (!rr.is_zero()) throw std::domain_error("LaurentPoly: inexact division");
            LaurentPoly m = monomial(qq, e);
            q += m;
            rem -= m * b;
        }
        return q;
    }

    // Evaluate at T = x over the rationals (tests use this as an oracle).
    Rational eval(const Rational& x) const {
        Rational r(0);
        for (const auto& [e, c] : terms_) {
            Rational p(1);
            std::int64_t n = e >= 0 ? e : -e;
            for (std::int64_t i = 0; i < n; ++i) p *= x;
            if (e < 0) p = Rational(1) / p;
            r += Rational(c) * p;
        }
        return r;
    }

    // Canonical rendering, terms in increasing exponent: "-T^-2 + T^2".
    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string s;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            BigInt a = c.abs();
            if (first) {
                if (c.sign() < 0) s += "-";
                first = false;
            } else {
                s += c.sign() < 0 ? " - " : " + ";
            }
            if (e == 0) {
                s += a.to_string();
            } else {
                if (!a.is_one()) s += a.to_string() + "*";
                s += "T";
                if (e != 1) s += "^" + std::to_string(e);
            }
        }
        return s;
    }

private:
    Terms terms_;
};

inline LaurentPoly laurent_eps() { return LaurentPoly::epsilon(); }

enum class LaurentOp { Add, Mul, Neg };

// Exact arithmetic reduced in the requested ring.
inline LaurentPoly laurent_arith(const LaurentPoly& a, const LaurentPoly& b, LaurentOp op,
                                 RingSpec ring) {
    LaurentPoly r;
    switch (op) {
        case LaurentOp::Add: r = a + b; break;
        case LaurentOp::Mul: r = a * b; break;
        case LaurentOp::Neg: r = -a; break;
    }
    return r.reduced(ring);
}

// Primitive-PRS gcd on Z[T^{+-1}]; result is primitive with positive leading
// coefficient (up to a T power normalization: min_exp 0).
inline LaurentPoly laurent_gcd(LaurentPoly a, LaurentPoly b) {
    auto shift0 = [](LaurentPoly p) {
        if (p.is_zero()) return p;
        LaurentPoly r;
        std::int64_t m = p.min_exp();
        for (const auto& [e, c] : p.terms()) r.set_coeff(e - m, c);
        return r;
    };
    auto primitive = [&](LaurentPoly p) {
        if (p.is_zero()) return p;
        p = shift0(p);
        BigInt ct = p.content();
        LaurentPoly r;
        for (const auto& [e, c] : p.terms()) r.set_coeff(e, c / ct);
        return r;
    };
    a = primitive(a);
    b = primitive(b);
    while (!b.is_zero()) {
        // pseudo-remainder of a by b
        LaurentPoly r = a;
        const std::int64_t db = b.max_exp();
        const BigInt lb = b.coeff(db);
        while (!r.is_zero() && r.max_exp() >= db) {
            std::int64_t e = r.max_exp() - db;
            BigInt lr = r.coeff(r.max_exp());
            LaurentPoly scaled;
            for (const auto& [ee, cc] : r.terms()) scaled.set_coeff(ee, cc * lb);
            r = scaled - LaurentPoly::monomial(lr, e) * b;
        }
        a = b;
        b = primitive(r);
    }
    return primitive(a);
}

} // namespace scx

#endif
