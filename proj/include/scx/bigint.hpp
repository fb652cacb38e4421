#ifndef SCX_BIGINT_HPP
#define SCX_BIGINT_HPP

#include <cstdint>
#include <cstdlib>
#include <string>
#include <vector>
#include <stdexcept>
#include <algorithm>
#include <compare>

namespace scx {

// Arbitrary-precision signed integer. Limbs are base 2^32, little endian,
// no trailing zero limbs; zero is the empty limb vector with sign 0.
class BigInt {
public:
    BigInt() : sign_(0) {}
    BigInt(long long v) { assign(v); }
    BigInt(int v) { assign(static_cast<long long>(v)); }

    static BigInt from_string(const std::string& s) {
        BigInt r;
        std::size_t i = 0;
        int sg = 1;
        if (i < s.size() && (s[i] == '-' || s[i] == '+')) {
            if (s[i] == '-') sg = -1;
            ++i;
        }
        if (i == s.size()) throw std::invalid_argument("BigInt: empty numeral");
        for (; i < s.size(); ++i) {
            if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("BigInt: bad digit");
            r.mul_small_inplace(10);
            r.add_small_inplace(static_cast<std::uint32_t>(s[i] - '0'));
        }
        r.sign_ = r.limbs_.empty() ? 0 : sg;
        return r;
    }

    bool is_zero() const { return sign_ == 0; }
    int sign() const { return sign_; }
    bool is_one() const { return sign_ == 1 && limbs_.size() == 1 && limbs_[0] == 1; }
    bool is_neg_one() const { return sign_ == -1 && limbs_.size() == 1 && limbs_[0] == 1; }

    bool fits_ll() const {
        if (limbs_.size() > 2) return false;
        unsigned long long m = mag_ull();
        return m <= 0x7fffffffffffffffULL || (sign_ < 0 && m == 0x8000000000000000ULL);
    }
    long long to_ll() const {
        if (!fits_ll()) throw std::overflow_error("BigInt: does not fit long long");
        unsigned long long m = mag_ull();
        return sign_ < 0 ? -static_cast<long long>(m) : static_cast<long long>(m);
    }

    BigInt operator-() const {
        BigInt r = *this;
        r.sign_ = -r.sign_;
        return r;
    }
    BigInt abs() const {
        BigInt r = *this;
        if (r.sign_ < 0) r.sign_ = 1;
        return r;
    }

    friend BigInt operator+(const BigInt& a, const BigInt& b) {
        if (a.sign_ == 0) return b;
        if (b.sign_ == 0) return a;
        BigInt r;
        if (a.sign_ == b.sign_) {
            r.limbs_ = add_mag(a.limbs_, b.limbs_);
            r.sign_ = a.sign_;
        } else {
            int c = cmp_mag(a.limbs_, b.limbs_);
            if (c == 0) return BigInt();
            if (c > 0) {
                r.limbs_ = sub_mag(a.limbs_, b.limbs_);
                r.sign_ = a.sign_;
            } else {
                r.limbs_ = sub_mag(b.limbs_, a.limbs_);
                r.sign_ = b.sign_;
            }
        }
        return r;
    }
    friend BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

    friend BigInt operator*(const BigInt& a, const BigInt& b) {
        if (a.sign_ == 0 || b.sign_ == 0) return BigInt();
        BigInt r;
        r.limbs_.assign(a.limbs_.size() + b.limbs_.size(), 0);
        for (std::size_t i = 0; i < a.limbs_.size(); ++i) {
            std::uint64_t carry = 0;
            for (std::size_t j = 0; j < b.limbs_.size(); ++j) {
                std::uint64_t cur = static_cast<std::uint64_t>(a.limbs_[i]) * b.limbs_[j] +
                                    r.limbs_[i + j] + carry;
                r.limbs_[i + j] = static_cast<std::uint32_t>(cur);
                carry = cur >> 32;
            }
            std::size_t k = i + b.limbs_.size();
            while (carry) {
                std::uint64_t cur = r.limbs_[k] + carry;
                r.limbs_[k] = static_cast<std::uint32_t>(cur);
                carry = cur >> 32;
                ++k;
            }
        }
        r.trim();
        r.sign_ = a.sign_ * b.sign_;
        return r;
    }

    // Truncated division; remainder has the sign of the dividend.
    static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
        if (b.sign_ == 0) throw std::domain_error("BigInt: division by zero");
        if (a.sign_ == 0) { q = BigInt(); r = BigInt(); return; }
        int c = cmp_mag(a.limbs_, b.limbs_);
        if (c < 0) { q = BigInt(); r = a; return; }
        divmod_mag(a.limbs_, b.limbs_, q.limbs_, r.limbs_);
        q.sign_ = q.limbs_.empty() ? 0 : a.sign_ * b.sign_;
        r.sign_ = r.limbs_.empty() ? 0 : a.sign_;
    }
    friend BigInt operator/(const BigInt& a, const BigInt& b) {
        BigInt q, r;
        divmod(a, b, q, r);
        return q;
    }
    friend BigInt operator%(const BigInt& a, const BigInt& b) {
        BigInt q, r;
        divmod(a, b, q, r);
        return r;
    }

    BigInt& operator+=(const BigInt& o) { *this = *this + o; return *this; }
    BigInt& operator-=(const BigInt& o) { *this = *this - o; return *this; }
    BigInt& operator*=(const BigInt& o) { *this = *this * o; return *this; }

    friend bool operator==(const BigInt& a, const BigInt& b) {
        return a.sign_ == b.sign_ && a.limbs_ == b.limbs_;
    }
    friend std::strong_ordering operator<=>(const BigInt& a, const BigInt& b) {
        if (a.sign_ != b.sign_) return a.sign_ <=> b.sign_;
        int c = cmp_mag(a.limbs_, b.limbs_);
        if (a.sign_ >= 0) return c <=> 0;
        return 0 <=> c;
    }

    static BigInt gcd(BigInt a, BigInt b) {
        a.sign_ = a.limbs_.empty() ? 0 : 1;
        b.sign_ = b.limbs_.empty() ? 0 : 1;
        while (!b.is_zero()) {
            BigInt q, r;
            divmod(a, b, q, r);
            a = b;
            b = r;
        }
        return a;
    }

    bool even() const { return limbs_.empty() || (limbs_[0] & 1u) == 0; }

    std::string to_string() const {
        if (sign_ == 0) return "0";
        std::vector<std::uint32_t> tmp = limbs_;
        std::string digits;
        while (!tmp.empty()) {
            std::uint64_t rem = 0;
            for (std::size_t i = tmp.size(); i-- > 0;) {
                std::uint64_t cur = (rem << 32) | tmp[i];
                tmp[i] = static_cast<std::uint32_t>(cur / 1000000000ULL);
                rem = cur % 1000000000ULL;
            }
            while (!tmp.empty() && tmp.back() == 0) tmp.pop_back();
            for (int k = 0; k < 9; ++k) {
                digits.push_back(static_cast<char>('0' + rem % 10));
                rem /= 10;
            }
        }
        while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
        std::string out;
        if (sign_ < 0) out.push_back('-');
        out.append(digits.rbegin(), digits.rend());
        return out;
    }

private:
    int sign_;
    std::vector<std::uint32_t> limbs_;

    void assign(long long v) {
        limbs_.clear();
        if (v == 0) { sign_ = 0; return; }
        sign_ = v > 0 ? 1 : -1;
        unsigned long long m = v > 0 ? static_cast<unsigned long long>(v)
                                     : ~static_cast<unsigned long long>(v) + 1ULL;
        while (m) {
            limbs_.push_back(static_cast<std::uint32_t>(m));
            m >>= 32;
        }
    }
    unsigned long long mag_ull() const {
        unsigned long long m = 0;
        if (limbs_.size() > 1) m = static_cast<unsigned long long>(limbs_[1]) << 32;
        if (!limbs_.empty()) m |= limbs_[0];
        return m;
    }
    void trim() {
        while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
        if (limbs_.empty()) sign_ = 0;
    }
    void mul_small_inplace(std::uint32_t m) {
        std::uint64_t carry = 0;
        for (auto& l : limbs_) {
            std::uint64_t cur = static_cast<std::uint64_t>(l) * m + carry;
            l = static_cast<std::uint32_t>(cur);
            carry = cur >> 32;
        }
        while (carry) {
            limbs_.push_back(static_cast<std::uint32_t>(carry));
            carry >>= 32;
        }
    }
    void add_small_inplace(std::uint32_t v) {
        std::uint64_t carry = v;
        for (std::size_t i = 0; carry && i < limbs_.size(); ++i) {
            std::uint64_t cur = limbs_[i] + carry;
            limbs_[i] = static_cast<std::uint32_t>(cur);
            carry = cur >> 32;
        }
        if (carry) limbs_.push_back(static_cast<std::uint32_t>(carry));
        if (!limbs_.empty()) sign_ = sign_ == 0 ? 1 : sign_;
    }

    static int cmp_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
        if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
        for (std::size_t i = a.size(); i-- > 0;)
            if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
        return 0;
    }
    static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b) {
        std::vector<std::uint32_t> r(std::max(a.size(), b.size()) + 1, 0);
        std::uint64_t carry = 0;
        for (std::size_t i = 0; i < r.size(); ++i) {
            std::uint64_t cur = carry;
            if (i < a.size()) cur += a[i];
            if (i < b.size()) cur += b[i];
            r[i] = static_cast<std::uint32_t>(cur);
            carry = cur >> 32;
        }
        while (!r.empty() && r.back() == 0) r.pop_back();
        return r;
    }
    // requires |a| >= |b|
    static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b) {
        std::vector<std::uint32_t> r = a;
        std::int64_t borrow = 0;
        for (std::size_t i = 0; i < r.size(); ++i) {
            std::int64_t cur = static_cast<std::int64_t>(r[i]) - borrow -
                               (i < b.size() ? b[i] : 0);
            borrow = 0;
            if (cur < 0) { cur += (1LL << 32); borrow = 1; }
            r[i] = static_cast<std::uint32_t>(cur);
        }
        while (!r.empty() && r.back() == 0) r.pop_back();
        return r;
    }

    // Knuth algorithm D on normalized limbs.
    static void divmod_mag(const std::vector<std::uint32_t>& a,
                           const std::vector<std::uint32_t>& b,
                           std::vector<std::uint32_t>& q,
                           std::vector<std::uint32_t>& r) {
        if (b.size() == 1) {
            q.assign(a.size(), 0);
            std::uint64_t rem = 0;
            for (std::size_t i = a.size(); i-- > 0;) {
                std::uint64_t cur = (rem << 32) | a[i];
                q[i] = static_cast<std::uint32_t>(cur / b[0]);
                rem = cur % b[0];
            }
            while (!q.empty() && q.back() == 0) q.pop_back();
            r.clear();
            if (rem) r.push_back(static_cast<std::uint32_t>(rem));
            return;
        }
        int shift = 0;
        for (std::uint32_t top = b.back(); !(top & 0x80000000u); top <<= 1) ++shift;
        std::vector<std::uint32_t> u = shl_bits(a, shift);
        std::vector<std::uint32_t> v = shl_bits(b, shift);
        std::size_t n = v.size(), m = u.size() - n;
        u.push_back(0);
        q.assign(m + 1, 0);
        for (std::size_t j = m + 1; j-- > 0;) {
            std::uint64_t num = (static_cast<std::uint64_t>(u[j + n]) << 32) | u[j + n - 1];
            std::uint64_t qh = num / v[n - 1];
            std::uint64_t rh = num % v[n - 1];
            while (qh >= (1ULL << 32) ||
                   qh * v[n - 2] > ((rh << 32) | u[j + n - 2])) {
                --qh;
                rh += v[n - 1];
                if (rh >= (1ULL << 32)) break;
            }
            // multiply-subtract
            std::int64_t borrow = 0;
            std::uint64_t carry = 0;
            for (std::size_t i = 0; i < n; ++i) {
                std::uint64_t p = qh * v[i] + carry;
                carry = p >> 32;
                std::int64_t t = static_cast<std::int64_t>(u[i + j]) -
                                 static_cast<std::int64_t>(p & 0xffffffffULL) - borrow;
                borrow = 0;
                if (t < 0) { t += (1LL << 32); borrow = 1; }
                u[i + j] = static_cast<std::uint32_t>(t);
            }
            std::int64_t t = static_cast<std::int64_t>(u[j + n]) -
                             static_cast<std::int64_t>(carry) - borrow;
            if (t < 0) {
                // qh was one too large
                t += (1LL << 32);
                --qh;
                std::uint64_t carry2 = 0;
                for (std::size_t i = 0; i < n; ++i) {
                    std::uint64_t cur = static_cast<std::uint64_t>(u[i + j]) + v[i] + carry2;
                    u[i + j] = static_cast<std::uint32_t>(cur);
                    carry2 = cur >> 32;
                }
                t += static_cast<std::int64_t>(carry2);
                t &= 0xffffffffLL;
            }
            u[j + n] = static_cast<std::uint32_t>(t);
            q[j] = static_cast<std::uint32_t>(qh);
        }
        while (!q.empty() && q.back() == 0) q.pop_back();
        u.resize(n);
        r = shr_bits(u, shift);
    }
    static std::vector<std::uint32_t> shl_bits(std::vector<std::uint32_t> v, int s) {
        if (s == 0) return v;
        std::uint32_t carry = 0;
        for (auto& l : v) {
            std::uint32_t nc = l >> (32 - s);
            l = (l << s) | carry;
            carry = nc;
        }
        if (carry) v.push_back(carry);
        return v;
    }
    static std::vector<std::uint32_t> shr_bits(std::vector<std::uint32_t> v, int s) {
        if (s != 0) {
            for (std::size_t i = 0; i < v.size(); ++i) {
                std::uint32_t hi = (i + 1 < v.size()) ? v[i + 1] << (32 - s) : 0;
                v[i] = (v[i] >> s) | hi;
            }
        }
        while (!v.empty() && v.back() == 0) v.pop_back();
        return v;
    }
};

inline BigInt abs(const BigInt& a) { return a.abs(); }
inline BigInt gcd(const BigInt& a, const BigInt& b) { return BigInt::gcd(a, b); }

} // namespace scx

#endif
