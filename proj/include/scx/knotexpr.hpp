#ifndef SCX_KNOTEXPR_HPP
#define SCX_KNOTEXPR_HPP

#include <cctype>
#include <string>
#include <stdexcept>

#include "scx/twobridge.hpp"

namespace scx {

// Knot-expression grammar shared by the CLI and the JSON surfaces:
//   twobridge:p,q | torus:p,q | dtwist:m,n | unknot
//   mirror:<expr> | sum:<expr>+<expr> | Nx(<expr>)

struct KnotParseError : std::invalid_argument {
    std::size_t column;
    KnotParseError(std::size_t col, const std::string& msg)
        : std::invalid_argument("column " + std::to_string(col + 1) + ": " + msg), column(col) {}
};

namespace detail {

class KnotParser {
public:
    explicit KnotParser(const std::string& text) : s_(text) {}

    KnotSpec parse() {
        KnotSpec k = expr();
        skip_ws();
        if (pos_ != s_.size()) throw KnotParseError(pos_, "trailing input");
        return k;
    }

private:
    const std::string& s_;
    std::size_t pos_ = 0;

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eat(const std::string& word) {
        skip_ws();
        if (s_.compare(pos_, word.size(), word) == 0) {
            pos_ += word.size();
            return true;
        }
        return false;
    }
    void expect(char c) {
        skip_ws();
        if (pos_ >= s_.size() || s_[pos_] != c)
            throw KnotParseError(pos_, std::string("expected '") + c + "'");
        ++pos_;
    }
    long long number() {
        skip_ws();
        std::size_t start = pos_;
        if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) ++pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_ || (pos_ - start == 1 && !std::isdigit(static_cast<unsigned char>(s_[start]))))
            throw KnotParseError(start, "expected a number");
        return std::stoll(s_.substr(start, pos_ - start));
    }

    KnotSpec expr() {
        skip_ws();
        std::size_t at = pos_;
        if (eat("unknot")) return KnotSpec::unknot();
        if (eat("twobridge:")) {
            long long p = number();
            expect(',');
            long long q = number();
            return wrap(at, [&] { return KnotSpec::two_bridge(p, q); });
        }
        if (eat("torus:")) {
            long long p = number();
            expect(',');
            long long q = number();
            return wrap(at, [&] { return KnotSpec::torus(p, q); });
        }
        if (eat("dtwist:")) {
            long long m = number();
            expect(',');
            long long n = number();
            return wrap(at, [&] { return KnotSpec::double_twist(m, n); });
        }
        if (eat("mirror:")) return KnotSpec::mirror(expr());
        if (eat("sum:")) {
            KnotSpec a = expr();
            expect('+');
            KnotSpec b = expr();
            return KnotSpec::sum(std::move(a), std::move(b));
        }
        // N x ( expr )
        if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            long long n = number();
            if (n < 0) throw KnotParseError(at, "repetition count must be nonnegative");
            skip_ws();
            if (!eat("x")) throw KnotParseError(pos_, "expected 'x' after repetition count");
            expect('(');
            KnotSpec inner = expr();
            expect(')');
            if (n == 0) return KnotSpec::unknot();
            KnotSpec out = inner;
            for (long long i = 1; i < n; ++i) out = KnotSpec::sum(out, inner);
            return out;
        }
        throw KnotParseError(pos_, "expected a knot expression");
    }

    template <typename Fn>
    KnotSpec wrap(std::size_t at, Fn&& fn) {
        try {
            return fn();
        } catch (const std::invalid_argument& e) {
            throw KnotParseError(at, e.what());
        }
    }
};

}  // namespace detail

inline KnotSpec parse_knot_expr(const std::string& text) {
    return detail::KnotParser(text).parse();
}

} // namespace scx

#endif
