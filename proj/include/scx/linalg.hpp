#ifndef SCX_LINALG_HPP
#define SCX_LINALG_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>
#include <stdexcept>

#include "scx/bigint.hpp"
#include "scx/rational.hpp"
#include "scx/ratfunc.hpp"

namespace scx {

// Sparse exact matrix over an arbitrary ring element type.
template <typename T>
class ExactMatrix {
public:
    ExactMatrix() : rows_(0), cols_(0) {}
    ExactMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
        if (rows < 0 || cols < 0) throw std::invalid_argument("ExactMatrix: negative size");
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const std::map<std::pair<int, int>, T>& entries() const { return entries_; }

    T get(int r, int c) const {
        check(r, c);
        auto it = entries_.find({r, c});
        return it == entries_.end() ? T() : it->second;
    }
    void set(int r, int c, const T& v) {
        check(r, c);
        if (v == T()) entries_.erase({r, c});
        else entries_[{r, c}] = v;
    }
    void add(int r, int c, const T& v) { set(r, c, get(r, c) + v); }
    bool is_zero() const { return entries_.empty(); }

    ExactMatrix transpose() const {
        ExactMatrix t(cols_, rows_);
        for (const auto& [rc, v] : entries_) t.set(rc.second, rc.first, v);
        return t;
    }
    friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("ExactMatrix: shape mismatch");
        std::vector<std::vector<std::pair<int, const T*>>> brows(b.rows_);
        for (const auto& [rc, vb] : b.entries_) brows[rc.first].push_back({rc.second, &vb});
        ExactMatrix r(a.rows_, b.cols_);
        for (const auto& [rc, va] : a.entries_)
            for (const auto& [c, vb] : brows[rc.second]) r.add(rc.first, c, va * (*vb));
        return r;
    }
    friend ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw std::invalid_argument("ExactMatrix: shape mismatch");
        ExactMatrix r = a;
        for (const auto& [rc, v] : b.entries_) r.add(rc.first, rc.second, v);
        return r;
    }
    friend ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b) {
        ExactMatrix nb = b;
        for (auto& [rc, v] : nb.entries_) v = -v;
        return a + nb;
    }
    friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
    }

    std::vector<T> apply(const std::vector<T>& x) const {
        if (static_cast<int>(x.size()) != cols_) throw std::invalid_argument("apply: size");
        std::vector<T> y(rows_, T());
        for (const auto& [rc, v] : entries_) y[rc.first] = y[rc.first] + v * x[rc.second];
        return y;
    }

private:
    int rows_, cols_;
    std::map<std::pair<int, int>, T> entries_;
    void check(int r, int c) const {
        if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
            throw std::out_of_range("ExactMatrix: index");
    }
};

// Incremental column echelon over a field F. Rows with index >= watched_from
// are "watched": a pivot landing there certifies a combination whose ordinary
// part vanishes but whose watched part does not.
template <typename F>
class Eliminator {
public:
    explicit Eliminator(int nrows, int watched_from = -1)
        : nrows_(nrows), watched_from_(watched_from < 0 ? nrows : watched_from) {}

    // Returns true if the column increased the rank.
    bool add_column(std::vector<F> col) {
        reduce(col);
        int p = first_nonzero(col);
        if (p < 0) return false;
        if (p >= watched_from_) watched_hit_ = true;
        pivots_[p] = std::move(col);
        return true;
    }
    // Reduce a vector against current pivots; true iff it lies in the span.
    bool in_span(std::vector<F> col) const {
        reduce(col);
        return first_nonzero(col) < 0;
    }
    bool watched_pivot() const { return watched_hit_; }
    int rank() const { return static_cast<int>(pivots_.size()); }

private:
    int nrows_;
    int watched_from_;
    bool watched_hit_ = false;
    std::map<int, std::vector<F>> pivots_;

    void reduce(std::vector<F>& col) const {
        for (const auto& [r, pv] : pivots_) {
            if (col[r] == F()) continue;
            F f = col[r] / pv[r];
            for (int i = 0; i < nrows_; ++i)
                if (!(pv[i] == F())) col[i] = col[i] - f * pv[i];
        }
    }
    int first_nonzero(const std::vector<F>& col) const {
        for (int i = 0; i < nrows_; ++i)
            if (!(col[i] == F())) return i;
        return -1;
    }
};

template <typename F>
int field_rank(const ExactMatrix<F>& m) {
    Eliminator<F> e(m.rows());
    for (int c = 0; c < m.cols(); ++c) {
        std::vector<F> col(m.rows(), F());
        for (int r = 0; r < m.rows(); ++r) col[r] = m.get(r, c);
        e.add_column(std::move(col));
    }
    return e.rank();
}

// Basis of the right kernel over the fraction field. Each vector is scaled so
// its first nonzero coordinate is 1.
template <typename F>
std::vector<std::vector<F>> field_kernel(const ExactMatrix<F>& m) {
    const int R = m.rows(), C = m.cols();
    // row echelon with full reduction
    std::vector<std::vector<F>> a(R, std::vector<F>(C, F()));
    for (const auto& [rc, v] : m.entries()) a[rc.first][rc.second] = v;
    std::vector<int> pivot_col;
    int rr = 0;
    for (int c = 0; c < C && rr < R; ++c) {
        int sel = -1;
        for (int r = rr; r < R; ++r)
            if (!(a[r][c] == F())) { sel = r; break; }
        if (sel < 0) continue;
        std::swap(a[sel], a[rr]);
        F inv = a[rr][c];
        for (int j = 0; j < C; ++j)
            if (!(a[rr][j] == F())) a[rr][j] = a[rr][j] / inv;
        for (int r = 0; r < R; ++r) {
            if (r == rr || a[r][c] == F()) continue;
            F f = a[r][c];
            for (int j = 0; j < C; ++j)
                if (!(a[rr][j] == F())) a[r][j] = a[r][j] - f * a[rr][j];
        }
        pivot_col.push_back(c);
        ++rr;
    }
    std::vector<bool> is_pivot(C, false);
    for (int c : pivot_col) is_pivot[c] = true;
    std::vector<std::vector<F>> basis;
    for (int f = 0; f < C; ++f) {
        if (is_pivot[f]) continue;
        std::vector<F> v(C, F());
        v[f] = F() + 1;
        for (std::size_t i = 0; i < pivot_col.size(); ++i) {
            // row i has pivot at pivot_col[i]
            v[pivot_col[i]] = F() - a[i][f];
        }
        // normalize: first nonzero coordinate becomes 1
        for (int j = 0; j < C; ++j)
            if (!(v[j] == F())) {
                F inv = v[j];
                for (int k = 0; k < C; ++k)
                    if (!(v[k] == F())) v[k] = v[k] / inv;
                break;
            }
        basis.push_back(std::move(v));
    }
    return basis;
}

// ---------------------------------------------------------------------------
// Integer (BigInt) dense linear algebra: Smith normal form and kernel lattice.

struct SmithResult {
    std::vector<BigInt> diag;      // d1 | d2 | ..., all >= 0
    std::vector<std::vector<BigInt>> right;  // unimodular V with A*V in column form
    int rank = 0;
};

// Smith normal form of a dense integer matrix; tracks the right transform so
// kernels come out as a lattice basis.
inline SmithResult smith_normal_form(std::vector<std::vector<BigInt>> a) {
    const int R = static_cast<int>(a.size());
    const int C = R ? static_cast<int>(a[0].size()) : 0;
    SmithResult res;
    res.right.assign(C, std::vector<BigInt>(C, BigInt()));
    for (int i = 0; i < C; ++i) res.right[i][i] = BigInt(1);

    auto col_addmul = [&](int dst, int src, const BigInt& f) {
        for (int r = 0; r < R; ++r) a[r][dst] += f * a[r][src];
        for (int r = 0; r < C; ++r) res.right[r][dst] += f * res.right[r][src];
    };
    auto col_swap = [&](int i, int j) {
        for (int r = 0; r < R; ++r) std::swap(a[r][i], a[r][j]);
        for (int r = 0; r < C; ++r) std::swap(res.right[r][i], res.right[r][j]);
    };
    auto col_neg = [&](int i) {
        for (int r = 0; r < R; ++r) a[r][i] = -a[r][i];
        for (int r = 0; r < C; ++r) res.right[r][i] = -res.right[r][i];
    };
    auto row_addmul = [&](int dst, int src, const BigInt& f) {
        for (int c = 0; c < C; ++c) a[dst][c] += f * a[src][c];
    };
    auto row_swap = [&](int i, int j) { std::swap(a[i], a[j]); };

    int t = 0;
    const int n = std::min(R, C);
    while (t < n) {
        // locate minimal nonzero |entry| in the trailing block
        int pr = -1, pc = -1;
        BigInt best;
        for (int r = t; r < R; ++r)
            for (int c = t; c < C; ++c)
                if (!a[r][c].is_zero()) {
                    BigInt v = a[r][c].abs();
                    if (pr < 0 || v < best) { best = v; pr = r; pc = c; }
                }
        if (pr < 0) break;
        row_swap(t, pr);
        col_swap(t, pc);
        if (a[t][t].sign() < 0) col_neg(t);
        bool dirty = false;
        for (int r = t + 1; r < R; ++r) {
            if (a[r][t].is_zero()) continue;
            BigInt q = a[r][t] / a[t][t];
            if (!q.is_zero()) row_addmul(r, t, -q);
            if (!a[r][t].is_zero()) dirty = true;
        }
        for (int c = t + 1; c < C; ++c) {
            if (a[t][c].is_zero()) continue;
            BigInt q = a[t][c] / a[t][t];
            if (!q.is_zero()) col_addmul(c, t, -q);
            if (!a[t][c].is_zero()) dirty = true;
        }
        if (dirty) continue;
        // divisibility fixup
        bool fixed = true;
        for (int r = t + 1; r < R && fixed; ++r)
            for (int c = t + 1; c < C && fixed; ++c)
                if (!(a[r][c] % a[t][t]).is_zero()) {
                    row_addmul(t, r, BigInt(1));
                    fixed = false;
                }
        if (!fixed) continue;
        ++t;
    }
    for (int i = 0; i < n; ++i) {
        if (i < t) {
            res.diag.push_back(a[i][i].abs());
            if (!a[i][i].is_zero()) ++res.rank;
        } else {
            res.diag.push_back(BigInt());
        }
    }
    return res;
}

// Nonnegative invariant factors only, d1 | d2 | ... (zeros for rank deficit).
inline std::vector<BigInt> smith_invariants(const std::vector<std::vector<BigInt>>& a) {
    return smith_normal_form(a).diag;
}

// Basis of the integer kernel lattice (saturated) of a dense matrix.
inline std::vector<std::vector<BigInt>> integer_kernel(const std::vector<std::vector<BigInt>>& a) {
    const int C = a.empty() ? 0 : static_cast<int>(a[0].size());
    if (a.empty() || C == 0) {
        std::vector<std::vector<BigInt>> id(C, std::vector<BigInt>(C, BigInt()));
        for (int i = 0; i < C; ++i) id[i][i] = BigInt(1);
        return id;
    }
    SmithResult s = smith_normal_form(a);
    std::vector<std::vector<BigInt>> basis;
    for (int c = s.rank; c < C; ++c) {
        std::vector<BigInt> v(C);
        for (int r = 0; r < C; ++r) v[r] = s.right[r][c];
        basis.push_back(std::move(v));
    }
    return basis;
}

// Signature of a symmetric matrix over the rationals by exact congruence
// diagonalization.
inline int symmetric_signature(std::vector<std::vector<Rational>> a) {
    const int n = static_cast<int>(a.size());
    std::vector<bool> done(n, false);
    int sig = 0;
    for (int step = 0; step < n; ++step) {
        int k = -1;
        for (int i = 0; i < n; ++i)
            if (!done[i] && !a[i][i].is_zero()) { k = i; break; }
        if (k < 0) {
            // all remaining diagonal entries vanish; manufacture one
            int pi = -1, pj = -1;
            for (int i = 0; i < n && pi < 0; ++i)
                if (!done[i])
                    for (int j = i + 1; j < n; ++j)
                        if (!done[j] && !a[i][j].is_zero()) { pi = i; pj = j; break; }
            if (pi < 0) break;  // zero block
            for (int c = 0; c < n; ++c) a[pi][c] += a[pj][c];
            for (int r = 0; r < n; ++r) a[r][pi] += a[r][pj];
            k = pi;
        }
        Rational piv = a[k][k];
        sig += piv.sign();
        for (int m = 0; m < n; ++m) {
            if (m == k || done[m] || a[m][k].is_zero()) continue;
            Rational f = a[m][k] / piv;
            for (int c = 0; c < n; ++c) a[m][c] -= f * a[k][c];
            for (int r = 0; r < n; ++r) a[r][m] -= f * a[r][k];
        }
        done[k] = true;
    }
    return sig;
}

// ---------------------------------------------------------------------------
// Dense univariate polynomials in x over a field, for pencils like the
// equivariant differential. Euclidean, so Smith normal form applies.

template <typename K>
class XPoly {
public:
    XPoly() = default;
    XPoly(K c) {
        if (!(c == K())) coef_.push_back(std::move(c));
    }
    static XPoly x() {
        XPoly p;
        p.coef_ = {K(), K() + 1};
        return p;
    }
    static XPoly monomial(K c, int d) {
        XPoly p;
        if (c == K()) return p;
        p.coef_.assign(d + 1, K());
        p.coef_[d] = std::move(c);
        return p;
    }
    bool is_zero() const { return coef_.empty(); }
    int degree() const { return static_cast<int>(coef_.size()) - 1; }
    const K& leading() const { return coef_.back(); }
    K coeff(int d) const {
        return d >= 0 && d < static_cast<int>(coef_.size()) ? coef_[d] : K();
    }
    bool is_unit() const { return coef_.size() == 1; }

    friend XPoly operator+(const XPoly& a, const XPoly& b) {
        XPoly r;
        r.coef_.assign(std::max(a.coef_.size(), b.coef_.size()), K());
        for (std::size_t i = 0; i < r.coef_.size(); ++i) {
            if (i < a.coef_.size()) r.coef_[i] = r.coef_[i] + a.coef_[i];
            if (i < b.coef_.size()) r.coef_[i] = r.coef_[i] + b.coef_[i];
        }
        r.trim();
        return r;
    }
    friend XPoly operator-(const XPoly& a, const XPoly& b) { return a + (-b); }
    XPoly operator-() const {
        XPoly r = *this;
        for (auto& c : r.coef_) c = -c;
        return r;
    }
    friend XPoly operator*(const XPoly& a, const XPoly& b) {
        if (a.is_zero() || b.is_zero()) return XPoly();
        XPoly r;
        r.coef_.assign(a.coef_.size() + b.coef_.size() - 1, K());
        for (std::size_t i = 0; i < a.coef_.size(); ++i)
            for (std::size_t j = 0; j < b.coef_.size(); ++j)
                r.coef_[i + j] = r.coef_[i + j] + a.coef_[i] * b.coef_[j];
        r.trim();
        return r;
    }
    friend bool operator==(const XPoly& a, const XPoly& b) { return a.coef_ == b.coef_; }

    static void divmod(const XPoly& a, const XPoly& b, XPoly& q, XPoly& r) {
        if (b.is_zero()) throw std::domain_error("XPoly: division by zero");
        q = XPoly();
        r = a;
        while (!r.is_zero() && r.degree() >= b.degree()) {
            K f = r.leading() / b.leading();
            int d = r.degree() - b.degree();
            XPoly m = monomial(f, d);
            q = q + m;
            r = r - m * b;
        }
    }

private:
    std::vector<K> coef_;
    void trim() {
        while (!coef_.empty() && coef_.back() == K()) coef_.pop_back();
    }
};

// Invariant factors of a matrix over K[x] (nonzero ones, made monic).
template <typename K>
std::vector<XPoly<K>> xpoly_smith(std::vector<std::vector<XPoly<K>>> a) {
    using P = XPoly<K>;
    const int R = static_cast<int>(a.size());
    const int C = R ? static_cast<int>(a[0].size()) : 0;
    std::vector<P> divisors;
    int t = 0;
    const int n = std::min(R, C);
    while (t < n) {
        int pr = -1, pc = -1, best = -1;
        for (int r = t; r < R; ++r)
            for (int c = t; c < C; ++c)
                if (!a[r][c].is_zero() && (best < 0 || a[r][c].degree() < best)) {
                    best = a[r][c].degree();
                    pr = r;
                    pc = c;
                }
        if (pr < 0) break;
        std::swap(a[t], a[pr]);
        for (int r = 0; r < R; ++r) std::swap(a[r][t], a[r][pc]);
        bool dirty = false;
        for (int r = t + 1; r < R; ++r) {
            if (a[r][t].is_zero()) continue;
            P q, rem;
            P::divmod(a[r][t], a[t][t], q, rem);
            for (int c = t; c < C; ++c) a[r][c] = a[r][c] - q * a[t][c];
            if (!a[r][t].is_zero()) dirty = true;
        }
        for (int c = t + 1; c < C; ++c) {
            if (a[t][c].is_zero()) continue;
            P q, rem;
            P::divmod(a[t][c], a[t][t], q, rem);
            for (int r = t; r < R; ++r) a[r][c] = a[r][c] - q * a[r][t];
            if (!a[t][c].is_zero()) dirty = true;
        }
        if (dirty) continue;
        bool fixed = true;
        for (int r = t + 1; r < R && fixed; ++r)
            for (int c = t + 1; c < C && fixed; ++c) {
                P q, rem;
                P::divmod(a[r][c], a[t][t], q, rem);
                if (!rem.is_zero()) {
                    for (int cc = t; cc < C; ++cc) a[t][cc] = a[t][cc] + a[r][cc];
                    fixed = false;
                }
            }
        if (!fixed) continue;
        ++t;
    }
    for (int i = 0; i < t; ++i) {
        P d = a[i][i];
        K inv = d.leading();
        P scaled;
        for (int k = 0; k <= d.degree(); ++k)
            scaled = scaled + P::monomial(d.coeff(k) / inv, k);
        divisors.push_back(scaled);
    }
    return divisors;
}

} // namespace scx

#endif
