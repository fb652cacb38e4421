#ifndef SCX_SCOMPLEX_HPP
#define SCX_SCOMPLEX_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>
#include <stdexcept>

#include "scx/laurent.hpp"
#include "scx/linalg.hpp"
#include "scx/rational.hpp"

namespace scx {

// Z x R bigrading of a generator: the Floer grading and the instanton
// (Chern-Simons) grading. U acts with bidegree (4, 1).
struct Bigrading {
    std::int64_t zgrade = 0;
    Rational idegree;

    friend bool operator==(const Bigrading& a, const Bigrading& b) {
        return a.zgrade == b.zgrade && a.idegree == b.idegree;
    }
    std::string to_string() const {
        return "(" + std::to_string(zgrade) + ", " + idegree.to_string() + ")";
    }
};

struct Generator {
    std::string name;
    Bigrading bigrading;
};

// Where the v map of a 2-bridge complex may be nonzero. Pairs are (from, to)
// generator indices; `odd` records whether the minimal solution has both
// k1, k2 odd (only those pairs can carry entries n*(T^2-T^-2)).
struct VSupportPair {
    int from = 0;
    int to = 0;
    bool odd = false;
};

// S-complex in the standard presentation C + C[-1] + R. Only the C summand is
// materialized; d, v are square over C, delta1 is a row C -> R, delta2 a
// column R -> C. Matrix entries are Laurent polynomials with the U power
// implicit in the gradings.
class SComplex {
public:
    RingSpec ring = RingSpec::Generic;
    std::vector<Generator> generators;
    ExactMatrix<LaurentPoly> d, v;        // (target row, source col)
    ExactMatrix<LaurentPoly> delta1;      // 1 x n
    ExactMatrix<LaurentPoly> delta2;      // n x 1
    bool v_complete = true;               // false: v undetermined, only support known
    std::vector<VSupportPair> v_support;  // meaningful when !v_complete

    SComplex() : d(0, 0), v(0, 0), delta1(1, 0), delta2(0, 1) {}
    explicit SComplex(int n, RingSpec rs = RingSpec::Generic)
        : ring(rs), d(n, n), v(n, n), delta1(1, n), delta2(n, 1) {}

    int rank() const { return static_cast<int>(generators.size()); }

    const Bigrading& bigrading(int i) const { return generators[i].bigrading; }
    std::int64_t zgrade(int i) const { return generators[i].bigrading.zgrade; }
    const Rational& idegree(int i) const { return generators[i].bigrading.idegree; }
};

// The one-generator complex c~(t): zeta at (1, t) with delta1 = T^2 - T^-2.
inline SComplex atom(const Rational& t, RingSpec ring = RingSpec::Generic) {
    if (!(Rational(0) < t)) throw std::invalid_argument("atom: t must be positive");
    SComplex c(1, ring);
    c.generators.push_back({"z", {1, t}});
    c.delta1.set(0, 0, LaurentPoly::epsilon().reduced(ring));
    return c;
}

inline SComplex unknot_complex(RingSpec ring = RingSpec::Generic) { return SComplex(0, ring); }

inline int euler_characteristic(const SComplex& c) {
    int chi = 0;
    for (const auto& g : c.generators) chi += (g.bigrading.zgrade % 2 == 0) ? 1 : -1;
    return chi;
}

// n*(T^2-T^-2) recognition; returns n or nothing.
inline std::optional<BigInt> eps_multiple(const LaurentPoly& p) {
    if (p.is_zero()) return BigInt(0);
    if (p.term_count() != 2) return std::nullopt;
    BigInt hi = p.coeff(2), lo = p.coeff(-2);
    if (hi.is_zero() || !(lo == -hi)) return std::nullopt;
    return hi;
}

inline bool is_eps_uniform(const SComplex& c) {
    auto ok = [](const ExactMatrix<LaurentPoly>& m) {
        for (const auto& [rc, p] : m.entries())
            if (!eps_multiple(p)) return false;
        return true;
    };
    return ok(c.d) && ok(c.v) && ok(c.delta1) && ok(c.delta2);
}

namespace detail {
// Implicit U power of an entry of map `kind` from source grade gs to target
// grade gt; nullopt when the entry is not grading-admissible.
// kind: 0 = d (degree -1), 1 = v (degree -2), 2 = delta1, 3 = delta2.
inline std::optional<std::int64_t> entry_upower(int kind, std::int64_t gs, std::int64_t gt) {
    std::int64_t num = 0;
    switch (kind) {
        case 0: num = gs - gt - 1; break;
        case 1: num = gs - gt - 2; break;
        case 2: num = gs - 1; break;         // target is the reducible at grade 0
        case 3: num = -(gt + 2); break;      // image lands in the C[-1] copy
    }
    if (((num % 4) + 4) % 4 != 0) return std::nullopt;
    return num / 4;
}
}  // namespace detail

// Check all structure relations and grading constraints; returns the list of
// violated identities (empty means pass). When only the support of v is known
// the identity involving v is not checkable and is skipped.
inline std::vector<std::string> validate(const SComplex& c) {
    std::vector<std::string> bad;
    const int n = c.rank();
    auto degercheck = [&](const char* label, int kind, const ExactMatrix<LaurentPoly>& m,
                          bool strict) {
        for (const auto& [rc, p] : m.entries()) {
            int row = rc.first, col = rc.second;
            std::int64_t gs, gt;
            Rational ts, tt;
            if (kind == 0 || kind == 1) {
                gs = c.zgrade(col); gt = c.zgrade(row);
                ts = c.idegree(col); tt = c.idegree(row);
            } else if (kind == 2) {
                gs = c.zgrade(col); gt = 0;
                ts = c.idegree(col); tt = Rational(0);
            } else {
                gs = 0; gt = c.zgrade(row);
                ts = Rational(0); tt = c.idegree(row);
            }
            auto m4 = detail::entry_upower(kind, gs, gt);
            if (!m4) {
                bad.push_back(std::string(label) + ": entry violates mod-4 grading support");
                continue;
            }
            Rational shifted = tt + Rational(static_cast<long long>(*m4));
            if (strict && !(shifted < ts))
                bad.push_back(std::string(label) + ": entry does not strictly drop deg_I");
        }
    };
    degercheck("d", 0, c.d, true);
    degercheck("v", 1, c.v, true);
    degercheck("delta1", 2, c.delta1, true);
    degercheck("delta2", 3, c.delta2, true);

    if (!(c.d * c.d).is_zero()) bad.push_back("d.d != 0");
    if (!(c.delta1 * c.d).is_zero()) bad.push_back("delta1.d != 0");
    if (!(c.d * c.delta2).is_zero()) bad.push_back("d.delta2 != 0");
    if (c.v_complete && !(c.d * c.v - c.v * c.d - c.delta2 * c.delta1).is_zero())
        bad.push_back("d.v - v.d - delta2.delta1 != 0");

    if (c.ring != RingSpec::Generic) {
        auto reduced_ok = [&](const ExactMatrix<LaurentPoly>& m) {
            for (const auto& [rc, p] : m.entries())
                if (!(p == p.reduced(c.ring))) return false;
            return true;
        };
        if (!(reduced_ok(c.d) && reduced_ok(c.v) && reduced_ok(c.delta1) && reduced_ok(c.delta2)))
            bad.push_back("entries not reduced in ring");
    }
    (void)n;
    return bad;
}

// Reduce every entry into the requested ring.
inline SComplex with_ring(SComplex c, RingSpec ring) {
    c.ring = ring;
    auto red = [&](ExactMatrix<LaurentPoly>& m) {
        ExactMatrix<LaurentPoly> out(m.rows(), m.cols());
        for (const auto& [rc, p] : m.entries()) out.set(rc.first, rc.second, p.reduced(ring));
        m = out;
    };
    red(c.d);
    red(c.v);
    red(c.delta1);
    red(c.delta2);
    return c;
}

// Dual (mirror) complex: transposed matrices with delta1/delta2 swapped, and
// the generator corresponding to a class in bigrading (g, t) placed at
// (-g-1, -t) -- the extra shift is the chi-degree, so that the Euler
// characteristic and delta supports negate correctly.
inline SComplex dual(const SComplex& a) {
    const int n = a.rank();
    SComplex c(n, a.ring);
    c.v_complete = a.v_complete;
    for (int i = 0; i < n; ++i) {
        const auto& g = a.generators[i];
        c.generators.push_back({g.name + "*", {-g.bigrading.zgrade - 1, -g.bigrading.idegree}});
    }
    for (const auto& [rc, p] : a.d.entries()) c.d.set(rc.second, rc.first, -p);
    for (const auto& [rc, p] : a.v.entries()) c.v.set(rc.second, rc.first, p);
    for (const auto& [rc, p] : a.delta1.entries()) c.delta2.set(rc.second, 0, p);
    for (const auto& [rc, p] : a.delta2.entries()) c.delta1.set(0, rc.first, p);
    for (const auto& s : a.v_support) c.v_support.push_back({s.to, s.from, s.odd});
    return c;
}

namespace detail {
// Raw basis bookkeeping for the full complex C + chi C + R of one factor.
struct RawComplex {
    int n;                                  // irreducible rank
    std::vector<std::int64_t> zg;           // raw z-grades, size 2n+1
    std::vector<Rational> ideg;             // raw instanton degrees
    ExactMatrix<LaurentPoly> dtilde;        // (2n+1) x (2n+1)

    static RawComplex build(const SComplex& c) {
        const int n = c.rank();
        RawComplex r{n, {}, {}, ExactMatrix<LaurentPoly>(2 * n + 1, 2 * n + 1)};
        r.zg.resize(2 * n + 1);
        r.ideg.resize(2 * n + 1);
        for (int i = 0; i < n; ++i) {
            r.zg[i] = c.zgrade(i);
            r.ideg[i] = c.idegree(i);
            r.zg[n + i] = c.zgrade(i) + 1;
            r.ideg[n + i] = c.idegree(i);
        }
        r.zg[2 * n] = 0;
        r.ideg[2 * n] = Rational(0);
        for (const auto& [rc, p] : c.d.entries()) {
            r.dtilde.set(rc.first, rc.second, p);                    // d on C
            r.dtilde.set(n + rc.first, n + rc.second, -p);           // -d on chi C
        }
        for (const auto& [rc, p] : c.v.entries()) r.dtilde.set(n + rc.first, rc.second, p);
        for (const auto& [rc, p] : c.delta1.entries()) r.dtilde.set(2 * n, rc.second, p);
        for (const auto& [rc, p] : c.delta2.entries()) r.dtilde.set(n + rc.first, 2 * n, p);
        return r;
    }
};
}  // namespace detail

// Tensor product (connected sum) of S-complexes. The C summand of the result
// has one generator a|1, 1|b, a|b, xa|b per generator pair, rank 2ab + a + b.
inline SComplex tensor(const SComplex& A, const SComplex& B) {
    if (A.ring != B.ring) throw std::invalid_argument("tensor: ring mismatch");
    if (!A.v_complete || !B.v_complete)
        throw std::invalid_argument("tensor: factors must have fully determined v");
    using detail::RawComplex;
    const RawComplex ra = RawComplex::build(A), rb = RawComplex::build(B);
    const int na = ra.n, nb = rb.n;
    const int Na = 2 * na + 1, Nb = 2 * nb + 1;
    auto rid = [&](int x, int y) { return x * Nb + y; };

    // new C generators, in a fixed deterministic order
    struct NewGen { int rawx, rawy; };
    std::vector<NewGen> gens;
    std::map<std::pair<int, int>, int> gen_index;  // (rawx, rawy) -> index
    auto push = [&](int x, int y, const std::string& name, Bigrading bg, SComplex& out) {
        gen_index[{x, y}] = static_cast<int>(gens.size());
        gens.push_back({x, y});
        out.generators.push_back({name, bg});
    };

    SComplex out(2 * na * nb + na + nb, A.ring);
    for (int i = 0; i < na; ++i)
        push(i, 2 * nb, A.generators[i].name + "|1", A.generators[i].bigrading, out);
    for (int j = 0; j < nb; ++j)
        push(2 * na, j, "1|" + B.generators[j].name, B.generators[j].bigrading, out);
    for (int i = 0; i < na; ++i)
        for (int j = 0; j < nb; ++j) {
            Bigrading bg{A.zgrade(i) + B.zgrade(j), A.idegree(i) + B.idegree(j)};
            push(i, j, A.generators[i].name + "|" + B.generators[j].name, bg, out);
        }
    for (int i = 0; i < na; ++i)
        for (int j = 0; j < nb; ++j) {
            Bigrading bg{A.zgrade(i) + 1 + B.zgrade(j), A.idegree(i) + B.idegree(j)};
            push(na + i, j, "x" + A.generators[i].name + "|" + B.generators[j].name, bg, out);
        }

    // column of the tensor differential on raw pair (x, y)
    auto dtensor_col = [&](int x, int y) {
        std::map<int, LaurentPoly> col;
        for (int tx = 0; tx < Na; ++tx) {
            LaurentPoly p = ra.dtilde.get(tx, x);
            if (!p.is_zero()) col[rid(tx, y)] += p;
        }
        bool odd = ((ra.zg[x] % 2) + 2) % 2 == 1;
        for (int ty = 0; ty < Nb; ++ty) {
            LaurentPoly p = rb.dtilde.get(ty, y);
            if (p.is_zero()) continue;
            col[rid(x, ty)] += odd ? -p : p;
        }
        for (auto it = col.begin(); it != col.end();)
            it = it->second.is_zero() ? col.erase(it) : std::next(it);
        return col;
    };

    // decompose a raw vector into C part, chi(C) part and the R coefficient
    auto decompose = [&](std::map<int, LaurentPoly> vec, std::map<int, LaurentPoly>& cpart,
                         std::map<int, LaurentPoly>& chipart, LaurentPoly& scalar) {
        cpart.clear();
        chipart.clear();
        scalar = LaurentPoly();
        // (a, chi b) coordinates belong to chi(a|b)
        for (int i = 0; i < na; ++i)
            for (int j = 0; j < nb; ++j) {
                auto it = vec.find(rid(i, nb + j));
                if (it == vec.end() || it->second.is_zero()) continue;
                bool odd = ((ra.zg[i] % 2) + 2) % 2 == 1;
                LaurentPoly k = odd ? -it->second : it->second;
                chipart[gen_index[{i, j}]] += k;
                vec[rid(na + i, j)] -= k;
                vec.erase(it);
            }
        // (chi a, chi b) coordinates belong to chi(xa|b)
        for (int i = 0; i < na; ++i)
            for (int j = 0; j < nb; ++j) {
                auto it = vec.find(rid(na + i, nb + j));
                if (it == vec.end() || it->second.is_zero()) continue;
                bool odd = ((ra.zg[na + i] % 2) + 2) % 2 == 1;
                LaurentPoly k = odd ? -it->second : it->second;
                chipart[gen_index[{na + i, j}]] += k;
                vec.erase(it);
            }
        // (chi a, 1) and (1, chi b)
        for (int i = 0; i < na; ++i) {
            auto it = vec.find(rid(na + i, 2 * nb));
            if (it != vec.end()) {
                chipart[gen_index[{i, 2 * nb}]] += it->second;
                vec.erase(it);
            }
        }
        for (int j = 0; j < nb; ++j) {
            auto it = vec.find(rid(2 * na, nb + j));
            if (it != vec.end()) {
                chipart[gen_index[{2 * na, j}]] += it->second;
                vec.erase(it);
            }
        }
        for (const auto& [raw, p] : vec) {
            if (p.is_zero()) continue;
            if (raw == rid(2 * na, 2 * nb)) {
                scalar += p;
                continue;
            }
            auto it = gen_index.find({raw / Nb, raw % Nb});
            if (it == gen_index.end())
                throw std::logic_error("tensor: undecomposable raw coordinate");
            cpart[it->second] += p;
        }
    };

    std::map<int, LaurentPoly> cpart, chipart;
    LaurentPoly scalar;
    for (std::size_t g = 0; g < gens.size(); ++g) {
        decompose(dtensor_col(gens[g].rawx, gens[g].rawy), cpart, chipart, scalar);
        for (const auto& [i, p] : cpart)
            if (!p.is_zero()) out.d.set(i, static_cast<int>(g), p.reduced(out.ring));
        for (const auto& [i, p] : chipart)
            if (!p.is_zero()) out.v.set(i, static_cast<int>(g), p.reduced(out.ring));
        if (!scalar.is_zero()) out.delta1.set(0, static_cast<int>(g), scalar.reduced(out.ring));
    }
    decompose(dtensor_col(2 * na, 2 * nb), cpart, chipart, scalar);
    if (!cpart.empty() || !scalar.is_zero())
        throw std::logic_error("tensor: differential of the unit has a C component");
    for (const auto& [i, p] : chipart)
        if (!p.is_zero()) out.delta2.set(i, 0, p.reduced(out.ring));
    return out;
}

} // namespace scx

#endif
