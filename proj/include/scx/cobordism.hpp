#ifndef SCX_COBORDISM_HPP
#define SCX_COBORDISM_HPP

#include <optional>
#include <set>
#include <string>
#include <vector>
#include <stdexcept>

#include "scx/invariants.hpp"
#include "scx/laurent.hpp"
#include "scx/twobridge.hpp"

namespace scx {

// Diagonal negative definite pair data: W carries the lattice <-1>^n, S a
// class in it, c a characteristic-type class, plus the surface topology and
// the endpoint signatures. chi_w/sigma_w default to the punctured-blow-up
// shape 1 + n / -n; the product cobordism shape uses n / -n.
struct CobordismData {
    int lattice_rank = 0;
    std::vector<long long> surface;   // coordinates of [S]
    std::vector<long long> c_class;   // coordinates of c
    long long genus = 0;
    long long s_plus = 0, s_minus = 0;
    int sigma_in = 0, sigma_out = 0;
    long long chi_w = 1, sigma_w = 0;
    long long chi_s = 1;              // Euler characteristic of S
    bool relative = true;             // has knot boundary (shifts reported nu)
    std::optional<long long> twist_degree;  // set for the blown-up product shape

    long long self_int() const {
        long long s = 0;
        for (long long v : surface) s -= v * v;
        return s;
    }

    // knot cobordism of genus g in the n-fold blow-up of the product; both
    // shapes below are punctured to the two-ended picture, where
    // chi(W) + sigma(W) = 0 and chi(S) = -2g
    static CobordismData product(std::vector<long long> S, std::vector<long long> c,
                                 long long g, int sigma_in_knot, int sigma_out_knot) {
        CobordismData d;
        d.lattice_rank = static_cast<int>(S.size());
        d.surface = std::move(S);
        d.c_class = c.empty() ? std::vector<long long>(d.surface.size(), 0) : std::move(c);
        d.genus = g;
        d.sigma_in = sigma_in_knot;
        d.sigma_out = sigma_out_knot;
        d.chi_w = d.lattice_rank;
        d.sigma_w = -d.lattice_rank;
        d.chi_s = -2 * g;
        return d;
    }
    // surface with boundary a single knot: the cobordism from the unknot
    static CobordismData filling(std::vector<long long> S, std::vector<long long> c,
                                 long long g, int sigma_out_knot) {
        return product(std::move(S), std::move(c), g, 0, sigma_out_knot);
    }
    // full twist on strands of linking number deg, as a degree-deg cylinder in
    // the blown-up product; c is picked per ring when bounds are computed
    static CobordismData twist(long long deg, int sigma_in_knot, int sigma_out_knot) {
        CobordismData d = product({deg}, {0}, 0, sigma_in_knot, sigma_out_knot);
        d.twist_degree = deg;
        return d;
    }
};

struct ReducibleSummary {
    Rational kappa_min;
    std::vector<std::vector<long long>> minimizers;
    std::vector<long long> nu_values;        // (2z - c) . S per minimizer
    std::vector<Rational> nu_boundary;       // shifted by S.S/2 for relative pairs
    LaurentPoly eta;                          // reduced in the requested ring
    Rational index;                           // index of a minimal reducible
    std::optional<long long> level;           // (index+1)/2 when index is odd
};

// Coordinate-wise minimization of -(z + S/4 - c/2)^2 on the diagonal lattice,
// with every tie enumerated.
inline ReducibleSummary reducible_summary(const CobordismData& data,
                                          RingSpec ring = RingSpec::Generic) {
    const int n = data.lattice_rank;
    if (static_cast<int>(data.surface.size()) != n || static_cast<int>(data.c_class.size()) != n)
        throw std::invalid_argument("reducible_summary: lattice data shape mismatch");
    ReducibleSummary out;
    out.kappa_min = Rational(0);
    std::vector<std::vector<long long>> opts(n);
    for (int i = 0; i < n; ++i) {
        // minimize (z + (s - 2c)/4)^2 over integers z
        long long w = data.surface[i] - 2 * data.c_class[i];
        // 4z + w closest to 0: z around -w/4
        long long z0 = -w / 4;
        long long best = std::llabs(4 * z0 + w);
        for (long long z : {z0 - 1, z0, z0 + 1})
            best = std::min(best, std::llabs(4 * z + w));
        for (long long z = z0 - 2; z <= z0 + 2; ++z)
            if (std::llabs(4 * z + w) == best) opts[i].push_back(z);
        out.kappa_min += Rational(best * best, 16);
    }
    std::vector<std::vector<long long>> zs = {{}};
    for (int i = 0; i < n; ++i) {
        std::vector<std::vector<long long>> next;
        for (const auto& z : zs)
            for (long long o : opts[i]) {
                auto nz = z;
                nz.push_back(o);
                next.push_back(std::move(nz));
            }
        zs = std::move(next);
    }
    LaurentPoly eta;
    for (const auto& z : zs) {
        long long nu = 0, zsq = 0;
        for (int i = 0; i < n; ++i) {
            nu -= (2 * z[i] - data.c_class[i]) * data.surface[i];
            zsq += z[i];
        }
        out.minimizers.push_back(z);
        out.nu_values.push_back(nu);
        if (data.relative) out.nu_boundary.push_back(Rational(nu) + Rational(data.self_int(), 2));
        eta += LaurentPoly::monomial(BigInt(zsq % 2 ? -1 : 1), nu);
    }
    out.eta = eta.reduced(ring);
    out.index = Rational(8) * out.kappa_min -
                Rational(3 * (data.chi_w + data.sigma_w), 2) + Rational(data.chi_s) +
                Rational(data.self_int(), 2) + Rational(data.sigma_in - data.sigma_out) -
                Rational(1);
    if (out.index.is_integer()) {
        BigInt num = out.index.num();
        if (!num.even()) out.level = (num.to_ll() + 1) / 2;
    }
    return out;
}

// Blow up the double points: s_plus exceptional coordinates of S-value -2 and
// s_minus of S-value 0. Over rings with T^4 = 1 the class c is shifted by the
// positive exceptional classes to keep eta alive.
inline CobordismData blow_up(const CobordismData& data, RingSpec ring) {
    CobordismData b = data;
    b.twist_degree.reset();
    for (long long i = 0; i < data.s_plus; ++i) {
        b.surface.push_back(-2);
        b.c_class.push_back(ring == RingSpec::T4Quotient ? -1 : 0);
        ++b.lattice_rank;
    }
    for (long long i = 0; i < data.s_minus; ++i) {
        b.surface.push_back(0);
        b.c_class.push_back(0);
        ++b.lattice_rank;
    }
    b.chi_w += data.s_plus + data.s_minus;
    b.sigma_w -= data.s_plus + data.s_minus;
    b.s_plus = b.s_minus = 0;
    return b;
}

// ---------------------------------------------------------------------------
// Bound records

struct BoundInput {
    std::string invariant, knot, value;
};

struct BoundRecord {
    enum class Kind { ClaspPlus, Unknotting, Crosscap, GammaShift, HShift, SliceObstruction };
    Kind kind;
    std::string statement;
    Rational value;
    std::vector<BoundInput> inputs;
};

inline std::string bound_kind_name(BoundRecord::Kind k) {
    switch (k) {
        case BoundRecord::Kind::ClaspPlus: return "clasp_plus";
        case BoundRecord::Kind::Unknotting: return "unknotting";
        case BoundRecord::Kind::Crosscap: return "crosscap";
        case BoundRecord::Kind::GammaShift: return "gamma_shift";
        case BoundRecord::Kind::HShift: return "h_shift";
        case BoundRecord::Kind::SliceObstruction: return "slice_obstruction";
    }
    return "?";
}

namespace detail {
// For a twist cobordism over a ring with T^4 = 1 and linking number 2 mod 4,
// the class c moves to the exceptional generator to keep eta alive.
inline CobordismData with_ring_c(CobordismData d, RingSpec ring) {
    if (d.twist_degree && ring == RingSpec::T4Quotient &&
        (((*d.twist_degree % 4) + 4) % 4) == 2)
        d.c_class[0] = 1;
    return d;
}
}  // namespace detail

// h(out) - h(in) >= 4 kappa_min - g + S.S/4 - eps - (sigma_out - sigma_in)/2.
// Throws when eta dies in the ring (no bound: the blown-up count vanishes).
inline BoundRecord h_shift_bound(const CobordismData& data0, RingSpec ring = RingSpec::Generic) {
    CobordismData data = detail::with_ring_c(data0, ring);
    CobordismData blown = blow_up(data, ring);
    ReducibleSummary rs = reducible_summary(blown, ring);
    if (rs.eta.is_zero())
        throw std::invalid_argument("h_shift_bound: eta vanishes in this ring, no bound");
    Rational rhs = Rational(4) * rs.kappa_min - Rational(data.genus) +
                   Rational(blown.self_int(), 4) -
                   Rational(data.sigma_out - data.sigma_in, 2);
    BoundRecord rec;
    rec.kind = BoundRecord::Kind::HShift;
    rec.value = rhs;
    rec.statement = "h(out) - h(in) >= " + rhs.to_string();
    rec.inputs.push_back({"kappa_min", "", rs.kappa_min.to_string()});
    rec.inputs.push_back({"eta", "", rs.eta.to_string()});
    return rec;
}

// The epsilon_R(d) case table for cobordisms in the blown-up product.
inline Rational epsilon_r_table(RingSpec ring, long long d, long long s_plus) {
    bool t4 = ring == RingSpec::T4Quotient;
    if (!t4) {
        if (d % 2 == 0 && d != 0) return Rational(1 + s_plus);
        if (d == 0) return Rational(s_plus);
        return Rational(1, 4) + Rational(s_plus);
    }
    if (d % 2 == 0) return Rational(0);
    return Rational(1, 4);
}

// Gamma(out)(k + i) <= add_on + Gamma(in)(k); refuses i < 0.
inline BoundRecord gamma_shift_bound(const CobordismData& data, long long k,
                                     RingSpec ring = RingSpec::Generic) {
    Rational i_val, add_on;
    if (data.twist_degree) {
        long long d = *data.twist_degree;
        Rational er = epsilon_r_table(ring, d, data.s_plus);
        i_val = er - Rational(d * d, 4) - Rational(data.s_plus) +
                Rational(data.sigma_in - data.sigma_out, 2) - Rational(data.genus);
        add_on = er / Rational(2);
    } else {
        CobordismData blown = blow_up(data, ring);
        ReducibleSummary rs = reducible_summary(blown, ring);
        if (rs.eta.is_zero())
            throw std::invalid_argument("gamma_shift_bound: eta vanishes in this ring");
        CobordismData base = data;
        base.s_plus = base.s_minus = 0;
        ReducibleSummary rb = reducible_summary(base, ring == RingSpec::T4Quotient
                                                          ? RingSpec::Generic
                                                          : ring);
        Rational eps_r = ring == RingSpec::T4Quotient ? Rational(data.s_plus) : Rational(0);
        i_val = Rational(4) * rb.kappa_min - Rational(data.genus) +
                Rational(data.self_int(), 4) - eps_r +
                Rational(data.sigma_in - data.sigma_out, 2);
        add_on = Rational(2) * rb.kappa_min + (Rational(data.s_plus) - eps_r) / Rational(2);
    }
    if (!i_val.is_integer() || i_val.sign() < 0)
        throw std::invalid_argument("gamma_shift_bound: level hypothesis i >= 0 violated");
    long long i = i_val.num().to_ll();
    BoundRecord rec;
    rec.kind = BoundRecord::Kind::GammaShift;
    rec.value = add_on;
    rec.statement = "Gamma_out(" + std::to_string(k + i) + ") <= " + add_on.to_string() +
                    " + Gamma_in(" + std::to_string(k) + ")";
    rec.inputs.push_back({"i", "", std::to_string(i)});
    return rec;
}

// ---------------------------------------------------------------------------
// Knot-level concordance bounds

namespace detail {
// When every summand's local class is a single atom, Gamma follows the
// subset-sum closed form and no tensor product needs to be materialized.
inline bool collect_atom_levels(const KnotSpec& k, std::vector<Rational>& ts) {
    switch (k.kind) {
        case KnotSpec::Kind::Unknot: return true;
        case KnotSpec::Kind::Sum:
            return collect_atom_levels(k.children[0], ts) &&
                   collect_atom_levels(k.children[1], ts);
        case KnotSpec::Kind::DoubleTwist:
            ts.push_back(atom_level(k.p, k.q));
            return true;
        case KnotSpec::Kind::TwoBridge:
            if (auto mn = as_double_twist(k.p, k.q)) {
                ts.push_back(atom_level(mn->first, mn->second));
                return true;
            }
            return false;
        case KnotSpec::Kind::Torus: {
            long long p = std::min(k.p, k.q), q = std::max(k.p, k.q);
            if (p == 2 && q == 3) {
                ts.push_back(Rational(1, 3));
                return true;
            }
            return false;
        }
        case KnotSpec::Kind::Mirror: return false;
    }
    return false;
}
}  // namespace detail

// Gamma of a knot expression at one level: the atom subset-sum closed form
// for sums of double-twist-type knots, the exact field computation when the
// catalog complex has a fully determined v, else the two-bridge lower bound.
// The bool is true when the value is exact.
inline std::pair<GammaValue, bool> gamma_of_knot(const KnotSpec& k, long long level) {
    std::vector<Rational> ts;
    if (detail::collect_atom_levels(k, ts)) return {gamma_closed_form_atoms(ts, level), true};
    try {
        SComplex c = catalog_complex(k, true);
        if (c.v_complete) return {gamma(c, level), true};
        return {gamma_lower_bound(c, static_cast<int>(level)), false};
    } catch (const std::invalid_argument&) {
    }
    SComplex c = catalog_complex(k, false);
    if (c.v_complete) return {gamma(c, level), true};
    return {gamma_lower_bound(c, static_cast<int>(level)), false};
}

// The clasp/unknotting/crosscap bound package for a knot; when an upper hint
// meets the lower bound an equality certificate is emitted.
inline std::vector<BoundRecord> concordance_bounds(const KnotSpec& knot,
                                                   std::optional<long long> upper_hint = {}) {
    std::vector<BoundRecord> out;
    const std::string name = knot.to_string();
    int sig = signature(knot);
    bool have_gamma = false;
    GammaValue g;
    bool exact = false;
    if (-sig / 2 >= 0) {
        try {
            auto [gv, ex] = gamma_of_knot(knot, -sig / 2);
            g = gv;
            exact = ex;
            have_gamma = true;
        } catch (const std::exception&) {
        }
    }
    if (have_gamma && !g.is_infinite()) {
        // c_s^+(K) >= 2 Gamma_K(-sigma/2), integral, so take the ceiling
        BigInt lower = (Rational(2) * g.value()).ceil();
        BoundRecord clasp;
        clasp.kind = BoundRecord::Kind::ClaspPlus;
        clasp.value = Rational(lower);
        clasp.statement = "cs+(" + name + ") >= " + lower.to_string();
        clasp.inputs.push_back({exact ? "gamma" : "gamma_lower_bound", name,
                                g.value().to_string()});
        clasp.inputs.push_back({"sigma", name, std::to_string(sig)});
        out.push_back(clasp);

        BoundRecord unknot = clasp;
        unknot.kind = BoundRecord::Kind::Unknotting;
        unknot.statement = "u(" + name + ") >= " + lower.to_string();
        out.push_back(unknot);

        if (upper_hint && Rational(*upper_hint) == Rational(lower)) {
            BoundRecord cert;
            cert.kind = BoundRecord::Kind::Unknotting;
            cert.value = Rational(lower);
            cert.statement = "u(" + name + ") = cs+(" + name + ") = " + lower.to_string();
            cert.inputs = clasp.inputs;
            cert.inputs.push_back({"upper_hint", name, std::to_string(*upper_hint)});
            out.push_back(cert);
        }
    }
    int ht4 = h_t4(knot);
    BoundRecord cross;
    cross.kind = BoundRecord::Kind::Crosscap;
    cross.value = Rational(ht4 < 0 ? -ht4 : ht4);
    cross.statement = "crosscap4(" + name + ") >= " + cross.value.to_string();
    cross.inputs.push_back({"h_t4", name, std::to_string(ht4)});
    out.push_back(cross);
    return out;
}

} // namespace scx

#endif
