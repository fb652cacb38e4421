#ifndef SCX_JSON_IO_HPP
#define SCX_JSON_IO_HPP

#include <string>
#include <json.hpp>

#include "scx/cobordism.hpp"
#include "scx/equivariant.hpp"
#include "scx/scomplex.hpp"

namespace scx {

using nlohmann::json;

// ---------------------------------------------------------------------------
// Laurent polynomials as {"exp": coeff} objects

inline json poly_to_json(const LaurentPoly& p) {
    json j = json::object();
    for (const auto& [e, c] : p.terms()) {
        if (c.fits_ll()) j[std::to_string(e)] = c.to_ll();
        else j[std::to_string(e)] = c.to_string();
    }
    return j;
}

inline LaurentPoly poly_from_json(const json& j) {
    LaurentPoly p;
    for (auto it = j.begin(); it != j.end(); ++it) {
        std::int64_t e = std::stoll(it.key());
        BigInt c = it->is_string() ? BigInt::from_string(it->get<std::string>())
                                   : BigInt(it->get<long long>());
        p.set_coeff(e, c);
    }
    return p;
}

// ---------------------------------------------------------------------------
// S-complexes

inline json scomplex_to_json(const SComplex& c) {
    json j;
    j["ring"] = ring_name(c.ring);
    j["generators"] = json::array();
    for (const auto& g : c.generators) {
        json e;
        e["name"] = g.name;
        e["zgrade"] = g.bigrading.zgrade;
        e["idegree"] = json::array({g.bigrading.idegree.num().to_ll(),
                                    g.bigrading.idegree.den().to_ll()});
        j["generators"].push_back(e);
    }
    auto edges = [&](const ExactMatrix<LaurentPoly>& m) {
        json arr = json::array();
        for (const auto& [rc, p] : m.entries()) {
            json e;
            e["from"] = c.generators[rc.second].name;
            e["to"] = c.generators[rc.first].name;
            e["poly"] = poly_to_json(p);
            arr.push_back(e);
        }
        return arr;
    };
    j["d"] = edges(c.d);
    j["v"] = edges(c.v);
    j["delta1"] = json::array();
    for (const auto& [rc, p] : c.delta1.entries()) {
        json e;
        e["gen"] = c.generators[rc.second].name;
        e["poly"] = poly_to_json(p);
        j["delta1"].push_back(e);
    }
    j["delta2"] = json::array();
    for (const auto& [rc, p] : c.delta2.entries()) {
        json e;
        e["gen"] = c.generators[rc.first].name;
        e["poly"] = poly_to_json(p);
        j["delta2"].push_back(e);
    }
    if (!c.v_complete) {
        j["v_complete"] = false;
        j["v_support"] = json::array();
        for (const auto& s : c.v_support) {
            json e;
            e["from"] = c.generators[s.from].name;
            e["to"] = c.generators[s.to].name;
            e["odd"] = s.odd;
            j["v_support"].push_back(e);
        }
    }
    return j;
}

inline SComplex scomplex_from_json(const json& j) {
    const auto& gens = j.at("generators");
    SComplex c(static_cast<int>(gens.size()), ring_from_name(j.at("ring").get<std::string>()));
    std::map<std::string, int> index;
    for (const auto& g : gens) {
        Bigrading b;
        b.zgrade = g.at("zgrade").get<long long>();
        b.idegree = Rational(g.at("idegree")[0].get<long long>(),
                             g.at("idegree")[1].get<long long>());
        index[g.at("name").get<std::string>()] = static_cast<int>(c.generators.size());
        c.generators.push_back({g.at("name").get<std::string>(), b});
    }
    auto read_edges = [&](const char* key, ExactMatrix<LaurentPoly>& m) {
        if (!j.contains(key)) return;
        for (const auto& e : j.at(key))
            m.set(index.at(e.at("to").get<std::string>()),
                  index.at(e.at("from").get<std::string>()), poly_from_json(e.at("poly")));
    };
    read_edges("d", c.d);
    read_edges("v", c.v);
    if (j.contains("delta1"))
        for (const auto& e : j.at("delta1"))
            c.delta1.set(0, index.at(e.at("gen").get<std::string>()),
                         poly_from_json(e.at("poly")));
    if (j.contains("delta2"))
        for (const auto& e : j.at("delta2"))
            c.delta2.set(index.at(e.at("gen").get<std::string>()), 0,
                         poly_from_json(e.at("poly")));
    if (j.contains("v_complete")) c.v_complete = j.at("v_complete").get<bool>();
    if (j.contains("v_support"))
        for (const auto& e : j.at("v_support"))
            c.v_support.push_back({index.at(e.at("from").get<std::string>()),
                                   index.at(e.at("to").get<std::string>()),
                                   e.at("odd").get<bool>()});
    return c;
}

// ---------------------------------------------------------------------------
// Polynomial ideals: generators as maps exponent-vector-csv -> coefficient

inline json ideal_to_json(const PolyIdeal& ideal) {
    json j;
    j["vars"] = ideal.vars;
    j["char"] = ideal.char2 ? 2 : 0;
    j["gens"] = json::array();
    for (const auto& g : ideal.gens) {
        json term = json::object();
        for (const auto& [e, c] : g.terms) {
            std::string key;
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (i) key += ",";
                key += std::to_string(e[i]);
            }
            if (c.fits_ll()) term[key] = c.to_ll();
            else term[key] = c.to_string();
        }
        j["gens"].push_back(term);
    }
    return j;
}

inline PolyIdeal ideal_from_json(const json& j) {
    PolyIdeal ideal;
    ideal.vars = j.at("vars").get<std::vector<std::string>>();
    ideal.char2 = j.at("char").get<int>() == 2;
    for (const auto& term : j.at("gens")) {
        MPoly g{static_cast<int>(ideal.vars.size()), {}};
        for (auto it = term.begin(); it != term.end(); ++it) {
            std::vector<std::int64_t> e;
            std::string key = it.key();
            std::size_t pos = 0;
            while (pos <= key.size()) {
                std::size_t comma = key.find(',', pos);
                if (comma == std::string::npos) comma = key.size();
                e.push_back(std::stoll(key.substr(pos, comma - pos)));
                pos = comma + 1;
            }
            BigInt c = it->is_string() ? BigInt::from_string(it->get<std::string>())
                                       : BigInt(it->get<long long>());
            g.terms[e] = c;
        }
        ideal.gens.push_back(std::move(g));
    }
    return ideal;
}

// ---------------------------------------------------------------------------
// Bound records

inline json bound_to_json(const BoundRecord& r) {
    json j;
    j["kind"] = bound_kind_name(r.kind);
    j["statement"] = r.statement;
    j["value"] = r.value.to_string();
    j["inputs"] = json::array();
    for (const auto& in : r.inputs) {
        json e;
        e["invariant"] = in.invariant;
        e["knot"] = in.knot;
        e["value"] = in.value;
        j["inputs"].push_back(e);
    }
    return j;
}

} // namespace scx

#endif
