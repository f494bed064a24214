#pragma once

#include "osps3/laurent.hpp"

#include <json.hpp>

namespace osps3 {

using json = nlohmann::json;

// Canonical term-list serialization. Terms are emitted in lexicographic order
// on (s-exponents, mu-exponents); parsing accepts any order and re-canonicalizes,
// so serialize -> parse -> serialize is the identity byte for byte.

inline json to_json(const NumLaurent& p) {
    json terms = json::array();
    for (const auto& [e, c] : p.terms())
        terms.push_back({{"s", e}, {"c", to_fraction_string(c)}});
    return terms;
}

inline json to_json(const SymLaurent& p) {
    json terms = json::array();
    for (const auto& [e, c] : p.terms())
        for (const auto& [me, q] : c.terms())
            terms.push_back({{"s", e}, {"mu", me}, {"c", to_fraction_string(q)}});
    return terms;
}

inline Idx4 idx4_from_json(const json& a) {
    if (!a.is_array() || a.size() != 4) throw std::invalid_argument("expected 4 exponents");
    Idx4 e;
    for (size_t i = 0; i < 4; ++i) e[i] = a[i].get<int>();
    return e;
}

inline NumLaurent num_laurent_from_json(const json& terms) {
    NumLaurent p;
    for (const auto& t : terms)
        p.add_term(idx4_from_json(t.at("s")), parse_rational(t.at("c").get<std::string>()));
    return p;
}

inline SymLaurent sym_laurent_from_json(const json& terms) {
    SymLaurent p;
    for (const auto& t : terms) {
        MuPoly c;
        Idx4 me{0, 0, 0, 0};
        if (t.contains("mu")) me = idx4_from_json(t.at("mu"));
        for (auto& v : me)
            if (v < 0) throw std::invalid_argument("negative mu exponent");
        c.add_term(me, parse_rational(t.at("c").get<std::string>()));
        p += SymLaurent::monomial(idx4_from_json(t.at("s")), c);
    }
    return p;
}

} // namespace osps3
