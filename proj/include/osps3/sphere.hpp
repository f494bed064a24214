#pragma once

#include "osps3/normal_form.hpp"
#include "osps3/util.hpp"

#include <optional>

namespace osps3 {

// Zero test in the coordinate ring of the unit sphere. A Laurent polynomial f
// vanishes on S^3 iff, after clearing denominators by the minimal even
// monomial s^{2k} (the s_i are units off the coordinate planes and not zero
// divisors modulo the sphere ideal), the substitution s_4^2 -> 1 - s_1^2 -
// s_2^2 - s_3^2 reduces it to the zero polynomial. Terms of the reduced
// representative have s_4-exponent 0 or 1, a free-module basis over the first
// three variables, so the representative is unique.
struct SphereQuotientElem {
    SymLaurent reduced;      // canonical representative, s4-degree <= 1
    Idx4 clearing{0, 0, 0, 0}; // exponents 2k_i of the clearing monomial

    bool is_zero() const { return reduced.is_zero(); }
};

inline SphereQuotientElem reduce_mod_sphere(const SymLaurent& f) {
    SphereQuotientElem out;
    for (int i = 0; i < 4; ++i) {
        int m = f.min_exponent(i);
        out.clearing[static_cast<size_t>(i)] = m < 0 ? 2 * ((-m + 1) / 2) : 0;
    }
    SymLaurent g = f.shifted(out.clearing);

    // 1 - s1^2 - s2^2 - s3^2
    SymLaurent sub = SymLaurent::one();
    for (int i = 0; i < 3; ++i) {
        Idx4 e{0, 0, 0, 0};
        e[static_cast<size_t>(i)] = 2;
        sub -= SymLaurent::monomial(e, MuPoly::one());
    }

    for (;;) {
        SymLaurent keep, replace;
        bool done = true;
        for (const auto& [e, c] : g.terms()) {
            if (e[3] >= 2) {
                done = false;
                Idx4 e2 = e;
                e2[3] -= 2;
                replace += sub.shifted(e2).scaled(c);
            } else {
                keep.add_term(e, c);
            }
        }
        if (done) break;
        g = keep + replace;
    }
    out.reduced = g;
    return out;
}

struct VanishResult {
    bool ok = true;
    Idx4 witness{0, 0, 0, 0};   // first monomial (degree-major order) that fails
    SymLaurent residue;         // its nonzero reduced image

    explicit operator bool() const { return ok; }
};

// monomials s^k with k4 in {0,1} span the quotient ring degree by degree
inline std::vector<Idx4> sphere_monomials(int degree_cap) {
    std::vector<Idx4> out;
    for (int d = 0; d <= degree_cap; ++d)
        for (int k1 = d; k1 >= 0; --k1)
            for (int k2 = d - k1; k2 >= 0; --k2)
                for (int k3 = d - k1 - k2; k3 >= 0; --k3) {
                    int k4 = d - k1 - k2 - k3;
                    if (k4 <= 1) out.push_back(Idx4{k1, k2, k3, k4});
                }
    return out;
}

// does op annihilate every spanning monomial modulo the sphere ideal?
inline VanishResult op_vanishes_on_sphere(const SymNF& op, int degree_cap = 6) {
    auto monos = sphere_monomials(degree_cap);
    std::vector<std::optional<SymLaurent>> bad(monos.size());
    parallel_for(monos.size(), [&](size_t i) {
        SymLaurent f = SymLaurent::monomial(monos[i], MuPoly::one());
        auto r = reduce_mod_sphere(act(op, f));
        if (!r.is_zero()) bad[i] = r.reduced;
    });
    for (size_t i = 0; i < monos.size(); ++i)
        if (bad[i]) {
            VanishResult v;
            v.ok = false;
            v.witness = monos[i];
            v.residue = *bad[i];
            return v;
        }
    return {};
}

inline VanishResult op_vanishes_on_sphere(const OpPtr& op, int degree_cap = 6) {
    return op_vanishes_on_sphere(normal_form(op), degree_cap);
}

} // namespace osps3
