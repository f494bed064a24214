#pragma once

#include "osps3/op_expr.hpp"

#include <compare>
#include <cstdint>

namespace osps3 {

// Canonical (normally ordered) form of an operator: a finite sum
//
//     sum  c(mu) * s^alpha * d^beta * R^eps
//
// with all monomial-multiplications on the left, derivatives in the middle and
// reflections on the right. The interchange rules
//
//     d_i s_i = s_i d_i + 1      R_i s_i = -s_i R_i
//     R_i d_i = -d_i R_i         R_i^2   = 1        (i != j pairs commute)
//
// close this set under composition: moving d^b past s^c is the Leibniz
// expansion  d_i^b s_i^c = sum_k C(b,k) c(c-1)..(c-k+1) s_i^{c-k} d_i^{b-k},
// valid for negative (Laurent) c as well, and reflections contribute a sign
// (-1)^{#odd crossings}. Two operators are equal on the whole Laurent module
// iff their normal forms coincide, so equality of canonical forms is the
// decision procedure used throughout the verifier.
struct NFKey {
    Idx4 s{0, 0, 0, 0};      // monomial exponents (signed)
    Idx4 d{0, 0, 0, 0};      // derivative orders (nonnegative)
    std::uint8_t r = 0;      // reflection bits, bit i = R_{i+1}

    friend auto operator<=>(const NFKey&, const NFKey&) = default;
};

template <class C>
class NormalForm {
public:
    using Terms = std::map<NFKey, C>;

    NormalForm() = default;
    static NormalForm term(const NFKey& k, const C& c) {
        NormalForm nf;
        nf.add_term(k, c);
        return nf;
    }
    static NormalForm identity() { return term(NFKey{}, ring_one<C>()); }
    static NormalForm scalar(const C& c) { return term(NFKey{}, c); }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }

    void add_term(const NFKey& k, const C& c) {
        if (osps3::is_zero(c)) return;
        auto it = terms_.find(k);
        if (it == terms_.end()) {
            terms_.emplace(k, c);
        } else {
            it->second += c;
            if (osps3::is_zero(it->second)) terms_.erase(it);
        }
    }

    NormalForm& operator+=(const NormalForm& o) {
        for (const auto& [k, c] : o.terms_) add_term(k, c);
        return *this;
    }
    NormalForm& operator-=(const NormalForm& o) {
        for (const auto& [k, c] : o.terms_) add_term(k, -c);
        return *this;
    }
    friend NormalForm operator+(NormalForm a, const NormalForm& b) { return a += b; }
    friend NormalForm operator-(NormalForm a, const NormalForm& b) { return a -= b; }

    NormalForm scaled(const C& c) const {
        NormalForm r;
        if (osps3::is_zero(c)) return r;
        for (const auto& [k, v] : terms_) r.add_term(k, v * c);
        return r;
    }

    friend bool operator==(const NormalForm& a, const NormalForm& b) = default;

    // operator composition: (a * b) f = a (b f)
    friend NormalForm operator*(const NormalForm& a, const NormalForm& b) {
        NormalForm r;
        for (const auto& [ka, ca] : a.terms_)
            for (const auto& [kb, cb] : b.terms_)
                compose_terms(r, ka, ca, kb, cb);
        return r;
    }

    SymLaurent to_laurent() const
        requires std::is_same_v<C, MuPoly>
    {
        SymLaurent f;
        for (const auto& [k, c] : terms_) {
            if (k.d != Idx4{0, 0, 0, 0} || k.r != 0)
                throw std::logic_error("normal form is not a multiplication operator");
            f.add_term(k.s, c);
        }
        return f;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [k, c] : terms_) {
            if (!first) os << " + ";
            os << "(" << coeff_str(c) << ")";
            for (int i = 0; i < 4; ++i)
                if (k.s[static_cast<size_t>(i)] != 0) {
                    os << "*s" << i + 1;
                    if (k.s[static_cast<size_t>(i)] != 1) os << "^" << k.s[static_cast<size_t>(i)];
                }
            for (int i = 0; i < 4; ++i)
                if (k.d[static_cast<size_t>(i)] != 0) {
                    os << "*d" << i + 1;
                    if (k.d[static_cast<size_t>(i)] != 1) os << "^" << k.d[static_cast<size_t>(i)];
                }
            for (int i = 0; i < 4; ++i)
                if (k.r & (1u << i)) os << "*R" << i + 1;
            first = false;
        }
        return os.str();
    }

private:
    // normally ordered product of two canonical terms
    static void compose_terms(NormalForm& out, const NFKey& a, const C& ca,
                              const NFKey& b, const C& cb) {
        // reflections of `a` crossing s^{b.s} and d^{b.d}
        int sign = 1;
        for (int i = 0; i < 4; ++i)
            if (a.r & (1u << i)) {
                size_t v = static_cast<size_t>(i);
                if ((b.s[v] + b.d[v]) % 2 != 0) sign = -sign;
            }

        C c0 = ca * cb;
        if (sign < 0) c0 = -c0;

        // Leibniz expansion coordinate by coordinate
        NFKey base;
        base.r = a.r ^ b.r;
        expand(out, a, b, c0, 0, base);
    }

    static void expand(NormalForm& out, const NFKey& a, const NFKey& b, const C& c,
                       int i, NFKey acc) {
        if (i == 4) {
            out.add_term(acc, c);
            return;
        }
        size_t v = static_cast<size_t>(i);
        int bd = a.d[v];     // derivative order crossing s^{b.s[v]}
        int cs = b.s[v];
        for (int k = 0; k <= bd; ++k) {
            Integer w = binomial(bd, k) * falling_factorial(cs, k);
            if (w == 0) continue;
            NFKey next = acc;
            next.s[v] = a.s[v] + cs - k;
            next.d[v] = bd - k + b.d[v];
            expand(out, a, b, c * Rational(w), i + 1, next);
        }
    }

    Terms terms_;
};

using SymNF = NormalForm<MuPoly>;
using NumNF = NormalForm<Rational>;

// fold an expression tree into its canonical form
inline SymNF normal_form(const OpExpr& op) {
    return std::visit(
        [&](const auto& n) -> SymNF {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, OpExpr::Scalar>) {
                return SymNF::scalar(n.c);
            } else if constexpr (std::is_same_v<T, OpExpr::MonoMul>) {
                NFKey k;
                k.s = n.e;
                return SymNF::term(k, MuPoly::one());
            } else if constexpr (std::is_same_v<T, OpExpr::Deriv>) {
                NFKey k;
                k.d.at(static_cast<size_t>(n.i)) = 1;
                return SymNF::term(k, MuPoly::one());
            } else if constexpr (std::is_same_v<T, OpExpr::Refl>) {
                NFKey k;
                k.r = static_cast<std::uint8_t>(1u << n.i);
                return SymNF::term(k, MuPoly::one());
            } else if constexpr (std::is_same_v<T, OpExpr::Sum>) {
                SymNF r;
                for (const auto& p : n.parts) r += normal_form(*p);
                return r;
            } else if constexpr (std::is_same_v<T, OpExpr::Compose>) {
                SymNF r = SymNF::identity();
                for (const auto& p : n.parts) r = r * normal_form(*p);
                return r;
            } else {
                return normal_form(*n.child).scaled(n.c);
            }
        },
        op.node);
}

inline SymNF normal_form(const OpPtr& op) { return normal_form(*op); }

// rebuild an expression tree from a canonical form (soundness cross-checks)
inline OpPtr to_op_expr(const SymNF& nf) {
    std::vector<OpPtr> parts;
    for (const auto& [k, c] : nf.terms()) {
        std::vector<OpPtr> factors;
        if (k.s != Idx4{0, 0, 0, 0}) factors.push_back(op_mono(k.s));
        for (int i = 0; i < 4; ++i)
            for (int n = 0; n < k.d[static_cast<size_t>(i)]; ++n) factors.push_back(op_deriv(i));
        for (int i = 0; i < 4; ++i)
            if (k.r & (1u << i)) factors.push_back(op_refl(i));
        OpPtr term = factors.empty() ? op_scalar(MuPoly::one()) : op_compose(std::move(factors));
        parts.push_back(op_scale(c, std::move(term)));
    }
    if (parts.empty()) return op_scalar(MuPoly());
    return op_sum(std::move(parts));
}

template <class C>
Laurent<C> act(const NormalForm<C>& nf, const Laurent<C>& f) {
    Laurent<C> out;
    for (const auto& [k, c] : nf.terms()) {
        Laurent<C> g = f;
        for (int i = 0; i < 4; ++i)
            if (k.r & (1u << i)) g = g.reflected(i);
        for (int i = 0; i < 4; ++i)
            for (int n = 0; n < k.d[static_cast<size_t>(i)]; ++n) g = g.derivative(i);
        out += g.shifted(k.s).scaled(c);
    }
    return out;
}

inline NumNF evaluate_mu(const SymNF& nf, const std::array<Rational, 4>& mu) {
    for (const auto& m : mu)
        if (m < 0) throw std::domain_error("mu must be nonnegative");
    NumNF r;
    for (const auto& [k, c] : nf.terms()) r.add_term(k, c.evaluate(mu));
    return r;
}

} // namespace osps3
