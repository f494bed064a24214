#pragma once

#include "osps3/laurent.hpp"

#include <memory>
#include <variant>
#include <vector>

namespace osps3 {

// Operator expression tree over the Laurent module. Coefficients are MuPoly,
// so a single tree verifies an identity for all mu at once. Nodes are
// immutable and shared; composition order is algebraic (leftmost factor acts
// last).
struct OpExpr;
using OpPtr = std::shared_ptr<const OpExpr>;

struct OpExpr {
    struct Scalar  { MuPoly c; };                 // multiplication by c(mu)
    struct MonoMul { Idx4 e; };                   // multiplication by s^e (e may be negative)
    struct Deriv   { int i; };                    // d/ds_i
    struct Refl    { int i; };                    // s_i -> -s_i
    struct Sum     { std::vector<OpPtr> parts; };
    struct Compose { std::vector<OpPtr> parts; }; // parts[0] applied last
    struct Scale   { MuPoly c; OpPtr child; };

    using Node = std::variant<Scalar, MonoMul, Deriv, Refl, Sum, Compose, Scale>;
    Node node;
};

inline OpPtr op_scalar(const MuPoly& c) { return std::make_shared<OpExpr>(OpExpr{OpExpr::Scalar{c}}); }
inline OpPtr op_scalar(const Rational& c) { return op_scalar(MuPoly(c)); }
inline OpPtr op_mono(const Idx4& e) { return std::make_shared<OpExpr>(OpExpr{OpExpr::MonoMul{e}}); }
inline OpPtr op_deriv(int i) { return std::make_shared<OpExpr>(OpExpr{OpExpr::Deriv{i}}); }
inline OpPtr op_refl(int i) { return std::make_shared<OpExpr>(OpExpr{OpExpr::Refl{i}}); }
inline OpPtr op_sum(std::vector<OpPtr> parts) { return std::make_shared<OpExpr>(OpExpr{OpExpr::Sum{std::move(parts)}}); }
inline OpPtr op_compose(std::vector<OpPtr> parts) { return std::make_shared<OpExpr>(OpExpr{OpExpr::Compose{std::move(parts)}}); }
inline OpPtr op_scale(const MuPoly& c, OpPtr p) { return std::make_shared<OpExpr>(OpExpr{OpExpr::Scale{c, std::move(p)}}); }

inline OpPtr op_var(int i) {             // s_i as a multiplication operator
    Idx4 e{0, 0, 0, 0};
    e.at(static_cast<size_t>(i)) = 1;
    return op_mono(e);
}
inline OpPtr op_inv(int i) {             // s_i^{-1}
    Idx4 e{0, 0, 0, 0};
    e.at(static_cast<size_t>(i)) = -1;
    return op_mono(e);
}

inline OpPtr operator+(OpPtr a, OpPtr b) { return op_sum({std::move(a), std::move(b)}); }
inline OpPtr operator*(OpPtr a, OpPtr b) { return op_compose({std::move(a), std::move(b)}); }
inline OpPtr operator-(OpPtr a) { return op_scale(MuPoly(-1), std::move(a)); }
inline OpPtr operator-(OpPtr a, OpPtr b) { return a + (-std::move(b)); }

inline OpPtr commutator(OpPtr a, OpPtr b) { return a * b - b * a; }
inline OpPtr anticommutator(OpPtr a, OpPtr b) { return a * b + b * a; }

// direct action on a Laurent polynomial
inline SymLaurent act(const OpExpr& op, const SymLaurent& f) {
    return std::visit(
        [&](const auto& n) -> SymLaurent {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, OpExpr::Scalar>) {
                return f.scaled(n.c);
            } else if constexpr (std::is_same_v<T, OpExpr::MonoMul>) {
                return f.shifted(n.e);
            } else if constexpr (std::is_same_v<T, OpExpr::Deriv>) {
                return f.derivative(n.i);
            } else if constexpr (std::is_same_v<T, OpExpr::Refl>) {
                return f.reflected(n.i);
            } else if constexpr (std::is_same_v<T, OpExpr::Sum>) {
                SymLaurent r;
                for (const auto& p : n.parts) r += act(*p, f);
                return r;
            } else if constexpr (std::is_same_v<T, OpExpr::Compose>) {
                SymLaurent g = f;
                for (auto it = n.parts.rbegin(); it != n.parts.rend(); ++it)
                    g = act(**it, g);
                return g;
            } else {
                return act(*n.child, f).scaled(n.c);
            }
        },
        op.node);
}

inline SymLaurent act(const OpPtr& op, const SymLaurent& f) { return act(*op, f); }

} // namespace osps3
