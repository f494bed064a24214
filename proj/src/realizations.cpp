#include "osps3/realizations.hpp"

#include <functional>

namespace osps3 {

Subset Subset::parse(const std::string& digits) {
    Subset s;
    for (char c : digits) {
        if (c < '1' || c > '4') throw std::invalid_argument("subset digits must be 1..4");
        unsigned bit = 1u << (c - '1');
        if (s.mask & bit) throw std::invalid_argument("repeated coordinate in subset");
        s.mask |= bit;
    }
    return s;
}

std::vector<std::pair<std::string, Mutation>> mutation_catalog() {
    return {
        {"D-dunkl-sign", Mutation::D_dunkl_sign},
        {"E-shift-sign", Mutation::E_shift_sign},
        {"S-shift-sign", Mutation::S_shift_sign},
        {"Q-refl-sign", Mutation::Q_refl_sign},
        {"x-term-sign", Mutation::x_term_sign},
        {"L-half-sign", Mutation::L_half_sign},
        {"L-cross-sign", Mutation::L_cross_sign},
        {"L12-sign", Mutation::L12_sign},
        {"M-unit-sign", Mutation::M_unit_sign},
        {"H-potential-sign", Mutation::H_potential_sign},
        {"H-kinetic-sign", Mutation::H_kinetic_sign},
        {"tildeD-sign", Mutation::tildeD_sign},
    };
}

Mutation parse_mutation(const std::string& name) {
    for (const auto& [n, m] : mutation_catalog())
        if (n == name) return m;
    throw std::invalid_argument("unknown mutation: " + name);
}

OpPtr Realizations::prim_D(int i, Gauge g) const {
    Idx4 inv{0, 0, 0, 0};
    inv[static_cast<size_t>(i)] = -1;
    MuPoly m = MuPoly::variable(i);
    if (g == Gauge::plain) {
        // d_i - mu_i s_i^{-1} R_i
        Rational sign = mutation_ == Mutation::D_dunkl_sign ? 1 : -1;
        return op_deriv(i) + op_scale(m * sign, op_mono(inv) * op_refl(i));
    }
    // d_i + mu_i s_i^{-1} (1 - R_i)
    Rational sign = mutation_ == Mutation::tildeD_sign ? -1 : 1;
    OpPtr one_minus_R = op_scalar(MuPoly::one()) - op_refl(i);
    return op_deriv(i) + op_scale(m * sign, op_mono(inv) * one_minus_R);
}

OpPtr Realizations::prim_x(int i) const {
    Idx4 e{0, 0, 0, 0};
    e[static_cast<size_t>(i)] = 1;
    return op_mono(e);
}

OpPtr Realizations::prim_E(int i, Gauge g) const {
    OpPtr euler = prim_x(i) * op_deriv(i);
    MuPoly shift = (g == Gauge::plain) ? MuPoly(Rational(1, 2)) : gamma(i + 1);
    if (mutation_ == Mutation::E_shift_sign) shift = -shift;
    return euler + op_scalar(shift);
}

OpPtr Realizations::refl_run(int from0, int to0) const {
    std::vector<OpPtr> rs;
    for (int j = from0; j <= to0; ++j) rs.push_back(op_refl(j));
    if (rs.empty()) return op_scalar(MuPoly::one());
    return op_compose(std::move(rs));
}

// interleaved sum: sum_{i in A} G_i R_{i+1} ... R_{sup A}, the product running
// over every integer in the range whether or not it belongs to A
static OpPtr subset_sum(const Subset& A, const std::function<OpPtr(int)>& gen,
                        const Realizations* self, OpPtr (Realizations::*run)(int, int) const) {
    if (A.empty()) throw std::invalid_argument("empty subset");
    int sup = A.sup0();
    std::vector<OpPtr> parts;
    for (int i : A.members0()) {
        OpPtr g = gen(i);
        if (i < sup) g = g * (self->*run)(i + 1, sup);
        parts.push_back(std::move(g));
    }
    return parts.size() == 1 ? parts[0] : op_sum(std::move(parts));
}

OpPtr Realizations::D(Subset A, Gauge g) const {
    return subset_sum(A, [&](int i) { return prim_D(i, g); }, this, &Realizations::refl_run);
}

OpPtr Realizations::x(Subset A, Gauge g) const {
    (void)g;   // the gauge transformation fixes multiplication operators
    int sup = A.sup0();
    return subset_sum(
        A,
        [&](int i) {
            OpPtr xi = prim_x(i);
            if (mutation_ == Mutation::x_term_sign && i == sup) xi = -xi;
            return xi;
        },
        this, &Realizations::refl_run);
}

OpPtr Realizations::E(Subset A, Gauge g) const {
    if (A.empty()) throw std::invalid_argument("empty subset");
    std::vector<OpPtr> parts;
    for (int i : A.members0()) parts.push_back(prim_E(i, g));
    return parts.size() == 1 ? parts[0] : op_sum(std::move(parts));
}

OpPtr Realizations::Dsq(Subset A, Gauge g) const {
    OpPtr d = D(A, g);
    return d * d;
}

OpPtr Realizations::Xsq(Subset A) const {
    if (A.empty()) throw std::invalid_argument("empty subset");
    std::vector<OpPtr> parts;
    for (int i : A.members0()) {
        Idx4 e{0, 0, 0, 0};
        e[static_cast<size_t>(i)] = 2;
        parts.push_back(op_mono(e));
    }
    return parts.size() == 1 ? parts[0] : op_sum(std::move(parts));
}

OpPtr Realizations::S(Subset A, Gauge g) const {
    if (A.empty()) throw std::invalid_argument("empty subset");
    Rational shift = mutation_ == Mutation::S_shift_sign ? 1 : -1;
    OpPtr inner = commutator(D(A, g), x(A, g)) + op_scalar(MuPoly(shift));
    return op_scale(MuPoly(Rational(1, 2)), inner);
}

OpPtr Realizations::Q(Subset A, Gauge g) const {
    if (A.empty()) return op_scalar(MuPoly(Rational(-1, 2)));
    std::vector<OpPtr> factors{S(A, g)};
    for (int i : A.members0()) factors.push_back(op_refl(i));
    OpPtr q = op_compose(std::move(factors));
    if (mutation_ == Mutation::Q_refl_sign) q = -q;
    return q;
}

OpPtr Realizations::angular(int j, int k) const {
    int a = j - 1, b = k - 1;
    return prim_x(a) * op_deriv(b) - prim_x(b) * op_deriv(a);
}

OpPtr Realizations::L(int j, int k) const {
    if (!(1 <= j && j < k && k <= 4)) throw std::invalid_argument("need 1 <= j < k <= 4");
    int a = j - 1, b = k - 1;
    MuPoly mj = MuPoly::variable(a), mk = MuPoly::variable(b);

    Rational half = mutation_ == Mutation::L_half_sign ? Rational(-1, 2) : Rational(1, 2);
    Rational cross = mutation_ == Mutation::L_cross_sign ? -1 : 1;

    Idx4 kj{0, 0, 0, 0};                    // s_k / s_j
    kj[static_cast<size_t>(b)] = 1;
    kj[static_cast<size_t>(a)] = -1;
    Idx4 jk{0, 0, 0, 0};                    // s_j / s_k
    jk[static_cast<size_t>(a)] = 1;
    jk[static_cast<size_t>(b)] = -1;

    OpPtr inner = angular(j, k)
                + op_scale(mj * cross, op_mono(kj) * op_refl(a))
                + op_scale(-mk, op_mono(jk) * op_refl(b));
    OpPtr core = op_scalar(MuPoly(half))
               + op_scale(mj, op_refl(a))
               + op_scale(mk, op_refl(b))
               + inner * refl_run(a + 1, b);
    OpPtr ell = core * op_refl(a) * op_refl(b);
    if (mutation_ == Mutation::L12_sign && j == 1 && k == 2) ell = -ell;
    return ell;
}

OpPtr Realizations::M(Subset A) const {
    if (A.size() != 3) throw std::invalid_argument("M needs a three-element subset");
    Rational unit = mutation_ == Mutation::M_unit_sign ? -1 : 1;
    std::vector<OpPtr> terms{op_scalar(MuPoly(unit))};
    for (int i : A.members0()) terms.push_back(op_scale(MuPoly::variable(i), op_refl(i)));
    auto mem = A.members0();
    for (size_t p = 0; p < mem.size(); ++p)
        for (size_t q = p + 1; q < mem.size(); ++q) {
            int a = mem[p], b = mem[q];
            MuPoly ma = MuPoly::variable(a), mb = MuPoly::variable(b);
            Idx4 ba{0, 0, 0, 0};
            ba[static_cast<size_t>(b)] = 1;
            ba[static_cast<size_t>(a)] = -1;
            Idx4 ab{0, 0, 0, 0};
            ab[static_cast<size_t>(a)] = 1;
            ab[static_cast<size_t>(b)] = -1;
            OpPtr inner = angular(a + 1, b + 1)
                        + op_scale(ma, op_mono(ba) * op_refl(a))
                        + op_scale(-mb, op_mono(ab) * op_refl(b));
            terms.push_back(inner * refl_run(a + 1, b));
        }
    std::vector<OpPtr> factors{op_sum(std::move(terms))};
    for (int i : A.members0()) factors.push_back(op_refl(i));
    return op_compose(std::move(factors));
}

OpPtr Realizations::kinetic_part() const {
    Rational sign = mutation_ == Mutation::H_kinetic_sign ? 1 : -1;
    std::vector<OpPtr> parts;
    for (int j = 1; j <= 4; ++j)
        for (int k = j + 1; k <= 4; ++k) {
            OpPtr a = angular(j, k);
            parts.push_back(op_scale(MuPoly(sign), a * a));
        }
    return op_sum(std::move(parts));
}

OpPtr Realizations::potential_part() const {
    Rational rsign = mutation_ == Mutation::H_potential_sign ? 1 : -1;
    std::vector<OpPtr> parts;
    for (int i = 0; i < 4; ++i) {
        Idx4 inv2{0, 0, 0, 0};
        inv2[static_cast<size_t>(i)] = -2;
        MuPoly m = MuPoly::variable(i);
        OpPtr paren = op_scalar(m) + op_scale(MuPoly(rsign), op_refl(i));
        parts.push_back(op_scale(m, op_mono(inv2) * paren));
    }
    return op_sum(std::move(parts));
}

OpPtr Realizations::H() const { return kinetic_part() + potential_part(); }

OpPtr Realizations::H_from_scasimir(Gauge g) const {
    OpPtr s = S(Subset::full(), g);
    return s * s - s - op_scalar(MuPoly(Rational(3, 4)));
}

OpPtr Realizations::ambient_bridge_rhs() const {
    return kinetic_part() + Xsq(Subset::full()) * potential_part();
}

} // namespace osps3
