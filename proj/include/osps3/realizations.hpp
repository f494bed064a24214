#pragma once

#include "osps3/op_expr.hpp"

#include <string>
#include <vector>

namespace osps3 {

// subset of coordinate indices, externally written as a digit string like "134"
struct Subset {
    unsigned mask = 0;    // bit i = coordinate i+1

    static Subset of(std::initializer_list<int> one_based) {
        Subset s;
        for (int i : one_based) s.mask |= 1u << (i - 1);
        return s;
    }
    static Subset full() { return Subset{0xF}; }
    static Subset empty_set() { return Subset{0}; }
    static Subset parse(const std::string& digits);

    bool empty() const { return mask == 0; }
    bool contains0(int i) const { return (mask >> i) & 1u; }   // 0-based
    int size() const { return __builtin_popcount(mask); }
    int sup0() const {                                          // 0-based max element
        if (empty()) throw std::logic_error("sup of empty subset");
        return 31 - __builtin_clz(mask);
    }
    std::vector<int> members0() const {
        std::vector<int> v;
        for (int i = 0; i < 4; ++i)
            if (contains0(i)) v.push_back(i);
        return v;
    }
    std::string str() const {
        std::string s;
        for (int i = 0; i < 4; ++i)
            if (contains0(i)) s += static_cast<char>('1' + i);
        return s;
    }

    friend Subset operator|(Subset a, Subset b) { return Subset{a.mask | b.mask}; }
    friend Subset operator&(Subset a, Subset b) { return Subset{a.mask & b.mask}; }
    friend Subset operator^(Subset a, Subset b) { return Subset{a.mask ^ b.mask}; }
    Subset minus(Subset b) const { return Subset{mask & ~b.mask}; }
    friend bool operator==(Subset a, Subset b) { return a.mask == b.mask; }
};

enum class Gauge { plain, tilde };

// single-sign corruptions of the generator factories; used to demonstrate that
// the identity suite actually constrains every construction site
enum class Mutation {
    none,
    D_dunkl_sign,     // D_i = d_i + mu_i s_i^{-1} R_i
    E_shift_sign,     // E_i = s_i d_i - 1/2
    S_shift_sign,     // S_A = ([D_A,x_A] + 1)/2
    Q_refl_sign,      // Q_A = -S_A prod R
    x_term_sign,      // sign of the top summand of x_A
    L_half_sign,      // the 1/2 in L_jk
    L_cross_sign,     // the +mu_j (s_k/s_j) R_j term in L_jk
    L12_sign,         // L_12 -> -L_12
    M_unit_sign,      // the leading 1 in M_A
    H_potential_sign, // mu_i s_i^{-2} (mu_i + R_i)
    H_kinetic_sign,   // + instead of - on the angular-momentum squares
    tildeD_sign,      // tilde D_i = d_i - mu_i s_i^{-1} (1 - R_i)
};

std::vector<std::pair<std::string, Mutation>> mutation_catalog();
Mutation parse_mutation(const std::string& name);

// Factories for the operator realization on the Laurent module: Dunkl-type
// supercharges with interleaved reflections, their subset combinations, the
// sCasimir/Casimir family, the conserved quantities L_jk and M_A, and the
// Hamiltonian. All coefficients stay symbolic in mu.
class Realizations {
public:
    explicit Realizations(Mutation m = Mutation::none) : mutation_(m) {}

    Mutation mutation() const { return mutation_; }

    OpPtr D(Subset A, Gauge g = Gauge::plain) const;
    OpPtr x(Subset A, Gauge g = Gauge::plain) const;
    OpPtr E(Subset A, Gauge g = Gauge::plain) const;
    OpPtr Dsq(Subset A, Gauge g = Gauge::plain) const;
    OpPtr Xsq(Subset A) const;                       // sum_{i in A} s_i^2
    OpPtr S(Subset A, Gauge g = Gauge::plain) const; // ([D_A, x_A] - 1)/2
    OpPtr Q(Subset A, Gauge g = Gauge::plain) const; // S_A prod_{i in A} R_i;  Q_{} = -1/2

    OpPtr L(int j, int k) const;                     // 1 <= j < k <= 4
    OpPtr M(Subset A) const;                         // |A| = 3

    OpPtr H() const;                    // -sum_{j<k} A_jk^2 + sum_i mu_i s_i^{-2}(mu_i - R_i)
    OpPtr H_from_scasimir(Gauge g = Gauge::plain) const;  // S^2 - S - 3/4 on the full set
    OpPtr ambient_bridge_rhs() const;   // kinetic part + |x|^2 * potential part

    OpPtr angular(int j, int k) const;  // s_j d_k - s_k d_j (1-based, j != k)

    static MuPoly mu(int i) { return MuPoly::variable(i - 1); }          // 1-based
    static MuPoly gamma(int i) { return mu(i) + MuPoly(Rational(1, 2)); }

private:
    OpPtr prim_D(int i, Gauge g) const;   // 0-based single-coordinate factories
    OpPtr prim_x(int i) const;
    OpPtr prim_E(int i, Gauge g) const;
    OpPtr refl_run(int from0, int to0) const;  // R_{from+1} ... R_{to}, 0-based bounds
    OpPtr kinetic_part() const;
    OpPtr potential_part() const;

    Mutation mutation_;
};

} // namespace osps3
