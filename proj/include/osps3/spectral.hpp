#pragma once

#include "osps3/normal_form.hpp"
#include "osps3/realizations.hpp"

#include <vector>

namespace osps3 {

// counting helpers for homogeneous polynomials in `nvars` variables
int dim_poly(int nvars, int m);     // dim of the degree-m homogeneous slice
int dim_kernel(int nvars, int m);   // dim of the supercharge kernel inside it

// exact rank over Q by fraction-free-style elimination; all rows must share one length
int exact_rank(std::vector<std::vector<Rational>> rows);

// classical one-variable Jacobi polynomial; throws std::domain_error when the
// hypergeometric form hits a parameter pole ((alpha+1)_k = 0 under a nonzero
// numerator)
Rational jacobi_eval(int n, const Rational& alpha, const Rational& beta, const Rational& x);

// two-variable homogenization in X = s_1^2 + ... + s_q^2 and Y = s_{q+1}^2:
//   J_n(X, Y) = ((alpha+1)_n / n!) sum_k [(-n)_k (-n-beta)_k / ((alpha+1)_k k!)]
//               X^{n-k} (-1)^k Y^k
// J_{-1} is the zero polynomial by convention.
NumLaurent jacobi_homog(int n, const Rational& alpha, const Rational& beta, int q);

struct BasisElement {
    std::array<int, 3> j{0, 0, 0};   // extension exponents, degree = j1+j2+j3
    NumLaurent psi;
};

// Polynomial eigenbasis machinery at a fixed rational parameter vector. The
// basis elements are built by iterated one-variable extensions interleaved
// with raising operators; every operator acts through its canonical form, and
// every scalar stays rational, so eigenvalue and orthogonality statements are
// decided exactly.
class Spectral {
public:
    explicit Spectral(const std::array<Rational, 4>& mu);

    const std::array<Rational, 4>& mu() const { return mu_; }
    Rational gamma(int i) const;       // mu_i + 1/2, 1-based
    Rational gamma_sum(int n) const;   // sum of the first n gammas

    // canonical forms of the generators restricted to the first n coordinates
    const NumNF& op_supercharge(int n) const;   // shifted-gauge supercharge
    const NumNF& op_raise(int n) const;         // interleaved multiplication operator
    const NumNF& op_scasimir() const;           // shifted-gauge sCasimir, all 4 coordinates
    const NumNF& op_hamiltonian() const;        // S^2 - S - 3/4

    // one-variable extension into coordinate s_n (n = 2, 3, 4); the input may
    // involve s_1..s_{n-1} only
    NumLaurent ck_extend(const NumLaurent& p, int n) const;

    // extension-chain basis of the degree-m kernel slice, (m+1)(m+2)/2 elements,
    // ordered j1 descending then j2 descending
    std::vector<BasisElement> kernel_basis(int m) const;

    // closed-form construction of the same element through homogenized Jacobi
    // blocks; equal to the chain construction term by term
    NumLaurent closed_form_element(const std::array<int, 3>& j) const;

    bool in_kernel(const NumLaurent& f) const;

    Rational eigenvalue_scasimir(int m) const;   // m + gamma_sum(4) - 1/2
    Rational eigenvalue_h(int m) const;          // (m+g)(m+g-2), g = gamma_sum(4)

    // exact eigenvector statements (ambient, no restriction needed)
    bool scasimir_eigen_ok(const NumLaurent& psi, int m) const;
    bool h_eigen_ok(const NumLaurent& psi, int m) const;

    // action of D^a x^b on a degree-m kernel element as a closed-form multiple
    // of a power of x; returns {coefficient, resulting power}
    std::pair<Rational, int> parity_action(int a, int b, int m) const;

    // weighted moments over the unit sphere, as exact ratios to the total mass
    Rational sphere_moment_ratio(const Idx4& e) const;
    Rational inner_product_ratio(const NumLaurent& f, const NumLaurent& g) const;

    // Gram matrix of all kernel-basis elements of degree 0..m_max (block order
    // by degree, entries are mass-relative inner products)
    std::vector<std::vector<Rational>> gram(int m_max) const;

    double weight_mass() const;   // total weighted surface measure of the sphere

    // closed-form squared norm 2 / (eta1 eta2 eta3)^2 and its relative
    // deviation from the exact rational Gram diagonal
    double normalization_target(const std::array<int, 3>& j) const;
    double normalization_rel_err(const std::array<int, 3>& j) const;

private:
    double eta_sq(int n, int inner_degree, int j) const;   // one extension level

    std::array<Rational, 4> mu_;
    std::array<NumNF, 4> supercharge_;   // index n-1
    std::array<NumNF, 4> raise_;
    NumNF scasimir_;
    NumNF hamiltonian_;
};

} // namespace osps3
