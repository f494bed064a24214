#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "osps3/spectral.hpp"
#include "quadrature.hpp"

#include <map>
#include <random>

using namespace osps3;

namespace {

const std::array<Rational, 4> MU_HALF{Rational(1, 2), Rational(1, 2), Rational(1, 2),
                                      Rational(1, 2)};
const std::array<Rational, 4> MU_GEN{Rational(1, 3), Rational(2, 5), Rational(0), Rational(7, 4)};

// monomials of total degree m in the first n coordinates, lexicographic
std::vector<Idx4> degree_monomials(int n, int m) {
    std::vector<Idx4> out;
    std::function<void(int, int, Idx4&)> rec = [&](int pos, int left, Idx4& cur) {
        if (pos == n - 1) {
            cur[static_cast<size_t>(pos)] = left;
            out.push_back(cur);
            return;
        }
        for (int k = left; k >= 0; --k) {
            cur[static_cast<size_t>(pos)] = k;
            rec(pos + 1, left - k, cur);
        }
    };
    Idx4 cur{0, 0, 0, 0};
    if (m >= 0) rec(0, m, cur);
    return out;
}

std::vector<Rational> expand_in(const NumLaurent& f, const std::vector<Idx4>& basis) {
    std::map<Idx4, size_t> pos;
    for (size_t i = 0; i < basis.size(); ++i) pos[basis[i]] = i;
    std::vector<Rational> row(basis.size(), Rational(0));
    for (const auto& [e, c] : f.terms()) {
        auto it = pos.find(e);
        REQUIRE(it != pos.end());
        row[it->second] = c;
    }
    return row;
}

// kernel dimension measured directly as the nullity of the supercharge on the
// degree-m slice in the first n coordinates
int measured_kernel_dim(const Spectral& sp, int n, int m) {
    auto dom = degree_monomials(n, m);
    auto img = degree_monomials(n, m - 1);
    if (img.empty()) return static_cast<int>(dom.size());
    std::vector<std::vector<Rational>> rows;
    for (const auto& e : dom)
        rows.push_back(expand_in(act(sp.op_supercharge(n), NumLaurent::monomial(e, 1)), img));
    return static_cast<int>(dom.size()) - exact_rank(std::move(rows));
}

} // namespace

TEST_CASE("slice dimensions match the counting formulas and the measured nullity") {
    for (int m = 0; m <= 6; ++m) {
        CHECK(dim_poly(4, m) == static_cast<int>(binomial(m + 3, 3)));
        CHECK(dim_kernel(4, m) == dim_poly(4, m) - dim_poly(4, m - 1));
    }
    CHECK(dim_poly(4, -1) == 0);
    CHECK(dim_kernel(2, 3) == 1);   // two variables: every positive degree gives one
    CHECK(dim_kernel(3, 3) == 4);
    CHECK(dim_kernel(4, 3) == 10);

    for (const auto& mu : {MU_HALF, MU_GEN}) {
        Spectral sp(mu);
        for (int n = 2; n <= 4; ++n)
            for (int m = 0; m <= 4; ++m) CHECK(measured_kernel_dim(sp, n, m) == dim_kernel(n, m));
    }
}

TEST_CASE("exact rank on small matrices") {
    CHECK(exact_rank({}) == 0);
    CHECK(exact_rank({{Rational(0), Rational(0)}}) == 0);
    CHECK(exact_rank({{Rational(1), Rational(2)}, {Rational(2), Rational(4)}}) == 1);
    CHECK(exact_rank({{Rational(1), Rational(2), Rational(3)},
                      {Rational(4), Rational(5), Rational(6)},
                      {Rational(7), Rational(8), Rational(9)}}) == 2);
    CHECK_THROWS_AS(exact_rank({{Rational(1)}, {Rational(1), Rational(2)}}),
                    std::invalid_argument);
}

TEST_CASE("one-variable extension reproduces hand-computed low-degree elements") {
    Spectral sp(MU_GEN);
    Rational g1 = sp.gamma(1), g2 = sp.gamma(2);

    auto e1 = sp.ck_extend(NumLaurent::monomial({1, 0, 0, 0}, 1), 2);
    NumLaurent want1;
    want1.add_term({1, 0, 0, 0}, 1);
    want1.add_term({0, 1, 0, 0}, -g1 / g2);
    CHECK(e1 == want1);

    auto e2 = sp.ck_extend(NumLaurent::monomial({2, 0, 0, 0}, 1), 2);
    NumLaurent want2;
    want2.add_term({2, 0, 0, 0}, 1);
    want2.add_term({1, 1, 0, 0}, Rational(-1) / g2);
    want2.add_term({0, 2, 0, 0}, -g1 / g2);
    CHECK(e2 == want2);

    // at the symmetric point the first few elements collapse to integer vectors
    Spectral sh(MU_HALF);
    auto b1 = sh.kernel_basis(1);
    REQUIRE(b1.size() == 3);
    NumLaurent w100, w010, w001;
    w100.add_term({1, 0, 0, 0}, 1);
    w100.add_term({0, 1, 0, 0}, -1);
    w010.add_term({1, 0, 0, 0}, 1);
    w010.add_term({0, 1, 0, 0}, 1);
    w010.add_term({0, 0, 1, 0}, -2);
    w001.add_term({1, 0, 0, 0}, 1);
    w001.add_term({0, 1, 0, 0}, 1);
    w001.add_term({0, 0, 1, 0}, 1);
    w001.add_term({0, 0, 0, 1}, -3);
    CHECK(b1[0].psi == w100);
    CHECK(b1[1].psi == w010);
    CHECK(b1[2].psi == w001);

    CHECK_THROWS_AS(sp.ck_extend(NumLaurent::monomial({0, 1, 0, 0}, 1), 2), std::invalid_argument);
    CHECK_THROWS_AS(sp.ck_extend(NumLaurent::one(), 5), std::invalid_argument);
}

TEST_CASE("kernel basis: count, ordering, membership, eigenvalues") {
    for (const auto& mu : {MU_HALF, MU_GEN}) {
        Spectral sp(mu);
        for (int m = 0; m <= 4; ++m) {
            auto basis = sp.kernel_basis(m);
            CHECK(static_cast<int>(basis.size()) == (m + 1) * (m + 2) / 2);
            CHECK(static_cast<int>(basis.size()) == dim_kernel(4, m));
            // ordering: first exponent descending, then the second
            for (size_t i = 0; i + 1 < basis.size(); ++i) {
                const auto& a = basis[i].j;
                const auto& b = basis[i + 1].j;
                CHECK((a[0] > b[0] || (a[0] == b[0] && a[1] > b[1])));
            }
            for (const auto& b : basis) {
                CHECK(b.j[0] + b.j[1] + b.j[2] == m);
                CHECK(b.psi.is_polynomial());
                CHECK(b.psi.is_homogeneous(m));
                CHECK(sp.in_kernel(b.psi));
                CHECK(sp.scasimir_eigen_ok(b.psi, m));
                CHECK(sp.h_eigen_ok(b.psi, m));
            }
            // linear independence of the slice
            auto mono = degree_monomials(4, m);
            std::vector<std::vector<Rational>> rows;
            for (const auto& b : basis) rows.push_back(expand_in(b.psi, mono));
            CHECK(exact_rank(std::move(rows)) == static_cast<int>(basis.size()));
        }
    }
}

TEST_CASE("closed-form construction equals the extension chain") {
    for (const auto& mu : {MU_HALF, MU_GEN}) {
        Spectral sp(mu);
        for (int m = 0; m <= 4; ++m)
            for (const auto& b : sp.kernel_basis(m)) CHECK(sp.closed_form_element(b.j) == b.psi);
    }
}

TEST_CASE("jacobi evaluation: poles and the homogenization relation") {
    CHECK(jacobi_eval(0, Rational(1, 2), Rational(1, 3), Rational(2)) == 1);
    // P_1^{(a,b)}(x) = (a - b)/2 + (a + b + 2) x / 2
    CHECK(jacobi_eval(1, Rational(1), Rational(2), Rational(1, 3)) ==
          Rational(-1, 2) + Rational(5) * Rational(1, 3) / 2);
    CHECK_THROWS_AS(jacobi_eval(2, Rational(-1), Rational(0), Rational(1, 2)), std::domain_error);
    CHECK(jacobi_homog(-1, Rational(1), Rational(1), 2).is_zero());

    // restricting X + Y = 1 turns the homogenized polynomial into P_n(X - Y);
    // pick rational sample points so both sides stay exact
    for (int n = 0; n <= 4; ++n)
        for (int rep = 0; rep < 5; ++rep) {
            Rational alpha(rep + 1, 2), beta(2 * rep + 1, 3);
            Rational x0(rep + 1, 7);   // X value; Y = 1 - X
            auto J = jacobi_homog(n, alpha, beta, 2);
            // substitute s1^2 = X, s2^2 = 0, s3^2 = Y exactly, term by term
            Rational lhs = 0;
            for (const auto& [e, c] : J.terms()) {
                if (e[1] != 0) continue;   // s2^2 carries a zero value
                Rational v = c;
                for (int t = 0; t < e[0] / 2; ++t) v *= x0;
                for (int t = 0; t < e[2] / 2; ++t) v *= 1 - x0;
                lhs += v;
            }
            CHECK(lhs == jacobi_eval(n, alpha, beta, 2 * x0 - 1));
        }
}

TEST_CASE("parity ladder matches the operator engine") {
    for (const auto& mu : {MU_HALF, MU_GEN}) {
        Spectral sp(mu);
        for (int m = 0; m <= 2; ++m) {
            NumLaurent psi = sp.kernel_basis(m)[0].psi;
            for (int b = 0; b <= 3; ++b) {
                NumLaurent f = psi;
                for (int t = 0; t < b; ++t) f = act(sp.op_raise(4), f);
                for (int a = 0; a <= b + 1; ++a) {
                    auto [c, pw] = sp.parity_action(a, b, m);
                    NumLaurent rhs = psi.scaled(c);
                    for (int t = 0; t < pw; ++t) rhs = act(sp.op_raise(4), rhs);
                    CHECK(f == rhs);
                    f = act(sp.op_supercharge(4), f);
                }
            }
        }
    }
    Spectral sp(MU_GEN);
    CHECK_THROWS_AS(sp.parity_action(-1, 0, 0), std::invalid_argument);
}

TEST_CASE("moment ratios: parity, partition identity, quadrature oracle") {
    Spectral sp(MU_GEN);
    CHECK(sp.sphere_moment_ratio({1, 0, 0, 0}) == 0);
    CHECK(sp.sphere_moment_ratio({0, 0, 0, 0}) == 1);
    CHECK_THROWS_AS(sp.sphere_moment_ratio({-2, 0, 0, 0}), std::domain_error);

    // splitting off one factor of |s|^2 = 1 redistributes the moment exactly
    std::mt19937 rng(61803u);
    std::uniform_int_distribution<int> pick(0, 3);
    for (int rep = 0; rep < 40; ++rep) {
        Idx4 e{2 * pick(rng), 2 * pick(rng), 2 * pick(rng), 2 * pick(rng)};
        Rational lhs = 0;
        for (int i = 0; i < 4; ++i) {
            Idx4 e2 = e;
            e2[static_cast<size_t>(i)] += 2;
            lhs += sp.sphere_moment_ratio(e2);
        }
        CHECK(lhs == sp.sphere_moment_ratio(e));
    }

    // numerical oracle: for half-integer parameters the weighted integrand is a
    // trigonometric polynomial, so fixed-order quadrature is exact
    const std::array<Rational, 4> mus[] = {
        MU_HALF, {Rational(1), Rational(3, 2), Rational(2), Rational(1, 2)}};
    for (const auto& mu : mus) {
        Spectral s(mu);
        std::array<double, 4> mud{to_double(mu[0]), to_double(mu[1]), to_double(mu[2]),
                                  to_double(mu[3])};
        const Idx4 exps[] = {{2, 0, 0, 0}, {0, 4, 0, 0}, {2, 2, 0, 0},
                             {2, 2, 2, 2}, {0, 0, 4, 2}, {6, 0, 2, 0}};
        for (const auto& e : exps) {
            double exact = to_double(s.sphere_moment_ratio(e));
            double numeric = quad::moment_ratio(e, mud);
            CHECK(exact == doctest::Approx(numeric).epsilon(1e-11));
        }
    }
}

TEST_CASE("gram matrix: exact orthogonality, positive diagonal") {
    for (const auto& mu : {MU_HALF, MU_GEN}) {
        Spectral sp(mu);
        auto g = sp.gram(4);
        size_t n = g.size();
        CHECK(n == 35);   // 1 + 3 + 6 + 10 + 15
        for (size_t i = 0; i < n; ++i) {
            CHECK(g[i][i] > 0);
            for (size_t k = i + 1; k < n; ++k) {
                CHECK(g[i][k] == 0);
                CHECK(g[k][i] == 0);
            }
        }
    }
    Spectral sh(MU_HALF);
    auto g = sh.gram(1);
    CHECK(g[0][0] == 1);
    CHECK(g[1][1] == Rational(1, 2));
    CHECK(g[2][2] == Rational(3, 2));
    CHECK(g[3][3] == 3);
}

TEST_CASE("closed-form norms match the exact gram diagonal") {
    for (const auto& mu : {MU_HALF, MU_GEN}) {
        Spectral sp(mu);
        for (int m = 0; m <= 3; ++m)
            for (const auto& b : sp.kernel_basis(m)) CHECK(sp.normalization_rel_err(b.j) < 1e-9);
    }
    // sanity anchor for the total mass at the symmetric point: 2 Gamma(1)^4/Gamma(4)
    Spectral sh(MU_HALF);
    CHECK(sh.weight_mass() == doctest::Approx(1.0 / 3).epsilon(1e-12));
}

TEST_CASE("vanishing parameters degenerate to harmonic polynomials") {
    Spectral s0({Rational(0), Rational(0), Rational(0), Rational(0)});
    for (int m = 0; m <= 5; ++m) {
        CHECK(s0.eigenvalue_h(m) == Rational(m) * (m + 2));
        for (const auto& b : s0.kernel_basis(m)) {
            CHECK(s0.h_eigen_ok(b.psi, m));
            NumLaurent lap;
            for (int i = 0; i < 4; ++i) lap += b.psi.derivative(i).derivative(i);
            CHECK(lap.is_zero());
        }
    }
}

TEST_CASE("raised kernel slices reassemble the full polynomial space") {
    Spectral sp(MU_GEN);
    for (int m = 0; m <= 4; ++m) {
        auto mono = degree_monomials(4, m);
        std::vector<std::vector<Rational>> rows;
        for (int j = 0; m - j >= 0; ++j) {
            for (const auto& b : sp.kernel_basis(m - j)) {
                NumLaurent f = b.psi;
                for (int t = 0; t < j; ++t) f = act(sp.op_raise(4), f);
                rows.push_back(expand_in(f, mono));
            }
        }
        CHECK(exact_rank(std::move(rows)) == dim_poly(4, m));
    }
}

TEST_CASE("low-lying eigenvalues at the symmetric point") {
    Spectral sh(MU_HALF);
    CHECK(sh.eigenvalue_scasimir(0) == Rational(7, 2));
    CHECK(sh.eigenvalue_h(0) == 8);
    CHECK(sh.eigenvalue_h(1) == 15);
}
