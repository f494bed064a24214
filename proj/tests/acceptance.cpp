// End-to-end acceptance gate. Each numbered criterion prints exactly one
// PASS/FAIL line; the process exits nonzero if any criterion fails.

#include "osps3/spectral.hpp"
#include "osps3/verifier.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <random>

using namespace osps3;

namespace {

double now_s() {
    return std::chrono::duration<double>(
               std::chrono::steady_clock::now().time_since_epoch())
        .count();
}

bool section_all_pass(const std::string& section, int expected_count, double* elapsed = nullptr,
                      int cap = 6) {
    VerifierConfig cfg;
    cfg.sphere_cap = cap;
    cfg.sections = {section};
    double t0 = now_s();
    VerificationReport rep = run_full_suite(cfg);
    if (elapsed) *elapsed = now_s() - t0;
    return rep.all_pass() && static_cast<int>(rep.checks.size()) == expected_count;
}

// deterministic small-denominator parameters in [0, 2]
std::array<Rational, 4> random_mu(std::mt19937& rng) {
    std::uniform_int_distribution<int> den(1, 4);
    std::array<Rational, 4> mu;
    for (auto& m : mu) {
        int d = den(rng);
        std::uniform_int_distribution<int> num(0, 2 * d);
        m = Rational(num(rng), d);
    }
    return mu;
}

std::vector<Idx4> degree_monomials(int m) {
    std::vector<Idx4> out;
    for (int a = m; a >= 0; --a)
        for (int b = m - a; b >= 0; --b)
            for (int c = m - a - b; c >= 0; --c) out.push_back({a, b, c, m - a - b - c});
    return out;
}

std::vector<Rational> expand_in(const NumLaurent& f, const std::map<Idx4, size_t>& pos) {
    std::vector<Rational> row(pos.size(), Rational(0));
    for (const auto& [e, c] : f.terms()) row.at(pos.at(e)) = c;
    return row;
}

bool spectral_suite_at(const std::array<Rational, 4>& mu, int m_top) {
    Spectral sp(mu);
    for (int m = 0; m <= m_top; ++m) {
        auto basis = sp.kernel_basis(m);
        if (static_cast<int>(basis.size()) != (m + 1) * (m + 2) / 2) return false;
        for (const auto& b : basis) {
            if (!b.psi.is_polynomial() || !b.psi.is_homogeneous(m)) return false;
            if (!sp.in_kernel(b.psi)) return false;
            if (!sp.scasimir_eigen_ok(b.psi, m)) return false;
            if (!sp.h_eigen_ok(b.psi, m)) return false;
            if (sp.closed_form_element(b.j) != b.psi) return false;
        }
        // raising lower kernel slices recovers every polynomial of degree m
        auto mono = degree_monomials(m);
        std::map<Idx4, size_t> pos;
        for (size_t i = 0; i < mono.size(); ++i) pos[mono[i]] = i;
        std::vector<std::vector<Rational>> rows;
        for (int j = 0; m - j >= 0; ++j)
            for (const auto& b : sp.kernel_basis(m - j)) {
                NumLaurent f = b.psi;
                for (int t = 0; t < j; ++t) f = act(sp.op_raise(4), f);
                rows.push_back(expand_in(f, pos));
            }
        if (exact_rank(std::move(rows)) != dim_poly(4, m)) return false;
    }
    return true;
}

bool orthogonality_at(const std::array<Rational, 4>& mu) {
    Spectral sp(mu);
    auto g = sp.gram(4);
    if (g.size() != 35) return false;
    for (size_t i = 0; i < g.size(); ++i) {
        if (!(g[i][i] > 0)) return false;
        for (size_t k = i + 1; k < g.size(); ++k)
            if (g[i][k] != 0 || g[k][i] != 0) return false;
    }
    for (int m = 0; m <= 3; ++m)
        for (const auto& b : sp.kernel_basis(m))
            if (!(sp.normalization_rel_err(b.j) < 1e-9)) return false;
    return true;
}

} // namespace

int main() {
    std::mt19937 rng(20260815u);
    const std::array<Rational, 4> mu_sym{Rational(1, 2), Rational(1, 2), Rational(1, 2),
                                         Rational(1, 2)};
    const std::array<Rational, 4> mu_r1 = random_mu(rng);
    const std::array<Rational, 4> mu_r2 = random_mu(rng);

    struct Criterion {
        int num;
        std::string label;
        std::function<bool()> run;
    };

    std::vector<Criterion> criteria;

    criteria.push_back({1, "superalgebra relations for all 15 subsets, both gauges, symbolic",
                        [] {
                            double elapsed = 0;
                            bool ok = section_all_pass("osp", 300, &elapsed);
                            return ok && elapsed < 60.0;
                        }});

    criteria.push_back({2, "sCasimir anti/commutation, central invariants, Q_i = mu_i", [] {
                            return section_all_pass("scasimir", 348);
                        }});

    criteria.push_back({3, "dressed invariants match their explicit forms for every subset",
                        [] {
                            return section_all_pass("ident", 15);
                        }});

    criteria.push_back({4, "Hamiltonian bridge and symmetries, ambient and on the sphere", [] {
                            return section_all_pass("symmetry", 31);
                        }});

    criteria.push_back({5, "structure relations for all 256 pairs plus the rank-1 subalgebra",
                        [] {
                            return section_all_pass("structure", 256) &&
                                   section_all_pass("rank1", 12);
                        }});

    criteria.push_back({6, "eigenbasis through degree 5 at the symmetric and two random points",
                        [&] {
                            double t0 = now_s();
                            bool ok = spectral_suite_at(mu_sym, 5) && spectral_suite_at(mu_r1, 5) &&
                                      spectral_suite_at(mu_r2, 5);
                            return ok && (now_s() - t0) < 300.0;
                        }});

    criteria.push_back({7, "exact orthogonality through degree 4 and closed-form norms", [&] {
                            return orthogonality_at(mu_sym) && orthogonality_at(mu_r1) &&
                                   orthogonality_at(mu_r2);
                        }});

    criteria.push_back({8, "vanishing parameters degenerate to harmonic polynomials", [] {
                            Spectral s0({Rational(0), Rational(0), Rational(0), Rational(0)});
                            for (int m = 0; m <= 5; ++m) {
                                if (s0.eigenvalue_h(m) != Rational(m) * (m + 2)) return false;
                                for (const auto& b : s0.kernel_basis(m)) {
                                    if (!s0.h_eigen_ok(b.psi, m)) return false;
                                    NumLaurent lap;
                                    for (int i = 0; i < 4; ++i)
                                        lap += b.psi.derivative(i).derivative(i);
                                    if (!lap.is_zero()) return false;
                                }
                            }
                            return true;
                        }});

    criteria.push_back({9, "every cataloged mutation is detected by at least one check", [] {
                            auto cat = mutation_catalog();
                            if (cat.size() < 10) return false;
                            for (const auto& [name, mut] : cat) {
                                VerifierConfig cfg;
                                cfg.sphere_cap = 2;
                                cfg.mutation = mut;
                                if (run_full_suite(cfg).all_pass()) return false;
                            }
                            return true;
                        }});

    bool all = true;
    for (const auto& c : criteria) {
        double t0 = now_s();
        bool ok = c.run();
        double dt = now_s() - t0;
        all = all && ok;
        std::cout << (ok ? "PASS" : "FAIL") << "  " << c.num << "  " << c.label << "  ("
                  << std::fixed << std::setprecision(1) << dt << " s)\n";
    }
    std::cout << (all ? "ACCEPTANCE: PASS" : "ACCEPTANCE: FAIL") << "\n";
    return all ? 0 : 1;
}
