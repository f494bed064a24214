#include "osps3/spectral.hpp"

#include <cmath>

namespace osps3 {

int dim_poly(int nvars, int m) {
    if (m < 0) return 0;
    return static_cast<int>(binomial(m + nvars - 1, nvars - 1));
}

int dim_kernel(int nvars, int m) { return dim_poly(nvars, m) - dim_poly(nvars, m - 1); }

int exact_rank(std::vector<std::vector<Rational>> rows) {
    if (rows.empty()) return 0;
    const size_t ncols = rows[0].size();
    for (const auto& r : rows)
        if (r.size() != ncols) throw std::invalid_argument("ragged matrix");
    int rank = 0;
    size_t row = 0;
    for (size_t col = 0; col < ncols && row < rows.size(); ++col) {
        size_t piv = row;
        while (piv < rows.size() && rows[piv][col] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[piv], rows[row]);
        for (size_t r = row + 1; r < rows.size(); ++r) {
            if (rows[r][col] == 0) continue;
            Rational f = rows[r][col] / rows[row][col];
            for (size_t c = col; c < ncols; ++c) rows[r][c] -= f * rows[row][c];
        }
        ++row;
        ++rank;
    }
    return rank;
}

Rational jacobi_eval(int n, const Rational& alpha, const Rational& beta, const Rational& x) {
    if (n < 0) return 0;
    Rational pref = pochhammer(alpha + 1, n) / factorial_rat(n);
    Rational z = (1 - x) / 2;
    Rational sum = 1;   // k = 0 term
    Rational num = 1, den = 1, zp = 1;
    for (int k = 1; k <= n; ++k) {
        num *= (Rational(-n) + (k - 1)) * (Rational(n) + alpha + beta + k);
        if (num == 0) break;
        Rational dstep = alpha + k;   // (alpha+1)_k gains the factor alpha+k
        if (dstep == 0) throw std::domain_error("jacobi parameter pole");
        den *= dstep * k;
        zp *= z;
        sum += num / den * zp;
    }
    return pref * sum;
}

NumLaurent jacobi_homog(int n, const Rational& alpha, const Rational& beta, int q) {
    NumLaurent out;
    if (n < 0) return out;
    NumLaurent X;
    for (int i = 0; i < q; ++i) {
        Idx4 e{0, 0, 0, 0};
        e.at(static_cast<size_t>(i)) = 2;
        X.add_term(e, 1);
    }
    Idx4 ye{0, 0, 0, 0};
    ye.at(static_cast<size_t>(q)) = 2;

    Rational pref = pochhammer(alpha + 1, n) / factorial_rat(n);
    std::vector<NumLaurent> xpow(static_cast<size_t>(n) + 1);
    xpow[0] = NumLaurent::one();
    for (int k = 1; k <= n; ++k) xpow[static_cast<size_t>(k)] = xpow[static_cast<size_t>(k - 1)] * X;

    Rational num = 1, den = 1;
    for (int k = 0; k <= n; ++k) {
        if (k > 0) {
            num *= (Rational(-n) + (k - 1)) * (Rational(-n) - beta + (k - 1));
            if (num == 0) break;
            Rational dstep = alpha + k;
            if (dstep == 0) throw std::domain_error("jacobi parameter pole");
            den *= dstep * k;
        }
        Rational c = pref * num / den * (k % 2 == 0 ? 1 : -1);
        Idx4 yshift{0, 0, 0, 0};
        yshift.at(static_cast<size_t>(q)) = 2 * k;
        out += xpow[static_cast<size_t>(n - k)].shifted(yshift).scaled(c);
    }
    return out;
}

namespace {

Subset first_n(int n) {
    Subset s;
    for (int i = 1; i <= n; ++i) s.mask |= 1u << (i - 1);
    return s;
}

Rational pow2(int k) { return Rational(Integer(1) << k); }

} // namespace

Spectral::Spectral(const std::array<Rational, 4>& mu) : mu_(mu) {
    Realizations R;
    for (int n = 1; n <= 4; ++n) {
        Subset A = first_n(n);
        supercharge_[static_cast<size_t>(n - 1)] =
            evaluate_mu(normal_form(R.D(A, Gauge::tilde)), mu_);
        raise_[static_cast<size_t>(n - 1)] = evaluate_mu(normal_form(R.x(A)), mu_);
    }
    scasimir_ = evaluate_mu(normal_form(R.S(Subset::full(), Gauge::tilde)), mu_);
    hamiltonian_ = scasimir_ * scasimir_ - scasimir_ - NumNF::scalar(Rational(3, 4));
}

Rational Spectral::gamma(int i) const {
    return mu_.at(static_cast<size_t>(i - 1)) + Rational(1, 2);
}

Rational Spectral::gamma_sum(int n) const {
    Rational g = 0;
    for (int i = 1; i <= n; ++i) g += gamma(i);
    return g;
}

const NumNF& Spectral::op_supercharge(int n) const {
    return supercharge_.at(static_cast<size_t>(n - 1));
}
const NumNF& Spectral::op_raise(int n) const { return raise_.at(static_cast<size_t>(n - 1)); }
const NumNF& Spectral::op_scasimir() const { return scasimir_; }
const NumNF& Spectral::op_hamiltonian() const { return hamiltonian_; }

NumLaurent Spectral::ck_extend(const NumLaurent& p, int n) const {
    if (n < 2 || n > 4) throw std::invalid_argument("extension coordinate must be 2, 3 or 4");
    for (const auto& [e, c] : p.terms())
        for (int i = n - 1; i < 4; ++i)
            if (e[static_cast<size_t>(i)] != 0)
                throw std::invalid_argument("input already involves the extension coordinate");

    const NumNF& D = op_supercharge(n - 1);
    Rational gn = gamma(n);
    int guard = p.total_degree() + 2;

    NumLaurent out;
    NumLaurent q = p;
    for (int k = 0; !q.is_zero(); ++k) {
        if (k > guard) throw std::logic_error("extension series did not terminate");
        int i = k / 2;
        Rational ck;
        if (k % 2 == 0) {
            ck = Rational(i % 2 == 0 ? 1 : -1) /
                 (factorial_rat(i) * pochhammer(gn, i) * pow2(2 * i));
        } else {
            ck = Rational(i % 2 == 0 ? -1 : 1) /
                 (factorial_rat(i) * pochhammer(gn, i + 1) * pow2(2 * i + 1));
        }
        Idx4 shift{0, 0, 0, 0};
        shift.at(static_cast<size_t>(n - 1)) = k;
        out += q.shifted(shift).scaled(ck);
        q = act(D, q);
    }
    return out;
}

namespace {

NumLaurent shift_coord(const NumLaurent& p, int coord0, int k = 1) {
    Idx4 e{0, 0, 0, 0};
    e.at(static_cast<size_t>(coord0)) = k;
    return p.shifted(e);
}

} // namespace

std::vector<BasisElement> Spectral::kernel_basis(int m) const {
    std::vector<BasisElement> out;
    for (int j1 = m; j1 >= 0; --j1)
        for (int j2 = m - j1; j2 >= 0; --j2) {
            int j3 = m - j1 - j2;
            BasisElement b;
            b.j = {j1, j2, j3};
            NumLaurent p = NumLaurent::monomial({j1, 0, 0, 0}, 1);
            p = ck_extend(p, 2);
            for (int t = 0; t < j2; ++t) p = act(op_raise(2), p);
            p = ck_extend(p, 3);
            for (int t = 0; t < j3; ++t) p = act(op_raise(3), p);
            p = ck_extend(p, 4);
            b.psi = std::move(p);
            out.push_back(std::move(b));
        }
    return out;
}

NumLaurent Spectral::closed_form_element(const std::array<int, 3>& j) const {
    NumLaurent p = NumLaurent::one();
    int inner = 0;
    for (int level = 0; level < 3; ++level) {
        int n = level + 2;          // extension coordinate
        int jj = j.at(static_cast<size_t>(level));
        Rational gn = gamma(n);
        Rational gs = gamma_sum(n - 1);
        int c = jj / 2;
        Rational pref = factorial_rat(c) / pochhammer(gn, c);
        NumLaurent blk;
        if (jj % 2 == 0) {
            NumLaurent A = jacobi_homog(c, gn - 1, inner + gs - 1, n - 1) * p;
            NumLaurent B;
            if (c >= 1)
                B = shift_coord(act(op_raise(n - 1), jacobi_homog(c - 1, gn, inner + gs, n - 1) * p),
                                n - 1);
            blk = (A - B).scaled(pref);
        } else {
            NumLaurent A = act(op_raise(n - 1), jacobi_homog(c, gn - 1, inner + gs, n - 1) * p);
            NumLaurent B = shift_coord(jacobi_homog(c, gn, inner + gs - 1, n - 1) * p, n - 1)
                               .scaled((inner + c + gs) / (c + gn));
            blk = (A - B).scaled(pref);
        }
        p = std::move(blk);
        inner += jj;
    }
    return p;
}

bool Spectral::in_kernel(const NumLaurent& f) const {
    return act(op_supercharge(4), f).is_zero();
}

Rational Spectral::eigenvalue_scasimir(int m) const {
    return Rational(m) + gamma_sum(4) - Rational(1, 2);
}

Rational Spectral::eigenvalue_h(int m) const {
    Rational g = Rational(m) + gamma_sum(4);
    return g * (g - 2);
}

bool Spectral::scasimir_eigen_ok(const NumLaurent& psi, int m) const {
    return act(scasimir_, psi) == psi.scaled(eigenvalue_scasimir(m));
}

bool Spectral::h_eigen_ok(const NumLaurent& psi, int m) const {
    return act(hamiltonian_, psi) == psi.scaled(eigenvalue_h(m));
}

std::pair<Rational, int> Spectral::parity_action(int a, int b, int m) const {
    if (a < 0 || b < 0 || m < 0) throw std::invalid_argument("negative order");
    Rational g = gamma_sum(4);
    Rational c;
    if (a % 2 == 0 && b % 2 == 0) {
        int al = a / 2, be = b / 2;
        c = pow2(a) * pochhammer(Rational(-be), al) * pochhammer(Rational(1 - m - be) - g, al);
    } else if (a % 2 == 1 && b % 2 == 0) {
        int al = (a - 1) / 2, be = b / 2;
        c = pow2(a) * Rational(be) * pochhammer(Rational(1 - be), al) *
            pochhammer(Rational(1 - m - be) - g, al);
    } else if (a % 2 == 0 && b % 2 == 1) {
        int al = a / 2, be = (b - 1) / 2;
        c = pow2(a) * pochhammer(Rational(-be), al) * pochhammer(Rational(-m - be) - g, al);
    } else {
        int al = (a - 1) / 2, be = (b - 1) / 2;
        c = pow2(a) * pochhammer(Rational(-be), al) * (Rational(m + be) + g) *
            pochhammer(Rational(1 - m - be) - g, al);
    }
    int out = b - a;
    if (c == 0) return {Rational(0), 0};
    if (out < 0) throw std::logic_error("nonzero action cannot lower the power below zero");
    return {c, out};
}

Rational Spectral::sphere_moment_ratio(const Idx4& e) const {
    int total = 0;
    for (int i = 0; i < 4; ++i) {
        int k = e[static_cast<size_t>(i)];
        if (k < 0) throw std::domain_error("moment of a negative power");
        if (k % 2 != 0) return 0;
        total += k / 2;
    }
    Rational r = 1;
    for (int i = 0; i < 4; ++i) r *= pochhammer(gamma(i + 1), e[static_cast<size_t>(i)] / 2);
    return r / pochhammer(gamma_sum(4), total);
}

Rational Spectral::inner_product_ratio(const NumLaurent& f, const NumLaurent& g) const {
    Rational tot = 0;
    for (const auto& [ef, cf] : f.terms())
        for (const auto& [eg, cg] : g.terms()) {
            Idx4 e{ef[0] + eg[0], ef[1] + eg[1], ef[2] + eg[2], ef[3] + eg[3]};
            Rational m = sphere_moment_ratio(e);
            if (m != 0) tot += cf * cg * m;
        }
    return tot;
}

std::vector<std::vector<Rational>> Spectral::gram(int m_max) const {
    std::vector<NumLaurent> all;
    for (int m = 0; m <= m_max; ++m)
        for (auto& b : kernel_basis(m)) all.push_back(std::move(b.psi));
    size_t n = all.size();
    std::vector<std::vector<Rational>> g(n, std::vector<Rational>(n, Rational(0)));
    for (size_t i = 0; i < n; ++i)
        for (size_t k = i; k < n; ++k) {
            Rational v = inner_product_ratio(all[i], all[k]);
            g[i][k] = v;
            g[k][i] = v;
        }
    return g;
}

double Spectral::weight_mass() const {
    double acc = 0;
    for (int i = 1; i <= 4; ++i) acc += std::lgamma(to_double(gamma(i)));
    acc -= std::lgamma(to_double(gamma_sum(4)));
    return 2.0 * std::exp(acc);
}

double Spectral::eta_sq(int n, int inner_degree, int j) const {
    int h = j / 2;
    double gn = to_double(gamma(n));
    double lo = inner_degree + to_double(gamma_sum(n - 1));   // inner weight offset
    double hi = inner_degree + to_double(gamma_sum(n));
    double p = to_double(pochhammer(gamma(n), h));
    double v = p * p *
               std::exp(std::lgamma(h + hi) - std::lgamma(h + 1.0) - std::lgamma(h + gn) -
                        std::lgamma(h + lo));
    if (j % 2 == 1) v *= (h + gn) / (h + lo);
    return v;
}

double Spectral::normalization_target(const std::array<int, 3>& j) const {
    double prod = eta_sq(2, 0, j[0]) * eta_sq(3, j[0], j[1]) * eta_sq(4, j[0] + j[1], j[2]);
    return 2.0 / prod;
}

double Spectral::normalization_rel_err(const std::array<int, 3>& j) const {
    NumLaurent psi = NumLaurent::monomial({j[0], 0, 0, 0}, 1);
    psi = ck_extend(psi, 2);
    for (int t = 0; t < j[1]; ++t) psi = act(op_raise(2), psi);
    psi = ck_extend(psi, 3);
    for (int t = 0; t < j[2]; ++t) psi = act(op_raise(3), psi);
    psi = ck_extend(psi, 4);
    double exact = to_double(inner_product_ratio(psi, psi)) * weight_mass();
    double target = normalization_target(j);
    return std::abs(exact - target) / exact;
}

} // namespace osps3
