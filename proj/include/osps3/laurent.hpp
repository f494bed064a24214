#pragma once

#include "osps3/mu_poly.hpp"

#include <cmath>
#include <ostream>
#include <sstream>

namespace osps3 {

// Sparse Laurent polynomial in s_1..s_4 with coefficients in C, where C is
// Rational or MuPoly. Exponents may be negative; map keys are kept in
// lexicographic order which doubles as the canonical serialization order.
template <class C>
class Laurent {
public:
    using Terms = std::map<Idx4, C>;

    Laurent() = default;
    explicit Laurent(const C& c) {
        if (!osps3::is_zero(c)) terms_[{0, 0, 0, 0}] = c;
    }

    static Laurent monomial(const Idx4& e, const C& c) {
        Laurent p;
        if (!osps3::is_zero(c)) p.terms_[e] = c;
        return p;
    }
    static Laurent variable(int i) {
        Idx4 e{0, 0, 0, 0};
        e.at(static_cast<size_t>(i)) = 1;
        return monomial(e, ring_one<C>());
    }
    static Laurent one() { return Laurent(ring_one<C>()); }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Idx4& e, const C& c) {
        if (osps3::is_zero(c)) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, c);
        } else {
            it->second += c;
            if (osps3::is_zero(it->second)) terms_.erase(it);
        }
    }

    Laurent& operator+=(const Laurent& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    Laurent& operator-=(const Laurent& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
    friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
    friend Laurent operator-(const Laurent& a) {
        Laurent r;
        for (const auto& [e, c] : a.terms_) r.terms_.emplace(e, -c);
        return r;
    }

    friend Laurent operator*(const Laurent& a, const Laurent& b) {
        Laurent r;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                Idx4 e{ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2], ea[3] + eb[3]};
                r.add_term(e, ca * cb);
            }
        return r;
    }
    Laurent& operator*=(const Laurent& o) { return *this = *this * o; }

    Laurent scaled(const C& c) const {
        Laurent r;
        if (osps3::is_zero(c)) return r;
        for (const auto& [e, k] : terms_) {
            C v = k * c;
            if (!osps3::is_zero(v)) r.terms_.emplace(e, v);
        }
        return r;
    }

    // multiply by the monomial s^d
    Laurent shifted(const Idx4& d) const {
        Laurent r;
        for (const auto& [e, c] : terms_)
            r.terms_.emplace(Idx4{e[0] + d[0], e[1] + d[1], e[2] + d[2], e[3] + d[3]}, c);
        return r;
    }

    Laurent derivative(int i) const {
        size_t v = static_cast<size_t>(i);
        Laurent r;
        for (const auto& [e, c] : terms_) {
            if (e[v] == 0) continue;
            Idx4 e2 = e;
            e2[v] -= 1;
            r.add_term(e2, c * Rational(e[v]));
        }
        return r;
    }

    Laurent reflected(int i) const {
        size_t v = static_cast<size_t>(i);
        Laurent r;
        for (const auto& [e, c] : terms_)
            r.terms_.emplace(e, (e[v] % 2 == 0) ? c : -c);
        return r;
    }

    friend bool operator==(const Laurent& a, const Laurent& b) = default;

    int total_degree() const {              // max over terms of sum of exponents
        bool any = false;
        int d = 0;
        for (const auto& [e, c] : terms_) {
            int s = e[0] + e[1] + e[2] + e[3];
            d = any ? std::max(d, s) : s;
            any = true;
        }
        return d;
    }

    int min_exponent(int i) const {
        size_t v = static_cast<size_t>(i);
        int m = 0;
        for (const auto& [e, c] : terms_) m = std::min(m, e[v]);
        return m;
    }

    bool is_homogeneous(int degree) const {
        for (const auto& [e, c] : terms_)
            if (e[0] + e[1] + e[2] + e[3] != degree) return false;
        return true;
    }

    bool is_polynomial() const {
        for (const auto& [e, c] : terms_)
            if (e[0] < 0 || e[1] < 0 || e[2] < 0 || e[3] < 0) return false;
        return true;
    }

    // restriction s_i = 0; error if any term has a pole in s_i
    Laurent at_zero(int i) const {
        size_t v = static_cast<size_t>(i);
        Laurent r;
        for (const auto& [e, c] : terms_) {
            if (e[v] < 0) throw std::domain_error("pole at s=0");
            if (e[v] == 0) r.terms_.emplace(e, c);
        }
        return r;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            if (!first) os << " + ";
            os << "(" << coeff_str(c) << ")";
            for (int i = 0; i < 4; ++i) {
                int k = e[static_cast<size_t>(i)];
                if (k == 0) continue;
                os << "*s" << i + 1;
                if (k != 1) os << "^" << k;
            }
            first = false;
        }
        return os.str();
    }
    friend std::ostream& operator<<(std::ostream& os, const Laurent& p) {
        return os << p.str();
    }

private:
    Terms terms_;
};

using SymLaurent = Laurent<MuPoly>;   // coefficients polynomial in mu
using NumLaurent = Laurent<Rational>; // coefficients rational (fixed mu)

// Specialize coefficients at a rational mu vector. pre: mu_i >= 0.
inline NumLaurent evaluate_mu(const SymLaurent& p, const std::array<Rational, 4>& mu) {
    for (const auto& m : mu)
        if (m < 0) throw std::domain_error("mu must be nonnegative");
    NumLaurent r;
    for (const auto& [e, c] : p.terms()) r.add_term(e, c.evaluate(mu));
    return r;
}

inline SymLaurent to_symbolic(const NumLaurent& p) {
    SymLaurent r;
    for (const auto& [e, c] : p.terms()) r.add_term(e, MuPoly(c));
    return r;
}

// float evaluation (quadrature cross-checks)
inline double evaluate_point(const NumLaurent& p, const std::array<double, 4>& s) {
    double v = 0;
    for (const auto& [e, c] : p.terms()) {
        double t = to_double(c);
        for (int i = 0; i < 4; ++i) t *= std::pow(s[static_cast<size_t>(i)], e[static_cast<size_t>(i)]);
        v += t;
    }
    return v;
}

} // namespace osps3
