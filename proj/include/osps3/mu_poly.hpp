#pragma once

#include "osps3/rational.hpp"

#include <map>
#include <ostream>
#include <sstream>

namespace osps3 {

// Polynomial in the four deformation parameters mu_1..mu_4 over Q.
// Sparse map exponent-vector -> coefficient; zero coefficients are never
// stored, so equality of maps is equality of polynomials.
class MuPoly {
public:
    using Terms = std::map<Idx4, Rational>;

    MuPoly() = default;
    explicit MuPoly(const Rational& c) {
        if (c != 0) terms_[{0, 0, 0, 0}] = c;
    }
    MuPoly(int c) : MuPoly(Rational(c)) {}

    static MuPoly variable(int i) {           // mu_i, i in 0..3
        MuPoly p;
        Idx4 e{0, 0, 0, 0};
        e.at(static_cast<size_t>(i)) = 1;
        p.terms_[e] = 1;
        return p;
    }
    static MuPoly one() { return MuPoly(1); }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() ||
               (terms_.size() == 1 && terms_.begin()->first == Idx4{0, 0, 0, 0});
    }
    Rational constant_value() const {
        if (terms_.empty()) return 0;
        if (!is_constant()) throw std::logic_error("MuPoly is not constant");
        return terms_.begin()->second;
    }

    void add_term(const Idx4& e, const Rational& c) {
        if (c == 0) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    MuPoly& operator+=(const MuPoly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    MuPoly& operator-=(const MuPoly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    friend MuPoly operator+(MuPoly a, const MuPoly& b) { return a += b; }
    friend MuPoly operator-(MuPoly a, const MuPoly& b) { return a -= b; }
    friend MuPoly operator-(const MuPoly& a) {
        MuPoly r;
        for (const auto& [e, c] : a.terms_) r.terms_.emplace(e, -c);
        return r;
    }

    friend MuPoly operator*(const MuPoly& a, const MuPoly& b) {
        MuPoly r;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                Idx4 e{ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2], ea[3] + eb[3]};
                r.add_term(e, ca * cb);
            }
        return r;
    }
    MuPoly& operator*=(const MuPoly& o) { return *this = *this * o; }

    friend MuPoly operator*(const MuPoly& a, const Rational& c) {
        MuPoly r;
        if (c == 0) return r;
        for (const auto& [e, k] : a.terms_) r.terms_.emplace(e, k * c);
        return r;
    }
    friend MuPoly operator*(const Rational& c, const MuPoly& a) { return a * c; }

    friend bool operator==(const MuPoly& a, const MuPoly& b) = default;

    // pre: mu_i >= 0 (standing assumption of the model)
    Rational evaluate(const std::array<Rational, 4>& mu) const {
        for (const auto& m : mu)
            if (m < 0) throw std::domain_error("mu must be nonnegative");
        Rational v = 0;
        for (const auto& [e, c] : terms_) {
            Rational t = c;
            for (int i = 0; i < 4; ++i)
                for (int k = 0; k < e[static_cast<size_t>(i)]; ++k)
                    t *= mu[static_cast<size_t>(i)];
            v += t;
        }
        return v;
    }

    int total_degree() const {
        int d = 0;
        for (const auto& [e, c] : terms_) d = std::max(d, e[0] + e[1] + e[2] + e[3]);
        return d;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            if (!first) os << (c > 0 ? " + " : " - ");
            else if (c < 0) os << "-";
            Rational a = c < 0 ? Rational(-c) : c;
            bool unit = (a == 1);
            bool mono = e != Idx4{0, 0, 0, 0};
            if (!unit || !mono) os << to_string(a);
            bool star = !unit || !mono ? mono : false;
            if (star) os << "*";
            bool inner = false;
            for (int i = 0; i < 4; ++i) {
                int k = e[static_cast<size_t>(i)];
                if (k == 0) continue;
                if (inner) os << "*";
                os << "mu" << i + 1;
                if (k > 1) os << "^" << k;
                inner = true;
            }
            first = false;
        }
        return os.str();
    }

    friend std::ostream& operator<<(std::ostream& os, const MuPoly& p) {
        return os << p.str();
    }

private:
    Terms terms_;
};

inline bool is_zero(const MuPoly& p) { return p.is_zero(); }
inline bool is_zero(const Rational& q) { return q == 0; }

template <class C> C ring_one();
template <> inline Rational ring_one<Rational>() { return Rational(1); }
template <> inline MuPoly ring_one<MuPoly>() { return MuPoly::one(); }

inline std::string coeff_str(const Rational& q) { return to_string(q); }
inline std::string coeff_str(const MuPoly& p) { return p.str(); }

} // namespace osps3
