#include "osps3/op_parse.hpp"

#include "osps3/realizations.hpp"

#include <cctype>

namespace osps3 {

namespace {

struct Parser {
    const std::string& src;
    size_t pos = 0;
    Realizations R;

    explicit Parser(const std::string& s) : src(s) {}

    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument(what + " at position " + std::to_string(pos));
    }

    void skip() {
        while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos]))) ++pos;
    }

    char peek() {
        skip();
        return pos < src.size() ? src[pos] : '\0';
    }

    bool eat(char c) {
        if (peek() != c) return false;
        ++pos;
        return true;
    }

    void expect(char c) {
        if (!eat(c)) fail(std::string("expected '") + c + "'");
    }

    std::string ident() {
        skip();
        size_t start = pos;
        while (pos < src.size() &&
               (std::isalnum(static_cast<unsigned char>(src[pos])) || src[pos] == '_'))
            ++pos;
        if (start == pos) fail("expected a name");
        return src.substr(start, pos - start);
    }

    Integer number() {
        skip();
        size_t start = pos;
        while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) ++pos;
        if (start == pos) fail("expected a number");
        return Integer(src.substr(start, pos - start));
    }

    int coordinate() {
        Integer n = number();
        if (n < 1 || n > 4) fail("coordinate index must be 1..4");
        return static_cast<int>(n);
    }

    Subset subset_arg() {
        skip();
        size_t start = pos;
        while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) ++pos;
        if (start == pos) fail("expected subset digits");
        std::string digits = src.substr(start, pos - start);
        if (digits == "0") return Subset::empty_set();
        return Subset::parse(digits);
    }

    std::pair<int, int> pair_arg() {
        Subset A = subset_arg();
        if (eat(',')) A = A | Subset::of({coordinate()});
        auto mem = A.members0();
        if (mem.size() != 2) fail("expected exactly two distinct coordinates");
        return {mem[0] + 1, mem[1] + 1};
    }

    OpPtr expr() {
        OpPtr acc = term();
        for (;;) {
            if (eat('+'))
                acc = acc + term();
            else if (eat('-'))
                acc = acc - term();
            else
                return acc;
        }
    }

    OpPtr term() {
        OpPtr acc = factor();
        while (eat('*')) acc = acc * factor();
        return acc;
    }

    OpPtr factor() {
        if (eat('-')) return -factor();
        return power();
    }

    OpPtr power() {
        OpPtr base = atom();
        if (!eat('^')) return base;
        Integer n = number();
        if (n < 0 || n > 64) fail("exponent out of range");
        if (n == 0) return op_scalar(Rational(1));
        OpPtr acc = base;
        for (Integer k = 1; k < n; ++k) acc = acc * base;
        return acc;
    }

    OpPtr atom() {
        char c = peek();
        if (c == '(') {
            ++pos;
            OpPtr inner = expr();
            expect(')');
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Integer num = number();
            if (eat('/')) {
                Integer den = number();
                if (den == 0) fail("zero denominator");
                return op_scalar(Rational(num, den));
            }
            return op_scalar(Rational(num));
        }
        return named();
    }

    OpPtr named() {
        std::string name = ident();

        // single-character family followed by a coordinate digit: s1, d3, R2, mu4
        if (name.size() == 2 && (name[0] == 's' || name[0] == 'd' || name[0] == 'R') &&
            name[1] >= '1' && name[1] <= '4') {
            int i = name[1] - '1';
            if (name[0] == 's') return op_var(i);
            if (name[0] == 'd') return op_deriv(i);
            return op_refl(i);
        }
        if (name.size() == 3 && name.compare(0, 2, "mu") == 0 && name[2] >= '1' && name[2] <= '4')
            return op_scalar(MuPoly::variable(name[2] - '1'));

        if (name == "H") return R.H();
        if (name == "Hcas") return R.H_from_scasimir();
        if (name == "Htilde") return R.H_from_scasimir(Gauge::tilde);

        expect('(');
        OpPtr out;
        if (name == "inv") {
            if (peek() == 's') ++pos;   // accept both inv(2) and inv(s2)
            out = op_inv(coordinate() - 1);
        } else if (name == "com" || name == "acom") {
            OpPtr a = expr();
            expect(',');
            OpPtr b = expr();
            out = name == "com" ? commutator(a, b) : anticommutator(a, b);
        } else if (name == "L" || name == "ang") {
            auto [j, k] = pair_arg();
            out = name == "L" ? R.L(j, k) : R.angular(j, k);
        } else if (name == "M") {
            out = R.M(subset_arg());
        } else if (name == "D" || name == "Dt") {
            out = R.D(subset_arg(), name == "D" ? Gauge::plain : Gauge::tilde);
        } else if (name == "x") {
            out = R.x(subset_arg());
        } else if (name == "xsq") {
            out = R.Xsq(subset_arg());
        } else if (name == "E" || name == "Et") {
            out = R.E(subset_arg(), name == "E" ? Gauge::plain : Gauge::tilde);
        } else if (name == "S" || name == "St") {
            out = R.S(subset_arg(), name == "S" ? Gauge::plain : Gauge::tilde);
        } else if (name == "Q" || name == "Qt") {
            out = R.Q(subset_arg(), name == "Q" ? Gauge::plain : Gauge::tilde);
        } else {
            fail("unknown name '" + name + "'");
        }
        expect(')');
        return out;
    }
};

} // namespace

OpPtr parse_operator(const std::string& text) {
    Parser p(text);
    OpPtr out = p.expr();
    p.skip();
    if (p.pos != text.size()) p.fail("trailing input");
    return out;
}

} // namespace osps3
