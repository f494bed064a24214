#pragma once

#include "osps3/op_expr.hpp"

#include <string>

namespace osps3 {

// Parse a textual operator expression into an expression tree.
//
//   expr    := term (('+' | '-') term)*
//   term    := factor ('*' factor)*
//   factor  := '-' factor | power
//   power   := atom ('^' uint)?             repeated composition
//   atom    := rational | primitive | builtin | '(' expr ')'
//
// primitives: s1..s4 (coordinate multiplication), d1..d4 (partial derivative),
//             R1..R4 (coordinate reflection), mu1..mu4 (parameter scalars),
//             integer or p/q rational scalars.
// builtins:   inv(i), inv(si)  s_i^{-1}
//             com(a,b)         a*b - b*a
//             acom(a,b)        a*b + b*a
//             D(A)   Dt(A)     interleaved derivative over subset A, plain/shifted gauge
//             x(A)             interleaved coordinate over subset A
//             xsq(A)           squared radius over A
//             E(A)   Et(A)     Euler-type element over A
//             S(A)   St(A)     half-commutator element over A
//             Q(A)   Qt(A)     reflection-dressed invariant over A
//             L(jk), L(j,k)    two-index invariant
//             ang(jk)          plain angular generator s_j d_k - s_k d_j
//             M(A)             three-index invariant, |A| = 3
//             H                the Hamiltonian
//             Hcas, Htilde     S^2 - S - 3/4 in the plain / shifted gauge
// subsets are digit strings over 1..4 (e.g. 134); 0 denotes the empty subset.
//
// Throws std::invalid_argument with a position marker on malformed input.
OpPtr parse_operator(const std::string& text);

} // namespace osps3
