/**
 * @file expr.hpp
 * @brief Text grammar for operator and spinor expressions.
 *
 * Operator grammar:
 *   expr   := ['-'] term (('+'|'-') term)*
 *   term   := factor (('*'|'/') factor)*
 *   factor := atom ['^' int]
 *   atom   := ident | int | '(' expr ')' | func '(' args ')'
 * Identifiers: generators mu1 mu2 nu g1 g2 w d1 d2 nab, the scalar q, named
 * operators Ew Fw Kw Es Fs Ks Ed Fd Kd E F K Z1 Z2 dq2_1 dq2_2.
 * Functions: comm(A,B), tcomm(A,B,v), brace(A), qint(n), qbinom(n,m).
 * Division requires a scalar divisor; negative powers require an invertible
 * base. Spinor terms are products of x1/x2/y powers and scalar factors,
 * joined by '*' or juxtaposition.
 */
#pragma once

#include "qspinor/spinor.hpp"

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace qspinor {

struct ParseError : std::runtime_error {
    std::size_t position;
    std::string expected;
    ParseError(const std::string& message, std::size_t pos, std::string exp = "");
};

struct OperatorExpr {
    enum class Kind { integer, q_atom, generator, named, add, sub, mul, div, pow, neg, call };

    Kind kind = Kind::integer;
    std::size_t pos = 0;
    Int int_value;                   // integer
    Gen generator = Gen::mu1;        // generator
    std::string name;                // named, call
    int exponent = 0;                // pow
    std::vector<OperatorExpr> args;  // operands
};

OperatorExpr parse_operator_expr(const std::string& text);
AlgebraElement eval_operator(const OperatorExpr& expr);
AlgebraElement parse_operator(const std::string& text);

SpinorVector parse_spinor(const std::string& text);

RatQ parse_ratq(const std::string& text);

// "n" or "n/m" with optional leading '-'
Rat parse_rational(const std::string& text);

}  // namespace qspinor
