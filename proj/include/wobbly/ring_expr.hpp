#ifndef WOBBLY_RING_EXPR_HPP
#define WOBBLY_RING_EXPR_HPP

#include "wobbly/cohom_ring.hpp"

#include <string>
#include <vector>

namespace wobbly {

// Parse tree for ring expressions over the generators xi, xi', eta, sigma
// with integer literals, + - * and non-negative integer exponents.
// '^' binds tighter than '*', which binds tighter than '+' and '-'.
struct RingExpr {
    enum class Kind { literal, symbol, add, sub, mul, power, negate };

    Kind kind = Kind::literal;
    Int literal = 0;                 // Kind::literal
    Generator symbol = Generator::one; // Kind::symbol
    unsigned exponent = 0;           // Kind::power
    std::vector<RingExpr> children;
};

// throws parse_error with the byte offset of the offending token
RingExpr parse_ring_expr(const std::string& text);

RingElement eval(const RingExpr& expr, int n);

} // namespace wobbly

#endif
