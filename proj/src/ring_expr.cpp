#include "wobbly/ring_expr.hpp"

#include <cctype>

namespace wobbly {

namespace {

struct ExprParser {
    const std::string& text;
    size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace((unsigned char)text[pos])) ++pos;
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    bool consume(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    RingExpr parse_expr() {
        RingExpr lhs;
        if (consume('-')) {
            lhs.kind = RingExpr::Kind::negate;
            lhs.children.push_back(parse_term());
        } else {
            lhs = parse_term();
        }
        while (true) {
            if (consume('+')) {
                RingExpr node;
                node.kind = RingExpr::Kind::add;
                node.children.push_back(std::move(lhs));
                node.children.push_back(parse_term());
                lhs = std::move(node);
            } else if (consume('-')) {
                RingExpr node;
                node.kind = RingExpr::Kind::sub;
                node.children.push_back(std::move(lhs));
                node.children.push_back(parse_term());
                lhs = std::move(node);
            } else {
                return lhs;
            }
        }
    }

    RingExpr parse_term() {
        RingExpr lhs = parse_factor();
        while (consume('*')) {
            RingExpr node;
            node.kind = RingExpr::Kind::mul;
            node.children.push_back(std::move(lhs));
            node.children.push_back(parse_factor());
            lhs = std::move(node);
        }
        return lhs;
    }

    RingExpr parse_factor() {
        RingExpr base = parse_primary();
        if (!consume('^')) return base;
        skip_ws();
        size_t at = pos;
        if (pos >= text.size() || !std::isdigit((unsigned char)text[pos]))
            throw parse_error("malformed exponent: expected a non-negative integer", at);
        unsigned long long e = 0;
        while (pos < text.size() && std::isdigit((unsigned char)text[pos])) {
            e = e * 10 + (unsigned long long)(text[pos] - '0');
            if (e > 1'000'000) throw parse_error("exponent too large", at);
            ++pos;
        }
        RingExpr node;
        node.kind = RingExpr::Kind::power;
        node.exponent = unsigned(e);
        node.children.push_back(std::move(base));
        return node;
    }

    RingExpr parse_primary() {
        skip_ws();
        size_t at = pos;
        if (pos >= text.size())
            throw parse_error("expected a value", at);
        char c = text[pos];
        if (c == '(') {
            ++pos;
            RingExpr inner = parse_expr();
            if (!consume(')'))
                throw parse_error("unbalanced parentheses: expected ')'", pos);
            return inner;
        }
        if (std::isdigit((unsigned char)c)) {
            std::string digits;
            while (pos < text.size() && std::isdigit((unsigned char)text[pos]))
                digits += text[pos++];
            RingExpr node;
            node.kind = RingExpr::Kind::literal;
            node.literal = Int(digits);
            return node;
        }
        if (std::isalpha((unsigned char)c)) {
            std::string word;
            while (pos < text.size() && std::isalpha((unsigned char)text[pos]))
                word += text[pos++];
            if (pos < text.size() && text[pos] == '\'') {
                word += text[pos++];
            }
            RingExpr node;
            node.kind = RingExpr::Kind::symbol;
            if (word == "xi") node.symbol = Generator::xi;
            else if (word == "xi'") node.symbol = Generator::xi_prime;
            else if (word == "eta") node.symbol = Generator::eta;
            else if (word == "sigma") node.symbol = Generator::sigma;
            else throw parse_error("unknown symbol '" + word + "'", at);
            return node;
        }
        throw parse_error(std::string("unexpected character '") + c + "'", at);
    }
};

} // namespace

RingExpr parse_ring_expr(const std::string& text) {
    ExprParser parser{text};
    RingExpr expr = parser.parse_expr();
    parser.skip_ws();
    if (parser.pos < text.size())
        throw parse_error("unexpected trailing input", parser.pos);
    return expr;
}

RingElement eval(const RingExpr& expr, int n) {
    switch (expr.kind) {
    case RingExpr::Kind::literal:
        return expr.literal * make_generator(n, Generator::one);
    case RingExpr::Kind::symbol:
        return make_generator(n, expr.symbol);
    case RingExpr::Kind::add:
        return eval(expr.children[0], n) + eval(expr.children[1], n);
    case RingExpr::Kind::sub:
        return eval(expr.children[0], n) - eval(expr.children[1], n);
    case RingExpr::Kind::mul:
        return eval(expr.children[0], n) * eval(expr.children[1], n);
    case RingExpr::Kind::power:
        return eval(expr.children[0], n).pow(expr.exponent);
    case RingExpr::Kind::negate:
        return -eval(expr.children[0], n);
    }
    throw domain_error("unreachable expression kind");
}

} // namespace wobbly
