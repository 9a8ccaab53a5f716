#include "wobbly/descriptor_io.hpp"

#include <cctype>
#include <map>
#include <numeric>
#include <sstream>

namespace wobbly {

namespace {

struct Cursor {
    const std::string& text;
    size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace((unsigned char)text[pos])) ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= text.size();
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
    void expect(char c) {
        if (!consume(c))
            throw parse_error(std::string("expected '") + c + "'", pos);
    }
    std::string word() {
        skip_ws();
        size_t start = pos;
        while (pos < text.size() && std::isalpha((unsigned char)text[pos])) ++pos;
        if (start == pos) throw parse_error("expected a keyword", pos);
        return text.substr(start, pos - start);
    }
    long long integer() {
        skip_ws();
        size_t start = pos;
        if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
        size_t digits = pos;
        while (pos < text.size() && std::isdigit((unsigned char)text[pos])) ++pos;
        if (digits == pos) throw parse_error("expected an integer", start);
        try {
            return std::stoll(text.substr(start, pos - start));
        } catch (const std::out_of_range&) {
            throw parse_error("integer out of range", start);
        }
    }
    Frac fraction() {
        long long num = integer();
        if (consume('/')) {
            size_t at = pos;
            long long den = integer();
            if (den == 0) throw parse_error("zero denominator", at);
            return Frac(num, den);
        }
        return Frac(num);
    }
    PicOffset offset() {
        Frac x = fraction();
        expect(',');
        Frac y = fraction();
        return PicOffset(x, y);
    }
    void expect_end() {
        if (!done()) throw parse_error("unexpected trailing input", pos);
    }
};

Indecomposable parse_ind_body(Cursor& cur) {
    long long r = cur.integer();
    long long d = cur.integer();
    cur.expect('@');
    PicOffset off = cur.offset();
    if (r < 1) throw parse_error("rank must be >= 1", cur.pos);
    return Indecomposable(r, d, off);
}

// one '|'-separated part: an "ind" descriptor or a sum of "st" terms
EllipticBundle parse_part(Cursor& cur) {
    cur.skip_ws();
    size_t mark = cur.pos;
    if (std::isalpha((unsigned char)cur.peek())) {
        std::string kw = cur.word();
        if (kw == "ind") return EllipticBundle(parse_ind_body(cur));
        cur.pos = mark; // a bare "st" term; reparse below
    }
    std::vector<Indecomposable> summands;
    while (true) {
        cur.skip_ws();
        size_t term_at = cur.pos;
        long long mult = 1;
        if (std::isdigit((unsigned char)cur.peek())) {
            mult = cur.integer();
            cur.expect('*');
        }
        if (mult < 1) throw parse_error("multiplicity must be >= 1", term_at);
        std::string kw = cur.word();
        if (kw != "st")
            throw parse_error("expected 'st' (or 'ind' for an indecomposable part)", term_at);
        long long r = cur.integer();
        long long d = cur.integer();
        cur.expect('@');
        PicOffset off = cur.offset();
        if (r < 1) throw parse_error("rank must be >= 1", term_at);
        if (std::gcd(r < 0 ? -r : r, d < 0 ? -d : d) != 1)
            throw parse_error("'st' summands need gcd(rank, degree) = 1", term_at);
        for (long long i = 0; i < mult; ++i) summands.emplace_back(r, d, off);
        if (!cur.consume('+')) break;
    }
    return EllipticBundle(Polystable(std::move(summands)));
}

} // namespace

GZeroBundle parse_gzero_bundle(const std::string& text) {
    Cursor cur{text};
    std::vector<long long> degrees;
    while (true) {
        cur.skip_ws();
        size_t at = cur.pos;
        std::string kw = cur.word();
        if (kw != "O") throw parse_error("expected 'O(d)'", at);
        cur.expect('(');
        degrees.push_back(cur.integer());
        cur.expect(')');
        if (!cur.consume('+')) break;
    }
    cur.expect_end();
    return GZeroBundle(std::move(degrees));
}

EllipticBundle parse_elliptic_bundle(const std::string& text) {
    Cursor cur{text};
    std::vector<EllipticBundle> parts;
    parts.push_back(parse_part(cur));
    while (cur.consume('|')) parts.push_back(parse_part(cur));
    cur.expect_end();
    if (parts.size() == 1) return parts.front();
    return EllipticBundle(DirectSum{std::move(parts)});
}

PicPoint parse_elliptic_twist(const std::string& text) {
    Cursor cur{text};
    size_t at = cur.pos;
    if (cur.word() != "L") throw parse_error("expected 'L deg @ x,y'", at);
    long long deg = cur.integer();
    cur.expect('@');
    PicOffset off = cur.offset();
    cur.expect_end();
    return PicPoint{deg, off};
}

long long parse_gzero_twist(const std::string& text) {
    Cursor cur{text};
    long long t = cur.integer();
    cur.expect_end();
    return t;
}

std::string print_fraction(const Frac& f) {
    std::ostringstream out;
    out << numerator(f).str();
    if (denominator(f) != 1) out << "/" << denominator(f).str();
    return out.str();
}

std::string print_offset(const PicOffset& o) {
    return print_fraction(o.x) + "," + print_fraction(o.y);
}

std::string print_gzero_bundle(const GZeroBundle& e) {
    std::ostringstream out;
    for (size_t i = 0; i < e.degrees.size(); ++i) {
        if (i) out << "+";
        out << "O(" << e.degrees[i] << ")";
    }
    return out.str();
}

namespace {

std::string print_polystable(const Polystable& p) {
    // summands are sorted; group equal ones with a multiplicity prefix
    std::map<Indecomposable, long long> groups;
    for (const auto& s : p.summands) ++groups[s];
    std::ostringstream out;
    bool first = true;
    for (const auto& [s, mult] : groups) {
        if (!first) out << " + ";
        first = false;
        out << mult << "*st " << s.rank << " " << s.degree << " @ "
            << print_offset(s.twist);
    }
    return out.str();
}

} // namespace

std::string print_elliptic_bundle(const EllipticBundle& e) {
    return std::visit(
        [](const auto& v) -> std::string {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, Indecomposable>) {
                std::ostringstream out;
                out << "ind " << v.rank << " " << v.degree << " @ "
                    << print_offset(v.twist);
                return out.str();
            } else if constexpr (std::is_same_v<T, Polystable>) {
                return print_polystable(v);
            } else {
                std::string out;
                for (size_t i = 0; i < v.parts.size(); ++i) {
                    if (i) out += " | ";
                    out += print_elliptic_bundle(v.parts[i]);
                }
                return out;
            }
        },
        e.value());
}

std::string print_elliptic_twist(const PicPoint& l) {
    std::ostringstream out;
    out << "L " << l.degree << " @ " << print_offset(l.offset);
    return out.str();
}

} // namespace wobbly
