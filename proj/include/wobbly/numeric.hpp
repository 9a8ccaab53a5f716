#ifndef WOBBLY_NUMERIC_HPP
#define WOBBLY_NUMERIC_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace wobbly {

// All coefficients are exact; no floating point anywhere in the library.
using Int = boost::multiprecision::cpp_int;
using Frac = boost::multiprecision::cpp_rational;

// Raised when an operation is called outside its stated domain
// (mismatched ambient spaces, out-of-range parameters, ...).
struct domain_error : std::runtime_error {
    explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

// Raised by the text parsers; offset is the byte position of the offending token.
struct parse_error : std::runtime_error {
    std::size_t offset;
    parse_error(const std::string& what, std::size_t at)
        : std::runtime_error(what + " (at offset " + std::to_string(at) + ")"),
          offset(at) {}
};

inline Int factorial(unsigned n) {
    Int r = 1;
    for (unsigned k = 2; k <= n; ++k) r *= k;
    return r;
}

inline Int binomial(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    Int r = 1;
    for (long long i = 0; i < k; ++i) {
        r *= (n - i);
        r /= (i + 1);
    }
    return r;
}

// floor of an exact rational
inline Int rational_floor(const Frac& x) {
    Int num = numerator(x);
    Int den = denominator(x); // > 0 in canonical form
    Int q = num / den;
    if (num % den != 0 && num < 0) --q;
    return q;
}

// representative of x in [0, 1)
inline Frac mod_one(const Frac& x) {
    return x - Frac(rational_floor(x));
}

} // namespace wobbly

#endif
