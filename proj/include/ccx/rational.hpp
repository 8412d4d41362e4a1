#ifndef CCX_RATIONAL_HPP
#define CCX_RATIONAL_HPP

#include <gmpxx.h>

#include <cctype>
#include <stdexcept>
#include <string>

namespace ccx {

/// Exact rational scalar. GMP keeps the canonical form invariants
/// (denominator > 0, gcd-reduced, zero is 0/1) closed under arithmetic.
using Rational = mpq_class;

using BigInt = mpz_class;

inline const BigInt& numerator(const Rational& q) { return q.get_num(); }
inline const BigInt& denominator(const Rational& q) { return q.get_den(); }

inline Rational make_rational(long num, long den = 1) {
    if (den == 0) throw std::domain_error("rational: zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

/// Parses the text form: a decimal integer ("7", "-3") or "p/q" with q > 0
/// ("2/3", "-5/4"). Rejects q = 0, signs on q, and anything else.
inline Rational parse_rational(const std::string& text) {
    auto fail = [&]() -> Rational {
        throw std::invalid_argument("rational: malformed text \"" + text + "\"");
    };
    if (text.empty()) fail();
    std::size_t pos = 0;
    if (text[pos] == '-') ++pos;
    std::size_t num_begin = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == num_begin) fail();
    BigInt num(text.substr(0, pos));
    BigInt den(1);
    if (pos < text.size()) {
        if (text[pos] != '/') fail();
        ++pos;
        std::size_t den_begin = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == den_begin || pos != text.size()) fail();
        den = BigInt(text.substr(den_begin));
        if (den == 0) throw std::invalid_argument("rational: zero denominator in \"" + text + "\"");
    }
    Rational q(num, den);
    q.canonicalize();
    return q;
}

/// Canonical text form, inverse of parse_rational. Integers print without "/1".
inline std::string to_string(const Rational& q) {
    if (denominator(q) == 1) return numerator(q).get_str();
    return numerator(q).get_str() + "/" + denominator(q).get_str();
}

inline int sign(const Rational& q) { return sgn(q); }

} // namespace ccx

#endif
