#pragma once

#include <gmpxx.h>

#include <string>

#include "mcf/errors.hpp"

namespace mcf {

// Exact arithmetic everywhere: arbitrary-precision integers and rationals
// backed by GMP. mpq_class values are kept canonical (lowest terms,
// positive denominator) by gmpxx itself.
using Integer = mpz_class;
using Rational = mpq_class;

inline Integer pow_int(const Integer& base, unsigned long e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

// base^e for e of either sign; base must be nonzero when e < 0.
inline Rational pow_rational(const Rational& base, long e) {
    if (e == 0) return Rational(1);
    if (base == 0 && e < 0) throw InvalidInput("0 cannot be raised to a negative power");
    Rational r;
    unsigned long a = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    mpz_pow_ui(r.get_num_mpz_t(), base.get_num().get_mpz_t(), a);
    mpz_pow_ui(r.get_den_mpz_t(), base.get_den().get_mpz_t(), a);
    if (e < 0) {
        if (r == 0) throw InvalidInput("0 cannot be inverted");
        r = 1 / r;
    }
    r.canonicalize();
    return r;
}

// Accepts "a", "a/b", optional leading +/- on the numerator, arbitrary size.
inline Rational parse_rational(const std::string& text) {
    std::string s;
    s.reserve(text.size());
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (!s.empty() && s[0] == '+') s.erase(0, 1);
    if (s.empty()) throw InvalidInput("empty rational literal");
    auto digits_only = [](const std::string& t, size_t from, size_t to) {
        if (from >= to) return false;
        for (size_t i = from; i < to; ++i)
            if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
        return true;
    };
    size_t slash = s.find('/');
    size_t num_begin = (s[0] == '-') ? 1 : 0;
    size_t num_end = (slash == std::string::npos) ? s.size() : slash;
    bool ok = digits_only(s, num_begin, num_end);
    if (ok && slash != std::string::npos) ok = digits_only(s, slash + 1, s.size());
    if (!ok) throw InvalidInput("malformed rational literal: \"" + text + "\"");
    Rational r;
    if (mpq_set_str(r.get_mpq_t(), s.c_str(), 10) != 0)
        throw InvalidInput("malformed rational literal: \"" + text + "\"");
    if (r.get_den() == 0) throw InvalidInput("zero denominator in \"" + text + "\"");
    r.canonicalize();
    return r;
}

inline std::string rational_string(const Rational& r) { return r.get_str(); }

inline std::string integer_string(const Integer& z) { return z.get_str(); }

}  // namespace mcf
