#pragma once

#include <gmpxx.h>

#include <string>

namespace svf {

// Exact rational scalar. Always canonical: lowest terms, denominator > 0,
// zero stored as 0/1.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rational(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// Accepts "p" or "p/q" with optional leading sign; rejects zero denominators.
Rational parse_rational(const std::string& text);

std::string to_string(const Rational& q);

inline double to_double(const Rational& q) { return q.get_d(); }

Rational pow(const Rational& base, unsigned exp);

}  // namespace svf
