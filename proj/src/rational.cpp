#include "svf/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace svf {

Rational parse_rational(const std::string& text) {
    std::size_t i = 0;
    auto fail = [&](const std::string& msg) { throw std::invalid_argument("bad rational '" + text + "': " + msg); };
    if (text.empty()) fail("empty");
    if (text[i] == '+' || text[i] == '-') ++i;
    std::size_t digits = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i, ++digits;
    if (digits == 0) fail("expected digits");
    if (i < text.size()) {
        if (text[i] != '/') fail("unexpected character");
        ++i;
        digits = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i, ++digits;
        if (digits == 0 || i != text.size()) fail("expected denominator digits");
    }
    Rational q;
    if (mpq_set_str(q.get_mpq_t(), text.c_str(), 10) != 0) fail("unparsable");
    if (mpz_sgn(mpq_denref(q.get_mpq_t())) == 0) fail("zero denominator");
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

Rational pow(const Rational& base, unsigned exp) {
    Rational r;
    mpz_pow_ui(mpq_numref(r.get_mpq_t()), mpq_numref(base.get_mpq_t()), exp);
    mpz_pow_ui(mpq_denref(r.get_mpq_t()), mpq_denref(base.get_mpq_t()), exp);
    return r;  // base canonical => base^e canonical
}

}  // namespace svf
