#pragma once

#include <array>
#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "svf/monomial.hpp"
#include "svf/rational.hpp"

namespace svf {

// Sparse multivariate polynomial over Q in x1..x4. Terms are kept in graded-lex
// descending order, so begin() is the leading term. Invariant: no zero
// coefficients are stored; the zero polynomial has an empty term map (its
// degree is reported as an empty optional, never as an integer).
class Poly {
public:
    using TermMap = std::map<Monomial, Rational, GrlexDescending>;

    Poly() = default;
    Poly(const Rational& constant);  // NOLINT: implicit by design
    Poly(long constant);             // NOLINT
    Poly(const Monomial& m, const Rational& coeff);

    static Poly variable(int var);  // var in 1..4

    bool is_zero() const { return terms_.empty(); }
    std::optional<int> degree() const;
    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    const Monomial& leading_monomial() const;
    const Rational& leading_coefficient() const;
    Rational coefficient(const Monomial& m) const;

    // Accumulates c * m, dropping the entry if the sum cancels.
    void add_term(const Monomial& m, const Rational& c);

    Poly operator-() const;
    Poly& operator+=(const Poly& rhs);
    Poly& operator-=(const Poly& rhs);
    Poly& operator*=(const Rational& c);
    friend Poly operator+(Poly lhs, const Poly& rhs) { return lhs += rhs; }
    friend Poly operator-(Poly lhs, const Poly& rhs) { return lhs -= rhs; }
    friend Poly operator*(const Poly& lhs, const Poly& rhs);
    friend Poly operator*(Poly lhs, const Rational& c) { return lhs *= c; }
    friend Poly operator*(const Rational& c, Poly rhs) { return rhs *= c; }

    Poly pow(unsigned exp) const;
    Poly derivative(int var) const;
    Poly antiderivative(int var) const;  // zero constant of integration
    Poly homogeneous_component(int deg) const;
    bool is_homogeneous() const;  // true for the zero polynomial

    Poly substitute(int var, const Rational& value) const;

    Rational eval(const std::array<Rational, kNumVars>& x) const;
    // Summation follows the graded-lex descending term order, so repeated
    // calls are bit-for-bit reproducible.
    double eval(const std::array<double, kNumVars>& x) const;

    std::string to_string() const;

    bool operator==(const Poly&) const = default;

private:
    TermMap terms_;
};

// Division with remainder by a single divisor under graded-lex: returns (q, r)
// with f = q*g + r and no monomial of r divisible by the leading monomial of
// g. Remainder zero is therefore an exact divisibility test. Throws on g = 0.
std::pair<Poly, Poly> divide(const Poly& f, const Poly& g);

inline bool divides(const Poly& g, const Poly& f) { return divide(f, g).second.is_zero(); }

// Reports the character offset of the failure.
struct PolyParseError : std::invalid_argument {
    PolyParseError(const std::string& what, std::size_t position);
    std::size_t position;
};

Poly parse_poly(const std::string& text);

std::ostream& operator<<(std::ostream& os, const Poly& p);

}  // namespace svf
