#include "svf/poly.hpp"

#include <cctype>
#include <ostream>
#include <sstream>

namespace svf {

std::string Monomial::to_string() const {
    std::string s;
    for (int i = 0; i < kNumVars; ++i) {
        if (e[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += "x" + std::to_string(i + 1);
        if (e[i] > 1) s += "^" + std::to_string(e[i]);
    }
    return s;
}

Poly::Poly(const Rational& constant) {
    if (constant != 0) terms_.emplace(Monomial{}, constant);
}

Poly::Poly(long constant) : Poly(Rational(constant)) {}

Poly::Poly(const Monomial& m, const Rational& coeff) {
    if (coeff != 0) terms_.emplace(m, coeff);
}

Poly Poly::variable(int var) {
    if (var < 1 || var > kNumVars) throw std::invalid_argument("variable index out of range");
    return Poly(unit_monomial(var), 1);
}

std::optional<int> Poly::degree() const {
    if (terms_.empty()) return std::nullopt;
    return static_cast<int>(terms_.begin()->first.total_degree());
}

const Monomial& Poly::leading_monomial() const {
    if (terms_.empty()) throw std::logic_error("leading_monomial of zero polynomial");
    return terms_.begin()->first;
}

const Rational& Poly::leading_coefficient() const {
    if (terms_.empty()) throw std::logic_error("leading_coefficient of zero polynomial");
    return terms_.begin()->second;
}

Rational Poly::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

void Poly::add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Poly Poly::operator-() const {
    Poly r(*this);
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

Poly& Poly::operator+=(const Poly& rhs) {
    for (const auto& [m, c] : rhs.terms_) add_term(m, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
    for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
    return *this;
}

Poly& Poly::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
    } else {
        for (auto& [m, coeff] : terms_) coeff *= c;
    }
    return *this;
}

Poly operator*(const Poly& lhs, const Poly& rhs) {
    Poly r;
    for (const auto& [ma, ca] : lhs.terms_)
        for (const auto& [mb, cb] : rhs.terms_) r.add_term(ma * mb, ca * cb);
    return r;
}

Poly Poly::pow(unsigned exp) const {
    Poly result(1);
    Poly base(*this);
    while (exp > 0) {
        if (exp & 1u) result = result * base;
        exp >>= 1u;
        if (exp > 0) base = base * base;
    }
    return result;
}

Poly Poly::derivative(int var) const {
    if (var < 1 || var > kNumVars) throw std::invalid_argument("variable index out of range");
    Poly r;
    for (const auto& [m, c] : terms_) {
        unsigned e = m.e[var - 1];
        if (e == 0) continue;
        Monomial dm = m;
        dm.e[var - 1] = e - 1;
        r.add_term(dm, c * Rational(static_cast<long>(e)));
    }
    return r;
}

Poly Poly::antiderivative(int var) const {
    if (var < 1 || var > kNumVars) throw std::invalid_argument("variable index out of range");
    Poly r;
    for (const auto& [m, c] : terms_) {
        Monomial im = m;
        im.e[var - 1] += 1;
        r.add_term(im, c / Rational(static_cast<long>(im.e[var - 1])));
    }
    return r;
}

Poly Poly::homogeneous_component(int deg) const {
    if (deg < 0) throw std::invalid_argument("degree must be non-negative");
    Poly r;
    for (const auto& [m, c] : terms_)
        if (static_cast<int>(m.total_degree()) == deg) r.add_term(m, c);
    return r;
}

bool Poly::is_homogeneous() const {
    if (terms_.empty()) return true;
    unsigned d = terms_.begin()->first.total_degree();
    for (const auto& [m, c] : terms_)
        if (m.total_degree() != d) return false;
    return true;
}

Poly Poly::substitute(int var, const Rational& value) const {
    if (var < 1 || var > kNumVars) throw std::invalid_argument("variable index out of range");
    Poly r;
    for (const auto& [m, c] : terms_) {
        Monomial sm = m;
        unsigned e = sm.e[var - 1];
        sm.e[var - 1] = 0;
        r.add_term(sm, c * svf::pow(value, e));
    }
    return r;
}

Rational Poly::eval(const std::array<Rational, kNumVars>& x) const {
    Rational sum(0);
    for (const auto& [m, c] : terms_) {
        Rational t = c;
        for (int i = 0; i < kNumVars; ++i)
            if (m.e[i] > 0) t *= svf::pow(x[i], m.e[i]);
        sum += t;
    }
    return sum;
}

double Poly::eval(const std::array<double, kNumVars>& x) const {
    double sum = 0.0;
    for (const auto& [m, c] : terms_) {
        double t = c.get_d();
        for (int i = 0; i < kNumVars; ++i)
            for (unsigned k = 0; k < m.e[i]; ++k) t *= x[i];
        sum += t;
    }
    return sum;
}

std::string Poly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        bool negative = c < 0;
        Rational mag = negative ? Rational(-c) : c;
        if (first) {
            if (negative) os << "-";
            first = false;
        } else {
            os << (negative ? " - " : " + ");
        }
        std::string ms = m.to_string();
        if (ms.empty()) {
            os << svf::to_string(mag);
        } else if (mag == 1) {
            os << ms;
        } else {
            os << svf::to_string(mag) << "*" << ms;
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.to_string(); }

std::pair<Poly, Poly> divide(const Poly& f, const Poly& g) {
    if (g.is_zero()) throw std::domain_error("division by zero polynomial");
    Poly quotient, remainder;
    Poly p(f);
    const Monomial& lm_g = g.leading_monomial();
    const Rational& lc_g = g.leading_coefficient();
    while (!p.is_zero()) {
        const Monomial& lm_p = p.leading_monomial();
        const Rational& lc_p = p.leading_coefficient();
        if (lm_g.divides(lm_p)) {
            Poly t(lm_p.divided_by(lm_g), lc_p / lc_g);
            quotient += t;
            p -= t * g;
        } else {
            remainder.add_term(lm_p, lc_p);
            p.add_term(lm_p, -lc_p);
        }
    }
    return {quotient, remainder};
}

PolyParseError::PolyParseError(const std::string& what, std::size_t pos)
    : std::invalid_argument(what + " at position " + std::to_string(pos)), position(pos) {}

namespace {

// Recursive-descent parser for
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := atom ('^' uint)?
//   atom   := rational | 'x1'..'x4' | '(' expr ')'
//   rational := uint ('/' uint)?
// Whitespace is insignificant.
class Parser {
public:
    explicit Parser(const std::string& text) : text_(text) {}

    Poly parse() {
        Poly p = expr();
        skip_ws();
        if (pos_ != text_.size()) throw PolyParseError("unexpected trailing input", pos_);
        return p;
    }

private:
    Poly expr() {
        skip_ws();
        bool negate = false;
        if (peek() == '+' || peek() == '-') {
            negate = (peek() == '-');
            ++pos_;
        }
        Poly acc = term();
        if (negate) acc = -acc;
        for (;;) {
            skip_ws();
            char c = peek();
            if (c == '+' || c == '-') {
                ++pos_;
                Poly t = term();
                if (c == '+') acc += t; else acc -= t;
            } else {
                return acc;
            }
        }
    }

    Poly term() {
        Poly acc = factor();
        for (;;) {
            skip_ws();
            if (peek() == '*') {
                ++pos_;
                acc = acc * factor();
            } else {
                return acc;
            }
        }
    }

    Poly factor() {
        Poly base = atom();
        skip_ws();
        if (peek() == '^') {
            ++pos_;
            skip_ws();
            std::size_t at = pos_;
            unsigned long e = read_uint("exponent");
            if (e > 100000) throw PolyParseError("exponent too large", at);
            return base.pow(static_cast<unsigned>(e));
        }
        return base;
    }

    Poly atom() {
        skip_ws();
        char c = peek();
        if (c == '(') {
            ++pos_;
            Poly p = expr();
            skip_ws();
            if (peek() != ')') throw PolyParseError("expected ')'", pos_);
            ++pos_;
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return rational_atom();
        if (std::isalpha(static_cast<unsigned char>(c))) return variable_atom();
        throw PolyParseError("expected number, variable or '('", pos_);
    }

    Poly rational_atom() {
        Integer num = read_integer();
        skip_ws();
        if (peek() == '/') {
            ++pos_;
            skip_ws();
            std::size_t at = pos_;
            Integer den = read_integer();
            if (den == 0) throw PolyParseError("division by zero in coefficient", at);
            Rational q(num, den);
            q.canonicalize();
            return Poly(q);
        }
        return Poly(Rational(num));
    }

    Poly variable_atom() {
        std::size_t at = pos_;
        std::string name;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])))) {
            name += text_[pos_++];
        }
        for (int i = 1; i <= kNumVars; ++i)
            if (name == "x" + std::to_string(i)) return Poly::variable(i);
        throw PolyParseError("unknown variable '" + name + "'", at);
    }

    Integer read_integer() {
        std::size_t at = pos_;
        std::string digits;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            digits += text_[pos_++];
        if (digits.empty()) throw PolyParseError("expected digits", at);
        return Integer(digits);
    }

    unsigned long read_uint(const char* what) {
        std::size_t at = pos_;
        Integer v = read_integer();
        if (!v.fits_ulong_p()) throw PolyParseError(std::string(what) + " out of range", at);
        return v.get_ui();
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    const std::string& text_;
    std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(const std::string& text) { return Parser(text).parse(); }

}  // namespace svf
