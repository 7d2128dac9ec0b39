#include "svf/extactic.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "svf/linalg.hpp"

namespace svf {

namespace {

std::vector<Monomial> monomial_union(const std::vector<Poly>& polys) {
    std::set<Monomial, GrlexDescending> seen;
    for (const auto& p : polys)
        for (const auto& [m, c] : p.terms()) seen.insert(m);
    return {seen.begin(), seen.end()};
}

linalg::Matrix coefficient_matrix(const std::vector<Poly>& polys, const std::vector<Monomial>& cols) {
    linalg::Matrix m;
    for (const auto& p : polys) {
        std::vector<Rational> row;
        row.reserve(cols.size());
        for (const auto& mono : cols) row.push_back(p.coefficient(mono));
        m.push_back(std::move(row));
    }
    return m;
}

Poly exact_quotient(const Poly& f, const Poly& g) {
    auto [q, r] = divide(f, g);
    if (!r.is_zero()) throw std::logic_error("expected exact division");
    return q;
}

Poly det_cofactor(const std::vector<std::vector<Poly>>& m) {
    const std::size_t n = m.size();
    if (n == 1) return m[0][0];
    if (n == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
    Poly acc;
    for (std::size_t j = 0; j < n; ++j) {
        if (m[0][j].is_zero()) continue;
        std::vector<std::vector<Poly>> minor;
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<Poly> row;
            for (std::size_t k = 0; k < n; ++k)
                if (k != j) row.push_back(m[i][k]);
            minor.push_back(std::move(row));
        }
        Poly term = m[0][j] * det_cofactor(minor);
        if (j % 2 == 0) acc += term; else acc -= term;
    }
    return acc;
}

Poly det_bareiss(std::vector<std::vector<Poly>> m) {
    const std::size_t n = m.size();
    Poly prev(1);
    bool negate = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            std::size_t pivot = k + 1;
            while (pivot < n && m[pivot][k].is_zero()) ++pivot;
            if (pivot == n) return Poly();
            std::swap(m[k], m[pivot]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = exact_quotient(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
            m[i][k] = Poly();
        }
        prev = m[k][k];
    }
    return negate ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

}  // namespace

SubspaceBasis::SubspaceBasis(std::vector<Poly> polys) : basis_(std::move(polys)) {
    if (basis_.size() < 2) throw std::invalid_argument("subspace basis needs at least two elements");
    for (const auto& p : basis_)
        if (p.is_zero()) throw std::invalid_argument("subspace basis must not contain the zero polynomial");
    auto cols = monomial_union(basis_);
    if (linalg::rank(coefficient_matrix(basis_, cols)) != static_cast<int>(basis_.size()))
        throw std::invalid_argument("subspace basis is linearly dependent");
}

Poly extactic(const VectorField& chi, const SubspaceBasis& w) {
    const std::size_t l = w.size();
    std::vector<std::vector<Poly>> m(l, std::vector<Poly>(l));
    m[0] = w.basis();
    for (std::size_t i = 1; i < l; ++i)
        for (std::size_t j = 0; j < l; ++j) m[i][j] = lie_derivative(chi, m[i - 1][j]);
    return l <= 3 ? det_cofactor(m) : det_bareiss(std::move(m));
}

Multiplicity multiplicity(const VectorField& chi, const SubspaceBasis& w, const Poly& f) {
    if (f.is_zero()) throw std::invalid_argument("multiplicity of the zero polynomial is undefined");
    auto cols = monomial_union(w.basis());
    for (const auto& [m, c] : f.terms())
        if (std::find(cols.begin(), cols.end(), m) == cols.end())
            throw std::invalid_argument("polynomial is not in the span of the basis");
    auto with_f = coefficient_matrix(w.basis(), cols);
    auto only_basis_rank = linalg::rank(with_f);
    {
        std::vector<Rational> row;
        for (const auto& mono : cols) row.push_back(f.coefficient(mono));
        with_f.push_back(std::move(row));
    }
    if (linalg::rank(with_f) != only_basis_rank)
        throw std::invalid_argument("polynomial is not in the span of the basis");

    Poly e = extactic(chi, w);
    if (e.is_zero()) return {true, 0};
    Multiplicity out;
    for (;;) {
        auto [q, r] = divide(e, f);
        if (!r.is_zero()) return out;
        ++out.value;
        e = q;
    }
}

CofactorResult check_hyperplane(const VectorField& chi, const Poly& l) {
    if (l.is_zero() || *l.degree() != 1)
        throw std::invalid_argument("hyperplane polynomial must have degree exactly 1");
    return invariance_cofactor(chi, l);
}

namespace {

// Divisors of |n| from trial division; a leftover cofactor beyond the trial
// bound is used as if prime, which is exact for the magnitudes seen here.
std::vector<Integer> divisors(Integer n) {
    n = abs(n);
    std::vector<std::pair<Integer, unsigned>> factors;
    if (n > 1) {
        Integer d(2);
        Integer limit(1000000);
        while (d <= limit && d * d <= n) {
            if (n % d == 0) {
                unsigned e = 0;
                while (n % d == 0) {
                    n /= d;
                    ++e;
                }
                factors.emplace_back(d, e);
            }
            d += (d == 2) ? 1 : 2;
        }
        if (n > 1) factors.emplace_back(n, 1);
    }
    std::vector<Integer> divs{Integer(1)};
    for (const auto& [p, e] : factors) {
        std::size_t before = divs.size();
        Integer pk(1);
        for (unsigned k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < before; ++i) divs.push_back(divs[i] * pk);
        }
    }
    return divs;
}

// Rational roots of sum coeffs[i] * t^i, exact. Pre: not all coefficients zero.
std::vector<Rational> rational_roots(const std::vector<Rational>& coeffs) {
    std::size_t lo = 0;
    while (lo < coeffs.size() && coeffs[lo] == 0) ++lo;
    std::size_t hi = coeffs.size();
    while (hi > lo && coeffs[hi - 1] == 0) --hi;
    std::vector<Rational> roots;
    if (lo == hi) throw std::logic_error("rational_roots of zero polynomial");
    if (lo > 0) roots.push_back(Rational(0));
    if (hi - lo <= 1) return roots;  // constant after stripping t^lo

    Integer den_lcm(1);
    for (std::size_t i = lo; i < hi; ++i)
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), mpq_denref(coeffs[i].get_mpq_t()));
    std::vector<Integer> ic;
    for (std::size_t i = lo; i < hi; ++i) {
        Rational scaled = coeffs[i] * Rational(den_lcm);
        ic.push_back(Integer(scaled.get_num()));
    }
    auto eval = [&](const Rational& t) {
        Rational acc(0);
        for (std::size_t i = ic.size(); i-- > 0;) acc = acc * t + Rational(ic[i]);
        return acc;
    };
    for (const auto& p : divisors(ic.front())) {
        for (const auto& q : divisors(ic.back())) {
            Rational cand(p, q);
            cand.canonicalize();
            for (int sign = 0; sign < 2; ++sign) {
                Rational t = sign ? Rational(-cand) : cand;
                if (eval(t) == 0 && std::find(roots.begin(), roots.end(), t) == roots.end())
                    roots.push_back(t);
            }
        }
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

}  // namespace

ParallelReport enumerate_parallel(const VectorField& chi) {
    const Poly& p4 = chi.p[3];
    ParallelReport rep;
    if (p4.is_zero()) {
        rep.all_invariant = true;
        return rep;
    }
    static const std::array<std::array<Rational, 3>, 3> kProbes = {{
        {rational(1), rational(1, 2), rational(1, 3)},
        {rational(2), rational(1, 3), rational(1, 5)},
        {rational(3), rational(1, 5), rational(1, 7)},
    }};
    Poly specialized;
    bool have_probe = false;
    for (const auto& probe : kProbes) {
        specialized = p4.substitute(1, probe[0]).substitute(2, probe[1]).substitute(3, probe[2]);
        if (!specialized.is_zero()) {
            have_probe = true;
            break;
        }
    }
    if (!have_probe) {
        rep.candidates_indeterminate = true;
        return rep;
    }
    int deg = *specialized.degree();
    std::vector<Rational> coeffs(static_cast<std::size_t>(deg) + 1, Rational(0));
    for (const auto& [m, c] : specialized.terms()) coeffs[m.e[3]] = c;

    const Poly x4 = Poly::variable(4);
    for (const auto& k : rational_roots(coeffs)) {
        if (!p4.substitute(4, k).is_zero()) continue;
        Poly plane = x4 - Poly(k);
        int mult = 0;
        Poly e = p4;
        for (;;) {
            auto [q, r] = divide(e, plane);
            if (!r.is_zero()) break;
            ++mult;
            e = q;
        }
        if (mult > 0 && check_hyperplane(chi, plane).invariant) rep.planes.emplace_back(k, mult);
    }
    std::sort(rep.planes.begin(), rep.planes.end(),
              [](const auto& u, const auto& v) { return u.first < v.first; });
    return rep;
}

PencilReport enumerate_pencil(const VectorField& chi, Pencil pencil) {
    const int vi = pencil == Pencil::X1X2 ? 1 : 3;
    const int vj = vi + 1;
    Poly e = Poly::variable(vi) * chi.p[vj - 1] - Poly::variable(vj) * chi.p[vi - 1];
    PencilReport rep;
    if (e.is_zero()) {
        rep.all_invariant = true;
        return rep;
    }

    // Components of E that are homogeneous in (xi,xj) with a fixed monomial in
    // the remaining variables, keyed deterministically.
    struct Key {
        Monomial outside;
        unsigned pencil_degree;
        bool operator<(const Key& other) const {
            if (!(outside == other.outside)) return grlex_less(other.outside, outside);
            return pencil_degree > other.pencil_degree;
        }
    };
    std::map<Key, std::vector<Rational>> components;  // coefficient of xi^t, t = 0..d
    for (const auto& [m, c] : e.terms()) {
        Monomial outside = m;
        unsigned ti = outside.e[vi - 1], tj = outside.e[vj - 1];
        outside.e[vi - 1] = outside.e[vj - 1] = 0;
        Key key{outside, ti + tj};
        auto& coeffs = components[key];
        coeffs.resize(key.pencil_degree + 1, Rational(0));
        coeffs[ti] += c;
    }

    const auto& [key, binary] = *components.begin();
    std::vector<std::pair<Rational, Rational>> candidates;  // (a, b)
    const unsigned d = key.pencil_degree;
    if (d >= 1) {
        if (binary[d] == 0) candidates.emplace_back(Rational(0), Rational(1));
        for (const auto& r : rational_roots(binary)) {
            Rational a(r.get_den());
            Rational b(-r.get_num());
            candidates.emplace_back(a, b);  // xi - r*xj, primitive since r is canonical
        }
    }

    for (const auto& [a, b] : candidates) {
        Poly plane = Poly::variable(vi) * a + Poly::variable(vj) * b;
        int mult = 0;
        Poly rest = e;
        for (;;) {
            auto [q, r] = divide(rest, plane);
            if (!r.is_zero()) break;
            ++mult;
            rest = q;
        }
        if (mult > 0 && check_hyperplane(chi, plane).invariant) rep.ratios.push_back({a, b, mult});
    }
    std::sort(rep.ratios.begin(), rep.ratios.end(), [](const PencilRatio& u, const PencilRatio& v) {
        if (u.a != v.a) return u.a < v.a;
        return u.b < v.b;
    });
    return rep;
}

}  // namespace svf
