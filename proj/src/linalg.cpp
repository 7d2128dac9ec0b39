#include "svf/linalg.hpp"

#include <stdexcept>

namespace svf::linalg {

namespace {

// Reduced row echelon form in place; returns pivot column per pivot row.
std::vector<std::size_t> rref(Matrix& m, std::size_t cols) {
    std::vector<std::size_t> pivot_cols;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
        std::size_t pivot = row;
        while (pivot < m.size() && m[pivot][col] == 0) ++pivot;
        if (pivot == m.size()) continue;
        std::swap(m[row], m[pivot]);
        Rational inv = 1 / m[row][col];
        for (std::size_t j = col; j < cols; ++j) m[row][j] *= inv;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == row || m[i][col] == 0) continue;
            Rational factor = m[i][col];
            for (std::size_t j = col; j < cols; ++j) m[i][j] -= factor * m[row][j];
        }
        pivot_cols.push_back(col);
        ++row;
    }
    return pivot_cols;
}

}  // namespace

int rank(Matrix m) {
    if (m.empty()) return 0;
    return static_cast<int>(rref(m, m[0].size()).size());
}

std::vector<std::vector<Rational>> kernel_basis(Matrix m, std::size_t cols) {
    if (m.empty()) m.push_back(std::vector<Rational>(cols, Rational(0)));
    auto pivot_cols = rref(m, cols);
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivot_cols) is_pivot[c] = true;

    std::vector<std::vector<Rational>> basis;
    for (std::size_t free_col = 0; free_col < cols; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<Rational> v(cols, Rational(0));
        v[free_col] = 1;
        for (std::size_t r = 0; r < pivot_cols.size(); ++r) v[pivot_cols[r]] = -m[r][free_col];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<Rational> canonicalize_vector(std::vector<Rational> v) {
    Integer den_lcm(1);
    for (const auto& q : v) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), mpq_denref(q.get_mpq_t()));
    Integer num_gcd(0);
    for (auto& q : v) {
        q *= Rational(den_lcm);
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), mpq_numref(q.get_mpq_t()));
    }
    if (num_gcd == 0) throw std::invalid_argument("cannot canonicalize the zero vector");
    int sign = 0;
    for (const auto& q : v) {
        if (q != 0) {
            sign = q > 0 ? 1 : -1;
            break;
        }
    }
    Rational scale = Rational(sign) / Rational(num_gcd);
    for (auto& q : v) q *= scale;
    return v;
}

}  // namespace svf::linalg
