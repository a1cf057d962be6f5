#include "shadowlab/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace shadowlab::linalg {

Matrix<Integer> hermite_normal_form(Matrix<Integer> a) {
    if (a.empty()) return a;
    const std::size_t m = a.size();
    const std::size_t n = a[0].size();
    std::size_t r = 0;
    for (std::size_t col = 0; col < n && r < m; ++col) {
        std::size_t piv = r;
        while (piv < m && a[piv][col] == 0) ++piv;
        if (piv == m) continue;
        std::swap(a[r], a[piv]);
        for (std::size_t i = r + 1; i < m; ++i) {
            if (a[i][col] == 0) continue;
            Integer g, s, t;
            mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a[r][col].get_mpz_t(),
                       a[i][col].get_mpz_t());
            Integer u = a[r][col] / g;
            Integer v = a[i][col] / g;
            for (std::size_t j = col; j < n; ++j) {
                Integer top = s * a[r][j] + t * a[i][j];
                Integer bot = u * a[i][j] - v * a[r][j];
                a[r][j] = std::move(top);
                a[i][j] = std::move(bot);
            }
        }
        if (a[r][col] < 0)
            for (auto& x : a[r]) x = -x;
        for (std::size_t i = 0; i < r; ++i) {
            Integer q;
            mpz_fdiv_q(q.get_mpz_t(), a[i][col].get_mpz_t(), a[r][col].get_mpz_t());
            if (q != 0)
                for (std::size_t j = col; j < n; ++j) a[i][j] -= q * a[r][j];
        }
        ++r;
    }
    a.resize(r);
    return a;
}

Matrix<Integer> integer_kernel(const Matrix<Integer>& a, std::size_t n) {
    const std::size_t m = a.size();
    Matrix<Integer> rows(n, std::vector<Integer>(m + n));
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < m; ++i) rows[j][i] = a[i][j];
        rows[j][m + j] = 1;
    }
    Matrix<Integer> h = hermite_normal_form(std::move(rows));
    Matrix<Integer> ker;
    for (auto& row : h) {
        bool zero = true;
        for (std::size_t i = 0; i < m; ++i) zero = zero && row[i] == 0;
        if (zero) ker.emplace_back(row.begin() + static_cast<std::ptrdiff_t>(m), row.end());
    }
    return ker;
}

Integer determinant(const Matrix<Integer>& input) {
    const std::size_t n = input.size();
    if (n == 0) return 1;
    Matrix<Integer> a = input;
    Integer prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && a[p][k] == 0) ++p;
            if (p == n) return 0;
            std::swap(a[k], a[p]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]);
                mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
            }
        }
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

std::size_t rank(RatMatrix a) {
    if (a.empty()) return 0;
    const std::size_t m = a.size();
    const std::size_t n = a[0].size();
    std::size_t r = 0;
    for (std::size_t col = 0; col < n && r < m; ++col) {
        std::size_t piv = r;
        while (piv < m && a[piv][col] == 0) ++piv;
        if (piv == m) continue;
        std::swap(a[r], a[piv]);
        for (std::size_t i = r + 1; i < m; ++i) {
            if (a[i][col] == 0) continue;
            Rational f = a[i][col] / a[r][col];
            for (std::size_t j = col; j < n; ++j) a[i][j] -= f * a[r][j];
        }
        ++r;
    }
    return r;
}

RatMatrix inverse(const RatMatrix& input) {
    const std::size_t n = input.size();
    RatMatrix a(n, std::vector<Rational>(2 * n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) a[i][j] = input[i][j];
        a[i][n + i] = 1;
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv][col] == 0) ++piv;
        if (piv == n) throw std::domain_error("singular matrix");
        std::swap(a[col], a[piv]);
        Rational p = a[col][col];
        for (auto& x : a[col]) x /= p;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || a[i][col] == 0) continue;
            Rational f = a[i][col];
            for (std::size_t j = 0; j < 2 * n; ++j) a[i][j] -= f * a[col][j];
        }
    }
    RatMatrix out(n);
    for (std::size_t i = 0; i < n; ++i) out[i].assign(a[i].begin() + static_cast<std::ptrdiff_t>(n), a[i].end());
    return out;
}

RatMatrix multiply(const RatMatrix& a, const RatMatrix& b) {
    const std::size_t m = a.size();
    const std::size_t k = b.size();
    const std::size_t n = k ? b[0].size() : 0;
    RatMatrix c(m, std::vector<Rational>(n));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t l = 0; l < k; ++l) {
            if (a[i][l] == 0) continue;
            for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][l] * b[l][j];
        }
    return c;
}

RatMatrix transpose(const RatMatrix& a) {
    if (a.empty()) return a;
    RatMatrix t(a[0].size(), std::vector<Rational>(a.size()));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[0].size(); ++j) t[j][i] = a[i][j];
    return t;
}

Matrix<Integer> to_integer(const IntMatrix& a) {
    Matrix<Integer> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (auto x : a[i]) out[i].emplace_back(static_cast<long>(x));
    return out;
}

RatMatrix to_rational(const IntMatrix& a) {
    RatMatrix out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (auto x : a[i]) out[i].emplace_back(static_cast<long>(x));
    return out;
}

bool solve_mod2(std::vector<std::vector<std::uint8_t>> a, std::vector<std::uint8_t> b,
                std::vector<std::uint8_t>& x) {
    const std::size_t m = a.size();
    const std::size_t n = m ? a[0].size() : 0;
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t col = 0; col < n && r < m; ++col) {
        std::size_t piv = r;
        while (piv < m && !a[piv][col]) ++piv;
        if (piv == m) continue;
        std::swap(a[r], a[piv]);
        std::swap(b[r], b[piv]);
        for (std::size_t i = 0; i < m; ++i) {
            if (i == r || !a[i][col]) continue;
            for (std::size_t j = col; j < n; ++j) a[i][j] ^= a[r][j];
            b[i] ^= b[r];
        }
        pivot_col.push_back(col);
        ++r;
    }
    for (std::size_t i = r; i < m; ++i)
        if (b[i]) return false;
    x.assign(n, 0);
    for (std::size_t i = 0; i < r; ++i) x[pivot_col[i]] = b[i];
    return true;
}

}  // namespace shadowlab::linalg
