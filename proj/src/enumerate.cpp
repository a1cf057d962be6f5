#include "enumerate.hpp"

#include <cstdlib>
#include <stdexcept>
#include <utility>

namespace shadowlab::detail {

namespace {

struct Gso {
    std::vector<std::vector<double>> mu;
    std::vector<double> bstar;
};

Gso gram_schmidt(const IntMatrix& g) {
    const std::size_t n = g.size();
    Gso out{std::vector<std::vector<double>>(n, std::vector<double>(n, 0.0)), std::vector<double>(n, 0.0)};
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            double s = static_cast<double>(g[i][j]);
            for (std::size_t k = 0; k < j; ++k) s -= out.mu[j][k] * out.mu[i][k] * out.bstar[k];
            out.mu[i][j] = s / out.bstar[j];
        }
        double b = static_cast<double>(g[i][i]);
        for (std::size_t k = 0; k < i; ++k) b -= out.mu[i][k] * out.mu[i][k] * out.bstar[k];
        if (b <= 0) throw std::domain_error("Gram matrix is not positive definite");
        out.bstar[i] = b;
    }
    return out;
}

// row_k -= q * row_j applied to basis transform and Gram (both sides)
void size_step(IntMatrix& g, IntMatrix& u, std::size_t k, std::size_t j, std::int64_t q) {
    const std::size_t n = g.size();
    for (std::size_t c = 0; c < u[k].size(); ++c) u[k][c] -= q * u[j][c];
    for (std::size_t c = 0; c < n; ++c) g[k][c] -= q * g[j][c];
    for (std::size_t r = 0; r < n; ++r) g[r][k] -= q * g[r][j];
}

void swap_rows(IntMatrix& g, IntMatrix& u, std::size_t a, std::size_t b) {
    std::swap(u[a], u[b]);
    std::swap(g[a], g[b]);
    for (auto& row : g) std::swap(row[a], row[b]);
}

}  // namespace

ReducedGram lll_reduce(const IntMatrix& gram, double delta) {
    const std::size_t n = gram.size();
    ReducedGram out{gram, IntMatrix(n, std::vector<std::int64_t>(n, 0))};
    for (std::size_t i = 0; i < n; ++i) out.transform[i][i] = 1;
    if (n < 2) return out;
    std::size_t k = 1;
    Gso gso = gram_schmidt(out.gram);
    while (k < n) {
        for (std::size_t jj = k; jj-- > 0;) {
            const double m = gso.mu[k][jj];
            if (std::abs(m) > 0.5) {
                const auto q = static_cast<std::int64_t>(std::llround(m));
                size_step(out.gram, out.transform, k, jj, q);
                gso = gram_schmidt(out.gram);
            }
        }
        const double lhs = gso.bstar[k];
        const double rhs = (delta - gso.mu[k][k - 1] * gso.mu[k][k - 1]) * gso.bstar[k - 1];
        if (lhs < rhs) {
            swap_rows(out.gram, out.transform, k, k - 1);
            gso = gram_schmidt(out.gram);
            k = k > 1 ? k - 1 : 1;
        } else {
            ++k;
        }
    }
    return out;
}

Cholesky cholesky(const IntMatrix& gram) {
    const std::size_t n = gram.size();
    Cholesky c{std::vector<double>(n), std::vector<std::vector<double>>(n, std::vector<double>(n, 0.0))};
    // Q(x) = sum_i d_i (x_i + sum_{j>i} mu_ij x_j)^2, built from the last coordinate down
    std::vector<std::vector<double>> a(n, std::vector<double>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i][j] = static_cast<double>(gram[i][j]);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            a[j][i] = a[i][j];
            a[i][j] /= a[i][i];
        }
        for (std::size_t k = i + 1; k < n; ++k)
            for (std::size_t l = k; l < n; ++l) a[k][l] -= a[k][i] * a[i][l];
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i][i] <= 0) throw std::domain_error("Gram matrix is not positive definite");
        c.diag[i] = a[i][i];
        for (std::size_t j = i + 1; j < n; ++j) c.mu[i][j] = a[i][j];
    }
    return c;
}

std::int64_t quadratic_form(const IntMatrix& gram, std::span<const std::int64_t> x) {
    const std::size_t n = gram.size();
    __int128 s = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (x[i] == 0) continue;
        __int128 row = 0;
        for (std::size_t j = 0; j < n; ++j) row += static_cast<__int128>(gram[i][j]) * x[j];
        s += row * x[i];
    }
    return static_cast<std::int64_t>(s);
}

}  // namespace shadowlab::detail
