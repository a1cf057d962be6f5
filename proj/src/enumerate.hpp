#pragma once

#include <cmath>
#include <cstdint>
#include <span>
#include <vector>

#include "shadowlab/rational.hpp"

namespace shadowlab::detail {

/// Gram of an LLL-reduced basis plus the unimodular transform U with
/// reduced rows = U * original rows.
struct ReducedGram {
    IntMatrix gram;
    IntMatrix transform;
};

ReducedGram lll_reduce(const IntMatrix& gram, double delta = 0.99);

/// Quadratic-form decomposition Q(x) = sum_i d_i (x_i + sum_{j>i} mu_ij x_j)^2.
struct Cholesky {
    std::vector<double> diag;
    std::vector<std::vector<double>> mu;
};

Cholesky cholesky(const IntMatrix& gram);

/// Visits every x = offset + step * y (y integer) with x^T G x <= max_norm,
/// passing x and its exact norm. Floating point only prunes the search: the
/// bound is inflated slightly and the exact integer norm, accumulated level
/// by level, decides. Deterministic order.
///
/// With `half` set (requires a zero offset) only x = 0 and the x whose last
/// nonzero coordinate is positive are visited, one from each +-pair.
template <class Visit>
void enumerate_coset(const IntMatrix& gram, const Cholesky& chol, std::span<const std::int64_t> offset,
                     std::int64_t step, std::int64_t max_norm, bool half, Visit&& visit) {
    const auto n = gram.size();
    if (max_norm < 0) return;
    std::vector<std::int64_t> x(n);
    if (n == 0) {
        visit(x, std::int64_t{0});
        return;
    }
    constexpr double kRelSlack = 1e-6;
    const double bound = static_cast<double>(max_norm) * (1.0 + kRelSlack) + 1e-9;

    // row-major copies; sig[i] = sum_{j>i} mu_ij x_j, cross[i] = sum_{j>i} G_ij x_j
    std::vector<double> mu(n * n);
    std::vector<std::int64_t> g(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            mu[j * n + i] = chol.mu[i][j];  // column j holds mu_ij for all i
            g[j * n + i] = gram[i][j];
        }
    std::vector<double> sig(n, 0.0);
    std::vector<std::int64_t> cross(n, 0);
    std::vector<double> partial(n + 1, 0.0);
    std::vector<std::int64_t> exact(n + 1, 0);

    auto shift_lower = [&](std::size_t i, std::int64_t delta) {
        const double* mcol = &mu[i * n];
        const std::int64_t* gcol = &g[i * n];
        const auto dd = static_cast<double>(delta);
        for (std::size_t k = 0; k < i; ++k) {
            sig[k] += mcol[k] * dd;
            cross[k] += gcol[k] * delta;
        }
    };

    auto rec = [&](auto&& self, std::size_t i, bool upper_zero) -> void {
        const double ctr = -sig[i];
        const double rem = (bound - partial[i + 1]) / chol.diag[i];
        if (rem < 0) return;
        const double w = std::sqrt(rem);
        const auto lo_real = static_cast<std::int64_t>(std::ceil(ctr - w - 1e-9));
        const auto hi = static_cast<std::int64_t>(std::floor(ctr + w + 1e-9));
        const std::int64_t off = offset[i];
        std::int64_t lo = step == 1 ? lo_real : lo_real + ((off - lo_real) % step + step) % step;
        if (half && upper_zero && lo < 0) lo = 0;
        if (lo > hi) return;
        const std::int64_t gii = gram[i][i];
        const std::int64_t above = exact[i + 1];
        const std::int64_t cr = cross[i];
        if (i == 0) {
            for (std::int64_t v = lo; v <= hi; v += step) {
                const std::int64_t e = above + v * (gii * v + 2 * cr);
                if (e <= max_norm) {
                    x[0] = v;
                    visit(x, e);
                }
            }
            x[0] = 0;
            return;
        }
        shift_lower(i, lo);
        for (std::int64_t v = lo; v <= hi; v += step) {
            if (v != lo) shift_lower(i, step);
            const double d = static_cast<double>(v) - ctr;
            const double p = partial[i + 1] + chol.diag[i] * d * d;
            if (p > bound) continue;
            x[i] = v;
            partial[i] = p;
            exact[i] = above + v * (gii * v + 2 * cr);
            self(self, i - 1, upper_zero && v == 0);
        }
        shift_lower(i, step == 1 ? -hi : -hi + ((hi - lo) % step));
        x[i] = 0;
    };
    rec(rec, n - 1, true);
}

std::int64_t quadratic_form(const IntMatrix& gram, std::span<const std::int64_t> x);

}  // namespace shadowlab::detail
