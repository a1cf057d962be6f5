#pragma once

#include <span>
#include <vector>

#include "shadowlab/qseries.hpp"
#include "shadowlab/rational.hpp"

namespace shadowlab {

/// P(X, Y) = sum_j a_j X^{n-8j} D^j with D = X^8 - Y, where X stands for
/// theta_Z (weight 1/2) and Y for theta_E8 (weight 4). Holds exactly
/// floor(n/8) + 1 coefficients.
struct HeckePoly {
    int n = 0;
    std::vector<Rational> coeffs;

    friend bool operator==(const HeckePoly&, const HeckePoly&) = default;
};

/// Unique HeckePoly whose expansion starts N_0, ..., N_{floor(n/8)}.
/// The system is triangular: D = 16 q + ..., so coefficient j has pivot 16^j.
/// Throws std::invalid_argument if n < 1 or counts.size() != floor(n/8) + 1.
HeckePoly decompose(int n, std::span<const Rational> counts);
/// Reads N_k from quarter-exponent 4k of a theta series.
HeckePoly decompose(int n, const QSeries& theta);

QSeries evaluate(const HeckePoly& p, QSeries::Exponent prec);

/// P(theta'_Z, theta_E8): coefficient at quarter-exponent k counts
/// characteristic vectors of norm k.
QSeries shadow_series(const HeckePoly& p, QSeries::Exponent prec);

/// theta_Z^n - (n/8) theta_Z^{n-8} (theta_Z^8 - theta_E8), for 8 <= n <= 23.
HeckePoly extremal_theta(int n);

/// 2n(23 - n), the norm-2 count of an extremal lattice.
Integer extremal_norm2_count(int n);

/// Number of characteristic vectors of norm n - 16 forced by N_2:
/// 2^{n-24} (N_2 - 2n(23-n)). Requires 16 <= n <= 23. A negative value means
/// no unimodular lattice has these invariants, reported as std::domain_error.
Rational predict_shadow_defect(int n, const Integer& norm2_count);

/// N_2 == 2n(23-n) mod max(2, 2^{25-n}); even rank-16 lattices are exempt.
bool check_congruence(int n, const Integer& norm2_count, bool even);

/// Smallest recommended series precision for rank n: 4 floor(n/8) + 1.
QSeries::Exponent minimum_precision(int n);

}  // namespace shadowlab
