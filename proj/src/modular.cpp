#include "shadowlab/modular.hpp"

#include <stdexcept>
#include <string>

namespace shadowlab {

namespace {

// Sum_j a_j gen^{n-8j} (gen^8 - theta_E8)^j.
QSeries evaluate_with(const HeckePoly& p, const QSeries& gen, QSeries::Exponent prec) {
    const QSeries e8 = theta_e8(prec);
    const QSeries delta = qs_pow(gen, 8) - e8;
    QSeries sum(prec);
    QSeries delta_pow = QSeries::constant(1, prec);
    for (std::size_t j = 0; j < p.coeffs.size(); ++j) {
        if (j > 0) delta_pow = delta_pow * delta;
        if (p.coeffs[j] == 0) continue;
        sum += p.coeffs[j] * (qs_pow(gen, static_cast<unsigned>(p.n - 8 * static_cast<int>(j))) * delta_pow);
    }
    return sum;
}

void check_shape(const HeckePoly& p) {
    if (p.n < 1) throw std::invalid_argument("rank must be positive");
    if (p.coeffs.size() != static_cast<std::size_t>(p.n / 8 + 1))
        throw std::invalid_argument("HeckePoly of rank " + std::to_string(p.n) + " needs " +
                                    std::to_string(p.n / 8 + 1) + " coefficients");
}

}  // namespace

QSeries::Exponent minimum_precision(int n) { return 4 * (n / 8) + 1; }

HeckePoly decompose(int n, std::span<const Rational> counts) {
    if (n < 1) throw std::invalid_argument("rank must be positive");
    const std::size_t terms = static_cast<std::size_t>(n / 8 + 1);
    if (counts.size() != terms)
        throw std::invalid_argument("rank " + std::to_string(n) + " needs exactly " + std::to_string(terms) +
                                    " leading norm counts, got " + std::to_string(counts.size()));
    const QSeries::Exponent prec = minimum_precision(n);
    const QSeries tz = theta_z(prec);
    const QSeries delta = qs_pow(tz, 8) - theta_e8(prec);

    std::vector<QSeries> basis;
    QSeries delta_pow = QSeries::constant(1, prec);
    for (std::size_t j = 0; j < terms; ++j) {
        if (j > 0) delta_pow = delta_pow * delta;
        basis.push_back(qs_pow(tz, static_cast<unsigned>(n - 8 * static_cast<int>(j))) * delta_pow);
    }

    HeckePoly p{n, std::vector<Rational>(terms)};
    for (std::size_t k = 0; k < terms; ++k) {
        const auto e = static_cast<QSeries::Exponent>(4 * k);
        Rational residual = counts[k];
        for (std::size_t j = 0; j < k; ++j) residual -= p.coeffs[j] * basis[j].coeff(e);
        p.coeffs[k] = residual / basis[k].coeff(e);
    }
    return p;
}

HeckePoly decompose(int n, const QSeries& theta) {
    std::vector<Rational> counts;
    for (int k = 0; k <= n / 8; ++k) counts.push_back(theta.coeff(4 * k));
    return decompose(n, counts);
}

QSeries evaluate(const HeckePoly& p, QSeries::Exponent prec) {
    check_shape(p);
    return evaluate_with(p, theta_z(prec), prec);
}

QSeries shadow_series(const HeckePoly& p, QSeries::Exponent prec) {
    check_shape(p);
    return evaluate_with(p, theta_z_shadow(prec), prec);
}

HeckePoly extremal_theta(int n) {
    if (n < 8 || n > 23) throw std::invalid_argument("extremal theta series needs 8 <= n <= 23");
    HeckePoly p{n, std::vector<Rational>(static_cast<std::size_t>(n / 8 + 1))};
    p.coeffs[0] = 1;
    p.coeffs[1] = Rational(-n, 8);
    p.coeffs[1].canonicalize();
    return p;
}

Integer extremal_norm2_count(int n) { return Integer(2 * n * (23 - n)); }

Rational predict_shadow_defect(int n, const Integer& norm2_count) {
    if (n < 16 || n > 23) throw std::invalid_argument("shadow defect prediction needs 16 <= n <= 23");
    Rational defect = pow2(n - 24) * Rational(norm2_count - extremal_norm2_count(n));
    if (defect < 0)
        throw std::domain_error("no unimodular lattice of rank " + std::to_string(n) + " has N2 = " +
                                norm2_count.get_str());
    return defect;
}

bool check_congruence(int n, const Integer& norm2_count, bool even) {
    if (even && n == 16) return true;
    Integer modulus = 2;
    if (n < 24) mpz_ui_pow_ui(modulus.get_mpz_t(), 2, static_cast<unsigned long>(25 - n));
    Integer diff = norm2_count - extremal_norm2_count(n);
    return mpz_divisible_p(diff.get_mpz_t(), modulus.get_mpz_t()) != 0;
}

}  // namespace shadowlab
