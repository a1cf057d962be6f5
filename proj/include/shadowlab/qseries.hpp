#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "shadowlab/rational.hpp"

namespace shadowlab {

/// Truncated power series in q^{1/4}, q = e^{pi i t}, with exact rational
/// coefficients. Exponents are stored in quarter units: a lattice norm k sits
/// at exponent 4k, a characteristic norm k (shadow norm k/4) at exponent k.
///
/// Coefficients at exponents >= prec() are unknown. Results of arithmetic
/// carry the smaller operand precision, and equality compares only below the
/// smaller of the two precisions.
class QSeries {
public:
    using Exponent = std::int64_t;

    QSeries() = default;
    explicit QSeries(Exponent prec) : prec_(prec) {}

    static QSeries constant(const Rational& c, Exponent prec);
    static QSeries monomial(const Rational& c, Exponent exponent, Exponent prec);

    Exponent prec() const { return prec_; }
    const std::map<Exponent, Rational>& terms() const { return terms_; }

    Rational coeff(Exponent e) const;
    void set_coeff(Exponent e, const Rational& c);

    bool is_zero() const { return terms_.empty(); }
    /// Smallest exponent with a nonzero coefficient, or prec() if none below it.
    Exponent lowest_exponent() const;

    QSeries truncated(Exponent prec) const;
    /// Substitution t -> k t: every exponent is multiplied by k.
    QSeries dilated(Exponent k) const;

    QSeries operator-() const;
    QSeries& operator+=(const QSeries& b);
    QSeries& operator-=(const QSeries& b);
    QSeries& operator*=(const Rational& c);

    friend QSeries operator+(QSeries a, const QSeries& b) { return a += b; }
    friend QSeries operator-(QSeries a, const QSeries& b) { return a -= b; }
    friend QSeries operator*(QSeries a, const Rational& c) { return a *= c; }
    friend QSeries operator*(const Rational& c, QSeries a) { return a *= c; }
    friend QSeries operator*(const QSeries& a, const QSeries& b);

    friend bool operator==(const QSeries& a, const QSeries& b);

    std::string to_string() const;

private:
    std::map<Exponent, Rational> terms_;
    Exponent prec_ = 0;
};

QSeries qs_add(const QSeries& a, const QSeries& b);
QSeries qs_mul(const QSeries& a, const QSeries& b);
/// a^0 is the constant 1 at a.prec().
QSeries qs_pow(const QSeries& a, unsigned e);

/// 1 + 2 sum_{m>=1} q^{m^2}.
QSeries theta_z(QSeries::Exponent prec);
/// 2 sum_{m>=0} q^{(m+1/2)^2}; the constant term is an explicit zero.
QSeries theta_z_shadow(QSeries::Exponent prec);
/// 1 + 240 sum_{m>=1} sigma_3(m) q^{2m}, from the Lambert series
/// 240 sum m^3 q^{2m} / (1 - q^{2m}).
QSeries theta_e8(QSeries::Exponent prec);

}  // namespace shadowlab
