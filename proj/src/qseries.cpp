#include "shadowlab/qseries.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace shadowlab {

QSeries QSeries::constant(const Rational& c, Exponent prec) { return monomial(c, 0, prec); }

QSeries QSeries::monomial(const Rational& c, Exponent exponent, Exponent prec) {
    QSeries s(prec);
    s.set_coeff(exponent, c);
    return s;
}

Rational QSeries::coeff(Exponent e) const {
    if (e < 0 || e >= prec_) throw std::out_of_range("coefficient outside series range");
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

void QSeries::set_coeff(Exponent e, const Rational& c) {
    if (e < 0) throw std::out_of_range("negative exponent");
    if (e >= prec_) return;
    if (c == 0)
        terms_.erase(e);
    else
        terms_[e] = c;
}

QSeries::Exponent QSeries::lowest_exponent() const { return terms_.empty() ? prec_ : terms_.begin()->first; }

QSeries QSeries::truncated(Exponent prec) const {
    QSeries out(std::min(prec, prec_));
    for (const auto& [e, c] : terms_) {
        if (e >= out.prec_) break;
        out.terms_.emplace(e, c);
    }
    return out;
}

QSeries QSeries::dilated(Exponent k) const {
    if (k <= 0) throw std::invalid_argument("dilation factor must be positive");
    // coefficients between multiples of k are known zeros up to k*(prec-1)
    QSeries out(k * (prec_ - 1) + 1);
    for (const auto& [e, c] : terms_) out.terms_.emplace(k * e, c);
    return out;
}

QSeries QSeries::operator-() const {
    QSeries out = *this;
    for (auto& [e, c] : out.terms_) c = -c;
    return out;
}

QSeries& QSeries::operator+=(const QSeries& b) {
    prec_ = std::min(prec_, b.prec_);
    terms_.erase(terms_.lower_bound(prec_), terms_.end());
    for (const auto& [e, c] : b.terms_) {
        if (e >= prec_) break;
        Rational v = coeff(e) + c;
        set_coeff(e, v);
    }
    return *this;
}

QSeries& QSeries::operator-=(const QSeries& b) { return *this += -b; }

QSeries& QSeries::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

QSeries operator*(const QSeries& a, const QSeries& b) {
    QSeries out(std::min(a.prec_, b.prec_));
    for (const auto& [ea, ca] : a.terms_) {
        if (ea >= out.prec_) break;
        for (const auto& [eb, cb] : b.terms_) {
            const auto e = ea + eb;
            if (e >= out.prec_) break;
            out.terms_[e] += ca * cb;
        }
    }
    std::erase_if(out.terms_, [](const auto& kv) { return kv.second == 0; });
    return out;
}

bool operator==(const QSeries& a, const QSeries& b) {
    const auto prec = std::min(a.prec_, b.prec_);
    auto ia = a.terms_.begin();
    auto ib = b.terms_.begin();
    while (true) {
        const bool enda = ia == a.terms_.end() || ia->first >= prec;
        const bool endb = ib == b.terms_.end() || ib->first >= prec;
        if (enda || endb) return enda && endb;
        if (ia->first != ib->first || ia->second != ib->second) return false;
        ++ia;
        ++ib;
    }
}

std::string QSeries::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (first)
            os << (c < 0 ? "-" : "");
        else
            os << (c < 0 ? " - " : " + ");
        first = false;
        os << shadowlab::to_string(abs(c));
        if (e != 0) os << "*q^(" << e << "/4)";
    }
    if (first) os << "0";
    os << " + O(q^(" << prec_ << "/4))";
    return os.str();
}

QSeries qs_add(const QSeries& a, const QSeries& b) { return a + b; }
QSeries qs_mul(const QSeries& a, const QSeries& b) { return a * b; }

QSeries qs_pow(const QSeries& a, unsigned e) {
    QSeries result = QSeries::constant(1, a.prec());
    QSeries base = a;
    while (e) {
        if (e & 1u) result = result * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return result;
}

QSeries theta_z(QSeries::Exponent prec) {
    if (prec <= 0) throw std::invalid_argument("precision must be positive");
    QSeries s(prec);
    s.set_coeff(0, 1);
    for (QSeries::Exponent m = 1; 4 * m * m < prec; ++m) s.set_coeff(4 * m * m, 2);
    return s;
}

QSeries theta_z_shadow(QSeries::Exponent prec) {
    if (prec <= 0) throw std::invalid_argument("precision must be positive");
    QSeries s(prec);
    for (QSeries::Exponent m = 0; (2 * m + 1) * (2 * m + 1) < prec; ++m) s.set_coeff((2 * m + 1) * (2 * m + 1), 2);
    return s;
}

QSeries theta_e8(QSeries::Exponent prec) {
    if (prec <= 0) throw std::invalid_argument("precision must be positive");
    QSeries s(prec);
    s.set_coeff(0, 1);
    // m^3 q^{2m} / (1 - q^{2m}) = sum_{j>=1} m^3 q^{2mj}
    std::map<QSeries::Exponent, Integer> acc;
    for (QSeries::Exponent m = 1; 8 * m < prec; ++m) {
        const Integer cube = Integer(m) * m * m;
        for (QSeries::Exponent j = 1; 8 * m * j < prec; ++j) acc[8 * m * j] += cube;
    }
    for (const auto& [e, c] : acc) s.set_coeff(e, Rational(240 * c));
    return s;
}

}  // namespace shadowlab
