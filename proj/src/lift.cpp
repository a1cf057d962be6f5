#include "shadowlab/lift.hpp"

#include <stdexcept>

#include "shadowlab/linalg.hpp"

namespace shadowlab {

namespace {

QSeries enumerated_series(const NormCounts& counts, std::int64_t scale, QSeries::Exponent prec) {
    QSeries s(prec);
    for (const auto& [k, c] : counts.counts)
        if (scale * k < prec) s.set_coeff(scale * k, Rational(static_cast<unsigned long>(c)));
    return s;
}

std::optional<QSeries::Exponent> first_difference(const QSeries& a, const QSeries& b, QSeries::Exponent prec) {
    for (QSeries::Exponent e = 0; e < prec; ++e)
        if (a.coeff(e) != b.coeff(e)) return e;
    return std::nullopt;
}

}  // namespace

Lattice construction_a(const BinaryCode& code) {
    if (!is_self_dual(code)) throw std::invalid_argument("Construction A needs a self-dual code");
    const auto n = static_cast<std::size_t>(code.length());
    Matrix<Integer> stack;
    for (Word g : code.generators()) {
        std::vector<Integer> row(n);
        for (std::size_t j = 0; j < n; ++j) row[j] = static_cast<int>((g >> j) & 1u);
        stack.push_back(std::move(row));
    }
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Integer> row(n);
        row[i] = 2;
        stack.push_back(std::move(row));
    }
    const auto h = linalg::hermite_normal_form(std::move(stack));
    RatMatrix basis(h.size(), std::vector<Rational>(n));
    for (std::size_t i = 0; i < h.size(); ++i)
        for (std::size_t j = 0; j < n; ++j) basis[i][j] = Rational(h[i][j]);
    Lattice l = Lattice::from_basis(std::move(basis), std::vector<Rational>(n, Rational(1, 2)));
    if (l.determinant() != 1) throw std::logic_error("Construction A of a self-dual code is not unimodular");
    return l;
}

QSeries lift_enumerator(const WeightEnum& w, QSeries::Exponent prec) {
    if (prec <= 0) throw std::invalid_argument("precision must be positive");
    const QSeries::Exponent half = prec / 2 + 1;
    const QSeries even = theta_z(half).dilated(2).truncated(prec);
    const QSeries odd = theta_z_shadow(half).dilated(2).truncated(prec);
    std::vector<QSeries> even_pow{QSeries::constant(1, prec)};
    std::vector<QSeries> odd_pow{QSeries::constant(1, prec)};
    for (int i = 1; i <= w.n; ++i) {
        even_pow.push_back(even_pow.back() * even);
        odd_pow.push_back(odd_pow.back() * odd);
    }
    QSeries total(prec);
    for (int k = 0; k <= w.n; ++k) {
        const Rational a = w.at(k);
        if (a == 0) continue;
        total += a * (even_pow[static_cast<std::size_t>(w.n - k)] * odd_pow[static_cast<std::size_t>(k)]);
    }
    return total;
}

bool LiftReport::ok() const {
    for (const auto& flag : {theta_agrees, norm2_relation, shadow_agrees})
        if (flag && !*flag) return false;
    return true;
}

LiftReport verify_theta_identity(const BinaryCode& code, QSeries::Exponent prec, std::string name) {
    if (prec <= 0) throw std::invalid_argument("precision must be positive");
    const Lattice l = construction_a(code);
    LiftReport r;
    r.code_name = std::move(name);
    r.rank = l.rank();

    const WeightEnum w = weight_enumerator(code);
    const std::int64_t max_norm = std::max<std::int64_t>((prec - 1) / 4, 2);
    const NormCounts counts = enumerate_norms(l, max_norm);
    const QSeries lhs = enumerated_series(counts, 4, prec);
    const QSeries rhs = lift_enumerator(w, prec);
    r.first_mismatch = first_difference(lhs, rhs, prec);
    r.theta_agrees = !r.first_mismatch.has_value();
    r.agreement_bound = r.first_mismatch.value_or(prec);

    r.norm2_count = static_cast<std::int64_t>(counts.at(2));
    r.weight4_count = to_int64(w.at(4));
    r.norm2_relation = r.norm2_count == 2 * code.length() + 16 * r.weight4_count;
    return r;
}

LiftReport verify_shadow_identity(const BinaryCode& code, std::int64_t max_cnorm, std::string name) {
    const Lattice l = construction_a(code);
    LiftReport r;
    r.code_name = std::move(name);
    r.rank = l.rank();

    const WeightEnum s = shadow_enumerator(code);
    r.shadow_min_weight = s.min_weight();
    r.shadow_count = static_cast<std::uint64_t>(to_int64(s.at(r.shadow_min_weight)));
    r.min_char_norm = min_characteristic_norm(l);
    const std::int64_t bound = max_cnorm < 0 ? r.min_char_norm : max_cnorm;

    const NormCounts counts = shadow_norm_counts(l, bound);
    r.char_count = counts.at(r.min_char_norm);
    if (r.shadow_count != 0 && r.char_count % r.shadow_count == 0) r.lift_multiplicity = r.char_count / r.shadow_count;

    const QSeries lhs = enumerated_series(counts, 1, bound + 1);
    const QSeries rhs = lift_enumerator(s, bound + 1);
    const bool series_match = !first_difference(lhs, rhs, bound + 1).has_value();
    r.shadow_agrees = series_match && r.min_char_norm == 2 * r.shadow_min_weight;
    return r;
}

}  // namespace shadowlab
