#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "shadowlab/lattice.hpp"
#include "shadowlab/qseries.hpp"
#include "shadowlab/scode.hpp"

namespace shadowlab {

/// L_C = { v / sqrt(2) : v in Z^n, v mod 2 in C }. The embedding stores the
/// integer vectors v with metric 1/2 in every coordinate. Throws
/// std::invalid_argument unless C is self-dual.
Lattice construction_a(const BinaryCode& code);

/// W(theta_Z(2t), theta'_Z(2t)) for a weight distribution W. For W_C this is
/// the theta series of L_C; for the shadow enumerator it is the series of
/// characteristic vectors of L_C, keyed by characteristic norm.
QSeries lift_enumerator(const WeightEnum& w, QSeries::Exponent prec);

/// Outcome of the Construction A checks. Unset optionals were not checked;
/// ok() requires every checked flag to hold.
struct LiftReport {
    std::string code_name;
    int rank = 0;

    // theta identity
    std::optional<bool> theta_agrees;
    QSeries::Exponent agreement_bound = 0;  ///< exponents below this agree
    std::optional<QSeries::Exponent> first_mismatch;
    std::optional<bool> norm2_relation;  ///< N_2 = 2n + 16 A_4
    std::int64_t norm2_count = 0;
    std::int64_t weight4_count = 0;

    // shadow identity
    std::optional<bool> shadow_agrees;
    std::int64_t min_char_norm = -1;
    int shadow_min_weight = -1;
    std::uint64_t char_count = 0;    ///< characteristic vectors at min_char_norm
    std::uint64_t shadow_count = 0;  ///< shadow words at shadow_min_weight
    /// char_count / shadow_count when the division is exact, else 0.
    std::uint64_t lift_multiplicity = 0;

    bool ok() const;
};

/// Compares the enumerated theta series of L_C with lift_enumerator(W_C)
/// below quarter-exponent prec, and checks the N_2 relation.
LiftReport verify_theta_identity(const BinaryCode& code, QSeries::Exponent prec, std::string name = {});

/// Checks that the smallest characteristic norm of L_C is twice the smallest
/// shadow weight of C, and that characteristic-vector counts up to
/// `max_cnorm` match lift_enumerator(shadow enumerator). A negative bound
/// means "the minimal characteristic norm".
LiftReport verify_shadow_identity(const BinaryCode& code, std::int64_t max_cnorm = -1, std::string name = {});

}  // namespace shadowlab
