#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "shadowlab/rational.hpp"

namespace shadowlab {

/// Binary word of length <= 64; bit i is coordinate i.
using Word = std::uint64_t;

constexpr int kMaxCodeLength = 64;

inline int weight(Word w) { return __builtin_popcountll(w); }

/// Binary linear code given by generator rows, kept in the order supplied.
/// Construction checks that the rows are independent.
class BinaryCode {
public:
    BinaryCode() = default;
    /// Throws std::invalid_argument for n > 64, bits beyond n, or dependent rows.
    BinaryCode(int n, std::vector<Word> generators);

    int length() const { return n_; }
    int dimension() const { return static_cast<int>(gens_.size()); }
    const std::vector<Word>& generators() const { return gens_; }

    bool contains(Word w) const;
    /// All 2^k codewords in plain counter order. Throws if k > 28.
    std::vector<Word> codewords() const;

private:
    int n_ = 0;
    std::vector<Word> gens_;
};

/// Weight distribution A_0..A_n. Integer for codes and shadows; rational
/// values appear only for transforms of non-self-dual input.
struct WeightEnum {
    int n = 0;
    std::vector<Rational> counts;

    static WeightEnum zero(int n) { return WeightEnum{n, std::vector<Rational>(static_cast<std::size_t>(n + 1))}; }

    Rational at(int w) const;
    bool is_integral() const;
    /// Smallest weight with nonzero count; -1 if none.
    int min_weight() const;
    /// e.g. "x^8 + 14*x^4*y^4 + y^8".
    std::string to_string() const;

    friend bool operator==(const WeightEnum&, const WeightEnum&) = default;
};

/// Coefficients b_j of sum_j b_j g2^{(n-8j)/2} delta^j with g2 = x^2 + y^2,
/// g8 = x^8 + 14x^4y^4 + y^8, delta = g2^4 - g8 = 4x^2y^2(x^2 - y^2)^2.
struct GleasonPoly {
    int n = 0;
    std::vector<Rational> coeffs;

    friend bool operator==(const GleasonPoly&, const GleasonPoly&) = default;
};

bool is_self_dual(const BinaryCode& code);

WeightEnum weight_enumerator(const BinaryCode& code);

/// A word s with (g, s) = wt(g)/2 mod 2 for every generator g; the shadow is
/// code + s. Throws std::invalid_argument if the code is not self-dual.
Word shadow_rep(const BinaryCode& code);

WeightEnum shadow_enumerator(const BinaryCode& code);

/// 2^{-n/2} sum_w A_w (x+y)^{n-w} (x-y)^w.
WeightEnum macwilliams(const WeightEnum& w);

/// 2^{-n/2} sum_w (-1)^{w/2} A_w (x+y)^{n-w} (x-y)^w. Throws
/// std::invalid_argument if some odd weight has nonzero count.
WeightEnum shadow_transform(const WeightEnum& w);

/// Unique GleasonPoly whose enumerator starts A_0, A_2, ..., A_{2 floor(n/8)}
/// (only the even weights are passed). The system is triangular with pivot
/// 4^j at A_{2j}. Throws std::invalid_argument if n is odd or the count of
/// values is not floor(n/8) + 1.
GleasonPoly gleason_solve(int n, std::span<const Rational> even_counts);
/// Throws std::invalid_argument if n is odd or w is not in the span of the basis.
GleasonPoly gleason_decompose(const WeightEnum& w);
WeightEnum gleason_evaluate(const GleasonPoly& p);
/// Substitutes g2 -> 2xy (so delta -> -(x^4 - y^4)^2).
WeightEnum shadow_from_gleason(const GleasonPoly& p);

/// (1, -n/8) for even 8 <= n <= 22.
GleasonPoly extremal_enumerator(int n);

/// Shadow words of weight (n-16)/2 forced by A_4: 2^{(n-24)/2} d with
/// d = A_4 - n(22-n)/8. Requires even 16 <= n < 24. Throws std::domain_error
/// if d < 0 or d is not a multiple of 2^{(24-n)/2}.
Rational predict_code_defect(int n, const Integer& weight4_count);

struct CodeSplit {
    int r = 0;
    BinaryCode core;
};

/// C = C0 + z^r where r counts weight-2 codewords.
CodeSplit split_z(const BinaryCode& code);

BinaryCode code_direct_sum(const BinaryCode& a, const BinaryCode& b);

/// The double repetition code z^r.
BinaryCode repetition_power(int r);

/// "z", "e8", "d12", "e7^2", "d8^2", "d6^3", "d4^5", "g22". Throws
/// std::invalid_argument for unknown names.
BinaryCode code_catalog(std::string_view name);
/// The seven codes without weight-2 words.
const std::vector<std::string>& code_catalog_names();

}  // namespace shadowlab
