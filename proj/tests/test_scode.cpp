#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "shadowlab/scode.hpp"

using namespace shadowlab;

namespace {

WeightEnum from_ints(int n, std::vector<long> a) {
    WeightEnum w = WeightEnum::zero(n);
    for (std::size_t i = 0; i < a.size(); ++i) w.counts[i] = a[i];
    return w;
}

std::vector<std::uint64_t> as_u64(const WeightEnum& w) {
    std::vector<std::uint64_t> out;
    for (const auto& c : w.counts) out.push_back(to_int64(c));
    return out;
}

BinaryCode hamming8() { return code_catalog("e8"); }

BinaryCode padded(const BinaryCode& c, int r) { return r == 0 ? c : code_direct_sum(c, repetition_power(r)); }

}  // namespace

TEST_CASE("construction validates generators") {
    CHECK_NOTHROW(BinaryCode(2, {0b11}));
    CHECK_THROWS_AS(BinaryCode(2, {0b111}), std::invalid_argument);
    CHECK_THROWS_AS(BinaryCode(4, {0b0011, 0b1100, 0b1111}), std::invalid_argument);
    CHECK_THROWS_AS(BinaryCode(65, {}), std::invalid_argument);
    const BinaryCode c(4, {0b0011, 0b1100});
    CHECK(c.contains(0b1111));
    CHECK_FALSE(c.contains(0b0110));
    CHECK(c.codewords().size() == 4);
}

TEST_CASE("is_self_dual examples") {
    CHECK(is_self_dual(repetition_power(1)));
    CHECK(is_self_dual(hamming8()));
    CHECK_FALSE(is_self_dual(BinaryCode(4, {0b0011, 0b0110, 0b1100})));
    CHECK_FALSE(is_self_dual(BinaryCode(4, {0b0011, 0b0101})));
}

TEST_CASE("weight_enumerator examples") {
    CHECK(weight_enumerator(repetition_power(1)) == from_ints(2, {1, 0, 1}));
    CHECK(weight_enumerator(hamming8()) == from_ints(8, {1, 0, 0, 0, 14, 0, 0, 0, 1}));
    CHECK(weight_enumerator(hamming8()).to_string() == "x^8 + 14*x^4*y^4 + y^8");
    // z^{n/2} has enumerator (x^2 + y^2)^{n/2}: binomial counts at even weights
    for (int r = 1; r <= 8; ++r) {
        const WeightEnum w = weight_enumerator(repetition_power(r));
        long binom = 1;
        for (int i = 0; i <= r; ++i) {
            CHECK(w.at(2 * i) == binom);
            binom = binom * (r - i) / (i + 1);
        }
    }
}

TEST_CASE("shadow_rep examples") {
    const Word s = shadow_rep(repetition_power(1));
    CHECK((s == 0b01 || s == 0b10));
    CHECK(hamming8().contains(shadow_rep(hamming8())));
    const Word s2 = shadow_rep(repetition_power(2));
    CHECK(weight(s2) == 2);
    CHECK_THROWS_AS(shadow_rep(BinaryCode(4, {0b0011})), std::invalid_argument);
}

TEST_CASE("shadow_enumerator examples") {
    CHECK(shadow_enumerator(repetition_power(1)).to_string() == "2*x*y");
    CHECK(shadow_enumerator(hamming8()) == weight_enumerator(hamming8()));
    // 2^4 (xy)^7 [22 x^8 + 84 x^4 y^4 + 22 y^8]
    CHECK(shadow_enumerator(code_catalog("g22")) ==
          from_ints(22, {0, 0, 0, 0, 0, 0, 0, 16 * 22, 0, 0, 0, 16 * 84, 0, 0, 0, 16 * 22}));
    // z^r: every shadow word has weight r
    for (int r = 1; r <= 6; ++r) {
        const WeightEnum w = shadow_enumerator(repetition_power(r));
        CHECK(w.at(r) == pow2(r));
        CHECK(w.min_weight() == r);
    }
}

TEST_CASE("enumerators agree with exhaustive scans") {
    for (const auto& name : code_catalog_names()) {
        CAPTURE(name);
        const BinaryCode c = code_catalog(name);
        if (c.length() > 22) continue;
        CHECK(as_u64(weight_enumerator(c)) == oracle::scan_weights(c));
        if (c.length() <= 16) CHECK(as_u64(shadow_enumerator(c)) == oracle::scan_shadow(c));
    }
    const BinaryCode mixed = code_direct_sum(padded(hamming8(), 2), code_catalog("d12"));
    CHECK(as_u64(weight_enumerator(mixed)) == oracle::scan_weights(mixed));
}

TEST_CASE("macwilliams examples") {
    CHECK(macwilliams(from_ints(2, {1, 0, 1})) == from_ints(2, {1, 0, 1}));
    const WeightEnum e8 = weight_enumerator(hamming8());
    CHECK(macwilliams(e8) == e8);
    // the zero code of length 2 maps to (x + y)^2 / 2
    const WeightEnum x2 = from_ints(2, {1});
    WeightEnum half = WeightEnum::zero(2);
    half.counts = {Rational(1, 2), Rational(1), Rational(1, 2)};
    CHECK(macwilliams(x2) == half);
    CHECK_FALSE(macwilliams(x2) == x2);
    CHECK_FALSE(macwilliams(x2).is_integral());
}

TEST_CASE("shadow_transform examples") {
    CHECK(shadow_transform(from_ints(2, {1, 0, 1})).to_string() == "2*x*y");
    const WeightEnum e8 = weight_enumerator(hamming8());
    CHECK(shadow_transform(e8) == e8);
    CHECK(shadow_transform(from_ints(4, {1, 0, 2, 0, 1})) == from_ints(4, {0, 0, 4, 0, 0}));
    CHECK_THROWS_AS(shadow_transform(from_ints(3, {1, 1})), std::invalid_argument);
}

TEST_CASE("gleason decomposition") {
    for (int r = 1; r <= 10; ++r) {
        const GleasonPoly p = gleason_decompose(weight_enumerator(repetition_power(r)));
        CHECK(p.coeffs[0] == 1);
        for (std::size_t j = 1; j < p.coeffs.size(); ++j) CHECK(p.coeffs[j] == 0);
        const WeightEnum s = shadow_from_gleason(p);
        CHECK(s.at(r) == pow2(r));
    }
    CHECK(gleason_decompose(weight_enumerator(hamming8())) == GleasonPoly{8, {1, -1}});
    CHECK_THROWS_AS(gleason_decompose(from_ints(3, {1})), std::invalid_argument);
    CHECK_THROWS_AS(gleason_decompose(from_ints(4, {1, 0, 1})), std::invalid_argument);
    const std::vector<Rational> e8_lead{1, 0, 14};
    CHECK_THROWS_AS(gleason_solve(8, e8_lead), std::invalid_argument);
    const std::vector<Rational> e8_ok{1, 0};
    CHECK(gleason_solve(8, e8_ok) == GleasonPoly{8, {1, -1}});
}

TEST_CASE("extremal enumerators") {
    const std::vector<std::pair<int, long>> a4{{8, 14}, {10, 15}, {12, 15}, {14, 14}, {16, 12}, {18, 9}, {20, 5}, {22, 0}};
    for (const auto& [n, want] : a4) {
        CAPTURE(n);
        const GleasonPoly p = extremal_enumerator(n);
        CHECK(p.coeffs[0] == 1);
        CHECK(p.coeffs[1] == oracle::frac(-n, 8));
        const WeightEnum w = gleason_evaluate(p);
        CHECK(w.at(2) == 0);
        CHECK(w.at(4) == want);
        CHECK(w.at(4) == oracle::frac(n * (22 - n), 8));
        const WeightEnum s = shadow_from_gleason(p);
        CHECK(s.min_weight() == (n - 8) / 2);
        CHECK(s.at((n - 8) / 2) == pow2((n - 14) / 2) * n);
        // 2^{(n-14)/2} (xy)^{(n-8)/2} [n x^8 + (128 - 2n) x^4 y^4 + n y^8]
        CHECK(s.at((n - 8) / 2 + 4) == pow2((n - 14) / 2) * (128 - 2 * n));
        CHECK(s.at((n - 8) / 2 + 8) == pow2((n - 14) / 2) * n);
    }
    CHECK_THROWS_AS(extremal_enumerator(24), std::invalid_argument);
    CHECK_THROWS_AS(extremal_enumerator(9), std::invalid_argument);
}

TEST_CASE("predict_code_defect") {
    CHECK(predict_code_defect(16, 12) == 0);
    CHECK(predict_code_defect(16, 28) == 1);
    CHECK_THROWS_AS(predict_code_defect(18, 10), std::domain_error);
    CHECK_THROWS_AS(predict_code_defect(16, 11), std::domain_error);
    // e8 + e8 is doubly even: its shadow contains 0
    const BinaryCode e8e8 = code_direct_sum(hamming8(), hamming8());
    CHECK(weight_enumerator(e8e8).at(4) == 28);
    CHECK(shadow_enumerator(e8e8).at(0) == predict_code_defect(16, 28));
    // e8 + d12 has length 20 and A4 = 14 + 15; defect 2^-2 (29 - 5) = 6 words of weight 2
    const BinaryCode s = code_direct_sum(hamming8(), code_catalog("d12"));
    CHECK(weight_enumerator(s).at(4) == 29);
    CHECK(predict_code_defect(20, 29) == 6);
    CHECK(shadow_enumerator(s).at(2) == 6);
}

TEST_CASE("split_z examples") {
    const CodeSplit z3 = split_z(repetition_power(3));
    CHECK(z3.r == 3);
    CHECK(z3.core.length() == 0);
    const CodeSplit e8z = split_z(code_direct_sum(hamming8(), repetition_power(1)));
    CHECK(e8z.r == 1);
    CHECK(weight_enumerator(e8z.core) == weight_enumerator(hamming8()));
    const CodeSplit g = split_z(code_catalog("g22"));
    CHECK(g.r == 0);
    CHECK(g.core.length() == 22);
    // interleaved coordinates: z placed on coordinates {0, 5}
    const BinaryCode interleaved(6, {0b100001, 0b000110, 0b011000});
    const CodeSplit i = split_z(interleaved);
    CHECK(i.r == 3);
    CHECK(i.core.length() == 0);
}

TEST_CASE("reduction laws for codes") {
    for (const auto& name : code_catalog_names()) {
        const BinaryCode base = code_catalog(name);
        if (base.length() > 20) continue;
        const WeightEnum base_w = weight_enumerator(base);
        const int base_min = shadow_enumerator(base).min_weight();
        for (int r = 1; r <= 3; ++r) {
            CAPTURE(name);
            CAPTURE(r);
            const BinaryCode p = padded(base, r);
            CHECK(shadow_enumerator(p).min_weight() == base_min + r);
            const CodeSplit sp = split_z(p);
            CHECK(sp.r == r);
            CHECK(sp.core.length() == base.length());
            CHECK(is_self_dual(sp.core));
            CHECK(weight_enumerator(sp.core) == base_w);
        }
    }
}

TEST_CASE("direct sums") {
    const BinaryCode zz = code_direct_sum(repetition_power(1), repetition_power(1));
    CHECK(weight_enumerator(zz) == weight_enumerator(repetition_power(2)));
    CHECK(shadow_enumerator(zz) == from_ints(4, {0, 0, 4, 0, 0}));
    const BinaryCode e8e8 = code_direct_sum(hamming8(), hamming8());
    CHECK(e8e8.length() == 16);
    CHECK(shadow_enumerator(e8e8).at(0) == 1);
    const BinaryCode empty(0, {});
    CHECK(weight_enumerator(code_direct_sum(hamming8(), empty)) == weight_enumerator(hamming8()));
}

TEST_CASE("catalog invariants") {
    for (const auto& name : code_catalog_names()) {
        CAPTURE(name);
        const BinaryCode c = code_catalog(name);
        const int n = c.length();
        CHECK(is_self_dual(c));
        const WeightEnum w = weight_enumerator(c);
        CHECK(w.at(2) == 0);
        CHECK(w.at(4) == oracle::frac(n * (22 - n), 8));
        CHECK(gleason_decompose(w) == extremal_enumerator(n));
        const WeightEnum s = shadow_enumerator(c);
        CHECK(s.min_weight() == (n - 8) / 2);
        CHECK(s.at((n - 8) / 2) == pow2((n - 14) / 2) * n);
        // the all-ones word lies in every self-dual code; shadow weights are n/2 mod 4
        CHECK(c.contains((Word{1} << n) - 1));
        for (int k = 0; k <= n; ++k)
            if (s.at(k) != 0) CHECK((k - n / 2) % 4 == 0);
        for (int k = 0; k <= n; ++k) CHECK(w.at(k) == w.at(n - k));
    }
    CHECK(code_catalog("e8").length() == 8);
    CHECK(weight_enumerator(code_catalog("g22")).min_weight() == 0);
    CHECK(weight_enumerator(code_catalog("g22")).at(6) > 0);
    CHECK(weight_enumerator(code_catalog("d4^5")).at(4) == 5);
    CHECK_THROWS_AS(code_catalog("h24"), std::invalid_argument);
}

TEST_CASE("transform coherence over random padded sums") {
    std::mt19937 rng(2024);
    const auto& names = code_catalog_names();
    std::uniform_int_distribution<std::size_t> pick(0, names.size() - 1);
    int done = 0;
    while (done < 20) {
        BinaryCode c = code_catalog(names[pick(rng)]);
        if (c.length() <= 12 && rng() % 2 == 0) c = code_direct_sum(c, code_catalog(names[pick(rng)]));
        const int room = 24 - c.length();
        if (room < 0) continue;
        c = padded(c, static_cast<int>(rng() % (room / 2 + 1)));
        CAPTURE(c.length());
        const WeightEnum w = weight_enumerator(c);
        CHECK(macwilliams(w) == w);
        const WeightEnum s = shadow_enumerator(c);
        CHECK(shadow_transform(w) == s);
        CHECK(shadow_from_gleason(gleason_decompose(w)) == s);
        CHECK(gleason_evaluate(gleason_decompose(w)) == w);
        ++done;
    }
}

TEST_CASE("the shadow determines z^{n/2}") {
    // a self-dual code whose shadow enumerator is (2xy)^{n/2} has the enumerator of z^{n/2}
    for (int half = 1; half <= 10; ++half) {
        const int n = 2 * half;
        WeightEnum target = WeightEnum::zero(n);
        target.counts[static_cast<std::size_t>(half)] = pow2(half);
        std::vector<Rational> lead;
        const GleasonPoly pure{n, std::vector<Rational>(static_cast<std::size_t>(n / 8 + 1), 0)};
        GleasonPoly p = pure;
        p.coeffs[0] = 1;
        CHECK(shadow_from_gleason(p) == target);
        CHECK(gleason_evaluate(p) == weight_enumerator(repetition_power(half)));
        // any other admissible leading coefficients give a different shadow
        for (std::size_t j = 1; j < p.coeffs.size(); ++j) {
            GleasonPoly q = p;
            q.coeffs[j] = 1;
            CHECK_FALSE(shadow_from_gleason(q) == target);
        }
    }
}
