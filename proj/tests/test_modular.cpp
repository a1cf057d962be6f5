#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "shadowlab/modular.hpp"

using namespace shadowlab;

namespace {

std::vector<Rational> rats(std::initializer_list<long> v) {
    std::vector<Rational> out;
    for (long x : v) out.emplace_back(x);
    return out;
}

Rational q(long a, long b) { return oracle::frac(a, b); }

}  // namespace

TEST_CASE("decompose examples") {
    const auto n23 = rats({1, 0, 0});
    CHECK(decompose(23, n23).coeffs == std::vector<Rational>{1, q(-23, 8), 0});
    const auto n1 = rats({1});
    CHECK(decompose(1, n1).coeffs == std::vector<Rational>{1});
    const auto n16 = rats({1, 0, 480});
    CHECK(decompose(16, n16).coeffs == std::vector<Rational>{1, -2, 1});
    const auto bad = rats({1, 0});
    CHECK_THROWS_AS(decompose(16, bad), std::invalid_argument);
    CHECK_THROWS_AS(decompose(0, n1), std::invalid_argument);
}

TEST_CASE("a_0 is the constant term and a_2 carries the N_2 excess") {
    for (int n = 16; n <= 23; ++n) {
        for (long n2 : {0L, 44L, 2L * n * (23 - n), 2L * n * (23 - n) + 512}) {
            const auto lead = rats({1, 0, n2});
            const HeckePoly p = decompose(n, lead);
            CHECK(p.coeffs[0] == 1);
            CHECK(p.coeffs[1] == q(-n, 8));
            CHECK(p.coeffs[2] == q(n2 - 2L * n * (23 - n), 256));
        }
    }
}

TEST_CASE("evaluate examples") {
    CHECK(evaluate(HeckePoly{8, {1, -1}}, 60) == theta_e8(60));
    CHECK(evaluate(HeckePoly{5, {1}}, 40) == qs_pow(theta_z(40), 5));
    CHECK(evaluate(HeckePoly{20, {1, 0, 0}}, 30) == qs_pow(theta_z(30), 20));
    const QSeries d12 = evaluate(HeckePoly{12, {1, q(-3, 2)}}, 13);
    CHECK(d12.coeff(0) == 1);
    CHECK(d12.coeff(4) == 0);
    CHECK(d12.coeff(8) == 264);
    CHECK(d12.coeff(12) == 2048);
}

TEST_CASE("round trip on random leading counts") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<long> dist(0, 1000);
    for (int n = 1; n <= 30; ++n) {
        std::vector<Rational> lead{1};
        for (int j = 1; j <= n / 8; ++j) lead.emplace_back(dist(rng));
        const HeckePoly p = decompose(n, lead);
        const QSeries s = evaluate(p, 4 * (n / 8) + 1);
        for (std::size_t k = 0; k < lead.size(); ++k) CHECK(s.coeff(4 * static_cast<long>(k)) == lead[k]);
        CHECK(decompose(n, s) == p);
    }
}

TEST_CASE("shadow_series examples") {
    CHECK(shadow_series(HeckePoly{8, {1, -1}}, 40) == theta_e8(40));
    const QSeries z = shadow_series(HeckePoly{1, {1}}, 30);
    CHECK(z == theta_z_shadow(30));
    CHECK(z.coeff(1) == 2);
    const QSeries d12 = shadow_series(HeckePoly{12, {1, q(-3, 2)}}, 20);
    CHECK(d12.lowest_exponent() == 4);
    CHECK(d12.coeff(4) == 24);
}

TEST_CASE("shadow support lies in n mod 8") {
    std::mt19937 rng(99);
    std::uniform_int_distribution<long> dist(0, 600);
    for (int n = 1; n <= 26; ++n) {
        std::vector<Rational> lead{1};
        for (int j = 1; j <= n / 8; ++j) lead.emplace_back(2 * dist(rng));
        const QSeries s = shadow_series(decompose(n, lead), 80);
        for (const auto& [e, c] : s.terms()) CHECK((e - n) % 8 == 0);
    }
}

TEST_CASE("extremal theta series") {
    const std::vector<std::pair<int, long>> table{{8, 240},   {12, 264}, {14, 252}, {15, 240}, {16, 224}, {17, 204},
                                                  {18, 180},  {19, 152}, {20, 120}, {21, 84},  {22, 44},  {23, 0}};
    for (const auto& [n, n2] : table) {
        const QSeries t = evaluate(extremal_theta(n), 13);
        CHECK(t.coeff(0) == 1);
        CHECK(t.coeff(4) == 0);
        CHECK(t.coeff(8) == n2);
        CHECK(extremal_norm2_count(n) == n2);
    }
    for (int n = 8; n <= 23; ++n) {
        const HeckePoly p = extremal_theta(n);
        CHECK(p.coeffs.size() == static_cast<std::size_t>(n / 8 + 1));
        const QSeries s = shadow_series(p, n + 1);
        CHECK(s.lowest_exponent() == n - 8);
        CHECK(s.coeff(n - 8) == pow2(n - 11) * n);
    }
    CHECK(shadow_series(extremal_theta(23), 16).coeff(15) == 94208);
    CHECK_THROWS_AS(extremal_theta(7), std::invalid_argument);
    CHECK_THROWS_AS(extremal_theta(24), std::invalid_argument);
}

TEST_CASE("shadow defect") {
    CHECK(predict_shadow_defect(16, 480) == 1);
    CHECK(predict_shadow_defect(22, 44) == 0);
    CHECK(predict_shadow_defect(20, 120 + 32) == 2);
    CHECK_THROWS_AS(predict_shadow_defect(20, 100), std::domain_error);
    CHECK_THROWS_AS(predict_shadow_defect(15, 240), std::invalid_argument);
    CHECK_THROWS_AS(predict_shadow_defect(24, 0), std::invalid_argument);
    // agrees with the shadow series of the decomposition at exponent n-16
    for (int n = 16; n <= 23; ++n) {
        const long n2 = 2L * n * (23 - n) + (1L << (25 - n > 0 ? 25 - n : 1));
        const auto lead = rats({1, 0, n2});
        const QSeries s = shadow_series(decompose(n, lead), n - 15);
        CHECK(s.coeff(n - 16) == predict_shadow_defect(n, n2));
    }
}

TEST_CASE("N2 congruence") {
    CHECK(check_congruence(17, 204, false));
    CHECK(check_congruence(16, 480, true));
    CHECK_FALSE(check_congruence(16, 480, false));
    CHECK(check_congruence(20, 120 + 32, false));
    CHECK_FALSE(check_congruence(20, 120 + 16, false));
    CHECK(check_congruence(30, 2, false));
    CHECK_FALSE(check_congruence(30, 3, false));
    // the congruence says the defect is even: characteristic vectors pair up as +-v
    for (int n = 16; n <= 23; ++n)
        for (long extra = 0; extra < 600; extra += 2) {
            const long n2 = 2L * n * (23 - n) + extra;
            CHECK(check_congruence(n, n2, false) == is_integer(predict_shadow_defect(n, n2) / 2));
        }
}

TEST_CASE("minimum precision") {
    CHECK(minimum_precision(7) == 1);
    CHECK(minimum_precision(8) == 5);
    CHECK(minimum_precision(23) == 9);
}
