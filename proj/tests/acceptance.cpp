// Acceptance run: prints one PASS/FAIL line per criterion and exits nonzero
// if any criterion fails or exceeds its time limit.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "shadowlab/lattice.hpp"
#include "shadowlab/lift.hpp"
#include "shadowlab/modular.hpp"
#include "shadowlab/scode.hpp"

using namespace shadowlab;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
    bool pass = true;
    std::string detail;
    std::vector<std::pair<std::string, double>> limits;  // (label, seconds) checked against timed sections
    std::vector<double> timed;

    void require(bool ok, const std::string& what) {
        if (!ok && pass) detail = what;
        pass = pass && ok;
    }
};

constexpr double kNoLimit = 0.0;

// Times `body` and records a limit for it; kNoLimit only reports the time.
void timed(Outcome& o, const std::string& label, double limit, const std::function<void()>& body) {
    const auto start = Clock::now();
    body();
    const double t = seconds_since(start);
    o.limits.emplace_back(label, limit);
    o.timed.push_back(t);
}

std::int64_t norm2(const Lattice& l) { return static_cast<std::int64_t>(enumerate_norms(l, 2).at(2)); }

Outcome extremal_table() {
    Outcome o;
    const std::vector<std::pair<int, long>> table{{8, 240},  {12, 264}, {14, 252}, {15, 240}, {16, 224}, {17, 204},
                                                  {18, 180}, {19, 152}, {20, 120}, {21, 84},  {22, 44},  {23, 0}};
    timed(o, "total", 1.0, [&] {
        for (const auto& [n, n2] : table)
            o.require(evaluate(extremal_theta(n), 12).coeff(8) == n2, "N2 mismatch at n=" + std::to_string(n));
    });
    return o;
}

Outcome catalog_enumeration() {
    Outcome o;
    timed(o, "total", 30.0, [&] {
        for (const auto& e : extremal_catalog()) {
            const NormCounts c = enumerate_norms(catalog(e.name), 4);
            o.require(c.at(1) == 0, e.name + " has norm-1 vectors");
            o.require(static_cast<std::int64_t>(c.at(2)) == e.norm2_count, e.name + " N2 mismatch");
        }
    });
    return o;
}

Outcome shadow_minimum() {
    Outcome o;
    auto check = [&](const std::string& name) {
        const Lattice l = catalog(name);
        const int n = l.rank();
        const std::int64_t m = min_characteristic_norm(l);
        o.require(m == n - 8, name + " minimal characteristic norm " + std::to_string(m));
        const std::uint64_t count = shadow_norm_counts(l, n - 8).at(n - 8);
        o.require(Rational(static_cast<unsigned long>(count)) == pow2(n - 11) * n,
                  name + " count " + std::to_string(count));
    };
    timed(o, "O23", 120.0, [&] { check("O23"); });
    timed(o, "others", 10.0, [&] {
        for (const auto& e : extremal_catalog())
            if (e.name != "O23") check(e.name);
    });
    return o;
}

Outcome rank16_defect() {
    Outcome o;
    timed(o, "total", kNoLimit, [&] {
        const Lattice l = direct_sum(catalog("E8"), catalog("E8"));
        o.require(norm2(l) == 480, "E8+E8 N2");
        const std::uint64_t zero = shadow_norm_counts(l, 0).at(0);
        o.require(zero == 1, "N'_0 = " + std::to_string(zero));
        o.require(predict_shadow_defect(16, 480) == Rational(static_cast<unsigned long>(zero)), "prediction");
    });
    return o;
}

Outcome congruences() {
    Outcome o;
    timed(o, "total", kNoLimit, [&] {
        for (const auto& e : extremal_catalog()) {
            const Lattice l = catalog(e.name);
            const std::int64_t n2 = norm2(l);
            o.require(check_congruence(l.rank(), n2, l.is_even()), e.name + " congruence");
            o.require((n2 - 2 * l.rank() * (23 - l.rank())) % 16 == 0, e.name + " mod 16");
        }
        const Lattice e8e8 = direct_sum(catalog("E8"), catalog("E8"));
        o.require(e8e8.is_even(), "E8+E8 even");
        o.require(check_congruence(16, norm2(e8e8), e8e8.is_even()), "E8+E8 even exception");
        o.require(!check_congruence(16, norm2(e8e8), false), "E8+E8 generic branch should fail");
    });
    return o;
}

Outcome code_extremality() {
    Outcome o;
    timed(o, "total", 5.0, [&] {
        for (const auto& name : code_catalog_names()) {
            const BinaryCode c = code_catalog(name);
            const int n = c.length();
            o.require(is_self_dual(c), name + " not self-dual");
            const WeightEnum w = weight_enumerator(c);
            o.require(w.at(4) * 8 == n * (22 - n), name + " A4");
            const WeightEnum s = shadow_enumerator(c);
            o.require(s.min_weight() == (n - 8) / 2, name + " shadow min weight");
            o.require(s.at((n - 8) / 2) == pow2((n - 14) / 2) * n, name + " shadow count");
        }
    });
    return o;
}

Outcome transform_coherence() {
    Outcome o;
    auto check = [&](const BinaryCode& c, const std::string& label) {
        const WeightEnum w = weight_enumerator(c);
        const WeightEnum s = shadow_enumerator(c);
        o.require(macwilliams(w) == w, label + " MacWilliams");
        o.require(shadow_transform(w) == s, label + " shadow transform");
        o.require(shadow_from_gleason(gleason_decompose(w)) == s, label + " Gleason shadow");
    };
    timed(o, "total", kNoLimit, [&] {
        for (const auto& name : code_catalog_names()) check(code_catalog(name), name);
        std::mt19937 rng(20240601);
        const auto& names = code_catalog_names();
        int made = 0;
        while (made < 20) {
            BinaryCode c = code_catalog(names[rng() % names.size()]);
            if (rng() % 2 == 0) c = code_direct_sum(c, code_catalog(names[rng() % names.size()]));
            if (c.length() > 24) continue;
            const int r = static_cast<int>(rng() % ((24 - c.length()) / 2 + 1));
            if (r > 0) c = code_direct_sum(c, repetition_power(r));
            check(c, "random sum of length " + std::to_string(c.length()));
            ++made;
        }
    });
    return o;
}

Outcome construction_a_identities() {
    Outcome o;
    timed(o, "total", 60.0, [&] {
        for (const auto& name : code_catalog_names()) {
            const BinaryCode c = code_catalog(name);
            const LiftReport t = verify_theta_identity(c, 40, name);
            o.require(t.theta_agrees == true, name + " theta identity");
            o.require(t.norm2_count == 2 * c.length() + 16 * t.weight4_count, name + " N2 relation");
            const LiftReport s = verify_shadow_identity(c, -1, name);
            o.require(s.shadow_agrees == true, name + " shadow identity");
        }
    });
    return o;
}

Outcome reduction_laws() {
    Outcome o;
    timed(o, "total", kNoLimit, [&] {
        for (const auto& name : {"E8", "D12", "E7^2", "A15", "A11E6"}) {
            const Lattice base = catalog(name);
            const std::int64_t n2 = norm2(base), m = min_characteristic_norm(base);
            for (int r = 1; r <= 3; ++r) {
                const std::string label = std::string(name) + "+Z^" + std::to_string(r);
                const Lattice l = direct_sum(base, integer_lattice(r));
                o.require(min_characteristic_norm(l) == m + r, label + " characteristic shift");
                const Reduction red = reduce(l);
                o.require(red.r == r, label + " r");
                o.require(red.core.rank() == base.rank() && red.core.determinant() == 1, label + " core rank");
                o.require(norm2(red.core) == n2, label + " core N2");
                o.require(min_characteristic_norm(red.core) == m, label + " core characteristic norm");
            }
        }
        for (const auto& name : {"e8", "d12", "e7^2", "d8^2", "d6^3"}) {
            const BinaryCode base = code_catalog(name);
            const WeightEnum w = weight_enumerator(base);
            const int m = shadow_enumerator(base).min_weight();
            for (int r = 1; r <= 3; ++r) {
                const std::string label = std::string(name) + "+z^" + std::to_string(r);
                const BinaryCode c = code_direct_sum(base, repetition_power(r));
                o.require(shadow_enumerator(c).min_weight() == m + r, label + " shadow shift");
                const CodeSplit sp = split_z(c);
                o.require(sp.r == r, label + " r");
                o.require(sp.core.length() == base.length() && weight_enumerator(sp.core) == w, label + " core");
                o.require(shadow_enumerator(sp.core).min_weight() == m, label + " core shadow");
            }
        }
    });
    return o;
}

Outcome oracle_round_trip() {
    Outcome o;
    timed(o, "total", kNoLimit, [&] {
        for (const auto& e : extremal_catalog()) {
            const Lattice l = catalog(e.name);
            const NormCounts c = enumerate_norms(l, 4);
            std::vector<Rational> lead;
            for (int k = 0; k <= l.rank() / 8; ++k) lead.emplace_back(static_cast<unsigned long>(c.at(k)));
            const QSeries back = evaluate(decompose(l.rank(), lead), 17);
            for (std::int64_t k = 0; k <= 4; ++k)
                o.require(back.coeff(4 * k) == Rational(static_cast<unsigned long>(c.at(k))),
                          e.name + " N" + std::to_string(k));
        }
        for (const auto& name : code_catalog_names()) {
            const WeightEnum w = weight_enumerator(code_catalog(name));
            o.require(gleason_evaluate(gleason_decompose(w)) == w, name + " Gleason round trip");
        }
    });
    return o;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"extremal N2 table", extremal_table},
        {"catalog enumeration to norm 4", catalog_enumeration},
        {"minimal characteristic norm and count", shadow_minimum},
        {"rank-16 shadow defect", rank16_defect},
        {"N2 congruence", congruences},
        {"extremal code enumerators", code_extremality},
        {"transform coherence", transform_coherence},
        {"Construction A identities", construction_a_identities},
        {"reduction laws", reduction_laws},
        {"oracle round trip", oracle_round_trip},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        std::ostringstream times;
        for (std::size_t k = 0; k < o.timed.size(); ++k) {
            const auto& [label, limit] = o.limits[k];
            char buf[96];
            if (limit > 0)
                std::snprintf(buf, sizeof buf, "%s%s %.2f s / %.0f s", k ? ", " : "", label.c_str(), o.timed[k], limit);
            else
                std::snprintf(buf, sizeof buf, "%s%s %.2f s", k ? ", " : "", label.c_str(), o.timed[k]);
            times << buf;
            if (limit > 0 && o.timed[k] > limit) {
                if (o.pass) o.detail = label + " over time limit";
                o.pass = false;
            }
        }
        if (!o.pass) ++failed;
        std::printf("%s criterion %zu: %s [%s]%s%s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                    times.str().c_str(), o.detail.empty() ? "" : " - ", o.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
