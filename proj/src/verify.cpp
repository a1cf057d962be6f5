#include <algorithm>
#include <chrono>
#include <functional>
#include <iomanip>
#include <map>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "shadowlab/lattice.hpp"
#include "shadowlab/lift.hpp"
#include "shadowlab/modular.hpp"
#include "shadowlab/report.hpp"
#include "shadowlab/scode.hpp"

namespace shadowlab {

namespace {

constexpr QSeries::Exponent kDefaultPrec = 100;
constexpr QSeries::Exponent kDefaultLiftPrec = 40;
constexpr std::int64_t kDefaultMaxNorm = 4;

using Clock = std::chrono::steady_clock;

std::string str(const Integer& v) { return v.get_str(); }
std::string str(std::int64_t v) { return std::to_string(v); }
std::string str(std::uint64_t v) { return std::to_string(v); }
std::string str(const Rational& v) { return to_string(v); }
std::string str(bool v) { return v ? "true" : "false"; }
std::string str(const std::string& v) { return v; }

template <class Seq>
std::string join(const Seq& values) {
    std::string out;
    for (const auto& v : values) out += (out.empty() ? "" : ", ") + str(v);
    return out;
}

class Builder {
public:
    explicit Builder(Report& r) : report_(r) {}

    void add(std::string name, std::string anchor, std::string expected, std::string source, std::string computed) {
        const double ms = std::chrono::duration<double, std::milli>(Clock::now() - mark_).count();
        const bool pass = expected == computed;
        report_.records.push_back(
            {std::move(name), std::move(anchor), std::move(expected), std::move(source), std::move(computed), pass, ms});
        mark_ = Clock::now();
    }
    /// Restarts the clock; the time since goes to the next record.
    void start() { mark_ = Clock::now(); }

private:
    Report& report_;
    Clock::time_point mark_ = Clock::now();
};

void theorem1(Builder& b, const VerifyOptions& opt) {
    const auto prec = opt.prec.value_or(kDefaultPrec);
    const auto max_norm = opt.max_norm.value_or(kDefaultMaxNorm);
    for (const auto& entry : extremal_catalog()) {
        const std::string p = "theorem1/" + entry.name + "/";
        const int n = entry.rank;
        b.start();
        const Lattice l = catalog(entry.name);
        b.add(p + "unimodular", "integral unimodular lattice", "1", "closed-form", str(l.determinant()));

        const auto counts = enumerate_norms(l, std::max<std::int64_t>(max_norm, 2));
        b.add(p + "N1", "no vectors of norm 1", "0", "closed-form", str(counts.at(1)));
        b.add(p + "N2", "extremal N2 = 2n(23-n)", str(extremal_norm2_count(n)), "closed-form", str(counts.at(2)));
        b.add(p + "N2-table", "tabulated N2", str(entry.norm2_count), "table", str(counts.at(2)));

        b.start();
        const HeckePoly ext = extremal_theta(n);
        const QSeries theta = evaluate(ext, prec);
        std::vector<Rational> want, got;
        for (std::int64_t k = 0; k <= max_norm && 4 * k < prec; ++k) {
            want.push_back(theta.coeff(4 * k));
            got.emplace_back(static_cast<unsigned long>(counts.at(k)));
        }
        b.add(p + "theta", "extremal theta series", join(want), "closed-form", join(got));

        b.start();
        b.add(p + "root-system", "tabulated root system", entry.root_system, "table", root_system(l));

        b.start();
        const std::int64_t cmin = min_characteristic_norm(l);
        b.add(p + "shadow-min", "characteristic norms are at least n-8", str(std::int64_t{n - 8}), "closed-form",
              str(cmin));

        const std::int64_t cbound = std::min<std::int64_t>(n, prec - 1);
        const auto shadow = shadow_norm_counts(l, cbound);
        b.add(p + "shadow-count", "N'(n-8) = 2^(n-11) n", str(pow2(n - 11) * n), "closed-form",
              str(Rational(static_cast<unsigned long>(shadow.at(n - 8)))));

        const QSeries predicted = shadow_series(ext, cbound + 1);
        std::vector<std::string> want_s, got_s;
        for (std::int64_t k = 0; k <= cbound; ++k) {
            const Rational w = predicted.coeff(k);
            const auto g = shadow.at(k);
            if (w != 0) want_s.push_back(str(k) + ":" + str(w));
            if (g != 0) got_s.push_back(str(k) + ":" + str(g));
        }
        b.add(p + "shadow-series", "shadow series P(theta'_Z, theta_E8)", join(want_s), "closed-form", join(got_s));

        if (n >= 16) {
            b.start();
            const Rational defect = predict_shadow_defect(n, Integer(static_cast<unsigned long>(counts.at(2))));
            b.add(p + "shadow-defect", "N'(n-16) = 2^(n-24) (N2 - 2n(23-n))", str(defect), "closed-form",
                  str(Rational(static_cast<unsigned long>(shadow.at(n - 16)))));
        }
    }

    // the even rank-16 lattices, where the defect is the zero vector
    for (const std::string name : {"E8^2", "D16+"}) {
        const std::string p = "theorem1/" + name + "/";
        b.start();
        const Lattice l = catalog(name);
        const auto counts = enumerate_norms(l, 2);
        const auto shadow = shadow_norm_counts(l, 0);
        b.add(p + "N2", "even rank-16 lattices have N2 = 480", "480", "closed-form", str(counts.at(2)));
        b.add(p + "shadow-defect", "N'(n-16) = 2^(n-24) (N2 - 2n(23-n))",
              str(predict_shadow_defect(16, Integer(static_cast<unsigned long>(counts.at(2))))), "closed-form",
              str(Rational(static_cast<unsigned long>(shadow.at(0)))));
    }
}

void theorem1a(Builder& b, const VerifyOptions&) {
    for (const auto& name : code_catalog_names()) {
        const std::string p = "theorem1a/" + name + "/";
        b.start();
        const BinaryCode c = code_catalog(name);
        const int n = c.length();
        b.add(p + "self-dual", "self-dual code", "true", "closed-form", str(is_self_dual(c)));

        const WeightEnum w = weight_enumerator(c);
        b.add(p + "A2", "no words of weight 2", "0", "closed-form", str(w.at(2)));
        b.add(p + "A4", "A4 = n(22-n)/8", str(Integer(n * (22 - n) / 8)), "closed-form", str(w.at(4)));

        const GleasonPoly ext = extremal_enumerator(n);
        b.add(p + "weight-enumerator", "extremal weight enumerator", gleason_evaluate(ext).to_string(), "closed-form",
              w.to_string());
        b.add(p + "macwilliams", "MacWilliams identity for a self-dual code", w.to_string(), "closed-form",
              macwilliams(w).to_string());

        b.start();
        const WeightEnum s = shadow_enumerator(c);
        b.add(p + "shadow-min", "shadow weights are at least (n-8)/2", str(std::int64_t{(n - 8) / 2}), "closed-form",
              str(std::int64_t{s.min_weight()}));
        b.add(p + "shadow-count", "shadow count 2^((n-14)/2) n", str(pow2((n - 14) / 2) * n), "closed-form",
              str(s.at((n - 8) / 2)));
        b.add(p + "shadow-enumerator", "extremal shadow enumerator", shadow_from_gleason(ext).to_string(), "closed-form",
              s.to_string());
        b.add(p + "shadow-transform", "shadow enumerator from W_C", shadow_transform(w).to_string(), "closed-form",
              s.to_string());
    }
}

const std::map<std::string, std::string>& code_to_lattice() {
    static const std::map<std::string, std::string> m{{"e8", "E8"},     {"d12", "D12"},   {"e7^2", "E7^2"},
                                                      {"d8^2", "D8^2"}, {"d6^3", "D6^3"}, {"d4^5", "D4^5"},
                                                      {"g22", "A1^22"}};
    return m;
}

void construction_a_suite(Builder& b, const VerifyOptions& opt) {
    const auto prec = opt.prec.value_or(kDefaultLiftPrec);
    for (const auto& name : code_catalog_names()) {
        const std::string p = "construction-a/" + name + "/";
        b.start();
        const BinaryCode c = code_catalog(name);
        const Lattice l = construction_a(c);
        b.add(p + "unimodular", "L_C is unimodular", "1", "closed-form", str(l.determinant()));

        b.start();
        const LiftReport t = verify_theta_identity(c, prec, name);
        b.add(p + "theta", "theta_L = W_C(theta_Z(2t), theta'_Z(2t))", "agrees below " + str(std::int64_t{prec}),
              "enumeration", "agrees below " + str(std::int64_t{t.agreement_bound}));
        b.add(p + "N2", "N2(L_C) = 2n + 16 A4", str(std::int64_t{2 * c.length() + 16 * t.weight4_count}), "closed-form",
              str(t.norm2_count));

        b.start();
        const LiftReport s = verify_shadow_identity(c, -1, name);
        b.add(p + "shadow-min", "shadow of L_C is Construction A of the shadow of C",
              str(std::int64_t{2 * s.shadow_min_weight}), "enumeration", str(s.min_char_norm));
        b.add(p + "shadow-lift", "characteristic vectors over minimal shadow words",
              str(pow2(s.shadow_min_weight) * Rational(static_cast<unsigned long>(s.shadow_count))), "enumeration",
              str(Rational(static_cast<unsigned long>(s.char_count))));
        b.add(p + "shadow-series", "shadow series of L_C from W'_C", "true", "enumeration", str(*s.shadow_agrees));

        b.start();
        const auto& target = code_to_lattice().at(name);
        const auto it = std::find_if(extremal_catalog().begin(), extremal_catalog().end(),
                                     [&](const CatalogEntry& e) { return e.name == target; });
        b.add(p + "root-system", "lattice of the matching catalog entry", it->root_system, "table", root_system(l));
    }
}

void congruence(Builder& b, const VerifyOptions&) {
    for (const auto& entry : extremal_catalog()) {
        const std::string p = "congruence/" + entry.name + "/";
        b.start();
        const Lattice l = catalog(entry.name);
        const Integer n2(static_cast<unsigned long>(enumerate_norms(l, 2).at(2)));
        b.add(p + "mod-2^(25-n)", "N2 = 2n(23-n) mod 2^(25-n)", "true", "closed-form",
              str(check_congruence(entry.rank, n2, l.is_even())));
        const Integer excess = n2 - extremal_norm2_count(entry.rank);
        b.add(p + "mod-16", "N2 - 2n(23-n) is a multiple of 16", "0", "observation", str(Integer(excess % 16)));
    }
    for (const std::string name : {"E8^2", "D16+"}) {
        const std::string p = "congruence/" + name + "/";
        b.start();
        const Lattice l = catalog(name);
        const Integer n2(static_cast<unsigned long>(enumerate_norms(l, 2).at(2)));
        b.add(p + "even", "even lattice", "true", "closed-form", str(l.is_even()));
        b.add(p + "generic", "N2 = 2n(23-n) mod 2^(25-n) fails for N2 = 480", "false", "closed-form",
              str(check_congruence(16, n2, false)));
        b.add(p + "even-exception", "even rank-16 lattices are exempt", "true", "closed-form",
              str(check_congruence(16, n2, l.is_even())));
    }
}

}  // namespace

bool Report::pass() const {
    return std::all_of(records.begin(), records.end(), [](const CheckRecord& r) { return r.pass; });
}

std::string Report::to_json(bool with_timing) const {
    auto sorted = records;
    std::stable_sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) { return a.name < b.name; });
    nlohmann::json checks = nlohmann::json::array();
    std::size_t passed = 0;
    for (const auto& r : sorted) {
        nlohmann::json j{{"name", r.name},         {"anchor", r.anchor}, {"expected", r.expected},
                         {"source", r.source},     {"computed", r.computed}, {"pass", r.pass}};
        if (with_timing) {
            std::ostringstream ms;
            ms << std::fixed << std::setprecision(3) << r.runtime_ms;
            j["runtime_ms"] = ms.str();
        }
        checks.push_back(std::move(j));
        passed += r.pass ? 1 : 0;
    }
    nlohmann::json out{{"command", command},
                       {"pass", pass()},
                       {"checks", std::move(checks)},
                       {"summary", {{"passed", passed}, {"total", records.size()}}}};
    return out.dump(2) + "\n";
}

std::string Report::to_text(bool with_timing) const {
    auto sorted = records;
    std::stable_sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) { return a.name < b.name; });
    std::ostringstream os;
    std::size_t passed = 0;
    for (const auto& r : sorted) {
        os << (r.pass ? "PASS " : "FAIL ") << r.name;
        if (with_timing) os << " (" << std::fixed << std::setprecision(1) << r.runtime_ms << " ms)";
        os << "\n";
        if (!r.pass) os << "     expected: " << r.expected << "\n     computed: " << r.computed << "\n";
        passed += r.pass ? 1 : 0;
    }
    os << passed << "/" << records.size() << " checks passed\n";
    return os.str();
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"theorem1", "theorem1a", "construction-a", "congruence", "all"};
    return names;
}

Report run_suite(std::string_view suite, const VerifyOptions& options) {
    using Suite = std::function<void(Builder&, const VerifyOptions&)>;
    static const std::vector<std::pair<std::string, Suite>> suites{{"theorem1", theorem1},
                                                                   {"theorem1a", theorem1a},
                                                                   {"construction-a", construction_a_suite},
                                                                   {"congruence", congruence}};
    Report report;
    report.command = "verify " + std::string(suite);
    Builder b(report);
    bool found = false;
    for (const auto& [name, run] : suites) {
        if (suite == name || suite == "all") {
            run(b, options);
            found = true;
        }
    }
    if (!found) throw std::invalid_argument("unknown suite '" + std::string(suite) + "'");
    return report;
}

}  // namespace shadowlab
