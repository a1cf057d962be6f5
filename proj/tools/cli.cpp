#include "cli.hpp"

#include <filesystem>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "shadowlab/io.hpp"
#include "shadowlab/lattice.hpp"
#include "shadowlab/modular.hpp"
#include "shadowlab/report.hpp"
#include "shadowlab/scode.hpp"

namespace shadowlab::cli {

namespace {

using nlohmann::json;

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

bool is_file(const std::string& target) {
    std::error_code ec;
    return std::filesystem::is_regular_file(target, ec);
}

Lattice load_lattice(const std::string& target) {
    if (is_file(target)) return io::parse_gram(io::read_file(target));
    return catalog(target);
}

BinaryCode load_code(const std::string& target) {
    if (is_file(target)) return io::parse_generator_matrix(io::read_file(target));
    return code_catalog(target);
}

json counts_json(const NormCounts& c) {
    json j = json::object();
    for (const auto& [k, v] : c.counts) j[std::to_string(k)] = v;
    return j;
}

std::string counts_text(const NormCounts& c, const std::string& label) {
    std::string out;
    for (const auto& [k, v] : c.counts) out += (out.empty() ? "" : " ") + label + std::to_string(k) + "=" + std::to_string(v);
    return out.empty() ? "(none)" : out;
}

json rationals_json(const std::vector<Rational>& v) {
    json j = json::array();
    for (const auto& x : v) j.push_back(to_string(x));
    return j;
}

std::string rationals_text(const std::vector<Rational>& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + to_string(v[i]);
    return out + ")";
}

json series_json(const QSeries& s) {
    json j = json::object();
    for (const auto& [e, c] : s.terms()) j[std::to_string(e)] = to_string(c);
    return j;
}

json weights_json(const WeightEnum& w) {
    json j = json::object();
    for (int k = 0; k <= w.n; ++k)
        if (w.at(k) != 0) j[std::to_string(k)] = to_string(w.at(k));
    return j;
}

std::vector<Rational> parse_values(const std::vector<std::string>& raw) {
    std::vector<Rational> out;
    for (const auto& s : raw) {
        try {
            out.push_back(parse_rational(s));
        } catch (const std::invalid_argument&) {
            throw UsageError("not a number: '" + s + "'");
        }
    }
    return out;
}

int lattice_info(const std::string& target, std::int64_t max_norm, bool as_json, std::ostream& out) {
    Lattice l;
    try {
        l = load_lattice(target);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    } catch (const std::domain_error& e) {
        throw UsageError(e.what());
    }
    if (!l.is_positive_definite()) throw UsageError("Gram matrix is not positive definite");
    if (max_norm < 0) throw UsageError("--max-norm must be non-negative");

    const Integer det = l.determinant();
    const NormCounts counts = enumerate_norms(l, max_norm);
    const Reduction red = reduce(l);
    json j{{"target", target},
           {"rank", l.rank()},
           {"determinant", det.get_str()},
           {"even", l.is_even()},
           {"unimodular", det == 1},
           {"norm1_split", red.r},
           {"root_system", root_system(l)},
           {"norm_counts", counts_json(counts)},
           {"max_norm", max_norm}};
    std::int64_t cmin = -1;
    NormCounts shadow;
    if (det == 1) {
        cmin = min_characteristic_norm(l);
        shadow = shadow_norm_counts(l, cmin);
        j["min_characteristic_norm"] = cmin;
        j["shadow_counts"] = counts_json(shadow);
    } else {
        j["min_characteristic_norm"] = nullptr;
        j["shadow_counts"] = nullptr;
    }
    if (as_json) {
        out << j.dump(2) << "\n";
        return kOk;
    }
    const std::string rs = root_system(l);
    out << "lattice: " << target << "\n"
        << "rank: " << l.rank() << "\n"
        << "determinant: " << det << "\n"
        << "parity: " << (l.is_even() ? "even" : "odd") << "\n"
        << "norm-1 split: Z^" << red.r << " + rank " << red.core.rank() << "\n"
        << "root system: " << (rs.empty() ? "(none)" : rs) << "\n"
        << "norm counts (<= " << max_norm << "): " << counts_text(counts, "N") << "\n";
    if (det == 1)
        out << "min characteristic norm: " << cmin << "\n"
            << "characteristic counts: " << counts_text(shadow, "N'") << "\n";
    return kOk;
}

int code_info(const std::string& target, bool as_json, std::ostream& out) {
    BinaryCode c;
    try {
        c = load_code(target);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    const WeightEnum w = weight_enumerator(c);
    const bool sd = is_self_dual(c);
    json j{{"target", target},
           {"length", c.length()},
           {"dimension", c.dimension()},
           {"self_dual", sd},
           {"weight_enumerator", w.to_string()},
           {"weight_counts", weights_json(w)}};
    WeightEnum s;
    GleasonPoly g;
    if (sd) {
        s = shadow_enumerator(c);
        g = gleason_decompose(w);
        j["shadow_enumerator"] = s.to_string();
        j["shadow_counts"] = weights_json(s);
        j["shadow_min_weight"] = s.min_weight();
        j["gleason"] = rationals_json(g.coeffs);
    } else {
        j["shadow_enumerator"] = nullptr;
        j["shadow_counts"] = nullptr;
        j["shadow_min_weight"] = nullptr;
        j["gleason"] = nullptr;
    }
    if (as_json) {
        out << j.dump(2) << "\n";
        return kOk;
    }
    out << "code: " << target << "\n"
        << "length: " << c.length() << ", dimension: " << c.dimension() << "\n"
        << "self-dual: " << (sd ? "yes" : "no") << "\n"
        << "W: " << w.to_string() << "\n";
    if (sd)
        out << "W': " << s.to_string() << "\n"
            << "shadow min weight: " << s.min_weight() << " (count " << to_string(s.at(s.min_weight())) << ")\n"
            << "Gleason coefficients: " << rationals_text(g.coeffs) << "\n";
    return kOk;
}

int decompose_theta(int n, const std::vector<Rational>& values, QSeries::Exponent prec, bool as_json, std::ostream& out) {
    if (n < 1) throw UsageError("--n must be positive");
    const std::size_t need = static_cast<std::size_t>(n / 8 + 1);
    if (values.size() < need)
        throw UsageError("rank " + std::to_string(n) + " needs N_0..N_" + std::to_string(need - 1) + " (" +
                         std::to_string(need) + " values)");
    const HeckePoly p = decompose(n, std::span<const Rational>(values.data(), need));
    const auto eval_prec = std::max<QSeries::Exponent>(prec, 4 * static_cast<QSeries::Exponent>(values.size() - 1) + 1);
    const QSeries theta = evaluate(p, eval_prec);
    std::vector<std::string> mismatches;
    for (std::size_t k = need; k < values.size(); ++k)
        if (theta.coeff(4 * static_cast<QSeries::Exponent>(k)) != values[k])
            mismatches.push_back("N_" + std::to_string(k) + ": given " + to_string(values[k]) + ", implied " +
                                 to_string(theta.coeff(4 * static_cast<QSeries::Exponent>(k))));
    const QSeries shadow = shadow_series(p, prec);
    const QSeries theta_out = theta.truncated(prec);
    if (as_json) {
        json j{{"n", n},
               {"coefficients", rationals_json(p.coeffs)},
               {"theta", series_json(theta_out)},
               {"shadow", series_json(shadow)},
               {"prec", prec},
               {"consistent", mismatches.empty()},
               {"mismatches", mismatches}};
        out << j.dump(2) << "\n";
    } else {
        out << "coefficients: " << rationals_text(p.coeffs) << "\n"
            << "theta: " << theta_out.to_string() << "\n"
            << "shadow: " << shadow.to_string() << "\n";
        for (const auto& m : mismatches) out << "inconsistent " << m << "\n";
    }
    return mismatches.empty() ? kOk : kCheckFailed;
}

int decompose_enum(int n, const std::vector<Rational>& values, bool as_json, std::ostream& out) {
    if (n < 2 || n % 2 != 0) throw UsageError("--n must be even and positive for weight enumerators");
    const std::size_t need = static_cast<std::size_t>(n / 8 + 1);
    if (values.size() < need)
        throw UsageError("length " + std::to_string(n) + " needs A_0, A_2, ..., A_" + std::to_string(2 * (need - 1)) +
                         " (" + std::to_string(need) + " values)");
    if (values.size() > static_cast<std::size_t>(n / 2 + 1)) throw UsageError("too many values for this length");
    const GleasonPoly p = gleason_solve(n, std::span<const Rational>(values.data(), need));
    const WeightEnum w = gleason_evaluate(p);
    const WeightEnum s = shadow_from_gleason(p);
    std::vector<std::string> mismatches;
    for (std::size_t k = need; k < values.size(); ++k)
        if (w.at(static_cast<int>(2 * k)) != values[k])
            mismatches.push_back("A_" + std::to_string(2 * k) + ": given " + to_string(values[k]) + ", implied " +
                                 to_string(w.at(static_cast<int>(2 * k))));
    if (as_json) {
        json j{{"n", n},
               {"coefficients", rationals_json(p.coeffs)},
               {"weight_enumerator", w.to_string()},
               {"shadow_enumerator", s.to_string()},
               {"consistent", mismatches.empty()},
               {"mismatches", mismatches}};
        out << j.dump(2) << "\n";
    } else {
        out << "coefficients: " << rationals_text(p.coeffs) << "\n"
            << "W: " << w.to_string() << "\n"
            << "W': " << s.to_string() << "\n";
        for (const auto& m : mismatches) out << "inconsistent " << m << "\n";
    }
    return mismatches.empty() ? kOk : kCheckFailed;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Shadows of odd unimodular lattices and self-dual binary codes", "shadowlab"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "Expand all help");

    std::string target;
    bool as_json = false;
    bool timing = false;
    std::int64_t max_norm = 4;
    std::optional<std::int64_t> prec;
    std::optional<std::int64_t> verify_max_norm;
    std::string suite;
    int rank = 0;
    std::vector<std::string> theta_raw, enum_raw;

    auto* li = app.add_subcommand("lattice-info", "Invariants of a catalog lattice or a Gram file");
    li->add_option("target", target, "Catalog name (E8, D12, ..., O23, Z<n>, E8^2, D16+) or Gram file")->required();
    li->add_option("--max-norm", max_norm, "Largest norm to count")->capture_default_str();
    li->add_flag("--json", as_json, "JSON output");

    auto* ci = app.add_subcommand("code-info", "Weight enumerators of a catalog code or generator file");
    ci->add_option("target", target, "Catalog name (z, e8, d12, e7^2, d8^2, d6^3, d4^5, g22) or generator file")
        ->required();
    ci->add_flag("--json", as_json, "JSON output");

    auto* vf = app.add_subcommand("verify", "Run a verification suite");
    vf->add_option("suite", suite, "theorem1 | theorem1a | construction-a | congruence | all")
        ->required()
        ->check(CLI::IsMember(suite_names()));
    vf->add_option("--prec", prec, "Series precision in quarter-exponents");
    vf->add_option("--max-norm", verify_max_norm, "Largest lattice norm for theta comparisons");
    vf->add_flag("--json", as_json, "JSON report");
    vf->add_flag("--timing", timing, "Include per-check runtimes");

    auto* dc = app.add_subcommand("decompose", "Hecke or Gleason coefficients from leading counts");
    auto* theta_opt = dc->add_option("--theta", theta_raw, "N_0 N_1 ... (lattice norm counts)");
    auto* enum_opt = dc->add_option("--enum", enum_raw, "A_0 A_2 A_4 ... (even-weight counts)");
    theta_opt->excludes(enum_opt);
    dc->add_option("--n", rank, "Rank or code length")->required();
    dc->add_option("--prec", prec, "Series precision in quarter-exponents");
    dc->add_flag("--json", as_json, "JSON output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }

    try {
        if (*li) return lattice_info(target, max_norm, as_json, out);
        if (*ci) return code_info(target, as_json, out);
        if (*vf) {
            VerifyOptions opt;
            opt.prec = prec;
            opt.max_norm = verify_max_norm;
            if (prec && *prec <= 0) throw UsageError("--prec must be positive");
            if (verify_max_norm && *verify_max_norm < 2) throw UsageError("--max-norm must be at least 2");
            const Report r = run_suite(suite, opt);
            out << (as_json ? r.to_json(timing) : r.to_text(timing));
            return r.pass() ? kOk : kCheckFailed;
        }
        if (*dc) {
            const auto p = prec.value_or(100);
            if (p <= 0) throw UsageError("--prec must be positive");
            if (!theta_raw.empty()) return decompose_theta(rank, parse_values(theta_raw), p, as_json, out);
            if (!enum_raw.empty()) return decompose_enum(rank, parse_values(enum_raw), as_json, out);
            throw UsageError("decompose needs --theta or --enum");
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::runtime_error& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}

}  // namespace shadowlab::cli
