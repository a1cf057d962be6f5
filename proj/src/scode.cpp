#include "shadowlab/scode.hpp"

#include <algorithm>
#include <array>
#include <sstream>
#include <stdexcept>

#include "shadowlab/data.hpp"
#include "shadowlab/io.hpp"
#include "shadowlab/linalg.hpp"

namespace shadowlab {

namespace {

constexpr int kMaxSweepDimension = 28;

// Homogeneous polynomial of degree n in x, y stored by y-degree.
using Poly = std::vector<Rational>;

Poly poly_mul(const Poly& a, const Poly& b) {
    Poly c(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    }
    return c;
}

Poly poly_pow(const Poly& a, int e) {
    Poly r{Rational(1)};
    for (int i = 0; i < e; ++i) r = poly_mul(r, a);
    return r;
}

const Poly kXPlusY{1, 1};
const Poly kXMinusY{1, -1};
const Poly kG2{1, 0, 1};
const Poly kTwoXY{0, 2, 0};
const Poly kG8{1, 0, 0, 0, 14, 0, 0, 0, 1};

Poly delta() {
    Poly d = poly_pow(kG2, 4);
    for (std::size_t i = 0; i < kG8.size(); ++i) d[i] -= kG8[i];
    return d;
}

WeightEnum from_poly(int n, const Poly& p) {
    WeightEnum w = WeightEnum::zero(n);
    for (std::size_t i = 0; i < p.size() && i < w.counts.size(); ++i) w.counts[i] = p[i];
    return w;
}

// sum_w sign(w) A_w (x+y)^{n-w} (x-y)^w scaled by 2^{-n/2}
WeightEnum hadamard(const WeightEnum& w, bool shadow_sign) {
    if (w.n % 2 != 0) throw std::invalid_argument("transform needs even length");
    Poly total(static_cast<std::size_t>(w.n + 1));
    for (int k = 0; k <= w.n; ++k) {
        Rational a = w.at(k);
        if (a == 0) continue;
        if (shadow_sign) {
            if (k % 2 != 0) throw std::invalid_argument("shadow transform needs even weights only");
            if ((k / 2) % 2 != 0) a = -a;
        }
        Poly term = poly_mul(poly_pow(kXPlusY, w.n - k), poly_pow(kXMinusY, k));
        for (std::size_t i = 0; i < term.size(); ++i) total[i] += a * term[i];
    }
    const Rational scale = pow2(-(w.n / 2));
    for (auto& c : total) c *= scale;
    return from_poly(w.n, total);
}

std::vector<Poly> gleason_basis(int n, const Poly& g2_image, const Poly& delta_image) {
    std::vector<Poly> basis;
    for (int j = 0; j <= n / 8; ++j) basis.push_back(poly_mul(poly_pow(g2_image, (n - 8 * j) / 2), poly_pow(delta_image, j)));
    return basis;
}

WeightEnum gleason_eval_with(const GleasonPoly& p, const Poly& g2_image, const Poly& delta_image) {
    if (p.n % 2 != 0) throw std::invalid_argument("Gleason polynomial needs even length");
    if (p.coeffs.size() != static_cast<std::size_t>(p.n / 8 + 1))
        throw std::invalid_argument("Gleason polynomial of length " + std::to_string(p.n) + " needs " +
                                    std::to_string(p.n / 8 + 1) + " coefficients");
    const auto basis = gleason_basis(p.n, g2_image, delta_image);
    Poly total(static_cast<std::size_t>(p.n + 1));
    for (std::size_t j = 0; j < basis.size(); ++j)
        for (std::size_t i = 0; i < basis[j].size(); ++i) total[i] += p.coeffs[j] * basis[j][i];
    return from_poly(p.n, total);
}

struct XorBasis {
    std::array<Word, 64> by_top{};

    Word reduce(Word w) const {
        for (int b = 63; b >= 0 && w; --b)
            if (((w >> b) & 1u) && by_top[static_cast<std::size_t>(b)]) w ^= by_top[static_cast<std::size_t>(b)];
        return w;
    }
    bool insert(Word w) {
        w = reduce(w);
        if (w == 0) return false;
        by_top[static_cast<std::size_t>(63 - __builtin_clzll(w))] = w;
        return true;
    }
};

void require_self_dual(const BinaryCode& code) {
    if (!is_self_dual(code)) throw std::invalid_argument("code is not self-dual");
}

}  // namespace

BinaryCode::BinaryCode(int n, std::vector<Word> generators) : n_(n), gens_(std::move(generators)) {
    if (n < 0 || n > kMaxCodeLength) throw std::invalid_argument("code length must be in [0, 64]");
    const Word mask = n == 64 ? ~Word{0} : (Word{1} << n) - 1;
    XorBasis basis;
    for (Word g : gens_) {
        if (g & ~mask) throw std::invalid_argument("generator has bits beyond the code length");
        if (!basis.insert(g)) throw std::invalid_argument("generator rows are linearly dependent");
    }
}

bool BinaryCode::contains(Word w) const {
    XorBasis basis;
    for (Word g : gens_) basis.insert(g);
    return basis.reduce(w) == 0;
}

std::vector<Word> BinaryCode::codewords() const {
    const int k = dimension();
    if (k > kMaxSweepDimension) throw std::invalid_argument("dimension too large for exhaustive sweep");
    // counter order: word(i) = word(i-1) ^ (g_0 ^ ... ^ g_{ctz(i)})
    std::vector<Word> prefix(static_cast<std::size_t>(k));
    Word acc = 0;
    for (int t = 0; t < k; ++t) prefix[static_cast<std::size_t>(t)] = acc ^= gens_[static_cast<std::size_t>(t)];
    const std::uint64_t total = std::uint64_t{1} << k;
    std::vector<Word> out(total);
    Word w = 0;
    for (std::uint64_t i = 1; i < total; ++i) {
        w ^= prefix[static_cast<std::size_t>(__builtin_ctzll(i))];
        out[i] = w;
    }
    return out;
}

Rational WeightEnum::at(int w) const {
    if (w < 0 || w > n) return 0;
    return counts[static_cast<std::size_t>(w)];
}

bool WeightEnum::is_integral() const {
    return std::all_of(counts.begin(), counts.end(), [](const Rational& c) { return is_integer(c); });
}

int WeightEnum::min_weight() const {
    for (int w = 0; w <= n; ++w)
        if (counts[static_cast<std::size_t>(w)] != 0) return w;
    return -1;
}

std::string WeightEnum::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (int w = 0; w <= n; ++w) {
        const Rational& c = counts[static_cast<std::size_t>(w)];
        if (c == 0) continue;
        Rational mag = abs(c);
        if (first)
            os << (c < 0 ? "-" : "");
        else
            os << (c < 0 ? " - " : " + ");
        first = false;
        const int xd = n - w;
        std::string mono;
        if (xd > 0) mono += xd == 1 ? "x" : "x^" + std::to_string(xd);
        if (w > 0) mono += (mono.empty() ? "" : "*") + (w == 1 ? std::string("y") : "y^" + std::to_string(w));
        if (mag != 1 || mono.empty()) os << shadowlab::to_string(mag) << (mono.empty() ? "" : "*");
        os << mono;
    }
    if (first) os << "0";
    return os.str();
}

bool is_self_dual(const BinaryCode& code) {
    if (code.length() % 2 != 0 || 2 * code.dimension() != code.length()) return false;
    const auto& g = code.generators();
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = i; j < g.size(); ++j)
            if (weight(g[i] & g[j]) % 2 != 0) return false;
    return true;
}

WeightEnum weight_enumerator(const BinaryCode& code) {
    std::vector<std::uint64_t> counts(static_cast<std::size_t>(code.length() + 1), 0);
    for (Word w : code.codewords()) ++counts[static_cast<std::size_t>(weight(w))];
    WeightEnum out = WeightEnum::zero(code.length());
    for (std::size_t i = 0; i < counts.size(); ++i) out.counts[i] = Rational(static_cast<unsigned long>(counts[i]));
    return out;
}

Word shadow_rep(const BinaryCode& code) {
    require_self_dual(code);
    const auto n = static_cast<std::size_t>(code.length());
    std::vector<std::vector<std::uint8_t>> a;
    std::vector<std::uint8_t> b;
    for (Word g : code.generators()) {
        std::vector<std::uint8_t> row(n);
        for (std::size_t j = 0; j < n; ++j) row[j] = static_cast<std::uint8_t>((g >> j) & 1u);
        a.push_back(std::move(row));
        b.push_back(static_cast<std::uint8_t>((weight(g) / 2) % 2));
    }
    std::vector<std::uint8_t> x;
    if (!linalg::solve_mod2(a, b, x)) throw std::invalid_argument("shadow system is inconsistent");
    Word s = 0;
    for (std::size_t j = 0; j < n; ++j)
        if (x[j]) s |= Word{1} << j;
    return s;
}

WeightEnum shadow_enumerator(const BinaryCode& code) {
    const Word s = shadow_rep(code);
    std::vector<std::uint64_t> counts(static_cast<std::size_t>(code.length() + 1), 0);
    for (Word w : code.codewords()) ++counts[static_cast<std::size_t>(weight(w ^ s))];
    WeightEnum out = WeightEnum::zero(code.length());
    for (std::size_t i = 0; i < counts.size(); ++i) out.counts[i] = Rational(static_cast<unsigned long>(counts[i]));
    return out;
}

WeightEnum macwilliams(const WeightEnum& w) { return hadamard(w, false); }

WeightEnum shadow_transform(const WeightEnum& w) { return hadamard(w, true); }

GleasonPoly gleason_solve(int n, std::span<const Rational> even_counts) {
    if (n < 0 || n % 2 != 0) throw std::invalid_argument("Gleason decomposition needs even length");
    const auto basis = gleason_basis(n, kG2, delta());
    if (even_counts.size() != basis.size())
        throw std::invalid_argument("length " + std::to_string(n) + " needs " + std::to_string(basis.size()) +
                                    " even-weight counts");
    GleasonPoly p{n, std::vector<Rational>(basis.size())};
    for (std::size_t k = 0; k < basis.size(); ++k) {
        Rational residual = even_counts[k];
        for (std::size_t j = 0; j < k; ++j) residual -= p.coeffs[j] * basis[j][2 * k];
        p.coeffs[k] = residual / basis[k][2 * k];
    }
    return p;
}

GleasonPoly gleason_decompose(const WeightEnum& w) {
    std::vector<Rational> leading;
    for (int j = 0; j <= w.n / 8; ++j) leading.push_back(w.at(2 * j));
    GleasonPoly p = gleason_solve(w.n, leading);
    if (gleason_evaluate(p) != w) throw std::invalid_argument("weight enumerator is not in the Gleason ring");
    return p;
}

WeightEnum gleason_evaluate(const GleasonPoly& p) { return gleason_eval_with(p, kG2, delta()); }

WeightEnum shadow_from_gleason(const GleasonPoly& p) {
    Poly d = poly_pow(kTwoXY, 4);
    for (std::size_t i = 0; i < kG8.size(); ++i) d[i] -= kG8[i];
    return gleason_eval_with(p, kTwoXY, d);
}

GleasonPoly extremal_enumerator(int n) {
    if (n < 8 || n > 22 || n % 2 != 0) throw std::invalid_argument("extremal enumerator needs even 8 <= n <= 22");
    GleasonPoly p{n, std::vector<Rational>(static_cast<std::size_t>(n / 8 + 1))};
    p.coeffs[0] = 1;
    p.coeffs[1] = Rational(-n, 8);
    p.coeffs[1].canonicalize();
    return p;
}

Rational predict_code_defect(int n, const Integer& weight4_count) {
    if (n < 16 || n >= 24 || n % 2 != 0) throw std::invalid_argument("code defect prediction needs even 16 <= n < 24");
    const Integer d = weight4_count - n * (22 - n) / 8;
    if (d < 0) throw std::domain_error("no self-dual code of length " + std::to_string(n) + " has A4 = " + weight4_count.get_str());
    Integer step;
    mpz_ui_pow_ui(step.get_mpz_t(), 2, static_cast<unsigned long>((24 - n) / 2));
    if (!mpz_divisible_p(d.get_mpz_t(), step.get_mpz_t()))
        throw std::domain_error("A4 excess " + d.get_str() + " is not a multiple of " + step.get_str());
    return pow2((n - 24) / 2) * Rational(d);
}

CodeSplit split_z(const BinaryCode& code) {
    require_self_dual(code);
    std::vector<Word> pairs;
    for (Word w : code.codewords())
        if (weight(w) == 2) pairs.push_back(w);
    std::sort(pairs.begin(), pairs.end());
    Word removed = 0;
    for (Word p : pairs) removed |= p;

    std::vector<Word> rows = code.generators();
    for (Word p : pairs) {
        const Word pivot = p & (~p + 1);
        auto it = std::find_if(rows.begin(), rows.end(), [&](Word r) { return (r & pivot) != 0; });
        const Word prow = *it;
        rows.erase(it);
        for (Word& r : rows)
            if (r & pivot) r ^= prow;
    }
    // compress the surviving coordinates
    std::vector<Word> core;
    for (Word r : rows) {
        Word c = 0;
        int out = 0;
        for (int j = 0; j < code.length(); ++j) {
            if (removed & (Word{1} << j)) continue;
            if (r & (Word{1} << j)) c |= Word{1} << out;
            ++out;
        }
        core.push_back(c);
    }
    CodeSplit s;
    s.r = static_cast<int>(pairs.size());
    s.core = BinaryCode(code.length() - 2 * s.r, std::move(core));
    return s;
}

BinaryCode code_direct_sum(const BinaryCode& a, const BinaryCode& b) {
    if (a.length() + b.length() > kMaxCodeLength) throw std::invalid_argument("direct sum longer than 64");
    std::vector<Word> gens = a.generators();
    for (Word g : b.generators()) gens.push_back(g << a.length());
    return BinaryCode(a.length() + b.length(), std::move(gens));
}

BinaryCode repetition_power(int r) {
    std::vector<Word> gens;
    for (int i = 0; i < r; ++i) gens.push_back(Word{3} << (2 * i));
    return BinaryCode(2 * r, std::move(gens));
}

const std::vector<std::string>& code_catalog_names() {
    static const std::vector<std::string> names{"e8", "d12", "e7^2", "d8^2", "d6^3", "d4^5", "g22"};
    return names;
}

BinaryCode code_catalog(std::string_view name) {
    if (name == "z") return repetition_power(1);
    const auto& names = code_catalog_names();
    if (std::find(names.begin(), names.end(), name) == names.end())
        throw std::invalid_argument("unknown catalog code '" + std::string(name) + "'");
    return io::parse_generator_matrix(read_data_file("codes/" + data_stem(name) + ".gen"));
}

}  // namespace shadowlab
