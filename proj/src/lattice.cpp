#include "shadowlab/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "enumerate.hpp"
#include "shadowlab/data.hpp"
#include "shadowlab/io.hpp"
#include "shadowlab/linalg.hpp"

namespace shadowlab {

namespace {

using Coords = std::vector<std::int64_t>;

IntMatrix gram_from_embedding(const Embedding& e) {
    const std::size_t n = e.basis.size();
    IntMatrix g(n, std::vector<std::int64_t>(n));
    for (std::size_t i = 0; i < n; ++i) {
        if (e.basis[i].size() != e.metric.size()) throw std::invalid_argument("basis row length differs from metric");
        for (std::size_t j = i; j < n; ++j) {
            Rational s = 0;
            for (std::size_t k = 0; k < e.metric.size(); ++k) s += e.metric[k] * e.basis[i][k] * e.basis[j][k];
            if (!is_integer(s))
                throw std::domain_error("non-integral Gram entry " + to_string(s) + " at (" + std::to_string(i) + "," +
                                        std::to_string(j) + ")");
            g[i][j] = g[j][i] = to_int64(s);
        }
    }
    return g;
}

// gram' = T G T^T for rational T, checked integral
IntMatrix transform_gram(const RatMatrix& t, const IntMatrix& gram) {
    RatMatrix tg = linalg::multiply(t, linalg::to_rational(gram));
    RatMatrix full = linalg::multiply(tg, linalg::transpose(t));
    IntMatrix out(full.size(), std::vector<std::int64_t>(full.size()));
    for (std::size_t i = 0; i < full.size(); ++i)
        for (std::size_t j = 0; j < full.size(); ++j) {
            if (!is_integer(full[i][j]))
                throw std::domain_error("glued lattice is not integral: entry " + to_string(full[i][j]));
            out[i][j] = to_int64(full[i][j]);
        }
    return out;
}

Coords map_to_original(const IntMatrix& transform, const Coords& y) {
    const std::size_t n = y.size();
    Coords x(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) x[j] += y[i] * transform[i][j];
    return x;
}

CharCoset coset_of_gram(const IntMatrix& g) {
    const std::size_t n = g.size();
    std::vector<std::vector<std::uint8_t>> a(n, std::vector<std::uint8_t>(n));
    std::vector<std::uint8_t> b(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) a[i][j] = static_cast<std::uint8_t>(g[i][j] & 1);
        b[i] = static_cast<std::uint8_t>(g[i][i] & 1);
    }
    std::vector<std::uint8_t> x;
    if (!linalg::solve_mod2(a, b, x)) throw std::domain_error("no characteristic vector: determinant is even");
    // G invertible mod 2 means the solution is unique mod 2
    if (linalg::determinant(linalg::to_integer(g)) % 2 == 0)
        throw std::domain_error("characteristic coset needs odd determinant");
    return CharCoset{Coords(x.begin(), x.end())};
}

template <class Visit>
void for_each_short(const IntMatrix& gram, std::int64_t max_norm, bool half, Visit&& visit) {
    const auto chol = detail::cholesky(gram);
    const Coords zero(gram.size(), 0);
    detail::enumerate_coset(gram, chol, zero, 1, max_norm, half, visit);
}

void fill_counts(NormCounts& out, const std::vector<std::uint64_t>& tally) {
    for (std::size_t k = 0; k < tally.size(); ++k)
        if (tally[k] != 0) out.counts[static_cast<std::int64_t>(k)] = tally[k];
}

}  // namespace

Lattice Lattice::from_gram(IntMatrix gram, std::optional<Embedding> embedding) {
    const std::size_t n = gram.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (gram[i].size() != n) throw std::invalid_argument("Gram matrix is not square");
        for (std::size_t j = 0; j < i; ++j)
            if (gram[i][j] != gram[j][i]) throw std::invalid_argument("Gram matrix is not symmetric");
    }
    if (embedding && gram_from_embedding(*embedding) != gram)
        throw std::invalid_argument("embedding does not reproduce the Gram matrix");
    Lattice l;
    l.gram_ = std::move(gram);
    l.embedding_ = std::move(embedding);
    return l;
}

Lattice Lattice::from_basis(RatMatrix basis, std::vector<Rational> metric) {
    if (!basis.empty() && linalg::rank(basis) != basis.size()) throw std::invalid_argument("basis rows are dependent");
    Embedding e{std::move(basis), std::move(metric)};
    IntMatrix g = gram_from_embedding(e);
    Lattice l;
    l.gram_ = std::move(g);
    l.embedding_ = std::move(e);
    return l;
}

Integer Lattice::determinant() const { return linalg::determinant(linalg::to_integer(gram_)); }

bool Lattice::is_even() const {
    return std::all_of(gram_.begin(), gram_.end(), [i = std::size_t{0}](const auto& row) mutable {
        return row[i++] % 2 == 0;
    });
}

bool Lattice::is_positive_definite() const {
    Matrix<Integer> g = linalg::to_integer(gram_);
    for (std::size_t k = 1; k <= g.size(); ++k) {
        Matrix<Integer> minor(k, std::vector<Integer>(k));
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) minor[i][j] = g[i][j];
        if (linalg::determinant(minor) <= 0) return false;
    }
    return true;
}

std::int64_t Lattice::norm(const std::vector<std::int64_t>& coords) const {
    return detail::quadratic_form(gram_, coords);
}

std::int64_t Lattice::inner(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b) const {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < gram_.size(); ++i)
        for (std::size_t j = 0; j < gram_.size(); ++j) s += a[i] * gram_[i][j] * b[j];
    return s;
}

bool CharCoset::contains(const std::vector<std::int64_t>& coords) const {
    if (coords.size() != rep.size()) return false;
    for (std::size_t i = 0; i < rep.size(); ++i)
        if ((coords[i] - rep[i]) % 2 != 0) return false;
    return true;
}

std::uint64_t NormCounts::at(std::int64_t norm) const {
    auto it = counts.find(norm);
    return it == counts.end() ? 0 : it->second;
}

std::optional<std::int64_t> NormCounts::minimum() const {
    if (counts.empty()) return std::nullopt;
    return counts.begin()->first;
}

Lattice make_lattice(RatMatrix basis) {
    const std::size_t m = basis.empty() ? 0 : basis[0].size();
    return Lattice::from_basis(std::move(basis), std::vector<Rational>(m, Rational(1)));
}

NormCounts enumerate_norms(const Lattice& lattice, std::int64_t max_norm) {
    NormCounts out;
    out.bound = max_norm;
    if (max_norm < 0) return out;
    const auto reduced = detail::lll_reduce(lattice.gram());
    std::vector<std::uint64_t> tally(static_cast<std::size_t>(max_norm + 1), 0);
    for_each_short(reduced.gram, max_norm, true,
                   [&](const Coords&, std::int64_t nrm) { tally[static_cast<std::size_t>(nrm)] += nrm == 0 ? 1 : 2; });
    fill_counts(out, tally);
    return out;
}

std::vector<std::vector<std::int64_t>> vectors_of_norm(const Lattice& lattice, std::int64_t norm) {
    std::vector<Coords> out;
    const auto reduced = detail::lll_reduce(lattice.gram());
    for_each_short(reduced.gram, norm, false, [&](const Coords& y, std::int64_t nrm) {
        if (nrm == norm) out.push_back(map_to_original(reduced.transform, y));
    });
    std::sort(out.begin(), out.end());
    return out;
}

CharCoset characteristic_coset(const Lattice& lattice) { return coset_of_gram(lattice.gram()); }

NormCounts shadow_norm_counts(const Lattice& lattice, std::int64_t max_cnorm) {
    NormCounts out;
    out.bound = max_cnorm;
    if (max_cnorm < 0) return out;
    const auto reduced = detail::lll_reduce(lattice.gram());
    const CharCoset coset = coset_of_gram(reduced.gram);
    const auto chol = detail::cholesky(reduced.gram);
    std::vector<std::uint64_t> tally(static_cast<std::size_t>(max_cnorm + 1), 0);
    detail::enumerate_coset(reduced.gram, chol, coset.rep, 2, max_cnorm, false,
                            [&](const Coords&, std::int64_t nrm) { ++tally[static_cast<std::size_t>(nrm)]; });
    fill_counts(out, tally);
    return out;
}

std::int64_t min_characteristic_norm(const Lattice& lattice) {
    const std::int64_t n = lattice.rank();
    for (std::int64_t radius = n % 8; radius <= n; radius += 8) {
        const auto counts = shadow_norm_counts(lattice, radius);
        if (auto m = counts.minimum()) return *m;
    }
    throw std::logic_error("no characteristic vector of norm <= rank; lattice is not unimodular");
}

Lattice direct_sum(const Lattice& a, const Lattice& b) {
    const std::size_t na = static_cast<std::size_t>(a.rank());
    const std::size_t nb = static_cast<std::size_t>(b.rank());
    IntMatrix g(na + nb, std::vector<std::int64_t>(na + nb, 0));
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < na; ++j) g[i][j] = a.gram()[i][j];
    for (std::size_t i = 0; i < nb; ++i)
        for (std::size_t j = 0; j < nb; ++j) g[na + i][na + j] = b.gram()[i][j];
    std::optional<Embedding> e;
    if (a.embedding() && b.embedding()) {
        const auto& ea = *a.embedding();
        const auto& eb = *b.embedding();
        const std::size_t ma = ea.metric.size();
        const std::size_t mb = eb.metric.size();
        Embedding out{RatMatrix(na + nb, std::vector<Rational>(ma + mb)), ea.metric};
        out.metric.insert(out.metric.end(), eb.metric.begin(), eb.metric.end());
        for (std::size_t i = 0; i < na; ++i)
            for (std::size_t k = 0; k < ma; ++k) out.basis[i][k] = ea.basis[i][k];
        for (std::size_t i = 0; i < nb; ++i)
            for (std::size_t k = 0; k < mb; ++k) out.basis[na + i][ma + k] = eb.basis[i][k];
        e = std::move(out);
    }
    return Lattice::from_gram(std::move(g), std::move(e));
}

Reduction reduce(const Lattice& lattice) {
    const auto units = vectors_of_norm(lattice, 1);
    std::vector<Coords> reps;
    for (const auto& u : units) {
        // one of each +-pair: first nonzero coordinate positive
        auto it = std::find_if(u.begin(), u.end(), [](std::int64_t x) { return x != 0; });
        if (*it > 0) reps.push_back(u);
    }
    Reduction out;
    out.r = static_cast<int>(reps.size());
    if (reps.empty()) {
        out.core = lattice;
        return out;
    }
    const std::size_t n = static_cast<std::size_t>(lattice.rank());
    Matrix<Integer> a(reps.size(), std::vector<Integer>(n));
    for (std::size_t i = 0; i < reps.size(); ++i)
        for (std::size_t j = 0; j < n; ++j) {
            std::int64_t s = 0;
            for (std::size_t k = 0; k < n; ++k) s += reps[i][k] * lattice.gram()[k][j];
            a[i][j] = static_cast<long>(s);
        }
    Matrix<Integer> ker = linalg::integer_kernel(a, n);
    RatMatrix t(ker.size(), std::vector<Rational>(n));
    for (std::size_t i = 0; i < ker.size(); ++i)
        for (std::size_t j = 0; j < n; ++j) t[i][j] = Rational(ker[i][j]);
    IntMatrix g = transform_gram(t, lattice.gram());
    std::optional<Embedding> e;
    if (lattice.embedding()) e = Embedding{linalg::multiply(t, lattice.embedding()->basis), lattice.embedding()->metric};
    // LLL keeps the core's Gram small; the lattice is unchanged
    auto red = detail::lll_reduce(g);
    RatMatrix u = linalg::to_rational(red.transform);
    if (e) e->basis = linalg::multiply(u, e->basis);
    out.core = Lattice::from_gram(std::move(red.gram), std::move(e));
    return out;
}

Lattice integer_lattice(int n) {
    RatMatrix b(static_cast<std::size_t>(n), std::vector<Rational>(static_cast<std::size_t>(n)));
    for (std::size_t i = 0; i < b.size(); ++i) b[i][i] = 1;
    return make_lattice(std::move(b));
}

Lattice root_lattice(std::string_view kind) {
    if (kind.size() < 2) throw std::invalid_argument("invalid root lattice '" + std::string(kind) + "'");
    int m = 0;
    try {
        std::size_t used = 0;
        m = std::stoi(std::string(kind.substr(1)), &used);
        if (used != kind.size() - 1) m = 0;
    } catch (const std::exception&) {
        m = 0;
    }
    const char type = kind[0];
    auto row = [](std::size_t dim) { return std::vector<Rational>(dim); };
    RatMatrix b;
    if (type == 'A' && m >= 1) {
        for (int i = 0; i < m; ++i) {
            auto r = row(static_cast<std::size_t>(m + 1));
            r[static_cast<std::size_t>(i)] = 1;
            r[static_cast<std::size_t>(i + 1)] = -1;
            b.push_back(r);
        }
    } else if (type == 'D' && m >= 2) {
        for (int i = 0; i + 1 < m; ++i) {
            auto r = row(static_cast<std::size_t>(m));
            r[static_cast<std::size_t>(i)] = 1;
            r[static_cast<std::size_t>(i + 1)] = -1;
            b.push_back(r);
        }
        auto r = row(static_cast<std::size_t>(m));
        r[static_cast<std::size_t>(m - 2)] = 1;
        r[static_cast<std::size_t>(m - 1)] = 1;
        b.push_back(r);
    } else if (type == 'E' && m >= 6 && m <= 8) {
        // Bourbaki simple roots of E8; E7 and E6 are the first 7 and 6
        const Rational h(1, 2);
        b.push_back({h, -h, -h, -h, -h, -h, -h, h});
        auto r = row(8);
        r[0] = 1;
        r[1] = 1;
        b.push_back(r);
        r = row(8);
        r[0] = -1;
        r[1] = 1;
        b.push_back(r);
        for (std::size_t i = 1; i <= 5; ++i) {
            r = row(8);
            r[i] = -1;
            r[i + 1] = 1;
            b.push_back(r);
        }
        b.resize(static_cast<std::size_t>(m));
    } else {
        throw std::invalid_argument("invalid root lattice '" + std::string(kind) + "'");
    }
    return make_lattice(std::move(b));
}

Lattice glue(const Lattice& lattice, const RatMatrix& glue_vectors) {
    const std::size_t n = static_cast<std::size_t>(lattice.rank());
    if (glue_vectors.empty()) return lattice;
    RatMatrix stack;
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Rational> r(n);
        r[i] = 1;
        stack.push_back(std::move(r));
    }
    for (const auto& g : glue_vectors) {
        if (g.size() != n) throw std::invalid_argument("glue vector has wrong length");
        stack.push_back(g);
    }
    Integer den = 1;
    for (const auto& r : stack)
        for (const auto& x : r) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
    Matrix<Integer> scaled(stack.size(), std::vector<Integer>(n));
    for (std::size_t i = 0; i < stack.size(); ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Rational v = stack[i][j] * den;
            scaled[i][j] = v.get_num();
        }
    Matrix<Integer> h = linalg::hermite_normal_form(std::move(scaled));
    if (h.size() != n) throw std::domain_error("glued generators have rank deficit");
    RatMatrix t(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            t[i][j] = Rational(h[i][j], den);
            t[i][j].canonicalize();
        }
    IntMatrix g = transform_gram(t, lattice.gram());
    auto red = detail::lll_reduce(g);
    RatMatrix full = linalg::multiply(linalg::to_rational(red.transform), t);
    std::optional<Embedding> e;
    if (lattice.embedding()) e = Embedding{linalg::multiply(full, lattice.embedding()->basis), lattice.embedding()->metric};
    return Lattice::from_gram(std::move(red.gram), std::move(e));
}

std::string root_system(const Lattice& lattice) {
    const auto roots = vectors_of_norm(lattice, 2);
    const std::size_t count = roots.size();
    std::vector<std::size_t> parent(count);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (std::size_t i = 0; i < count; ++i)
        for (std::size_t j = i + 1; j < count; ++j)
            if (lattice.inner(roots[i], roots[j]) != 0) parent[find(i)] = find(j);

    std::map<std::size_t, std::vector<std::size_t>> comps;
    for (std::size_t i = 0; i < count; ++i) comps[find(i)].push_back(i);

    // (type, rank) pairs
    std::vector<std::pair<char, int>> parts;
    for (const auto& [root, members] : comps) {
        RatMatrix m;
        for (auto idx : members) {
            std::vector<Rational> r;
            for (auto x : roots[idx]) r.emplace_back(static_cast<long>(x));
            m.push_back(std::move(r));
        }
        const int k = static_cast<int>(linalg::rank(m));
        const auto size = static_cast<long>(members.size());
        if (size == static_cast<long>(k) * (k + 1))
            parts.emplace_back('A', k);
        else if (size == 2L * k * (k - 1))
            parts.emplace_back('D', k);
        else if ((k == 6 && size == 72) || (k == 7 && size == 126) || (k == 8 && size == 240))
            parts.emplace_back('E', k);
        else
            throw std::logic_error("unrecognised root system component");
    }
    std::sort(parts.begin(), parts.end(), [](const auto& a, const auto& b) {
        return a.first != b.first ? a.first < b.first : a.second > b.second;
    });
    std::string out;
    for (std::size_t i = 0; i < parts.size();) {
        std::size_t j = i;
        while (j < parts.size() && parts[j] == parts[i]) ++j;
        if (!out.empty()) out += ' ';
        out += parts[i].first + std::to_string(parts[i].second);
        if (j - i > 1) out += "^" + std::to_string(j - i);
        i = j;
    }
    return out;
}

const std::vector<CatalogEntry>& extremal_catalog() {
    static const std::vector<CatalogEntry> entries{
        {"E8", 8, 240, "E8"},          {"D12", 12, 264, "D12"},     {"E7^2", 14, 252, "E7^2"},
        {"A15", 15, 240, "A15"},       {"D8^2", 16, 224, "D8^2"},   {"A11E6", 17, 204, "A11 E6"},
        {"D6^3", 18, 180, "D6^3"},     {"A9^2", 18, 180, "A9^2"},   {"A7^2D5", 19, 152, "A7^2 D5"},
        {"D4^5", 20, 120, "D4^5"},     {"A5^4", 20, 120, "A5^4"},   {"A3^7", 21, 84, "A3^7"},
        {"A1^22", 22, 44, "A1^22"},    {"O23", 23, 0, ""},
    };
    return entries;
}

const std::vector<std::string>& catalog_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& e : extremal_catalog()) out.push_back(e.name);
        return out;
    }();
    return names;
}

Lattice catalog(std::string_view name) {
    if (name.size() >= 2 && name[0] == 'Z' &&
        std::all_of(name.begin() + 1, name.end(), [](char c) { return c >= '0' && c <= '9'; }))
        return integer_lattice(std::stoi(std::string(name.substr(1))));
    if (name == "E8^2") {
        const Lattice e8 = root_lattice("E8");
        return direct_sum(e8, e8);
    }
    if (name == "D16+") {
        const Lattice d16 = root_lattice("D16");
        RatMatrix inv = linalg::inverse(linalg::to_rational(d16.gram()));
        return glue(d16, {inv[15]});
    }
    if (name == "O23") return io::parse_gram(read_data_file("lattices/o23.gram"));
    const auto& names = catalog_names();
    if (std::find(names.begin(), names.end(), name) == names.end())
        throw std::invalid_argument("unknown catalog lattice '" + std::string(name) + "'");
    return io::build_glued(io::parse_glue(read_data_file("lattices/" + data_stem(name) + ".glue")));
}

}  // namespace shadowlab
