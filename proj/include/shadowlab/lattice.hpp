#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "shadowlab/rational.hpp"

namespace shadowlab {

/// Rows of `basis` are vectors in an ambient Q^m whose inner product is the
/// diagonal form `metric`: (u, v) = sum_i metric[i] u_i v_i. Construction A
/// uses metric 1/2 to stand in for the 2^{-1/2} scaling.
struct Embedding {
    RatMatrix basis;
    std::vector<Rational> metric;
};

/// Integral lattice given by an integer Gram matrix, optionally with an
/// explicit embedding consistent with it.
class Lattice {
public:
    Lattice() = default;

    /// Throws std::invalid_argument if the matrix is not square and symmetric,
    /// or if the embedding does not reproduce it.
    static Lattice from_gram(IntMatrix gram, std::optional<Embedding> embedding = std::nullopt);
    /// Throws std::invalid_argument for dependent rows and std::domain_error
    /// for a non-integral Gram.
    static Lattice from_basis(RatMatrix basis, std::vector<Rational> metric);

    int rank() const { return static_cast<int>(gram_.size()); }
    const IntMatrix& gram() const { return gram_; }
    const std::optional<Embedding>& embedding() const { return embedding_; }

    Integer determinant() const;
    bool is_unimodular() const { return determinant() == 1; }
    bool is_even() const;
    /// False if any leading principal minor is non-positive.
    bool is_positive_definite() const;

    std::int64_t norm(const std::vector<std::int64_t>& coords) const;
    std::int64_t inner(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b) const;

private:
    IntMatrix gram_;
    std::optional<Embedding> embedding_;
};

/// Representative x0 (coordinates in the lattice basis) of the coset w + 2L of
/// characteristic vectors.
struct CharCoset {
    std::vector<std::int64_t> rep;

    /// True iff coords - rep has all even entries.
    bool contains(const std::vector<std::int64_t>& coords) const;
};

/// Vector counts by norm. For shadows the key is the characteristic norm k
/// (four times the shadow norm). Norms with zero count are absent.
struct NormCounts {
    std::map<std::int64_t, std::uint64_t> counts;
    std::int64_t bound = 0;

    std::uint64_t at(std::int64_t norm) const;
    /// Smallest norm with nonzero count, if any.
    std::optional<std::int64_t> minimum() const;
};

Lattice make_lattice(RatMatrix basis);

/// Exact N_k for 0 <= k <= max_norm.
NormCounts enumerate_norms(const Lattice& lattice, std::int64_t max_norm);

/// Solves G x = diag(G) mod 2. Throws std::domain_error if det G is even.
CharCoset characteristic_coset(const Lattice& lattice);

/// Counts of characteristic vectors by norm up to max_cnorm.
NormCounts shadow_norm_counts(const Lattice& lattice, std::int64_t max_cnorm);

/// Smallest characteristic norm; searches n mod 8, n mod 8 + 8, ... up to n.
std::int64_t min_characteristic_norm(const Lattice& lattice);

Lattice direct_sum(const Lattice& a, const Lattice& b);

struct Reduction {
    int r = 0;
    Lattice core;
};

/// Splits off the Z^r spanned by norm-1 vectors.
Reduction reduce(const Lattice& lattice);

/// "A5", "D12", "E7", "E8" (also E6). Simple-root Gram with standard coordinates.
Lattice root_lattice(std::string_view kind);

/// Overlattice generated by the lattice and extra vectors given in rational
/// coordinates relative to the lattice basis. Throws std::domain_error if the
/// result is not integral.
Lattice glue(const Lattice& lattice, const RatMatrix& glue_vectors);

/// Z^n.
Lattice integer_lattice(int n);

/// Root system spanned by the norm-2 vectors, e.g. "A11 E6", "D6^3", "A1^22";
/// "" if there are none. Components are sorted by type then rank, descending rank.
std::string root_system(const Lattice& lattice);

/// Coordinates of vectors of exactly the given norm (both signs).
std::vector<std::vector<std::int64_t>> vectors_of_norm(const Lattice& lattice, std::int64_t norm);

/// Catalog entries: the fourteen extremal lattices plus "Z<n>", "E8^2" and "D16+".
const std::vector<std::string>& catalog_names();
/// Throws std::invalid_argument for unknown names.
Lattice catalog(std::string_view name);

struct CatalogEntry {
    std::string name;
    int rank;
    std::int64_t norm2_count;
    std::string root_system;
};

/// The fourteen lattices of rank < 24 with no norm-1 vectors and the fewest roots.
const std::vector<CatalogEntry>& extremal_catalog();

}  // namespace shadowlab
