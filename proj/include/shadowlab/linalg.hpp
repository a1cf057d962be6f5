#pragma once

#include <cstdint>
#include <vector>

#include "shadowlab/rational.hpp"

// Exact linear algebra over Z and Q, sized for the small dense matrices that
// show up here (dimension <= a few dozen).
namespace shadowlab::linalg {

/// Row-style Hermite normal form. Returns the nonzero rows, which form a
/// basis of the Z-span of the input rows.
Matrix<Integer> hermite_normal_form(Matrix<Integer> rows);

/// Basis of { x in Z^n : A x = 0 } for an m x n integer matrix A with n columns.
Matrix<Integer> integer_kernel(const Matrix<Integer>& a, std::size_t n);

/// Bareiss fraction-free determinant.
Integer determinant(const Matrix<Integer>& a);

std::size_t rank(RatMatrix a);

/// Throws std::domain_error if singular.
RatMatrix inverse(const RatMatrix& a);

RatMatrix multiply(const RatMatrix& a, const RatMatrix& b);
RatMatrix transpose(const RatMatrix& a);

Matrix<Integer> to_integer(const IntMatrix& a);
RatMatrix to_rational(const IntMatrix& a);

/// Solves A x = b over GF(2) for a dense 0/1 matrix; returns false if inconsistent.
bool solve_mod2(std::vector<std::vector<std::uint8_t>> a, std::vector<std::uint8_t> b,
                std::vector<std::uint8_t>& x);

}  // namespace shadowlab::linalg
