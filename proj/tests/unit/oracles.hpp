#pragma once

// Test-only helpers that provide independent routes to the quantities the
// library computes: dense GF(q) linear algebra for dual/hull dimensions and
// a plain re-encoding enumerator for minimum distances.  These deliberately
// avoid the polynomial machinery under test.

#include <cstdint>
#include <vector>

#include "lcdc/codes.hpp"

namespace lcdc::testing {

using Matrix = std::vector<std::vector<std::uint32_t>>;

/// Generator matrix with rows x^i g, i = 0..k-1, as length-n vectors.
Matrix generator_matrix(const CyclicCode& c);

std::size_t rank(const Field& F, Matrix m);

/// Basis of the null space of m (solutions x with m x^T = 0).
Matrix null_space(const Field& F, const Matrix& m);

/// dim(rowspace(a) intersect rowspace(b)) = rank a + rank b - rank [a; b].
std::size_t intersection_dim(const Field& F, const Matrix& a, const Matrix& b);

bool same_row_space(const Field& F, const Matrix& a, const Matrix& b);

/// Minimum weight over all q^k nonzero codewords by plain re-encoding.
std::uint64_t exhaustive_min_weight(const CyclicCode& c);

}  // namespace lcdc::testing
