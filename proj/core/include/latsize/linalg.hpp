#pragma once

#include "latsize/ints.hpp"

#include <optional>

namespace latsize {

/// Exact determinant by fraction-free (Bareiss) elimination.
Int determinant(const Mat& rows);

/// Rank of an arbitrary integer matrix.
int rank(const Mat& rows);

/// Adjugate of a square matrix: adj(M) * M = det(M) * I.
Mat adjugate(const Mat& rows);

/// A nonzero integer vector orthogonal to every row, or nullopt if the rows
/// have full column rank. The result is primitive.
std::optional<Vec> integer_kernel_vector(const Mat& rows, int n);

}  // namespace latsize
