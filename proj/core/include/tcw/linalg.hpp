#pragma once

#include <optional>
#include <vector>

#include "tcw/numeric.hpp"

namespace tcw {

using Mat = std::vector<IntVec>;     // row-major
using RatMat = std::vector<RatVec>;  // row-major

/// Determinant of a square integer matrix (fraction-free Bareiss).
Int det(Mat m);

/// Exact inverse of a square integer matrix with det = ±1 (adjugate form).
/// Fails with invalid_input if the matrix is not unimodular.
Mat inverse_unimodular(const Mat& m);

/// Rank over the rationals.
int rank(Mat m);
int rank(RatMat m);

/// Solves A x = b exactly over the rationals; nullopt when A is singular.
/// A must be square.
std::optional<RatVec> solve(const Mat& a, const IntVec& b);
std::optional<RatVec> solve(RatMat a, RatVec b);

/// Basis of the right kernel {x : M x = 0} over the integers. The returned
/// vectors generate the full kernel lattice, not merely a finite-index
/// sublattice.
std::vector<IntVec> kernel_basis(const Mat& m);

/// Row-style Hermite normal form of the lattice spanned by the given
/// generators (as rows). Returns the nonzero rows in staircase form: pivots
/// strictly to the right as rows descend, pivots positive, entries above each
/// pivot reduced into [0, pivot). For a full-rank lattice in dimension n the
/// result is n x n upper triangular.
Mat hnf_row_basis(std::vector<IntVec> generators);

struct Rref {
    RatMat m;                 // reduced rows (in place of input rows)
    std::vector<int> pivots;  // pivot column per row, -1 for zero rows
};

/// Reduced row echelon form over the rationals with a caller-supplied column
/// priority: pivot columns are chosen scanning `column_order` left to right.
Rref rref_with_column_order(RatMat rows, const std::vector<int>& column_order);

}  // namespace tcw
