#pragma once

#include <map>
#include <vector>

#include "tcw/chern.hpp"
#include "tcw/face_vectors.hpp"
#include "tcw/symfun.hpp"

namespace tcw {

/// One linear condition on Chern numbers with an affine right-hand side in
/// the g-vector entries:  sum_I lhs_I c_I = rhs[0] + sum_k rhs[k] g_k.
/// Integer coefficients, pivot coefficient positive, content 1.
struct ObstructionEquation {
    std::map<Partition, Int> lhs;
    IntVec rhs;  // length floor(n/2)+1; rhs[0] is the constant (g_0 = 1 folded in)
};

/// The floor((n+2)/2) conditions that the g-vector imposes on the Chern
/// numbers, generated from the Todd table rows (-1)^p sum_{k<=p} g_k = T_n^p
/// and reduced to a canonical triangular form.
std::vector<ObstructionEquation> obstruction_equations(int n);

/// Same equations with a concrete g substituted:
/// returns pairs (lhs, integer rhs).
std::vector<std::pair<std::map<Partition, Int>, Int>> obstruction_equations_at(int n, const GVector& g);

/// Checks cv against the instantiated equations.
bool obstructions_hold(const ChernVector& cv, const GVector& g);

/// Dimension-4 search: all g = (1, g1, g2) passing the g-theorem, the three
/// comb4 equations, and the two Hattori-Stong parity conditions
/// (c1^2 c2 even; c1^2 c2 + 2 c2^2 + c1 c3 = 0 mod 4). Also supports n = 3
/// where the conditions degenerate to c1 c2 = 24 and c3 = 2 g1 + 4.
std::vector<GVector> feasible_g_for(const ChernVector& cv);

}  // namespace tcw
