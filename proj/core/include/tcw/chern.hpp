#pragma once

#include <map>
#include <vector>

#include "tcw/face_vectors.hpp"
#include "tcw/fan.hpp"
#include "tcw/numeric.hpp"
#include "tcw/symfun.hpp"

namespace tcw {

/// A point of Omega_{2n}^U in Chern-number coordinates: one integer per
/// partition of n.
struct ChernVector {
    int n = 0;
    std::map<Partition, Int> values;

    const Int& at(const Partition& p) const;
    friend bool operator==(const ChernVector&, const ChernVector&) = default;
};

ChernVector make_chern_vector(int n, const std::vector<Int>& values_in_basis_order);

/// Chern numbers of the smooth toric variety of a complete regular fan,
/// c(X) = prod (1 + v_i) evaluated against the fundamental class. Fixed-point
/// localization accumulated per maximal cone.
ChernVector chern_numbers(const Fan& fan);

/// Same values, computed the literal way: expand each c_I into square-free
/// ray monomial products and evaluate term by term through the intersection
/// ring. Kept as a cross-check; quadratically slower on large fans.
ChernVector chern_numbers_termwise(const Fan& fan);

/// Rows of the generalized Todd genus: T_n = sum_p T_n^p y^p with each T_n^p
/// a rational combination of degree-n Chern monomials.
struct ToddTable {
    int n;
    std::vector<Partition> basis;        // canonical order of partitions of n
    std::vector<std::vector<Rat>> rows;  // rows p = 0..n over the basis
};

/// Expands prod_k Q(y, x_k), Q(y,x) = x(y+1)/(1-e^{-x(y+1)}) - yx, truncated
/// in n formal roots, and rewrites the degree-n part in the Chern basis.
ToddTable todd_table(int n);

/// T[M] = sum_p T_n^p[M] y^p as coefficients y^0..y^n. Integrality is not
/// assumed; arbitrary integer Chern vectors are allowed.
RatVec generalized_todd_genus(const ChernVector& cv);

/// chi^p = (-1)^p h_p with h rebuilt from g by partial sums and symmetry.
std::vector<Int> chi_y_from_g(const GVector& g, int n);

}  // namespace tcw
