#pragma once

#include <vector>

#include "tcw/budget.hpp"
#include "tcw/face_vectors.hpp"
#include "tcw/numeric.hpp"

namespace tcw {

/// A generating ray: a primitive nonzero integer vector.
using Ray = IntVec;

/// A cone of a simplicial fan, stored as the sorted set of ray indices.
using Cone = std::vector<int>;

/// A complete description of a simplicial fan in R^n: primitive rays plus the
/// list of maximal cones (each of cardinality n). Construction validates the
/// combinatorial invariants; values are immutable afterwards.
class Fan {
  public:
    Fan(int dim, std::vector<Ray> rays, std::vector<Cone> max_cones);

    int dim() const { return dim_; }
    const std::vector<Ray>& rays() const { return rays_; }
    const std::vector<Cone>& max_cones() const { return max_cones_; }

    /// n x n matrix whose rows are the rays of the given maximal cone.
    Mat cone_matrix(const Cone& c) const;

    /// True when the ray set of c is contained in some maximal cone.
    bool has_cone(const Cone& c) const;

    /// Equality up to ray reordering (not up to unimodular transformation).
    bool same_fan(const Fan& other) const;

    static constexpr int kMaxDim = 6;
    static constexpr int kMaxRays = 64;
    static constexpr int kMaxCones = 4096;

  private:
    int dim_;
    std::vector<Ray> rays_;
    std::vector<Cone> max_cones_;  // each sorted; list sorted lexicographically
};

/// Every maximal cone spans with determinant +-1.
bool is_regular(const Fan& fan);

/// Semi-decision for completeness: pseudomanifold test (every wall lies in
/// exactly two maximal cones), connectivity of the wall-adjacency graph, and
/// exact point-location probes near every ray. Sound for the fan families
/// this library constructs; throws reject_non_simplicial when two maximal
/// cones overlap in their interiors. Requires a regular fan.
bool is_complete(const Fan& fan);

/// Exact rational feasibility of a strictly convex piecewise-linear support
/// function (one value per ray, wall gaps >= 1 after clearing denominators),
/// decided by Fourier-Motzkin elimination. Requires a complete regular fan.
bool is_projective(const Fan& fan);
bool is_projective(const Fan& fan, Budget& budget);

/// All cones of the fan grouped by dimension 0..n; entry 0 is the zero cone.
std::vector<std::vector<Cone>> all_cones(const Fan& fan);

/// f_k = number of (k+1)-dimensional cones, k = 0..n-1.
FVector face_count_vector(const Fan& fan);

/// All cones contained in some cone containing tau, as a subcomplex.
std::vector<Cone> closed_star(const Fan& fan, const Cone& tau);

/// Regular star subdivision at tau: inserts the ray x = sum of tau's rays and
/// replaces the star of tau per  Sigma \ st tau  u  x . (clst tau \ st tau).
Fan star_subdivide(const Fan& fan, const Cone& tau);

/// Walls of the fan: (n-1)-subcones shared by exactly two maximal cones,
/// with the indices of the two cones containing each.
struct Wall {
    Cone face;
    int cone_a;
    int cone_b;
};
std::vector<Wall> fan_walls(const Fan& fan);

/// g-vector of the (dual polytope of the) fan via face counts.
GVector fan_g_vector(const Fan& fan);

}  // namespace tcw
