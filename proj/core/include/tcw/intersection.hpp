#pragma once

#include <map>
#include <vector>

#include "tcw/budget.hpp"
#include "tcw/fan.hpp"
#include "tcw/numeric.hpp"

namespace tcw {

/// Danilov-Jurkiewicz data for H*(X_Sigma) = Z[v_1..v_m] / (L + J):
/// theta_i = sum_j lambda_{ij} v_j with lambda the ray coordinates, and J
/// generated by the minimal non-faces.
struct RingPresentation {
    int dim;
    Mat linear_ideal;            // n x m; row i lists the coefficients of theta_i
    std::vector<Cone> nonfaces;  // minimal non-faces, sorted
};

RingPresentation presentation(const Fan& fan);

/// Monomial in the ray classes: ray index -> positive exponent.
using RayMonomial = std::map<int, int>;

int monomial_degree(const RayMonomial& m);

/// Memo shared across evaluations of one fan. Thread-confined.
struct EvalCache {
    std::map<RayMonomial, Int> ring_values;
    // Localization data, built on first use.
    bool ready = false;
    std::vector<std::vector<Rat>> weights;  // per maximal cone, per cone position
    std::vector<Rat> denominators;          // per maximal cone
};

/// <m, mu>: evaluation of a degree-n ray monomial against the fundamental
/// class by torus-fixed-point localization with a deterministic probe.
/// Hard-asserts integrality (non_integer_result otherwise).
Int evaluate(const Fan& fan, const RayMonomial& m);
Int evaluate(const Fan& fan, const RayMonomial& m, EvalCache& cache);

/// Fills the cache's fixed-point weight data (probe (1, M, M^2, ...) with M
/// past every ray coordinate, bumped past any zero denominator).
void ensure_localization(const Fan& fan, EvalCache& cache);

/// Independent oracle: Stanley-Reisner/linear-ideal rewriting exactly as the
/// paper computes (non-face monomials vanish, full-support square-free cone
/// monomials evaluate to 1, repeated rays are rewritten through the linear
/// relations of a maximal cone). Work-bounded.
Int evaluate_ring_reduction(const Fan& fan, const RayMonomial& m, Budget& budget);
Int evaluate_ring_reduction(const Fan& fan, const RayMonomial& m, Budget& budget, EvalCache& cache);

/// Localization with an explicit probe; exposed for the probe-independence
/// property test. The probe must give nonzero denominators.
Int evaluate_with_probe(const Fan& fan, const RayMonomial& m, const IntVec& probe);

/// Sparse polynomial in the kept ray variables (exponent vector -> coeff).
using Poly = std::map<std::vector<int>, Int>;

/// Images of the Stanley-Reisner generators after eliminating all rays not in
/// `keep` through the linear ideal. The complementary square block of the ray
/// coordinate matrix must be unimodular.
std::vector<Poly> eliminated_relations(const Fan& fan, const std::vector<int>& keep);

/// True when the two generating sets reduce to zero against each other
/// (leading-term division in both directions), i.e. they generate the same
/// ideal for the well-behaved fingerprint ideals used here.
bool same_ideal(const std::vector<Poly>& a, const std::vector<Poly>& b);

}  // namespace tcw
