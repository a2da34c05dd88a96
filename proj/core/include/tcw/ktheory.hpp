#pragma once

#include <map>
#include <vector>

#include "tcw/chern.hpp"
#include "tcw/numeric.hpp"
#include "tcw/symfun.hpp"

namespace tcw {

/// ch gamma_k of an n-plane bundle: sigma_k(e^{x_1}-1, ..., e^{x_n}-1)
/// truncated at total degree n. The gamma-classes are never materialized as
/// exterior powers; this identity is the computational definition.
SymmetricSeries ch_gamma(int k, int n);

/// Todd class series prod_i x_i / (1 - e^{-x_i}) in n roots.
SymmetricSeries todd_class_series(int n);

/// kappa_omega as a rational combination of Chern numbers:
/// kappa_omega[M] = sum_I beta_I(omega) c_I[M].
struct KappaForm {
    Partition omega;
    std::map<Partition, Rat> beta;  // one entry per partition of n
};

KappaForm kappa_form(const Partition& omega, int n);

/// All kappa forms for omega over partitions of weights 0..n.
std::vector<KappaForm> all_kappa_forms(int n);

struct HSViolation {
    Partition omega;
    Rat value;
};

struct HSReport {
    bool pass;
    std::vector<HSViolation> violations;
};

/// Hattori-Stong membership: the given Chern numbers belong to a genuine
/// complex cobordism class iff every kappa_omega value is an integer.
HSReport hattori_stong_check(const ChernVector& cv);

/// One congruence  sum_I row_I c_I = 0 (mod modulus).
struct Congruence {
    std::map<Partition, Int> row;
    Int modulus;
};

/// The sublattice of Z^{pi(n)} of admissible Chern vectors, together with a
/// canonical triangular congruence description.
struct DivisibilityLattice {
    int n;
    std::vector<Partition> basis;       // canonical partition order
    Mat hnf;                            // row basis of the lattice, staircase form
    std::vector<Congruence> congruences;

    bool contains(const std::vector<Int>& chern_in_basis_order) const;
    bool contains(const ChernVector& cv) const;
    /// |Z^N / L| = product of the HNF diagonal.
    Int group_order() const;
};

DivisibilityLattice divisibility_lattice(int n);

/// Spec-facing wrapper: just the congruence generators.
std::vector<Congruence> derive_divisibility_lattice(int n);

}  // namespace tcw
