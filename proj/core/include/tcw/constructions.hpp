#pragma once

#include <string>
#include <vector>

#include "tcw/fan.hpp"
#include "tcw/numeric.hpp"

namespace tcw {

/// Identifies a member of one of the named fan families.
struct FamilySpec {
    enum class Tag { CPn, Kleinschmidt, SigmaA, DeltaAB, BlowupSequence };
    Tag tag;
    std::vector<Int> params;  // CPn: {n}; Kleinschmidt: {n, a_1..a_r};
                              // SigmaA: {a}; DeltaAB: {a, b};
                              // BlowupSequence: base params + {blowup count}
    std::string describe() const;
};

/// Fan of CP^n: rays e_1..e_n and -(e_1+...+e_n), all n-subsets as cones.
Fan cpn(int n);

/// Kleinschmidt fan Sigma_n(a_1,...,a_r): rays U = {e_1..e_r, (-1,..,-1,0,..)}
/// and V = {e_{r+1}..e_n, (a_1..a_r,-1,..,-1)}; maximal cones take all but
/// one ray from U and all but one from V. Needs 1 <= r <= n-1 and weakly
/// increasing a_k >= 0 (param_order otherwise).
Fan kleinschmidt(int n, const std::vector<Int>& a);

/// The cube fan Sigma(a): three opposite ray pairs
///   u1=(1,0,0), u2=(-1,a,0); v1=(0,1,0), v2=(0,-1,1); w1=(0,0,1), w2=(0,0,-1)
/// with one ray from each pair spanning the eight maximal cones. Construction
/// validates the printed cohomology fingerprint (validation_failed).
Fan sigma_a(const Int& a);

/// The dimension-4 fan Delta(a,b): join of the twice-subdivided CP^3 fan
/// (rays u1..u4, x=(-1,-1,0,0), y=(0,-1,1,0)) with the rank-one fan
/// {v1=e4, v2=(alpha,-1)}; v2's free part comes from the calibration frozen
/// in the source (data/calibration/delta_ab_scan.log holds the scan record).
/// Construction validates the printed Stanley-Reisner ideal and the
/// (c1c3, c4, g) fingerprint (calibration_failed).
Fan delta_ab(const Int& a, const Int& b);

/// Delta-family member with explicit free coordinates for v2; used by the
/// calibration scan and the calibration tests.
Fan delta_family_raw(const IntVec& alpha);

/// Blow-up at a torus-fixed point: star subdivision of the lexicographically
/// first maximal cone (or the given one).
Fan blowup_fixed_point(const Fan& fan);
Fan blowup_fixed_point(const Fan& fan, const Cone& site);

Fan family_fan(const FamilySpec& spec);

}  // namespace tcw
