#pragma once

#include <string>
#include <vector>

#include "tcw/numeric.hpp"

namespace tcw {

// Face-count calculus for simple n-polytopes (equivalently, for complete
// simplicial fans through normal-fan duality):
//   f = (f_0, ..., f_{n-1})       with f_{-1} = 1 implicit
//   h = (h_0, ..., h_n)           binomial transform of f
//   g = (g_0, ..., g_{floor(n/2)}) difference sequence of the first half of h
using FVector = std::vector<Int>;
using HVector = std::vector<Int>;
using GVector = std::vector<Int>;

/// sum_k h_k t^{n-k} = sum_k f_{k-1} (t-1)^{n-k}
HVector f_to_h(const FVector& f, int n);

/// g_0 = h_0, g_k = h_k - h_{k-1} for k = 1..floor(n/2).
GVector h_to_g(const HVector& h);

/// Rebuilds h from g by partial sums and the Dehn-Sommerville symmetry
/// h_k = h_{n-k}, then inverts the binomial transform.
FVector g_to_f(const GVector& g, int n);

HVector g_to_h(const GVector& g, int n);
FVector h_to_f(const HVector& h);

bool dehn_sommerville_holds(const HVector& h);

/// The pseudo-power a^<i> built from the unique binomial i-expansion of a.
Int pseudopower(const Int& a, int i);

struct GValidity {
    bool valid;
    std::string violated;  // empty when valid
};

/// g-theorem test: g_0 = 1, g_1 >= 0, 0 <= g_{k+1} <= g_k^<k>.
GValidity is_valid_g(const GVector& g, int n);

}  // namespace tcw
