#pragma once

#include <vector>

#include "tcw/budget.hpp"
#include "tcw/numeric.hpp"

namespace tcw {

/// One inequality  a . x + c >= 0  with integer data.
struct LinIneq {
    IntVec a;
    Int c;
};

/// Decides feasibility of a system of linear inequalities over the rationals
/// by Fourier-Motzkin elimination. The budget caps the total number of rows
/// ever produced and throws size_limit when exceeded.
bool fm_feasible(std::vector<LinIneq> rows, int num_vars, Budget& budget);

}  // namespace tcw
