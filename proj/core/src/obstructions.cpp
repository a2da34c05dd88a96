#include "tcw/obstructions.hpp"

#include <algorithm>

#include "tcw/error.hpp"
#include "tcw/linalg.hpp"

namespace tcw {

namespace {

// Canonical pivot order: c_n and c_1 c_{n-1} first, then c_1^n, then the
// remaining partitions in basis order. Reproduces the printed presentations
// in dimensions 3 and 4 and stays deterministic beyond.
std::vector<int> pivot_column_order(const std::vector<Partition>& basis, int n) {
    std::vector<Partition> preferred;
    preferred.push_back({n});
    if (n >= 2) {
        preferred.push_back({n - 1, 1});
        preferred.push_back(Partition(n, 1));
    }
    std::vector<int> order;
    auto push = [&](const Partition& p) {
        auto it = std::find(basis.begin(), basis.end(), p);
        if (it == basis.end()) return;
        int idx = static_cast<int>(it - basis.begin());
        if (std::find(order.begin(), order.end(), idx) == order.end()) order.push_back(idx);
    };
    for (const auto& p : preferred) push(p);
    for (const auto& p : basis) push(p);
    return order;
}

}  // namespace

std::vector<ObstructionEquation> obstruction_equations(int n) {
    if (n < 1 || n > 6) fail(Errc::invalid_input, "obstruction_equations: n in [1,6]");
    ToddTable table = todd_table(n);
    const int num_basis = static_cast<int>(table.basis.size());
    const int num_g = n / 2 + 1;

    // Rows: [T_n^p coefficients | -chi^p(g) coefficients] = 0, where
    // chi^p(g) = (-1)^p (g_0 + ... + g_p), g_0 = 1. Column 0 of the affine
    // block is the constant, column k the g_k coefficient.
    RatMat rows;
    for (int p = 0; p <= n / 2; ++p) {
        RatVec row(num_basis + num_g, Rat(0));
        for (int b = 0; b < num_basis; ++b) row[b] = table.rows[p][b];
        Rat sign = (p % 2 == 0) ? Rat(1) : Rat(-1);
        for (int k = 0; k <= std::min(p, num_g - 1); ++k) row[num_basis + k] -= sign;
        rows.push_back(std::move(row));
    }

    auto rref = rref_with_column_order(rows, pivot_column_order(table.basis, n));

    std::vector<ObstructionEquation> out;
    for (size_t r = 0; r < rref.m.size(); ++r) {
        if (rref.pivots[r] < 0) continue;
        // Scale to integers, pivot positive.
        Int denom = 1;
        for (const Rat& v : rref.m[r]) denom = lcm(denom, v.get_den());
        IntVec ints;
        ints.reserve(rref.m[r].size());
        for (const Rat& v : rref.m[r]) ints.push_back(to_int(v * Rat(denom)));
        Int content = 0;
        for (const Int& v : ints) content = gcd(content, v);
        if (content > 1)
            for (Int& v : ints) v /= content;
        if (ints[rref.pivots[r]] < 0)
            for (Int& v : ints) v = -v;

        ObstructionEquation eq;
        for (int b = 0; b < num_basis; ++b)
            if (ints[b] != 0) eq.lhs[table.basis[b]] = ints[b];
        eq.rhs.assign(num_g, 0);
        for (int k = 0; k < num_g; ++k) eq.rhs[k] = -ints[num_basis + k];  // move to the right-hand side
        out.push_back(std::move(eq));
    }
    return out;
}

std::vector<std::pair<std::map<Partition, Int>, Int>> obstruction_equations_at(int n, const GVector& g) {
    if (static_cast<int>(g.size()) != n / 2 + 1)
        fail(Errc::invalid_input, "obstruction_equations_at: g has wrong length");
    std::vector<std::pair<std::map<Partition, Int>, Int>> out;
    for (const auto& eq : obstruction_equations(n)) {
        Int rhs = eq.rhs[0];
        for (size_t k = 1; k < eq.rhs.size(); ++k) rhs += eq.rhs[k] * g[k];
        out.emplace_back(eq.lhs, rhs);
    }
    return out;
}

bool obstructions_hold(const ChernVector& cv, const GVector& g) {
    for (const auto& [lhs, rhs] : obstruction_equations_at(cv.n, g)) {
        Int acc = 0;
        for (const auto& [p, c] : lhs) acc += c * cv.at(p);
        if (acc != rhs) return false;
    }
    return true;
}

std::vector<GVector> feasible_g_for(const ChernVector& cv) {
    std::vector<GVector> out;
    if (cv.n == 3) {
        const Int& c1c2 = cv.at({2, 1});
        const Int& c3 = cv.at({3});
        if (c1c2 != 24) return out;
        Int twice_g1 = c3 - 4;
        if (twice_g1 < 0 || twice_g1 % 2 != 0) return out;
        GVector g{1, twice_g1 / 2};
        if (is_valid_g(g, 3).valid && obstructions_hold(cv, g)) out.push_back(g);
        return out;
    }
    if (cv.n != 4) fail(Errc::invalid_input, "feasible_g_for: n must be 3 or 4");

    const Int& c1sq_c2 = cv.at({2, 1, 1});
    const Int& c2sq = cv.at({2, 2});
    const Int& c1c3 = cv.at({3, 1});

    // Hattori-Stong parity conditions specialised to the comb4 subspace.
    if (c1sq_c2 % 2 != 0) return out;
    if ((c1sq_c2 + 2 * c2sq + c1c3) % 4 != 0) return out;

    Int budget = cv.at({4}) - 5;  // 3 g1 + g2
    if (budget < 0) return out;
    for (Int g1 = 0; 3 * g1 <= budget; ++g1) {
        GVector g{1, g1, budget - 3 * g1};
        if (!is_valid_g(g, 4).valid) continue;
        if (!obstructions_hold(cv, g)) continue;
        out.push_back(g);
    }
    return out;
}

}  // namespace tcw
