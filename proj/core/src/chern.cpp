#include "tcw/chern.hpp"

#include <algorithm>

#include "tcw/error.hpp"
#include "tcw/intersection.hpp"
#include "tcw/linalg.hpp"

namespace tcw {

const Int& ChernVector::at(const Partition& p) const {
    auto it = values.find(p);
    if (it == values.end()) fail(Errc::invalid_input, "chern vector lacks " + partition_key(p));
    return it->second;
}

ChernVector make_chern_vector(int n, const std::vector<Int>& vals) {
    auto parts = partitions_of(n);
    if (parts.size() != vals.size()) fail(Errc::invalid_input, "chern vector needs one value per partition");
    ChernVector cv;
    cv.n = n;
    for (size_t i = 0; i < parts.size(); ++i) cv.values[parts[i]] = vals[i];
    return cv;
}

namespace {

// Elementary symmetric values e_0..e_n of the given numbers.
std::vector<Rat> esf(const std::vector<Rat>& x) {
    std::vector<Rat> e(x.size() + 1, Rat(0));
    e[0] = 1;
    for (size_t i = 0; i < x.size(); ++i)
        for (size_t j = std::min(e.size() - 1, i + 1); j >= 1; --j) e[j] += x[i] * e[j - 1];
    return e;
}

}  // namespace

ChernVector chern_numbers(const Fan& fan) {
    const int n = fan.dim();
    auto parts = partitions_of(n);

    // At the fixed point of a maximal cone the Chern class restricts to
    // prod_{i in cone} (1 + w_i), so c_j restricts to e_j of the weights.
    EvalCache cache;
    ensure_localization(fan, cache);

    std::map<Partition, Rat> acc;
    for (const auto& p : parts) acc[p] = 0;
    for (size_t ci = 0; ci < fan.max_cones().size(); ++ci) {
        auto e = esf(cache.weights[ci]);
        for (const auto& p : parts) {
            Rat prod = 1;
            for (int part : p) prod *= e[part];
            acc[p] += prod / cache.denominators[ci];
        }
    }

    ChernVector cv;
    cv.n = n;
    for (const auto& p : parts) {
        if (!is_integer(acc[p]))
            fail(Errc::non_integer_result, "Chern number " + partition_key(p) + " is not an integer");
        cv.values[p] = to_int(acc[p]);
    }
    return cv;
}

ChernVector chern_numbers_termwise(const Fan& fan) {
    const int n = fan.dim();
    const int m = static_cast<int>(fan.rays().size());
    EvalCache cache;

    // c_j = sum of all square-free degree-j ray monomials.
    auto chern_class = [&](int j) {
        std::map<RayMonomial, Int> terms;
        std::vector<int> idx(j);
        for (int i = 0; i < j; ++i) idx[i] = i;
        while (true) {
            RayMonomial mono;
            for (int i : idx) mono[i] = 1;
            terms[mono] = 1;
            int k = j - 1;
            while (k >= 0 && idx[k] == m - j + k) --k;
            if (k < 0) break;
            ++idx[k];
            for (int t = k + 1; t < j; ++t) idx[t] = idx[t - 1] + 1;
        }
        return terms;
    };

    ChernVector cv;
    cv.n = n;
    for (const auto& p : partitions_of(n)) {
        std::map<RayMonomial, Int> expansion{{RayMonomial{}, Int(1)}};
        for (int part : p) {
            std::map<RayMonomial, Int> next;
            for (const auto& [ma, ca] : expansion) {
                for (const auto& [mb, cb] : chern_class(part)) {
                    RayMonomial prod = ma;
                    for (const auto& [ray, e] : mb) prod[ray] += e;
                    next[prod] += ca * cb;
                }
            }
            expansion = std::move(next);
        }
        Int total = 0;
        for (const auto& [mono, coeff] : expansion) total += coeff * evaluate(fan, mono, cache);
        cv.values[p] = total;
    }
    return cv;
}

namespace {

// Coefficients of t / (1 - e^{-t}) through degree 6.
const RatVec& todd_series_coeffs() {
    static const RatVec td = {Rat(1), Rat(1, 2), Rat(1, 12), Rat(0), Rat(-1, 720), Rat(0), Rat(1, 30240)};
    return td;
}

// Q(y0, x) = sum_j q_j(y0) x^j truncated at degree n.
RatVec q_coeffs(const Rat& y0, int n) {
    const RatVec& td = todd_series_coeffs();
    RatVec q(n + 1, Rat(0));
    q[0] = 1;
    if (n >= 1) q[1] = (1 - y0) / 2;
    Rat pow = (y0 + 1) * (y0 + 1);
    for (int j = 2; j <= n; ++j) {
        q[j] = td[j] * pow;
        pow *= (y0 + 1);
    }
    return q;
}

}  // namespace

ToddTable todd_table(int n) {
    if (n < 1 || n > 6) fail(Errc::invalid_input, "todd_table: n must be in [1,6]");
    ToddTable table;
    table.n = n;
    table.basis = partitions_of(n);

    // Specialize y at 0..n, expand the product of per-root series, convert
    // the degree-n part to the Chern basis, then interpolate in y (the y
    // degree of every coefficient is at most n, so n+1 nodes are exact).
    const int nodes = n + 1;
    std::vector<std::map<Partition, Rat>> at_node(nodes);
    for (int y0 = 0; y0 < nodes; ++y0) {
        Series prod = Series::one(n, n);
        RatVec q = q_coeffs(Rat(y0), n);
        for (int k = 0; k < n; ++k) prod = prod * Series::univariate(n, n, k, q);
        at_node[y0] = to_elementary_basis(prod.degree_part(n), n);
    }

    // Lagrange interpolation per basis coordinate: solve the Vandermonde
    // system exactly.
    RatMat vander(nodes, RatVec(nodes));
    for (int i = 0; i < nodes; ++i) {
        Rat pow = 1;
        for (int j = 0; j < nodes; ++j) {
            vander[i][j] = pow;
            pow *= i;
        }
    }
    table.rows.assign(nodes, RatVec(table.basis.size(), Rat(0)));
    for (size_t b = 0; b < table.basis.size(); ++b) {
        RatVec rhs(nodes);
        for (int i = 0; i < nodes; ++i) {
            auto it = at_node[i].find(table.basis[b]);
            rhs[i] = it == at_node[i].end() ? Rat(0) : it->second;
        }
        auto coeffs = solve(vander, rhs);
        if (!coeffs) fail(Errc::invalid_input, "todd_table: interpolation failed");
        for (int p = 0; p < nodes; ++p) table.rows[p][b] = (*coeffs)[p];
    }
    return table;
}

RatVec generalized_todd_genus(const ChernVector& cv) {
    ToddTable table = todd_table(cv.n);
    RatVec out(cv.n + 1, Rat(0));
    for (int p = 0; p <= cv.n; ++p)
        for (size_t b = 0; b < table.basis.size(); ++b) out[p] += table.rows[p][b] * Rat(cv.at(table.basis[b]));
    return out;
}

std::vector<Int> chi_y_from_g(const GVector& g, int n) {
    HVector h = g_to_h(g, n);
    std::vector<Int> chi(n + 1);
    for (int p = 0; p <= n; ++p) chi[p] = (p % 2 == 0) ? h[p] : Int(-h[p]);
    return chi;
}

}  // namespace tcw
