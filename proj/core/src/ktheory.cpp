#include "tcw/ktheory.hpp"

#include <algorithm>

#include "tcw/error.hpp"
#include "tcw/linalg.hpp"

namespace tcw {

SymmetricSeries ch_gamma(int k, int n) {
    if (k < 1 || k > n || n > 6) fail(Errc::invalid_input, "ch_gamma: need 1 <= k <= n <= 6");
    // e^{x_i} - 1 per root.
    RatVec expm1(n + 1, Rat(0));
    Int fact = 1;
    for (int d = 1; d <= n; ++d) {
        fact *= d;
        expm1[d] = Rat(1) / Rat(fact);
    }
    std::vector<Series> roots;
    roots.reserve(n);
    for (int i = 0; i < n; ++i) roots.push_back(Series::univariate(n, n, i, expm1));
    return SymmetricSeries::from_series(elementary_symmetric_of(roots, k));
}

SymmetricSeries todd_class_series(int n) {
    static const RatVec td = {Rat(1), Rat(1, 2), Rat(1, 12), Rat(0), Rat(-1, 720), Rat(0), Rat(1, 30240)};
    RatVec coeffs(td.begin(), td.begin() + std::min<size_t>(td.size(), n + 1));
    Series prod = Series::one(n, n);
    for (int i = 0; i < n; ++i) prod = prod * Series::univariate(n, n, i, coeffs);
    return SymmetricSeries::from_series(prod);
}

KappaForm kappa_form(const Partition& omega, int n) {
    if (weight(omega) > n || n > 6) fail(Errc::invalid_input, "kappa_form: need weight(omega) <= n <= 6");
    const int m = weight(omega);

    std::vector<Series> gammas;
    for (int k = 1; k <= m; ++k) gammas.push_back(ch_gamma(k, n).expand());
    Series s_of_gamma = milnor_s_polynomial(omega, gammas.empty() ? std::vector<Series>{Series::one(n, n)} : gammas);

    Series integrand = s_of_gamma * todd_class_series(n).expand();
    auto in_chern = to_elementary_basis(integrand.degree_part(n), n);

    KappaForm form;
    form.omega = omega;
    for (const auto& p : partitions_of(n)) {
        auto it = in_chern.find(p);
        form.beta[p] = it == in_chern.end() ? Rat(0) : it->second;
    }
    return form;
}

std::vector<KappaForm> all_kappa_forms(int n) {
    std::vector<KappaForm> forms;
    for (const auto& omega : partitions_up_to(n)) forms.push_back(kappa_form(omega, n));
    return forms;
}

HSReport hattori_stong_check(const ChernVector& cv) {
    if (cv.n > 6) fail(Errc::invalid_input, "hattori_stong_check: n <= 6");
    HSReport report{true, {}};
    for (const auto& form : all_kappa_forms(cv.n)) {
        Rat value = 0;
        for (const auto& [p, beta] : form.beta) value += beta * Rat(cv.at(p));
        if (!is_integer(value)) {
            report.pass = false;
            report.violations.push_back({form.omega, value});
        }
    }
    return report;
}

bool DivisibilityLattice::contains(const std::vector<Int>& b) const {
    if (b.size() != basis.size()) fail(Errc::invalid_input, "lattice membership: wrong length");
    for (const auto& cong : congruences) {
        Int acc = 0;
        size_t i = 0;
        for (const auto& p : basis) {
            auto it = cong.row.find(p);
            if (it != cong.row.end()) acc += it->second * b[i];
            ++i;
        }
        if (acc % cong.modulus != 0) return false;
    }
    return true;
}

bool DivisibilityLattice::contains(const ChernVector& cv) const {
    std::vector<Int> b;
    b.reserve(basis.size());
    for (const auto& p : basis) b.push_back(cv.at(p));
    return contains(b);
}

Int DivisibilityLattice::group_order() const {
    Int order = 1;
    for (size_t i = 0; i < hnf.size(); ++i) order *= hnf[i][i];
    return order;
}

DivisibilityLattice divisibility_lattice(int n) {
    if (n < 1 || n > 6) fail(Errc::invalid_input, "divisibility_lattice: n in [1,6]");
    DivisibilityLattice lat;
    lat.n = n;
    lat.basis = partitions_of(n);
    const int num_basis = static_cast<int>(lat.basis.size());

    // Integer matrix K' = D * (kappa rows) and the condition K' b = 0 mod D.
    auto forms = all_kappa_forms(n);
    Int d = 1;
    for (const auto& form : forms)
        for (const auto& [p, beta] : form.beta) d = lcm(d, beta.get_den());

    Mat kd;
    for (const auto& form : forms) {
        IntVec row;
        row.reserve(num_basis);
        bool nonzero = false;
        for (const auto& p : lat.basis) {
            Rat scaled = form.beta.at(p) * Rat(d);
            row.push_back(to_int(scaled));
            if (row.back() % d != 0) nonzero = true;
        }
        if (nonzero) kd.push_back(std::move(row));  // rows that are 0 mod D impose nothing
    }

    // L = { b : exists y, K' b = D y } = projection of the kernel of [K' -D*I].
    const int rows = static_cast<int>(kd.size());
    Mat ext(rows, IntVec(num_basis + rows, 0));
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < num_basis; ++j) ext[i][j] = kd[i][j];
        ext[i][num_basis + i] = -d;
    }
    std::vector<IntVec> gens;
    for (const IntVec& k : kernel_basis(ext)) gens.emplace_back(k.begin(), k.begin() + num_basis);
    lat.hnf = hnf_row_basis(gens);
    if (static_cast<int>(lat.hnf.size()) != num_basis)
        fail(Errc::invalid_input, "divisibility lattice is not full rank");

    // Congruences: columns of H^{-1}. b in L  <=>  b * H^{-1} integral; the
    // triangular structure makes column j supported on partitions 0..j.
    RatMat hinv(num_basis, RatVec(num_basis, Rat(0)));
    {
        Mat h = lat.hnf;
        for (int col = 0; col < num_basis; ++col) {
            IntVec e(num_basis, 0);
            e[col] = 1;
            auto x = solve(h, e);
            if (!x) fail(Errc::invalid_input, "HNF basis not invertible");
            for (int i = 0; i < num_basis; ++i) hinv[i][col] = (*x)[i];
        }
    }
    for (int j = 0; j < num_basis; ++j) {
        Int modulus = 1;
        for (int i = 0; i < num_basis; ++i) modulus = lcm(modulus, hinv[i][j].get_den());
        if (modulus == 1) continue;  // no condition on this coordinate
        Congruence cong;
        cong.modulus = modulus;
        Int content = modulus;
        IntVec scaled(num_basis);
        for (int i = 0; i < num_basis; ++i) {
            scaled[i] = to_int(hinv[i][j] * Rat(modulus));
            content = gcd(content, scaled[i]);
        }
        for (int i = 0; i < num_basis; ++i) {
            Int v = scaled[i] / content;
            Int mod = cong.modulus / content;
            mpz_fdiv_r(v.get_mpz_t(), v.get_mpz_t(), mod.get_mpz_t());  // canonical rep in [0, mod)
            if (v != 0) cong.row[lat.basis[i]] = v;
        }
        cong.modulus /= content;
        if (cong.modulus > 1) lat.congruences.push_back(std::move(cong));
    }
    return lat;
}

std::vector<Congruence> derive_divisibility_lattice(int n) { return divisibility_lattice(n).congruences; }

}  // namespace tcw
