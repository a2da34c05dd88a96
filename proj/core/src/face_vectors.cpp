#include "tcw/face_vectors.hpp"

#include "tcw/error.hpp"

namespace tcw {

HVector f_to_h(const FVector& f, int n) {
    if (static_cast<int>(f.size()) != n) fail(Errc::invalid_input, "f_to_h: expected length " + std::to_string(n));
    // h_k = sum_{j=0}^{k} (-1)^{k-j} C(n-j, k-j) f_{j-1}, with f_{-1} = 1.
    HVector h(n + 1, 0);
    for (int k = 0; k <= n; ++k) {
        for (int j = 0; j <= k; ++j) {
            Int fj = (j == 0) ? Int(1) : f[j - 1];
            Int term = binomial(n - j, k - j) * fj;
            h[k] += ((k - j) % 2 == 0) ? term : Int(-term);
        }
    }
    return h;
}

FVector h_to_f(const HVector& h) {
    const int n = static_cast<int>(h.size()) - 1;
    if (n < 1) fail(Errc::invalid_input, "h_to_f: h too short");
    // f_{k-1} = sum_{j=0}^{k} C(n-j, k-j) h_j; k = 1..n.
    FVector f(n, 0);
    for (int k = 1; k <= n; ++k) {
        Int v = 0;
        for (int j = 0; j <= k; ++j) v += binomial(n - j, k - j) * h[j];
        f[k - 1] = v;
    }
    return f;
}

GVector h_to_g(const HVector& h) {
    const int n = static_cast<int>(h.size()) - 1;
    GVector g;
    g.push_back(h[0]);
    for (int k = 1; k <= n / 2; ++k) g.push_back(h[k] - h[k - 1]);
    return g;
}

HVector g_to_h(const GVector& g, int n) {
    if (static_cast<int>(g.size()) != n / 2 + 1)
        fail(Errc::invalid_input, "g_to_h: expected length " + std::to_string(n / 2 + 1));
    HVector h(n + 1, 0);
    Int acc = 0;
    for (int k = 0; k <= n / 2; ++k) {
        acc += g[k];
        h[k] = acc;
        if (h[n - k] != 0 && h[n - k] != acc)
            fail(Errc::symmetry_violation, "g_to_h: Dehn-Sommerville mirror mismatch at k=" + std::to_string(k));
        h[n - k] = acc;
    }
    return h;
}

FVector g_to_f(const GVector& g, int n) { return h_to_f(g_to_h(g, n)); }

bool dehn_sommerville_holds(const HVector& h) {
    const int n = static_cast<int>(h.size()) - 1;
    for (int k = 0; k <= n; ++k)
        if (h[k] != h[n - k]) return false;
    return true;
}

Int pseudopower(const Int& a, int i) {
    if (a < 0 || i < 1) fail(Errc::invalid_input, "pseudopower: need a >= 0, i >= 1");
    if (a == 0) return 0;

    // Greedy binomial i-expansion: a = C(a_i, i) + C(a_{i-1}, i-1) + ...
    Int rest = a;
    Int result = 0;
    int k = i;
    while (rest > 0 && k >= 1) {
        Int top = k;  // smallest with C(top, k) = 1
        while (binomial(top + 1, k) <= rest) ++top;
        rest -= binomial(top, k);
        result += binomial(top + 1, k + 1);
        --k;
    }
    if (rest != 0) fail(Errc::invalid_input, "pseudopower: expansion failed");
    return result;
}

GValidity is_valid_g(const GVector& g, int n) {
    if (static_cast<int>(g.size()) != n / 2 + 1)
        return {false, "length != floor(n/2)+1"};
    if (g[0] != 1) return {false, "g_0 != 1"};
    if (n / 2 >= 1 && g[1] < 0) return {false, "g_1 < 0"};
    for (int k = 1; k + 1 <= n / 2; ++k) {
        if (g[k + 1] < 0) return {false, "g_" + std::to_string(k + 1) + " < 0"};
        if (g[k] < 0 || g[k + 1] > pseudopower(g[k], k))
            return {false, "g_" + std::to_string(k + 1) + " > g_" + std::to_string(k) + "^<" + std::to_string(k) + ">"};
    }
    return {true, ""};
}

}  // namespace tcw
