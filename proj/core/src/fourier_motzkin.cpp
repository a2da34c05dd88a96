#include "tcw/fourier_motzkin.hpp"

#include <algorithm>
#include <set>

#include "tcw/error.hpp"

namespace tcw {

namespace {

void normalize(LinIneq& r) {
    Int g = vec_gcd(r.a);
    g = gcd(g, r.c);
    if (g > 1) {
        for (Int& v : r.a) v /= g;
        r.c /= g;
    }
}

std::vector<Int> row_key(const LinIneq& r) {
    std::vector<Int> k = r.a;
    k.push_back(r.c);
    return k;
}

}  // namespace

bool fm_feasible(std::vector<LinIneq> rows, int num_vars, Budget& budget) {
    for (auto& r : rows) normalize(r);

    std::vector<bool> eliminated(num_vars, false);
    for (int round = 0; round < num_vars; ++round) {
        // Drop constant rows, failing fast on a violated one.
        std::vector<LinIneq> active;
        std::set<std::vector<Int>> seen;
        for (auto& r : rows) {
            if (is_zero_vec(r.a)) {
                if (r.c < 0) return false;
                continue;
            }
            if (seen.insert(row_key(r)).second) active.push_back(std::move(r));
        }
        rows = std::move(active);
        if (rows.empty()) return true;

        // Pick the remaining variable with the fewest pos*neg combinations.
        int best = -1;
        long long best_cost = 0;
        for (int v = 0; v < num_vars; ++v) {
            if (eliminated[v]) continue;
            long long pos = 0, neg = 0;
            for (const auto& r : rows) {
                if (r.a[v] > 0)
                    ++pos;
                else if (r.a[v] < 0)
                    ++neg;
            }
            long long cost = pos * neg;
            if (best == -1 || cost < best_cost) {
                best = v;
                best_cost = cost;
            }
        }
        if (best == -1) break;
        eliminated[best] = true;

        std::vector<LinIneq> next;
        std::vector<const LinIneq*> pos, neg;
        for (const auto& r : rows) {
            if (r.a[best] > 0)
                pos.push_back(&r);
            else if (r.a[best] < 0)
                neg.push_back(&r);
            else
                next.push_back(r);
        }
        for (const LinIneq* p : pos) {
            for (const LinIneq* q : neg) {
                budget.charge(Errc::size_limit);
                LinIneq comb;
                const Int pc = p->a[best];
                const Int qc = -q->a[best];
                comb.a.resize(num_vars);
                for (int j = 0; j < num_vars; ++j) comb.a[j] = qc * p->a[j] + pc * q->a[j];
                comb.c = qc * p->c + pc * q->c;
                normalize(comb);
                if (is_zero_vec(comb.a)) {
                    if (comb.c < 0) return false;
                    continue;
                }
                next.push_back(std::move(comb));
            }
        }
        rows = std::move(next);
    }

    for (const auto& r : rows) {
        if (is_zero_vec(r.a) && r.c < 0) return false;
    }
    return true;
}

}  // namespace tcw
