#include "tcw/intersection.hpp"

#include <algorithm>
#include <set>

#include "tcw/error.hpp"
#include "tcw/linalg.hpp"

namespace tcw {

int monomial_degree(const RayMonomial& m) {
    int d = 0;
    for (const auto& [ray, e] : m) d += e;
    return d;
}

RingPresentation presentation(const Fan& fan) {
    const int n = fan.dim();
    const int m = static_cast<int>(fan.rays().size());

    RingPresentation pres;
    pres.dim = n;
    pres.linear_ideal.assign(n, IntVec(m, 0));
    for (int j = 0; j < m; ++j)
        for (int i = 0; i < n; ++i) pres.linear_ideal[i][j] = fan.rays()[j][i];

    // Minimal non-faces: F u {r} with F a face, the union not a face, and
    // every proper subset a face.
    std::set<Cone> faces;
    for (const auto& group : all_cones(fan))
        for (const Cone& c : group) faces.insert(c);

    std::set<Cone> nonfaces;
    for (const Cone& f : faces) {
        for (int r = 0; r < m; ++r) {
            if (std::binary_search(f.begin(), f.end(), r)) continue;
            Cone s = f;
            s.push_back(r);
            std::sort(s.begin(), s.end());
            if (faces.count(s)) continue;
            bool minimal = true;
            for (size_t skip = 0; skip < s.size() && minimal; ++skip) {
                Cone sub;
                for (size_t j = 0; j < s.size(); ++j)
                    if (j != skip) sub.push_back(s[j]);
                if (!faces.count(sub)) minimal = false;
            }
            if (minimal) nonfaces.insert(std::move(s));
        }
    }
    pres.nonfaces.assign(nonfaces.begin(), nonfaces.end());
    return pres;
}

namespace {

Int max_abs_coord(const Fan& fan) {
    Int m = 0;
    for (const Ray& r : fan.rays())
        for (const Int& v : r) m = std::max(m, Int(abs(v)));
    return m;
}

// Fixed-point data for one probe: per maximal cone the weights <u_i, xi> of
// its rays and their product. Returns false when some weight vanishes.
bool try_build_weights(const Fan& fan, const IntVec& probe, std::vector<std::vector<Rat>>& weights,
                       std::vector<Rat>& denominators) {
    const int n = fan.dim();
    weights.clear();
    denominators.clear();
    for (const Cone& c : fan.max_cones()) {
        Mat inv = inverse_unimodular(fan.cone_matrix(c));
        std::vector<Rat> w(n);
        Rat denom = 1;
        for (int i = 0; i < n; ++i) {
            Int val = 0;
            for (int row = 0; row < n; ++row) val += probe[row] * inv[row][i];
            if (val == 0) return false;
            w[i] = Rat(val);
            denom *= w[i];
        }
        weights.push_back(std::move(w));
        denominators.push_back(denom);
    }
    return true;
}

IntVec power_probe(int n, const Int& m) {
    IntVec probe(n);
    Int pow = 1;
    for (int i = 0; i < n; ++i) {
        probe[i] = pow;
        pow *= m;
    }
    return probe;
}

Int localize(const Fan& fan, const RayMonomial& mono, const EvalCache& cache) {
    const auto& cones = fan.max_cones();
    Rat total = 0;
    for (size_t ci = 0; ci < cones.size(); ++ci) {
        const Cone& c = cones[ci];
        Rat prod = 1;
        bool zero = false;
        for (const auto& [ray, e] : mono) {
            auto it = std::lower_bound(c.begin(), c.end(), ray);
            if (it == c.end() || *it != ray) {
                zero = true;  // rays outside the cone restrict to zero
                break;
            }
            const Rat& w = cache.weights[ci][it - c.begin()];
            for (int k = 0; k < e; ++k) prod *= w;
        }
        if (!zero) total += prod / cache.denominators[ci];
    }
    if (!is_integer(total))
        fail(Errc::non_integer_result, "localization sum is not an integer: " + to_string(total));
    return to_int(total);
}

}  // namespace

void ensure_localization(const Fan& fan, EvalCache& cache) {
    if (cache.ready) return;
    Int m = max_abs_coord(fan) + 1;
    for (int tries = 0; tries < 1000; ++tries) {
        if (try_build_weights(fan, power_probe(fan.dim(), m), cache.weights, cache.denominators)) {
            cache.ready = true;
            return;
        }
        m += 1;
    }
    fail(Errc::invalid_input, "localization probe search did not converge");
}

Int evaluate(const Fan& fan, const RayMonomial& m, EvalCache& cache) {
    if (monomial_degree(m) != fan.dim())
        fail(Errc::invalid_input, "evaluate: monomial degree must equal the fan dimension");
    for (const auto& [ray, e] : m)
        if (ray < 0 || ray >= static_cast<int>(fan.rays().size()) || e <= 0)
            fail(Errc::invalid_input, "evaluate: bad monomial");
    ensure_localization(fan, cache);
    return localize(fan, m, cache);
}

Int evaluate(const Fan& fan, const RayMonomial& m) {
    EvalCache cache;
    return evaluate(fan, m, cache);
}

Int evaluate_with_probe(const Fan& fan, const RayMonomial& m, const IntVec& probe) {
    if (monomial_degree(m) != fan.dim())
        fail(Errc::invalid_input, "evaluate: monomial degree must equal the fan dimension");
    EvalCache cache;
    if (!try_build_weights(fan, probe, cache.weights, cache.denominators))
        fail(Errc::invalid_input, "probe gives a zero localization denominator");
    return localize(fan, m, cache);
}

namespace {

// Support of a monomial as a sorted index set.
Cone support(const RayMonomial& m) {
    Cone s;
    s.reserve(m.size());
    for (const auto& [ray, e] : m) s.push_back(ray);
    return s;
}

Int reduce_in_ring(const Fan& fan, const RayMonomial& mono, Budget& budget, EvalCache& cache) {
    if (auto it = cache.ring_values.find(mono); it != cache.ring_values.end()) return it->second;
    budget.charge(Errc::oracle_budget_exceeded);

    const Cone supp = support(mono);
    if (!fan.has_cone(supp)) {
        cache.ring_values[mono] = 0;
        return 0;
    }
    bool squarefree = true;
    for (const auto& [ray, e] : mono)
        if (e > 1) squarefree = false;
    if (squarefree) {
        // Degree-n square-free face monomial: its support is a maximal cone.
        cache.ring_values[mono] = 1;
        return 1;
    }

    // Rewrite one factor of the smallest repeated ray r through the linear
    // relations of the lexicographically first maximal cone containing the
    // whole support (overlap with the support is then maximal). Every term
    // gains a ray outside that cone, so the support grows strictly.
    int r = -1;
    for (const auto& [ray, e] : mono)
        if (e > 1) {
            r = ray;
            break;
        }
    const Cone* sigma = nullptr;
    for (const Cone& c : fan.max_cones()) {
        if (std::includes(c.begin(), c.end(), supp.begin(), supp.end())) {
            sigma = &c;
            break;
        }
    }
    Mat inv = inverse_unimodular(fan.cone_matrix(*sigma));
    const int pos = static_cast<int>(std::lower_bound(sigma->begin(), sigma->end(), r) - sigma->begin());
    const int n = fan.dim();

    RayMonomial base = mono;
    if (--base[r] == 0) base.erase(r);

    Int acc = 0;
    for (int k = 0; k < static_cast<int>(fan.rays().size()); ++k) {
        if (std::binary_search(sigma->begin(), sigma->end(), k)) continue;
        // v_r = -sum_{k not in sigma} <u_{sigma,r}, v_k> v_k
        Int coeff = 0;
        for (int row = 0; row < n; ++row) coeff += fan.rays()[k][row] * inv[row][pos];
        if (coeff == 0) continue;
        RayMonomial next = base;
        ++next[k];
        acc += -coeff * reduce_in_ring(fan, next, budget, cache);
    }
    cache.ring_values[mono] = acc;
    return acc;
}

}  // namespace

Int evaluate_ring_reduction(const Fan& fan, const RayMonomial& m, Budget& budget, EvalCache& cache) {
    if (monomial_degree(m) != fan.dim())
        fail(Errc::invalid_input, "evaluate: monomial degree must equal the fan dimension");
    return reduce_in_ring(fan, m, budget, cache);
}

Int evaluate_ring_reduction(const Fan& fan, const RayMonomial& m, Budget& budget) {
    EvalCache cache;
    return evaluate_ring_reduction(fan, m, budget, cache);
}

namespace {

Poly poly_mul(const Poly& a, const Poly& b) {
    Poly out;
    for (const auto& [ea, ca] : a) {
        for (const auto& [eb, cb] : b) {
            std::vector<int> e(ea.size());
            for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            out[e] += ca * cb;
        }
    }
    for (auto it = out.begin(); it != out.end();)
        it = it->second == 0 ? out.erase(it) : std::next(it);
    return out;
}

}  // namespace

std::vector<Poly> eliminated_relations(const Fan& fan, const std::vector<int>& keep) {
    const int n = fan.dim();
    const int m = static_cast<int>(fan.rays().size());
    if (static_cast<int>(keep.size()) != m - n)
        fail(Errc::invalid_input, "eliminated_relations: need exactly m-n kept rays");

    std::vector<bool> kept(m, false);
    for (int k : keep) kept[k] = true;
    std::vector<int> elim;
    for (int j = 0; j < m; ++j)
        if (!kept[j]) elim.push_back(j);

    // Lambda_E block (columns of eliminated rays) must be unimodular; then
    // v_E = -Lambda_E^{-1} Lambda_K v_K with integer entries.
    Mat lam_e(n, IntVec(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) lam_e[i][j] = fan.rays()[elim[j]][i];
    Mat inv = inverse_unimodular(lam_e);

    const int kk = static_cast<int>(keep.size());
    std::vector<Poly> ray_image(m);
    for (int j = 0; j < kk; ++j) {
        std::vector<int> e(kk, 0);
        e[j] = 1;
        ray_image[keep[j]][e] = 1;
    }
    for (int j = 0; j < n; ++j) {  // eliminated ray elim[j]
        Poly p;
        for (int t = 0; t < kk; ++t) {
            Int coeff = 0;
            for (int i = 0; i < n; ++i) coeff += inv[j][i] * fan.rays()[keep[t]][i];
            if (coeff == 0) continue;
            std::vector<int> e(kk, 0);
            e[t] = 1;
            p[e] = -coeff;
        }
        ray_image[elim[j]] = std::move(p);
    }

    std::vector<Poly> out;
    for (const Cone& nf : presentation(fan).nonfaces) {
        Poly p;
        p[std::vector<int>(kk, 0)] = 1;
        for (int rayidx : nf) p = poly_mul(p, ray_image[rayidx]);
        out.push_back(std::move(p));
    }
    return out;
}

namespace {

bool divides(const std::vector<int>& a, const std::vector<int>& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

// Reduces p modulo the generators by leading-term division (lex order);
// requires unit leading coefficients on the generators.
Poly reduce_mod(Poly p, const std::vector<Poly>& gens) {
    long guard = 0;
    bool changed = true;
    while (changed && !p.empty()) {
        if (++guard > 10000) fail(Errc::invalid_input, "ideal reduction did not terminate");
        changed = false;
        for (auto term = p.rbegin(); term != p.rend() && !changed; ++term) {
            for (const Poly& g : gens) {
                if (g.empty()) continue;
                auto lead = std::prev(g.end());
                if (!(lead->second == 1 || lead->second == -1)) continue;
                if (!divides(lead->first, term->first)) continue;
                std::vector<int> shift(term->first.size());
                for (size_t i = 0; i < shift.size(); ++i) shift[i] = term->first[i] - lead->first[i];
                Int factor = term->second * lead->second;  // lead is a unit
                Poly scaled;
                for (const auto& [e, c] : g) {
                    std::vector<int> ne(e.size());
                    for (size_t i = 0; i < e.size(); ++i) ne[i] = e[i] + shift[i];
                    scaled[ne] = c * factor;
                }
                for (const auto& [e, c] : scaled) {
                    auto it = p.find(e);
                    if (it == p.end()) {
                        p[e] = -c;
                    } else {
                        it->second -= c;
                        if (it->second == 0) p.erase(it);
                    }
                }
                changed = true;
                break;
            }
        }
    }
    return p;
}

}  // namespace

bool same_ideal(const std::vector<Poly>& a, const std::vector<Poly>& b) {
    for (const Poly& p : a)
        if (!reduce_mod(p, b).empty()) return false;
    for (const Poly& p : b)
        if (!reduce_mod(p, a).empty()) return false;
    return true;
}

}  // namespace tcw
