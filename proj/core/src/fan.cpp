#include "tcw/fan.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "tcw/error.hpp"
#include "tcw/fourier_motzkin.hpp"
#include "tcw/linalg.hpp"

namespace tcw {

Fan::Fan(int dim, std::vector<Ray> rays, std::vector<Cone> max_cones)
    : dim_(dim), rays_(std::move(rays)), max_cones_(std::move(max_cones)) {
    if (dim_ < 1 || dim_ > kMaxDim) fail(Errc::size_limit, "fan dimension must be in [1," + std::to_string(kMaxDim) + "]");
    if (rays_.size() > kMaxRays) fail(Errc::size_limit, "too many rays");
    if (max_cones_.size() > kMaxCones) fail(Errc::size_limit, "too many maximal cones");
    if (rays_.empty() || max_cones_.empty()) fail(Errc::invalid_input, "fan needs rays and maximal cones");

    for (const Ray& r : rays_) {
        if (static_cast<int>(r.size()) != dim_) fail(Errc::invalid_input, "ray length != dim");
        if (!is_primitive(r)) fail(Errc::invalid_input, "ray is zero or not primitive");
    }
    std::set<Ray> distinct(rays_.begin(), rays_.end());
    if (distinct.size() != rays_.size()) fail(Errc::invalid_input, "duplicate rays");

    std::vector<bool> used(rays_.size(), false);
    for (Cone& c : max_cones_) {
        std::sort(c.begin(), c.end());
        if (static_cast<int>(c.size()) != dim_) fail(Errc::invalid_input, "maximal cone must have n rays");
        if (std::adjacent_find(c.begin(), c.end()) != c.end()) fail(Errc::invalid_input, "repeated index in cone");
        for (int i : c) {
            if (i < 0 || i >= static_cast<int>(rays_.size())) fail(Errc::invalid_input, "cone index out of range");
            used[i] = true;
        }
    }
    for (size_t i = 0; i < used.size(); ++i)
        if (!used[i]) fail(Errc::invalid_input, "ray " + std::to_string(i) + " is in no maximal cone");

    std::sort(max_cones_.begin(), max_cones_.end());
    if (std::adjacent_find(max_cones_.begin(), max_cones_.end()) != max_cones_.end())
        fail(Errc::invalid_input, "duplicate maximal cones");

    // Simplicial: the rays of each maximal cone are linearly independent.
    // Subsets of maximal cones (the shared faces) inherit independence.
    for (const Cone& c : max_cones_) {
        if (det(cone_matrix(c)) == 0) fail(Errc::invalid_input, "maximal cone rays are linearly dependent");
    }
}

Mat Fan::cone_matrix(const Cone& c) const {
    Mat m;
    m.reserve(c.size());
    for (int i : c) m.push_back(rays_[i]);
    return m;
}

bool Fan::has_cone(const Cone& c) const {
    for (const Cone& mc : max_cones_)
        if (std::includes(mc.begin(), mc.end(), c.begin(), c.end())) return true;
    return false;
}

bool Fan::same_fan(const Fan& other) const {
    if (dim_ != other.dim_ || rays_.size() != other.rays_.size() || max_cones_.size() != other.max_cones_.size())
        return false;
    // Match rays by coordinates, then compare the relabelled cone sets.
    std::map<Ray, int> index;
    for (size_t i = 0; i < other.rays_.size(); ++i) index[other.rays_[i]] = static_cast<int>(i);
    std::vector<int> perm(rays_.size());
    for (size_t i = 0; i < rays_.size(); ++i) {
        auto it = index.find(rays_[i]);
        if (it == index.end()) return false;
        perm[i] = it->second;
    }
    std::vector<Cone> mapped;
    mapped.reserve(max_cones_.size());
    for (const Cone& c : max_cones_) {
        Cone m;
        m.reserve(c.size());
        for (int i : c) m.push_back(perm[i]);
        std::sort(m.begin(), m.end());
        mapped.push_back(std::move(m));
    }
    std::sort(mapped.begin(), mapped.end());
    return mapped == other.max_cones_;
}

bool is_regular(const Fan& fan) {
    for (const Cone& c : fan.max_cones()) {
        Int d = det(fan.cone_matrix(c));
        if (d != 1 && d != -1) return false;
    }
    return true;
}

std::vector<Wall> fan_walls(const Fan& fan) {
    std::map<Cone, std::vector<int>> owners;
    const auto& cones = fan.max_cones();
    for (size_t ci = 0; ci < cones.size(); ++ci) {
        const Cone& c = cones[ci];
        for (size_t skip = 0; skip < c.size(); ++skip) {
            Cone face;
            face.reserve(c.size() - 1);
            for (size_t j = 0; j < c.size(); ++j)
                if (j != skip) face.push_back(c[j]);
            owners[face].push_back(static_cast<int>(ci));
        }
    }
    std::vector<Wall> walls;
    walls.reserve(owners.size());
    for (const auto& [face, who] : owners) {
        if (who.size() != 2) fail(Errc::invalid_input, "wall owned by " + std::to_string(who.size()) + " cones");
        walls.push_back({face, who[0], who[1]});
    }
    return walls;
}

namespace {

// Largest |coordinate| over all rays.
Int max_ray_coord(const Fan& fan) {
    Int m = 1;
    for (const Ray& r : fan.rays())
        for (const Int& v : r) m = std::max(m, Int(abs(v)));
    return m;
}

}  // namespace

bool is_complete(const Fan& fan) {
    // Pseudomanifold: every (n-1)-face of a maximal cone lies in exactly two.
    std::map<Cone, std::vector<int>> owners;
    const auto& cones = fan.max_cones();
    for (size_t ci = 0; ci < cones.size(); ++ci) {
        const Cone& c = cones[ci];
        for (size_t skip = 0; skip < c.size(); ++skip) {
            Cone face;
            for (size_t j = 0; j < c.size(); ++j)
                if (j != skip) face.push_back(c[j]);
            owners[face].push_back(static_cast<int>(ci));
        }
    }
    for (const auto& [face, who] : owners)
        if (who.size() != 2) return false;

    // Connectivity of the wall-adjacency graph.
    std::vector<std::vector<int>> adj(cones.size());
    for (const auto& [face, who] : owners) {
        adj[who[0]].push_back(who[1]);
        adj[who[1]].push_back(who[0]);
    }
    std::vector<bool> seen(cones.size(), false);
    std::vector<int> stack{0};
    seen[0] = true;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : adj[v])
            if (!seen[w]) {
                seen[w] = true;
                stack.push_back(w);
            }
    }
    for (bool s : seen)
        if (!s) return false;

    // Point-location probes: for each ray r and sign direction, the exact
    // representative K*r +- e_i of the perturbed ray must lie in some cone.
    const int n = fan.dim();
    const Int k = 1 + 2 * Int(n) * max_ray_coord(fan);

    std::vector<Mat> inverses;
    inverses.reserve(cones.size());
    for (const Cone& c : cones) inverses.push_back(inverse_unimodular(fan.cone_matrix(c)));

    for (const Ray& r : fan.rays()) {
        for (int i = 0; i < n; ++i) {
            for (int sgn : {1, -1}) {
                IntVec probe(n);
                for (int j = 0; j < n; ++j) probe[j] = k * r[j];
                probe[i] += sgn;

                int containing = 0, strict = 0;
                for (size_t ci = 0; ci < cones.size(); ++ci) {
                    // Coefficients of the probe in the cone's ray basis: rows
                    // of the inverse are indexed like the cone's rays, so the
                    // coefficient vector is probe * inverse (rays as rows).
                    bool nonneg = true, pos = true;
                    for (int col = 0; col < n; ++col) {
                        Int coeff = 0;
                        for (int row = 0; row < n; ++row) coeff += probe[row] * inverses[ci][row][col];
                        if (coeff < 0) {
                            nonneg = false;
                            break;
                        }
                        if (coeff == 0) pos = false;
                    }
                    if (nonneg) {
                        ++containing;
                        if (pos) ++strict;
                    }
                }
                if (strict > 1)
                    fail(Errc::reject_non_simplicial, "maximal cones overlap in their interiors");
                if (containing == 0) return false;
            }
        }
    }
    return true;
}

bool is_projective(const Fan& fan) {
    Budget budget;
    return is_projective(fan, budget);
}

bool is_projective(const Fan& fan, Budget& budget) {
    // Unknowns: one support value h_j per ray. On a cone sigma the linear
    // extension is l_sigma(x) = sum_i <u_i, x> h_{sigma_i} with u_i the dual
    // basis rows. Strict convexity across the wall between sigma and sigma'
    // (ray v' on the far side): h_{v'} - l_sigma(v') >= 1.
    const int n = fan.dim();
    const int m = static_cast<int>(fan.rays().size());
    const auto& cones = fan.max_cones();

    std::vector<Mat> inverses;
    inverses.reserve(cones.size());
    for (const Cone& c : cones) inverses.push_back(inverse_unimodular(fan.cone_matrix(c)));

    std::vector<LinIneq> rows;
    for (const Wall& w : fan_walls(fan)) {
        for (auto [near, far] : {std::pair{w.cone_a, w.cone_b}, std::pair{w.cone_b, w.cone_a}}) {
            const Cone& sigma = cones[near];
            int vprime = -1;
            for (int idx : cones[far])
                if (!std::binary_search(sigma.begin(), sigma.end(), idx)) vprime = idx;
            LinIneq row;
            row.a.assign(m, 0);
            row.a[vprime] += 1;
            // l_sigma(v') = sum_i <row_i of inverse applied to v'> h_{sigma_i}
            const Ray& v = fan.rays()[vprime];
            for (int i = 0; i < n; ++i) {
                Int coeff = 0;
                for (int col = 0; col < n; ++col) coeff += v[col] * inverses[near][col][i];
                row.a[sigma[i]] -= coeff;
            }
            row.c = -1;  // gap of at least one
            rows.push_back(std::move(row));
        }
    }
    return fm_feasible(std::move(rows), m, budget);
}

std::vector<std::vector<Cone>> all_cones(const Fan& fan) {
    const int n = fan.dim();
    std::vector<std::set<Cone>> by_dim(n + 1);
    by_dim[0].insert(Cone{});
    for (const Cone& c : fan.max_cones()) {
        const size_t sz = c.size();
        for (unsigned mask = 1; mask < (1u << sz); ++mask) {
            Cone sub;
            for (size_t j = 0; j < sz; ++j)
                if (mask & (1u << j)) sub.push_back(c[j]);
            by_dim[sub.size()].insert(std::move(sub));
        }
    }
    std::vector<std::vector<Cone>> out(n + 1);
    for (int d = 0; d <= n; ++d) out[d].assign(by_dim[d].begin(), by_dim[d].end());
    return out;
}

FVector face_count_vector(const Fan& fan) {
    auto grouped = all_cones(fan);
    FVector f;
    for (int k = 0; k < fan.dim(); ++k) f.push_back(static_cast<long>(grouped[k + 1].size()));
    return f;
}

GVector fan_g_vector(const Fan& fan) { return h_to_g(f_to_h(face_count_vector(fan), fan.dim())); }

std::vector<Cone> closed_star(const Fan& fan, const Cone& tau) {
    Cone t = tau;
    std::sort(t.begin(), t.end());
    if (!fan.has_cone(t)) fail(Errc::cone_not_in_fan, "closed_star: cone not in fan");

    std::set<Cone> cones;
    cones.insert(Cone{});
    for (const Cone& c : fan.max_cones()) {
        if (!std::includes(c.begin(), c.end(), t.begin(), t.end())) continue;
        const size_t sz = c.size();
        for (unsigned mask = 1; mask < (1u << sz); ++mask) {
            Cone sub;
            for (size_t j = 0; j < sz; ++j)
                if (mask & (1u << j)) sub.push_back(c[j]);
            cones.insert(std::move(sub));
        }
    }
    return {cones.begin(), cones.end()};
}

Fan star_subdivide(const Fan& fan, const Cone& tau) {
    Cone t = tau;
    std::sort(t.begin(), t.end());
    if (t.size() < 2) fail(Errc::dim_too_small, "star_subdivide: cone must have dimension >= 2");
    if (!fan.has_cone(t)) fail(Errc::cone_not_in_fan, "star_subdivide: cone not in fan");

    // New ray x = sum of tau's rays (already primitive for regular fans).
    IntVec x(fan.dim(), 0);
    for (int i : t)
        for (int j = 0; j < fan.dim(); ++j) x[j] += fan.rays()[i][j];
    x = make_primitive(x);

    std::vector<Ray> rays = fan.rays();
    const int xi = static_cast<int>(rays.size());
    rays.push_back(x);

    std::vector<Cone> cones;
    for (const Cone& c : fan.max_cones()) {
        if (!std::includes(c.begin(), c.end(), t.begin(), t.end())) {
            cones.push_back(c);
            continue;
        }
        // Replace c by pos(x, c \ {ti}) for each generator ti of tau.
        for (int drop : t) {
            Cone nc;
            nc.reserve(c.size());
            for (int i : c)
                if (i != drop) nc.push_back(i);
            nc.push_back(xi);
            std::sort(nc.begin(), nc.end());
            cones.push_back(std::move(nc));
        }
    }
    return Fan(fan.dim(), std::move(rays), std::move(cones));
}

}  // namespace tcw
