#include "tcw/polytope.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "tcw/error.hpp"
#include "tcw/fourier_motzkin.hpp"
#include "tcw/linalg.hpp"

namespace tcw {

namespace {

void validate(const PolytopeH& p) {
    if (p.dim < 1 || p.dim > Fan::kMaxDim) fail(Errc::invalid_input, "polytope dimension out of range");
    if (static_cast<int>(p.facets.size()) < p.dim + 1) fail(Errc::invalid_input, "too few facets to bound");
    for (const auto& f : p.facets) {
        if (static_cast<int>(f.normal.size()) != p.dim) fail(Errc::invalid_input, "facet normal length != dim");
        if (!is_primitive(f.normal)) fail(Errc::invalid_input, "facet normal is zero or not primitive");
    }
}

// A nonzero recession direction d with <normal_k, d> >= 0 for all k witnesses
// unboundedness; scale-normalize by pinning one coordinate to +-1.
bool has_recession_direction(const PolytopeH& p) {
    const int n = p.dim;
    Budget budget;
    for (int i = 0; i < n; ++i) {
        for (int sgn : {1, -1}) {
            std::vector<LinIneq> rows;
            for (const auto& f : p.facets) rows.push_back({f.normal, 0});
            LinIneq ge, le;  // d_i = sgn as two inequalities
            ge.a.assign(n, 0);
            ge.a[i] = 1;
            ge.c = -sgn;
            le.a.assign(n, 0);
            le.a[i] = -1;
            le.c = sgn;
            rows.push_back(ge);
            rows.push_back(le);
            if (fm_feasible(std::move(rows), n, budget)) return true;
        }
    }
    return false;
}

int affine_rank(const std::vector<Vertex>& verts, int n) {
    if (verts.empty()) return -1;
    RatMat diffs;
    for (size_t i = 1; i < verts.size(); ++i) {
        RatVec d(n);
        for (int j = 0; j < n; ++j) d[j] = verts[i].point[j] - verts[0].point[j];
        diffs.push_back(std::move(d));
    }
    return diffs.empty() ? 0 : rank(diffs);
}

}  // namespace

std::vector<Vertex> vertices(const PolytopeH& p) {
    validate(p);
    const int n = p.dim;
    const int m = static_cast<int>(p.facets.size());
    if (has_recession_direction(p)) fail(Errc::unbounded, "polytope has a recession direction");

    std::map<RatVec, std::set<int>> found;

    // Enumerate n-subsets of facets.
    std::vector<int> idx(n);
    for (int i = 0; i < n; ++i) idx[i] = i;
    while (true) {
        Mat a;
        IntVec b;
        for (int i : idx) {
            a.push_back(p.facets[i].normal);
            b.push_back(-p.facets[i].offset);
        }
        if (auto x = solve(a, b)) {
            bool inside = true;
            for (const auto& f : p.facets) {
                Rat lhs = 0;
                for (int j = 0; j < n; ++j) lhs += Rat(f.normal[j]) * (*x)[j];
                if (lhs < Rat(-f.offset)) {
                    inside = false;
                    break;
                }
            }
            if (inside) {
                auto& inc = found[*x];
                for (int i = 0; i < m; ++i) {
                    Rat lhs = 0;
                    for (int j = 0; j < n; ++j) lhs += Rat(p.facets[i].normal[j]) * (*x)[j];
                    if (lhs == Rat(-p.facets[i].offset)) inc.insert(i);
                }
            }
        }
        // next combination
        int k = n - 1;
        while (k >= 0 && idx[k] == m - n + k) --k;
        if (k < 0) break;
        ++idx[k];
        for (int j = k + 1; j < n; ++j) idx[j] = idx[j - 1] + 1;
    }

    std::vector<Vertex> verts;
    verts.reserve(found.size());
    for (auto& [pt, inc] : found) verts.push_back({pt, {inc.begin(), inc.end()}});

    if (affine_rank(verts, n) != n) fail(Errc::degenerate, "polytope is not full-dimensional");
    for (int i = 0; i < m; ++i) {
        int count = 0;
        for (const auto& v : verts)
            if (std::binary_search(v.facets.begin(), v.facets.end(), i)) ++count;
        if (count < n) fail(Errc::invalid_input, "redundant facet " + std::to_string(i));
    }
    return verts;
}

bool is_simple(const PolytopeH& p) {
    for (const auto& v : vertices(p))
        if (static_cast<int>(v.facets.size()) != p.dim) return false;
    return true;
}

std::vector<Edge> polytope_edges(const PolytopeH& p, const std::vector<Vertex>& verts) {
    const int n = p.dim;
    std::vector<Edge> edges;
    for (size_t i = 0; i < verts.size(); ++i) {
        for (size_t j = i + 1; j < verts.size(); ++j) {
            std::vector<int> shared;
            std::set_intersection(verts[i].facets.begin(), verts[i].facets.end(), verts[j].facets.begin(),
                                  verts[j].facets.end(), std::back_inserter(shared));
            if (static_cast<int>(shared.size()) < n - 1) continue;
            Mat normals;
            for (int f : shared) normals.push_back(p.facets[f].normal);
            if (rank(normals) != n - 1) continue;
            // Primitive integer direction from i to j.
            IntVec dir(n);
            Int scale = 1;
            for (int c = 0; c < n; ++c) scale = lcm(scale, (verts[j].point[c] - verts[i].point[c]).get_den());
            for (int c = 0; c < n; ++c) dir[c] = to_int(Rat(scale) * (verts[j].point[c] - verts[i].point[c]));
            edges.push_back({static_cast<int>(i), static_cast<int>(j), make_primitive(dir)});
        }
    }
    return edges;
}

bool is_smooth(const PolytopeH& p) {
    auto verts = vertices(p);
    for (const auto& v : verts)
        if (static_cast<int>(v.facets.size()) != p.dim) return false;
    auto edges = polytope_edges(p, verts);

    // Per vertex, the primitive directions of the emanating edges must form
    // an integer basis.
    const int n = p.dim;
    std::vector<Mat> at_vertex(verts.size());
    for (const auto& e : edges) {
        at_vertex[e.tail].push_back(e.direction);
        IntVec rev = e.direction;
        for (Int& x : rev) x = -x;
        at_vertex[e.head].push_back(std::move(rev));
    }
    for (const auto& dirs : at_vertex) {
        if (static_cast<int>(dirs.size()) != n) return false;
        Int d = det(dirs);
        if (d != 1 && d != -1) return false;
    }
    return true;
}

Fan normal_fan(const PolytopeH& p) {
    auto verts = vertices(p);
    for (const auto& v : verts)
        if (static_cast<int>(v.facets.size()) != p.dim) fail(Errc::not_simple, "normal_fan needs a simple polytope");

    std::vector<Ray> rays;
    rays.reserve(p.facets.size());
    for (const auto& f : p.facets) rays.push_back(f.normal);
    std::vector<Cone> cones;
    cones.reserve(verts.size());
    for (const auto& v : verts) cones.push_back(v.facets);
    return Fan(p.dim, std::move(rays), std::move(cones));
}

IntVec default_index_probe(const PolytopeH& p) {
    auto verts = vertices(p);
    auto edges = polytope_edges(p, verts);
    Int m = 0;
    for (const auto& e : edges)
        for (const Int& x : e.direction) m = std::max(m, Int(abs(x)));
    m += 1;
    IntVec nu(p.dim);
    Int pow = 1;
    for (int i = 0; i < p.dim; ++i) {
        nu[i] = pow;
        pow *= m;
    }
    return nu;
}

HVector h_vector_by_index(const PolytopeH& p, const IntVec& nu) {
    auto verts = vertices(p);
    auto edges = polytope_edges(p, verts);
    const int n = p.dim;

    std::vector<int> indegree(verts.size(), 0);
    for (const auto& e : edges) {
        Int h = dot(nu, e.direction);
        if (h == 0) fail(Errc::nu_degenerate, "probe vector is perpendicular to an edge");
        // Edge points toward the endpoint with larger <nu, .>.
        if (h > 0)
            ++indegree[e.head];
        else
            ++indegree[e.tail];
    }
    HVector h(n + 1, 0);
    for (size_t v = 0; v < verts.size(); ++v) {
        int q = indegree[v];
        if (q > n) fail(Errc::invalid_input, "vertex in-degree exceeds dimension");
        h[n - q] += 1;
    }
    return h;
}

}  // namespace tcw
