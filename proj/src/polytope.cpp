#include "toricc/polytope.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "toricc/errors.hpp"

namespace toricc {

static int affine_rank(const std::vector<std::vector<Int>>& pts, int n) {
    if (pts.empty()) return -1;
    RatMat diffs;
    for (size_t i = 1; i < pts.size(); ++i) {
        RatVec row(n);
        for (int j = 0; j < n; ++j) row[j] = Rat(pts[i][j] - pts[0][j]);
        diffs.push_back(std::move(row));
    }
    if (diffs.empty()) return 0;
    return static_cast<int>(rref(diffs).size());
}

std::vector<Facet> polytope_facets(const Polytope& p) {
    const int n = p.rank;
    if (n <= 0) throw precondition_error("polytope rank must be positive");
    for (const auto& v : p.vertices)
        if (static_cast<int>(v.size()) != n)
            throw precondition_error("polytope vertex has wrong dimension");
    if (affine_rank(p.vertices, n) != n)
        throw precondition_error("polytope is not full-dimensional");

    const int m = static_cast<int>(p.vertices.size());
    std::set<std::pair<RayVec, Int>> found;

    // Every facet hyperplane is spanned by n affinely independent vertices.
    std::vector<int> idx(n);
    for (int i = 0; i < n; ++i) idx[i] = i;
    auto advance = [&]() {
        int i = n - 1;
        while (i >= 0 && idx[i] == m - n + i) --i;
        if (i < 0) return false;
        ++idx[i];
        for (int j = i + 1; j < n; ++j) idx[j] = idx[j - 1] + 1;
        return true;
    };
    do {
        // Normal direction: integer kernel of the difference matrix.
        IntMatrix diffs(n - 1, n);
        for (int i = 1; i < n; ++i)
            for (int j = 0; j < n; ++j)
                diffs.at(i - 1, j) = p.vertices[idx[i]][j] - p.vertices[idx[0]][j];
        std::vector<std::vector<Int>> kernel =
            n == 1 ? std::vector<std::vector<Int>>{{Int(1)}} : integer_kernel(diffs);
        if (kernel.size() != 1) continue; // subset does not span a hyperplane
        RayVec normal = primitivize(kernel[0]);

        Int level = 0;
        for (int j = 0; j < n; ++j) level += normal[j] * p.vertices[idx[0]][j];
        bool all_geq = true, all_leq = true;
        for (const auto& v : p.vertices) {
            Int s = 0;
            for (int j = 0; j < n; ++j) s += normal[j] * v[j];
            if (s < level) all_geq = false;
            if (s > level) all_leq = false;
        }
        if (all_geq) {
            found.emplace(normal, -level); // inner normal, offset -min
        } else if (all_leq) {
            RayVec neg(n);
            for (int j = 0; j < n; ++j) neg[j] = -normal[j];
            found.emplace(neg, level);
        }
    } while (advance());

    std::vector<Facet> facets;
    facets.reserve(found.size());
    for (const auto& [normal, offset] : found) facets.push_back(Facet{normal, offset});
    return facets;
}

void validate_polytope(const Polytope& p) {
    std::vector<Facet> facets = polytope_facets(p);
    // A listed point is a vertex iff its active facet normals span Q^rank.
    for (size_t vi = 0; vi < p.vertices.size(); ++vi) {
        RatMat active;
        for (const auto& f : facets) {
            Int s = f.offset;
            for (int j = 0; j < p.rank; ++j) s += f.normal[j] * p.vertices[vi][j];
            if (s == 0) {
                RatVec row(p.rank);
                for (int j = 0; j < p.rank; ++j) row[j] = Rat(f.normal[j]);
                active.push_back(std::move(row));
            }
        }
        if (static_cast<int>(rref(active).size()) != p.rank)
            throw precondition_error("listed point " + std::to_string(vi) +
                                     " is not a vertex of the hull");
    }
    std::set<std::vector<Int>> dedup(p.vertices.begin(), p.vertices.end());
    if (dedup.size() != p.vertices.size())
        throw precondition_error("duplicate vertices in polytope");
}

NormalFanResult normal_fan(const Polytope& p) {
    validate_polytope(p);
    std::vector<Facet> facets = polytope_facets(p);
    const int n = p.rank;

    std::vector<RayVec> rays;
    rays.reserve(facets.size());
    for (const auto& f : facets) rays.push_back(f.normal);

    // Maximal cones of the inner-normal fan correspond to vertices; each is
    // spanned by the normals of the facets through that vertex. A simple
    // polytope has exactly rank facets per vertex.
    std::vector<std::vector<int>> maximal;
    for (const auto& v : p.vertices) {
        std::vector<int> active;
        for (size_t fi = 0; fi < facets.size(); ++fi) {
            Int s = facets[fi].offset;
            for (int j = 0; j < n; ++j) s += facets[fi].normal[j] * v[j];
            if (s == 0) active.push_back(static_cast<int>(fi));
        }
        if (static_cast<int>(active.size()) != n)
            throw precondition_error(
                "polytope is not simple; its normal fan has non-simplicial cones, "
                "which are unsupported");
        maximal.push_back(std::move(active));
    }

    NormalFanResult result;
    result.fan = std::make_shared<Fan>(Fan::from_maximal(n, std::move(rays), maximal));
    result.coeffs.reserve(facets.size());
    for (const auto& f : facets) result.coeffs.emplace_back(f.offset);
    return result;
}

LatticePointCount enumerate_lattice_points(const Polytope& p, bool keep_points) {
    std::vector<Facet> facets = polytope_facets(p);
    const int n = p.rank;

    std::vector<Int> lo(n), hi(n);
    for (int j = 0; j < n; ++j) {
        lo[j] = hi[j] = p.vertices[0][j];
        for (const auto& v : p.vertices) {
            lo[j] = std::min(lo[j], v[j]);
            hi[j] = std::max(hi[j], v[j]);
        }
    }
    Int box = 1;
    for (int j = 0; j < n; ++j) box *= hi[j] - lo[j] + 1;
    if (box > 10000000)
        throw precondition_error("bounding box exceeds 10^7 candidate points; "
                                 "use a smaller polytope for the brute-force oracle");

    // Inputs passing the box guard have coordinates far below the int64
    // range, so the inner loop runs on machine integers.
    bool fits = true;
    auto small_enough = [&fits](const Int& v) {
        if (v > 1000000000 || v < -1000000000) fits = false;
    };
    for (int j = 0; j < n; ++j) {
        small_enough(lo[j]);
        small_enough(hi[j]);
    }
    for (const auto& f : facets) {
        small_enough(f.offset);
        for (const auto& c : f.normal) small_enough(c);
    }
    if (!fits)
        throw precondition_error("polytope coordinates too large for the enumeration oracle");

    std::vector<long long> slo(n), shi(n);
    for (int j = 0; j < n; ++j) {
        slo[j] = lo[j].convert_to<long long>();
        shi[j] = hi[j].convert_to<long long>();
    }
    std::vector<std::vector<long long>> normals;
    std::vector<long long> offsets;
    for (const auto& f : facets) {
        std::vector<long long> nm(n);
        for (int j = 0; j < n; ++j) nm[j] = f.normal[j].convert_to<long long>();
        normals.push_back(std::move(nm));
        offsets.push_back(f.offset.convert_to<long long>());
    }

    LatticePointCount result;
    result.count = 0;
    std::vector<long long> pt = slo;
    for (;;) {
        bool inside = true;
        for (size_t fi = 0; fi < normals.size() && inside; ++fi) {
            long long s = offsets[fi];
            for (int j = 0; j < n; ++j) s += normals[fi][j] * pt[j];
            inside = s >= 0;
        }
        if (inside) {
            ++result.count;
            if (keep_points) {
                std::vector<Int> q(n);
                for (int j = 0; j < n; ++j) q[j] = pt[j];
                result.points.push_back(std::move(q));
            }
        }
        int j = 0;
        while (j < n && pt[j] == shi[j]) {
            pt[j] = slo[j];
            ++j;
        }
        if (j == n) break;
        ++pt[j];
    }
    return result;
}

Polytope dilate(const Polytope& p, const Int& k) {
    Polytope q;
    q.rank = p.rank;
    q.vertices.reserve(p.vertices.size());
    for (const auto& v : p.vertices) {
        std::vector<Int> w(v.size());
        for (size_t j = 0; j < v.size(); ++j) w[j] = k * v[j];
        q.vertices.push_back(std::move(w));
    }
    return q;
}

} // namespace toricc
