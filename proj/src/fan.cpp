#include "toricc/fan.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <sstream>

#include "toricc/errors.hpp"

namespace toricc {

static std::string cone_label(const std::vector<int>& rays) {
    std::ostringstream os;
    os << "{";
    for (size_t i = 0; i < rays.size(); ++i) {
        if (i) os << ",";
        os << rays[i];
    }
    os << "}";
    return os.str();
}

Fan::Fan(int rank, std::vector<RayVec> rays, std::vector<std::vector<int>> cones)
    : rank_(rank), rays_(std::move(rays)) {
    if (rank < 0) throw precondition_error("negative fan rank");
    for (auto& c : cones) std::sort(c.begin(), c.end());
    std::sort(cones.begin(), cones.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    cones_.reserve(cones.size());
    for (auto& c : cones) {
        ConeId id = static_cast<ConeId>(cones_.size());
        index_.emplace(c, id); // keeps first occurrence on duplicates
        cones_.push_back(Cone{std::move(c)});
    }
}

Fan Fan::from_maximal(int rank, std::vector<RayVec> rays,
                      const std::vector<std::vector<int>>& maximal) {
    std::set<std::vector<int>> closed;
    closed.insert({}); // zero cone
    for (const auto& m : maximal) {
        std::vector<int> c = m;
        std::sort(c.begin(), c.end());
        const size_t k = c.size();
        if (k > 30) throw precondition_error("cone with too many rays");
        for (size_t mask = 0; mask < (size_t(1) << k); ++mask) {
            std::vector<int> face;
            for (size_t b = 0; b < k; ++b)
                if (mask & (size_t(1) << b)) face.push_back(c[b]);
            closed.insert(std::move(face));
        }
    }
    return Fan(rank, std::move(rays),
               std::vector<std::vector<int>>(closed.begin(), closed.end()));
}

std::optional<ConeId> Fan::find_cone(std::vector<int> ray_set) const {
    std::sort(ray_set.begin(), ray_set.end());
    auto it = index_.find(ray_set);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

ConeId Fan::zero_cone() const {
    auto z = find_cone({});
    if (!z) throw precondition_error("fan has no zero cone");
    return *z;
}

std::vector<ConeId> Fan::cones_of_dim(int d) const {
    std::vector<ConeId> out;
    for (ConeId id = 0; id < num_cones(); ++id)
        if (cone_dim(id) == d) out.push_back(id);
    return out;
}

std::vector<ConeId> Fan::cones_containing(ConeId id, int d) const {
    const auto& base = cones_[id].rays;
    std::vector<ConeId> out;
    for (ConeId c = 0; c < num_cones(); ++c) {
        if (cone_dim(c) != d) continue;
        if (std::includes(cones_[c].rays.begin(), cones_[c].rays.end(), base.begin(),
                          base.end()))
            out.push_back(c);
    }
    return out;
}

std::vector<ConeId> Fan::maximal_cones() const {
    std::vector<ConeId> out;
    for (ConeId c = 0; c < num_cones(); ++c) {
        bool maximal = true;
        for (ConeId d = 0; d < num_cones() && maximal; ++d) {
            if (d == c || cones_[d].rays.size() <= cones_[c].rays.size()) continue;
            maximal = !std::includes(cones_[d].rays.begin(), cones_[d].rays.end(),
                                     cones_[c].rays.begin(), cones_[c].rays.end());
        }
        if (maximal) out.push_back(c);
    }
    return out;
}

bool Fan::same_as(const Fan& other) const {
    return rank_ == other.rank_ && rays_ == other.rays_ && cones_ == other.cones_;
}

// --- validation -----------------------------------------------------------

// Dual description of a simplicial cone: functionals phi_i with
// phi_i(u_j) = delta_ij on the cone's rays and phi_i = 0 on a chosen
// complement. Membership: x in cone iff phi_i(x) >= 0 for i < k and
// phi_i(x) = 0 for i >= k.
struct ConeDual {
    std::vector<RatVec> ineq; // k facet functionals
    std::vector<RatVec> eq;   // n - k span functionals
};

static std::optional<ConeDual> cone_dual(const Fan& fan, const Cone& cone) {
    const int n = fan.rank();
    const int k = cone.dim();
    // Rows: the cone's rays, then greedily chosen standard basis vectors.
    RatMat basis;
    for (int r : cone.rays) {
        RatVec row(n);
        for (int j = 0; j < n; ++j) row[j] = Rat(fan.ray(r)[j]);
        basis.push_back(std::move(row));
    }
    auto rank_of = [&](const RatMat& m) {
        RatMat copy = m;
        return static_cast<int>(rref(copy).size());
    };
    if (rank_of(basis) != k) return std::nullopt; // not simplicial
    for (int j = 0; j < n && static_cast<int>(basis.size()) < n; ++j) {
        RatVec e(n);
        e[j] = 1;
        basis.push_back(e);
        if (rank_of(basis) != static_cast<int>(basis.size())) basis.pop_back();
    }
    // Dual basis: phi_i with <basis_j, phi_i> = delta_ij, i.e. B phi_i = e_i
    // with the basis vectors as rows of B.
    ConeDual dual;
    for (int i = 0; i < n; ++i) {
        RatVec e(n);
        e[i] = 1;
        auto phi = solve_linear(basis, e);
        if (!phi) return std::nullopt;
        if (i < k)
            dual.ineq.push_back(std::move(*phi));
        else
            dual.eq.push_back(std::move(*phi));
    }
    return dual;
}

static Rat dot(const RatVec& a, const std::vector<Int>& b) {
    Rat s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * Rat(b[i]);
    return s;
}

static bool dual_contains(const ConeDual& d, const std::vector<Int>& x) {
    for (const auto& phi : d.eq)
        if (dot(phi, x) != 0) return false;
    for (const auto& phi : d.ineq)
        if (dot(phi, x) < 0) return false;
    return true;
}

bool cone_contains(const Fan& fan, ConeId id, const std::vector<Rat>& x) {
    auto dual = cone_dual(fan, fan.cone(id));
    if (!dual) throw precondition_error("cone is not simplicial");
    auto rdot = [](const RatVec& a, const std::vector<Rat>& b) {
        Rat s = 0;
        for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
        return s;
    };
    for (const auto& phi : dual->eq)
        if (rdot(phi, x) != 0) return false;
    for (const auto& phi : dual->ineq)
        if (rdot(phi, x) < 0) return false;
    return true;
}

// All extreme rays of the intersection of two simplicial cones, found by
// brute force: a ray of the intersection activates enough constraints to cut
// the solution space to one dimension, so enumerate constraint subsets.
static std::vector<std::vector<Int>> intersection_extreme_rays(int n, const ConeDual& c1,
                                                               const ConeDual& c2) {
    RatMat equalities;
    for (const auto& e : c1.eq) equalities.push_back(e);
    for (const auto& e : c2.eq) equalities.push_back(e);
    std::vector<RatVec> ineqs;
    for (const auto& f : c1.ineq) ineqs.push_back(f);
    for (const auto& f : c2.ineq) ineqs.push_back(f);

    auto in_intersection = [&](const std::vector<Int>& x) {
        return dual_contains(c1, x) && dual_contains(c2, x);
    };

    std::set<std::vector<Int>> found;
    const size_t m = ineqs.size();
    if (m > 20) throw precondition_error("fan rank too large for intersection check");
    for (size_t mask = 0; mask < (size_t(1) << m); ++mask) {
        RatMat sys = equalities;
        for (size_t b = 0; b < m; ++b)
            if (mask & (size_t(1) << b)) sys.push_back(ineqs[b]);
        auto kernel = rational_nullspace(sys, n);
        if (kernel.size() != 1) continue;
        std::vector<Int> v = primitive_direction(kernel[0]);
        if (in_intersection(v)) {
            found.insert(v);
            continue;
        }
        for (Int& c : v) c = -c;
        if (in_intersection(v)) found.insert(v);
    }
    return {found.begin(), found.end()};
}

std::vector<std::string> validate_fan(const Fan& fan) {
    std::vector<std::string> report;
    const int n = fan.rank();

    bool shape_ok = true;
    for (int i = 0; i < fan.num_rays(); ++i) {
        if (static_cast<int>(fan.ray(i).size()) != n) {
            report.push_back("ray " + std::to_string(i) + " has wrong dimension");
            shape_ok = false;
            continue;
        }
        Int g = 0;
        for (const Int& x : fan.ray(i)) g = boost::multiprecision::gcd(g, x);
        if (g != 1) report.push_back("ray " + std::to_string(i) + " not primitive");
    }
    for (int i = 0; i < fan.num_rays() && shape_ok; ++i)
        for (int j = i + 1; j < fan.num_rays(); ++j)
            if (fan.ray(i) == fan.ray(j))
                report.push_back("rays " + std::to_string(i) + " and " + std::to_string(j) +
                                 " are equal");

    bool cones_ok = shape_ok;
    std::set<std::vector<int>> seen;
    for (ConeId c = 0; c < fan.num_cones(); ++c) {
        const auto& rays = fan.cone(c).rays;
        for (int r : rays)
            if (r < 0 || r >= fan.num_rays()) {
                report.push_back("cone " + cone_label(rays) + " references a missing ray");
                cones_ok = false;
            }
        if (std::adjacent_find(rays.begin(), rays.end()) != rays.end()) {
            report.push_back("cone " + cone_label(rays) + " repeats a ray");
            cones_ok = false;
        }
        if (!seen.insert(rays).second) {
            report.push_back("duplicate cone " + cone_label(rays));
            cones_ok = false;
        }
    }
    if (!fan.find_cone({})) report.push_back("zero cone missing");
    if (!cones_ok) return report;

    // Simpliciality (all cones in scope), face closure, pairwise face test.
    std::vector<std::optional<ConeDual>> duals(fan.num_cones());
    for (ConeId c = 0; c < fan.num_cones(); ++c) {
        duals[c] = cone_dual(fan, fan.cone(c));
        if (!duals[c]) {
            report.push_back("cone " + cone_label(fan.cone(c).rays) +
                             " not simplicial (rays dependent)");
        }
    }

    for (ConeId c = 0; c < fan.num_cones(); ++c) {
        const auto& rays = fan.cone(c).rays;
        const size_t k = rays.size();
        if (k > 30) continue;
        for (size_t mask = 0; mask < (size_t(1) << k); ++mask) {
            std::vector<int> face;
            for (size_t b = 0; b < k; ++b)
                if (mask & (size_t(1) << b)) face.push_back(rays[b]);
            if (!fan.find_cone(face))
                report.push_back("face " + cone_label(face) + " of cone " + cone_label(rays) +
                                 " missing");
        }
    }

    for (ConeId c1 = 0; c1 < fan.num_cones(); ++c1) {
        if (!duals[c1]) continue;
        for (ConeId c2 = c1 + 1; c2 < fan.num_cones(); ++c2) {
            if (!duals[c2]) continue;
            const auto& r1 = fan.cone(c1).rays;
            const auto& r2 = fan.cone(c2).rays;
            // If one ray set contains the other the intersection is that face.
            if (std::includes(r1.begin(), r1.end(), r2.begin(), r2.end()) ||
                std::includes(r2.begin(), r2.end(), r1.begin(), r1.end()))
                continue;
            std::vector<int> common;
            std::set_intersection(r1.begin(), r1.end(), r2.begin(), r2.end(),
                                  std::back_inserter(common));
            auto common_cone = fan.find_cone(common);
            auto extreme = intersection_extreme_rays(n, *duals[c1], *duals[c2]);
            bool ok = common_cone.has_value();
            for (const auto& v : extreme) {
                if (!ok) break;
                std::vector<Rat> x(v.size());
                for (size_t i = 0; i < v.size(); ++i) x[i] = Rat(v[i]);
                ok = cone_contains(fan, *common_cone, x);
            }
            if (!ok)
                report.push_back("intersection not a face: cones " + cone_label(r1) + " and " +
                                 cone_label(r2));
        }
    }
    return report;
}

void require_valid(const Fan& fan) {
    if (auto v = fan.cached(Fan::Prop::valid)) {
        if (*v) return;
        throw precondition_error("invalid fan");
    }
    auto report = validate_fan(fan);
    fan.set_cached(Fan::Prop::valid, report.empty());
    if (!report.empty()) throw precondition_error("invalid fan: " + report.front());
}

bool is_smooth(const Fan& fan) {
    require_valid(fan);
    if (auto v = fan.cached(Fan::Prop::smooth)) return *v;
    bool smooth = true;
    for (ConeId c = 0; c < fan.num_cones() && smooth; ++c) {
        const auto& rays = fan.cone(c).rays;
        if (rays.empty()) continue;
        IntMatrix m(static_cast<int>(rays.size()), fan.rank());
        for (size_t i = 0; i < rays.size(); ++i)
            for (int j = 0; j < fan.rank(); ++j) m.at(static_cast<int>(i), j) = fan.ray(rays[i])[j];
        SmithResult s = smith_normal_form(m);
        for (size_t i = 0; i < rays.size(); ++i)
            if (s.d.at(static_cast<int>(i), static_cast<int>(i)) != 1) smooth = false;
    }
    fan.set_cached(Fan::Prop::smooth, smooth);
    return smooth;
}

static bool is_complete_uncached(const Fan& fan);

bool is_complete(const Fan& fan) {
    require_valid(fan);
    if (auto v = fan.cached(Fan::Prop::complete)) return *v;
    bool complete = is_complete_uncached(fan);
    fan.set_cached(Fan::Prop::complete, complete);
    return complete;
}

static bool is_complete_uncached(const Fan& fan) {
    const int n = fan.rank();
    if (n == 0) return true;

    // Facet-pairing test for pure full-dimensional fans: the support covers
    // Q^n iff every (n-1)-cone bounds exactly two n-cones and the adjacency
    // graph of the n-cones is connected.
    std::vector<ConeId> maximal = fan.maximal_cones();
    for (ConeId c : maximal)
        if (fan.cone_dim(c) != n) return false; // not pure

    std::vector<ConeId> top = fan.cones_of_dim(n);
    if (top.empty()) return false;

    std::map<ConeId, std::vector<int>> facet_owners; // (n-1)-cone -> indices into top
    for (size_t t = 0; t < top.size(); ++t) {
        const auto& rays = fan.cone(top[t]).rays;
        for (size_t drop = 0; drop < rays.size(); ++drop) {
            std::vector<int> facet;
            for (size_t i = 0; i < rays.size(); ++i)
                if (i != drop) facet.push_back(rays[i]);
            auto f = fan.find_cone(facet);
            if (!f) return false;
            facet_owners[*f].push_back(static_cast<int>(t));
        }
    }
    std::vector<std::vector<int>> adj(top.size());
    for (const auto& [facet, owners] : facet_owners) {
        if (owners.size() != 2) return false;
        adj[owners[0]].push_back(owners[1]);
        adj[owners[1]].push_back(owners[0]);
    }

    std::vector<bool> seen_top(top.size(), false);
    std::vector<int> stack{0};
    seen_top[0] = true;
    while (!stack.empty()) {
        int t = stack.back();
        stack.pop_back();
        for (int o : adj[t])
            if (!seen_top[o]) {
                seen_top[o] = true;
                stack.push_back(o);
            }
    }
    return std::all_of(seen_top.begin(), seen_top.end(), [](bool s) { return s; });
}

void require_smooth_complete(const Fan& fan) {
    if (!is_smooth(fan)) throw precondition_error("fan is not smooth");
    if (!is_complete(fan)) throw precondition_error("fan is not complete");
}

StarData star_fan(const FanPtr& fan, ConeId sigma) {
    if (sigma < 0 || sigma >= fan->num_cones())
        throw precondition_error("star_fan: cone not in fan");
    const int n = fan->rank();
    const auto& base = fan->cone(sigma).rays;
    const int k = static_cast<int>(base.size());

    // Projection N -> N/(N ∩ span sigma): the last n-k rows of the left
    // Smith cofactor of the matrix whose columns are sigma's rays.
    IntMatrix proj(n - k, n);
    if (k == 0) {
        proj = IntMatrix::identity(n);
    } else {
        IntMatrix a(n, k);
        for (int j = 0; j < k; ++j)
            for (int i = 0; i < n; ++i) a.at(i, j) = fan->ray(base[j])[i];
        SmithResult s = smith_normal_form(a);
        for (int i = 0; i < n - k; ++i)
            for (int j = 0; j < n; ++j) proj.at(i, j) = s.u.at(k + i, j);
    }
    auto project = [&](const RayVec& v) {
        RayVec w(n - k);
        for (int i = 0; i < n - k; ++i) {
            Int s = 0;
            for (int j = 0; j < n; ++j) s += proj.at(i, j) * v[j];
            w[i] = s;
        }
        return w;
    };

    // Collect quotient rays from the cones containing sigma.
    std::vector<RayVec> qrays;
    std::map<int, int> ray_map; // ambient ray index -> quotient ray index
    std::vector<std::pair<std::vector<int>, ConeId>> qcones;
    for (ConeId c = 0; c < fan->num_cones(); ++c) {
        const auto& rays = fan->cone(c).rays;
        if (!std::includes(rays.begin(), rays.end(), base.begin(), base.end())) continue;
        std::vector<int> qc;
        for (int r : rays) {
            if (std::binary_search(base.begin(), base.end(), r)) continue;
            auto it = ray_map.find(r);
            if (it == ray_map.end()) {
                RayVec image = primitivize(project(fan->ray(r)));
                for (size_t q = 0; q < qrays.size(); ++q)
                    if (qrays[q] == image)
                        throw precondition_error("star_fan: projected rays collide");
                it = ray_map.emplace(r, static_cast<int>(qrays.size())).first;
                qrays.push_back(std::move(image));
            }
            qc.push_back(it->second);
        }
        std::sort(qc.begin(), qc.end());
        qcones.emplace_back(std::move(qc), c);
    }

    std::vector<std::vector<int>> cone_sets;
    cone_sets.reserve(qcones.size());
    for (const auto& [qc, amb] : qcones) cone_sets.push_back(qc);
    auto quotient = std::make_shared<Fan>(n - k, std::move(qrays), std::move(cone_sets));

    StarData star;
    star.ambient = fan;
    star.base = sigma;
    star.quotient = quotient;
    star.ambient_cone.assign(quotient->num_cones(), -1);
    for (const auto& [qc, amb] : qcones) {
        auto qid = quotient->find_cone(qc);
        assert(qid);
        star.ambient_cone[*qid] = amb;
    }
    return star;
}

FanPtr fan_product(const FanPtr& a, const FanPtr& b) {
    std::vector<RayVec> rays;
    rays.reserve(a->num_rays() + b->num_rays());
    for (int i = 0; i < a->num_rays(); ++i) {
        RayVec v = a->ray(i);
        v.resize(a->rank() + b->rank(), Int(0));
        rays.push_back(std::move(v));
    }
    for (int j = 0; j < b->num_rays(); ++j) {
        RayVec v(a->rank(), Int(0));
        const RayVec& w = b->ray(j);
        v.insert(v.end(), w.begin(), w.end());
        rays.push_back(std::move(v));
    }
    std::vector<std::vector<int>> cones;
    cones.reserve(static_cast<size_t>(a->num_cones()) * b->num_cones());
    for (ConeId ca = 0; ca < a->num_cones(); ++ca)
        for (ConeId cb = 0; cb < b->num_cones(); ++cb) {
            std::vector<int> c = a->cone(ca).rays;
            for (int r : b->cone(cb).rays) c.push_back(product_ray_index(*a, r));
            cones.push_back(std::move(c));
        }
    return std::make_shared<Fan>(a->rank() + b->rank(), std::move(rays), std::move(cones));
}

} // namespace toricc
