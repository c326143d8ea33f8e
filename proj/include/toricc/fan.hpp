#pragma once

#include <atomic>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "toricc/intmatrix.hpp"

namespace toricc {

using RayVec = std::vector<Int>;
using ConeId = int;

// A cone is identified by the sorted indices of its generating rays.
// All cones in scope are simplicial, so faces are exactly the subsets.
struct Cone {
    std::vector<int> rays; // strictly increasing
    int dim() const { return static_cast<int>(rays.size()); }
    bool operator==(const Cone&) const = default;
};

// Fan of strongly convex rational simplicial cones in Z^rank. Rays are
// stored primitive and deduplicated; cones reference rays by index and are
// kept in a canonical order (by dimension, then lexicographically), which
// makes fans directly comparable. Immutable after construction.
class Fan {
public:
    // Raw constructor: stores the cone list as given (canonically sorted,
    // duplicates kept) without closing faces. Used for validation tests.
    Fan(int rank, std::vector<RayVec> rays, std::vector<std::vector<int>> cones);

    // Builds the fan generated by the given maximal cones: all subsets of
    // each cone's ray set are added as faces, plus the zero cone.
    static Fan from_maximal(int rank, std::vector<RayVec> rays,
                            const std::vector<std::vector<int>>& maximal);

    int rank() const { return rank_; }
    int num_rays() const { return static_cast<int>(rays_.size()); }
    int num_cones() const { return static_cast<int>(cones_.size()); }
    const RayVec& ray(int i) const { return rays_[i]; }
    const std::vector<RayVec>& rays() const { return rays_; }
    const Cone& cone(ConeId id) const { return cones_[id]; }
    const std::vector<Cone>& cones() const { return cones_; }
    int cone_dim(ConeId id) const { return cones_[id].dim(); }

    std::optional<ConeId> find_cone(std::vector<int> ray_set) const;
    ConeId zero_cone() const;
    std::vector<ConeId> cones_of_dim(int d) const;
    // Cones of dimension d whose ray set contains the given cone's.
    std::vector<ConeId> cones_containing(ConeId id, int d) const;
    std::vector<ConeId> maximal_cones() const; // inclusion-maximal

    bool same_as(const Fan& other) const;

    // Memoized fan properties (validity, smoothness, completeness). Fans are
    // immutable, so the cached answers never go stale; racing recomputations
    // are idempotent.
    enum class Prop { valid = 0, smooth = 1, complete = 2 };
    std::optional<bool> cached(Prop p) const {
        signed char v = cache_[static_cast<int>(p)].load(std::memory_order_relaxed);
        if (v < 0) return std::nullopt;
        return v != 0;
    }
    void set_cached(Prop p, bool v) const {
        cache_[static_cast<int>(p)].store(v ? 1 : 0, std::memory_order_relaxed);
    }

    Fan(const Fan& o)
        : rank_(o.rank_), rays_(o.rays_), cones_(o.cones_), index_(o.index_) {
        for (int i = 0; i < 3; ++i)
            cache_[i].store(o.cache_[i].load(std::memory_order_relaxed),
                            std::memory_order_relaxed);
    }
    Fan(Fan&& o) noexcept
        : rank_(o.rank_), rays_(std::move(o.rays_)), cones_(std::move(o.cones_)),
          index_(std::move(o.index_)) {
        for (int i = 0; i < 3; ++i)
            cache_[i].store(o.cache_[i].load(std::memory_order_relaxed),
                            std::memory_order_relaxed);
    }

private:
    int rank_;
    std::vector<RayVec> rays_;
    std::vector<Cone> cones_;
    std::map<std::vector<int>, ConeId> index_; // first occurrence wins
    mutable std::array<std::atomic<signed char>, 3> cache_ = {
        std::atomic<signed char>(-1), std::atomic<signed char>(-1),
        std::atomic<signed char>(-1)};
};

using FanPtr = std::shared_ptr<const Fan>;

// Every invariant violation as a human-readable string; empty means valid.
std::vector<std::string> validate_fan(const Fan& fan);

// Throws precondition_error (with the first violation) on an invalid fan.
void require_valid(const Fan& fan);

bool is_smooth(const Fan& fan);   // every cone generated by part of a Z-basis
bool is_complete(const Fan& fan); // support covers Q^rank (facet pairing test)

void require_smooth_complete(const Fan& fan);

// The star of a cone: the fan of the orbit closure V_sigma. Rays of cones
// containing sigma are projected to N / (N ∩ span sigma) and primitivized;
// ambient_cone records which ambient cone each quotient cone came from.
struct StarData {
    FanPtr ambient;
    ConeId base;
    FanPtr quotient;
    std::vector<ConeId> ambient_cone; // indexed by quotient cone id
};

StarData star_fan(const FanPtr& fan, ConeId sigma);

// Product fan on the direct sum lattice; rays block-embedded, cones all
// pairwise unions.
FanPtr fan_product(const FanPtr& a, const FanPtr& b);

// Index of the b-factor ray j inside fan_product(a, b).
inline int product_ray_index(const Fan& a, int j) { return a.num_rays() + j; }

// Is x in the (simplicial) cone spanned by the given rays?
bool cone_contains(const Fan& fan, ConeId id, const std::vector<Rat>& x);

} // namespace toricc
