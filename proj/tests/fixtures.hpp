#pragma once

#include <random>

#include "toricc/cycles.hpp"
#include "toricc/fan.hpp"
#include "toricc/polytope.hpp"

namespace toricc::fixtures {

// Fan of projective n-space: rays e_1..e_n and -(e_1+...+e_n); maximal
// cones are all n-subsets of the rays.
inline FanPtr projective_fan(int n) {
    std::vector<RayVec> rays;
    for (int i = 0; i < n; ++i) {
        RayVec e(n, Int(0));
        e[i] = 1;
        rays.push_back(std::move(e));
    }
    rays.push_back(RayVec(n, Int(-1)));
    std::vector<std::vector<int>> maximal;
    for (int skip = 0; skip <= n; ++skip) {
        std::vector<int> cone;
        for (int i = 0; i <= n; ++i)
            if (i != skip) cone.push_back(i);
        maximal.push_back(std::move(cone));
    }
    return std::make_shared<Fan>(Fan::from_maximal(n, std::move(rays), maximal));
}

inline FanPtr point_fan() {
    return std::make_shared<Fan>(Fan(0, {}, {{}}));
}

inline FanPtr p1() { return projective_fan(1); }
inline FanPtr p2() { return projective_fan(2); }
inline FanPtr p3() { return projective_fan(3); }

inline FanPtr p1xp1() { return fan_product(p1(), p1()); }

// Hirzebruch surface F_1: rays (1,0),(0,1),(-1,1),(0,-1).
inline FanPtr hirzebruch1() {
    std::vector<RayVec> rays = {{Int(1), Int(0)}, {Int(0), Int(1)}, {Int(-1), Int(1)},
                                {Int(0), Int(-1)}};
    std::vector<std::vector<int>> maximal = {{0, 1}, {1, 2}, {2, 3}, {3, 0}};
    return std::make_shared<Fan>(Fan::from_maximal(2, std::move(rays), maximal));
}

// Random smooth complete rank-2 fan: start from the P^2 fan's cyclic ray
// list and make random stellar subdivisions (insert u+v between adjacent
// rays), which preserves smoothness and completeness.
inline FanPtr random_smooth_complete_2fan(std::mt19937& rng, int subdivisions) {
    std::vector<RayVec> cyc = {{Int(1), Int(0)}, {Int(0), Int(1)}, {Int(-1), Int(-1)}};
    for (int s = 0; s < subdivisions; ++s) {
        size_t i = std::uniform_int_distribution<size_t>(0, cyc.size() - 1)(rng);
        size_t j = (i + 1) % cyc.size();
        RayVec mid = {cyc[i][0] + cyc[j][0], cyc[i][1] + cyc[j][1]};
        cyc.insert(cyc.begin() + static_cast<long>(j), std::move(mid));
    }
    std::vector<std::vector<int>> maximal;
    for (size_t i = 0; i < cyc.size(); ++i)
        maximal.push_back({static_cast<int>(i), static_cast<int>((i + 1) % cyc.size())});
    return std::make_shared<Fan>(Fan::from_maximal(2, std::move(cyc), maximal));
}

inline Polytope simplex2() {
    return Polytope{2, {{Int(0), Int(0)}, {Int(1), Int(0)}, {Int(0), Int(1)}}};
}

inline Polytope unit_square() {
    return Polytope{2, {{Int(0), Int(0)}, {Int(1), Int(0)}, {Int(0), Int(1)}, {Int(1), Int(1)}}};
}

inline Polytope rectangle(int a, int b) {
    return Polytope{2, {{Int(0), Int(0)}, {Int(a), Int(0)}, {Int(0), Int(b)}, {Int(a), Int(b)}}};
}

inline Polytope unit_cube() {
    std::vector<std::vector<Int>> vs;
    for (int m = 0; m < 8; ++m)
        vs.push_back({Int(m & 1), Int((m >> 1) & 1), Int((m >> 2) & 1)});
    return Polytope{3, std::move(vs)};
}

inline Polytope segment(int k) {
    return Polytope{1, {{Int(0)}, {Int(k)}}};
}

} // namespace toricc::fixtures
