#pragma once

#include <optional>
#include <vector>

#include "toricc/fan.hpp"

namespace toricc {

// Full-dimensional lattice polytope given by its exact vertex set.
struct Polytope {
    int rank = 0;
    std::vector<std::vector<Int>> vertices;
};

// Supporting halfspace <m, normal> >= -offset with primitive inner normal.
struct Facet {
    RayVec normal;
    Int offset;
    bool operator==(const Facet&) const = default;
};

// All facets of conv(vertices), by exhaustive hyperplane enumeration over
// rank-sized vertex subsets. Throws precondition_error if the vertex set is
// not full-dimensional.
std::vector<Facet> polytope_facets(const Polytope& p);

// Checks full-dimensionality and that the listed points are exactly the
// vertices of their convex hull. Throws precondition_error on violation.
void validate_polytope(const Polytope& p);

struct NormalFanResult {
    FanPtr fan;
    std::vector<Rat> coeffs; // a_rho per ray: P = {m : <m, u_rho> >= -a_rho}
};

// Inner-normal fan. Requires a simple polytope (simplicial normal fan);
// other inputs are rejected since non-simplicial cones are unsupported.
NormalFanResult normal_fan(const Polytope& p);

struct LatticePointCount {
    Int count;
    std::vector<std::vector<Int>> points; // filled only when requested
};

// Brute-force oracle: half-space membership over the bounding box. The box
// may contain at most 10^7 candidate points.
LatticePointCount enumerate_lattice_points(const Polytope& p, bool keep_points = false);

Polytope dilate(const Polytope& p, const Int& k);

} // namespace toricc
