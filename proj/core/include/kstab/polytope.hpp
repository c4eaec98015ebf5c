#pragma once

#include <cstddef>
#include <vector>

#include "kstab/affine.hpp"

namespace kstab {

// The closed constraint form(c) >= 0.
struct HalfSpace {
    AffineForm form;

    bool operator==(const HalfSpace& other) const = default;
};

// A closed bounded rational polyhedron carrying both descriptions. The
// vertex list is irredundant and lexicographically sorted; every vertex
// satisfies every half-space exactly. Lower-dimensional polytopes (segments,
// points, the empty set) are first-class values; equalities appear in the
// H-representation as opposite half-space pairs.
struct Polytope {
    std::vector<HalfSpace> hrep;
    std::vector<CoefficientPoint> vertices;
    std::size_t dim_ambient = 0;

    bool is_empty() const { return vertices.empty(); }
};

// Exact vertex enumeration by the double description method. Returns the
// irredundant vertex set, sorted lexicographically. Throws
// contract_violation when the region is unbounded; an empty region yields an
// empty list.
std::vector<CoefficientPoint> enumerate_vertices(const std::vector<HalfSpace>& halfspaces,
                                                 std::size_t dim);

// enumerate_vertices plus the input H-representation bundled into a value.
Polytope polytope_from_halfspaces(std::vector<HalfSpace> halfspaces, std::size_t dim);

// Exact convex hull: irredundant sorted vertices and a valid
// H-representation (equality pairs for the affine hull, facets within it).
// Invariant under permutation and duplication of the input points.
Polytope convex_hull(const std::vector<CoefficientPoint>& points, std::size_t dim);

bool contains(const Polytope& polytope, const CoefficientPoint& point);

// Set equality via mutual vertex containment.
bool equal(const Polytope& a, const Polytope& b);

// Exact minimum of an affine objective over a non-empty polytope (attained
// at a vertex). Throws contract_violation on an empty polytope.
Rat linear_min(const Polytope& polytope, const AffineForm& objective);

}  // namespace kstab
