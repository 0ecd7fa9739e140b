#ifndef CQS_GEOMETRY_HPP
#define CQS_GEOMETRY_HPP

#include <vector>

#include "cqs/lattice.hpp"

namespace cqs {

// Integer direction vectors in Z^3, kept gcd-reduced where noted.
using Vec3 = std::array<Int, 3>;

Int dot(const Vec3& a, const Vec3& b);
Vec3 cross(const Vec3& a, const Vec3& b);
bool is_zero(const Vec3& v);
Vec3 reduce_dir(Vec3 v);  // divide by gcd of entries (nonzero input)

// Primitive integer direction of a rational point (gcd-reduced numerators).
Vec3 direction_of(const LatticePoint& p);

/// Extreme-ray description of {w : <w,d> >= 0 for all d in normals}.
struct DualCone {
    std::vector<Vec3> rays;  // primitive in Z^3, deduplicated, sorted
    bool pointed;            // no line contained (normals span R^3)
    bool full_dim;           // has interior points
};

DualCone dual_rays(const std::vector<Vec3>& normals);

/// Facet normals of the pointed cone spanned by `rays` (dual of the dual).
std::vector<Vec3> facet_normals(const std::vector<Vec3>& rays);

/// True if cone(raysA) and cone(raysB) meet in a common face of both.
/// Both cones must be full-dimensional and pointed.
bool meet_in_common_face(const std::vector<Vec3>& raysA, const std::vector<Vec3>& raysB);

/// Indices of `pts` in counterclockwise cyclic order around their centroid.
/// Points are rational plane points (x/q, y/q); they must be in strictly
/// convex position (vertices of a convex polygon).
struct PlanePoint {
    Int x, y, q;  // q > 0
};
std::vector<int> cyclic_order(const std::vector<PlanePoint>& pts);

/// Junior-plane projection p/age(p) as a PlanePoint (x, y coordinates).
PlanePoint junior_plane_point(const LatticePoint& p);

/// Normalized volume of the cone over `rays` (>= 3 rays, full-dim, pointed,
/// all of positive age) with respect to `lat`; triangulates via cyclic order.
Int polygon_cone_multiplicity(const std::vector<LatticePoint>& rays, const Lattice& lat);

}  // namespace cqs

#endif
