#ifndef CQS_FAN_HPP
#define CQS_FAN_HPP

#include <array>
#include <unordered_map>
#include <vector>

#include "cqs/lattice.hpp"

namespace cqs {

/// Maximal cone of a simplicial fan: three ray ids, sorted ascending.
struct Cone {
    std::array<int, 3> rays;

    bool operator==(const Cone& o) const { return rays == o.rays; }
    bool operator<(const Cone& o) const { return rays < o.rays; }
};

/// Counts for the induced triangulation of the junior simplex.
/// V - E + F = 1 (triangulated disk); s = boundary vertices - 2.
struct JuniorStats {
    long long V = 0;
    long long E = 0;
    long long F = 0;
    Int s = 0;
};

/// Simplicial fan over a fixed overlattice. Rays are primitive in the
/// lattice; lower-dimensional cones are derived from the maximal ones.
class Fan {
public:
    explicit Fan(Lattice lat) : lattice_(std::move(lat)) {}

    const Lattice& lattice() const { return lattice_; }
    const std::vector<LatticePoint>& rays() const { return rays_; }
    const std::vector<Cone>& max_cones() const { return cones_; }

    /// Insert (primitivizing first); returns the ray id.
    int add_ray(const LatticePoint& p);
    int find_ray(const LatticePoint& p) const;  // -1 if absent
    void add_cone(std::array<int, 3> ray_ids);

    Int cone_mult(const Cone& c) const;
    /// Barycentric coordinates of p in cone c, or empty if p lies outside.
    std::vector<Rat> coords_in_cone(const Cone& c, const LatticePoint& p) const;

    /// Identical ray table and cone list after canonical sorting.
    bool equivalent_to(const Fan& o) const;

private:
    Lattice lattice_;
    std::vector<LatticePoint> rays_;
    std::vector<Cone> cones_;
    std::unordered_map<LatticePoint, int, LatticePointHash> ray_ids_;
};

Fan positive_octant(const GroupAction& g);

struct SubdivideResult {
    Fan fan;
    bool changed;  // false when the center was already a ray
};

/// Fan-wide star subdivision at p (p in the lattice, primitive, inside the
/// support). Splits every cone containing p, including across shared faces.
SubdivideResult star_subdivide(const Fan& f, const LatticePoint& p);

bool is_smooth(const Fan& f);

/// Sorted primitive generators of all rays.
std::vector<LatticePoint> gen_set(const Fan& f);

JuniorStats junior_stats(const Fan& f);

/// Sum of maximal-cone multiplicities equals the octant's normalized volume
/// and every ray lies in the octant (partition of the octant).
bool support_is_octant(const Fan& f);

/// Pairwise check that maximal cones intersect in common faces.
bool fan_condition_ok(const Fan& f);

}  // namespace cqs

#endif
