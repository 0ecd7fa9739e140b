#ifndef CQS_HILBERT_HPP
#define CQS_HILBERT_HPP

#include <vector>

#include "cqs/fan.hpp"
#include "cqs/lattice.hpp"

namespace cqs {

/// Hilbert basis of the positive octant with respect to the overlattice:
/// the nonzero lattice points of the octant that are not a sum of two
/// other nonzero octant lattice points.
struct HilbertBasis {
    std::vector<LatticePoint> elements;  // sorted
    Lattice lattice;

    bool contains(const LatticePoint& p) const;
    std::size_t size() const { return elements.size(); }
};

HilbertBasis hilbert_basis(const Lattice& lat);

struct HilbVerdict {
    enum class Kind { yes, not_smooth, gen_mismatch };
    Kind kind;
    std::vector<LatticePoint> extra;    // Gen(fan) \ Hilb
    std::vector<LatticePoint> missing;  // Hilb \ Gen(fan)

    bool yes() const { return kind == Kind::yes; }
};

/// Smooth and Gen(fan) equals the Hilbert basis of the octant.
HilbVerdict is_hilb_desingularization(const Fan& f);

}  // namespace cqs

#endif
