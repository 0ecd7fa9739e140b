#include "cqs/hilbert.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace cqs {

bool HilbertBasis::contains(const LatticePoint& p) const {
    return std::binary_search(elements.begin(), elements.end(), p);
}

HilbertBasis hilbert_basis(const Lattice& lat) {
    // Candidates: unit vectors plus the group points in [0,1)^3. Any
    // irreducible octant point reduces into this set, and any witness pair
    // for a candidate consists of nonzero group points.
    std::vector<LatticePoint> vs = group_points(lat.action);
    std::unordered_set<LatticePoint, LatticePointHash> witnesses;
    for (std::size_t i = 1; i < vs.size(); ++i) witnesses.insert(vs[i]);

    std::vector<LatticePoint> candidates;
    for (int i = 0; i < 3; ++i) candidates.push_back(unit_point(i));
    for (std::size_t i = 1; i < vs.size(); ++i) candidates.push_back(vs[i]);

    HilbertBasis out;
    out.lattice = lat;
    for (const LatticePoint& p : candidates) {
        bool reducible = false;
        for (const LatticePoint& x : witnesses) {
            LatticePoint rest = p - x;
            bool nonneg = rest.num[0] >= 0 && rest.num[1] >= 0 && rest.num[2] >= 0;
            if (nonneg && !rest.is_zero() && witnesses.count(rest)) {
                reducible = true;
                break;
            }
        }
        if (!reducible) out.elements.push_back(p);
    }
    std::sort(out.elements.begin(), out.elements.end());
    return out;
}

HilbVerdict is_hilb_desingularization(const Fan& f) {
    if (!support_is_octant(f))
        throw std::domain_error("Hilbert verdict needs a fan supported on the octant");
    HilbVerdict v;
    if (!is_smooth(f)) {
        v.kind = HilbVerdict::Kind::not_smooth;
        return v;
    }
    std::vector<LatticePoint> gen = gen_set(f);
    HilbertBasis hb = hilbert_basis(f.lattice());
    std::set_difference(gen.begin(), gen.end(), hb.elements.begin(), hb.elements.end(),
                        std::back_inserter(v.extra));
    std::set_difference(hb.elements.begin(), hb.elements.end(), gen.begin(), gen.end(),
                        std::back_inserter(v.missing));
    v.kind = (v.extra.empty() && v.missing.empty()) ? HilbVerdict::Kind::yes
                                                    : HilbVerdict::Kind::gen_mismatch;
    return v;
}

}  // namespace cqs
