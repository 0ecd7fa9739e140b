#ifndef CQS_FUJIKI_OKA_HPP
#define CQS_FUJIKI_OKA_HPP

#include <optional>
#include <vector>

#include "cqs/ashikaga.hpp"
#include "cqs/fan.hpp"
#include "cqs/lattice.hpp"

namespace cqs {

/// One star subdivision in a resolution walk.
struct BlowupStep {
    std::array<LatticePoint, 3> parent;     // ordered generators, slot 1 first
    ProperFraction type;                    // singularity type of the parent cone
    LatticePoint center;                    // the Oka center
    std::vector<ProperFraction> children;   // child types in slot order
};

struct DiscrepancyReport {
    std::vector<std::pair<LatticePoint, Rat>> discrepancy;  // per inserted ray
    bool crepant = true;
};

/// Resolve the cone spanned by `gens` whose singularity type is the
/// slot-1-unimodular fraction `f` (multiplicity of the cone equals f.r,
/// and the lattice is generated by gens together with the Oka center).
/// Emits smooth maximal cones into `out`.
void resolve_labeled_cone(Fan& out, const std::array<LatticePoint, 3>& gens,
                          const ProperFraction& f, std::vector<BlowupStep>* trace = nullptr);

/// Fujiki-Oka resolution of the octant of C^3/g using the given
/// semi-unimodular generator (one of semi_unimodular_generators(g)).
Fan fujiki_oka_resolve(const GroupAction& g, const GroupAction& generator_choice,
                       std::vector<BlowupStep>* trace = nullptr);

/// Same, with the first semi-unimodular generator (smallest power).
/// Throws std::domain_error when none exists.
Fan fujiki_oka_resolve(const GroupAction& g, std::vector<BlowupStep>* trace = nullptr);

/// Discrepancies age(p) - 1 of all non-corner rays; crepant iff all zero.
DiscrepancyReport discrepancies(const Fan& f);

}  // namespace cqs

#endif
