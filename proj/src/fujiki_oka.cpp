#include "cqs/fujiki_oka.hpp"

#include <algorithm>
#include <stdexcept>

#include "cqs/classify.hpp"

namespace cqs {

namespace {

Int pos_mod(const Int& x, const Int& m) {
    Int v = x % m;
    if (v < 0) v += m;
    return v;
}

// remainder_map extended to slot 1 (used only with a1 = 1, where the
// result has denominator 1 and the child cone is smooth)
ProperFraction child_fraction(int i, const ProperFraction& f) {
    const Int& ai = f.a[static_cast<std::size_t>(i - 1)];
    std::vector<Int> nums(f.a.size());
    for (std::size_t j = 0; j < f.a.size(); ++j)
        nums[j] = (static_cast<int>(j) == i - 1) ? pos_mod(-f.r, ai) : pos_mod(f.a[j], ai);
    return ProperFraction(ai, std::move(nums));
}

LatticePoint oka_center(const std::array<LatticePoint, 3>& gens, const ProperFraction& f) {
    LatticePoint sum = gens[0].scaled(f.a[0]) + gens[1].scaled(f.a[1]) + gens[2].scaled(f.a[2]);
    return sum.divided(f.r);
}

}  // namespace

void resolve_labeled_cone(Fan& out, const std::array<LatticePoint, 3>& gens,
                          const ProperFraction& f, std::vector<BlowupStep>* trace) {
    if (f.dim() != 3) throw std::invalid_argument("three-dimensional cones only");
    if (f.r == 1) {
        out.add_cone({out.add_ray(gens[0]), out.add_ray(gens[1]), out.add_ray(gens[2])});
        return;
    }
    if (f.a[0] != 1)
        throw std::invalid_argument("labeled cone must be slot-1 unimodular: " + f.str());

    LatticePoint c = oka_center(gens, f);
    if (trace) {
        BlowupStep step;
        step.parent = gens;
        step.type = f;
        step.center = c;
        for (int i = 1; i <= 3; ++i)
            if (f.a[static_cast<std::size_t>(i - 1)] != 0)
                step.children.push_back(child_fraction(i, f));
        trace->push_back(std::move(step));
    }
    for (int i = 1; i <= 3; ++i) {
        if (f.a[static_cast<std::size_t>(i - 1)] == 0) continue;
        std::array<LatticePoint, 3> child_gens = gens;
        child_gens[static_cast<std::size_t>(i - 1)] = c;
        resolve_labeled_cone(out, child_gens, child_fraction(i, f), trace);
    }
}

Fan fujiki_oka_resolve(const GroupAction& g, const GroupAction& generator_choice,
                       std::vector<BlowupStep>* trace) {
    g.require_valid();
    if (g.r == 1) return positive_octant(g);

    std::vector<GroupAction> sugens = semi_unimodular_generators(g);
    if (std::find(sugens.begin(), sugens.end(), generator_choice) == sugens.end())
        throw std::domain_error("not a semi-unimodular generator of the group: " +
                                generator_choice.str());

    int slot = 0;
    while (generator_choice.weights[slot] != 1) ++slot;
    std::array<LatticePoint, 3> gens;
    std::vector<Int> nums;
    gens[0] = unit_point(slot);
    nums.push_back(1);
    for (int j = 0; j < 3; ++j)
        if (j != slot) {
            gens[nums.size()] = unit_point(j);
            nums.push_back(generator_choice.weights[j]);
        }

    Fan out(make_lattice(g));
    resolve_labeled_cone(out, gens, ProperFraction(g.r, nums), trace);
    return out;
}

Fan fujiki_oka_resolve(const GroupAction& g, std::vector<BlowupStep>* trace) {
    g.require_valid();
    if (g.r == 1) return positive_octant(g);
    std::vector<GroupAction> sugens = semi_unimodular_generators(g);
    if (sugens.empty())
        throw std::domain_error("no semi-unimodular generator: " + g.str());
    return fujiki_oka_resolve(g, sugens.front(), trace);
}

DiscrepancyReport discrepancies(const Fan& f) {
    DiscrepancyReport rep;
    for (const LatticePoint& p : f.rays()) {
        if (p == unit_point(0) || p == unit_point(1) || p == unit_point(2)) continue;
        Rat d = p.age() - 1;
        if (d != 0) rep.crepant = false;
        rep.discrepancy.emplace_back(p, d);
    }
    return rep;
}

}  // namespace cqs
