#ifndef CQS_ASHIKAGA_HPP
#define CQS_ASHIKAGA_HPP

#include <map>
#include <string>
#include <vector>

#include "cqs/lattice.hpp"

namespace cqs {

/// The symbol (a1,...,an)/r with 0 <= ai <= r-1, or the formal infinity.
/// Fractions are symbols: numerators are never reduced against r.
struct ProperFraction {
    Int r;               // denominator, >= 1; ignored when infinite
    std::vector<Int> a;  // numerators
    bool infinite = false;

    ProperFraction() : r(1) {}
    /// Entries are reduced mod r into [0, r).
    ProperFraction(Int denom, std::vector<Int> nums);

    static ProperFraction inf(int n);

    int dim() const { return static_cast<int>(a.size()); }
    bool is_zero() const;  // (0,...,0)/1
    bool semi_unimodular() const;
    bool operator==(const ProperFraction& o) const;

    std::string str() const;  // "(1,2,8)/11" or "inf"
};

/// The i-th remainder map, 1-based slot index with 2 <= i <= n.
/// Requires a1 = 1 (slot-1 unimodular) for finite input.
ProperFraction remainder_map(int i, const ProperFraction& f);

/// Tree of iterated remainders; children keyed by slot index, with
/// infinite and zero terms absent.
struct RemainderTree {
    ProperFraction fraction;
    std::map<int, RemainderTree> children;

    /// Terms in construction (depth-first) order: (path, fraction).
    /// Empty when the root itself was excluded.
    std::vector<std::pair<std::vector<int>, ProperFraction>> terms() const;
    std::size_t node_count() const;
};

/// Move a unimodular entry into slot 1 (stable order for the rest).
/// Returns the permuted fraction and perm, where perm[i] is the original
/// 0-based slot of the new slot i.
std::pair<ProperFraction, std::vector<int>> normalize_slot1(const ProperFraction& f);

/// Full expansion tree. Inputs with the unimodular entry away from slot 1
/// are normalized first (see normalize_slot1); the tree is indexed in the
/// normalized slots. Throws on non-semi-unimodular input with r > 1.
RemainderTree remainder_polynomial(const ProperFraction& f);

/// Textual expansion in construction order:
/// "(1,2,8)/11 + (1,1,0)/2 x2 + (1,2,5)/8 x3 + ...".
std::string render_remainder_polynomial(const RemainderTree& t);

}  // namespace cqs

#endif
