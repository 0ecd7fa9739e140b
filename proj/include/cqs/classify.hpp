#ifndef CQS_CLASSIFY_HPP
#define CQS_CLASSIFY_HPP

#include <string>
#include <vector>

#include "cqs/lattice.hpp"

namespace cqs {

/// Canonical-class label with normal-form parameters.
///   I          G in SL(3)
///   IIalpha    1/r(1,a,r-a), gcd(r,a) = 1            params r, a
///   IIbeta     1/dr(1,dr-1,ad), gcd(r,a)=1, d>1       params d, r, a
///   III        1/4k(1,2k+1,4k-2), k >= 2              param k
///   IV_9       1/9(1,4,7);  IV_14  1/14(1,9,11)
struct ClassLabel {
    enum class Kind { I, IIalpha, IIbeta, III, IV_9, IV_14, NotCanonical };
    Kind kind = Kind::NotCanonical;
    Int r = 0, a = 0, d = 0, k = 0;

    bool canonical() const { return kind != Kind::NotCanonical; }
    std::string name() const;  // "IIbeta"
    std::string str() const;   // "IIbeta(d=2,r=3,a=1)"
};

/// Reid–Tai criterion: age of every nonzero group element is >= 1.
bool reid_tai_canonical(const GroupAction& g);

/// Matches against the class normal forms over all generator replacements
/// g^t (gcd(t,r)=1) and coordinate permutations, in order I, IIalpha,
/// IIbeta, III, IV.
ClassLabel match_class(const GroupAction& g);

/// 1/r(1,a,r-a) with gcd(r,a) = 1, up to equivalence; r = 1 counts.
bool is_terminal(const GroupAction& g);

/// All g^t (gcd(t,r)=1) with some weight equal to 1, ordered by t.
std::vector<GroupAction> semi_unimodular_generators(const GroupAction& g);

bool is_gorenstein(const GroupAction& g);

}  // namespace cqs

#endif
