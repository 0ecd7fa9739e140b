#ifndef CQS_LATTICE_HPP
#define CQS_LATTICE_HPP

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include <boost/functional/hash.hpp>
#include <boost/multiprecision/cpp_int.hpp>

namespace cqs {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// A cyclic action 1/r(a1,a2,a3) on C^3. Weights live in [0, r).
struct GroupAction {
    Int r;
    std::array<Int, 3> weights;

    GroupAction() : r(1), weights{0, 0, 0} {}
    GroupAction(Int order, Int a1, Int a2, Int a3)
        : r(std::move(order)), weights{std::move(a1), std::move(a2), std::move(a3)} {}

    // 0 <= ai < r and gcd(r, a1, a2, a3) = 1. Zero weights are allowed.
    bool valid() const;
    void require_valid() const;  // throws std::invalid_argument

    bool operator==(const GroupAction& o) const { return r == o.r && weights == o.weights; }
    bool operator<(const GroupAction& o) const;

    // the generator g^t, reduced mod r (order may drop if gcd(t, r) > 1)
    GroupAction power(const Int& t) const;

    std::string str() const;  // "1/9(1,4,7)"
};

/// Exact rational vector: num/den with a single positive common denominator,
/// jointly reduced. den == 1 iff the point is integral.
struct LatticePoint {
    std::array<Int, 3> num;
    Int den;

    LatticePoint() : num{0, 0, 0}, den(1) {}
    LatticePoint(Int n1, Int n2, Int n3, Int d);

    void normalize();

    bool is_zero() const { return num[0] == 0 && num[1] == 0 && num[2] == 0; }
    Rat coord(int i) const { return Rat(num[i], den); }
    Rat age() const { return Rat(num[0] + num[1] + num[2], den); }

    LatticePoint operator+(const LatticePoint& o) const;
    LatticePoint operator-(const LatticePoint& o) const;
    LatticePoint scaled(const Int& k) const;           // k * p
    LatticePoint divided(const Int& k) const;          // p / k, k > 0

    bool operator==(const LatticePoint& o) const { return num == o.num && den == o.den; }
    bool operator!=(const LatticePoint& o) const { return !(*this == o); }
    // canonical order: integer-lex on (num1, num2, num3, den)
    bool operator<(const LatticePoint& o) const;

    std::string str() const;  // "(1,4,7)/9", "(1,0,0)" for integral
};

struct LatticePointHash {
    std::size_t operator()(const LatticePoint& p) const {
        std::size_t h = 0;
        boost::hash_combine(h, p.num[0]);
        boost::hash_combine(h, p.num[1]);
        boost::hash_combine(h, p.num[2]);
        boost::hash_combine(h, p.den);
        return h;
    }
};

LatticePoint unit_point(int i);
LatticePoint point_of(Int n1, Int n2, Int n3, Int d = 1);

/// The overlattice N = Z^3 + Z*(1/r)(a1,a2,a3).
struct Lattice {
    LatticePoint generator;  // class of v1
    Int index;               // [N : Z^3] = r for faithful actions
    GroupAction action;      // the defining symbol (kept for serialization)

    bool contains(const LatticePoint& p) const;
    // divide by the largest integer k with p/k still in the lattice
    LatticePoint primitivize(const LatticePoint& p) const;
    bool is_primitive(const LatticePoint& p) const;

    bool operator==(const Lattice& o) const {
        return generator == o.generator && index == o.index;
    }
};

Lattice make_lattice(const GroupAction& g);

/// v_0 = 0, v_1, ..., v_{r-1}: representatives of N/Z^3 in [0,1)^3.
std::vector<LatticePoint> group_points(const GroupAction& g);

/// Single group point v_i (coordinates reduced mod r).
LatticePoint group_point(const GroupAction& g, const Int& i);

Rat age(const LatticePoint& p);

/// Index in `lat` of the sublattice spanned by three independent generators;
/// equals 1 exactly for smooth cones. Throws on dependent triples.
Int cone_multiplicity(const LatticePoint& a, const LatticePoint& b,
                      const LatticePoint& c, const Lattice& lat);

/// Exact determinant of the 3x3 matrix with rows a, b, c.
Rat det3(const LatticePoint& a, const LatticePoint& b, const LatticePoint& c);

/// Barycentric coordinates of p in the frame (a,b,c); empty if degenerate.
std::vector<Rat> solve_in_frame(const LatticePoint& a, const LatticePoint& b,
                                const LatticePoint& c, const LatticePoint& p);

}  // namespace cqs

#endif
