#include "cqs/lattice.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace cqs {

namespace {

Int gcd3(const Int& a, const Int& b, const Int& c) {
    return gcd(gcd(a, b), c);
}

Int pos_mod(const Int& x, const Int& m) {
    Int v = x % m;
    if (v < 0) v += m;
    return v;
}

}  // namespace

bool GroupAction::valid() const {
    if (r <= 0) return false;
    for (const Int& a : weights)
        if (a < 0 || a >= r) return false;
    return gcd(gcd3(weights[0], weights[1], weights[2]), r) == 1;
}

void GroupAction::require_valid() const {
    if (r <= 0) throw std::invalid_argument("group order must be positive");
    for (const Int& a : weights)
        if (a < 0 || a >= r)
            throw std::invalid_argument("weights must lie in [0, r): " + str());
    if (gcd(gcd3(weights[0], weights[1], weights[2]), r) != 1)
        throw std::invalid_argument("action is not faithful: " + str());
}

bool GroupAction::operator<(const GroupAction& o) const {
    if (r != o.r) return r < o.r;
    return weights < o.weights;
}

GroupAction GroupAction::power(const Int& t) const {
    return GroupAction(r, pos_mod(t * weights[0], r), pos_mod(t * weights[1], r),
                       pos_mod(t * weights[2], r));
}

std::string GroupAction::str() const {
    std::ostringstream os;
    os << "1/" << r << "(" << weights[0] << "," << weights[1] << "," << weights[2] << ")";
    return os.str();
}

LatticePoint::LatticePoint(Int n1, Int n2, Int n3, Int d)
    : num{std::move(n1), std::move(n2), std::move(n3)}, den(std::move(d)) {
    if (den == 0) throw std::invalid_argument("zero denominator");
    normalize();
}

void LatticePoint::normalize() {
    if (den < 0) {
        den = -den;
        for (Int& n : num) n = -n;
    }
    Int g = gcd(gcd3(num[0] < 0 ? Int(-num[0]) : num[0], num[1] < 0 ? Int(-num[1]) : num[1],
                     num[2] < 0 ? Int(-num[2]) : num[2]),
                den);
    if (g > 1) {
        for (Int& n : num) n /= g;
        den /= g;
    }
}

LatticePoint LatticePoint::operator+(const LatticePoint& o) const {
    return LatticePoint(num[0] * o.den + o.num[0] * den, num[1] * o.den + o.num[1] * den,
                        num[2] * o.den + o.num[2] * den, den * o.den);
}

LatticePoint LatticePoint::operator-(const LatticePoint& o) const {
    return LatticePoint(num[0] * o.den - o.num[0] * den, num[1] * o.den - o.num[1] * den,
                        num[2] * o.den - o.num[2] * den, den * o.den);
}

LatticePoint LatticePoint::scaled(const Int& k) const {
    return LatticePoint(num[0] * k, num[1] * k, num[2] * k, den);
}

LatticePoint LatticePoint::divided(const Int& k) const {
    if (k <= 0) throw std::invalid_argument("division by nonpositive integer");
    return LatticePoint(num[0], num[1], num[2], den * k);
}

bool LatticePoint::operator<(const LatticePoint& o) const {
    if (num != o.num) return num < o.num;
    return den < o.den;
}

std::string LatticePoint::str() const {
    std::ostringstream os;
    os << "(" << num[0] << "," << num[1] << "," << num[2] << ")";
    if (den != 1) os << "/" << den;
    return os.str();
}

LatticePoint unit_point(int i) {
    LatticePoint p;
    p.num[i] = 1;
    return p;
}

LatticePoint point_of(Int n1, Int n2, Int n3, Int d) {
    return LatticePoint(std::move(n1), std::move(n2), std::move(n3), std::move(d));
}

bool Lattice::contains(const LatticePoint& p) const {
    if (p.den == 1) return true;
    if (index % p.den != 0) return false;
    // p in N iff p - k*generator is integral for some 0 <= k < index
    for (Int k = 0; k < index; ++k) {
        LatticePoint q = p - generator.scaled(k);
        if (q.den == 1) return true;
    }
    return false;
}

LatticePoint Lattice::primitivize(const LatticePoint& p) const {
    if (p.is_zero()) throw std::invalid_argument("cannot primitivize the origin");
    if (!contains(p)) throw std::invalid_argument("point not in lattice: " + p.str());
    Int g = gcd3(p.num[0] < 0 ? Int(-p.num[0]) : p.num[0], p.num[1] < 0 ? Int(-p.num[1]) : p.num[1],
                 p.num[2] < 0 ? Int(-p.num[2]) : p.num[2]);
    // p/k in N requires den*k | index*g; den | index*g holds since p is in N
    Int bound = (index * g) / p.den;
    for (Int k = bound; k >= 2; --k) {
        if ((index * g) % (p.den * k) != 0) continue;
        LatticePoint q = p.divided(k);
        if (contains(q)) return q;
    }
    return p;
}

bool Lattice::is_primitive(const LatticePoint& p) const {
    return primitivize(p) == p;
}

Lattice make_lattice(const GroupAction& g) {
    g.require_valid();
    Lattice lat;
    lat.generator = LatticePoint(g.weights[0], g.weights[1], g.weights[2], g.r);
    lat.index = g.r;
    lat.action = g;
    return lat;
}

std::vector<LatticePoint> group_points(const GroupAction& g) {
    g.require_valid();
    std::vector<LatticePoint> pts;
    pts.reserve(static_cast<std::size_t>(g.r));
    for (Int i = 0; i < g.r; ++i) pts.push_back(group_point(g, i));
    return pts;
}

LatticePoint group_point(const GroupAction& g, const Int& i) {
    Int a = (i * g.weights[0]) % g.r;
    Int b = (i * g.weights[1]) % g.r;
    Int c = (i * g.weights[2]) % g.r;
    return LatticePoint(a, b, c, g.r);
}

Rat age(const LatticePoint& p) { return p.age(); }

Rat det3(const LatticePoint& a, const LatticePoint& b, const LatticePoint& c) {
    Int d = a.num[0] * (b.num[1] * c.num[2] - b.num[2] * c.num[1]) -
            a.num[1] * (b.num[0] * c.num[2] - b.num[2] * c.num[0]) +
            a.num[2] * (b.num[0] * c.num[1] - b.num[1] * c.num[0]);
    return Rat(d, a.den * b.den * c.den);
}

Int cone_multiplicity(const LatticePoint& a, const LatticePoint& b, const LatticePoint& c,
                      const Lattice& lat) {
    for (const LatticePoint* p : {&a, &b, &c})
        if (!lat.contains(*p))
            throw std::invalid_argument("cone generator not in lattice: " + p->str());
    Rat d = det3(a, b, c);
    if (d == 0) throw std::invalid_argument("degenerate generator triple");
    if (d < 0) d = -d;
    Rat m = d * lat.index;
    if (denominator(m) != 1)
        throw std::logic_error("non-integral cone multiplicity");
    return numerator(m);
}

std::vector<Rat> solve_in_frame(const LatticePoint& a, const LatticePoint& b,
                                const LatticePoint& c, const LatticePoint& p) {
    Rat d = det3(a, b, c);
    if (d == 0) return {};
    // Cramer's rule on the transposed system x*a + y*b + z*c = p
    Rat dx = det3(p, b, c);
    Rat dy = det3(a, p, c);
    Rat dz = det3(a, b, p);
    return {dx / d, dy / d, dz / d};
}

}  // namespace cqs
