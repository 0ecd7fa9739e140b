#include "cqs/classify.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace cqs {

namespace {

const int kPerms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};

// every (t, permutation) image of the weight triple, t coprime to r
std::vector<std::array<Int, 3>> weight_forms(const GroupAction& g) {
    std::vector<std::array<Int, 3>> forms;
    if (g.r == 1) {
        forms.push_back({0, 0, 0});
        return forms;
    }
    for (Int t = 1; t < g.r; ++t) {
        if (gcd(t, g.r) != 1) continue;
        GroupAction p = g.power(t);
        for (const auto& perm : kPerms)
            forms.push_back({p.weights[perm[0]], p.weights[perm[1]], p.weights[perm[2]]});
    }
    return forms;
}

}  // namespace

std::string ClassLabel::name() const {
    switch (kind) {
        case Kind::I: return "I";
        case Kind::IIalpha: return "IIalpha";
        case Kind::IIbeta: return "IIbeta";
        case Kind::III: return "III";
        case Kind::IV_9: return "IV_9";
        case Kind::IV_14: return "IV_14";
        case Kind::NotCanonical: return "NotCanonical";
    }
    return "?";
}

std::string ClassLabel::str() const {
    std::ostringstream os;
    os << name();
    switch (kind) {
        case Kind::IIalpha: os << "(r=" << r << ",a=" << a << ")"; break;
        case Kind::IIbeta: os << "(d=" << d << ",r=" << r << ",a=" << a << ")"; break;
        case Kind::III: os << "(k=" << k << ")"; break;
        default: break;
    }
    return os.str();
}

bool reid_tai_canonical(const GroupAction& g) {
    g.require_valid();
    for (Int t = 1; t < g.r; ++t) {
        Int sum = 0;
        for (const Int& a : g.weights) sum += (t * a) % g.r;
        if (sum < g.r) return false;
    }
    return true;
}

ClassLabel match_class(const GroupAction& g) {
    g.require_valid();
    ClassLabel out;
    const Int& R = g.r;

    Int wsum = g.weights[0] + g.weights[1] + g.weights[2];
    if (wsum % R == 0) {
        out.kind = ClassLabel::Kind::I;
        return out;
    }

    std::vector<std::array<Int, 3>> forms = weight_forms(g);

    for (const auto& w : forms) {
        if (w[0] == 1 && w[1] + w[2] == R && w[1] >= 1 && gcd(R, w[1]) == 1) {
            out.kind = ClassLabel::Kind::IIalpha;
            out.r = R;
            out.a = std::min(w[1], w[2]);
            return out;
        }
    }

    for (const auto& w : forms) {
        if (w[0] == 1 && w[1] == R - 1 && w[2] >= 1 && gcd(R, w[2]) > 1) {
            Int d = gcd(R, w[2]);
            Int rr = R / d, aa = w[2] / d;
            if (rr > aa && aa >= 1 && gcd(rr, aa) == 1 && d > 1) {
                out.kind = ClassLabel::Kind::IIbeta;
                out.d = d;
                out.r = rr;
                out.a = std::min(aa, rr - aa);
                return out;
            }
        }
    }

    if (R % 4 == 0 && R >= 8) {
        Int k = R / 4;
        for (const auto& w : forms) {
            if (w[0] == 1 && w[1] == 2 * k + 1 && w[2] == 4 * k - 2) {
                out.kind = ClassLabel::Kind::III;
                out.k = k;
                return out;
            }
        }
    }

    if (R == 9 || R == 14) {
        std::array<Int, 3> target =
            R == 9 ? std::array<Int, 3>{1, 4, 7} : std::array<Int, 3>{1, 9, 11};
        for (const auto& w : forms)
            if (w == target) {
                out.kind = R == 9 ? ClassLabel::Kind::IV_9 : ClassLabel::Kind::IV_14;
                return out;
            }
    }

    return out;
}

bool is_terminal(const GroupAction& g) {
    g.require_valid();
    if (g.r == 1) return true;
    for (const auto& w : weight_forms(g))
        if (w[0] == 1 && w[1] + w[2] == g.r && w[1] >= 1 && gcd(g.r, w[1]) == 1) return true;
    return false;
}

std::vector<GroupAction> semi_unimodular_generators(const GroupAction& g) {
    g.require_valid();
    std::vector<GroupAction> out;
    for (Int t = 1; t < g.r; ++t) {
        if (gcd(t, g.r) != 1) continue;
        GroupAction p = g.power(t);
        if (p.weights[0] == 1 || p.weights[1] == 1 || p.weights[2] == 1) out.push_back(p);
    }
    return out;
}

bool is_gorenstein(const GroupAction& g) {
    g.require_valid();
    return (g.weights[0] + g.weights[1] + g.weights[2]) % g.r == 0;
}

}  // namespace cqs
