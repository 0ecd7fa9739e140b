#include "cqs/ashikaga.hpp"

#include <sstream>
#include <stdexcept>

namespace cqs {

namespace {

Int pos_mod(const Int& x, const Int& m) {
    Int v = x % m;
    if (v < 0) v += m;
    return v;
}

}  // namespace

ProperFraction::ProperFraction(Int denom, std::vector<Int> nums)
    : r(std::move(denom)), a(std::move(nums)) {
    if (r < 1) throw std::invalid_argument("proper fraction needs denominator >= 1");
    if (a.empty()) throw std::invalid_argument("proper fraction needs at least one entry");
    for (Int& x : a) x = pos_mod(x, r);
}

ProperFraction ProperFraction::inf(int n) {
    ProperFraction f;
    f.infinite = true;
    f.a.assign(static_cast<std::size_t>(n), Int(0));
    return f;
}

bool ProperFraction::is_zero() const {
    if (infinite) return false;
    if (r != 1) return false;
    for (const Int& x : a)
        if (x != 0) return false;
    return true;
}

bool ProperFraction::semi_unimodular() const {
    if (infinite) return false;
    for (const Int& x : a)
        if (x == 1) return true;
    return false;
}

bool ProperFraction::operator==(const ProperFraction& o) const {
    if (infinite || o.infinite) return infinite == o.infinite && a.size() == o.a.size();
    return r == o.r && a == o.a;
}

std::string ProperFraction::str() const {
    if (infinite) return "inf";
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (i) os << ",";
        os << a[i];
    }
    os << ")/" << r;
    return os.str();
}

ProperFraction remainder_map(int i, const ProperFraction& f) {
    if (i < 2 || i > f.dim())
        throw std::out_of_range("remainder map index out of range");
    if (f.infinite) return ProperFraction::inf(f.dim());
    if (f.a[0] != 1)
        throw std::invalid_argument("remainder map needs slot-1 unimodular input");
    const Int& ai = f.a[static_cast<std::size_t>(i - 1)];
    if (ai == 0) return ProperFraction::inf(f.dim());
    std::vector<Int> nums(f.a.size());
    for (std::size_t j = 0; j < f.a.size(); ++j)
        nums[j] = (static_cast<int>(j) == i - 1) ? pos_mod(-f.r, ai) : pos_mod(f.a[j], ai);
    return ProperFraction(ai, std::move(nums));
}

std::pair<ProperFraction, std::vector<int>> normalize_slot1(const ProperFraction& f) {
    if (!f.semi_unimodular())
        throw std::invalid_argument("fraction is not semi-unimodular: " + f.str());
    int s = 0;
    while (f.a[static_cast<std::size_t>(s)] != 1) ++s;
    std::vector<int> perm;
    perm.push_back(s);
    for (int j = 0; j < f.dim(); ++j)
        if (j != s) perm.push_back(j);
    std::vector<Int> nums;
    for (int j : perm) nums.push_back(f.a[static_cast<std::size_t>(j)]);
    return {ProperFraction(f.r, std::move(nums)), std::move(perm)};
}

namespace {

void expand(RemainderTree& node) {
    for (int i = 2; i <= node.fraction.dim(); ++i) {
        ProperFraction child = remainder_map(i, node.fraction);
        if (child.infinite || child.is_zero()) continue;
        RemainderTree sub;
        sub.fraction = std::move(child);
        expand(sub);
        node.children.emplace(i, std::move(sub));
    }
}

}  // namespace

RemainderTree remainder_polynomial(const ProperFraction& f) {
    if (f.infinite) throw std::invalid_argument("cannot expand the infinite fraction");
    RemainderTree root;
    if (f.r == 1) {
        root.fraction = ProperFraction(1, std::vector<Int>(f.a.size(), Int(0)));
        return root;  // excluded term, empty expansion
    }
    ProperFraction g = f.a[0] == 1 ? f : normalize_slot1(f).first;
    root.fraction = std::move(g);
    expand(root);
    return root;
}

std::vector<std::pair<std::vector<int>, ProperFraction>> RemainderTree::terms() const {
    std::vector<std::pair<std::vector<int>, ProperFraction>> out;
    if (fraction.infinite || fraction.is_zero()) return out;
    std::vector<int> path;
    auto walk = [&](auto&& self, const RemainderTree& node) -> void {
        out.emplace_back(path, node.fraction);
        for (const auto& [i, sub] : node.children) {
            path.push_back(i);
            self(self, sub);
            path.pop_back();
        }
    };
    walk(walk, *this);
    return out;
}

std::size_t RemainderTree::node_count() const { return terms().size(); }

std::string render_remainder_polynomial(const RemainderTree& t) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [path, frac] : t.terms()) {
        if (!first) os << " + ";
        first = false;
        os << frac.str();
        if (!path.empty()) {
            os << " ";
            for (int i : path) os << "x" << i;
        }
    }
    if (first) os << "0";
    return os.str();
}

}  // namespace cqs
