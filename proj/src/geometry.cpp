#include "cqs/geometry.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace cqs {

Int dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

bool is_zero(const Vec3& v) { return v[0] == 0 && v[1] == 0 && v[2] == 0; }

Vec3 reduce_dir(Vec3 v) {
    Int g = gcd(gcd(abs(v[0]), abs(v[1])), abs(v[2]));
    if (g > 1)
        for (Int& x : v) x /= g;
    return v;
}

Vec3 direction_of(const LatticePoint& p) {
    if (p.is_zero()) throw std::invalid_argument("zero point has no direction");
    return reduce_dir({p.num[0], p.num[1], p.num[2]});
}

namespace {

int rank_of(const std::vector<Vec3>& vs) {
    // fraction-free Gaussian elimination on a copy
    std::vector<Vec3> m = vs;
    int rank = 0;
    for (int col = 0; col < 3 && rank < static_cast<int>(m.size()); ++col) {
        int pivot = -1;
        for (int i = rank; i < static_cast<int>(m.size()); ++i)
            if (m[i][col] != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        std::swap(m[rank], m[pivot]);
        for (int i = rank + 1; i < static_cast<int>(m.size()); ++i) {
            if (m[i][col] == 0) continue;
            Int a = m[rank][col], b = m[i][col];
            for (int j = 0; j < 3; ++j) m[i][j] = m[i][j] * a - m[rank][j] * b;
        }
        ++rank;
    }
    return rank;
}

}  // namespace

DualCone dual_rays(const std::vector<Vec3>& normals) {
    DualCone out;
    std::vector<Vec3> ds;
    std::set<Vec3> seen;
    for (const Vec3& d : normals) {
        if (is_zero(d)) continue;
        Vec3 r = reduce_dir(d);
        if (seen.insert(r).second) ds.push_back(r);
    }
    if (ds.empty()) {
        out.pointed = false;
        out.full_dim = true;  // whole space
        return out;
    }
    out.pointed = rank_of(ds) == 3;
    if (!out.pointed) {
        // contains the line ds^perp; not usable as a chart either way
        out.full_dim = false;
        return out;
    }
    std::set<Vec3> rayset;
    for (std::size_t i = 0; i < ds.size(); ++i) {
        for (std::size_t j = i + 1; j < ds.size(); ++j) {
            Vec3 c = cross(ds[i], ds[j]);
            if (is_zero(c)) continue;
            for (int sign = 0; sign < 2; ++sign) {
                Vec3 cand = sign ? Vec3{-c[0], -c[1], -c[2]} : c;
                bool ok = true;
                for (const Vec3& d : ds)
                    if (dot(cand, d) < 0) {
                        ok = false;
                        break;
                    }
                if (ok) rayset.insert(reduce_dir(cand));
            }
        }
    }
    out.rays.assign(rayset.begin(), rayset.end());
    out.full_dim = true;
    for (const Vec3& d : ds) {
        bool strict = false;
        for (const Vec3& r : out.rays)
            if (dot(r, d) > 0) {
                strict = true;
                break;
            }
        if (!strict) {
            out.full_dim = false;
            break;
        }
    }
    if (out.rays.empty()) out.full_dim = false;
    return out;
}

std::vector<Vec3> facet_normals(const std::vector<Vec3>& rays) {
    DualCone dual = dual_rays(rays);  // dual cone of cone(rays)
    if (!dual.pointed)
        throw std::invalid_argument("facet normals require a full-dimensional cone");
    return dual.rays;
}

bool meet_in_common_face(const std::vector<Vec3>& raysA, const std::vector<Vec3>& raysB) {
    std::vector<Vec3> na = facet_normals(raysA);
    std::vector<Vec3> nb = facet_normals(raysB);
    std::vector<Vec3> all = na;
    all.insert(all.end(), nb.begin(), nb.end());
    DualCone inter = dual_rays(all);
    if (!inter.pointed) return false;  // cannot happen for pointed inputs
    std::set<Vec3> w(inter.rays.begin(), inter.rays.end());

    auto face_of = [&w](const std::vector<Vec3>& rays, const std::vector<Vec3>& normals) {
        // normals tight on the whole intersection
        std::vector<Vec3> tight;
        for (const Vec3& n : normals) {
            bool all_zero = true;
            for (const Vec3& r : w)
                if (dot(n, r) != 0) {
                    all_zero = false;
                    break;
                }
            if (all_zero) tight.push_back(n);
        }
        std::set<Vec3> face;
        for (const Vec3& r : rays) {
            bool on = true;
            for (const Vec3& n : tight)
                if (dot(n, r) != 0) {
                    on = false;
                    break;
                }
            if (on) face.insert(reduce_dir(r));
        }
        return face;
    };

    return face_of(raysA, na) == w && face_of(raysB, nb) == w;
}

std::vector<int> cyclic_order(const std::vector<PlanePoint>& pts) {
    const int n = static_cast<int>(pts.size());
    if (n <= 2) {
        std::vector<int> id(n);
        for (int i = 0; i < n; ++i) id[i] = i;
        return id;
    }
    // centroid times n: cx/q, cy/q with common q = n * prod? use exact sums
    // work with deltas d_i = pts[i] - centroid, cleared of denominators:
    // d_i ~ (x_i * Q / q_i - CX, y_i * Q / q_i - CY) for suitable common scale
    Int Q = 1;
    for (const PlanePoint& p : pts) Q = lcm(Q, p.q);
    std::vector<std::array<Int, 2>> scaled(n);
    Int cx = 0, cy = 0;
    for (int i = 0; i < n; ++i) {
        scaled[i] = {pts[i].x * (Q / pts[i].q), pts[i].y * (Q / pts[i].q)};
        cx += scaled[i][0];
        cy += scaled[i][1];
    }
    std::vector<std::array<Int, 2>> d(n);
    for (int i = 0; i < n; ++i)
        d[i] = {scaled[i][0] * n - cx, scaled[i][1] * n - cy};

    auto half = [](const std::array<Int, 2>& v) {
        return (v[1] < 0 || (v[1] == 0 && v[0] < 0)) ? 1 : 0;
    };
    auto det2 = [](const std::array<Int, 2>& a, const std::array<Int, 2>& b) {
        return a[0] * b[1] - a[1] * b[0];
    };
    std::vector<int> idx(n);
    for (int i = 0; i < n; ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](int a, int b) {
        int ha = half(d[a]), hb = half(d[b]);
        if (ha != hb) return ha < hb;
        Int cr = det2(d[a], d[b]);
        if (cr != 0) return cr > 0;
        throw std::logic_error("cyclic_order: points not in strictly convex position");
    });
    return idx;
}

PlanePoint junior_plane_point(const LatticePoint& p) {
    Int s = p.num[0] + p.num[1] + p.num[2];
    if (s <= 0) throw std::invalid_argument("point has nonpositive age");
    return PlanePoint{p.num[0], p.num[1], s};
}

Int polygon_cone_multiplicity(const std::vector<LatticePoint>& rays, const Lattice& lat) {
    if (rays.size() < 3) throw std::invalid_argument("need at least 3 rays");
    std::vector<PlanePoint> pts;
    pts.reserve(rays.size());
    for (const LatticePoint& r : rays) pts.push_back(junior_plane_point(r));
    std::vector<int> order = cyclic_order(pts);
    Int total = 0;
    for (std::size_t i = 1; i + 1 < order.size(); ++i)
        total += cone_multiplicity(rays[order[0]], rays[order[i]], rays[order[i + 1]], lat);
    return total;
}

}  // namespace cqs
