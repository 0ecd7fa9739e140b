#include "cqs/fan.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "cqs/geometry.hpp"

namespace cqs {

int Fan::add_ray(const LatticePoint& p) {
    LatticePoint prim = lattice_.primitivize(p);
    auto it = ray_ids_.find(prim);
    if (it != ray_ids_.end()) return it->second;
    int id = static_cast<int>(rays_.size());
    rays_.push_back(prim);
    ray_ids_.emplace(prim, id);
    return id;
}

int Fan::find_ray(const LatticePoint& p) const {
    auto it = ray_ids_.find(p);
    return it == ray_ids_.end() ? -1 : it->second;
}

void Fan::add_cone(std::array<int, 3> ray_ids) {
    std::sort(ray_ids.begin(), ray_ids.end());
    if (ray_ids[0] == ray_ids[1] || ray_ids[1] == ray_ids[2])
        throw std::invalid_argument("cone with repeated rays");
    cones_.push_back(Cone{ray_ids});
}

Int Fan::cone_mult(const Cone& c) const {
    return cone_multiplicity(rays_[c.rays[0]], rays_[c.rays[1]], rays_[c.rays[2]], lattice_);
}

std::vector<Rat> Fan::coords_in_cone(const Cone& c, const LatticePoint& p) const {
    std::vector<Rat> x =
        solve_in_frame(rays_[c.rays[0]], rays_[c.rays[1]], rays_[c.rays[2]], p);
    if (x.empty()) return {};
    for (const Rat& v : x)
        if (v < 0) return {};
    return x;
}

bool Fan::equivalent_to(const Fan& o) const {
    if (!(lattice_ == o.lattice_)) return false;
    auto canon = [](const Fan& f) {
        std::vector<LatticePoint> rays = f.rays_;
        std::vector<int> order(rays.size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
        std::sort(order.begin(), order.end(),
                  [&](int a, int b) { return rays[a] < rays[b]; });
        std::vector<int> remap(rays.size());
        for (std::size_t i = 0; i < order.size(); ++i) remap[order[i]] = static_cast<int>(i);
        std::vector<LatticePoint> sorted_rays;
        for (int id : order) sorted_rays.push_back(rays[id]);
        std::vector<Cone> cones;
        for (const Cone& c : f.cones_) {
            std::array<int, 3> r{remap[c.rays[0]], remap[c.rays[1]], remap[c.rays[2]]};
            std::sort(r.begin(), r.end());
            cones.push_back(Cone{r});
        }
        std::sort(cones.begin(), cones.end());
        return std::make_pair(sorted_rays, cones);
    };
    return canon(*this) == canon(o);
}

Fan positive_octant(const GroupAction& g) {
    Fan f(make_lattice(g));
    int a = f.add_ray(unit_point(0));
    int b = f.add_ray(unit_point(1));
    int c = f.add_ray(unit_point(2));
    f.add_cone({a, b, c});
    return f;
}

SubdivideResult star_subdivide(const Fan& f, const LatticePoint& p) {
    if (!f.lattice().contains(p))
        throw std::invalid_argument("subdivision center not in the lattice");
    if (!f.lattice().is_primitive(p))
        throw std::invalid_argument("subdivision center not primitive");
    if (f.find_ray(p) >= 0) return SubdivideResult{f, false};

    std::vector<std::pair<const Cone*, std::vector<Rat>>> hit;
    for (const Cone& c : f.max_cones()) {
        std::vector<Rat> x = f.coords_in_cone(c, p);
        if (!x.empty()) hit.emplace_back(&c, std::move(x));
    }
    if (hit.empty()) throw std::domain_error("subdivision center outside the support");

    Fan out(f.lattice());
    for (const LatticePoint& r : f.rays()) out.add_ray(r);
    int pid = out.add_ray(p);
    for (const Cone& c : f.max_cones()) {
        bool split = false;
        for (auto& [hc, x] : hit)
            if (hc == &c) {
                for (int i = 0; i < 3; ++i) {
                    if (x[i] == 0) continue;
                    std::array<int, 3> child = c.rays;
                    child[i] = pid;
                    out.add_cone(child);
                }
                split = true;
                break;
            }
        if (!split) out.add_cone(c.rays);
    }
    return SubdivideResult{std::move(out), true};
}

bool is_smooth(const Fan& f) {
    for (const Cone& c : f.max_cones())
        if (f.cone_mult(c) != 1) return false;
    return true;
}

std::vector<LatticePoint> gen_set(const Fan& f) {
    std::vector<LatticePoint> g = f.rays();
    std::sort(g.begin(), g.end());
    return g;
}

bool support_is_octant(const Fan& f) {
    for (const LatticePoint& r : f.rays())
        for (int i = 0; i < 3; ++i)
            if (r.num[i] < 0) return false;
    Int total = 0;
    for (const Cone& c : f.max_cones()) total += f.cone_mult(c);
    return total == f.lattice().index;
}

JuniorStats junior_stats(const Fan& f) {
    if (!support_is_octant(f))
        throw std::domain_error("junior statistics need a fan supported on the octant");
    JuniorStats st;
    st.V = static_cast<long long>(f.rays().size());
    st.F = static_cast<long long>(f.max_cones().size());
    std::set<std::pair<int, int>> edges;
    for (const Cone& c : f.max_cones()) {
        edges.insert({c.rays[0], c.rays[1]});
        edges.insert({c.rays[0], c.rays[2]});
        edges.insert({c.rays[1], c.rays[2]});
    }
    st.E = static_cast<long long>(edges.size());
    long long boundary = 0;
    for (const LatticePoint& r : f.rays())
        if (r.num[0] == 0 || r.num[1] == 0 || r.num[2] == 0) ++boundary;
    st.s = Int(boundary) - 2;
    if (st.V - st.E + st.F != 1)
        throw std::logic_error("Euler relation violated; fan is not a disk triangulation");
    return st;
}

bool fan_condition_ok(const Fan& f) {
    std::vector<std::vector<Vec3>> dirs;
    dirs.reserve(f.max_cones().size());
    for (const Cone& c : f.max_cones())
        dirs.push_back({direction_of(f.rays()[c.rays[0]]), direction_of(f.rays()[c.rays[1]]),
                        direction_of(f.rays()[c.rays[2]])});
    for (std::size_t i = 0; i < dirs.size(); ++i)
        for (std::size_t j = i + 1; j < dirs.size(); ++j)
            if (!meet_in_common_face(dirs[i], dirs[j])) return false;
    return true;
}

}  // namespace cqs
