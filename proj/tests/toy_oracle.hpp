#pragma once

// Self-contained brute-force oracle for rank-2 systems: enumerates the group
// by matrix closure, scans torus points on the denominator-12 grid, and
// derives fixed sets, component partitions and quotient counts directly.
// Deliberately reimplements everything with plain 2x2 integer arithmetic so
// it shares no code with the library under test.

#include <array>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <set>
#include <vector>

namespace toy_oracle {

using Mat2 = std::array<std::array<long, 2>, 2>;
using GridPoint = std::array<int, 2>; // coordinates in units of 1/12, in [0, 12)

constexpr int kQ = 12;

inline Mat2 identity() { return {{{1, 0}, {0, 1}}}; }

inline Mat2 mul(const Mat2& a, const Mat2& b) {
    Mat2 c{};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) c[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
    return c;
}

inline long det(const Mat2& m) { return m[0][0] * m[1][1] - m[0][1] * m[1][0]; }

inline Mat2 inverse(const Mat2& m) { // det must be +-1
    const long d = det(m);
    return {{{m[1][1] / d, -m[0][1] / d}, {-m[1][0] / d, m[0][0] / d}}};
}

inline Mat2 transpose(const Mat2& m) {
    return {{{m[0][0], m[1][0]}, {m[0][1], m[1][1]}}};
}

// (m^{-1})^T: the action on the dual (weight) lattice.
inline Mat2 inverse_transpose(const Mat2& m) { return transpose(inverse(m)); }

// Simple reflections from the Cartan matrix: s_i(e_j) = e_j - C_ij e_i, i.e.
// the identity with row i replaced by (delta_ij - C_ij).
inline std::vector<Mat2> simple_reflections(const std::vector<std::vector<long>>& cartan) {
    std::vector<Mat2> out;
    for (int i = 0; i < 2; ++i) {
        Mat2 s = identity();
        for (int j = 0; j < 2; ++j) s[i][j] = (i == j ? 1 : 0) - cartan[i][j];
        out.push_back(s);
    }
    return out;
}

inline std::vector<Mat2> enumerate_group(const std::vector<Mat2>& gens) {
    std::set<Mat2> seen{identity()};
    std::vector<Mat2> order{identity()};
    for (std::size_t head = 0; head < order.size(); ++head)
        for (const Mat2& g : gens) {
            const Mat2 next = mul(order[head], g);
            if (seen.insert(next).second) order.push_back(next);
        }
    return order;
}

inline std::vector<std::vector<Mat2>> conjugacy_classes(const std::vector<Mat2>& group) {
    std::vector<std::vector<Mat2>> classes;
    std::set<Mat2> assigned;
    for (const Mat2& g : group) {
        if (assigned.count(g)) continue;
        std::set<Mat2> orbit;
        for (const Mat2& h : group) orbit.insert(mul(mul(h, g), inverse(h)));
        std::vector<Mat2> members(orbit.begin(), orbit.end());
        for (const Mat2& m : members) assigned.insert(m);
        classes.push_back(std::move(members));
    }
    return classes;
}

inline std::vector<Mat2> centraliser(const std::vector<Mat2>& group, const Mat2& g) {
    std::vector<Mat2> out;
    for (const Mat2& h : group)
        if (mul(h, g) == mul(g, h)) out.push_back(h);
    return out;
}

// --- torus grid -----------------------------------------------------------

inline GridPoint apply_grid(const Mat2& m, const GridPoint& p) {
    GridPoint q{};
    for (int i = 0; i < 2; ++i) {
        long v = m[i][0] * p[0] + m[i][1] * p[1];
        v %= kQ;
        if (v < 0) v += kQ;
        q[i] = static_cast<int>(v);
    }
    return q;
}

inline std::vector<GridPoint> fixed_grid_points(const Mat2& m) {
    std::vector<GridPoint> out;
    for (int a = 0; a < kQ; ++a)
        for (int b = 0; b < kQ; ++b) {
            const GridPoint p{a, b};
            if (apply_grid(m, p) == p) out.push_back(p);
        }
    return out;
}

inline Mat2 i_minus(const Mat2& m) {
    return {{{1 - m[0][0], -m[0][1]}, {-m[1][0], 1 - m[1][1]}}};
}

inline long rank2(const Mat2& a) {
    if (det(a) != 0) return 2;
    for (const auto& row : a)
        for (long v : row)
            if (v != 0) return 1;
    return 0;
}

// |pi_0| of the fixed set of M, read off I - M directly in each rank case:
// |det| when invertible, the entry gcd in rank one, 1 for the identity.
inline long brute_component_order(const Mat2& a) {
    const long r = rank2(a);
    if (r == 2) return std::labs(det(a));
    if (r == 0) return 1;
    long g = 0;
    for (const auto& row : a)
        for (long v : row) g = std::gcd(g, std::labs(v));
    return g;
}

// Same-component test on the grid: x ~ y iff A((x-y)/12) = A lambda for some
// integer lambda (brute-forced over a generous box), with A = I - M.
inline bool same_component_grid(const Mat2& a, const GridPoint& x, const GridPoint& y) {
    const long rhs0 = a[0][0] * (x[0] - y[0]) + a[0][1] * (x[1] - y[1]);
    const long rhs1 = a[1][0] * (x[0] - y[0]) + a[1][1] * (x[1] - y[1]);
    for (long l0 = -13; l0 <= 13; ++l0)
        for (long l1 = -13; l1 <= 13; ++l1) {
            if (kQ * (a[0][0] * l0 + a[0][1] * l1) == rhs0 &&
                kQ * (a[1][0] * l0 + a[1][1] * l1) == rhs1)
                return true;
        }
    return false;
}

inline std::vector<std::vector<GridPoint>> grid_components(const Mat2& m) {
    const Mat2 a = i_minus(m);
    std::vector<std::vector<GridPoint>> comps;
    for (const GridPoint& p : fixed_grid_points(m)) {
        bool placed = false;
        for (auto& c : comps)
            if (same_component_grid(a, p, c.front())) {
                c.push_back(p);
                placed = true;
                break;
            }
        if (!placed) comps.push_back({p});
    }
    return comps;
}

namespace detail {

struct ComponentOrbits {
    std::vector<std::vector<GridPoint>> comps;
    std::vector<std::size_t> parent;

    std::size_t find(std::size_t i) {
        while (parent[i] != i) i = parent[i] = parent[parent[i]];
        return i;
    }
};

inline ComponentOrbits component_orbits(const Mat2& m, const std::vector<Mat2>& z) {
    ComponentOrbits co;
    co.comps = grid_components(m);
    const Mat2 a = i_minus(m);
    co.parent.resize(co.comps.size());
    for (std::size_t i = 0; i < co.comps.size(); ++i) co.parent[i] = i;
    auto comp_of = [&](const GridPoint& p) {
        for (std::size_t i = 0; i < co.comps.size(); ++i)
            if (same_component_grid(a, p, co.comps[i].front())) return i;
        return co.comps.size();
    };
    for (const Mat2& g : z)
        for (std::size_t i = 0; i < co.comps.size(); ++i) {
            const std::size_t j = comp_of(apply_grid(g, co.comps[i].front()));
            co.parent[co.find(i)] = co.find(j);
        }
    return co;
}

} // namespace detail

// Orbit count of the centraliser on the components of the fixed set.
inline long component_orbit_count(const Mat2& m, const std::vector<Mat2>& z) {
    auto co = detail::component_orbits(m, z);
    std::set<std::size_t> roots;
    for (std::size_t i = 0; i < co.comps.size(); ++i) roots.insert(co.find(i));
    return static_cast<long>(roots.size());
}

// b1 of the sector for a 1-dimensional fixed set: one circle survives per
// component orbit whose setwise stabiliser acts orientation-preservingly on
// the kernel line of I - M.
inline long circle_count(const Mat2& m, const std::vector<Mat2>& z) {
    const Mat2 a = i_minus(m);
    if (rank2(a) != 1) return -1; // only valid on 1-dimensional fixed sets
    auto co = detail::component_orbits(m, z);
    auto comp_of = [&](const GridPoint& p) {
        for (std::size_t i = 0; i < co.comps.size(); ++i)
            if (same_component_grid(a, p, co.comps[i].front())) return i;
        return co.comps.size();
    };

    // Integer kernel direction of I - M, made primitive.
    std::array<long, 2> dir{};
    if (a[0][0] != 0 || a[0][1] != 0) dir = {a[0][1], -a[0][0]};
    else dir = {a[1][1], -a[1][0]};
    const long g = std::gcd(std::labs(dir[0]), std::labs(dir[1]));
    dir = {dir[0] / g, dir[1] / g};

    long circles = 0;
    std::set<std::size_t> seen;
    for (std::size_t i = 0; i < co.comps.size(); ++i) {
        if (!seen.insert(co.find(i)).second) continue;
        bool preserved = true;
        for (const Mat2& zg : z) {
            if (comp_of(apply_grid(zg, co.comps[i].front())) != i) continue; // not a stabiliser
            const long d0 = zg[0][0] * dir[0] + zg[0][1] * dir[1];
            const long d1 = zg[1][0] * dir[0] + zg[1][1] * dir[1];
            if (d0 == dir[0] && d1 == dir[1]) continue; // orientation preserved
            preserved = false;
            break;
        }
        if (preserved) ++circles;
    }
    return circles;
}

} // namespace toy_oracle
