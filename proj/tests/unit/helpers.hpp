#pragma once

#include "toricsol/polytope.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <string>

namespace testing {

inline std::string read_file(const std::string& path) {
    std::ifstream in(path);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline toricsol::DelzantPolytope load(const std::string& name) {
    return toricsol::parse_polytope(read_file(std::string(TORICSOL_DATA_DIR) + "/" + name + ".json"));
}

inline toricsol::Vector vec2(double a, double b) {
    toricsol::Vector v(2);
    v << a, b;
    return v;
}

inline toricsol::IntVector ivec2(int a, int b) {
    toricsol::IntVector v(2);
    v << a, b;
    return v;
}

/// Deterministic pseudo-random interior points: facet values >= margin.
inline std::vector<toricsol::Vector> scattered_points(const toricsol::DelzantPolytope& p, int count, double margin,
                                                      unsigned seed = 7) {
    std::vector<toricsol::Vector> out;
    unsigned state = seed;
    auto next = [&state] {
        state = state * 1664525u + 1013904223u;
        return (state >> 8) / double(1u << 24);
    };
    toricsol::Vector lo = p.vertices().front().point, hi = lo;
    for (const auto& v : p.vertices()) {
        lo = lo.cwiseMin(v.point);
        hi = hi.cwiseMax(v.point);
    }
    while (static_cast<int>(out.size()) < count) {
        toricsol::Vector x(p.dim());
        for (int i = 0; i < p.dim(); ++i) x[i] = lo[i] + (hi[i] - lo[i]) * next();
        if ((p.facet_values(x).array() >= margin).all()) out.push_back(x);
    }
    return out;
}

// Vertices in counter-clockwise order.
inline std::vector<Eigen::Vector2d> ccw(const toricsol::DelzantPolytope& p) {
    std::vector<Eigen::Vector2d> v;
    Eigen::Vector2d c = Eigen::Vector2d::Zero();
    for (const auto& x : p.vertices()) {
        v.emplace_back(x.point[0], x.point[1]);
        c += v.back();
    }
    c /= static_cast<double>(v.size());
    std::sort(v.begin(), v.end(), [&](const Eigen::Vector2d& a, const Eigen::Vector2d& b) {
        return std::atan2(a.y() - c.y(), a.x() - c.x()) < std::atan2(b.y() - c.y(), b.x() - c.x());
    });
    return v;
}

struct Moments {
    double area = 0, mx = 0, my = 0, mxx = 0, mxy = 0, myy = 0;
};

// Green's theorem closed forms over the boundary edges.
inline Moments polygon_moments(const toricsol::DelzantPolytope& p) {
    const auto v = ccw(p);
    Moments m;
    for (size_t i = 0; i < v.size(); ++i) {
        const auto& a = v[i];
        const auto& b = v[(i + 1) % v.size()];
        const double cross = a.x() * b.y() - b.x() * a.y();
        m.area += cross / 2;
        m.mx += (a.x() + b.x()) * cross / 6;
        m.my += (a.y() + b.y()) * cross / 6;
        m.mxx += (a.x() * a.x() + a.x() * b.x() + b.x() * b.x()) * cross / 12;
        m.myy += (a.y() * a.y() + a.y() * b.y() + b.y() * b.y()) * cross / 12;
        m.mxy += (a.x() * b.y() + 2 * a.x() * a.y() + 2 * b.x() * b.y() + b.x() * a.y()) * cross / 24;
    }
    return m;
}

}  // namespace testing
