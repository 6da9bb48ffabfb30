#pragma once

// Second-order forward-mode jets in two variables.

#include <Eigen/Dense>

namespace toricsol::detail {

struct Jet {
    double v = 0.0;
    Eigen::Vector2d g = Eigen::Vector2d::Zero();
    Eigen::Matrix2d h = Eigen::Matrix2d::Zero();

    static Jet constant(double c) { return Jet{c, Eigen::Vector2d::Zero(), Eigen::Matrix2d::Zero()}; }
    static Jet variable(double value, int index) {
        Jet j{value, Eigen::Vector2d::Zero(), Eigen::Matrix2d::Zero()};
        j.g[index] = 1.0;
        return j;
    }
};

inline Jet operator+(const Jet& a, const Jet& b) { return Jet{a.v + b.v, a.g + b.g, a.h + b.h}; }
inline Jet operator-(const Jet& a, const Jet& b) { return Jet{a.v - b.v, a.g - b.g, a.h - b.h}; }
inline Jet operator*(double c, const Jet& a) { return Jet{c * a.v, c * a.g, c * a.h}; }

inline Jet operator*(const Jet& a, const Jet& b) {
    return Jet{a.v * b.v, a.g * b.v + a.v * b.g,
               a.h * b.v + a.g * b.g.transpose() + b.g * a.g.transpose() + a.v * b.h};
}

/// f(a) given f, f', f'' at a.v.
inline Jet compose(const Jet& a, double f, double df, double ddf) {
    return Jet{f, df * a.g, ddf * a.g * a.g.transpose() + df * a.h};
}

inline Jet reciprocal(const Jet& a) {
    const double r = 1.0 / a.v;
    return compose(a, r, -r * r, 2.0 * r * r * r);
}

inline Jet operator/(const Jet& a, const Jet& b) { return a * reciprocal(b); }

}  // namespace toricsol::detail
