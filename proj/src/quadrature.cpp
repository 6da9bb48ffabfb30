#include "toricsol/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace toricsol {

double Triangle::area() const {
    Eigen::Vector2d u = corners[1] - corners[0], v = corners[2] - corners[0];
    return 0.5 * std::abs(u.x() * v.y() - u.y() * v.x());
}

double Triangulation::area() const {
    double s = 0.0;
    for (const auto& t : simplices) s += t.area();
    return s;
}

namespace {

std::vector<Eigen::Vector2d> cyclic_vertices(const DelzantPolytope& p) {
    if (p.dim() != 2) throw Error(ErrorCode::UnsupportedDimension, "quadrature supports dimension 2 only");
    std::vector<Eigen::Vector2d> pts;
    for (const auto& v : p.vertices()) pts.emplace_back(v.point[0], v.point[1]);
    Eigen::Vector2d c = Eigen::Vector2d::Zero();
    for (const auto& q : pts) c += q;
    c /= static_cast<double>(pts.size());
    std::sort(pts.begin(), pts.end(), [&](const Eigen::Vector2d& a, const Eigen::Vector2d& b) {
        return std::atan2(a.y() - c.y(), a.x() - c.x()) < std::atan2(b.y() - c.y(), b.x() - c.x());
    });
    return pts;
}

}  // namespace

double polygon_area(const DelzantPolytope& p) {
    auto pts = cyclic_vertices(p);
    double s = 0.0;
    for (size_t i = 0; i < pts.size(); ++i) {
        const auto& a = pts[i];
        const auto& b = pts[(i + 1) % pts.size()];
        s += a.x() * b.y() - a.y() * b.x();
    }
    return 0.5 * std::abs(s);
}

Triangulation triangulate(const DelzantPolytope& p) {
    auto pts = cyclic_vertices(p);
    Eigen::Vector2d c = Eigen::Vector2d::Zero();
    for (const auto& q : pts) c += q;
    c /= static_cast<double>(pts.size());
    Triangulation t;
    for (size_t i = 0; i < pts.size(); ++i) t.simplices.push_back(Triangle{{c, pts[i], pts[(i + 1) % pts.size()]}});
    return t;
}

void gauss_legendre(int points, std::vector<double>& nodes, std::vector<double>& weights) {
    nodes.assign(static_cast<size_t>(points), 0.0);
    weights.assign(static_cast<size_t>(points), 0.0);
    for (int i = 0; i < points; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (points + 0.5));
        double dp = 1.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= points; ++k) {
                double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = pk;
            }
            dp = points * (x * p1 - p0) / (x * x - 1.0);
            double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        // Map [-1, 1] to [0, 1].
        nodes[static_cast<size_t>(i)] = 0.5 * (1.0 - x);
        weights[static_cast<size_t>(i)] = 1.0 / ((1.0 - x * x) * dp * dp);
    }
}

QuadratureRule triangle_rule(int order) {
    if (order < 1) throw Error(ErrorCode::InvalidArgument, "quadrature order must be at least 1");
    // Duffy map (u, v) -> (u, v (1 - u)) with Jacobian (1 - u).
    const int mu = (order + 3) / 2;
    const int mv = (order + 2) / 2;
    std::vector<double> un, uw, vn, vw;
    gauss_legendre(mu, un, uw);
    gauss_legendre(mv, vn, vw);
    QuadratureRule rule;
    rule.order = order;
    for (size_t i = 0; i < un.size(); ++i) {
        for (size_t j = 0; j < vn.size(); ++j) {
            double xi = un[i];
            double eta = vn[j] * (1.0 - un[i]);
            rule.barycentric.emplace_back(1.0 - xi - eta, xi, eta);
            rule.weights.push_back(uw[i] * vw[j] * (1.0 - un[i]));
        }
    }
    return rule;
}

NodeSet quadrature_nodes(const Triangulation& t, int order) {
    const auto rule = triangle_rule(order);
    NodeSet out;
    for (const auto& tri : t.simplices) {
        const double scale = 2.0 * tri.area();
        for (size_t q = 0; q < rule.weights.size(); ++q) {
            const auto& b = rule.barycentric[q];
            Eigen::Vector2d x = b[0] * tri.corners[0] + b[1] * tri.corners[1] + b[2] * tri.corners[2];
            out.points.emplace_back(Vector(x));
            out.weights.push_back(rule.weights[q] * scale);
        }
    }
    return out;
}

double integrate(const Triangulation& t, const ScalarField& f, int order) {
    const auto nodes = quadrature_nodes(t, order);
    double s = 0.0;
    for (size_t i = 0; i < nodes.points.size(); ++i) s += nodes.weights[i] * f(nodes.points[i]);
    return s;
}

double integrate(const DelzantPolytope& p, const ScalarField& f, int order) {
    return integrate(triangulate(p), f, order);
}

Vector integrate_many(const Triangulation& t, const VectorField& f, int order) {
    const auto nodes = quadrature_nodes(t, order);
    Vector s;
    for (size_t i = 0; i < nodes.points.size(); ++i) {
        Vector v = f(nodes.points[i]);
        if (i == 0) s = Vector::Zero(v.size());
        s += nodes.weights[i] * v;
    }
    return s;
}

}  // namespace toricsol
