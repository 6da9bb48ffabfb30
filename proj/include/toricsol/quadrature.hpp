#pragma once

#include "toricsol/polytope.hpp"

#include <array>
#include <functional>
#include <vector>

namespace toricsol {

struct Triangle {
    std::array<Eigen::Vector2d, 3> corners;
    double area() const;
};

struct Triangulation {
    std::vector<Triangle> simplices;
    double area() const;
};

/// Fan from the vertex centroid over the boundary edges. Only n = 2.
Triangulation triangulate(const DelzantPolytope& p);

/// Shoelace area of the polygon.
double polygon_area(const DelzantPolytope& p);

/// Rule on the reference triangle (0,0), (1,0), (0,1); weights sum to 1/2.
struct QuadratureRule {
    int order = 0;
    std::vector<Eigen::Vector3d> barycentric;
    std::vector<double> weights;
};

/// Collapsed Gauss-Legendre rule exact for polynomials of total degree `order`.
QuadratureRule triangle_rule(int order);

/// Gauss-Legendre nodes and weights on [0, 1].
void gauss_legendre(int points, std::vector<double>& nodes, std::vector<double>& weights);

using ScalarField = std::function<double(const Vector&)>;
using VectorField = std::function<Vector(const Vector&)>;

double integrate(const DelzantPolytope& p, const ScalarField& f, int order = 10);
double integrate(const Triangulation& t, const ScalarField& f, int order = 10);

/// Several integrands sharing one set of nodes; f returns a fixed-length vector.
Vector integrate_many(const Triangulation& t, const VectorField& f, int order);

/// Physical quadrature nodes and weights, in simplex order.
struct NodeSet {
    std::vector<Vector> points;
    std::vector<double> weights;
};
NodeSet quadrature_nodes(const Triangulation& t, int order);

}  // namespace toricsol
