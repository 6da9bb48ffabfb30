#pragma once

#include "toricsol/errors.hpp"
#include "toricsol/types.hpp"

#include <json.hpp>

#include <string_view>
#include <vector>

namespace toricsol {

/// One half-space <normal, x> + offset >= 0.
struct Facet {
    IntVector normal;
    Rational offset;

    double offset_value() const { return to_double(offset); }
};

struct Vertex {
    Vector point;
    std::vector<Rational> exact;
    std::vector<int> active;  // facet indices, ascending
};

/// Bounded simple lattice polytope {x : <nu_r, x> + lambda_r >= 0}.
/// Construction validates everything except the unimodularity condition at
/// vertices, which delzant_check reports separately.
class DelzantPolytope {
public:
    DelzantPolytope(int dim, std::vector<Facet> facets);

    int dim() const { return dim_; }
    int facet_count() const { return static_cast<int>(facets_.size()); }
    const std::vector<Facet>& facets() const { return facets_; }
    const std::vector<Vertex>& vertices() const { return vertices_; }

    /// Normal matrix, one facet per row.
    const Matrix& normals() const { return normals_; }
    const Vector& offsets() const { return offsets_; }

    Vector facet_values(const Vector& x) const;
    bool is_interior(const Vector& x, double margin = 0.0) const;
    bool is_algebraic() const;

    /// Largest coordinate spread over the vertices.
    double vertex_spread() const;

    /// Same facet set, independent of order.
    bool same_facets(const DelzantPolytope& other) const;

private:
    int dim_;
    std::vector<Facet> facets_;
    std::vector<Vertex> vertices_;
    Matrix normals_;
    Vector offsets_;
};

DelzantPolytope parse_polytope(std::string_view document);
DelzantPolytope polytope_from_json(const nlohmann::json& doc);
nlohmann::json polytope_to_json(const DelzantPolytope& p);

/// The vertex list of p, each with its active facet set.
const std::vector<Vertex>& compute_vertices(const DelzantPolytope& p);

struct DelzantVerdict {
    bool passed = true;
    std::vector<long long> determinants;  // per vertex, same order as vertices()
    std::vector<int> failing_vertices;
};

DelzantVerdict delzant_check(const DelzantPolytope& p);

struct PrivilegedCenter {
    Vector point;
    double common_value = 0.0;
    std::vector<Rational> exact_point;
    Rational exact_value;
};

/// Raises NotFano unless all facet values can be made equal and positive.
PrivilegedCenter privileged_center(const DelzantPolytope& p);

/// x -> (x - point) / common_value; all offsets become 1.
DelzantPolytope normalize_algebraic(const DelzantPolytope& p);

std::vector<double> facet_values(const DelzantPolytope& p, const Vector& x);

}  // namespace toricsol
