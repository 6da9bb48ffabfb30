#pragma once

// Exact rational polyhedra: vertex enumeration by n-subsets and a recession
// cone test. Small instances only (d <= 20 constraints).

#include "toricsol/types.hpp"

#include <optional>
#include <vector>

namespace toricsol::detail {

using RVec = std::vector<Rational>;
using RMat = std::vector<RVec>;

/// a.y + b, read as ">= 0" or "= 0" depending on where it is stored.
struct AffineForm {
    RVec a;
    Rational b;

    Rational operator()(const RVec& y) const;
};

struct Polyhedron {
    int dim = 0;
    std::vector<AffineForm> inequalities;
    std::vector<AffineForm> equalities;
};

struct ExactVertex {
    RVec point;
    std::vector<int> active;  // indices into inequalities
};

std::optional<RVec> solve_exact(RMat a, RVec rhs);
int rank_exact(RMat a);

std::vector<ExactVertex> enumerate_vertices(const Polyhedron& p);

/// True when some nonzero y satisfies every inequality direction a.y >= 0 and
/// every equality direction a.y = 0.
bool has_recession_direction(const Polyhedron& p);

Vector to_vector(const RVec& v);

}  // namespace toricsol::detail
