#pragma once

#include "toricsol/polytope.hpp"

#include <vector>

namespace toricsol {

struct DemazureRoot {
    IntVector alpha;
    int distinguished_facet = -1;
    std::vector<long long> pairings;  // <alpha, b_rho> for every facet
};

struct RootSet {
    std::vector<DemazureRoot> roots;  // lexicographic in alpha
    std::vector<DemazureRoot> semisimple;
    std::vector<DemazureRoot> unipotent;
    bool split_done = false;
};

struct AutomorphismDimensions {
    int dim_eta = 0;
    int dim_reductive = 0;
    int dim_unipotent = 0;
};

/// Requires an algebraic polytope (all offsets 1).
RootSet enumerate_roots(const DelzantPolytope& p);
RootSet split_semisimple_unipotent(RootSet r);
AutomorphismDimensions automorphism_dimensions(const RootSet& r, int n);

/// enumerate_roots followed by the split.
RootSet demazure_roots(const DelzantPolytope& p);

/// Root record for a given alpha, or an error if alpha is not a root of p.
DemazureRoot make_root(const DelzantPolytope& p, const IntVector& alpha);

bool contains_root(const std::vector<DemazureRoot>& roots, const IntVector& alpha);

}  // namespace toricsol
