#include "toricsol/roots.hpp"

#include "exact_polyhedron.hpp"

#include <algorithm>
#include <cmath>

namespace toricsol {

namespace {

std::vector<long long> pairings_of(const DelzantPolytope& p, const IntVector& alpha) {
    std::vector<long long> out;
    for (const auto& f : p.facets()) out.push_back(static_cast<long long>(f.normal.dot(alpha)));
    return out;
}

// Box [lo, hi] containing the rational region of roots attached to facet rho.
bool root_box(const DelzantPolytope& p, int rho, std::vector<long long>& lo, std::vector<long long>& hi) {
    detail::Polyhedron region;
    region.dim = p.dim();
    for (int r = 0; r < p.facet_count(); ++r) {
        detail::AffineForm form;
        const auto& nu = p.facets()[static_cast<size_t>(r)].normal;
        for (Eigen::Index i = 0; i < nu.size(); ++i) form.a.emplace_back(r == rho ? nu[i] : -nu[i]);
        form.b = r == rho ? -1 : 0;
        (r == rho ? region.equalities : region.inequalities).push_back(std::move(form));
    }
    if (detail::has_recession_direction(region))
        throw Error(ErrorCode::UnboundedRootRegion,
                    "root region of facet " + std::to_string(rho) + " is unbounded (normals do not positively span)");
    const auto vertices = detail::enumerate_vertices(region);
    if (vertices.empty()) return false;
    lo.assign(static_cast<size_t>(p.dim()), 0);
    hi.assign(static_cast<size_t>(p.dim()), 0);
    for (int i = 0; i < p.dim(); ++i) {
        Rational mn = vertices.front().point[static_cast<size_t>(i)], mx = mn;
        for (const auto& v : vertices) {
            mn = std::min(mn, v.point[static_cast<size_t>(i)]);
            mx = std::max(mx, v.point[static_cast<size_t>(i)]);
        }
        lo[static_cast<size_t>(i)] = static_cast<long long>(std::floor(to_double(mn))) - 1;
        hi[static_cast<size_t>(i)] = static_cast<long long>(std::ceil(to_double(mx))) + 1;
    }
    return true;
}

}  // namespace

RootSet enumerate_roots(const DelzantPolytope& p) {
    if (!p.is_algebraic())
        throw Error(ErrorCode::InvalidArgument, "Demazure roots are defined on the algebraic (normalized) polytope");
    const int n = p.dim();
    RootSet out;
    for (int rho = 0; rho < p.facet_count(); ++rho) {
        std::vector<long long> lo, hi;
        if (!root_box(p, rho, lo, hi)) continue;
        IntVector alpha(n);
        for (int i = 0; i < n; ++i) alpha[i] = static_cast<int>(lo[static_cast<size_t>(i)]);
        while (true) {
            auto pair = pairings_of(p, alpha);
            bool ok = pair[static_cast<size_t>(rho)] == 1;
            for (size_t r = 0; ok && r < pair.size(); ++r)
                if (static_cast<int>(r) != rho && pair[r] > 0) ok = false;
            if (ok) out.roots.push_back(DemazureRoot{alpha, rho, pair});
            int i = 0;
            while (i < n && alpha[i] == hi[static_cast<size_t>(i)]) {
                alpha[i] = static_cast<int>(lo[static_cast<size_t>(i)]);
                ++i;
            }
            if (i == n) break;
            ++alpha[i];
        }
    }
    std::sort(out.roots.begin(), out.roots.end(),
              [](const DemazureRoot& l, const DemazureRoot& r) { return lex_less(l.alpha, r.alpha); });
    return out;
}

bool contains_root(const std::vector<DemazureRoot>& roots, const IntVector& alpha) {
    return std::any_of(roots.begin(), roots.end(), [&](const DemazureRoot& r) { return r.alpha == alpha; });
}

RootSet split_semisimple_unipotent(RootSet r) {
    r.semisimple.clear();
    r.unipotent.clear();
    for (const auto& root : r.roots) {
        IntVector neg = -root.alpha;
        (contains_root(r.roots, neg) ? r.semisimple : r.unipotent).push_back(root);
    }
    r.split_done = true;
    return r;
}

AutomorphismDimensions automorphism_dimensions(const RootSet& r, int n) {
    if (!r.split_done) throw Error(ErrorCode::InvalidArgument, "root set has not been split");
    AutomorphismDimensions d;
    d.dim_eta = n + static_cast<int>(r.roots.size());
    d.dim_reductive = n + static_cast<int>(r.semisimple.size());
    d.dim_unipotent = static_cast<int>(r.unipotent.size());
    return d;
}

RootSet demazure_roots(const DelzantPolytope& p) { return split_semisimple_unipotent(enumerate_roots(p)); }

DemazureRoot make_root(const DelzantPolytope& p, const IntVector& alpha) {
    auto pair = pairings_of(p, alpha);
    int rho = -1;
    for (size_t r = 0; r < pair.size(); ++r) {
        if (pair[r] == 1) {
            if (rho >= 0) throw Error(ErrorCode::AmbiguousRoot, "two facets pair to 1 with this vector");
            rho = static_cast<int>(r);
        } else if (pair[r] > 0) {
            throw Error(ErrorCode::InvalidArgument, "vector pairs positively with a non-distinguished facet");
        }
    }
    if (rho < 0) throw Error(ErrorCode::InvalidArgument, "vector pairs to 1 with no facet");
    return DemazureRoot{alpha, rho, pair};
}

}  // namespace toricsol
