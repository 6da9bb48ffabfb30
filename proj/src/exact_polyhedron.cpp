#include "exact_polyhedron.hpp"

#include <algorithm>
#include <functional>

namespace toricsol::detail {

Rational AffineForm::operator()(const RVec& y) const {
    Rational s = b;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * y[i];
    return s;
}

namespace {

// Row reduction in place; returns pivot columns.
std::vector<size_t> reduce(RMat& m, size_t cols) {
    std::vector<size_t> pivots;
    size_t row = 0;
    for (size_t c = 0; c < cols && row < m.size(); ++c) {
        size_t p = row;
        while (p < m.size() && m[p][c] == 0) ++p;
        if (p == m.size()) continue;
        std::swap(m[p], m[row]);
        Rational inv = 1 / m[row][c];
        for (auto& e : m[row]) e *= inv;
        for (size_t r = 0; r < m.size(); ++r) {
            if (r == row || m[r][c] == 0) continue;
            Rational f = m[r][c];
            for (size_t k = 0; k < m[r].size(); ++k) m[r][k] -= f * m[row][k];
        }
        pivots.push_back(c);
        ++row;
    }
    return pivots;
}

void for_each_subset(size_t n, size_t k, const std::function<void(const std::vector<size_t>&)>& fn) {
    if (k > n) return;
    std::vector<size_t> idx(k);
    for (size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        fn(idx);
        size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
        if (i == 0) return;
        ++idx[i - 1];
        for (size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

// Null space basis of the rows of a.
std::vector<RVec> null_space(RMat a, size_t cols) {
    auto pivots = reduce(a, cols);
    std::vector<RVec> basis;
    for (size_t free = 0; free < cols; ++free) {
        if (std::find(pivots.begin(), pivots.end(), free) != pivots.end()) continue;
        RVec v(cols, Rational(0));
        v[free] = 1;
        for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a[r][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace

std::optional<RVec> solve_exact(RMat a, RVec rhs) {
    const size_t n = rhs.size();
    for (size_t i = 0; i < n; ++i) a[i].push_back(rhs[i]);
    auto pivots = reduce(a, n);
    if (pivots.size() < n) return std::nullopt;
    RVec x(n);
    for (size_t i = 0; i < n; ++i) x[i] = a[i][n];
    return x;
}

int rank_exact(RMat a) {
    if (a.empty()) return 0;
    return static_cast<int>(reduce(a, a.front().size()).size());
}

std::vector<ExactVertex> enumerate_vertices(const Polyhedron& p) {
    const size_t n = static_cast<size_t>(p.dim);
    const size_t neq = p.equalities.size();
    std::vector<ExactVertex> out;
    if (neq > n) return out;
    for_each_subset(p.inequalities.size(), n - neq, [&](const std::vector<size_t>& subset) {
        RMat a;
        RVec rhs;
        for (const auto& e : p.equalities) {
            a.push_back(e.a);
            rhs.push_back(-e.b);
        }
        for (size_t i : subset) {
            a.push_back(p.inequalities[i].a);
            rhs.push_back(-p.inequalities[i].b);
        }
        auto x = solve_exact(a, rhs);
        if (!x) return;
        ExactVertex v{*x, {}};
        for (size_t r = 0; r < p.inequalities.size(); ++r) {
            Rational val = p.inequalities[r](*x);
            if (val < 0) return;
            if (val == 0) v.active.push_back(static_cast<int>(r));
        }
        for (const auto& seen : out)
            if (seen.point == v.point) return;
        out.push_back(std::move(v));
    });
    std::sort(out.begin(), out.end(), [](const ExactVertex& l, const ExactVertex& r) { return l.point < r.point; });
    return out;
}

bool has_recession_direction(const Polyhedron& p) {
    const size_t n = static_cast<size_t>(p.dim);
    RMat all;
    for (const auto& e : p.equalities) all.push_back(e.a);
    for (const auto& e : p.inequalities) all.push_back(e.a);
    if (static_cast<size_t>(rank_exact(all)) < n) return true;

    // Pointed cone: nonzero iff an extreme ray exists, and each extreme ray is
    // cut out by n-1 independent tight constraints containing the equalities.
    const size_t neq = p.equalities.size();
    if (neq > n - 1) return false;
    bool found = false;
    for_each_subset(p.inequalities.size(), n - 1 - neq, [&](const std::vector<size_t>& subset) {
        if (found) return;
        RMat a;
        for (const auto& e : p.equalities) a.push_back(e.a);
        for (size_t i : subset) a.push_back(p.inequalities[i].a);
        auto basis = a.empty() ? null_space(RMat{RVec(n, Rational(0))}, n) : null_space(a, n);
        if (basis.size() != 1) return;
        for (int sign : {1, -1}) {
            bool ok = true;
            for (const auto& e : p.inequalities) {
                Rational s = 0;
                for (size_t k = 0; k < n; ++k) s += e.a[k] * basis[0][k];
                if (sign * s < 0) {
                    ok = false;
                    break;
                }
            }
            if (ok) found = true;
        }
    });
    return found;
}

Vector to_vector(const RVec& v) {
    Vector out(static_cast<Eigen::Index>(v.size()));
    for (size_t i = 0; i < v.size(); ++i) out[static_cast<Eigen::Index>(i)] = to_double(v[i]);
    return out;
}

}  // namespace toricsol::detail
