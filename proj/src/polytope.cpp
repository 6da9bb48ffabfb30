#include "toricsol/polytope.hpp"

#include "exact_polyhedron.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

namespace toricsol {

namespace {

constexpr double kActiveTolerance = 1e-9;

std::string describe(const IntVector& v) {
    std::ostringstream os;
    os << "(";
    for (Eigen::Index i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << ")";
    return os.str();
}

detail::Polyhedron as_polyhedron(int dim, const std::vector<Facet>& facets) {
    detail::Polyhedron p;
    p.dim = dim;
    for (const auto& f : facets) {
        detail::AffineForm form;
        for (Eigen::Index i = 0; i < f.normal.size(); ++i) form.a.emplace_back(f.normal[i]);
        form.b = f.offset;
        p.inequalities.push_back(std::move(form));
    }
    return p;
}

long long integer_determinant(std::vector<std::vector<long long>> m) {
    // Bareiss fraction-free elimination.
    const size_t n = m.size();
    long long sign = 1, prev = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            size_t p = k + 1;
            while (p < n && m[p][k] == 0) ++p;
            if (p == n) return 0;
            std::swap(m[p], m[k]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i)
            for (size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

Rational read_offset(const nlohmann::json& value) {
    if (value.is_number_integer()) return Rational(value.get<long long>());
    if (value.is_number_unsigned()) return Rational(value.get<unsigned long long>());
    if (value.is_number_float()) {
        double d = value.get<double>();
        char buf[64];
        auto res = std::to_chars(buf, buf + sizeof buf, d);
        return parse_rational(std::string_view(buf, static_cast<size_t>(res.ptr - buf)));
    }
    if (value.is_string()) return parse_rational(value.get<std::string>());
    throw Error(ErrorCode::MalformedDocument, "facet offset must be a number or a \"p/q\" string");
}

}  // namespace

DelzantPolytope::DelzantPolytope(int dim, std::vector<Facet> facets) : dim_(dim), facets_(std::move(facets)) {
    if (dim_ < 1) throw Error(ErrorCode::MalformedDocument, "dimension must be positive");
    for (const auto& f : facets_) {
        if (f.normal.size() != dim_)
            throw Error(ErrorCode::MalformedDocument, "normal " + describe(f.normal) + " has the wrong length");
        int g = 0;
        for (Eigen::Index i = 0; i < f.normal.size(); ++i) g = std::gcd(g, f.normal[i]);
        if (g == 0) throw Error(ErrorCode::MalformedDocument, "zero facet normal");
        if (g != 1)
            throw Error(ErrorCode::NonPrimitiveNormal,
                        "normal " + describe(f.normal) + " is not primitive (gcd " + std::to_string(g) + ")");
    }

    if (static_cast<int>(facets_.size()) <= dim_)
        throw Error(ErrorCode::UnboundedRegion, "a bounded polytope needs more than dim facets");

    const auto poly = as_polyhedron(dim_, facets_);
    if (detail::has_recession_direction(poly))
        throw Error(ErrorCode::UnboundedRegion, "the facet inequalities do not cut out a bounded region");

    const auto exact = detail::enumerate_vertices(poly);
    if (exact.empty()) throw Error(ErrorCode::EmptyInterior, "the facet inequalities have no common solution");

    for (const auto& v : exact) {
        if (static_cast<int>(v.active.size()) > dim_)
            throw Error(ErrorCode::DegenerateVertex,
                        "vertex with " + std::to_string(v.active.size()) + " active facets (polytope is not simple)");
        for (const auto& f : poly.inequalities) {
            Rational val = f(v.point);
            if (val > 0 && to_double(val) <= kActiveTolerance)
                throw Error(ErrorCode::DegenerateVertex, "facet passes within 1e-9 of a vertex");
        }
        vertices_.push_back(Vertex{detail::to_vector(v.point), v.point, v.active});
    }

    // Mean of the vertices lies in the relative interior.
    detail::RVec mean(static_cast<size_t>(dim_), Rational(0));
    for (const auto& v : exact)
        for (size_t i = 0; i < mean.size(); ++i) mean[i] += v.point[i];
    for (auto& m : mean) m /= static_cast<long long>(exact.size());
    for (const auto& f : poly.inequalities)
        if (f(mean) <= 0) throw Error(ErrorCode::EmptyInterior, "the polytope has empty interior");

    for (int r = 0; r < facet_count(); ++r) {
        detail::RMat diffs;
        const detail::RVec* base = nullptr;
        for (const auto& v : exact) {
            if (std::find(v.active.begin(), v.active.end(), r) == v.active.end()) continue;
            if (!base) {
                base = &v.point;
                continue;
            }
            detail::RVec d(v.point.size());
            for (size_t i = 0; i < d.size(); ++i) d[i] = v.point[i] - (*base)[i];
            diffs.push_back(std::move(d));
        }
        if (!base || detail::rank_exact(diffs) != dim_ - 1)
            throw Error(ErrorCode::RedundantFacet,
                        "facet " + std::to_string(r) + " with normal " + describe(facets_[r].normal) +
                            " does not support a face of codimension one");
    }

    normals_.resize(facet_count(), dim_);
    offsets_.resize(facet_count());
    for (int r = 0; r < facet_count(); ++r) {
        normals_.row(r) = facets_[r].normal.cast<double>().transpose();
        offsets_[r] = facets_[r].offset_value();
    }
}

Vector DelzantPolytope::facet_values(const Vector& x) const {
    if (x.size() != dim_) throw Error(ErrorCode::InvalidArgument, "point has the wrong dimension");
    return normals_ * x + offsets_;
}

bool DelzantPolytope::is_interior(const Vector& x, double margin) const {
    return (facet_values(x).array() > margin).all();
}

bool DelzantPolytope::is_algebraic() const {
    return std::all_of(facets_.begin(), facets_.end(), [](const Facet& f) { return f.offset == 1; });
}

double DelzantPolytope::vertex_spread() const {
    double spread = 0.0;
    for (int i = 0; i < dim_; ++i) {
        double lo = vertices_.front().point[i], hi = lo;
        for (const auto& v : vertices_) {
            lo = std::min(lo, v.point[i]);
            hi = std::max(hi, v.point[i]);
        }
        spread = std::max(spread, hi - lo);
    }
    return spread;
}

bool DelzantPolytope::same_facets(const DelzantPolytope& other) const {
    if (dim_ != other.dim_ || facets_.size() != other.facets_.size()) return false;
    auto key = [](const std::vector<Facet>& fs) {
        std::vector<std::pair<std::vector<int>, Rational>> out;
        for (const auto& f : fs) out.emplace_back(std::vector<int>(f.normal.begin(), f.normal.end()), f.offset);
        std::sort(out.begin(), out.end());
        return out;
    };
    return key(facets_) == key(other.facets_);
}

DelzantPolytope polytope_from_json(const nlohmann::json& doc) {
    if (!doc.is_object() || !doc.contains("dim") || !doc.contains("facets"))
        throw Error(ErrorCode::MalformedDocument, "expected an object with \"dim\" and \"facets\"");
    if (!doc["dim"].is_number_integer()) throw Error(ErrorCode::MalformedDocument, "\"dim\" must be an integer");
    const int dim = doc["dim"].get<int>();
    if (!doc["facets"].is_array()) throw Error(ErrorCode::MalformedDocument, "\"facets\" must be an array");
    std::vector<Facet> facets;
    for (const auto& f : doc["facets"]) {
        if (!f.is_object() || !f.contains("normal") || !f.contains("offset"))
            throw Error(ErrorCode::MalformedDocument, "each facet needs \"normal\" and \"offset\"");
        const auto& n = f["normal"];
        if (!n.is_array()) throw Error(ErrorCode::MalformedDocument, "\"normal\" must be an array of integers");
        Facet facet;
        facet.normal.resize(static_cast<Eigen::Index>(n.size()));
        for (size_t i = 0; i < n.size(); ++i) {
            if (!n[i].is_number_integer())
                throw Error(ErrorCode::MalformedDocument, "\"normal\" entries must be integers");
            facet.normal[static_cast<Eigen::Index>(i)] = n[i].get<int>();
        }
        facet.offset = read_offset(f["offset"]);
        facets.push_back(std::move(facet));
    }
    return DelzantPolytope(dim, std::move(facets));
}

DelzantPolytope parse_polytope(std::string_view document) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(document);
    } catch (const nlohmann::json::parse_error& e) {
        throw Error(ErrorCode::MalformedDocument, std::string("invalid JSON: ") + e.what());
    }
    return polytope_from_json(doc);
}

nlohmann::json polytope_to_json(const DelzantPolytope& p) {
    nlohmann::json facets = nlohmann::json::array();
    for (const auto& f : p.facets()) {
        nlohmann::json offset;
        if (boost::multiprecision::denominator(f.offset) == 1 && boost::multiprecision::abs(f.offset) < Rational(1LL << 53))
            offset = static_cast<long long>(boost::multiprecision::numerator(f.offset));
        else
            offset = format_rational(f.offset);
        facets.push_back({{"normal", std::vector<int>(f.normal.begin(), f.normal.end())}, {"offset", offset}});
    }
    return {{"dim", p.dim()}, {"facets", facets}};
}

const std::vector<Vertex>& compute_vertices(const DelzantPolytope& p) { return p.vertices(); }

DelzantVerdict delzant_check(const DelzantPolytope& p) {
    DelzantVerdict verdict;
    const auto& vs = p.vertices();
    for (size_t k = 0; k < vs.size(); ++k) {
        std::vector<std::vector<long long>> m;
        for (int r : vs[k].active) {
            const auto& nu = p.facets()[static_cast<size_t>(r)].normal;
            m.emplace_back(nu.begin(), nu.end());
        }
        long long det = integer_determinant(m);
        verdict.determinants.push_back(det);
        if (det != 1 && det != -1) {
            verdict.passed = false;
            verdict.failing_vertices.push_back(static_cast<int>(k));
        }
    }
    return verdict;
}

PrivilegedCenter privileged_center(const DelzantPolytope& p) {
    // Least squares for [N | -1] (x, c) = -lambda, solved exactly through the
    // normal equations; the matrix has full column rank for bounded input.
    const int n = p.dim();
    const size_t cols = static_cast<size_t>(n) + 1;
    detail::RMat ata(cols, detail::RVec(cols, Rational(0)));
    detail::RVec atb(cols, Rational(0));
    std::vector<detail::RVec> rows;
    for (const auto& f : p.facets()) {
        detail::RVec row;
        for (int i = 0; i < n; ++i) row.emplace_back(f.normal[i]);
        row.emplace_back(-1);
        for (size_t i = 0; i < cols; ++i) {
            for (size_t j = 0; j < cols; ++j) ata[i][j] += row[i] * row[j];
            atb[i] += row[i] * -f.offset;
        }
        rows.push_back(std::move(row));
    }
    auto z = detail::solve_exact(ata, atb);
    if (!z) throw Error(ErrorCode::NotFano, "privileged-center system is singular");

    double residual = 0.0;
    for (size_t r = 0; r < rows.size(); ++r) {
        Rational s = p.facets()[r].offset;
        for (size_t i = 0; i < cols; ++i) s += rows[r][i] * (*z)[i];
        residual = std::max(residual, std::abs(to_double(s)));
    }
    const Rational c = (*z)[cols - 1];
    if (residual > 1e-9)
        throw Error(ErrorCode::NotFano, "no point has equal facet values (least-squares residual " +
                                            std::to_string(residual) + ")");
    if (c <= 0) throw Error(ErrorCode::NotFano, "common facet value is not positive");

    PrivilegedCenter out;
    out.exact_point.assign(z->begin(), z->end() - 1);
    out.exact_value = c;
    out.point = detail::to_vector(out.exact_point);
    out.common_value = to_double(c);
    return out;
}

DelzantPolytope normalize_algebraic(const DelzantPolytope& p) {
    if (p.is_algebraic()) return p;
    privileged_center(p);
    // <nu, c y + p> + lambda = c (<nu, y> + 1) once the facet values agree.
    std::vector<Facet> facets = p.facets();
    for (auto& f : facets) f.offset = 1;
    return DelzantPolytope(p.dim(), std::move(facets));
}

std::vector<double> facet_values(const DelzantPolytope& p, const Vector& x) {
    Vector v = p.facet_values(x);
    return {v.begin(), v.end()};
}

}  // namespace toricsol
