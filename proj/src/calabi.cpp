#include "toricsol/calabi.hpp"

#include "jet.hpp"

#include <charconv>
#include <cmath>

namespace toricsol {

void CalabiParameters::validate() const {
    if (!(alpha1 > 0.0)) throw Error(ErrorCode::InvalidArgument, "alpha1 must be positive");
    if (!(beta1 >= 0.0)) throw Error(ErrorCode::InvalidArgument, "beta1 must be non-negative");
    if (!(alpha2 > alpha1) || !(beta2 > beta1)) throw Error(ErrorCode::InvalidArgument, "empty parameter rectangle");
    if (!(c_alpha1 > 0.0 && c_alpha2 < 0.0 && c_beta1 < 0.0 && c_beta2 > 0.0))
        throw Error(ErrorCode::InvalidArgument, "normal constants must have signs (+, -, -, +)");
}

double CalabiParameters::m() const { return (2.0 / c_beta1 - 2.0 / c_beta2) / (beta2 - beta1); }

double CalabiParameters::scal_mean() const {
    return 4.0 / (alpha1 + alpha2) *
           ((1.0 / c_alpha1 - 1.0 / c_alpha2) / (alpha2 - alpha1) - (1.0 / c_beta1 - 1.0 / c_beta2) / (beta2 - beta1));
}

namespace {

Rational exact_from_double(double d) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, d);
    return parse_rational(std::string_view(buf, static_cast<size_t>(res.ptr - buf)));
}

int integral(double v) {
    const double r = std::round(v);
    if (std::abs(v - r) > 1e-9) throw Error(ErrorCode::InvalidArgument, "Calabi trapezoid normals are not integral");
    return static_cast<int>(r);
}

struct Coefficients {
    double k1, k2, c1, c2;
};

Coefficients coefficients(const CalabiParameters& p, double a, double scal) {
    if (a == 0.0) throw Error(ErrorCode::InvalidArgument, "a1 = 0 gives no soliton profile of this form");
    const double m = p.m();
    Coefficients c{};
    c.c2 = -scal / (4.0 * a);
    c.c1 = (-m - 2.0 * c.c2) / (2.0 * a);
    c.k2 = (c.c1 + 2.0 * c.c2 * p.alpha1 - 2.0 / p.c_alpha1) * std::exp(2.0 * a * p.alpha1) / (2.0 * a);
    c.k1 = -c.k2 * std::exp(-2.0 * a * p.alpha1) - c.c1 * p.alpha1 - c.c2 * p.alpha1 * p.alpha1;
    return c;
}

}  // namespace

DelzantPolytope calabi_trapezoid(const CalabiParameters& p) {
    p.validate();
    auto facet = [](double n1, double n2, double offset) {
        Facet f;
        f.normal = IntVector(2);
        f.normal << integral(n1), integral(n2);
        f.offset = exact_from_double(offset);
        return f;
    };
    std::vector<Facet> facets{
        facet(p.c_alpha1 * p.alpha1, 0.0, -p.c_alpha1 * p.alpha1 * p.alpha1),
        facet(p.c_alpha2 * p.alpha2, 0.0, -p.c_alpha2 * p.alpha2 * p.alpha2),
        facet(p.c_beta1 * p.beta1, -p.c_beta1, 0.0),
        facet(p.c_beta2 * p.beta2, -p.c_beta2, 0.0),
    };
    return DelzantPolytope(2, std::move(facets));
}

CalabiSoliton::CalabiSoliton(CalabiParameters params, double a1)
    : params_(params), a1_(a1), m_(params.m()), scal_mean_(params.scal_mean()) {
    params_.validate();
    const auto c = coefficients(params_, a1_, scal_mean_);
    k1_ = c.k1;
    k2_ = c.k2;
    c1_ = c.c1;
    c2_ = c.c2;
}

CalabiSoliton CalabiSoliton::solve(const CalabiParameters& params) { return CalabiSoliton(params, solve_a1(params)); }

ProfileValue CalabiSoliton::profile_A(double x) const {
    if (x < params_.alpha1 || x > params_.alpha2)
        throw Error(ErrorCode::OutOfDomain, "A evaluated outside [alpha1, alpha2]");
    const double e = std::exp(-2.0 * a1_ * x);
    return {k1_ + k2_ * e + c1_ * x + c2_ * x * x, -2.0 * a1_ * k2_ * e + c1_ + 2.0 * c2_ * x,
            4.0 * a1_ * a1_ * k2_ * e + 2.0 * c2_};
}

ProfileValue CalabiSoliton::profile_B(double y) const {
    if (y < params_.beta1 || y > params_.beta2) throw Error(ErrorCode::OutOfDomain, "B evaluated outside [beta1, beta2]");
    const double b1 = params_.beta1, b2 = params_.beta2;
    return {0.5 * m_ * (y - b1) * (y - b2), 0.5 * m_ * (2.0 * y - b1 - b2), m_};
}

double CalabiSoliton::ode_residual(double x, double scal_mean) const {
    const auto a = profile_A(x);
    return -a.d2 - 2.0 * a1_ * a.d1 - x * scal_mean - m_;
}

double CalabiSoliton::b_residual(double y) const { return profile_B(y).d2 - m_; }

bool CalabiSoliton::in_open_trapezoid(const Eigen::Vector2d& mu) const {
    if (!(mu[0] > params_.alpha1 && mu[0] < params_.alpha2)) return false;
    const double y = mu[1] / mu[0];
    return y > params_.beta1 && y < params_.beta2;
}

HMatrixJet CalabiSoliton::h_matrix(const Eigen::Vector2d& mu) const {
    if (!in_open_trapezoid(mu)) throw Error(ErrorCode::BoundaryEvaluation, "Calabi metric evaluated off the open trapezoid");
    using detail::Jet;
    const Jet x = Jet::variable(mu[0], 0);
    const Jet z = Jet::variable(mu[1], 1);
    const Jet y = z / x;
    const auto pa = profile_A(mu[0]);
    const auto pb = profile_B(y.v);
    const Jet a = detail::compose(x, pa.value, pa.d1, pa.d2);
    const Jet b = detail::compose(y, pb.value, pb.d1, pb.d2);
    const Jet h11 = a / x;
    const Jet h12 = y * h11;
    const Jet h22 = x * b + y * y * h11;

    HMatrixJet out;
    out.H.resize(2, 2);
    out.H << h11.v, h12.v, h12.v, h22.v;
    for (int k = 0; k < 2; ++k) {
        Matrix d(2, 2);
        d << h11.g[k], h12.g[k], h12.g[k], h22.g[k];
        out.dH.push_back(d);
    }
    for (int k = 0; k < 2; ++k) {
        for (int l = 0; l < 2; ++l) {
            Matrix d(2, 2);
            d << h11.h(k, l), h12.h(k, l), h12.h(k, l), h22.h(k, l);
            out.ddH.push_back(d);
        }
    }
    return out;
}

Matrix CalabiSoliton::g_matrix(const Eigen::Vector2d& mu) const {
    if (!in_open_trapezoid(mu)) throw Error(ErrorCode::BoundaryEvaluation, "Calabi metric evaluated off the open trapezoid");
    const double x = mu[0], z = mu[1];
    const double a = profile_A(x).value;
    const double b = profile_B(z / x).value;
    Matrix g(2, 2);
    g << x / a + z * z / (x * x * x * b), -z / (x * x * b), -z / (x * x * b), 1.0 / (x * b);
    return g;
}

double terminal_defect(const CalabiParameters& params, double a1) {
    const auto c = coefficients(params, a1, params.scal_mean());
    const double x = params.alpha2;
    const double value = c.k1 + c.k2 * std::exp(-2.0 * a1 * x) + c.c1 * x + c.c2 * x * x;
    return a1 * a1 * a1 * value;
}

double solve_a1(const CalabiParameters& params, double lo, double hi) {
    params.validate();
    if (lo > hi) std::swap(lo, hi);
    if (lo <= 0.0 && hi >= 0.0) throw Error(ErrorCode::InvalidArgument, "bracket must exclude the trivial root a1 = 0");
    double flo = terminal_defect(params, lo), fhi = terminal_defect(params, hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if ((flo > 0.0) == (fhi > 0.0))
        throw Error(ErrorCode::NoSignChange, "no sign change of the a1 equation on [" + std::to_string(lo) + ", " +
                                                 std::to_string(hi) + "]");
    while (hi - lo > 1e-8) {
        const double mid = 0.5 * (lo + hi);
        const double fm = terminal_defect(params, mid);
        if ((fm > 0.0) == (flo > 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    double a = 0.5 * (lo + hi);
    for (int it = 0; it < 20; ++it) {
        const double h = 1e-7;
        const double df = (terminal_defect(params, a + h) - terminal_defect(params, a - h)) / (2.0 * h);
        const double step = terminal_defect(params, a) / df;
        a -= step;
        if (std::abs(step) < 1e-16) break;
    }
    return a;
}

Eigen::Vector2d to_algebraic_coordinates(const Eigen::Vector2d& mu, const Eigen::Vector2d& center) {
    return mu - center;
}

CalabiPotential::CalabiPotential(CalabiSoliton soliton, Eigen::Vector2d center)
    : soliton_(std::move(soliton)), center_(std::move(center)) {}

Eigen::Vector2d CalabiPotential::to_mu(const Vector& x) const {
    return Eigen::Vector2d(x[0], x[1]) + center_;
}

bool CalabiPotential::contains(const Vector& x) const { return soliton_.in_open_trapezoid(to_mu(x)); }

Matrix CalabiPotential::hessian(const Vector& x) const { return soliton_.h_matrix(to_mu(x)).H.inverse(); }

Matrix CalabiPotential::inverse_hessian(const Vector& x) const { return soliton_.h_matrix(to_mu(x)).H; }

MetricStack CalabiPotential::evaluate(const Vector& x) const {
    auto jet = soliton_.h_matrix(to_mu(x));
    MetricStack s;
    invert_stack(jet.H, jet.dH, jet.ddH, s.G, s.dG, s.ddG);
    s.H = std::move(jet.H);
    s.dH = std::move(jet.dH);
    s.ddH = std::move(jet.ddH);
    s.gradient = gradient_by_line_integral([this](const Vector& p) { return hessian(p); }, x, Vector::Zero(2),
                                           [this](const Vector& p) { return contains(p); });
    return s;
}

PotentialPtr calabi_potential(const DelzantPolytope& p, const CalabiParameters& params) {
    const DelzantPolytope tau = calabi_trapezoid(params);
    const auto center = privileged_center(tau);
    if (center.exact_value != 1)
        throw Error(ErrorCode::InvalidArgument, "the Calabi trapezoid must have common facet value 1");
    if (!normalize_algebraic(p).same_facets(normalize_algebraic(tau)))
        throw Error(ErrorCode::InvalidArgument,
                    "the Calabi potential is available only for the blow-up trapezoid");
    return std::make_shared<CalabiPotential>(CalabiSoliton::solve(params), Eigen::Vector2d(center.point[0], center.point[1]));
}

}  // namespace toricsol
