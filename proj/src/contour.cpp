#include "xiv/contour.hpp"

#include <cmath>
#include <numbers>

#include "xiv/quadrature.hpp"
#include "xiv/special_functions.hpp"
#include "xiv/xi_core.hpp"

namespace xiv {
namespace {

constexpr double kPi = std::numbers::pi;

double gamma_real(double x) { return std::exp(log_gamma(cplx(x, 0.0)).real()); }

} // namespace

void VerticalLineSpec::validate() const {
    if (!std::isfinite(c))
        throw domain_error("VerticalLineSpec: non-finite abscissa");
    if (!(T >= 30.0))
        throw domain_error("VerticalLineSpec: truncation height must be >= 30");
    if (!(tol > 0.0) || max_nodes <= 0)
        throw domain_error("VerticalLineSpec: bad tolerance or node budget");
}

LineIntegralResult line_integral(const VerticalLineSpec& spec,
                                 const std::function<cplx(cplx)>& integrand,
                                 double half_period) {
    spec.validate();
    auto g = [&](double y) { return integrand(cplx(spec.c, y)); };

    std::vector<double> pts{0.0};
    for (double y : {3.0, 10.0, 30.0, 0.5 * spec.T})
        if (y < spec.T) {
            pts.push_back(y);
            pts.push_back(-y);
        }
    if (half_period > 0.0) {
        for (double y = half_period; y < spec.T; y += half_period) {
            pts.push_back(y);
            pts.push_back(-y);
        }
    }

    QuadOptions opt;
    opt.abs_tol = spec.tol * 2.0 * kPi; // tolerance applies after the 1/2pi
    opt.max_nodes = spec.max_nodes;
    QuadOutcome q = integrate(g, -spec.T, spec.T, opt, pts);

    // Tail beyond |Im t| = T from the measured endpoint magnitude against the
    // e^{-(pi/4)|Im t|} decay envelope, with a 1.5x margin for the polynomial
    // factors.
    const double edge = std::abs(g(spec.T)) + std::abs(g(-spec.T));
    const double trunc = edge * (4.0 / kPi) * 1.5 / (2.0 * kPi);

    return {q.value / (2.0 * kPi), q.est_error / (2.0 * kPi), q.nodes, trunc};
}

std::vector<IdentityReport> verify_line_identities(const VerticalLineSpec& spec,
                                                   double tau_odd) {
    spec.validate();
    std::vector<IdentityReport> out;
    auto xi_at = [](cplx t) { return xi_reference(t).value; };

    // int xi(t)/t = 1/2 - Gamma(5/4) / (sqrt2 pi^{3/4})
    {
        cplx lhs = line_integral(spec, [&](cplx t) { return xi_at(t) / t; }).value;
        cplx rhs = 0.5 - gamma_real(1.25) / (std::sqrt(2.0) * std::pow(kPi, 0.75));
        out.push_back(IdentityReport::make("xi-over-t", lhs, rhs, {{"c", spec.c}}));
    }
    // odd Cauchy kernel: int xi(t) (1-2t) / (4 tau^2 + (1-2t)^2) = 0
    for (double tau : {tau_odd, 10.0}) {
        cplx lhs = line_integral(spec, [&](cplx t) {
                       cplx u = 1.0 - 2.0 * t;
                       return xi_at(t) * u / (4.0 * tau * tau + u * u);
                   }).value;
        out.push_back(IdentityReport::make(
            tau == tau_odd ? "odd-cauchy-kernel" : "odd-cauchy-kernel-arb", lhs,
            0.0, {{"tau", tau}, {"c", spec.c}}));
    }
    // odd powers: int xi(t) (2t-1)^{2n+1} = 0
    for (int n : {0, 1}) {
        cplx lhs = line_integral(spec, [&](cplx t) {
                       cplx u = 2.0 * t - 1.0;
                       cplx p = u;
                       for (int k = 0; k < n; ++k)
                           p *= u * u;
                       return xi_at(t) * p;
                   }).value;
        out.push_back(IdentityReport::make(n == 0 ? "odd-power-1" : "odd-power-3",
                                           lhs, 0.0, {{"power", 2.0 * n + 1.0}}));
    }
    // first moment: int t xi(t) = (1/2) int xi(t), both equal the theta-sum
    // value and its Gamma closed form
    {
        cplx m1 = line_integral(spec, [&](cplx t) { return t * xi_at(t); }).value;
        cplx m0 = line_integral(spec, [&](cplx t) { return xi_at(t); }).value;
        out.push_back(IdentityReport::make("first-moment", m1, 0.5 * m0,
                                           {{"c", spec.c}}));

        KahanSum<double> s4, s2;
        for (int n = 1; n <= 12; ++n) {
            const double e = std::exp(-kPi * n * n);
            s4.add(n * n * n * n * e);
            s2.add(n * n * e);
        }
        // sums over all integers = twice the one-sided sums
        const double theta_val =
            kPi * kPi * 2.0 * s4.value() - 1.5 * kPi * 2.0 * s2.value();
        out.push_back(
            IdentityReport::make("moment-theta-sum", m1, theta_val, {{"c", spec.c}}));

        const double g14 = gamma_real(0.25);
        const double closed = gamma_real(1.25) /
                              (128.0 * std::sqrt(2.0) * std::pow(kPi, 4.75)) *
                              (std::pow(g14, 8.0) - 96.0 * std::pow(kPi, 4.0));
        out.push_back(IdentityReport::make("moment-gamma-form", theta_val, closed));
    }
    // int xi(t)/(t(1-t)) on Re t = c and on the mirror line Re t = 1-c
    {
        auto f = [&](cplx t) { return xi_at(t) / (t * (1.0 - t)); };
        cplx lhs = line_integral(spec, f).value;
        cplx rhs = 0.5 * (1.0 - std::pow(kPi, 0.25) / gamma_real(0.75));
        out.push_back(IdentityReport::make("xi-over-t-1mt", lhs, rhs, {{"c", spec.c}}));

        VerticalLineSpec mirror = spec;
        mirror.c = 1.0 - spec.c;
        cplx lhs2 = line_integral(mirror, f).value;
        out.push_back(IdentityReport::make("xi-over-t-1mt-mirror", lhs2, lhs,
                                           {{"c", mirror.c}}));
    }
    return out;
}

} // namespace xiv
