#include "xiv/xi_core.hpp"

#include <cmath>
#include <numbers>

#include "xiv/quadrature.hpp"
#include "xiv/special_functions.hpp"

namespace xiv {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kHalfLogPi = 0.57236494292470008707171367567653; // ln(pi)/2

// Upper integration limit for theta-weighted integrands: psi(u) <= 2 e^{-pi u}
// there, so everything past u = 14 is below 1e-17.
constexpr double kThetaCut = 14.0;

double psi_node(double u) {
    // psi at a quadrature node; u >= 1 always, 4 terms reach 1e-18
    return psi(u, 1e-16).value;
}

} // namespace

const char* to_string(XiMethod m) {
    switch (m) {
    case XiMethod::reference: return "reference";
    case XiMethod::theta_integral: return "theta-integral";
    case XiMethod::exp_series: return "exp-series";
    case XiMethod::cosine_integral: return "cosine-integral";
    case XiMethod::reconstruction: return "reconstruction";
    }
    return "?";
}

cplx xi_product_direct(cplx s) {
    require_finite(s, "xi_product_direct");
    if (s == cplx(0.0) || s == cplx(1.0))
        return 0.5;
    // (s-1) pi^{-s/2} Gamma(1+s/2) zeta(s); Gamma through its log so the
    // exponential decay at large |Im s| keeps full relative accuracy.
    cplx lg = log_gamma(1.0 + 0.5 * s);
    return (s - 1.0) * std::exp(lg - s * kHalfLogPi) * zeta(s);
}

XiValue xi_reference(cplx s) {
    require_finite(s, "xi_reference");
    cplx arg = (s.real() < 0.5) ? 1.0 - s : s;
    cplx v = xi_product_direct(arg);
    return {s, v, XiMethod::reference, 5e-13 * std::abs(v) + 1e-300};
}

XiValue Xi(cplx tau) {
    require_finite(tau, "Xi");
    XiValue v = xi_reference(cplx(0.5, 0.0) + cplx(0.0, 1.0) * tau);
    v.at = tau;
    return v;
}

double Xi_real(double tau) {
    return Xi(cplx(tau, 0.0)).value.real();
}

XiValue xi_theta_integral(cplx s, double tol) {
    require_finite(s, "xi_theta_integral");
    if (!(tol > 0.0))
        throw domain_error("xi_theta_integral: need tol > 0");

    const double panel = kPi / (2.0 * std::max(1.0, 0.5 * std::abs(s.imag())));
    KahanSum<cplx> acc;
    double err = 0.0;
    int n = 0;
    double tail = HUGE_VAL;
    while (n < 12) {
        ++n;
        const double a = kPi * n * n;
        // t = e^v; extra e^v from the measure
        auto f = [&](double v) {
            const double t = std::exp(v);
            cplx w = std::exp(0.5 * s * v) + std::exp(0.5 * (1.0 - s) * v);
            return w * (static_cast<double>(n) * n * n * n * t -
                        1.5 * n * n / kPi) *
                   std::exp(-a * t) * t;
        };
        const double V = std::log(1.0 + 60.0 / a);
        QuadOptions opt;
        opt.abs_tol = tol / (8.0 * n * n);
        QuadOutcome q = integrate_panels(f, 0.0, V, panel, opt);
        acc.add(q.value);
        err += q.est_error + std::exp(-a * (1.0 + 60.0 / a)); // panel + cut tail
        // series tail: next term is O(n^4 e^{-pi n^2} sqrt-ish envelope)
        const double n1 = n + 1.0;
        tail = 8.0 * n1 * n1 * n1 * n1 * std::exp(-kPi * n1 * n1);
        if (tail <= 0.25 * tol)
            break;
    }
    if (tail > 0.25 * tol)
        throw tolerance_error("xi_theta_integral: series cap reached");
    cplx v = 2.0 * kPi * kPi * acc.value();
    return {s, v, XiMethod::theta_integral, 2.0 * kPi * kPi * err + tail};
}

namespace {

XiValue exp_series_impl(cplx s, double tol, bool mirrored) {
    require_finite(s, "xi_exp_series");
    if (!(tol > 0.0))
        throw domain_error("xi_exp_series: need tol > 0");

    // pi^{1/4} / (2 Gamma(3/4))
    const double c0 = std::exp(0.25 * std::log(kPi)) /
                      (2.0 * std::exp(log_gamma(cplx(0.75, 0.0)).real()));
    KahanSum<cplx> acc;
    double err = 0.0;
    int n = 0;
    double tail = HUGE_VAL;
    while (n < 12) {
        ++n;
        const double a = kPi * n * n;
        const double etol = tol / (16.0 * n * n);
        cplx first_order = mirrored ? 0.5 * (s - 1.0) : 0.5 * (1.0 - s);
        cplx term = s * exp_integral_e(first_order, a, etol) +
                    (1.0 - s) * exp_integral_e(-0.5 * s, a, etol);
        acc.add(static_cast<double>(n) * n * term);
        err += 2.0 * etol * (std::abs(s) + std::abs(1.0 - s)) * n * n;
        const double n1 = n + 1.0;
        tail = (std::abs(s) + std::abs(1.0 - s)) * 4.0 * n1 * n1 *
               std::exp(-kPi * n1 * n1);
        if (tail <= 0.25 * tol)
            break;
    }
    cplx v = c0 - kPi * acc.value();
    return {s, v, XiMethod::exp_series, kPi * err + tail};
}

} // namespace

XiValue xi_exp_series(cplx s, double tol) { return exp_series_impl(s, tol, false); }

XiValue xi_exp_series_mirrored(cplx s, double tol) {
    return exp_series_impl(s, tol, true);
}

XiValue Xi_cosine_integral(double tau, double tol) {
    if (!std::isfinite(tau))
        throw domain_error("Xi_cosine_integral: non-finite tau");
    if (!(tol > 0.0))
        throw domain_error("Xi_cosine_integral: need tol > 0");

    // t = e^u: integrand e^{u/4} cos(tau u / 2) psi(e^u) on [0, ln cut]
    const double V = std::log(kThetaCut);
    const double panel = kPi / std::max(1.0, std::abs(tau));
    auto f = [&](double u) -> cplx {
        return std::exp(0.25 * u) * std::cos(0.5 * tau * u) * psi_node(std::exp(u));
    };
    QuadOptions opt;
    opt.abs_tol = tol / (2.0 + tau * tau);
    QuadOutcome q = integrate_panels(f, 0.0, V, panel, opt);
    const double pref = tau * tau + 0.25;
    cplx v = 0.5 - pref * q.value;
    return {cplx(tau, 0.0), v, XiMethod::cosine_integral,
            pref * (q.est_error + 3.0 * std::exp(-kPi * kThetaCut))};
}

namespace {

cplx j_kernel_integral(cplx rho, double tol, bool both_exponents) {
    require_finite(rho, "j_integral");
    if (!(rho.real() > 0.0 && rho.real() < 1.0))
        throw domain_error("j_integral: need rho strictly inside the strip");
    if (!(tol > 0.0))
        throw domain_error("j_integral: need tol > 0");

    // u = e^v; (1/2) u^{-(rho+1)/2} du -> (1/2) e^{v (1-rho)/2} dv, and the
    // second exponent contributes e^{v rho / 2}.
    const double panel = kPi / std::max(1.0, std::abs(rho.imag()));
    auto f = [&](double v) -> cplx {
        cplx w = std::exp(0.5 * (1.0 - rho) * v);
        if (both_exponents)
            w += std::exp(0.5 * rho * v);
        return 0.5 * w * psi_node(std::exp(v));
    };
    QuadOptions opt;
    opt.abs_tol = 0.5 * tol;
    QuadOutcome q = integrate_panels(f, 0.0, std::log(kThetaCut), panel, opt);
    return q.value;
}

} // namespace

cplx j_integral(cplx rho, double tol) { return j_kernel_integral(rho, tol, true); }

cplx j_integral_half(cplx rho, double tol) {
    return j_kernel_integral(rho, tol, false);
}

} // namespace xiv
