#include "xiv/holography.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>

#include "xiv/quadrature.hpp"
#include "xiv/special_functions.hpp"

namespace xiv {
namespace {

constexpr double kPi = std::numbers::pi;
const cplx kI{0.0, 1.0};

double gamma_real(double x) { return std::exp(log_gamma(cplx(x, 0.0)).real()); }

cplx xi_line(double sigma, double t) { return xi_reference(cplx(sigma, t)).value; }

} // namespace

HolographicKernel::HolographicKernel(double sigma_, double tau_, double c_)
    : sigma(sigma_), tau(tau_), c(c_) {
    if (!(sigma > 0.0 && sigma < 1.0))
        throw domain_error("HolographicKernel: sigma outside the strip");
    if (!(c > 1.0 && c < 2.0))
        throw domain_error("HolographicKernel: need 1 < c < 2");
}

cplx HolographicKernel::numerator(double x) const {
    return cplx(x, 0.5 - c); // w
}

cplx HolographicKernel::denominator(double x) const {
    const cplx w(x, 0.5 - c);
    const cplx tau_s(tau, 0.5 - sigma);
    return w * w - tau_s * tau_s;
}

cplx HolographicKernel::eval(double x) const {
    return numerator(x) / denominator(x) / (kPi * kI);
}

std::pair<cplx, cplx> HolographicKernel::poles() const {
    // w = +-tau_s  =>  x = +-tau_s - i(1/2 - c)
    const cplx tau_s(tau, 0.5 - sigma);
    const cplx shift(0.0, c - 0.5);
    return {tau_s + shift, -tau_s + shift};
}

namespace {

XiValue reconstruct_impl(cplx s, const VerticalLineSpec& spec, bool alt_form) {
    require_finite(s, "xi_reconstruct");
    if (!(s.real() > 0.0 && s.real() < 1.0))
        throw domain_error("xi_reconstruct: s must lie strictly inside the strip");
    if (!(spec.c > 1.0 && spec.c < 2.0))
        throw domain_error("xi_reconstruct: need 1 < c < 2");
    const double pole_dist =
        std::min(std::abs(spec.c - s.real()), std::abs(spec.c - (1.0 - s.real())));
    if (pole_dist < 0.05)
        throw domain_error("xi_reconstruct: kernel pole within 0.05 of the line");
    if (std::abs(s.imag()) > spec.T - 10.0)
        throw domain_error("xi_reconstruct: |Im s| too close to the truncation height");

    const cplx s1s = s * (1.0 - s);
    auto kernel = [&](cplx t) {
        // s(1-s) - t(1-t) = (t - s)(t + s - 1)
        return (xi_reference(t).value / t) * (2.0 * s1s - t) /
               ((t - s) * (t + s - 1.0));
    };

    VerticalLineSpec ls = spec;
    LineIntegralResult q;
    if (alt_form) {
        q = line_integral(ls, [&](cplx t) {
            return xi_reference(t).value / t / (1.0 - t) - kernel(t);
        });
        cplx v = 0.5 + q.value;
        return {s, v, XiMethod::reconstruction, q.est_error + q.truncation_bound};
    }
    q = line_integral(ls, kernel);
    const double c10 = 1.0 - std::pow(kPi, 0.25) / (2.0 * gamma_real(0.75));
    cplx v = c10 - q.value;
    return {s, v, XiMethod::reconstruction, q.est_error + q.truncation_bound};
}

} // namespace

XiValue xi_reconstruct(cplx s, const VerticalLineSpec& spec) {
    return reconstruct_impl(s, spec, false);
}

XiValue xi_reconstruct_alt(cplx s, const VerticalLineSpec& spec) {
    return reconstruct_impl(s, spec, true);
}

XiValue Xi_reconstruct_tau(cplx tau, double c_line, double tol, double T) {
    require_finite(tau, "Xi_reconstruct_tau");
    if (!(c_line > -1.5 && c_line < -0.5))
        throw domain_error("Xi_reconstruct_tau: need -3/2 < c < -1/2");
    if (std::abs(tau.imag()) >= 0.5)
        throw domain_error("Xi_reconstruct_tau: need |Im tau| < 1/2");

    // t = x + i c_line; Xi(t) = xi(1/2 - c_line + i x)
    const double line_sigma = 0.5 - c_line;
    auto f = [&](double x) {
        const cplx t(x, c_line);
        return t * xi_line(line_sigma, x) / (t * t - tau * tau);
    };
    QuadOptions opt;
    opt.abs_tol = tol * kPi;
    std::vector<double> pts{0.0, -3.0, 3.0, -10.0, 10.0, -30.0, 30.0};
    QuadOutcome q = integrate(f, -T, T, opt, pts);
    const double trunc = (std::abs(f(T)) + std::abs(f(-T))) * (4.0 / kPi) * 1.5;
    cplx v = q.value / (kPi * kI);
    return {tau, v, XiMethod::reconstruction, (q.est_error + trunc) / kPi};
}

std::vector<XiValue> reconstruct_grid(std::span<const cplx> points,
                                      const VerticalLineSpec& spec, ExecMode mode) {
    std::vector<XiValue> out(points.size());
    parallel_for(mode, static_cast<int>(points.size()),
                 [&](int i) { out[i] = xi_reconstruct(points[i], spec); });
    return out;
}

// ---------------------------------------------------------------------------
// Transform identity battery.

namespace {

struct Task {
    std::function<std::vector<IdentityReport>()> run;
};

// int_0^T f(t) dt with oscillation-aware panels
cplx half_line(const std::function<cplx(double)>& f, double T, double osc_freq,
               double tol) {
    QuadOptions opt;
    opt.abs_tol = tol;
    const double w = std::min(3.0, kPi / (2.0 * std::max(osc_freq, 0.3)));
    return integrate_panels(f, 0.0, T, w, opt).value;
}

// int_{-T}^{T} f(t) dt, same panel policy, symmetric breakpoints
cplx full_line(const std::function<cplx(double)>& f, double T, double osc_freq,
               double tol) {
    QuadOptions opt;
    opt.abs_tol = tol;
    const double w = std::min(3.0, kPi / (2.0 * std::max(osc_freq, 0.3)));
    std::vector<double> pts{0.0};
    for (double y = w; y < T; y += w) {
        pts.push_back(y);
        pts.push_back(-y);
    }
    return integrate(f, -T, T, opt, pts).value;
}

} // namespace

std::vector<IdentityReport> verify_transform_identities(
    const TransformSuiteOptions& opt) {
    const double T = opt.T;
    const double tol = opt.tol;

    std::vector<Task> tasks;

    // h(x) = int e^{-ixt} xi(3/2+it) dt, shared by (i) and (ii)
    auto h_of = [=](double x) {
        return full_line(
            [=](double t) { return std::exp(-kI * x * t) * xi_line(1.5, t); }, T,
            x, 0.25 * tol);
    };

    // (i) cosine transform of Xi equals the damped 3/2-line Fourier transform
    for (double x : {0.1, 0.5, 1.0}) {
        tasks.push_back({[=]() {
            cplx lhs = half_line(
                [=](double t) { return std::cos(x * t) * Xi_real(t); }, T, x,
                0.25 * tol);
            cplx rhs = 0.5 * std::exp(-x) * h_of(x);
            return std::vector{IdentityReport::make("cosine-transform", lhs, rhs,
                                                    {{"x", x}})};
        }});
    }

    // (ii) the same Fourier transform against theta-derivative closed forms
    for (double x : {0.1, 0.5, 1.0}) {
        tasks.push_back({[=]() {
            std::vector<IdentityReport> r;
            cplx h = h_of(x);
            const double wi = std::exp(-2.0 * x);
            const double printed =
                8.0 * kPi * std::exp(-1.5 * x) *
                (std::exp(-2.0 * x) * psi_derivative(wi, 2, 1e-14).value -
                 1.5 * psi_derivative(wi, 1, 1e-14).value);
            r.push_back(IdentityReport::make(
                "fourier-theta-printed", h, printed, {{"x", x}},
                "catalog form: mirrored exponents and psi' sign do not match the "
                "transform; corrected form asserted separately",
                false));
            const double wo = std::exp(2.0 * x);
            const double corrected =
                8.0 * kPi * std::exp(1.5 * x) *
                (std::exp(4.0 * x) * psi_derivative(wo, 2, 1e-16).value +
                 1.5 * std::exp(2.0 * x) * psi_derivative(wo, 1, 1e-16).value);
            r.push_back(IdentityReport::make(
                "fourier-theta", h, corrected, {{"x", x}},
                "8 pi e^{3x/2} [e^{4x} psi''(e^{2x}) + (3/2) e^{2x} psi'(e^{2x})]"));
            return r;
        }});
    }

    // (iii) the critical line and the 3/2-line carry the same integral
    tasks.push_back({[=]() {
        cplx lhs = full_line(
            [](double t) { return Xi(cplx(t, 0.0)).value - xi_line(1.5, t); }, T,
            0.0, 0.25 * tol);
        return std::vector{IdentityReport::make("two-line-balance", lhs, 0.0,
                                                {{"T", T}})};
    }});

    // (iv) damped cosine with Cauchy weight
    for (double b : {0.3, 0.5, 1.0}) {
        for (double x : {0.1, 0.5, 1.0}) {
            tasks.push_back({[=]() {
                std::vector<IdentityReport> r;
                cplx lhs = half_line(
                    [=](double t) {
                        return std::cos(x * t) * Xi_real(t) / (t * t + b * b);
                    },
                    T, x, 0.25 * tol);
                auto rhs_with = [=](double sign) {
                    return std::exp(-x) / (2.0 * b) *
                           full_line(
                               [=](double t) {
                                   const cplx w(1.0, t);
                                   return xi_line(1.5, t) / (w * w + sign * b * b) *
                                          (w * std::exp((1.0 - b) * x) -
                                           b * std::exp(-kI * x * t));
                               },
                               T, x, 0.25 * tol);
                };
                r.push_back(IdentityReport::make(
                    "damped-cosine-cauchy-printed", lhs, rhs_with(+1.0),
                    {{"b", b}, {"x", x}},
                    "catalog denominator (1+it)^2 + b^2; corrected sign asserted "
                    "separately",
                    false));
                r.push_back(IdentityReport::make(
                    "damped-cosine-cauchy", lhs, rhs_with(-1.0), {{"b", b}, {"x", x}},
                    "denominator (1+it)^2 - b^2"));
                return r;
            }});
        }
    }

    // (v) the b = 1/2 specialization with its theta closed form
    for (double x : {0.1, 0.5, 1.0}) {
        tasks.push_back({[=]() {
            std::vector<IdentityReport> r;
            auto lhs_with = [=](double sign) {
                return full_line(
                    [=](double t) {
                        const cplx w(1.0, t);
                        return xi_line(1.5, t) / (w * w + sign * 0.25) *
                               (w * std::exp(0.5 * x) -
                                0.5 * std::exp(-kI * x * t));
                    },
                    T, x, 0.25 * tol);
            };
            const double rhs = 0.5 * kPi * std::exp(0.5 * x) *
                               (std::exp(x) -
                                2.0 * psi(std::exp(-2.0 * x), 1e-14).value);
            r.push_back(IdentityReport::make(
                "cauchy-half-printed", lhs_with(+1.0), rhs, {{"x", x}},
                "catalog denominator (1+it)^2 + 1/4", false));
            r.push_back(IdentityReport::make(
                "cauchy-half", lhs_with(-1.0), rhs, {{"x", x}},
                "(pi/2) e^{x/2} (e^x - 2 psi(e^{-2x})), denominator "
                "(1+it)^2 - 1/4"));
            return r;
        }});
    }

    // (vi) the x -> 0 limit constant
    tasks.push_back({[=]() {
        std::vector<IdentityReport> r;
        auto lhs_with = [=](double sign) {
            return full_line(
                [=](double t) {
                    const cplx w(1.0, t);
                    return xi_line(1.5, t) * (0.5 + kI * t) / (w * w + sign * 0.25);
                },
                T, 0.0, 0.25 * tol);
        };
        const double printed_const =
            0.5 * kPi *
            (1.0 - std::sqrt(2.0) * gamma_real(0.25) * std::pow(kPi, -0.75));
        const double corrected_const =
            0.5 * kPi * (2.0 - std::pow(kPi, 0.25) / gamma_real(0.75));
        r.push_back(IdentityReport::make("cauchy-constant-printed", lhs_with(+1.0),
                                         printed_const, {},
                                         "catalog denominator and constant", false));
        cplx lhs = lhs_with(-1.0);
        r.push_back(IdentityReport::make(
            "cauchy-constant", lhs, corrected_const, {},
            "(pi/2)(2 - pi^{1/4}/Gamma(3/4)), denominator (1+it)^2 - 1/4"));
        // two-sided: the same value as the direct Cauchy-weight transform of Xi
        cplx xiw = half_line(
            [](double t) { return Xi_real(t) / (t * t + 0.25); }, T, 0.0,
            0.25 * tol);
        r.push_back(IdentityReport::make("cauchy-constant-transform", lhs, xiw, {},
                                         "against int_0^inf Xi(t)/(t^2+1/4) dt"));
        return r;
    }});

    // (vii) Bessel transform; the catalog carries a stray damping factor
    for (double a : {0.5, 1.0}) {
        tasks.push_back({[=]() {
            std::vector<IdentityReport> r;
            cplx lhs = half_line(
                [=](double t) { return bessel_j0(a * t) * Xi_real(t); }, T, a,
                0.25 * tol);
            cplx raw = full_line(
                [=](double t) {
                    return xi_line(1.5, t) * bessel_i0(a * cplx(1.0, t));
                },
                T, a, 0.25 * tol);
            r.push_back(IdentityReport::make(
                "bessel-transform-printed", lhs, 0.5 * std::exp(-a) * raw,
                {{"a", a}},
                "catalog damping e^{-x} read as e^{-a}; factor-free form asserted "
                "separately",
                false));
            r.push_back(IdentityReport::make("bessel-transform", lhs, 0.5 * raw,
                                             {{"a", a}}, "no damping factor"));
            return r;
        }});
    }

    // (viii) partial integral of Xi via the arctan kernel
    for (double Tp : {5.0, 14.2}) {
        tasks.push_back({[=]() {
            cplx lhs = half_line([](double t) { return cplx(Xi_real(t), 0.0); }, Tp,
                                 0.0, 0.25 * tol);
            cplx rhs = full_line(
                           [=](double t) {
                               return xi_line(1.5, t) *
                                      std::atan(Tp / cplx(1.0, t));
                           },
                           T, 0.0, 0.25 * tol) /
                       kPi;
            return std::vector{IdentityReport::make("xi-partial-integral", lhs, rhs,
                                                    {{"T", Tp}})};
        }});
    }

    // (ix) the off-line generalization with its boundary term g0
    for (double sg : {0.3, 0.5, 0.7}) {
        for (double Tp : {5.0, 14.2}) {
            tasks.push_back({[=]() {
                std::vector<IdentityReport> r;
                cplx lhs = half_line(
                    [=](double t) { return xi_reference(cplx(sg, t)).value; }, Tp,
                    0.0, 0.25 * tol);
                const cplx arg_shift(0.0, 0.5 - sg);
                cplx integral = full_line(
                                    [=](double t) {
                                        return xi_line(1.5, t) *
                                               std::atan((Tp + arg_shift) /
                                                         cplx(1.0, t));
                                    },
                                    T, 0.0, 0.25 * tol) /
                                kPi;
                QuadOptions g0opt;
                g0opt.abs_tol = 0.1 * tol;
                cplx g0 = (sg - 0.5) * kI *
                          integrate(
                              [=](double u) {
                                  return xi_reference(cplx(0.5 + (sg - 0.5) * u, 0.0))
                                      .value;
                              },
                              0.0, 1.0, g0opt)
                              .value;
                r.push_back(IdentityReport::make("xi-partial-integral-offline", lhs,
                                                 integral + g0,
                                                 {{"sigma", sg}, {"T", Tp}}));
                if (sg == 0.5)
                    r.push_back(IdentityReport::make(
                        "offline-reduces-online", g0, 0.0, {{"sigma", sg}},
                        "boundary term vanishes on the critical line"));
                return r;
            }});
        }
    }

    // run every (identity, parameter) pair independently; a failure in one
    // never aborts the others
    std::vector<std::vector<IdentityReport>> slots(tasks.size());
    parallel_for(opt.mode, static_cast<int>(tasks.size()), [&](int i) {
        try {
            slots[i] = tasks[i].run();
        } catch (const std::exception& e) {
            IdentityReport err;
            err.id = "error";
            err.abs_residual = HUGE_VAL;
            err.rel_residual = HUGE_VAL;
            err.note = e.what();
            err.asserted = false;
            slots[i] = {err};
        }
    });

    std::vector<IdentityReport> out;
    for (auto& s : slots)
        for (auto& r : s)
            out.push_back(std::move(r));
    std::stable_sort(out.begin(), out.end(),
                     [](const IdentityReport& a, const IdentityReport& b) {
                         return a.id < b.id;
                     });
    return out;
}

} // namespace xiv
