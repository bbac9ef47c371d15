// Reconstruction of xi anywhere in the critical strip from its values on one
// vertical line (the central claim of this project), plus the verification
// battery for the transform identities that follow from it.
#ifndef XIV_HOLOGRAPHY_HPP
#define XIV_HOLOGRAPHY_HPP

#include <span>
#include <vector>

#include "xiv/contour.hpp"
#include "xiv/parallel.hpp"
#include "xiv/report.hpp"
#include "xiv/types.hpp"
#include "xiv/xi_core.hpp"

namespace xiv {

// The rational kernel R(sigma, tau; x) with xi(rho) = int xi(line) R dx over
// the line Re t = c (t = c + ix).  Written in the tau-plane variables:
// R = (1/pi i) w / (w^2 - tau_s^2), w = x + i(1/2 - c),
// tau_s = tau + i(1/2 - sigma).
struct HolographicKernel {
    double sigma;
    double tau;
    double c;

    HolographicKernel(double sigma_, double tau_, double c_);

    cplx eval(double x) const;
    // numerator and denominator polynomials in x (degree 1 and 2)
    cplx numerator(double x) const;
    cplx denominator(double x) const;
    // the two poles in the x-plane; both lie off the real axis for strip
    // points and 1 < c < 2
    std::pair<cplx, cplx> poles() const;
};

// xi(s) = 1 - pi^{1/4}/(2 Gamma(3/4))
//         - int (dt/2pi i) (xi(t)/t) (2s(1-s) - t)/(s(1-s) - t(1-t))
XiValue xi_reconstruct(cplx s, const VerticalLineSpec& spec);

// xi(s) = 1/2 + int (dt/2pi i) (xi(t)/t)
//                [1/(1-t) - (2s(1-s) - t)/(s(1-s) - t(1-t))]
XiValue xi_reconstruct_alt(cplx s, const VerticalLineSpec& spec);

// Xi(tau) = (1/pi i) int_{-inf+ic}^{inf+ic} t Xi(t)/(t^2 - tau^2) dt for
// -3/2 < c_line < -1/2 and |Im tau| < 1/2.
XiValue Xi_reconstruct_tau(cplx tau, double c_line, double tol = 1e-9,
                           double T = 60.0);

// Parallel map of xi_reconstruct over a grid of strip points.
std::vector<XiValue> reconstruct_grid(std::span<const cplx> points,
                                      const VerticalLineSpec& spec,
                                      ExecMode mode = ExecMode::parallel);

struct TransformSuiteOptions {
    double T = 60.0;     // line truncation
    double tol = 1e-9;
    ExecMode mode = ExecMode::parallel;
};

// The transform-identity battery: the cosine transform of Xi, the Fourier
// transform of xi on the sigma = 3/2 line against theta derivatives, the
// two-line balance, damped Cauchy kernels, the Bessel transform, and the
// partial-integral (arctan kernel) identities on and off the critical line.
// Forms with defects in the source are evaluated twice: as printed
// (reported-only) and in the corrected form established by the independent
// derivation (asserted).  One failing pair never aborts the suite.
std::vector<IdentityReport> verify_transform_identities(
    const TransformSuiteOptions& opt = {});

} // namespace xiv

#endif
