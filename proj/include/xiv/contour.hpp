// Truncated vertical-line contour integrals (1/2 pi i) int_{c-iT}^{c+iT} and
// the verification battery for the closed-form line-integral identities.
#ifndef XIV_CONTOUR_HPP
#define XIV_CONTOUR_HPP

#include <functional>
#include <vector>

#include "xiv/report.hpp"
#include "xiv/types.hpp"

namespace xiv {

struct VerticalLineSpec {
    double c = 1.5;    // line abscissa
    double T = 60.0;   // truncation height
    double tol = 1e-10;
    long max_nodes = 2'000'000;

    void validate() const;
};

struct LineIntegralResult {
    cplx value{};
    double est_error = 0.0;
    long nodes = 0;
    double truncation_bound = 0.0;
};

// (1/2 pi i) int over Re t = c, |Im t| <= T.  The truncation bound comes from
// sampling |f| at the endpoints against the e^{-(pi/4)|Im t|} decay envelope
// of xi-type integrands; pass `half_period` when the integrand oscillates in
// Im t (power kernels x^{-t} etc.), 0 for none.
LineIntegralResult line_integral(const VerticalLineSpec& spec,
                                 const std::function<cplx(cplx)>& integrand,
                                 double half_period = 0.0);

// Closed-form identities on the line: the xi/t constant, odd-kernel
// vanishing (Cauchy kernel at tau_odd and at an arbitrary tau, odd powers),
// the first-moment relation, theta-sum and Gamma closed forms, and the
// xi/(t(1-t)) constant on both lines Re t = c and Re t = 1-c.
// tau_odd is normally the first critical zero; oddness alone forces the
// vanishing, so any real value is admissible.
std::vector<IdentityReport> verify_line_identities(const VerticalLineSpec& spec,
                                                   double tau_odd);

} // namespace xiv

#endif
