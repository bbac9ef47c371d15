// Adaptive Gauss-Kronrod (G7,K15) quadrature for complex-valued integrands on
// real intervals. Panels refine by bisection in deterministic order, so a
// given integrand always produces the same node set and the same value.
#ifndef XIV_QUADRATURE_HPP
#define XIV_QUADRATURE_HPP

#include <functional>
#include <span>
#include <vector>

#include "xiv/types.hpp"

namespace xiv {

struct QuadOptions {
    double abs_tol = 1e-10;
    long max_nodes = 2'000'000;
    int max_depth = 48;
};

struct QuadOutcome {
    cplx value{};
    double est_error = 0.0; // accumulated |K15 - G7| over accepted panels
    long nodes = 0;
};

using Integrand = std::function<cplx(double)>;

// Integrate f over [a, b]. `breakpoints` (optional, strictly increasing,
// inside [a, b]) seed the initial panel list; oscillatory integrands pass
// half-period panel boundaries here.
QuadOutcome integrate(const Integrand& f, double a, double b,
                      const QuadOptions& opt = {},
                      std::span<const double> breakpoints = {});

// Convenience: uniform initial panels of width <= max_panel_width.
QuadOutcome integrate_panels(const Integrand& f, double a, double b,
                             double max_panel_width, const QuadOptions& opt = {});

} // namespace xiv

#endif
