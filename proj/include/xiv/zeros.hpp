// Critical-line zero location, the integral zero criterion and its
// one-exponential truncation, the Stirling-phase asymptotic zero formula,
// and the off-line strip scans.
#ifndef XIV_ZEROS_HPP
#define XIV_ZEROS_HPP

#include <vector>

#include "xiv/parallel.hpp"
#include "xiv/report.hpp"
#include "xiv/types.hpp"

namespace xiv {

struct GridSpec {
    double lo = 0.0;
    double hi = 1.0;
    int n = 2;

    double at(int i) const { return lo + (hi - lo) * i / (n - 1.0); }
    void validate() const;
};

struct ZeroSearchOptions {
    double scan_step = 0.05;
    double tol = 1e-12;          // quadrature tolerance for the criterion residuals
    ExecMode mode = ExecMode::parallel;
    bool fill_diagnostics = true; // criterion residuals + asymptotic estimates
};

struct ZeroSearchOutcome {
    std::vector<ZeroRecord> records;
    bool rescan_consistent = true; // sign-change count stable under step/2
    std::string warning;
};

// Scan Xi on a step grid from just above 0, bracket sign changes, refine each
// bracket by bisection to width <= 1e-10, and return the first `count` zeros
// ordered by tau (count <= 500).
ZeroSearchOutcome find_critical_zeros(int count, const ZeroSearchOptions& opt = {});

// Number of sign changes of Xi on [lo, hi] at the given scan step.
int count_sign_changes(double lo, double hi, double step);

// |Re int_0^1 t^{rho-2} psi(1/t^2) dt - 1/(4 |rho|^2)|; zero exactly at the
// critical-line zeros.
double criterion_residual(cplx rho, double tol = 1e-12);

// Same with psi truncated to its first exponential: the integral becomes
// (1/2) E_{(rho+1)/2}(pi); `terms` > 1 adds further theta terms
// ((1/2) E_{(rho+1)/2}(pi n^2) each).
double criterion_residual_one_term(cplx rho, int terms = 1);

// Phase condition Re[e^{-i tau ln sqrt(pi)} Gamma(1/2 + i tau/2)] = 0, i.e.
// Phi(tau) = Im log Gamma(1/2 + i tau/2) - (tau/2) ln pi = (k + 1/2) pi.
double zero_phase(double tau);
double zero_phase_derivative(double tau);

struct PhaseCalibration {
    int k1 = 0; // branch index assigned to the first zero
};

// Choose k1 so the n = 1 phase solution lands nearest the located tau1.
PhaseCalibration calibrate_phase(double tau1);

// Solve Phi(tau) = (k1 + n - 1/2) pi by Stirling-seeded Newton iteration.
double asymptotic_zero(int n, const PhaseCalibration& cal);

// g(rho) = ((rho+1/2)/|rho+1/2|^2) 1F1(rho+1/2; rho+3/2; -pi) - 1/(4|rho|^2),
// the term dropped when passing to the pure phase condition.
cplx g_correction(cplx rho);

// Off-line scan of the two real equations alpha Re J - beta Im J = 1/2،
// beta Re J + alpha Im J = 0, plus the closed-form residuals with both
// denominator variants.
std::vector<StripScanCell> rh_scan(const GridSpec& sigma_grid,
                                   const GridSpec& tau_grid, double tol = 1e-11,
                                   ExecMode mode = ExecMode::parallel);

// Manufactured-solution adjudication of the closed-form denominator: solves
// the two equations exactly per cell and measures both variants against the
// solution.  Returns a findings line naming the consistent form.
std::string adjudicate_denominator(const GridSpec& sigma_grid,
                                   const GridSpec& tau_grid);

// The one-exponential conjecture expression, evaluated as printed:
// alpha/(alpha^2 - beta^2) - Re[E_{1-s/2-it/2}(pi) + E_{(s+it+1)/2}(pi)].
std::vector<ConjectureCell> one_term_conjecture_scan(
    const GridSpec& s_grid, const GridSpec& t_grid,
    ExecMode mode = ExecMode::parallel);

} // namespace xiv

#endif
