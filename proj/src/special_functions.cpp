#include "xiv/special_functions.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <unordered_map>
#include <vector>

#include "xiv/quadrature.hpp"

namespace xiv {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kThetaTermCap = 10'000;

double theta_tail_bound(double x, int n_last, double poly_growth) {
    // Remainder after term n_last of sum a_n e^{-pi n^2 x} with |a_{n+1}/a_n|
    // <= poly_growth: first omitted term over (1 - ratio).
    const double n1 = n_last + 1.0;
    const double first = std::exp(-kPi * n1 * n1 * x);
    const double ratio = poly_growth * std::exp(-kPi * (2.0 * n_last + 3.0) * x);
    if (ratio >= 1.0)
        return HUGE_VAL;
    return first / (1.0 - ratio);
}

} // namespace

SeriesEvaluation psi(double x, double tol, int min_terms) {
    if (!(x > 0.0))
        throw domain_error("psi: need x > 0");
    if (!(tol > 0.0))
        throw domain_error("psi: need tol > 0");

    KahanSum<double> s;
    int n = 0;
    double bound = HUGE_VAL;
    while (n < kThetaTermCap) {
        ++n;
        s.add(std::exp(-kPi * n * n * x));
        bound = theta_tail_bound(x, n, 1.0);
        if (bound <= tol && n >= min_terms)
            return {s.value(), n, bound};
    }
    throw tolerance_error("psi: term cap exceeded; x too small for direct summation "
                          "(use the modular transformation)");
}

SeriesEvaluation psi_derivative(double x, int order, double tol, int min_terms) {
    if (!(x > 0.0))
        throw domain_error("psi_derivative: need x > 0");
    if (order != 1 && order != 2)
        throw domain_error("psi_derivative: order must be 1 or 2");
    if (!(tol > 0.0))
        throw domain_error("psi_derivative: need tol > 0");

    KahanSum<double> s;
    int n = 0;
    while (n < kThetaTermCap) {
        ++n;
        const double pn2 = kPi * n * n;
        double term = std::exp(-pn2 * x);
        for (int k = 0; k < order; ++k)
            term *= -pn2;
        s.add(term);
        // |a_{n+1}/a_n| <= ((n+2)/(n+1))^{2k} on the polynomial factor
        const double g = std::pow((n + 2.0) / (n + 1.0), 2.0 * order);
        const double n1 = n + 1.0;
        double first = std::exp(-kPi * n1 * n1 * x);
        for (int k = 0; k < order; ++k)
            first *= kPi * n1 * n1;
        const double ratio = g * std::exp(-kPi * (2.0 * n + 3.0) * x);
        if (ratio < 1.0) {
            const double bound = first / (1.0 - ratio);
            if (bound <= tol && n >= min_terms)
                return {s.value(), n, bound};
        }
    }
    throw tolerance_error("psi_derivative: term cap exceeded");
}

SeriesEvaluation f_mellin(double x, double tol, int min_terms) {
    if (!(x > 0.0))
        throw domain_error("f_mellin: need x > 0");
    if (!(tol > 0.0))
        throw domain_error("f_mellin: need tol > 0");

    const double x2 = x * x;
    const double c4 = 4.0 * kPi * kPi * x2 * x2;
    const double c2 = 6.0 * kPi * x2;
    KahanSum<double> s;
    int n = 0;
    while (n < kThetaTermCap) {
        ++n;
        const double e = std::exp(-kPi * n * n * x2);
        s.add((c4 * n * n * n * n - c2 * n * n) * e);
        const double g = std::pow((n + 2.0) / (n + 1.0), 4.0);
        const double n1 = n + 1.0;
        const double first =
            (c4 * n1 * n1 * n1 * n1 + c2 * n1 * n1) * std::exp(-kPi * n1 * n1 * x2);
        const double ratio = g * std::exp(-kPi * (2.0 * n + 3.0) * x2);
        if (ratio < 1.0) {
            const double bound = first / (1.0 - ratio);
            if (bound <= tol && n >= min_terms)
                return {s.value(), n, bound};
        }
    }
    throw tolerance_error("f_mellin: term cap exceeded; x too small");
}

// ---------------------------------------------------------------------------
// log Gamma / digamma, Lanczos g = 7 with 9 coefficients.

namespace {

const double kLanczosG = 7.0;
const double kLanczos[9] = {
    0.99999999999980993,   676.5203681218851,     -1259.1392167224028,
    771.32342877765313,    -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,  9.9843695780195716e-6, 1.5056327351493116e-7};
const double kLogSqrt2Pi = 0.91893853320467274178032973640562;

cplx lanczos_sum(cplx z) {
    cplx x = kLanczos[0];
    for (int k = 1; k < 9; ++k)
        x += kLanczos[k] / (z + (k - 1.0));
    return x;
}

cplx lanczos_sum_deriv(cplx z) {
    cplx x = 0.0;
    for (int k = 1; k < 9; ++k) {
        cplx d = z + (k - 1.0);
        x -= kLanczos[k] / (d * d);
    }
    return x;
}

cplx log_gamma_right(cplx z) {
    // valid for Re z >= 1/2
    cplx t = z + (kLanczosG - 0.5);
    return kLogSqrt2Pi + (z - 0.5) * std::log(t) - t + std::log(lanczos_sum(z));
}

} // namespace

cplx log_gamma(cplx z) {
    require_finite(z, "log_gamma");
    if (z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real()))
        throw pole_error("log_gamma: pole at nonpositive integer");
    if (z.real() >= 0.5)
        return log_gamma_right(z);
    // reflection: log Gamma(z) = log(pi / sin(pi z)) - log Gamma(1 - z)
    return std::log(kPi / std::sin(kPi * z)) - log_gamma_right(1.0 - z);
}

cplx digamma(cplx z) {
    require_finite(z, "digamma");
    if (z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real()))
        throw pole_error("digamma: pole at nonpositive integer");
    if (z.real() >= 0.5) {
        cplx t = z + (kLanczosG - 0.5);
        return std::log(t) + (z - 0.5) / t - 1.0 + lanczos_sum_deriv(z) / lanczos_sum(z);
    }
    // psi(z) = psi(1-z) - pi cot(pi z)
    return digamma(1.0 - z) - kPi * std::cos(kPi * z) / std::sin(kPi * z);
}

// ---------------------------------------------------------------------------
// zeta via accelerated eta series.

namespace {

constexpr double kLogAccel = 1.7627471740390860505; // ln(3 + sqrt 8)

// Chebyshev-weight coefficients w_k = (d_k - d_n)/d_n in [-1, 0); built in
// long double since d_n ~ (3+sqrt8)^n overflows double near n = 400.
const std::vector<double>& eta_weights(int n) {
    thread_local std::unordered_map<int, std::vector<double>> cache;
    auto it = cache.find(n);
    if (it != cache.end())
        return it->second;

    std::vector<long double> c(n + 1);
    c[0] = 1.0L / n;
    for (int i = 1; i <= n; ++i)
        c[i] = c[i - 1] * 4.0L * (n + i - 1.0L) * (n - i + 1.0L) /
               ((2.0L * i - 1.0L) * (2.0L * i));
    long double acc = 0.0L;
    std::vector<long double> dk(n + 1);
    for (int i = 0; i <= n; ++i) {
        acc += c[i];
        dk[i] = n * acc;
    }
    std::vector<double> w(n);
    for (int k = 0; k < n; ++k)
        w[k] = static_cast<double>((dk[k] - dk[n]) / dk[n]);
    return cache.emplace(n, std::move(w)).first->second;
}

const double* log_table(int upto) {
    thread_local std::vector<double> logs;
    if (static_cast<int>(logs.size()) < upto) {
        int old = static_cast<int>(logs.size());
        logs.resize(upto);
        for (int k = old; k < upto; ++k)
            logs[k] = std::log(k + 1.0);
    }
    return logs.data();
}

int eta_term_count(cplx s, double abs_pref) {
    const double t = std::abs(s.imag());
    const double sig = s.real();
    // Re log|Gamma(s)|, padded below Re = 1/2 by the |t|^{sigma-1/2} envelope
    double lg;
    if (sig >= 0.5)
        lg = log_gamma_right(s).real();
    else
        lg = log_gamma_right(cplx(0.5, s.imag())).real() +
             (sig - 0.5) * std::log1p(t);
    double target = std::log(3.0) + std::log1p(2.0 * t) + 0.5 * kPi * t - lg -
                    std::log(std::max(abs_pref, 1e-8)) - std::log(1e-15);
    int n = static_cast<int>(target / kLogAccel) + 10;
    n = std::clamp(n, 24, 1200);
    return ((n + 31) / 32) * 32; // quantize so the weight cache stays small
}

} // namespace

cplx zeta(cplx s) {
    require_finite(s, "zeta");
    if (s.real() <= 0.0)
        throw domain_error("zeta: this evaluator requires Re s > 0");
    if (std::abs(s - cplx(1.0, 0.0)) < 1e-12)
        throw pole_error("zeta: pole at s = 1");

    const cplx pref = 1.0 - std::exp((1.0 - s) * std::numbers::ln2);
    const int n = eta_term_count(s, std::abs(pref));
    const std::vector<double>& w = eta_weights(n);
    const double* lg = log_table(n + 1);

    KahanSum<cplx> sum;
    for (int k = 0; k < n; ++k) {
        // w_k * (-1)^k * (k+1)^{-s}
        cplx term = w[k] * std::exp(-s * lg[k]);
        sum.add((k & 1) ? -term : term);
    }
    return -sum.value() / pref;
}

// ---------------------------------------------------------------------------
// E_z(a) = int_1^inf t^{-z} e^{-a t} dt.

cplx exp_integral_e(cplx z, double a, double tol) {
    require_finite(z, "exp_integral_e");
    if (!(a > 0.0))
        throw domain_error("exp_integral_e: need a > 0");
    if (!(tol > 0.0))
        throw domain_error("exp_integral_e: need tol > 0");

    // Pick T with tail bound e^{-aT} T^mu (1/a + 1/(a^2 T)) <= tol/2,
    // mu = max(0, -Re z) (valid for mu <= 1, which covers all callers;
    // steeper negative orders keep doubling T).
    const double mu = std::max(0.0, -z.real());
    double T = 1.0 + 60.0 / a;
    double tail = HUGE_VAL;
    for (int i = 0; i < 200; ++i) {
        tail = std::exp(-a * T + mu * std::log(T)) * (1.0 / a + 1.0 / (a * a * T));
        if (tail <= 0.5 * tol)
            break;
        T *= 1.5;
    }

    // t = e^v; phase of t^{-z} is linear in v, so half-period panels keep the
    // oscillation resolved.
    const double V = std::log(T);
    const double panel = kPi / (2.0 * std::max(1.0, std::abs(z.imag())));
    QuadOptions opt;
    opt.abs_tol = 0.5 * tol;
    auto f = [&](double v) { return std::exp((1.0 - z) * v - a * std::exp(v)); };
    QuadOutcome q = integrate_panels(f, 0.0, V, panel, opt);
    return q.value;
}

// ---------------------------------------------------------------------------
// Bessel kernels.

namespace {

cplx i0_series(cplx z) {
    const cplx q = 0.25 * z * z;
    cplx term = 1.0, sum = 1.0;
    for (int k = 1; k < 80; ++k) {
        term *= q / static_cast<double>(k * k);
        sum += term;
        if (std::abs(term) < 1e-18 * std::abs(sum))
            break;
    }
    return sum;
}

// Periodic trapezoidal rule on the integral representations; geometric
// convergence for analytic periodic integrands.  N = 220 keeps the discarded
// mode I_N / J_N below 1e-16 for |z| <= 80.
constexpr int kTrapN = 220;

} // namespace

double bessel_j0(double x) {
    if (!std::isfinite(x))
        throw domain_error("bessel_j0: non-finite argument");
    x = std::fabs(x);
    if (x <= 8.0) {
        const double q = -0.25 * x * x;
        double term = 1.0, sum = 1.0;
        for (int k = 1; k < 40; ++k) {
            term *= q / static_cast<double>(k * k);
            sum += term;
            if (std::fabs(term) < 1e-18)
                break;
        }
        return sum;
    }
    // J0(x) = (1/pi) int_0^pi cos(x sin th) dth; endpoints both give cos(0).
    const double h = kPi / kTrapN;
    KahanSum<double> s;
    s.add(1.0); // half of each endpoint value, summed
    for (int k = 1; k < kTrapN; ++k)
        s.add(std::cos(x * std::sin(k * h)));
    return s.value() * h / kPi;
}

cplx bessel_i0(cplx z) {
    require_finite(z, "bessel_i0");
    const double m = std::abs(z);
    if (m <= 8.0)
        return i0_series(z);
    if (m > 80.0)
        throw domain_error("bessel_i0: |z| beyond supported range (80)");
    if (std::abs(z.real()) > 600.0)
        throw tolerance_error("bessel_i0: magnitude overflow");
    // I0(z) = (1/pi) int_0^pi exp(z cos th) dth
    const double h = kPi / kTrapN;
    KahanSum<cplx> s;
    s.add(0.5 * (std::exp(z) + std::exp(-z)));
    for (int k = 1; k < kTrapN; ++k)
        s.add(std::exp(z * std::cos(k * h)));
    return s.value() * h / kPi;
}

} // namespace xiv
