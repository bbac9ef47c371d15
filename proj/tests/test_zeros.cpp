#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "xiv/special_functions.hpp"
#include "xiv/xi_core.hpp"
#include "xiv/zeros.hpp"

using namespace xiv;
namespace dt = doctest;

constexpr double kPi = std::numbers::pi;
constexpr double kTau1 = 14.134725141734694;

TEST_CASE("first zeros located and certified") {
    ZeroSearchOptions opt;
    const auto out = find_critical_zeros(10, opt);
    REQUIRE(out.records.size() == 10);
    CHECK(out.rescan_consistent);
    CHECK(out.records[0].tau == dt::Approx(kTau1).epsilon(1e-9));
    CHECK(Xi_real(14.0) * Xi_real(14.2) < 0.0); // cross-check bracket

    double prev = 0.0;
    for (const auto& r : out.records) {
        CHECK(r.bracket_width <= 1e-10);
        CHECK(r.tau > prev);
        prev = r.tau;
        // functional equation + Schwarz symmetry: both conjugate points vanish
        CHECK(std::abs(xi_reference(cplx(0.5, r.tau)).value) < 1e-9);
        CHECK(std::abs(xi_reference(cplx(0.5, -r.tau)).value) < 1e-9);
        CHECK(r.criterion_residual < 1e-8);
    }
}

TEST_CASE("consecutive zeros separated by more than 0.5 for n <= 30") {
    const auto out = find_critical_zeros(30, {});
    for (size_t i = 1; i < out.records.size(); ++i)
        CHECK(out.records[i].tau - out.records[i - 1].tau > 0.5);
}

TEST_CASE("sign-change count self-consistency across scan steps") {
    const int a = count_sign_changes(2.0, 60.0, 0.05);
    const int b = count_sign_changes(2.0, 60.0, 0.01);
    CHECK(a == b);
}

TEST_CASE("criterion residual separates zeros from off-zero points") {
    CHECK(criterion_residual(cplx(0.5, kTau1)) < 1e-9);
    CHECK(criterion_residual(cplx(0.5, 10.0)) >= 1e-4);
    // invariant under conjugation
    CHECK(criterion_residual(cplx(0.5, 10.0)) ==
          criterion_residual(cplx(0.5, -10.0)));
    CHECK_THROWS_AS(criterion_residual(cplx(1.5, 1.0)), domain_error);
}

TEST_CASE("one-term criterion: improvement trend and theta-term bound") {
    const auto out = find_critical_zeros(50, {});
    const auto& r = out.records;
    // larger zeros satisfy the truncated criterion better
    CHECK(r[49].criterion_residual_one_term < r[4].criterion_residual_one_term);
    for (const auto& z : r) {
        const cplx rho(0.5, z.tau);
        // adding the n = 2 theta term reduces the truncated residual
        CHECK(criterion_residual_one_term(rho, 2) < z.criterion_residual_one_term);
        // full-psi and one-term forms differ by at most the e^{-4 pi} envelope
        CHECK(std::fabs(z.criterion_residual - z.criterion_residual_one_term) <
              10.0 * std::exp(-4.0 * kPi));
    }
}

TEST_CASE("phase function is increasing and calibrates to the first zero") {
    double prev = zero_phase(10.0);
    for (double t = 11.0; t <= 100.0; t += 1.0) {
        const double cur = zero_phase(t);
        CHECK(cur > prev);
        prev = cur;
    }
    const PhaseCalibration cal = calibrate_phase(kTau1);
    CHECK(std::fabs(asymptotic_zero(1, cal) - kTau1) < 2.0);
}

TEST_CASE("asymptotic ordinates track located zeros") {
    const auto out = find_critical_zeros(80, {});
    const PhaseCalibration cal = calibrate_phase(out.records[0].tau);
    double w1 = 0.0, w2 = 0.0;
    for (int n = 1; n <= 80; ++n) {
        const double err = std::fabs(asymptotic_zero(n, cal) - out.records[n - 1].tau);
        CHECK(err < 2.0);
        if (n <= 40)
            w1 += err;
        else
            w2 += err;
    }
    CHECK(w2 / 40.0 <= w1 / 40.0); // windowed average error non-increasing
}

TEST_CASE("g correction: series against the Kummer route") {
    // 1F1(b; b+1; -pi) = b pi^{-b} Gamma(b) - b E_{1-b}(pi)
    for (cplx rho : {cplx(0.5, 10.0), cplx(0.5, 35.0), cplx(0.3, 6.0)}) {
        const cplx b = rho + 0.5;
        const cplx f11_series =
            (g_correction(rho) + 1.0 / (4.0 * std::norm(rho))) * std::norm(b) / b;
        const cplx f11_kummer =
            b * std::exp(-b * std::log(kPi) + log_gamma(b)) -
            b * exp_integral_e(1.0 - b, kPi, 1e-13);
        CHECK(std::abs(f11_series - f11_kummer) < 1e-10);
    }
}

TEST_CASE("g correction on the critical line: magnitude shrinks monotonically") {
    // Re g is negative and rises toward zero; its magnitude decreases
    double prev = HUGE_VAL;
    for (double tau = 10.0; tau <= 100.0; tau += 5.0) {
        const double re_g = g_correction(cplx(0.5, tau)).real();
        CHECK(re_g < 0.0);
        CHECK(std::fabs(re_g) < prev);
        prev = std::fabs(re_g);
    }
}

TEST_CASE("g dominates the oscillatory Gamma term at tau_50") {
    const auto out = find_critical_zeros(50, {});
    const double tau50 = out.records[49].tau;
    const cplx rho(0.5, tau50);
    // |Gamma-term| amplitude e^{Re[...]}; g is far larger at this height
    const cplx z = 0.5 * (rho + 0.5);
    const double amp = std::exp((log_gamma(z) - (rho + 0.5) *
                                 (0.5 * std::log(kPi))).real());
    CHECK(std::abs(g_correction(rho)) > amp);
}

TEST_CASE("strip scan: system residual equals |xi| and stays positive") {
    GridSpec sg{0.05, 0.45, 5};
    GridSpec tg{0.5, 30.0, 8};
    const auto cells = rh_scan(sg, tg, 1e-12);
    REQUIRE(cells.size() == 40);
    for (const auto& c : cells) {
        CHECK(c.residual_system > 0.0);
        // joint residual is |rho(1-rho) J - 1/2| = |xi(rho)|
        const cplx rho(c.sigma, c.tau);
        CHECK(std::fabs(c.residual_system -
                        std::abs(xi_reference(rho).value)) <
              1e-7 * (1.0 + c.residual_system));
        // the implied-denominator residual never exceeds the system residual
        // scale: Re J deviates from the sum-form value by at most
        // joint/sqrt(alpha^2+beta^2)
        const StripPoint p(rho);
        const double bound = c.residual_system /
                             std::hypot(p.alpha(), p.beta());
        CHECK(c.residual_sum_form <= bound * (1.0 + 1e-9) + 1e-15);
    }
    // symmetry under tau -> -tau (conjugate J): spot check
    const auto one = rh_scan(GridSpec{0.2, 0.3, 2}, GridSpec{3.0, 5.0, 2}, 1e-12);
    for (const auto& c : one) {
        const StripPoint p(c.sigma, -c.tau);
        const cplx J = j_integral(p.as_complex(), 1e-12);
        const double e1 = p.alpha() * J.real() - p.beta() * J.imag() - 0.5;
        const double e2 = p.beta() * J.real() + p.alpha() * J.imag();
        CHECK(std::hypot(e1, e2) == dt::Approx(c.residual_system).epsilon(1e-12));
    }
}

TEST_CASE("on-line limit degenerates to the zero criterion") {
    // beta -> 0 as sigma -> 1/2: the second equation collapses and the first
    // becomes the criterion (up to the factor 2 between J and its half)
    const double tau = kTau1;
    const cplx rho(0.5, tau);
    const StripPoint p(rho);
    CHECK(p.beta() == 0.0);
    const cplx J = j_integral(rho, 1e-13);
    CHECK(std::fabs(J.imag()) < 1e-13);
    CHECK(std::fabs(p.alpha() * J.real() - 0.5) < 1e-9); // zero of xi
    CHECK(std::fabs(J.real() / 2.0 -
                    j_integral_half(rho, 1e-13).real()) < 1e-12);
}

TEST_CASE("denominator adjudication names the sum form") {
    const std::string finding =
        adjudicate_denominator(GridSpec{0.05, 0.45, 9}, GridSpec{0.5, 30.0, 9});
    CHECK(finding.find("alpha^2 + beta^2") != std::string::npos);
}

TEST_CASE("one-term conjecture scan: real expression, sign pattern reported") {
    GridSpec sg{0.05, 0.45, 5};
    GridSpec tg{10.0, 100.0, 7};
    const auto cells = one_term_conjecture_scan(sg, tg);
    REQUIRE(cells.size() == 35);
    double mn = HUGE_VAL;
    for (const auto& c : cells) {
        CHECK(std::isfinite(c.value));
        mn = std::min(mn, std::fabs(c.value));
    }
    CHECK(mn > 0.0);
    // s -> 1/2 boundary behavior continuous: adjacent evaluations close
    const auto near = one_term_conjecture_scan(GridSpec{0.44, 0.46, 3},
                                               GridSpec{20.0, 20.0001, 2});
    CHECK(std::fabs(near[0].value - near[2].value) < 1e-4);
}

TEST_CASE("input validation") {
    CHECK_THROWS_AS(find_critical_zeros(0, {}), domain_error);
    CHECK_THROWS_AS(find_critical_zeros(501, {}), domain_error);
    CHECK_THROWS_AS(rh_scan(GridSpec{0.1, 0.6, 4}, GridSpec{1.0, 2.0, 4}),
                    domain_error);
    CHECK_THROWS_AS(one_term_conjecture_scan(GridSpec{0.1, 0.5, 4},
                                             GridSpec{1.0, 2.0, 4}),
                    domain_error);
    GridSpec bad{1.0, 0.0, 4};
    CHECK_THROWS_AS(bad.validate(), domain_error);
}
