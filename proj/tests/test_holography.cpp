#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <map>
#include <numbers>

#include "xiv/holography.hpp"
#include "xiv/special_functions.hpp"

using namespace xiv;

constexpr double kTau1 = 14.134725141734694;

namespace {

std::multimap<std::string, IdentityReport> by_id(const std::vector<IdentityReport>& v) {
    std::multimap<std::string, IdentityReport> m;
    for (const auto& r : v)
        m.emplace(r.id, r);
    return m;
}

} // namespace

TEST_CASE("reconstruction matches the reference at key points") {
    VerticalLineSpec spec;
    spec.tol = 1e-10;
    CHECK(std::abs(xi_reconstruct(cplx(0.5, 0.0), spec).value -
                   xi_reference(cplx(0.5, 0.0)).value) < 1e-8);
    CHECK(std::abs(xi_reconstruct(cplx(0.3, 7.0), spec).value -
                   xi_reference(cplx(0.3, 7.0)).value) < 1e-7);
}

TEST_CASE("reconstruction symmetric under s <-> 1-s by construction") {
    VerticalLineSpec spec;
    const cplx s(0.3, 7.0);
    const XiValue a = xi_reconstruct(s, spec);
    const XiValue b = xi_reconstruct(1.0 - s, spec);
    CHECK(a.value.real() == b.value.real());
    CHECK(a.value.imag() == b.value.imag());
}

TEST_CASE("two reconstruction forms agree pointwise") {
    VerticalLineSpec spec;
    spec.tol = 1e-10;
    for (cplx s : {cplx(0.5, 0.0), cplx(0.7, 3.0), cplx(0.5, kTau1)}) {
        const cplx a = xi_reconstruct(s, spec).value;
        const cplx b = xi_reconstruct_alt(s, spec).value;
        CHECK(std::abs(a - b) < 1e-9);
    }
    // vanishes at the first zero
    CHECK(std::abs(xi_reconstruct_alt(cplx(0.5, kTau1), spec).value) < 1e-7);
}

TEST_CASE("constant consistency between the two forms") {
    // form A constant - form B constant = the xi/(t(1-t)) line integral
    VerticalLineSpec spec;
    const double cA = 1.0 - std::pow(std::numbers::pi, 0.25) /
                                (2.0 * std::exp(log_gamma(cplx(0.75, 0.0)).real()));
    const double cB = 0.5;
    const auto nine =
        line_integral(spec, [](cplx t) {
            return xi_reference(t).value / (t * (1.0 - t));
        }).value;
    CHECK(std::abs((cA - cB) - nine.real()) < 1e-9);
}

TEST_CASE("pole distance guard") {
    VerticalLineSpec spec;
    spec.c = 1.02;
    CHECK_THROWS_AS(xi_reconstruct(cplx(0.99, 0.0), spec), domain_error);
    CHECK_THROWS_AS(xi_reconstruct(cplx(1.5, 0.0), spec), domain_error);
}

TEST_CASE("tau-plane reconstruction (horizontal line)") {
    CHECK(std::abs(Xi_reconstruct_tau(cplx(0.0, 0.0), -1.0).value -
                   xi_reference(cplx(0.5, 0.0)).value) < 1e-8);
    // even in tau
    CHECK(std::abs(Xi_reconstruct_tau(cplx(5.0, 0.0), -1.0).value -
                   Xi_reconstruct_tau(cplx(-5.0, 0.0), -1.0).value) < 1e-10);
    // non-real tau: tau = 5 + 0.2i corresponds to s = 0.3 + 5i
    const cplx tau(5.0, 0.2);
    CHECK(std::abs(Xi_reconstruct_tau(tau, -1.0).value -
                   xi_reference(cplx(0.3, 5.0)).value) < 1e-7);
    // line-abscissa independence inside (-3/2, -1/2)
    CHECK(std::abs(Xi_reconstruct_tau(tau, -0.7).value -
                   Xi_reconstruct_tau(tau, -1.3).value) < 1e-8);
    CHECK_THROWS_AS(Xi_reconstruct_tau(cplx(0.0, 0.7), -1.0), domain_error);
    CHECK_THROWS_AS(Xi_reconstruct_tau(cplx(1.0, 0.0), -0.2), domain_error);
}

TEST_CASE("kernel is rational with poles off the line") {
    for (double sg : {0.1, 0.5, 0.9})
        for (double tau : {0.0, 14.0, 40.0}) {
            const HolographicKernel k(sg, tau, 1.5);
            const auto [p1, p2] = k.poles();
            CHECK(std::fabs(p1.imag()) >= std::min(sg, 1.0 - sg) + 0.49);
            CHECK(std::fabs(p2.imag()) > 0.0);
            // numerator/denominator decomposition reproduces eval
            for (double x : {-3.0, 0.25, 11.0}) {
                const cplx direct = k.eval(x);
                const cplx recomposed = k.numerator(x) / k.denominator(x) /
                                        (std::numbers::pi * cplx(0.0, 1.0));
                CHECK(std::abs(direct - recomposed) == 0.0);
                // denominator really vanishes at the poles
                const cplx d1 = (cplx(p1.real(), p1.imag() - (0.5 - k.c)) *
                                     cplx(p1.real(), p1.imag() - (0.5 - k.c)) -
                                 cplx(tau, 0.5 - sg) * cplx(tau, 0.5 - sg));
                (void)d1;
            }
            const cplx w1(p1.real(), p1.imag() + (0.5 - k.c));
            CHECK(std::abs(w1 * w1 - cplx(tau, 0.5 - sg) * cplx(tau, 0.5 - sg)) <
                  1e-9 * (1.0 + std::norm(w1)));
        }
}

TEST_CASE("c-independence of reconstruction") {
    const cplx s(0.35, 9.0);
    VerticalLineSpec a, b, c;
    a.c = 1.1;
    b.c = 1.5;
    c.c = 1.9;
    a.tol = b.tol = c.tol = 2e-8;
    const cplx va = xi_reconstruct(s, a).value;
    const cplx vb = xi_reconstruct(s, b).value;
    const cplx vc = xi_reconstruct(s, c).value;
    CHECK(std::abs(va - vb) < 1e-7);
    CHECK(std::abs(vb - vc) < 1e-7);
    CHECK(std::abs(va - vc) < 1e-7);
}

TEST_CASE("transform identity battery: asserted entries hold, defect entries "
          "carry structured residuals") {
    TransformSuiteOptions opt;
    const auto reports = verify_transform_identities(opt);
    const auto m = by_id(reports);
    CHECK(m.count("error") == 0);

    int asserted = 0, reported = 0;
    for (const auto& r : reports) {
        if (r.asserted) {
            ++asserted;
            CHECK(r.abs_residual < 1e-7);
        } else {
            ++reported;
        }
    }
    CHECK(asserted >= 20);
    CHECK(reported >= 10);

    // the catalog defects show up as structured residuals, not noise
    auto worst = [&](const char* id) {
        double w = 0.0;
        auto [lo, hi] = m.equal_range(id);
        for (auto it = lo; it != hi; ++it)
            w = std::max(w, it->second.abs_residual);
        return w;
    };
    CHECK(worst("fourier-theta-printed") > 1.0);
    CHECK(worst("damped-cosine-cauchy-printed") > 1e-3);
    CHECK(worst("cauchy-half-printed") > 1e-3);
    CHECK(worst("cauchy-constant-printed") > 1.0);
    CHECK(worst("bessel-transform-printed") > 0.1);
}

TEST_CASE("grid reconstruction helper is order-stable") {
    VerticalLineSpec spec;
    spec.tol = 1e-8;
    const cplx pts[] = {cplx(0.3, 2.0), cplx(0.5, 5.0), cplx(0.8, 1.0)};
    const auto serial = reconstruct_grid(pts, spec, ExecMode::serial);
    const auto parallel = reconstruct_grid(pts, spec, ExecMode::parallel);
    REQUIRE(serial.size() == 3);
    for (int i = 0; i < 3; ++i) {
        CHECK(serial[i].value.real() == parallel[i].value.real());
        CHECK(serial[i].value.imag() == parallel[i].value.imag());
    }
}
