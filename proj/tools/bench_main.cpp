// Benchmark: serial reference path vs the OpenMP path for every data-parallel
// kernel, with a bitwise equality check between the two.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <vector>

#include "xiv/holography.hpp"
#include "xiv/parallel.hpp"
#include "xiv/xi_core.hpp"
#include "xiv/zeros.hpp"

using namespace xiv;
using clock_type = std::chrono::steady_clock;

namespace {

template <typename F>
double time_of(F&& f) {
    const auto t0 = clock_type::now();
    f();
    return std::chrono::duration<double>(clock_type::now() - t0).count();
}

void row(const char* name, double serial, double parallel, bool identical) {
    std::printf("%-28s %9.3fs %9.3fs %7.2fx   %s\n", name, serial, parallel,
                serial / parallel, identical ? "bit-identical" : "MISMATCH");
}

} // namespace

int main() {
    std::printf("threads available: %d\n\n", hardware_threads());
    std::printf("%-28s %10s %10s %8s\n", "kernel", "serial", "openmp", "speedup");

    {
        ZeroSearchOptions ser, par;
        ser.mode = ExecMode::serial;
        par.mode = ExecMode::parallel;
        ZeroSearchOutcome a, b;
        const double ts = time_of([&] { a = find_critical_zeros(60, ser); });
        const double tp = time_of([&] { b = find_critical_zeros(60, par); });
        bool same = a.records.size() == b.records.size();
        for (size_t i = 0; same && i < a.records.size(); ++i)
            same = a.records[i].tau == b.records[i].tau &&
                   a.records[i].criterion_residual == b.records[i].criterion_residual &&
                   a.records[i].tau_asymptotic == b.records[i].tau_asymptotic;
        row("zero search + certification", ts, tp, same);
    }

    {
        GridSpec sg{0.05, 0.45, 24};
        GridSpec tg{0.5, 40.0, 30};
        std::vector<StripScanCell> a, b;
        const double ts = time_of([&] { a = rh_scan(sg, tg, 1e-11, ExecMode::serial); });
        const double tp = time_of([&] { b = rh_scan(sg, tg, 1e-11, ExecMode::parallel); });
        bool same = a.size() == b.size();
        for (size_t i = 0; same && i < a.size(); ++i)
            same = a[i].residual_system == b[i].residual_system &&
                   a[i].residual_sum_form == b[i].residual_sum_form;
        row("off-line strip scan", ts, tp, same);
    }

    {
        std::vector<cplx> pts;
        for (double sg : {0.1, 0.3, 0.5, 0.7, 0.9})
            for (double tau : {0.0, 5.0, 14.134725141734694, 25.0, 40.0})
                pts.emplace_back(sg, tau);
        VerticalLineSpec spec;
        spec.tol = 2e-8;
        std::vector<XiValue> a, b;
        const double ts = time_of([&] { a = reconstruct_grid(pts, spec, ExecMode::serial); });
        const double tp = time_of([&] { b = reconstruct_grid(pts, spec, ExecMode::parallel); });
        bool same = a.size() == b.size();
        for (size_t i = 0; same && i < a.size(); ++i)
            same = a[i].value == b[i].value;
        row("holographic grid (25 pts)", ts, tp, same);
    }

    {
        TransformSuiteOptions ser, par;
        ser.mode = ExecMode::serial;
        par.mode = ExecMode::parallel;
        std::vector<IdentityReport> a, b;
        const double ts = time_of([&] { a = verify_transform_identities(ser); });
        const double tp = time_of([&] { b = verify_transform_identities(par); });
        bool same = a.size() == b.size();
        for (size_t i = 0; same && i < a.size(); ++i)
            same = a[i].id == b[i].id && a[i].abs_residual == b[i].abs_residual;
        row("transform identity battery", ts, tp, same);
    }

    {
        GridSpec sg{0.05, 0.45, 12};
        GridSpec tg{10.0, 100.0, 40};
        std::vector<ConjectureCell> a, b;
        const double ts = time_of([&] { a = one_term_conjecture_scan(sg, tg, ExecMode::serial); });
        const double tp = time_of([&] { b = one_term_conjecture_scan(sg, tg, ExecMode::parallel); });
        bool same = a.size() == b.size();
        for (size_t i = 0; same && i < a.size(); ++i)
            same = a[i].value == b[i].value;
        row("one-term conjecture scan", ts, tp, same);
    }

    return 0;
}
