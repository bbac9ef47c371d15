#include "xiv/quadrature.hpp"

#include <algorithm>
#include <cmath>

namespace xiv {
namespace {

// 15-point Kronrod extension of 7-point Gauss (QUADPACK dqk15 constants).
const double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
const double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
const double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct PanelResult {
    cplx k15;
    double err; // |k15 - g7|
};

PanelResult eval_panel(const Integrand& f, double a, double b, long& nodes) {
    const double h = 0.5 * (b - a);
    const double c = 0.5 * (a + b);

    cplx fc = f(c);
    cplx resg = kWg[3] * fc;
    cplx resk = kWgk[7] * fc;
    for (int j = 0; j < 3; ++j) { // Gauss nodes (odd Kronrod indices)
        const double x = h * kXgk[2 * j + 1];
        cplx f1 = f(c - x), f2 = f(c + x);
        resg += kWg[j] * (f1 + f2);
        resk += kWgk[2 * j + 1] * (f1 + f2);
    }
    for (int j = 0; j < 4; ++j) { // Kronrod-only nodes
        const double x = h * kXgk[2 * j];
        cplx f1 = f(c - x), f2 = f(c + x);
        resk += kWgk[2 * j] * (f1 + f2);
    }
    nodes += 15;
    return {resk * h, std::abs((resk - resg) * h)};
}

void refine(const Integrand& f, double a, double b, double tol, int depth,
            const QuadOptions& opt, long& nodes, KahanSum<cplx>& acc,
            double& err_acc) {
    PanelResult p = eval_panel(f, a, b, nodes);
    if (!is_finite(p.k15))
        throw tolerance_error("quadrature: non-finite integrand sample");
    if (p.err <= tol || depth >= opt.max_depth) {
        acc.add(p.k15);
        err_acc += p.err;
        return;
    }
    if (nodes > opt.max_nodes)
        throw tolerance_error("quadrature: node budget exhausted before reaching tolerance");
    const double m = 0.5 * (a + b);
    refine(f, a, m, 0.5 * tol, depth + 1, opt, nodes, acc, err_acc);
    refine(f, m, b, 0.5 * tol, depth + 1, opt, nodes, acc, err_acc);
}

} // namespace

QuadOutcome integrate(const Integrand& f, double a, double b,
                      const QuadOptions& opt,
                      std::span<const double> breakpoints) {
    if (!(a < b))
        throw domain_error("quadrature: need a < b");

    std::vector<double> pts;
    pts.push_back(a);
    for (double x : breakpoints)
        if (x > a && x < b)
            pts.push_back(x);
    pts.push_back(b);
    std::sort(pts.begin(), pts.end());

    const int m = static_cast<int>(pts.size()) - 1;
    KahanSum<cplx> acc;
    double err = 0.0;
    long nodes = 0;
    for (int i = 0; i < m; ++i)
        refine(f, pts[i], pts[i + 1], opt.abs_tol / m, 0, opt, nodes, acc, err);
    return {acc.value(), err, nodes};
}

QuadOutcome integrate_panels(const Integrand& f, double a, double b,
                             double max_panel_width, const QuadOptions& opt) {
    if (!(max_panel_width > 0.0))
        throw domain_error("quadrature: panel width must be positive");
    const int n = std::max(1, static_cast<int>(std::ceil((b - a) / max_panel_width)));
    std::vector<double> pts(n - 1);
    for (int i = 1; i < n; ++i)
        pts[i - 1] = a + (b - a) * i / n;
    return integrate(f, a, b, opt, pts);
}

} // namespace xiv
