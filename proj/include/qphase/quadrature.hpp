#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

#include "qphase/errors.hpp"

namespace qphase {

struct QuadratureOptions {
    double rel_tol = 1e-10;
    double abs_tol = 1e-14;
    int max_intervals = 4000;
};

namespace detail {

// Gauss-Kronrod 7-15 pair. Nodes/weights on [-1,1]; nodes are the
// positive half, mirrored during evaluation. wg holds the embedded
// 7-point Gauss weights for the odd-index nodes.
inline constexpr double kGK15Nodes[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769, 0.741531185599394,
    0.586087235467691, 0.405845151377397, 0.207784955007898, 0.000000000000000};
inline constexpr double kGK15WeightsK[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250, 0.140653259715525,
    0.169004726639267, 0.190350578064785, 0.204432940075298, 0.209482141084728};
inline constexpr double kGK15WeightsG[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119, 0.417959183673469};

// Single Kronrod panel on [a,b]. Returns the K15 estimate; err receives
// a conservative |K15-G7| based error bound.
template <class F>
double gk15_panel(const F& f, double a, double b, double& err) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);

    const double fc = f(mid);
    double k15 = kGK15WeightsK[7] * fc;
    double g7 = kGK15WeightsG[3] * fc;
    for (int i = 0; i < 7; ++i) {
        const double dx = half * kGK15Nodes[i];
        const double fsum = f(mid + dx) + f(mid - dx);
        k15 += kGK15WeightsK[i] * fsum;
        if (i % 2 == 1)
            g7 += kGK15WeightsG[i / 2] * fsum;
    }
    k15 *= half;
    g7 *= half;

    const double diff = std::fabs(k15 - g7);
    err = std::min(diff, std::pow(200.0 * diff, 1.5));
    if (!std::isfinite(k15))
        throw DomainError("integrand produced a non-finite value");
    return k15;
}

} // namespace detail

// Adaptive bisection on [a,b]: repeatedly split the interval carrying the
// largest error estimate until the summed error meets the tolerance.
// Deterministic for a given integrand and options.
template <class F>
double integrate_adaptive(const F& f, double a, double b, const QuadratureOptions& opt = {}) {
    struct Segment {
        double a, b, value, error;
    };

    std::vector<Segment> segs;
    segs.reserve(64);
    double err0;
    const double v0 = detail::gk15_panel(f, a, b, err0);
    segs.push_back({a, b, v0, err0});

    double total = v0;
    double total_err = err0;
    while (total_err > std::max(opt.abs_tol, opt.rel_tol * std::fabs(total))) {
        if (static_cast<int>(segs.size()) >= opt.max_intervals)
            throw QuadratureError("interval budget exhausted before reaching tolerance");

        auto worst = std::max_element(
            segs.begin(), segs.end(),
            [](const Segment& x, const Segment& y) { return x.error < y.error; });
        const Segment seg = *worst;
        const double mid = 0.5 * (seg.a + seg.b);
        if (mid <= seg.a || mid >= seg.b)
            throw QuadratureError("interval collapsed below floating-point resolution");

        double el, er;
        const double vl = detail::gk15_panel(f, seg.a, mid, el);
        const double vr = detail::gk15_panel(f, mid, seg.b, er);
        *worst = {seg.a, mid, vl, el};
        segs.push_back({mid, seg.b, vr, er});

        total = 0.0;
        total_err = 0.0;
        for (const Segment& s : segs) {
            total += s.value;
            total_err += s.error;
        }
    }
    return total;
}

} // namespace qphase
