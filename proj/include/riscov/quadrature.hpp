#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

namespace riscov {

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;
    bool converged = false;
};

namespace detail {

// Gauss 7 / Kronrod 15 node-weight table on [-1,1] (positive half).
inline constexpr double kGK15Nodes[8] = {
    0.000000000000000, 0.207784955007898, 0.405845151377397, 0.586087235467691,
    0.741531185599394, 0.864864423359769, 0.949107912342759, 0.991455371120813};
inline constexpr double kGK15WeightsK[8] = {
    0.209482141084728, 0.204432940075298, 0.190350578064785, 0.169004726639267,
    0.140653259715525, 0.104790010322250, 0.063092092629979, 0.022935322010529};
inline constexpr double kGK15WeightsG[8] = {
    0.417959183673469, 0.0, 0.381830050505119, 0.0,
    0.279705391489277, 0.0, 0.129484966168870, 0.0};

template <class F>
void gk15(const F& f, double a, double b, double& k15, double& err) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double f0 = f(mid);
    double sk = kGK15WeightsK[0] * f0;
    double sg = kGK15WeightsG[0] * f0;
    for (int i = 1; i < 8; ++i) {
        const double dx = half * kGK15Nodes[i];
        const double fi = f(mid + dx) + f(mid - dx);
        sk += kGK15WeightsK[i] * fi;
        sg += kGK15WeightsG[i] * fi;
    }
    k15 = sk * half;
    const double g7 = sg * half;
    double diff = std::abs(k15 - g7);
    err = 200.0 * diff * std::sqrt(diff);
    if (!std::isfinite(err)) err = diff;
}

}  // namespace detail

// Adaptive Gauss-Kronrod on a finite interval; always bisects the segment
// with the largest error estimate.
template <class F>
QuadratureResult integrate_adaptive(const F& f, double a, double b,
                                    double abs_tol = 1e-13, double rel_tol = 1e-12,
                                    int max_intervals = 5000) {
    struct Seg {
        double a, b, val, err;
        bool operator<(const Seg& o) const { return err < o.err; }
    };
    std::vector<Seg> heap;
    heap.reserve(256);

    double v0, e0;
    detail::gk15(f, a, b, v0, e0);
    heap.push_back({a, b, v0, e0});

    double total = v0;
    double total_err = e0;
    int used = 1;
    while (total_err > abs_tol && total_err > rel_tol * std::abs(total) &&
           used < max_intervals) {
        std::pop_heap(heap.begin(), heap.end());
        Seg s = heap.back();
        heap.pop_back();
        const double mid = 0.5 * (s.a + s.b);
        if (mid <= s.a || mid >= s.b) {  // interval at machine resolution
            s.err = 0.0;
            heap.push_back(s);
            std::push_heap(heap.begin(), heap.end());
            total_err = 0.0;
            for (const Seg& q : heap) total_err += q.err;
            if (total_err <= abs_tol || total_err <= rel_tol * std::abs(total)) break;
            continue;
        }
        double v1, e1, v2, e2;
        detail::gk15(f, s.a, mid, v1, e1);
        detail::gk15(f, mid, s.b, v2, e2);
        ++used;
        total += (v1 + v2) - s.val;
        total_err += (e1 + e2) - s.err;
        heap.push_back({s.a, mid, v1, e1});
        std::push_heap(heap.begin(), heap.end());
        heap.push_back({mid, s.b, v2, e2});
        std::push_heap(heap.begin(), heap.end());
        if ((used & 63) == 0) {  // resync the accumulated error now and then
            total = 0.0;
            total_err = 0.0;
            for (const Seg& q : heap) {
                total += q.val;
                total_err += q.err;
            }
        }
    }
    total = 0.0;
    total_err = 0.0;
    for (const Seg& q : heap) {
        total += q.val;
        total_err += q.err;
    }
    const bool ok = total_err <= abs_tol || total_err <= rel_tol * std::abs(total);
    return {total, total_err, ok};
}

}  // namespace riscov
