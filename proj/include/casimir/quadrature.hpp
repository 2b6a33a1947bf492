#ifndef CASIMIR_QUADRATURE_HPP
#define CASIMIR_QUADRATURE_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <queue>
#include <stdexcept>
#include <string>
#include <vector>

namespace casimir {

/// Thrown when an adaptive integral or a Matsubara sum fails to reach its
/// tolerance within the subdivision/term budget; carries the partial result.
class ConvergenceError : public std::runtime_error {
  public:
    ConvergenceError(const std::string& what, double partial, double est_error)
        : std::runtime_error(what), partial(partial), est_error(est_error) {}

    double partial;
    double est_error;
};

struct QuadResult {
    double value = 0.0;
    double error = 0.0;
    std::size_t evaluations = 0;
};

namespace detail {

// Gauss-Kronrod 7-15 nodes and weights on [-1, 1] (QUADPACK values).
inline constexpr double gk_nodes[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};
inline constexpr double gk_weights[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};
inline constexpr double gauss_weights[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

template <typename F>
QuadResult gk15(F&& f, double a, double b) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double fv[15];
    for (int i = 0; i < 7; ++i) {
        fv[i] = f(mid - half * gk_nodes[i]);
        fv[14 - i] = f(mid + half * gk_nodes[i]);
    }
    fv[7] = f(mid);

    double kronrod = 0.0, gauss = 0.0;
    for (int i = 0; i < 7; ++i)
        kronrod += gk_weights[i] * (fv[i] + fv[14 - i]);
    kronrod += gk_weights[7] * fv[7];
    // Gauss points are the odd Kronrod nodes.
    for (int i = 0; i < 3; ++i)
        gauss += gauss_weights[i] * (fv[2 * i + 1] + fv[13 - 2 * i]);
    gauss += gauss_weights[3] * fv[7];

    QuadResult r;
    r.value = kronrod * half;
    const double diff = std::abs(kronrod - gauss) * std::abs(half);
    // QUADPACK-style sharpened error estimate.
    double scale = 0.0;
    for (int i = 0; i < 15; ++i) {
        const double w = gk_weights[i < 8 ? i : 14 - i];
        scale += w * std::abs(fv[i] - kronrod / 2.0);
    }
    scale *= std::abs(half);
    if (scale > 0.0 && diff > 0.0) {
        const double ratio = std::pow(200.0 * diff / scale, 1.5);
        r.error = ratio < 1.0 ? scale * ratio : scale;
        r.error = std::min(r.error, diff > 0.0 ? diff : r.error);
        r.error = std::max(r.error, diff * 1e-6);
    } else {
        r.error = diff;
    }
    r.evaluations = 15;
    return r;
}

}  // namespace detail

/// Globally adaptive GK15 on [a, b]: repeatedly bisects the interval with
/// the largest error estimate until the total error satisfies
/// err <= max(rel_tol * |I|, abs_tol). Final value is a left-to-right sum
/// over the panels, so the result is deterministic.
template <typename F>
QuadResult integrate_adaptive(F&& f, double a, double b, double rel_tol,
                              double abs_tol, int max_subdivisions) {
    struct Panel {
        double a, b, value, error;
        std::size_t order;
    };
    struct ByError {
        bool operator()(const Panel& x, const Panel& y) const {
            if (x.error != y.error) return x.error < y.error;
            return x.order > y.order;
        }
    };

    std::priority_queue<Panel, std::vector<Panel>, ByError> heap;
    std::size_t order = 0;
    std::size_t evals = 0;

    double total = 0.0;
    double total_err = 0.0;
    auto push = [&](double lo, double hi) {
        QuadResult q = detail::gk15(f, lo, hi);
        evals += q.evaluations;
        heap.push(Panel{lo, hi, q.value, q.error, order++});
        total += q.value;
        total_err += q.error;
    };
    push(a, b);

    int splits = 0;
    while (total_err > std::max(rel_tol * std::abs(total), abs_tol)) {
        if (splits >= max_subdivisions) {
            throw ConvergenceError(
                "integrate_adaptive: subdivision budget exhausted", total,
                total_err);
        }
        Panel worst = heap.top();
        const double mid = 0.5 * (worst.a + worst.b);
        if (mid <= worst.a || mid >= worst.b) break;  // at float resolution
        heap.pop();
        total -= worst.value;
        total_err -= worst.error;
        push(worst.a, mid);
        push(mid, worst.b);
        ++splits;
    }

    // Deterministic left-to-right final merge.
    std::vector<Panel> panels;
    panels.reserve(heap.size());
    while (!heap.empty()) {
        panels.push_back(heap.top());
        heap.pop();
    }
    std::sort(panels.begin(), panels.end(),
              [](const Panel& x, const Panel& y) { return x.a < y.a; });
    QuadResult out;
    for (const Panel& p : panels) {
        out.value += p.value;
        out.error += p.error;
    }
    out.evaluations = evals;
    return out;
}

}  // namespace casimir

#endif
