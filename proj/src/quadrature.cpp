#include "loglap/quadrature.hpp"

#include "loglap/errors.hpp"

#include <cmath>
#include <stdexcept>

namespace loglap {

namespace {

QuadRule build_rule(int n) {
    // Nodes are the roots of P_n, found by Newton iteration on the
    // three-term recurrence; weights w = 2/((1-x^2) P_n'(x)^2).
    QuadRule r;
    r.nodes.resize(n);
    r.weights.resize(n);
    const double pi = 3.14159265358979323846264338328;
    const int m = (n + 1) / 2;
    for (int i = 0; i < m; i++) {
        double x = std::cos(pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; it++) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; k++) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::fabs(dx) < 1e-16)
                break;
        }
        r.nodes[i] = -x;
        r.nodes[n - 1 - i] = x;
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        r.weights[i] = w;
        r.weights[n - 1 - i] = w;
    }
    if (n % 2 == 1)
        r.nodes[n / 2] = 0.0;
    return r;
}

const std::vector<QuadRule>& rule_table() {
    static const std::vector<QuadRule> table = [] {
        std::vector<QuadRule> t;
        t.reserve(65);
        t.push_back(QuadRule{}); // index 0 unused
        for (int n = 1; n <= 64; n++)
            t.push_back(build_rule(n));
        return t;
    }();
    return table;
}

} // namespace

const QuadRule& gauss_legendre(int n) {
    if (n < 1 || n > 64)
        throw std::invalid_argument("gauss_legendre: order must lie in [1,64]");
    return rule_table()[n];
}

double integrate_panel(const std::function<double(double)>& f, double a, double b, int order) {
    const QuadRule& r = gauss_legendre(order);
    const double mid = 0.5 * (a + b);
    const double hal = 0.5 * (b - a);
    double acc = 0.0;
    for (int i = 0; i < r.order(); i++) {
        const double x = mid + hal * r.nodes[i];
        const double v = f(x);
        if (!std::isfinite(v))
            throw quad_eval_error("integrate: non-finite integrand value", x);
        acc += r.weights[i] * v;
    }
    return acc * hal;
}

double integrate_composite(const std::function<double(double)>& f, double a, double b,
                           int panels, int order) {
    if (panels < 1)
        panels = 1;
    double acc = 0.0;
    const double w = (b - a) / panels;
    for (int k = 0; k < panels; k++)
        acc += integrate_panel(f, a + k * w, a + (k + 1) * w, order);
    return acc;
}

double integrate_graded(const std::function<double(double)>& f, double a, double b,
                        SingularEnd singular_end, int depth, int order) {
    if (!(a < b))
        throw std::invalid_argument("integrate_graded: requires a < b");
    if (singular_end == SingularEnd::None)
        return integrate_composite(f, a, b, depth, order);

    const double len = b - a;
    double acc = 0.0;
    double frac = 1.0; // current panel's outer offset from the singular end
    for (int k = 0; k < depth; k++) {
        const double lo = frac * 0.5;
        double pa, pb;
        if (singular_end == SingularEnd::Left) {
            pa = a + lo * len;
            pb = a + frac * len;
        } else {
            pa = b - frac * len;
            pb = b - lo * len;
        }
        const double part = integrate_panel(f, pa, pb, order);
        acc += part;
        frac = lo;
        if (std::fabs(part) < 1e-16 * std::fabs(acc))
            return acc;
    }
    // Closing sliver next to the singular end; its Gauss nodes stay interior,
    // so integrable endpoint singularities are still evaluated.
    const double part = singular_end == SingularEnd::Left
                            ? integrate_panel(f, a, a + frac * len, order)
                            : integrate_panel(f, b - frac * len, b, order);
    return acc + part;
}

double integrate_graded_both(const std::function<double(double)>& f, double a, double b,
                             int depth, int order) {
    const double mid = 0.5 * (a + b);
    return integrate_graded(f, a, mid, SingularEnd::Left, depth, order) +
           integrate_graded(f, mid, b, SingularEnd::Right, depth, order);
}

double integrate_geometric(const std::function<double(double)>& f, double a, double b,
                           int order) {
    if (!(a < b))
        return 0.0;
    double acc = 0.0;
    double lo = a;
    while (lo < b) {
        const double hi = (lo > 0.0 && 2.0 * lo < b) ? 2.0 * lo : b;
        acc += integrate_panel(f, lo, hi, order);
        lo = hi;
    }
    return acc;
}

} // namespace loglap
