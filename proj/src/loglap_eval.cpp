#include "loglap/loglap_eval.hpp"

#include "loglap/errors.hpp"
#include "loglap/quadrature.hpp"
#include "loglap/special_functions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace loglap {

CompactFunction make_compact(std::function<double(double)> f, double lo, double hi,
                             std::vector<double> kinks) {
    CompactFunction c;
    c.f = std::move(f);
    c.lo = lo;
    c.hi = hi;
    c.kinks = std::move(kinks);
    c.kinks.push_back(lo);
    c.kinks.push_back(hi);
    std::sort(c.kinks.begin(), c.kinks.end());
    c.kinks.erase(std::unique(c.kinks.begin(), c.kinks.end()), c.kinks.end());
    return c;
}

CompactFunction compact_basis(const Mesh& mesh, int i) {
    const double lo = (i == 0) ? 0.0 : mesh.nodes[i - 1];
    const double hi = (i == mesh.N + 1) ? mesh.L : mesh.nodes[i + 1];
    return make_compact([mesh, i](double x) { return basis_eval(mesh, i, x); }, lo, hi,
                        {lo, mesh.nodes[i], hi});
}

CompactFunction compact_fem(const FemFunction& u) {
    return make_compact([u](double x) { return u(x); }, 0.0, u.mesh.L, u.mesh.nodes);
}

namespace {

// Gauss orders used by the refinement ladder.
const int kLevelOrder[] = {8, 12, 16, 24, 32, 40, 48, 64};

// Inner integral int_{tmin}^{1} [2u(x) - u(x+t) - u(x-t)]/t dt with panel
// breakpoints at the distances from x to the kinks of u.
double inner_integral(const CompactFunction& u, double x, double tmin, int order) {
    const double ux2 = 2.0 * u(x);
    auto g = [&](double t) { return (ux2 - u(x + t) - u(x - t)) / t; };

    std::vector<double> bp;
    bp.push_back(1.0);
    for (double k : u.kinks) {
        const double d = std::fabs(k - x);
        if (d > tmin && d < 1.0)
            bp.push_back(d);
    }
    std::sort(bp.begin(), bp.end());
    bp.erase(std::unique(bp.begin(), bp.end(),
                         [](double a, double b) { return std::fabs(a - b) < 1e-15; }),
             bp.end());

    // u may be merely log-Hoelder at the breakpoints, so every segment is
    // integrated with dyadic grading toward both of its ends.
    double acc = 0.0;
    double lo = tmin;
    for (double hi : bp) {
        if (hi <= lo)
            continue;
        if (lo <= 1e-300) {
            // Segment touching t = 0: the symmetric difference keeps the
            // integrand bounded there.
            const double mid = 0.5 * hi;
            acc += integrate_graded(g, 0.0, mid, SingularEnd::Left, 48, order);
            acc += integrate_graded(g, mid, hi, SingularEnd::Right, 44, order);
        } else {
            acc += integrate_graded_both(g, lo, hi, 44, order);
        }
        lo = hi;
    }
    return acc;
}

// Far-field integral int_{supp u \ (x-1,x+1)} u(y)/|x-y| dy.
double far_integral(const CompactFunction& u, double x, int order) {
    auto piece = [&](double a, double b) {
        if (!(a < b))
            return 0.0;
        auto f = [&](double y) { return u(y) / std::fabs(x - y); };
        double acc = 0.0;
        double lo = a;
        for (double k : u.kinks) {
            if (k > a && k < b) {
                acc += integrate_graded_both(f, lo, k, 30, order);
                lo = k;
            }
        }
        acc += integrate_graded_both(f, lo, b, 30, order);
        return acc;
    };
    return piece(u.lo, std::min(u.hi, x - 1.0)) + piece(std::max(u.lo, x + 1.0), u.hi);
}

} // namespace

double eval_loglap(const CompactFunction& u, double x, double tol, LoglapEvalInfo* info,
                   int max_levels) {
    double tmin = 0.0;
    bool truncated = false;
    if (std::fabs(x - u.lo) < 1e-12 || std::fabs(x - u.hi) < 1e-12) {
        // Boundary-node sampling: the symmetrized integrand may fail to be
        // integrable at the exact endpoint, truncate below t = 1e-12.
        tmin = 1e-12;
        truncated = true;
    }
    // Intrinsic double-precision floor: classifying x +- t against a kink at
    // distance d carries an O(ulp(kink)/d) error in the integral when the
    // integrand peaks like 1/d there.
    double dmin = std::numeric_limits<double>::infinity();
    double scale = 1.0;
    for (double k : u.kinks) {
        const double d = std::fabs(k - x);
        if (d > 1e-300 && d < 1.0)
            dmin = std::min(dmin, d);
        scale = std::max(scale, std::fabs(k));
    }
    if (std::isfinite(dmin))
        tol = std::max(tol, 4.0 * std::numeric_limits<double>::epsilon() * scale / dmin);
    const double zero_order = constants().rho1 * u(x);

    double prev = 0.0;
    double diff = 0.0;
    if (max_levels > 8)
        max_levels = 8;
    for (int m = 0; m < max_levels; m++) {
        const int order = kLevelOrder[m];
        const double val = inner_integral(u, x, tmin, order) - far_integral(u, x, order) +
                           zero_order;
        if (m > 0) {
            diff = std::fabs(val - prev);
            if (diff < tol) {
                if (info) {
                    info->achieved_error = diff;
                    info->levels = m + 1;
                    info->truncated = truncated;
                }
                return val;
            }
        }
        prev = val;
    }
    if (info) {
        info->achieved_error = diff;
        info->levels = max_levels;
        info->truncated = truncated;
    }
    throw convergence_error("eval_loglap: refinement budget exhausted", prev, diff);
}

} // namespace loglap
