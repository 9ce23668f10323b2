#ifndef LOGLAP_QUADRATURE_HPP
#define LOGLAP_QUADRATURE_HPP

#include <functional>
#include <vector>

namespace loglap {

// Gauss-Legendre rule on (-1,1).
struct QuadRule {
    std::vector<double> nodes;
    std::vector<double> weights;
    int order() const { return (int)nodes.size(); }
};

// n-point Gauss-Legendre rule, 1 <= n <= 64. Rules are cached.
const QuadRule& gauss_legendre(int n);

enum class SingularEnd { None, Left, Right };

// Integrate f over [a,b] with an n-point rule on a single panel.
double integrate_panel(const std::function<double(double)>& f, double a, double b, int order);

// Composite rule over [a,b]: `panels` equal panels of the given order.
double integrate_composite(const std::function<double(double)>& f, double a, double b,
                           int panels, int order);

// Gauss-Legendre on dyadically graded subintervals accumulating toward the
// singular end (panel lengths halving, `depth` levels). The innermost sliver
// is dropped once its contribution falls below 1e-16 of the running total.
// With SingularEnd::None this is a plain composite rule with `depth` panels.
double integrate_graded(const std::function<double(double)>& f, double a, double b,
                        SingularEnd singular_end, int depth, int order);

// Composite rule over [a,b] with panels refined geometrically toward both
// endpoints (integrand bounded, endpoint derivatives possibly unbounded).
double integrate_graded_both(const std::function<double(double)>& f, double a, double b,
                             int depth, int order);

// Integrate f over [a,b] splitting panels geometrically away from a > 0 so
// that no panel has right/left endpoint ratio above 2. Suited to 1/t-type
// integrands with the origin to the left of a.
double integrate_geometric(const std::function<double(double)>& f, double a, double b,
                           int order);

} // namespace loglap

#endif
