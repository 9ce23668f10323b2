#ifndef LOGLAP_LOGLAP_EVAL_HPP
#define LOGLAP_LOGLAP_EVAL_HPP

#include "loglap/mesh.hpp"

#include <functional>
#include <vector>

namespace loglap {

// Function with known compact support [lo,hi]; f must already return 0
// outside. `kinks` lists points where f is not smooth (used to place
// quadrature breakpoints).
struct CompactFunction {
    std::function<double(double)> f;
    double lo = 0.0;
    double hi = 0.0;
    std::vector<double> kinks;

    double operator()(double x) const { return f(x); }
};

CompactFunction make_compact(std::function<double(double)> f, double lo, double hi,
                             std::vector<double> kinks = {});

// Wrap a single hat basis function.
CompactFunction compact_basis(const Mesh& mesh, int i);

// Wrap a FemFunction (kinks at every node).
CompactFunction compact_fem(const FemFunction& u);

struct LoglapEvalInfo {
    double achieved_error = 0.0;
    int levels = 0;
    bool truncated = false; // inner integral truncated at t >= 1e-12
};

// Pointwise evaluation of the logarithmic Laplacian,
//   L u(x) = int_0^1 [2u(x) - u(x+t) - u(x-t)]/t dt
//            - int_{supp u \ (x-1,x+1)} u(y)/|x-y| dy + rho_1 u(x).
// Successive refinement levels must agree within tol; otherwise a
// convergence_error carrying the best estimate is thrown. Evaluation at a
// support endpoint truncates the inner integral at t >= 1e-12 and reports it
// through `info`.
double eval_loglap(const CompactFunction& u, double x, double tol,
                   LoglapEvalInfo* info = nullptr, int max_levels = 7);

} // namespace loglap

#endif
