#ifndef LOGLAP_MESH_HPP
#define LOGLAP_MESH_HPP

#include <functional>
#include <vector>

namespace loglap {

// Uniform partition of (0,L) into N+1 elements, nodes x_i = i*h,
// i = 0..N+1, h = L/(N+1). Immutable after construction.
struct Mesh {
    double L = 0.0;
    int N = 0;
    double h = 0.0;
    std::vector<double> nodes;

    int node_count() const { return N + 2; }
    int element_count() const { return N + 1; }
    // Element index containing x under the left-closed convention
    // x in [x_k, x_{k+1}); x = L belongs to the last element.
    int element_of(double x) const;
};

Mesh build_mesh(double L, int N);

// Hat basis value phi_i(x). Interior i peaks at x_i with support
// [x_{i-1}, x_{i+1}]; i = 0 and i = N+1 are the boundary half-hats.
// Zero outside [0,L].
double basis_eval(const Mesh& mesh, int i, double x);

// Piecewise-linear function spanned by the hat basis: coefficient i
// multiplies phi_i. Evaluation outside [0,L] is exactly zero.
struct FemFunction {
    Mesh mesh;
    std::vector<double> coeffs;

    double operator()(double x) const;
};

double fem_eval(const FemFunction& f, double x);

// Quasi-interpolator: coefficients a_k = (int v phi_k) / (int phi_k),
// numerators by per-element Gauss-Legendre of the given order, denominators
// exact (h/2 at the boundary, h inside).
FemFunction quasi_interpolate(const std::function<double(double)>& v, const Mesh& mesh,
                              int quad_order);

// FemFunction with prescribed nodal coefficients.
FemFunction nodal_interpolate(const std::vector<double>& values, const Mesh& mesh);

} // namespace loglap

#endif
