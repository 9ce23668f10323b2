#include "loglap/mesh.hpp"

#include "loglap/quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace loglap {

Mesh build_mesh(double L, int N) {
    if (!(L > 0.0))
        throw std::invalid_argument("build_mesh: L must be positive");
    if (N < 1)
        throw std::invalid_argument("build_mesh: N must be at least 1");
    Mesh m;
    m.L = L;
    m.N = N;
    m.h = L / (N + 1);
    m.nodes.resize(N + 2);
    for (int i = 0; i <= N + 1; i++)
        m.nodes[i] = i * m.h;
    m.nodes[N + 1] = L;
    return m;
}

int Mesh::element_of(double x) const {
    int k = (int)std::floor(x / h);
    if (k < 0)
        k = 0;
    if (k > N)
        k = N;
    // Correct rounding at node boundaries so the left-closed convention holds
    // with respect to the stored node coordinates.
    if (x < nodes[k] && k > 0)
        k--;
    else if (k < N && x >= nodes[k + 1])
        k++;
    return k;
}

double basis_eval(const Mesh& mesh, int i, double x) {
    if (i < 0 || i > mesh.N + 1)
        throw std::invalid_argument("basis_eval: index out of range");
    if (x < 0.0 || x > mesh.L)
        return 0.0;
    const int k = mesh.element_of(x);
    // On element k only phi_k (down-slope) and phi_{k+1} (up-slope) are alive.
    // The stored element width keeps the nodal property exact.
    const double w = mesh.nodes[k + 1] - mesh.nodes[k];
    if (i == k)
        return (mesh.nodes[k + 1] - x) / w;
    if (i == k + 1)
        return (x - mesh.nodes[k]) / w;
    return 0.0;
}

double FemFunction::operator()(double x) const {
    if (x < 0.0 || x > mesh.L)
        return 0.0;
    const int k = mesh.element_of(x);
    const double t = (x - mesh.nodes[k]) / (mesh.nodes[k + 1] - mesh.nodes[k]);
    return coeffs[k] * (1.0 - t) + coeffs[k + 1] * t;
}

double fem_eval(const FemFunction& f, double x) {
    return f(x);
}

FemFunction quasi_interpolate(const std::function<double(double)>& v, const Mesh& mesh,
                              int quad_order) {
    if (quad_order < 1)
        throw std::invalid_argument("quasi_interpolate: quadrature order must be >= 1");
    const int n = mesh.node_count();
    std::vector<double> num(n, 0.0);
    for (int e = 0; e <= mesh.N; e++) {
        const double a = mesh.nodes[e];
        const double b = mesh.nodes[e + 1];
        // Down-slope of phi_e and up-slope of phi_{e+1} on this element.
        num[e] += integrate_panel(
            [&](double x) { return v(x) * (b - x) / mesh.h; }, a, b, quad_order);
        num[e + 1] += integrate_panel(
            [&](double x) { return v(x) * (x - a) / mesh.h; }, a, b, quad_order);
    }
    std::vector<double> coeffs(n);
    for (int k = 0; k < n; k++) {
        const double den = (k == 0 || k == n - 1) ? 0.5 * mesh.h : mesh.h;
        coeffs[k] = num[k] / den;
    }
    return FemFunction{mesh, std::move(coeffs)};
}

FemFunction nodal_interpolate(const std::vector<double>& values, const Mesh& mesh) {
    if ((int)values.size() != mesh.node_count())
        throw std::invalid_argument("nodal_interpolate: length mismatch");
    return FemFunction{mesh, values};
}

} // namespace loglap
