#include "loglap/norms.hpp"

#include "loglap/assembly.hpp"
#include "loglap/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace loglap {

std::vector<double> load_vector(const Mesh& mesh, const std::function<double(double)>& f,
                                bool singular_left, bool singular_right,
                                const LoadParams& params) {
    const int n = mesh.node_count();
    std::vector<double> F(n, 0.0);
    for (int e = 0; e <= mesh.N; e++) {
        const double a = mesh.nodes[e], b = mesh.nodes[e + 1];
        auto down = [&](double x) { return f(x) * (b - x) / mesh.h; };
        auto up = [&](double x) { return f(x) * (x - a) / mesh.h; };
        if (e == 0 && singular_left) {
            F[e] += integrate_graded(down, a, b, SingularEnd::Left, params.depth,
                                     params.order);
            F[e + 1] +=
                integrate_graded(up, a, b, SingularEnd::Left, params.depth, params.order);
        } else if (e == mesh.N && singular_right) {
            F[e] += integrate_graded(down, a, b, SingularEnd::Right, params.depth,
                                     params.order);
            F[e + 1] += integrate_graded(up, a, b, SingularEnd::Right, params.depth,
                                         params.order);
        } else {
            F[e] += integrate_composite(down, a, b, 2, params.order);
            F[e + 1] += integrate_composite(up, a, b, 2, params.order);
        }
    }
    return F;
}

std::vector<double> mass_weighted_load(const Mesh& mesh,
                                       const std::vector<double>& nodal_values) {
    if ((int)nodal_values.size() != mesh.node_count())
        throw std::invalid_argument("mass_weighted_load: length mismatch");
    return assemble_mass(mesh).multiply(nodal_values);
}

double error_l2(const std::function<double(double)>& exact, const FemFunction& approx,
                std::optional<std::pair<double, double>> window) {
    const Mesh& mesh = approx.mesh;
    double wa = 0.0, wb = mesh.L;
    if (window) {
        wa = window->first;
        wb = window->second;
        if (wa < 0.0 || wb > mesh.L || !(wa < wb))
            throw std::invalid_argument("error_l2: window must be contained in [0,L]");
    }
    auto sq = [&](double x) {
        const double d = exact(x) - approx(x);
        return d * d;
    };
    double acc = 0.0;
    for (int e = 0; e <= mesh.N; e++) {
        const double a = std::max(mesh.nodes[e], wa);
        const double b = std::min(mesh.nodes[e + 1], wb);
        if (!(a < b))
            continue;
        if (a == 0.0)
            acc += integrate_graded(sq, a, b, SingularEnd::Left, 24, 12);
        else if (b == mesh.L)
            acc += integrate_graded(sq, a, b, SingularEnd::Right, 24, 12);
        else
            acc += integrate_composite(sq, a, b, 2, 12);
    }
    return std::sqrt(acc);
}

double error_sup(const std::function<double(double)>& exact, const FemFunction& approx,
                 int samples_per_element, double* argmax_x) {
    if (samples_per_element < 2)
        throw std::invalid_argument("error_sup: need at least 2 samples per element");
    const Mesh& mesh = approx.mesh;
    double best = 0.0, best_x = 0.0;
    for (int e = 0; e <= mesh.N; e++) {
        for (int k = 0; k < samples_per_element; k++) {
            // Last element includes x = L; elsewhere the right node belongs
            // to the next element.
            if (k == samples_per_element - 1 && e < mesh.N)
                continue;
            const double t = (double)k / (samples_per_element - 1);
            const double x = mesh.nodes[e] + t * mesh.h;
            const double d = std::fabs(exact(x) - approx(x));
            if (d > best) {
                best = d;
                best_x = x;
            }
        }
    }
    if (argmax_x)
        *argmax_x = best_x;
    return best;
}

} // namespace loglap
