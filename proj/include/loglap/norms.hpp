#ifndef LOGLAP_NORMS_HPP
#define LOGLAP_NORMS_HPP

#include "loglap/mesh.hpp"

#include <functional>
#include <optional>
#include <utility>
#include <vector>

namespace loglap {

struct LoadParams {
    int order = 16;
    int depth = 40; // grading depth on elements flagged singular
};

// Load vector F_i = int f phi_i. Elements touching a flagged endpoint use
// graded quadrature toward it.
std::vector<double> load_vector(const Mesh& mesh, const std::function<double(double)>& f,
                                bool singular_left, bool singular_right,
                                const LoadParams& params = {});

// M * g for nodal values g (the nodally sampled right-hand side construction).
std::vector<double> mass_weighted_load(const Mesh& mesh,
                                       const std::vector<double>& nodal_values);

// L2 error sqrt(int_window |exact - approx|^2), window defaulting to (0,L).
// Per-element composite Gauss, elements split at window boundaries, graded
// panels on pieces touching the domain endpoints.
double error_l2(const std::function<double(double)>& exact, const FemFunction& approx,
                std::optional<std::pair<double, double>> window = std::nullopt);

// Sup error over a sampled grid that contains all nodes. argmax_x, when
// given, receives a sample point attaining the maximum.
double error_sup(const std::function<double(double)>& exact, const FemFunction& approx,
                 int samples_per_element, double* argmax_x = nullptr);

} // namespace loglap

#endif
