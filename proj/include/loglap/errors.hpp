#ifndef LOGLAP_ERRORS_HPP
#define LOGLAP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace loglap {

// Thrown when an iterative refinement loop exhausts its budget. Carries the
// best estimate so callers can decide whether it is still usable.
class convergence_error : public std::runtime_error {
  public:
    convergence_error(const std::string& what, double best, double achieved)
        : std::runtime_error(what), best_estimate(best), achieved_error(achieved) {}
    double best_estimate;
    double achieved_error;
};

// Thrown when a quadrature rule hits a non-finite integrand value.
class quad_eval_error : public std::runtime_error {
  public:
    quad_eval_error(const std::string& what, double node)
        : std::runtime_error(what), node(node) {}
    double node;
};

// Thrown by the factorization when a pivot falls below the singularity
// threshold (expected exactly at the critical lengths L_k).
class singular_matrix_error : public std::runtime_error {
  public:
    singular_matrix_error(const std::string& what, int pivot_index)
        : std::runtime_error(what), pivot_index(pivot_index) {}
    int pivot_index;
};

// Thrown by the golden-section search when the bracket shows no interior
// improvement over its endpoints.
class bracket_error : public std::runtime_error {
  public:
    explicit bracket_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace loglap

#endif
