#ifndef LOGLAP_PROBLEMS_HPP
#define LOGLAP_PROBLEMS_HPP

#include "loglap/loglap_eval.hpp"
#include "loglap/mesh.hpp"
#include "loglap/sym_matrix.hpp"

#include <optional>
#include <string>
#include <vector>

namespace loglap {

// A named Dirichlet problem. Centered intervals (-L,L) are realized on the
// mesh interval (0, 2L); `shift` maps mesh to problem coordinates
// (x_problem = x_mesh + shift).
struct ProblemSpec {
    enum class Operator { Log, Frac };

    Operator op = Operator::Log;
    double s = 0.0; // fractional order, used iff op == Frac
    std::string name;
    double length = 0.0; // mesh interval length
    double shift = 0.0;
    CompactFunction rhs; // mesh coordinates
    bool rhs_singular_left = false;
    bool rhs_singular_right = false;
    bool nodal_rhs = false;  // F = M * (nodal samples of the operator on `profile`)
    CompactFunction profile; // target function of the nodal pipeline
    std::optional<CompactFunction> exact; // mesh coordinates
};

// Problems: "torsion" (rhs = 1; fractional when s given, exact solution
// known), "u1"/"u2"/"u3" (explicit solutions of the logarithmic operator),
// "udef" (optimal-regularity profile, nodally constructed right-hand side).
// L is the half-length of the centered interval (-L, L).
ProblemSpec make_problem(const std::string& name, double L,
                         std::optional<double> s = std::nullopt);

struct LinearSolveInfo {
    double rcond = 0.0;
    bool near_singular = false;
};

// Solve A x = F by symmetric-indefinite (Bunch-Kaufman) factorization with
// one iterative-refinement step. Throws singular_matrix_error when a pivot
// falls below 1e-14 * max|A|.
std::vector<double> linear_solve(const SymMatrix& A, const std::vector<double>& F,
                                 LinearSolveInfo* info = nullptr);

struct SolveResult {
    FemFunction solution;
    double residual_norm = 0.0; // max-norm of A alpha - F
    bool near_singular = false;
    bool rhs_truncated_at_boundary = false; // nodal operator samples truncated
    ProblemSpec problem;
};

SolveResult solve_dirichlet(const ProblemSpec& problem, int N);
SolveResult solve_manufactured(const std::string& name, double L, int N);

// Two-column CSV (x_i, alpha_i) in problem coordinates, 17 significant digits.
void write_solution_csv(const SolveResult& result, const std::string& path);

} // namespace loglap

#endif
