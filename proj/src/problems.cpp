#include "loglap/problems.hpp"

#include "loglap/assembly.hpp"
#include "loglap/errors.hpp"
#include "loglap/norms.hpp"
#include "loglap/special_functions.hpp"

#include <lapacke.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace loglap {

namespace {

// h_Omega(x) = -ln(L^2 - x^2) on the centered interval (-L, L). Quadrature
// nodes can round onto the endpoints, where the integrable singularity would
// evaluate to infinity; clamp the distance product away from zero.
double h_omega(double xc, double L) {
    const double t = std::max((L - xc) * (L + xc), 1e-300);
    return -std::log(t);
}

} // namespace

ProblemSpec make_problem(const std::string& name, double L, std::optional<double> s) {
    if (!(L > 0.0))
        throw std::invalid_argument("make_problem: L must be positive");
    ProblemSpec p;
    p.name = name;
    p.length = 2.0 * L;
    p.shift = -L;
    const double r1 = constants().rho1;
    const double shift = p.shift;

    if (name == "torsion") {
        p.rhs = make_compact([](double) { return 1.0; }, 0.0, p.length);
        if (s) {
            if (!(*s > 0.0) || !(*s < 0.5))
                throw std::domain_error("make_problem: s must lie in (0, 1/2)");
            p.op = ProblemSpec::Operator::Frac;
            p.s = *s;
            const double sv = *s;
            const double norm = gamma_fn(1.0 + 2.0 * sv);
            p.exact = make_compact(
                [L, sv, norm, shift](double x) {
                    const double xc = x + shift;
                    const double t = (L - xc) * (L + xc);
                    return t > 0.0 ? std::pow(t, sv) / norm : 0.0;
                },
                0.0, p.length);
        }
        return p;
    }
    if (s)
        throw std::invalid_argument("make_problem: only the torsion problem takes s");

    if (name == "u1") {
        p.rhs = make_compact([L, r1, shift](double x) { return h_omega(x + shift, L) + r1; },
                             0.0, p.length);
        p.rhs_singular_left = p.rhs_singular_right = true;
        p.exact = make_compact([](double) { return 1.0; }, 0.0, p.length);
        return p;
    }
    if (name == "u2") {
        p.rhs = make_compact(
            [L, r1, shift](double x) {
                const double xc = x + shift;
                return xc * (2.0 + h_omega(xc, L) + r1);
            },
            0.0, p.length);
        p.rhs_singular_left = p.rhs_singular_right = true;
        p.exact = make_compact([shift](double x) { return x + shift; }, 0.0, p.length);
        return p;
    }
    if (name == "u3") {
        p.rhs = make_compact(
            [L, r1, shift](double x) {
                const double xc = x + shift;
                const double t = (L - xc) * (L + xc);
                const double w = t > 0.0 ? (h_omega(xc, L) + r1) * t : 0.0;
                return L * L - 3.0 * xc * xc + w;
            },
            0.0, p.length);
        p.rhs_singular_left = p.rhs_singular_right = true;
        p.exact = make_compact(
            [L, shift](double x) {
                const double xc = x + shift;
                const double t = (L - xc) * (L + xc);
                return t > 0.0 ? t : 0.0;
            },
            0.0, p.length);
        return p;
    }
    if (name == "udef") {
        // Optimal-boundary-regularity profile; behaves like ell^{1/2}(d(x)).
        p.nodal_rhs = true;
        p.profile = make_compact(
            [L, shift](double x) {
                const double xc = x + shift;
                const double arg = (L - xc) * (L + xc) / (2.0 * L * L);
                if (!(arg > 0.0))
                    return 0.0;
                return 1.0 / std::sqrt(-std::log(arg));
            },
            0.0, p.length);
        p.exact = p.profile;
        return p;
    }
    throw std::invalid_argument("make_problem: unknown problem \"" + name + "\"");
}

std::vector<double> linear_solve(const SymMatrix& A, const std::vector<double>& F,
                                 LinearSolveInfo* info) {
    const int n = A.order();
    if ((int)F.size() != n)
        throw std::invalid_argument("linear_solve: dimension mismatch");

    std::vector<double> fact(A.data(), A.data() + size_t(n) * n);
    std::vector<lapack_int> ipiv(n);
    lapack_int ret =
        LAPACKE_dsytrf(LAPACK_ROW_MAJOR, 'L', n, fact.data(), n, ipiv.data());
    if (ret > 0)
        throw singular_matrix_error("linear_solve: exactly singular pivot", ret - 1);
    if (ret < 0)
        throw std::runtime_error("linear_solve: dsytrf failed");

    // Inspect the block-diagonal factor D for pivots below the singularity
    // threshold.
    const double thresh = 1e-14 * A.max_abs();
    for (int k = 0; k < n; k++) {
        if (ipiv[k] > 0) {
            if (std::fabs(fact[size_t(k) * n + k]) < thresh)
                throw singular_matrix_error("linear_solve: near-zero pivot", k);
        } else if (k + 1 < n && ipiv[k] == ipiv[k + 1]) {
            const double d11 = fact[size_t(k) * n + k];
            const double d22 = fact[size_t(k + 1) * n + k + 1];
            const double d21 = fact[size_t(k + 1) * n + k];
            const double mean = 0.5 * (d11 + d22);
            const double rad = std::hypot(0.5 * (d11 - d22), d21);
            if (std::min(std::fabs(mean - rad), std::fabs(mean + rad)) < thresh)
                throw singular_matrix_error("linear_solve: near-zero 2x2 pivot block", k);
            k++;
        }
    }

    std::vector<double> x = F;
    ret = LAPACKE_dsytrs(LAPACK_ROW_MAJOR, 'L', n, 1, fact.data(), n, ipiv.data(),
                         x.data(), 1);
    if (ret != 0)
        throw std::runtime_error("linear_solve: dsytrs failed");

    // One iterative-refinement step tightens the residual contract.
    std::vector<double> r = A.multiply(x);
    for (int i = 0; i < n; i++)
        r[i] = F[i] - r[i];
    ret = LAPACKE_dsytrs(LAPACK_ROW_MAJOR, 'L', n, 1, fact.data(), n, ipiv.data(),
                         r.data(), 1);
    if (ret == 0)
        for (int i = 0; i < n; i++)
            x[i] += r[i];

    if (info) {
        // 1-norm of A (symmetric: max row sum).
        double anorm = 0.0;
        for (int i = 0; i < n; i++) {
            double row = 0.0;
            for (int j = 0; j < n; j++)
                row += std::fabs(A(i, j));
            anorm = std::max(anorm, row);
        }
        double rcond = 0.0;
        LAPACKE_dsycon(LAPACK_ROW_MAJOR, 'L', n, fact.data(), n, ipiv.data(), anorm,
                       &rcond);
        info->rcond = rcond;
        info->near_singular = rcond < 1e-5;
    }
    return x;
}

SolveResult solve_dirichlet(const ProblemSpec& problem, int N) {
    if (N < 1)
        throw std::invalid_argument("solve_dirichlet: N must be at least 1");
    const Mesh mesh = build_mesh(problem.length, N);
    const SymMatrix A = problem.op == ProblemSpec::Operator::Log
                            ? assemble_log(mesh)
                            : assemble_frac(mesh, problem.s);

    std::vector<double> F;
    bool truncated = false;
    if (problem.nodal_rhs) {
        std::vector<double> g(mesh.node_count());
        for (int i = 0; i < mesh.node_count(); i++) {
            LoglapEvalInfo info;
            g[i] = eval_loglap(problem.profile, mesh.nodes[i], 1e-8, &info);
            truncated = truncated || info.truncated;
        }
        F = mass_weighted_load(mesh, g);
    } else {
        F = load_vector(mesh, problem.rhs.f, problem.rhs_singular_left,
                        problem.rhs_singular_right);
    }

    LinearSolveInfo info;
    std::vector<double> alpha = linear_solve(A, F, &info);

    std::vector<double> r = A.multiply(alpha);
    double res = 0.0;
    for (int i = 0; i < mesh.node_count(); i++)
        res = std::max(res, std::fabs(r[i] - F[i]));

    SolveResult out;
    out.solution = FemFunction{mesh, std::move(alpha)};
    out.residual_norm = res;
    out.near_singular = info.near_singular;
    out.rhs_truncated_at_boundary = truncated;
    out.problem = problem;
    return out;
}

SolveResult solve_manufactured(const std::string& name, double L, int N) {
    if (name != "u1" && name != "u2" && name != "u3" && name != "udef")
        throw std::invalid_argument("solve_manufactured: unknown solution \"" + name +
                                    "\"");
    return solve_dirichlet(make_problem(name, L), N);
}

void write_solution_csv(const SolveResult& result, const std::string& path) {
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("write_solution_csv: cannot open " + path);
    out << "x,alpha\n";
    char buf[90];
    const Mesh& mesh = result.solution.mesh;
    for (int i = 0; i < mesh.node_count(); i++) {
        std::snprintf(buf, sizeof buf, "%.17g,%.17g\n",
                      mesh.nodes[i] + result.problem.shift, result.solution.coeffs[i]);
        out << buf;
    }
}

} // namespace loglap
