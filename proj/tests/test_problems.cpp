#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "loglap/assembly.hpp"
#include "loglap/errors.hpp"
#include "loglap/norms.hpp"
#include "loglap/problems.hpp"
#include "loglap/reports.hpp"
#include "loglap/special_functions.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

using namespace loglap;

TEST_CASE("linear_solve consistency with the mass matrix") {
    const Mesh m = build_mesh(1.0, 1);
    const SymMatrix M = assemble_mass(m);
    const std::vector<double> F = {m.h / 2, m.h, m.h / 2}; // row sums
    const auto x = linear_solve(M, F);
    for (double v : x)
        CHECK(v == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("linear_solve small indefinite system") {
    SymMatrix A(2);
    A.set(0, 0, 2.0);
    A.set(1, 1, -3.0);
    const auto x = linear_solve(A, {2.0, 3.0});
    CHECK(x[0] == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(x[1] == doctest::Approx(-1.0).epsilon(1e-14));
    CHECK_THROWS_AS(linear_solve(A, {1.0}), std::invalid_argument);
}

TEST_CASE("linear_solve random SPD residual") {
    std::mt19937 rng(5);
    std::normal_distribution<double> gauss(0.0, 1.0);
    const int n = 20;
    std::vector<double> G(n * n);
    for (double& g : G)
        g = gauss(rng);
    SymMatrix A(n);
    for (int i = 0; i < n; i++)
        for (int j = i; j < n; j++) {
            double s = 0.0;
            for (int k = 0; k < n; k++)
                s += G[k * n + i] * G[k * n + j];
            A.set(i, j, s);
        }
    std::vector<double> F(n);
    for (double& f : F)
        f = gauss(rng);
    const auto x = linear_solve(A, F);
    const auto r = A.multiply(x);
    double rn = 0.0, fn = 0.0;
    for (int i = 0; i < n; i++) {
        rn = std::max(rn, std::fabs(r[i] - F[i]));
        fn = std::max(fn, std::fabs(F[i]));
    }
    CHECK(rn < 1e-12 * fn);
}

TEST_CASE("linear_solve detects singular pivots") {
    SymMatrix A(2);
    A.set(0, 0, 1.0);
    A.set(0, 1, 1.0);
    A.set(1, 1, 1.0 + 1e-16);
    CHECK_THROWS_AS(linear_solve(A, {1.0, 1.0}), singular_matrix_error);
}

TEST_CASE("torsion sign structure") {
    SUBCASE("small interval: positive") {
        const SolveResult r = solve_dirichlet(make_problem("torsion", 0.1), 128);
        for (int i = 1; i <= 128; i++)
            CHECK(r.solution.coeffs[i] > 0.0);
        CHECK(r.residual_norm < 1e-10 * 0.2);
    }
    SUBCASE("unit interval: negative") {
        const SolveResult r = solve_dirichlet(make_problem("torsion", 1.0), 128);
        for (int i = 1; i <= 128; i++)
            CHECK(r.solution.coeffs[i] < 0.0);
    }
}

TEST_CASE("fractional torsion converges to the explicit solution") {
    const ProblemSpec p = make_problem("torsion", 1.0, 0.1);
    REQUIRE(p.exact.has_value());
    // U(0) = 1/Gamma(1.2)
    CHECK(p.exact->f(1.0) == doctest::Approx(1.0 / std::tgamma(1.2)).epsilon(1e-12));
    const SolveResult a = solve_dirichlet(p, 64);
    const SolveResult b = solve_dirichlet(p, 128);
    const double ea = error_l2(a.problem.exact->f, a.solution);
    const double eb = error_l2(b.problem.exact->f, b.solution);
    CHECK(eb < ea);
}

TEST_CASE("manufactured odd solution has antisymmetric coefficients") {
    const SolveResult r = solve_manufactured("u2", 1.0, 64);
    const int n = r.solution.mesh.node_count();
    for (int i = 0; i < n; i++)
        CHECK(std::fabs(r.solution.coeffs[i] + r.solution.coeffs[n - 1 - i]) < 1e-9);
}

TEST_CASE("u1 and u2 lie in the discrete space and are reproduced exactly") {
    // chi and x*chi are piecewise linear with boundary jumps, hence exactly
    // representable; the Galerkin solution matches them to solver precision
    // at every resolution.
    for (int N : {16, 64}) {
        const SolveResult r1 = solve_manufactured("u1", 1.0, N);
        CHECK(error_l2(r1.problem.exact->f, r1.solution) < 1e-9);
        const SolveResult r2 = solve_manufactured("u2", 1.0, N);
        CHECK(error_l2(r2.problem.exact->f, r2.solution) < 1e-9);
    }
}

TEST_CASE("u3 approximation improves under refinement") {
    const SolveResult a = solve_manufactured("u3", 1.0, 16);
    const SolveResult b = solve_manufactured("u3", 1.0, 64);
    CHECK(error_l2(b.problem.exact->f, b.solution) <
          error_l2(a.problem.exact->f, a.solution));
}

TEST_CASE("udef sup error is attained near the boundary") {
    const SolveResult r = solve_manufactured("udef", 1.0, 50);
    double ax = -1.0;
    error_sup(r.problem.exact->f, r.solution, 33, &ax);
    const Mesh& m = r.solution.mesh;
    const bool first = ax <= m.h;
    const bool last = ax >= m.L - m.h;
    CHECK((first || last));
}

TEST_CASE("reflection equivariance of solves") {
    // reflecting the right-hand side about the midpoint reflects the solution
    for (std::optional<double> s : {std::optional<double>{}, std::optional<double>{0.2}}) {
        ProblemSpec p = make_problem("torsion", 1.0, s);
        const double len = p.length;
        p.rhs = make_compact([](double x) { return std::exp(x); }, 0.0, len);
        const SolveResult r = solve_dirichlet(p, 40);
        ProblemSpec q = p;
        q.rhs = make_compact([len](double x) { return std::exp(len - x); }, 0.0, len);
        const SolveResult rr = solve_dirichlet(q, 40);
        const int n = r.solution.mesh.node_count();
        for (int i = 0; i < n; i++)
            CHECK(std::fabs(r.solution.coeffs[i] - rr.solution.coeffs[n - 1 - i]) < 1e-9);
    }
}

TEST_CASE("residual contract across the catalog") {
    for (const char* name : {"torsion", "u3", "u1"}) {
        const SolveResult r = solve_dirichlet(make_problem(name, 1.0), 32);
        double fn = 0.0;
        const auto F = r.problem.nodal_rhs
                           ? std::vector<double>{}
                           : load_vector(r.solution.mesh, r.problem.rhs.f,
                                         r.problem.rhs_singular_left,
                                         r.problem.rhs_singular_right);
        for (double f : F)
            fn = std::max(fn, std::fabs(f));
        if (fn > 0.0)
            CHECK(r.residual_norm < 1e-10 * fn);
    }
}

TEST_CASE("problem factory validation") {
    CHECK_THROWS_AS(make_problem("nonsense", 1.0), std::invalid_argument);
    CHECK_THROWS_AS(make_problem("torsion", -1.0), std::invalid_argument);
    CHECK_THROWS_AS(make_problem("torsion", 1.0, 0.7), std::domain_error);
    CHECK_THROWS_AS(make_problem("u1", 1.0, 0.1), std::invalid_argument);
    CHECK_THROWS_AS(solve_manufactured("torsion", 1.0, 8), std::invalid_argument);
}

TEST_CASE("udef nodal sampling reports the boundary truncation") {
    const SolveResult r = solve_manufactured("udef", 1.0, 12);
    CHECK(r.rhs_truncated_at_boundary);
    const SolveResult t = solve_dirichlet(make_problem("torsion", 1.0), 12);
    CHECK(!t.rhs_truncated_at_boundary);
}

TEST_CASE("blow-up solves near the first critical length are tagged") {
    CHECK(solve_dirichlet(make_problem("torsion", 0.7089), 1024).near_singular);
    CHECK(!solve_dirichlet(make_problem("torsion", 0.6), 64).near_singular);
}

TEST_CASE("full local window reproduces the global L2 column") {
    const auto a = convergence_study("u3", 1.0, std::nullopt, {16, 32});
    const auto b =
        convergence_study("u3", 1.0, std::nullopt, {16, 32}, std::make_pair(-1.0, 1.0));
    for (size_t r = 0; r < a.size(); r++) {
        CHECK(b[r].l2loc_err == b[r].l2_err);
        CHECK(a[r].l2_err == b[r].l2_err);
    }
}

TEST_CASE("solution csv uses problem coordinates") {
    const SolveResult r = solve_dirichlet(make_problem("torsion", 0.5), 4);
    const std::string path = "test_solution.csv";
    write_solution_csv(r, path);
    FILE* f = fopen(path.c_str(), "r");
    REQUIRE(f != nullptr);
    char header[64];
    REQUIRE(fgets(header, sizeof header, f) != nullptr);
    double x, a;
    REQUIRE(fscanf(f, "%lf,%lf", &x, &a) == 2);
    CHECK(x == doctest::Approx(-0.5).epsilon(1e-15)); // left end of (-L, L)
    fclose(f);
    std::remove(path.c_str());
}
