// Command-line driver for the 1D logarithmic/fractional Laplacian toolkit:
// closed-form assembly, Dirichlet solves, convergence studies, condition
// scans, critical-length searches, and eigenvalue tables. All output is CSV.

#include "CLI11.hpp"

#include "loglap/assembly.hpp"
#include "loglap/errors.hpp"
#include "loglap/norms.hpp"
#include "loglap/problems.hpp"
#include "loglap/reports.hpp"
#include "loglap/special_functions.hpp"
#include "loglap/spectral.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

namespace {

using namespace loglap;

int cmd_assemble(const std::string& kind, double L, int N, std::optional<double> s,
                 int quad_order, const std::string& out) {
    const Mesh mesh = build_mesh(L, N);
    SymMatrix A;
    if (kind == "log") {
        A = assemble_log(mesh);
    } else if (kind == "mass") {
        A = assemble_mass(mesh);
    } else if (kind == "bform") {
        A = assemble_B(mesh, quad_order);
    } else if (kind == "frac") {
        if (!s)
            throw std::invalid_argument("assemble: --kind frac requires --s");
        A = assemble_frac(mesh, *s);
    } else {
        throw std::invalid_argument("assemble: unknown kind \"" + kind + "\"");
    }
    write_matrix_csv(A, out);
    return 0;
}

int cmd_solve(const std::string& problem, double L, int N, std::optional<double> s,
              const std::string& out) {
    const SolveResult r = solve_dirichlet(make_problem(problem, L, s), N);
    write_solution_csv(r, out);
    if (r.problem.exact) {
        std::printf("a_h = %.17g\n", error_l2(r.problem.exact->f, r.solution));
        std::printf("c_h = %.17g\n", error_sup(r.problem.exact->f, r.solution, 33));
    }
    if (r.near_singular)
        std::fprintf(stderr, "note: matrix close to singular (L near a critical length)\n");
    if (r.rhs_truncated_at_boundary)
        std::fprintf(stderr,
                     "note: operator samples at the boundary nodes truncated at t >= 1e-12\n");
    return 0;
}

int cmd_converge(const std::string& problem, double L, std::optional<double> s,
                 const std::vector<int>& Ns, std::optional<std::pair<double, double>> K,
                 bool ell_slopes, const std::string& out) {
    const auto rows = convergence_study(problem, L, s, Ns, K);
    write_convergence_csv(rows, out, ell_slopes);
    return 0;
}

int cmd_scan(int N, double Lmin, double Lmax, int steps, const std::string& out) {
    write_scan_csv(scan_condition(N, Lmin, Lmax, steps), out);
    return 0;
}

int cmd_findlk(int k, int N, std::optional<std::pair<double, double>> bracket, double tol,
               const std::string& out) {
    const auto br = bracket ? *bracket : lk_default_bracket(k);
    const LkTable t = find_Lk(k, N, br, tol);
    std::printf("k,N,L_k\n%d,%d,%.17g\n", t.k, t.N, t.L_k);
    if (!out.empty())
        write_lk_csv({t}, out);
    return 0;
}

int cmd_eigs(double L, int N, int k, bool scaled, bool pencil, double tol,
             const std::string& out) {
    std::ofstream file;
    std::ostream* os = nullptr;
    if (!out.empty()) {
        file.open(out);
        if (!file)
            throw std::runtime_error("eigs: cannot open " + out);
        os = &file;
    }
    char buf[128];
    auto emit = [&](const std::string& line) {
        std::fputs(line.c_str(), stdout);
        if (os)
            *os << line;
    };

    if (scaled) {
        if (k < 1 || k > 6)
            throw std::invalid_argument("eigs: --scaled supports k in 1..6");
        emit("k,lambda_scaled,lambda_ref\n");
        for (int i = 1; i <= k; i++) {
            const LkTable t = find_Lk(i, N, lk_default_bracket(i), tol);
            std::snprintf(buf, sizeof buf, "%d,%.17g,%.4f\n", i,
                          eigenvalue_by_scaling(L, i, t), reference_lambda(i));
            emit(buf);
        }
        return 0;
    }

    const Mesh mesh = build_mesh(2.0 * L, N);
    const SymMatrix A = assemble_log(mesh);
    Spectrum s;
    if (pencil)
        s = eig_generalized(A, assemble_mass(mesh));
    else
        s = eig_sym(A, false);
    if (k < 1 || k > s.n)
        throw std::invalid_argument("eigs: k out of range");
    emit("k,lambda\n");
    for (int i = 0; i < k; i++) {
        std::snprintf(buf, sizeof buf, "%d,%.17g\n", i + 1, s.eigenvalues[i]);
        emit(buf);
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"1D finite elements for the logarithmic and fractional Laplacian"};
    app.require_subcommand(1);

    // assemble
    auto* sub_assemble = app.add_subcommand("assemble", "Write a stiffness/mass/B-form matrix as CSV");
    std::string kind = "log", out;
    double L = 1.0;
    int N = 8;
    std::optional<double> s;
    int quad_order = 16;
    sub_assemble->add_option("--kind", kind, "log | frac | mass | bform")->required();
    sub_assemble->add_option("--L", L, "interval length of (0,L)")->required();
    sub_assemble->add_option("--N", N, "interior node count")->required();
    sub_assemble->add_option("--s", s, "fractional order in (0,1/2), frac only");
    sub_assemble->add_option("--quad-order", quad_order, "Gauss order for the B-form");
    sub_assemble->add_option("--out", out, "output CSV path")->required();

    // solve
    auto* sub_solve = app.add_subcommand("solve", "Solve a Dirichlet problem on (-L,L)");
    std::string problem = "torsion", sol_out;
    double sol_L = 1.0;
    int sol_N = 128;
    std::optional<double> sol_s;
    sub_solve->add_option("--problem", problem, "torsion | u1 | u2 | u3 | udef")->required();
    sub_solve->add_option("--L", sol_L, "half-length of (-L,L)")->required();
    sub_solve->add_option("--N", sol_N, "interior node count")->required();
    sub_solve->add_option("--s", sol_s, "fractional order (torsion only)");
    sub_solve->add_option("--out", sol_out, "output CSV path (x,alpha)")->required();

    // converge
    auto* sub_conv = app.add_subcommand("converge", "Run a convergence study");
    std::string conv_problem = "u3", conv_out;
    double conv_L = 1.0;
    std::optional<double> conv_s;
    std::vector<int> conv_N;
    std::vector<double> conv_K;
    bool ell_slopes = false;
    sub_conv->add_option("--problem", conv_problem, "torsion | u1 | u2 | u3 | udef")->required();
    sub_conv->add_option("--L", conv_L, "half-length of (-L,L)");
    sub_conv->add_option("--s", conv_s, "fractional order (torsion only)");
    sub_conv->add_option("--N", conv_N, "resolutions, e.g. --N 25 50 100")
        ->required()
        ->expected(-1);
    sub_conv->add_option("--K-window", conv_K, "local-error window a b (problem coords)")
        ->expected(2);
    sub_conv->add_flag("--ell-slopes", ell_slopes, "append slopes against the modulus ell(h)");
    sub_conv->add_option("--out", conv_out, "output CSV path")->required();

    // scan
    auto* sub_scan = app.add_subcommand("scan", "Condition number over half-lengths");
    int scan_N = 64, steps = 100;
    double Lmin = 0.1, Lmax = 10.0;
    std::string scan_out;
    sub_scan->add_option("--N", scan_N, "interior node count")->required();
    sub_scan->add_option("--Lmin", Lmin, "smallest half-length")->required();
    sub_scan->add_option("--Lmax", Lmax, "largest half-length")->required();
    sub_scan->add_option("--steps", steps, "grid points")->required();
    sub_scan->add_option("--out", scan_out, "output CSV path")->required();

    // findlk
    auto* sub_find = app.add_subcommand("findlk", "Locate a critical half-length L_k");
    int find_k = 1, find_N = 256;
    std::vector<double> bracket;
    double tol = 1e-5;
    std::string find_out;
    sub_find->add_option("--k", find_k, "index of the critical length")->required();
    sub_find->add_option("--N", find_N, "interior node count")->required();
    sub_find->add_option("--bracket", bracket, "search bracket a b")->expected(2);
    sub_find->add_option("--tol", tol, "bracket-width tolerance");
    sub_find->add_option("--out", find_out, "optional output CSV path");

    // eigs
    auto* sub_eigs = app.add_subcommand("eigs", "Eigenvalues on (-L,L)");
    double eig_L = 1.0;
    int eig_N = 256, eig_k = 6;
    bool scaled = false, pencil = false;
    double eig_tol = 1e-5;
    std::string eig_out;
    sub_eigs->add_option("--L", eig_L, "half-length of (-L,L)")->required();
    sub_eigs->add_option("--N", eig_N, "interior node count")->required();
    sub_eigs->add_option("--k", eig_k, "how many eigenvalues")->required();
    sub_eigs->add_flag("--scaled", scaled, "2 ln(L_k/L) via golden-section searches");
    sub_eigs->add_flag("--pencil", pencil, "generalized (stiffness, mass) eigenvalues");
    sub_eigs->add_option("--tol", eig_tol, "search tolerance for --scaled");
    sub_eigs->add_option("--out", eig_out, "optional output CSV path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (sub_assemble->parsed())
            return cmd_assemble(kind, L, N, s, quad_order, out);
        if (sub_solve->parsed())
            return cmd_solve(problem, sol_L, sol_N, sol_s, sol_out);
        if (sub_conv->parsed()) {
            std::optional<std::pair<double, double>> K;
            if (conv_K.size() == 2)
                K = std::make_pair(conv_K[0], conv_K[1]);
            return cmd_converge(conv_problem, conv_L, conv_s, conv_N, K, ell_slopes,
                                conv_out);
        }
        if (sub_scan->parsed())
            return cmd_scan(scan_N, Lmin, Lmax, steps, scan_out);
        if (sub_find->parsed()) {
            std::optional<std::pair<double, double>> br;
            if (bracket.size() == 2)
                br = std::make_pair(bracket[0], bracket[1]);
            return cmd_findlk(find_k, find_N, br, tol, find_out);
        }
        if (sub_eigs->parsed())
            return cmd_eigs(eig_L, eig_N, eig_k, scaled, pencil, eig_tol, eig_out);
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::domain_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const loglap::convergence_error& e) {
        std::fprintf(stderr, "numerical failure: %s (best estimate %.17g)\n", e.what(),
                     e.best_estimate);
        return 3;
    } catch (const loglap::singular_matrix_error& e) {
        std::fprintf(stderr, "numerical failure: %s (pivot %d)\n", e.what(),
                     e.pivot_index);
        return 3;
    } catch (const loglap::bracket_error& e) {
        std::fprintf(stderr, "numerical failure: %s\n", e.what());
        return 3;
    } catch (const loglap::quad_eval_error& e) {
        std::fprintf(stderr, "numerical failure: %s (node %.17g)\n", e.what(), e.node);
        return 3;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 3;
    }
    return 0;
}
