#include "loglap/reports.hpp"

#include "loglap/norms.hpp"
#include "loglap/special_functions.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace loglap {

std::vector<ConvergenceRow> convergence_study(
    const std::string& problem, double L, std::optional<double> s,
    const std::vector<int>& Ns, std::optional<std::pair<double, double>> K_window) {
    if (Ns.empty())
        throw std::invalid_argument("convergence_study: need at least one N");
    double ka = -0.9 * L, kb = 0.9 * L;
    if (K_window) {
        ka = K_window->first;
        kb = K_window->second;
    }

    std::vector<ConvergenceRow> rows;
    for (int N : Ns) {
        const SolveResult res = solve_dirichlet(make_problem(problem, L, s), N);
        if (!res.problem.exact)
            throw std::invalid_argument("convergence_study: problem has no exact solution");
        const auto& exact = res.problem.exact->f;
        ConvergenceRow row;
        row.N = N;
        row.h = res.solution.mesh.h;
        row.l2_err = error_l2(exact, res.solution);
        const double shift = res.problem.shift;
        row.l2loc_err = error_l2(exact, res.solution,
                                 std::make_pair(ka - shift, kb - shift));
        row.linf_err = error_sup(exact, res.solution, 33);
        rows.push_back(row);
    }

    for (size_t r = 1; r < rows.size(); r++) {
        const double dh = std::log(rows[r - 1].h / rows[r].h);
        const double dl = std::log(ell(rows[r].h) / ell(rows[r - 1].h));
        auto slope = [&](double e_prev, double e_cur) {
            return std::log(e_cur / e_prev) / dh;
        };
        auto ell_slope = [&](double e_prev, double e_cur) {
            return std::log(e_cur / e_prev) / dl;
        };
        rows[r].l2_slope = slope(rows[r - 1].l2_err, rows[r].l2_err);
        rows[r].l2loc_slope = slope(rows[r - 1].l2loc_err, rows[r].l2loc_err);
        rows[r].linf_slope = slope(rows[r - 1].linf_err, rows[r].linf_err);
        rows[r].l2_ell_slope = ell_slope(rows[r - 1].l2_err, rows[r].l2_err);
        rows[r].l2loc_ell_slope = ell_slope(rows[r - 1].l2loc_err, rows[r].l2loc_err);
        rows[r].linf_ell_slope = ell_slope(rows[r - 1].linf_err, rows[r].linf_err);
    }
    return rows;
}

void write_convergence_csv(const std::vector<ConvergenceRow>& rows,
                           const std::string& path, bool ell_slopes) {
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("write_convergence_csv: cannot open " + path);
    out << "N,h,l2_err,l2_slope,l2loc_err,l2loc_slope,linf_err,linf_slope";
    if (ell_slopes)
        out << ",l2_ell_slope,l2loc_ell_slope,linf_ell_slope";
    out << "\n";
    char buf[64];
    auto cell = [&](double v) {
        std::snprintf(buf, sizeof buf, "%.17g", v);
        out << buf;
    };
    auto opt_cell = [&](const std::optional<double>& v) {
        out << ",";
        if (v)
            cell(*v);
    };
    for (const ConvergenceRow& r : rows) {
        out << r.N << ",";
        cell(r.h);
        out << ",";
        cell(r.l2_err);
        opt_cell(r.l2_slope);
        out << ",";
        cell(r.l2loc_err);
        opt_cell(r.l2loc_slope);
        out << ",";
        cell(r.linf_err);
        opt_cell(r.linf_slope);
        if (ell_slopes) {
            opt_cell(r.l2_ell_slope);
            opt_cell(r.l2loc_ell_slope);
            opt_cell(r.linf_ell_slope);
        }
        out << "\n";
    }
}

} // namespace loglap
