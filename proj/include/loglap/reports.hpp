#ifndef LOGLAP_REPORTS_HPP
#define LOGLAP_REPORTS_HPP

#include "loglap/problems.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace loglap {

// One resolution of a convergence study. Slopes are consecutive-row log-log
// rates, negative for a decaying error (error ~ h^p gives slope -p); the
// ell-slopes fit the error against the modulus ell(h) instead.
struct ConvergenceRow {
    int N = 0;
    double h = 0.0;
    double l2_err = 0.0;    // a_h
    double l2loc_err = 0.0; // b_h on the window K
    double linf_err = 0.0;  // c_h
    std::optional<double> l2_slope, l2loc_slope, linf_slope;
    std::optional<double> l2_ell_slope, l2loc_ell_slope, linf_ell_slope;
};

// Run the named problem over the given resolutions and collect the error
// norms. K_window is in problem (centered) coordinates and defaults to
// 0.9 * (-L, L).
std::vector<ConvergenceRow> convergence_study(
    const std::string& problem, double L, std::optional<double> s,
    const std::vector<int>& Ns,
    std::optional<std::pair<double, double>> K_window = std::nullopt);

void write_convergence_csv(const std::vector<ConvergenceRow>& rows,
                           const std::string& path, bool ell_slopes = false);

} // namespace loglap

#endif
