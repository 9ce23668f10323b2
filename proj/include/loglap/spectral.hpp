#ifndef LOGLAP_SPECTRAL_HPP
#define LOGLAP_SPECTRAL_HPP

#include "loglap/sym_matrix.hpp"

#include <string>
#include <utility>
#include <vector>

namespace loglap {

// Eigen-decomposition result, eigenvalues ascending. Eigenvectors, when
// requested, are stored row-major with column k the k-th eigenvector.
struct Spectrum {
    int n = 0;
    std::vector<double> eigenvalues;
    std::vector<double> eigenvectors;
    bool has_vectors = false;

    double vec(int k, int i) const { return eigenvectors[size_t(i) * n + k]; }
};

// Full spectrum of a symmetric matrix (tridiagonalization-based dense solver).
Spectrum eig_sym(const SymMatrix& A, bool want_vectors);

// Generalized problem A v = lambda M v via Cholesky reduction of the positive
// definite M. Eigenvectors are M-orthonormal.
Spectrum eig_generalized(const SymMatrix& A, const SymMatrix& M);

// cond(A) = |lambda|_max / |lambda|_min over the spectrum; +infinity when the
// smallest magnitude vanishes within round-off.
double condition_number(const SymMatrix& A);

// Stiffness matrix of the logarithmic operator on the centered interval
// (-L, L), realized on the mesh (0, 2L).
SymMatrix loglap_matrix_centered(double L, int N);

// Condition number of the centered stiffness matrix over a uniform grid of
// half-lengths.
struct ScanResult {
    std::vector<double> lengths;
    std::vector<double> cond_values;
    int N = 0;
};

ScanResult scan_condition(int N, double L_min, double L_max, int steps);

// Located critical half-length: zero is an eigenvalue of the operator on
// (-L_k, L_k).
struct LkTable {
    int k = 0;
    double L_k = 0.0;
    int N = 0;
    std::pair<double, double> bracket;
    double cond_at_Lk = 0.0;
    double cond_at_lo = 0.0;
    double cond_at_hi = 0.0;
};

// Golden-section maximization of L -> cond(A^L_h) inside the bracket, down to
// bracket width < tol; the bracket must contain exactly one spike. Throws
// bracket_error when no interior improvement shows up within 5 iterations.
LkTable find_Lk(int k, int N, std::pair<double, double> bracket, double tol);

// Search brackets for k = 1..6 around the known spikes.
std::pair<double, double> lk_default_bracket(int k);

// Cross-check utility: locate L_k by minimizing |lambda|_min instead.
double find_Lk_min_abs_eig(int N, std::pair<double, double> bracket, double tol);

// lambda_k on (-L, L) from the critical length: 2 ln(L_k / L).
double eigenvalue_by_scaling(double L, int k, const LkTable& lk);

// Comparison row against the reference fractional eigenvalues on (-1,1):
// lambda_k^s ~ 1 + s lambda_k for small s.
struct FracCompareRow {
    int k = 0;
    double lambda_s_ref = 0.0; // stored reference value
    double computed = 0.0;     // 1 + s * 2 ln(L_k)
};

// Supported s: 0.005, 0.05, 0.1; supported k: 1..3 (the stored columns).
std::vector<FracCompareRow> frac_small_s_table(double s, const std::vector<int>& ks,
                                               const std::vector<LkTable>& lk);

// Reference eigenvalues of the logarithmic operator on (-1,1), k = 1..6.
double reference_lambda(int k);

void write_scan_csv(const ScanResult& scan, const std::string& path);
void write_lk_csv(const std::vector<LkTable>& rows, const std::string& path);

} // namespace loglap

#endif
