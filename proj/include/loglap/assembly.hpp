#ifndef LOGLAP_ASSEMBLY_HPP
#define LOGLAP_ASSEMBLY_HPP

#include "loglap/mesh.hpp"
#include "loglap/sym_matrix.hpp"

namespace loglap {

// Mass matrix M_ij = int phi_i phi_j.
SymMatrix assemble_mass(const Mesh& mesh);

// Closed-form stiffness matrix of the fractional Laplacian (-Delta)^s,
// s in (0, 1/2). Entries (c_{1,s}/2) * a_ij with the a_ij case table
// completed by matrix symmetry and end reflection.
SymMatrix assemble_frac(const Mesh& mesh, double s);

// Closed-form stiffness matrix of the logarithmic Laplacian.
SymMatrix assemble_log(const Mesh& mesh);

// Finite-difference oracle for assemble_log built from the fractional
// family: D(s0) = 2 Q(s0/2) - Q(s0) with Q(s) = (A^s - M)/s, error O(s0^2).
// Requires 0 < s0 < 1/4.
SymMatrix assemble_log_fd_oracle(const Mesh& mesh, double s0);

// Zero-order form B_ij = -int int_{|x-y|>=1} phi_i(x) phi_j(y)/|x-y| + rho_1 M_ij.
SymMatrix assemble_B(const Mesh& mesh, int quad_order);

// Gram matrix of the energy scalar product: A^E = A^L - B. Positive definite.
SymMatrix energy_matrix(const Mesh& mesh);

// Independent quadrature oracle for single stiffness entries:
// E_L(phi_i, phi_j) = int (L phi_i)(x) phi_j(x) dx by outer Gauss over
// supp phi_j and inner pointwise evaluation of the operator. Throws
// convergence_error when tol is unreachable within the budget.
double quad_oracle_EL(const Mesh& mesh, int i, int j, double tol);

namespace coef {

// Distance-k interior coefficient of the log matrix: entry = h * log_far(k)/6,
// k >= 2. Closed form below the crossover, cancellation-free B-spline kernel
// integral above; the two agree to machine precision.
double log_far(int k);
// Row-0 coefficients of the log matrix: entry = h * log_row0(j, N),
// 2 <= j <= N+1 (j = N+1 selects the opposite half-hat case).
double log_row0(int j, int N);

// Fractional analogues: xi_k^s, gamma_j^s, zeta_N^s of the a_ij case table.
double xi_frac(int k, double s);
double gamma_frac(int j, double s);
double zeta_frac(int N, double s);

// Direct closed forms (no stabilized switch), exposed for
// cross-validation in tests.
double log_far_direct(int k);
double log_row0_direct(int j, int N);
double xi_frac_direct(int k, double s);
double gamma_frac_direct(int j, double s);
double zeta_frac_direct(int N, double s);

// Kernel-integral forms, valid for all admissible indices.
double log_far_integral(int k);
double log_row0_integral(int j, int N);
double xi_frac_integral(int k, double s);
double gamma_frac_integral(int j, double s);
double zeta_frac_integral(int N, double s);

} // namespace coef

} // namespace loglap

#endif
