#ifndef LOGLAP_SPECIAL_FUNCTIONS_HPP
#define LOGLAP_SPECIAL_FUNCTIONS_HPP

namespace loglap {

// Scalar constants shared by all modules.
struct Constants {
    double euler_gamma; // Euler-Mascheroni constant
    double rho1;        // 2 ln 2 + psi(1/2) - euler_gamma
    double rho0;        // cutoff of the modulus ell, fixed at 0.1
};

const Constants& constants();

// Digamma function psi(x) = Gamma'(x)/Gamma(x) for x > 0.
// Recurrence shift followed by the asymptotic Bernoulli series.
double digamma(double x);

// Gamma function for real x, Lanczos approximation (relative error < 1e-13).
double gamma_fn(double x);

// The zero-order constant rho_1 = 2 ln 2 + psi(1/2) - gamma of the
// logarithmic Laplacian.
double rho1();

// Log-Hoelder modulus of continuity ell(r) = 1/|ln(min(0.1, r))|, r > 0.
double ell(double r);

// Normalization constant c_{1,s} = sin(pi s) Gamma(2s+1)/pi of the fractional
// Laplacian, s in (0,1). Evaluates both closed forms and checks agreement.
double c1s(double s);

} // namespace loglap

#endif
