#include "loglap/assembly.hpp"

#include "loglap/errors.hpp"
#include "loglap/loglap_eval.hpp"
#include "loglap/quadrature.hpp"
#include "loglap/special_functions.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace loglap {

namespace {

const double kLn2 = 0.69314718055994530941723212146;
const double kLn3 = 1.09861228866810969139524523692;

// x^3 ln x with the 0 * ln 0 -> 0 convention.
double cube_ln(double x) {
    return x == 0.0 ? 0.0 : x * x * x * std::log(x);
}

// Cubic cardinal B-spline, support [-2,2], unit integral. Peano kernel of the
// fourth central difference on a unit grid.
double bspline3(double t) {
    t = std::fabs(t);
    if (t >= 2.0)
        return 0.0;
    if (t >= 1.0) {
        const double u = 2.0 - t;
        return u * u * u / 6.0;
    }
    return (4.0 - 6.0 * t * t + 3.0 * t * t * t) / 6.0;
}

// int_{-2}^{2} B3(t) g(k+t) dt, one Gauss panel per knot interval.
double bspline3_quad(const std::function<double(double)>& g, double k) {
    const QuadRule& r = gauss_legendre(16);
    double acc = 0.0;
    for (int p = -2; p < 2; p++) {
        for (int q = 0; q < r.order(); q++) {
            const double t = p + 0.5 + 0.5 * r.nodes[q];
            acc += 0.5 * r.weights[q] * bspline3(t) * g(k + t);
        }
    }
    return acc;
}

// Tensor-Gauss of w(x,y) * (j + y - x)^p over x in (0,1), y in (-1,1),
// w = (1-x)(1-|y|); the y-integral is split at the kink y = 0.
double hat_pair_integral(int j, double p) {
    const QuadRule& r = gauss_legendre(20);
    double acc = 0.0;
    for (int half = 0; half < 2; half++) {
        const double ya = half == 0 ? -1.0 : 0.0;
        for (int a = 0; a < r.order(); a++) {
            const double x = 0.5 + 0.5 * r.nodes[a];
            const double wx = 0.5 * r.weights[a] * (1.0 - x);
            for (int b = 0; b < r.order(); b++) {
                const double y = ya + 0.5 + 0.5 * r.nodes[b];
                acc += wx * 0.5 * r.weights[b] * (1.0 - std::fabs(y)) *
                       std::pow(j + y - x, p);
            }
        }
    }
    return acc;
}

// Tensor-Gauss of (1-x) y (y + N - x)^p over the unit square.
double half_hat_pair_integral(int N, double p) {
    const QuadRule& r = gauss_legendre(20);
    double acc = 0.0;
    for (int a = 0; a < r.order(); a++) {
        const double x = 0.5 + 0.5 * r.nodes[a];
        const double wx = 0.5 * r.weights[a] * (1.0 - x);
        for (int b = 0; b < r.order(); b++) {
            const double y = 0.5 + 0.5 * r.nodes[b];
            acc += wx * 0.5 * r.weights[b] * y * std::pow(y + N - x, p);
        }
    }
    return acc;
}

// Crossover between the direct closed forms and the kernel-integral forms;
// beyond it the differences of near-equal cubes lose too many digits.
const int kStableSwitch = 32;

} // namespace

namespace coef {

double log_far_direct(int k) {
    return -cube_ln(k - 2.0) + 4.0 * cube_ln(k - 1.0) - 6.0 * cube_ln(k) +
           4.0 * cube_ln(k + 1.0) - cube_ln(k + 2.0);
}

double log_far_integral(int k) {
    // q_k = -6 int B3(t)/(k+t) dt  (Peano form of the fourth difference of
    // x^3 ln x, whose fourth derivative is 6/x).
    return -6.0 * bspline3_quad([](double x) { return 1.0 / x; }, (double)k);
}

double log_far(int k) {
    return k <= kStableSwitch ? log_far_direct(k) : log_far_integral(k);
}

double log_row0_direct(int j, int N) {
    if (j == N + 1) {
        // m_N
        const double n = N;
        const double t1 = 2.0 * (n - 3.0) * n * n * std::log(n);
        const double t2 = (N >= 2) ? -std::pow(n - 1.0, 3) * std::log(n - 1.0) : 0.0;
        const double t3 = -(n + 1.0) * ((n - 4.0) * n + 1.0) * std::log(n + 1.0);
        return (t1 - n + t2 + t3 - 3.0) / 6.0;
    }
    // l_j, valid for j >= 2 (l_2 collapses to the constant -1/3).
    const double x = j;
    double acc = -3.0 * x * x * x * std::log(x) + 6.0 * x * x * std::log(x) - 2.0;
    if (j > 2) {
        acc -= std::pow(x - 2.0, 3) * std::log(x - 2.0);
        acc += 3.0 * (x - 1.0) * (x - 1.0) * (x - 2.0) * std::log(x - 1.0);
        acc += (x + 1.0) * (x + 1.0) * (x - 2.0) * std::log(x + 1.0);
    }
    return acc / 6.0;
}

double log_row0_integral(int j, int N) {
    if (j == N + 1)
        return -half_hat_pair_integral(N, -1.0);
    return -hat_pair_integral(j, -1.0);
}

double log_row0(int j, int N) {
    const int dist = (j == N + 1) ? N : j;
    return dist <= kStableSwitch ? log_row0_direct(j, N) : log_row0_integral(j, N);
}

double xi_frac_direct(int k, double s) {
    const double e = 3.0 - 2.0 * s;
    return 4.0 * std::pow(k + 1.0, e) + 4.0 * std::pow(k - 1.0, e) -
           6.0 * std::pow((double)k, e) - std::pow(k + 2.0, e) -
           std::pow(k - 2.0, e);
}

double xi_frac_integral(int k, double s) {
    const double c = 2.0 * s * (1.0 - 2.0 * s) * (2.0 - 2.0 * s) * (3.0 - 2.0 * s);
    return c * bspline3_quad([s](double x) { return std::pow(x, -1.0 - 2.0 * s); },
                             (double)k);
}

double xi_frac(int k, double s) {
    return k <= kStableSwitch ? xi_frac_direct(k, s) : xi_frac_integral(k, s);
}

double gamma_frac_direct(int j, double s) {
    const double e3 = 3.0 - 2.0 * s;
    const double e2 = 2.0 - 2.0 * s;
    const double x = j;
    return -3.0 * std::pow(x, e3) + 2.0 * (3.0 - 2.0 * s) * std::pow(x, e2) +
           (2.0 * s - 3.0) * std::pow(x - 1.0, e2) + 3.0 * std::pow(x - 1.0, e3) -
           std::pow(x - 2.0, e3) + std::pow(x + 1.0, e3) +
           (2.0 * s - 3.0) * std::pow(x + 1.0, e2);
}

double gamma_frac_integral(int j, double s) {
    const double c = 4.0 * s * (1.0 - 2.0 * s) * (1.0 - s) * (3.0 - 2.0 * s);
    return c * hat_pair_integral(j, -1.0 - 2.0 * s);
}

double gamma_frac(int j, double s) {
    return j <= kStableSwitch ? gamma_frac_direct(j, s) : gamma_frac_integral(j, s);
}

double zeta_frac_direct(int N, double s) {
    const double n = N;
    const double t1 = 2.0 * std::pow(n, 2.0 - 2.0 * s) * (n + 2.0 * s - 3.0);
    const double t2 = (N >= 2) ? -std::pow(n - 1.0, 3.0 - 2.0 * s) : 0.0;
    const double t3 = -std::pow(n + 1.0, 1.0 - 2.0 * s) *
                      (n * n + 4.0 * n * (s - 1.0) + 4.0 * s * s - 6.0 * s + 1.0);
    return t1 + t2 + t3;
}

double zeta_frac_integral(int N, double s) {
    const double c = 4.0 * s * (1.0 - s) * (1.0 - 2.0 * s) * (3.0 - 2.0 * s);
    return c * half_hat_pair_integral(N, -1.0 - 2.0 * s);
}

double zeta_frac(int N, double s) {
    return N <= kStableSwitch ? zeta_frac_direct(N, s) : zeta_frac_integral(N, s);
}

} // namespace coef

SymMatrix assemble_mass(const Mesh& mesh) {
    const int n = mesh.node_count();
    const double h = mesh.h;
    SymMatrix M(n);
    for (int i = 0; i < n; i++)
        M.set(i, i, (i == 0 || i == n - 1) ? h / 3.0 : 2.0 * h / 3.0);
    for (int i = 0; i + 1 < n; i++)
        M.set(i, i + 1, h / 6.0);
    return M;
}

SymMatrix assemble_frac(const Mesh& mesh, double s) {
    if (!(s > 0.0) || !(s < 0.5))
        throw std::domain_error("assemble_frac: s must lie in (0, 1/2)");
    const int N = mesh.N;
    const int n = N + 2;
    const double h = mesh.h;
    const double scale = 0.5 * c1s(s) * std::pow(h, 1.0 - 2.0 * s) /
                         (2.0 * s * (1.0 - 2.0 * s) * (1.0 - s) * (3.0 - 2.0 * s));
    SymMatrix A(n);

    // Row 0.
    A.set(0, 0, scale * 4.0 * (1.0 - s));
    A.set(0, 1, scale * (std::pow(2.0, 2.0 - 2.0 * s) - 2.0) * (1.0 - 2.0 * s));
    for (int j = 2; j <= N; j++)
        A.set(0, j, scale * -coef::gamma_frac(j, s));
    A.set(0, N + 1, scale * -coef::zeta_frac(N, s));

    // Interior block, Toeplitz in |j-i|.
    const double diag = scale * 2.0 * (std::pow(2.0, 3.0 - 2.0 * s) - 4.0);
    const double offd =
        scale * (std::pow(3.0, 3.0 - 2.0 * s) - std::pow(2.0, 5.0 - 2.0 * s) + 7.0);
    for (int i = 1; i <= N; i++)
        A.set(i, i, diag);
    for (int i = 1; i <= N - 1; i++)
        A.set(i, i + 1, offd);
    for (int k = 2; k <= N - 1; k++) {
        const double v = scale * -coef::xi_frac(k, s);
        for (int i = 1; i + k <= N; i++)
            A.set(i, i + k, v);
    }

    // Last column by end reflection a_{i,N+1} = a_{0,N+1-i}.
    for (int i = 1; i <= N; i++)
        A.set(i, N + 1, A(0, N + 1 - i));
    A.set(N + 1, N + 1, A(0, 0));
    return A;
}

SymMatrix assemble_log(const Mesh& mesh) {
    const int N = mesh.N;
    const int n = N + 2;
    const double h = mesh.h;
    const double lnh = std::log(h);
    const double g = constants().euler_gamma;
    const double psi_half = digamma(0.5);
    SymMatrix A(n);

    // Row 0.
    A.set(0, 0, h * (-g / 3.0 + 8.0 / 9.0 - 2.0 / 3.0 * lnh + 2.0 / 3.0 * kLn2 +
                     psi_half / 3.0));
    A.set(0, 1, h * (-g / 6.0 + 5.0 / 18.0 - lnh / 3.0 - kLn2 / 3.0 + psi_half / 6.0));
    for (int j = 2; j <= N; j++)
        A.set(0, j, h * coef::log_row0(j, N));
    A.set(0, N + 1, h * coef::log_row0(N + 1, N));

    // Interior block.
    const double diag =
        h * (-2.0 / 9.0) * (6.0 * lnh + 3.0 * g - 11.0 + 6.0 * kLn2 - 3.0 * psi_half);
    const double offd = h * (-g / 6.0 + 11.0 / 18.0 - lnh / 3.0 +
                             (64.0 * kLn2 - 54.0 * kLn3) / 12.0 + kLn2 / 3.0 +
                             psi_half / 6.0);
    for (int i = 1; i <= N; i++)
        A.set(i, i, diag);
    for (int i = 1; i <= N - 1; i++)
        A.set(i, i + 1, offd);
    for (int k = 2; k <= N - 1; k++) {
        const double v = h * coef::log_far(k) / 6.0;
        for (int i = 1; i + k <= N; i++)
            A.set(i, i + k, v);
    }

    // Last column by end reflection b_{i,N+1} = b_{0,N+1-i}.
    for (int i = 1; i <= N; i++)
        A.set(i, N + 1, A(0, N + 1 - i));
    A.set(N + 1, N + 1, A(0, 0));
    return A;
}

SymMatrix assemble_log_fd_oracle(const Mesh& mesh, double s0) {
    if (!(s0 > 0.0) || !(s0 < 0.25))
        throw std::invalid_argument("assemble_log_fd_oracle: s0 must lie in (0, 1/4)");
    const SymMatrix M = assemble_mass(mesh);
    auto Q = [&](double s) {
        SymMatrix q = assemble_frac(mesh, s);
        q -= M;
        q *= 1.0 / s;
        return q;
    };
    SymMatrix D = Q(0.5 * s0);
    D *= 2.0;
    D -= Q(s0);
    return D;
}

SymMatrix assemble_B(const Mesh& mesh, int quad_order) {
    if (quad_order < 2)
        throw std::invalid_argument("assemble_B: quadrature order must be >= 2");
    const int N = mesh.N;
    const int n = N + 2;
    const double h = mesh.h;

    // Kernel part K_ij = int int_{|x-y|>=1} phi_i(x) phi_j(y)/|x-y|.
    std::vector<double> K(size_t(n) * n, 0.0);
    if (mesh.L > 1.0) {
        const QuadRule& r = gauss_legendre(quad_order);
        for (int ea = 0; ea <= N; ea++) {
            const double a0 = mesh.nodes[ea], a1 = mesh.nodes[ea + 1];
            for (int eb = 0; eb <= N; eb++) {
                const double b0 = mesh.nodes[eb], b1 = mesh.nodes[eb + 1];
                if (std::max(b1 - a0, a1 - b0) < 1.0)
                    continue; // no point pair at distance >= 1
                // Outer x-panels split where x-1 or x+1 crosses an endpoint of eb.
                std::vector<double> cuts = {a0, a1};
                for (double c : {b0 + 1.0, b1 + 1.0, b0 - 1.0, b1 - 1.0})
                    if (c > a0 && c < a1)
                        cuts.push_back(c);
                std::sort(cuts.begin(), cuts.end());
                for (size_t p = 0; p + 1 < cuts.size(); p++) {
                    const double mid = 0.5 * (cuts[p] + cuts[p + 1]);
                    const double hal = 0.5 * (cuts[p + 1] - cuts[p]);
                    if (hal <= 0.0)
                        continue;
                    for (int qa = 0; qa < r.order(); qa++) {
                        const double x = mid + hal * r.nodes[qa];
                        const double wx = hal * r.weights[qa];
                        const double pa0 = (a1 - x) / h; // phi_ea at x
                        const double pa1 = (x - a0) / h; // phi_{ea+1} at x
                        // Valid y-ranges within eb on either side of (x-1, x+1).
                        for (int side = 0; side < 2; side++) {
                            const double ylo = side == 0 ? b0 : std::max(b0, x + 1.0);
                            const double yhi = side == 0 ? std::min(b1, x - 1.0) : b1;
                            if (!(ylo < yhi))
                                continue;
                            const double ymid = 0.5 * (ylo + yhi);
                            const double yhal = 0.5 * (yhi - ylo);
                            double sb0 = 0.0, sb1 = 0.0;
                            for (int qb = 0; qb < r.order(); qb++) {
                                const double y = ymid + yhal * r.nodes[qb];
                                const double w =
                                    yhal * r.weights[qb] / std::fabs(x - y);
                                sb0 += w * (b1 - y) / h;
                                sb1 += w * (y - b0) / h;
                            }
                            K[size_t(ea) * n + eb] += wx * pa0 * sb0;
                            K[size_t(ea) * n + eb + 1] += wx * pa0 * sb1;
                            K[size_t(ea + 1) * n + eb] += wx * pa1 * sb0;
                            K[size_t(ea + 1) * n + eb + 1] += wx * pa1 * sb1;
                        }
                    }
                }
            }
        }
    }

    SymMatrix B = assemble_mass(mesh);
    B *= constants().rho1;
    // Symmetrize the kernel contribution (quadrature breaks bit-symmetry).
    for (int i = 0; i < n; i++)
        for (int j = i; j < n; j++) {
            const double k = 0.5 * (K[size_t(i) * n + j] + K[size_t(j) * n + i]);
            if (k != 0.0)
                B.set(i, j, B(i, j) - k);
        }
    return B;
}

SymMatrix energy_matrix(const Mesh& mesh) {
    return assemble_log(mesh) - assemble_B(mesh, 16);
}

double quad_oracle_EL(const Mesh& mesh, int i, int j, double tol) {
    if (i < 0 || i > mesh.N + 1 || j < 0 || j > mesh.N + 1)
        throw std::invalid_argument("quad_oracle_EL: index out of range");
    const CompactFunction ui = compact_basis(mesh, i);
    const double inner_tol = tol / 16.0;

    // Elements supporting phi_j.
    std::vector<int> elems;
    if (j > 0)
        elems.push_back(j - 1);
    if (j <= mesh.N)
        elems.push_back(j);

    double prev = 0.0, diff = 0.0;
    for (int level = 0; level < 5; level++) {
        const int order = 10 + 6 * level;
        const int panels = 1 << level;
        double val = 0.0;
        for (int e : elems) {
            const double a = mesh.nodes[e], b = mesh.nodes[e + 1];
            auto f = [&](double x) {
                return eval_loglap(ui, x, inner_tol) * basis_eval(mesh, j, x);
            };
            if (e == 0)
                val += integrate_graded(f, a, b, SingularEnd::Left, 20, order);
            else if (e == mesh.N)
                val += integrate_graded(f, a, b, SingularEnd::Right, 20, order);
            else
                val += integrate_composite(f, a, b, panels, order);
        }
        if (level > 0) {
            diff = std::fabs(val - prev);
            if (diff < tol)
                return val;
        }
        prev = val;
    }
    throw convergence_error("quad_oracle_EL: refinement budget exhausted", prev, diff);
}

} // namespace loglap
