#include "loglap/spectral.hpp"

#include "loglap/assembly.hpp"
#include "loglap/errors.hpp"
#include "loglap/mesh.hpp"

#include <lapacke.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <stdexcept>

namespace loglap {

Spectrum eig_sym(const SymMatrix& A, bool want_vectors) {
    const int n = A.order();
    Spectrum s;
    s.n = n;
    s.eigenvalues.resize(n);
    std::vector<double> work(A.data(), A.data() + size_t(n) * n);
    const lapack_int ret =
        LAPACKE_dsyevd(LAPACK_ROW_MAJOR, want_vectors ? 'V' : 'N', 'L', n, work.data(),
                       n, s.eigenvalues.data());
    if (ret != 0)
        throw convergence_error("eig_sym: eigensolver did not converge", 0.0, 0.0);
    if (want_vectors) {
        s.eigenvectors = std::move(work);
        s.has_vectors = true;
    }
    return s;
}

Spectrum eig_generalized(const SymMatrix& A, const SymMatrix& M) {
    const int n = A.order();
    if (M.order() != n)
        throw std::invalid_argument("eig_generalized: order mismatch");
    Spectrum s;
    s.n = n;
    s.eigenvalues.resize(n);
    std::vector<double> a(A.data(), A.data() + size_t(n) * n);
    std::vector<double> b(M.data(), M.data() + size_t(n) * n);
    const lapack_int ret = LAPACKE_dsygvd(LAPACK_ROW_MAJOR, 1, 'V', 'L', n, a.data(), n,
                                          b.data(), n, s.eigenvalues.data());
    if (ret > n)
        throw std::invalid_argument("eig_generalized: mass matrix not positive definite");
    if (ret != 0)
        throw convergence_error("eig_generalized: eigensolver did not converge", 0.0, 0.0);
    s.eigenvectors = std::move(a);
    s.has_vectors = true;
    return s;
}

double condition_number(const SymMatrix& A) {
    const Spectrum s = eig_sym(A, false);
    double mx = 0.0;
    double mn = std::numeric_limits<double>::infinity();
    for (double w : s.eigenvalues) {
        mx = std::max(mx, std::fabs(w));
        mn = std::min(mn, std::fabs(w));
    }
    if (mn == 0.0)
        return std::numeric_limits<double>::infinity();
    return mx / mn;
}

SymMatrix loglap_matrix_centered(double L, int N) {
    return assemble_log(build_mesh(2.0 * L, N));
}

ScanResult scan_condition(int N, double L_min, double L_max, int steps) {
    if (!(L_min > 0.0) || !(L_min < L_max))
        throw std::invalid_argument("scan_condition: need 0 < L_min < L_max");
    if (steps < 2)
        throw std::invalid_argument("scan_condition: need at least 2 steps");
    ScanResult r;
    r.N = N;
    r.lengths.resize(steps);
    r.cond_values.resize(steps);
    for (int i = 0; i < steps; i++) {
        const double L = L_min + (L_max - L_min) * i / (steps - 1);
        r.lengths[i] = L;
        r.cond_values[i] = condition_number(loglap_matrix_centered(L, N));
    }
    return r;
}

namespace {

// Golden-section maximization; returns the midpoint of the final bracket.
template <typename F>
double golden_max(F f, double a, double b, double tol) {
    const double invphi = 0.6180339887498949;
    const double fa = f(a);
    const double fb = f(b);
    double x1 = b - invphi * (b - a);
    double x2 = a + invphi * (b - a);
    double f1 = f(x1);
    double f2 = f(x2);
    double best_interior = std::max(f1, f2);
    int iters = 0;
    while (b - a > tol) {
        iters++;
        if (f1 < f2) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + invphi * (b - a);
            f2 = f(x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - invphi * (b - a);
            f1 = f(x1);
        }
        best_interior = std::max(best_interior, std::max(f1, f2));
        if (iters == 5 && !(best_interior > std::max(fa, fb)))
            throw bracket_error(
                "golden_max: no interior improvement over the bracket endpoints");
    }
    return 0.5 * (a + b);
}

} // namespace

LkTable find_Lk(int k, int N, std::pair<double, double> bracket, double tol) {
    if (!(bracket.first > 0.0) || !(bracket.first < bracket.second))
        throw std::invalid_argument("find_Lk: invalid bracket");
    if (!(tol > 0.0))
        throw std::invalid_argument("find_Lk: tol must be positive");
    auto cond_at = [N](double L) { return condition_number(loglap_matrix_centered(L, N)); };
    LkTable t;
    t.k = k;
    t.N = N;
    t.bracket = bracket;
    t.L_k = golden_max(cond_at, bracket.first, bracket.second, tol);
    t.cond_at_Lk = cond_at(t.L_k);
    t.cond_at_lo = cond_at(bracket.first);
    t.cond_at_hi = cond_at(bracket.second);
    return t;
}

std::pair<double, double> lk_default_bracket(int k) {
    switch (k) {
        case 1: return {0.6, 0.8};
        case 2: return {2.3, 2.5};
        case 3: return {3.8, 4.0};
        case 4: return {5.4, 5.6};
        case 5: return {7.0, 7.2};
        case 6: return {8.5, 8.7};
    }
    throw std::invalid_argument("lk_default_bracket: k must lie in 1..6");
}

double find_Lk_min_abs_eig(int N, std::pair<double, double> bracket, double tol) {
    auto neg_min_abs = [N](double L) {
        const Spectrum s = eig_sym(loglap_matrix_centered(L, N), false);
        double mn = std::numeric_limits<double>::infinity();
        for (double w : s.eigenvalues)
            mn = std::min(mn, std::fabs(w));
        return -mn;
    };
    return golden_max(neg_min_abs, bracket.first, bracket.second, tol);
}

double eigenvalue_by_scaling(double L, int k, const LkTable& lk) {
    if (lk.k != k)
        throw std::invalid_argument("eigenvalue_by_scaling: table is for a different k");
    return 2.0 * std::log(lk.L_k / L);
}

double reference_lambda(int k) {
    static const double refs[] = {-0.6878, 1.7331, 2.7275, 3.4122, 3.9091, 4.3142};
    if (k < 1 || k > 6)
        throw std::invalid_argument("reference_lambda: k must lie in 1..6");
    return refs[k - 1];
}

std::vector<FracCompareRow> frac_small_s_table(double s, const std::vector<int>& ks,
                                               const std::vector<LkTable>& lk) {
    // Reference lambda_k^s on (-1,1) for k = 1..3.
    struct Ref {
        double s;
        double lam[3];
    };
    static const Ref refs[] = {
        {0.005, {0.997, 1.009, 1.014}},
        {0.05, {0.973, 1.092, 1.148}},
        {0.1, {0.957, 1.197, 1.320}},
    };
    const Ref* ref = nullptr;
    for (const Ref& r : refs)
        if (std::fabs(r.s - s) < 1e-12)
            ref = &r;
    if (!ref)
        throw std::invalid_argument("frac_small_s_table: unsupported s");

    std::vector<FracCompareRow> rows;
    for (int k : ks) {
        if (k < 1 || k > 3)
            throw std::invalid_argument("frac_small_s_table: k must lie in 1..3");
        const LkTable* t = nullptr;
        for (const LkTable& cand : lk)
            if (cand.k == k)
                t = &cand;
        if (!t)
            throw std::invalid_argument("frac_small_s_table: missing L_k table");
        FracCompareRow row;
        row.k = k;
        row.lambda_s_ref = ref->lam[k - 1];
        row.computed = 1.0 + s * eigenvalue_by_scaling(1.0, k, *t);
        rows.push_back(row);
    }
    return rows;
}

void write_scan_csv(const ScanResult& scan, const std::string& path) {
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("write_scan_csv: cannot open " + path);
    out << "L,cond\n";
    char buf[90];
    for (size_t i = 0; i < scan.lengths.size(); i++) {
        std::snprintf(buf, sizeof buf, "%.17g,%.17g\n", scan.lengths[i],
                      scan.cond_values[i]);
        out << buf;
    }
}

void write_lk_csv(const std::vector<LkTable>& rows, const std::string& path) {
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("write_lk_csv: cannot open " + path);
    out << "k,N,L_k\n";
    char buf[90];
    for (const LkTable& t : rows) {
        std::snprintf(buf, sizeof buf, "%d,%d,%.17g\n", t.k, t.N, t.L_k);
        out << buf;
    }
}

} // namespace loglap
