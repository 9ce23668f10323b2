#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "loglap/assembly.hpp"
#include "loglap/loglap_eval.hpp"
#include "loglap/quadrature.hpp"
#include "loglap/special_functions.hpp"
#include "loglap/spectral.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

using namespace loglap;

TEST_CASE("mass matrix entries") {
    const Mesh m = build_mesh(1.0, 1);
    const SymMatrix M = assemble_mass(m);
    const double h = 0.5;
    CHECK(M(0, 0) == doctest::Approx(h / 3).epsilon(1e-15));
    CHECK(M(1, 1) == doctest::Approx(2 * h / 3).epsilon(1e-15));
    CHECK(M(2, 2) == doctest::Approx(h / 3).epsilon(1e-15));
    CHECK(M(0, 1) == doctest::Approx(h / 6).epsilon(1e-15));
    CHECK(M(0, 2) == 0.0);
}

TEST_CASE("mass matrix row sums and total mass") {
    const Mesh m = build_mesh(3.0, 9);
    const SymMatrix M = assemble_mass(m);
    double total = 0.0;
    for (int i = 0; i < M.order(); i++) {
        double row = 0.0;
        for (int j = 0; j < M.order(); j++)
            row += M(i, j);
        const double want = (i == 0 || i == M.order() - 1) ? m.h / 2 : m.h;
        CHECK(row == doctest::Approx(want).epsilon(1e-14));
        total += row;
    }
    CHECK(total == doctest::Approx(m.L).epsilon(1e-14));
}

TEST_CASE("fractional matrix s->0 recovers the mass matrix entrywise") {
    const Mesh m = build_mesh(1.0, 4);
    const SymMatrix A = assemble_frac(m, 1e-7);
    CHECK(std::fabs(A(2, 2) - 2 * m.h / 3) < 1e-5 * m.h);
    CHECK(std::fabs(A(0, 0) - m.h / 3) < 1e-5 * m.h);
}

TEST_CASE("fractional matrix domain of s") {
    const Mesh m = build_mesh(1.0, 2);
    CHECK_THROWS_AS(assemble_frac(m, 0.0), std::domain_error);
    CHECK_THROWS_AS(assemble_frac(m, 0.5), std::domain_error);
    CHECK_THROWS_AS(assemble_frac(m, 0.6), std::domain_error);
}

TEST_CASE("fractional far entry against brute-force double quadrature") {
    // |i-j| = 3: supports disjoint, kernel smooth, tensor Gauss per element pair
    const Mesh m = build_mesh(1.0, 8);
    const double s = 0.1;
    const SymMatrix A = assemble_frac(m, s);
    const int i = 2, j = 5;
    double acc = 0.0;
    const QuadRule& r = gauss_legendre(24);
    for (int ea : {i - 1, i})
        for (int eb : {j - 1, j}) {
            const double a0 = m.nodes[ea], a1 = m.nodes[ea + 1];
            const double b0 = m.nodes[eb], b1 = m.nodes[eb + 1];
            for (int qa = 0; qa < r.order(); qa++) {
                const double x = 0.5 * (a0 + a1) + 0.5 * (a1 - a0) * r.nodes[qa];
                for (int qb = 0; qb < r.order(); qb++) {
                    const double y = 0.5 * (b0 + b1) + 0.5 * (b1 - b0) * r.nodes[qb];
                    acc += 0.25 * (a1 - a0) * (b1 - b0) * r.weights[qa] * r.weights[qb] *
                           basis_eval(m, i, x) * basis_eval(m, j, y) /
                           std::pow(std::fabs(x - y), 1.0 + 2.0 * s);
                }
            }
        }
    // E_s(phi_i, phi_j) = -c_{1,s} int int phi_i(x) phi_j(y)/|x-y|^{1+2s}
    const double oracle = -c1s(s) * acc;
    CHECK(std::fabs(A(i, j) - oracle) < 1e-6);
}

TEST_CASE("log matrix frozen values at L=1, N=1") {
    const Mesh m = build_mesh(1.0, 1);
    const SymMatrix A = assemble_log(m);
    // oracle-validated evaluations of the closed-form case table at h = 0.5
    CHECK(A(1, 1) == doctest::Approx(0.3753137).epsilon(1e-6));
    CHECK(A(0, 0) == doctest::Approx(0.4830883).epsilon(1e-6));
    CHECK(A(0, 1) == doctest::Approx(-0.0728382).epsilon(1e-5));
    // (0,2) is the opposite half-hat pair: h * (2/3)(ln 2 - 1)
    CHECK(A(0, 2) == doctest::Approx(0.5 * (2.0 / 3.0) * (std::log(2.0) - 1.0))
                         .epsilon(1e-12));
    // cross-check the diagonal with the finite-difference oracle to 4 digits
    const SymMatrix D = assemble_log_fd_oracle(m, 1e-3);
    CHECK(A(1, 1) == doctest::Approx(D(1, 1)).epsilon(1e-4));
}

TEST_CASE("assembled matrices are exactly symmetric and persymmetric") {
    for (auto [L, N] : std::vector<std::pair<double, int>>{{1.0, 1}, {1.0, 8}, {2.5, 13}}) {
        const Mesh m = build_mesh(L, N);
        for (const SymMatrix& A :
             {assemble_log(m), assemble_frac(m, 0.2), assemble_mass(m)}) {
            CHECK(A.is_symmetric());
            const int n = A.order();
            // end reflection: A(i,j) == A(n-1-i, n-1-j)
            for (int i = 0; i < n; i++)
                for (int j = 0; j < n; j++)
                    CHECK(A(i, j) == A(n - 1 - i, n - 1 - j));
        }
    }
}

TEST_CASE("interior block is Toeplitz") {
    for (int N : {8, 33, 64}) {
        const Mesh m = build_mesh(1.3, N);
        const SymMatrix A = assemble_log(m);
        const SymMatrix F = assemble_frac(m, 0.11);
        for (int i = 1; i <= N; i++)
            for (int j = 1; j <= N; j++) {
                const int k = std::abs(j - i);
                if (1 + k <= N) {
                    CHECK(A(i, j) == A(1, 1 + k));
                    CHECK(F(i, j) == F(1, 1 + k));
                }
            }
    }
}

TEST_CASE("reflection completes the missing corner entry") {
    const Mesh m = build_mesh(1.0, 6);
    const SymMatrix A = assemble_log(m);
    CHECK(A(0, 1) == A(m.N, m.N + 1));
    CHECK(A(0, 0) == A(m.N + 1, m.N + 1));
}

TEST_CASE("s->0 limit is linear in s") {
    const Mesh m = build_mesh(1.0, 8);
    const SymMatrix M = assemble_mass(m);
    double prev = 0.0;
    for (double s : {1e-2, 1e-3, 1e-4}) {
        const double d = max_entry_diff(assemble_frac(m, s), M);
        if (prev > 0.0) {
            const double ratio = prev / d;
            CHECK(ratio > 8.0);
            CHECK(ratio < 12.0);
        }
        prev = d;
    }
}

TEST_CASE("finite-difference derivative identity") {
    for (auto [L, N] : std::vector<std::pair<double, int>>{{1.0, 8}, {2.0, 16}, {0.5, 4}}) {
        const Mesh m = build_mesh(L, N);
        const SymMatrix A = assemble_log(m);
        const double d1 = max_entry_diff(A, assemble_log_fd_oracle(m, 1e-3));
        const double d2 = max_entry_diff(A, assemble_log_fd_oracle(m, 5e-4));
        CHECK(d1 < 1e-4 * m.h);
        const double ratio = d1 / d2;
        CHECK(ratio > 3.0);
        CHECK(ratio < 5.0);
    }
    CHECK_THROWS_AS(assemble_log_fd_oracle(build_mesh(1.0, 2), 0.3),
                    std::invalid_argument);
}

TEST_CASE("fd oracle Q(s) difference quotient converges") {
    const Mesh m = build_mesh(1.0, 6);
    const SymMatrix M = assemble_mass(m);
    auto Q = [&](double s) {
        SymMatrix q = assemble_frac(m, s);
        q -= M;
        q *= 1.0 / s;
        return q;
    };
    const double d1 = max_entry_diff(Q(1e-2), Q(1e-3));
    const double d2 = max_entry_diff(Q(1e-3), Q(1e-4));
    CHECK(d1 > d2);
}

TEST_CASE("fd oracle interior entries depend only on h") {
    // same h, different N: interior entries coincide
    const SymMatrix D1 = assemble_log_fd_oracle(build_mesh(1.0, 3), 1e-3);
    const SymMatrix D2 = assemble_log_fd_oracle(build_mesh(2.0, 7), 1e-3);
    CHECK(std::fabs(D1(1, 1) - D2(1, 1)) < 1e-14);
    CHECK(std::fabs(D1(1, 2) - D2(1, 2)) < 1e-14);
    CHECK(std::fabs(D1(0, 0) - D2(0, 0)) < 1e-14);
    CHECK(std::fabs(D1(0, 1) - D2(0, 1)) < 1e-14);
}

TEST_CASE("matrix scaling law") {
    const int N = 32;
    const SymMatrix A1 = assemble_log(build_mesh(1.0, N));
    for (double r : {2.0, 0.5, 10.0}) {
        const Mesh mr = build_mesh(r, N);
        SymMatrix rhs = A1;
        rhs *= r;
        SymMatrix corr = assemble_mass(mr);
        corr *= 2.0 * std::log(r);
        rhs -= corr;
        CHECK(max_entry_diff(assemble_log(mr), rhs) < 1e-12);
    }
}

TEST_CASE("closed-form and kernel-integral coefficient routes agree") {
    for (int k = 3; k <= 30; k++) {
        CHECK(coef::log_far_direct(k) ==
              doctest::Approx(coef::log_far_integral(k)).epsilon(1e-9));
        CHECK(coef::log_row0_direct(k, 200) ==
              doctest::Approx(coef::log_row0_integral(k, 200)).epsilon(1e-9));
    }
    CHECK(coef::log_row0_direct(2, 200) == doctest::Approx(-1.0 / 3.0).epsilon(1e-15));
    for (double s : {0.01, 0.1, 0.3}) {
        for (int k = 3; k <= 30; k++) {
            CHECK(coef::xi_frac_direct(k, s) ==
                  doctest::Approx(coef::xi_frac_integral(k, s)).epsilon(1e-8));
            CHECK(coef::gamma_frac_direct(k, s) ==
                  doctest::Approx(coef::gamma_frac_integral(k, s)).epsilon(1e-8));
            CHECK(coef::zeta_frac_direct(k, s) ==
                  doctest::Approx(coef::zeta_frac_integral(k, s)).epsilon(1e-8));
        }
        // the distance-2 interior constant matches q_2/6 = -p/3
        const double p = -24 * std::log(3.0) - 12 * std::log(4.0) - 16 * std::log(9.0) +
                         27 * std::log(16.0) + std::log(144.0);
        CHECK(coef::log_far(2) / 6.0 == doctest::Approx(-p / 3.0).epsilon(1e-13));
    }
    for (int N : {2, 5, 20, 31})
        CHECK(coef::log_row0_direct(N + 1, N) ==
              doctest::Approx(coef::log_row0_integral(N + 1, N)).epsilon(1e-9));
}

TEST_CASE("B-form without kernel range reduces to rho1 M") {
    for (double L : {0.5, 0.9}) {
        const Mesh m = build_mesh(L, 6);
        SymMatrix M = assemble_mass(m);
        M *= constants().rho1;
        CHECK(max_entry_diff(assemble_B(m, 16), M) == 0.0);
    }
    CHECK_THROWS_AS(assemble_B(build_mesh(1.0, 2), 1), std::invalid_argument);
}

TEST_CASE("B-form kernel activates beyond distance 1") {
    const Mesh m = build_mesh(3.0, 5);
    const SymMatrix B = assemble_B(m, 16);
    const SymMatrix B2 = assemble_B(m, 24);
    // supports of the two half-hats sit 2.5 apart: kernel term only
    CHECK(B(0, m.N + 1) < 0.0);
    CHECK(assemble_mass(m)(0, m.N + 1) == 0.0);
    CHECK(max_entry_diff(B, B2) < 1e-8);
    CHECK(B.is_symmetric());
}

TEST_CASE("energy matrix is positive definite") {
    for (auto [L, N] : std::vector<std::pair<double, int>>{{0.5, 8}, {1.0, 16}, {8.0, 32}}) {
        const SymMatrix E = energy_matrix(build_mesh(L, N));
        CHECK(E.is_symmetric());
        const Spectrum s = eig_sym(E, false);
        CHECK(s.eigenvalues[0] > 0.0);
    }
}

TEST_CASE("energy quadratic form against the singular-quadrature oracle") {
    // e_1' A^E e_1 for the interior hat on (0,1), N=3: the energy scalar
    // product evaluates as (1/2) int int_{Omega^2} (d u)^2/|x-y| + int h_Om u^2
    // (consistent with E_L(u,v) = int (L u) v and E_L = E + B on L <= 1).
    const Mesh m = build_mesh(1.0, 3);
    const SymMatrix E = energy_matrix(m);
    auto phi = [&](double x) { return basis_eval(m, 1, x); };

    // outer integration split per element (the inner integral has kinks in x
    // at every node)
    const QuadRule& r = gauss_legendre(24);
    double dbl = 0.0;
    for (int e = 0; e <= m.N; e++) {
        for (int i = 0; i < r.order(); i++) {
            const double x =
                0.5 * (m.nodes[e] + m.nodes[e + 1]) + 0.5 * m.h * r.nodes[i];
            auto f = [&](double t) {
                const double d = phi(x) - phi(x + t);
                return d * d / t;
            };
            dbl += 0.5 * m.h * r.weights[i] *
                   integrate_graded(f, 0.0, 1.0 - x, SingularEnd::Left, 40, 16);
        }
    }
    const double weighted = integrate_graded_both(
        [&](double x) { return -std::log(x * (1.0 - x)) * phi(x) * phi(x); }, 0.0, 1.0,
        40, 16);
    // each unordered pair enters once: int_{x<y, |x-y|<1} over all real pairs
    const double oracle = dbl + weighted;
    CHECK(std::fabs(E(1, 1) - oracle) < 1e-4);
}

TEST_CASE("quadrature oracle agrees with the closed form") {
    const Mesh m = build_mesh(1.0, 8);
    const SymMatrix A = assemble_log(m);
    CHECK(std::fabs(quad_oracle_EL(m, 4, 4, 1e-5) - A(4, 4)) < 1e-4);

    // disjoint far supports on a longer interval: the q_k/6 case
    const Mesh m3 = build_mesh(3.0, 8);
    const SymMatrix A3 = assemble_log(m3);
    CHECK(std::fabs(quad_oracle_EL(m3, 2, 7, 1e-6) - A3(2, 7)) < 1e-6);

    // oracle symmetry
    const double vij = quad_oracle_EL(m, 2, 3, 1e-5);
    const double vji = quad_oracle_EL(m, 3, 2, 1e-5);
    CHECK(std::fabs(vij - vji) < 2e-5);

    CHECK_THROWS_AS(quad_oracle_EL(m, -1, 0, 1e-4), std::invalid_argument);
}

TEST_CASE("quadrature oracle on random entries") {
    std::mt19937 rng(2024);
    for (auto [L, N] : std::vector<std::pair<double, int>>{{1.0, 8}, {2.0, 6}}) {
        const Mesh m = build_mesh(L, N);
        const SymMatrix A = assemble_log(m);
        std::uniform_int_distribution<int> idx(0, N + 1);
        for (int t = 0; t < 10; t++) {
            const int i = idx(rng), j = idx(rng);
            CHECK(std::fabs(quad_oracle_EL(m, i, j, 1e-4) - A(i, j)) < 1e-3);
        }
    }
}

TEST_CASE("matrix csv round-trip") {
    const Mesh m = build_mesh(1.0, 4);
    const SymMatrix A = assemble_log(m);
    const std::string path = "test_matrix_roundtrip.csv";
    write_matrix_csv(A, path);
    const SymMatrix B = read_matrix_csv(path);
    REQUIRE(B.order() == A.order());
    for (int i = 0; i < A.order(); i++)
        for (int j = 0; j < A.order(); j++)
            CHECK(A(i, j) == B(i, j));
    std::remove(path.c_str());
}
