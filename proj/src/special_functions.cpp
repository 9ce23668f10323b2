#include "loglap/special_functions.hpp"

#include <cmath>
#include <stdexcept>

namespace loglap {

namespace {

const double kEulerGamma = 0.57721566490153286060651209008;
const double kPi = 3.14159265358979323846264338328;

// Bernoulli coefficients B_{2n}/(2n) of the asymptotic digamma series.
const double kDigammaAsym[] = {
    1.0 / 12.0,      -1.0 / 120.0,      1.0 / 252.0, -1.0 / 240.0,
    1.0 / 132.0,     -691.0 / 32760.0,  1.0 / 12.0,
};

} // namespace

const Constants& constants() {
    static const Constants c = {kEulerGamma, rho1(), 0.1};
    return c;
}

double digamma(double x) {
    if (!(x > 0.0))
        throw std::domain_error("digamma: argument must be positive");
    // Shift into the asymptotic regime, psi(x) = psi(x+1) - 1/x.
    double acc = 0.0;
    while (x < 8.0) {
        acc -= 1.0 / x;
        x += 1.0;
    }
    const double inv = 1.0 / x;
    const double inv2 = inv * inv;
    double series = 0.0;
    double p = inv2;
    for (double c : kDigammaAsym) {
        series += c * p;
        p *= inv2;
    }
    return acc + std::log(x) - 0.5 * inv - series;
}

double gamma_fn(double x) {
    // Lanczos, g = 7, 9 terms.
    static const double g = 7.0;
    static const double coef[9] = {
        0.99999999999980993,   676.5203681218851,     -1259.1392167224028,
        771.32342877765313,    -176.61502916214059,   12.507343278686905,
        -0.13857109526572012,  9.9843695780195716e-6, 1.5056327351493116e-7,
    };
    if (x < 0.5) {
        // Reflection formula.
        return kPi / (std::sin(kPi * x) * gamma_fn(1.0 - x));
    }
    x -= 1.0;
    double a = coef[0];
    const double t = x + g + 0.5;
    for (int i = 1; i < 9; i++)
        a += coef[i] / (x + i);
    return std::sqrt(2.0 * kPi) * std::pow(t, x + 0.5) * std::exp(-t) * a;
}

double rho1() {
    return 2.0 * std::log(2.0) + digamma(0.5) - kEulerGamma;
}

double ell(double r) {
    if (!(r > 0.0))
        throw std::domain_error("ell: argument must be positive");
    return 1.0 / std::fabs(std::log(std::min(0.1, r)));
}

double c1s(double s) {
    if (!(s > 0.0) || !(s < 1.0))
        throw std::domain_error("c1s: s must lie in (0,1)");
    const double sin_form = std::sin(kPi * s) * gamma_fn(2.0 * s + 1.0) / kPi;
    const double ratio_form = std::pow(4.0, s) / std::sqrt(kPi) * s * (1.0 - s) *
                              gamma_fn(0.5 + s) / gamma_fn(2.0 - s);
    if (std::fabs(sin_form - ratio_form) > 1e-12 * std::fabs(sin_form))
        throw std::runtime_error("c1s: closed forms disagree beyond 1e-12");
    return sin_form;
}

} // namespace loglap
