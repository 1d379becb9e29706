#include "korobov/zeta.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <string>

#include "korobov/errors.hpp"

namespace korobov {

namespace {

// B_{2k} / (2k)! for k = 1..13.
constexpr std::array<double, 13> kBernoulliOverFactorial = {
    1.0 / 6.0 / 2.0,
    -1.0 / 30.0 / 24.0,
    1.0 / 42.0 / 720.0,
    -1.0 / 30.0 / 40320.0,
    5.0 / 66.0 / 3628800.0,
    -691.0 / 2730.0 / 479001600.0,
    7.0 / 6.0 / 87178291200.0,
    -3617.0 / 510.0 / 20922789888000.0,
    43867.0 / 798.0 / 6402373705728000.0,
    -174611.0 / 330.0 / 2432902008176640000.0,
    854513.0 / 138.0 / 1.1240007277776077e21,
    -236364091.0 / 2730.0 / 6.204484017332394e23,
    8553103.0 / 6.0 / 4.0329146112660565e26,
};

// Correction terms actually summed; the next one bounds the remainder.
constexpr int kCorrections = 12;

struct Partial {
    double value;
    double abs_sum;  // sum of |terms|, for the rounding estimate
    double remainder;
    int terms;
};

Partial euler_maclaurin(double s, int n) {
    const double nd = n;
    double sum = 0.0;
    double abs_sum = 0.0;
    for (int k = n - 1; k >= 1; --k) {
        const double t = std::pow(static_cast<double>(k), -s);
        sum += t;
        abs_sum += t;
    }
    const double n_pow = std::pow(nd, -s);
    const double integral = nd * n_pow / (s - 1.0);
    sum += integral + 0.5 * n_pow;
    abs_sum += integral + 0.5 * n_pow;

    // rising = s (s+1) ... (s+2k-2), scale = N^{-s-2k+1}
    double rising = s;
    double scale = n_pow / nd;
    double remainder = 0.0;
    for (int k = 1; k <= kCorrections + 1; ++k) {
        const double term = kBernoulliOverFactorial[k - 1] * rising * scale;
        if (k <= kCorrections) {
            sum += term;
            abs_sum += std::abs(term);
        } else {
            remainder = std::abs(term);
        }
        rising *= (s + 2.0 * k - 1.0) * (s + 2.0 * k);
        scale /= nd * nd;
    }
    return {sum, abs_sum, remainder, n + kCorrections + 2};
}

}  // namespace

ZetaValue riemann_zeta(double s) {
    if (!(s > 1.0))
        throw DomainError("zeta(s) requires s > 1, got s = " + std::to_string(s));

    // For real s the Euler-Maclaurin remainder after m corrections is bounded
    // by the magnitude of correction m+1.
    int n = 4;
    Partial p = euler_maclaurin(s, n);
    while (p.remainder > 1e-17 * p.value && n < (1 << 16)) {
        n *= 2;
        p = euler_maclaurin(s, n);
    }
    const double unit_roundoff = std::numeric_limits<double>::epsilon() / 2.0;
    const double rounding = (p.terms + 2) * unit_roundoff * p.abs_sum;
    return {s, p.value, p.remainder + rounding};
}

}  // namespace korobov
