#include "korobov/tractability.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <variant>

#include "korobov/errors.hpp"

namespace korobov {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double exponent_formula(double delta, double alpha1) {
    const double inv_delta = std::isinf(delta) ? 0.0 : 1.0 / delta;
    return 2.0 * std::max(inv_delta, 1.0 / (2.0 * alpha1));
}

// Curse of dimensionality is forced exactly when gamma_j == 1 for all j.
Trivalent curse_from_weights(const WeightSpec& spec) {
    if (const auto* w = std::get_if<weights::Constant>(&spec))
        return w->c == 1.0 ? Trivalent::Yes : Trivalent::No;
    if (const auto* w = std::get_if<weights::PolyDecay>(&spec))
        return w->a == 0.0 ? Trivalent::Yes : Trivalent::No;
    if (const auto* w = std::get_if<weights::Geometric>(&spec))
        return w->q == 1.0 ? Trivalent::Yes : Trivalent::No;
    return Trivalent::EmpiricalOnly;
}

}  // namespace

std::string to_string(Trivalent t) {
    switch (t) {
        case Trivalent::Yes: return "yes";
        case Trivalent::No: return "no";
        case Trivalent::EmpiricalOnly: return "empirical-only";
    }
    return "?";
}

TractabilityReport classify(const KorobovParams& params) {
    TractabilityReport r;
    r.delta = delta(params);
    r.alpha1 = params.alpha(1);

    if (r.delta.exact)
        r.spt = r.delta.value > 0.0 ? Trivalent::Yes : Trivalent::No;
    else
        r.spt = Trivalent::EmpiricalOnly;
    r.pt = r.spt;
    if (r.spt != Trivalent::No)
        r.p_str = r.delta.value > 0.0 ? exponent_formula(r.delta.value, r.alpha1) : kInf;

    r.curse = curse_from_weights(params.weights());

    if (r.spt == Trivalent::EmpiricalOnly)
        r.notes += "delta estimated from a finite window of an explicit weight list; spt, pt and "
                   "p_str are empirical, not certified. ";
    if (r.curse == Trivalent::No)
        r.notes += "curse=no reflects only that gamma_j does not tend to 1; no lower bound is "
                   "claimed for that case. ";
    r.notes += "(t1,t2)-weak tractability holds for every t1 > 1 and t2 > 0.";
    return r;
}

double spt_exponent(const KorobovParams& params) {
    const auto est = delta(params);
    if (!est.exact)
        throw NotApplicable("p_str needs an exact delta; explicit weights only give an estimate");
    if (!(est.value > 0.0))
        throw NotApplicable("delta = 0: the problem is not strongly polynomially tractable");
    return exponent_formula(est.value, params.alpha(1));
}

CurseWitness curse_witness(const KorobovParams& params, double epsilon, std::size_t d,
                           bool verify, CountOptions options) {
    if (!(epsilon > 0.0 && epsilon < 1.0))
        throw RangeViolation("epsilon must lie in (0,1)");
    for (std::size_t j = 1; j <= d; ++j)
        if (params.gamma(j) != 1.0) return {};
    if (d > 40) throw RangeViolation("3^d overflows 64 bits for d > 40");

    CurseWitness w;
    w.lower_bound = 1;
    for (std::size_t j = 0; j < d; ++j) w.lower_bound *= 3;
    w.holds = true;
    if (verify) {
        const auto res = info_complexity({params, d, epsilon}, options);
        if (res.count < w.lower_bound)
            throw std::logic_error("lattice count fell below 3^d with unit weights");
        w.exact_count = res.count;
    }
    return w;
}

ExponentFit fit_exponent(const KorobovParams& params, std::size_t d,
                         std::span<const double> epsilon_grid, CountOptions options) {
    if (epsilon_grid.size() < 4) throw RangeViolation("exponent fit needs at least 4 epsilons");
    for (std::size_t i = 0; i < epsilon_grid.size(); ++i) {
        if (!(epsilon_grid[i] > 0.0 && epsilon_grid[i] < 1.0))
            throw RangeViolation("epsilon grid values must lie in (0,1)");
        if (i > 0 && !(epsilon_grid[i] < epsilon_grid[i - 1]))
            throw RangeViolation("epsilon grid must be strictly decreasing");
    }

    ExponentFit fit;
    fit.d = d;
    fit.epsilons.assign(epsilon_grid.begin(), epsilon_grid.end());
    for (double eps : epsilon_grid) fit.counts.push_back(info_complexity({params, d, eps}, options).count);

    const auto n = static_cast<double>(epsilon_grid.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    std::vector<double> xs, ys;
    for (std::size_t i = 0; i < epsilon_grid.size(); ++i) {
        const double x = -std::log(epsilon_grid[i]);
        const double y = std::log(static_cast<double>(fit.counts[i]));
        xs.push_back(x);
        ys.push_back(y);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    const double denom = n * sxx - sx * sx;
    fit.slope = (n * sxy - sx * sy) / denom;
    fit.intercept = (sy - fit.slope * sx) / n;
    double ss = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double e = ys[i] - (fit.intercept + fit.slope * xs[i]);
        ss += e * e;
    }
    fit.residual = std::sqrt(ss / n);
    return fit;
}

std::vector<double> weak_tractability_ratios(const KorobovParams& params, double epsilon,
                                             std::span<const std::size_t> dims, double t1,
                                             double t2, CountOptions options) {
    std::vector<double> out;
    for (auto d : dims) {
        const auto count = info_complexity({params, d, epsilon}, options).count;
        out.push_back(std::log(static_cast<double>(count)) /
                      (std::pow(static_cast<double>(d), t1) + std::pow(epsilon, -t2)));
    }
    return out;
}

}  // namespace korobov
