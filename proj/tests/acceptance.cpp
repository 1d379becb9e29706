// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "korobov/approximator.hpp"
#include "korobov/complexity.hpp"
#include "korobov/errors.hpp"
#include "korobov/spectrum.hpp"
#include "korobov/tractability.hpp"
#include "korobov/zeta.hpp"

using namespace korobov;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
    bool ok;
    std::string detail;
};

int failures = 0;

void report(int id, const char* name, double limit_s, const std::function<Outcome()>& body) {
    const auto start = Clock::now();
    Outcome o{false, ""};
    try {
        o = body();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    if (limit_s > 0 && secs >= limit_s) {
        o.ok = false;
        o.detail += " [over time limit]";
    }
    if (!o.ok) ++failures;
    std::printf("%s %d %s: %s (%.2fs)\n", o.ok ? "PASS" : "FAIL", id, name, o.detail.c_str(), secs);
    std::fflush(stdout);
}

std::vector<WeightSpec> weight_grid() {
    return {weights::Constant{1}, weights::PolyDecay{2}, weights::Explicit{{0.5, 0.25, 0.125, 0.0625}}};
}

std::vector<SmoothnessSpec> smoothness_grid() {
    return {smoothness::Constant{1}, smoothness::Explicit{{0.6, 1, 2}}};
}

std::vector<KorobovParams> param_grid() {
    std::vector<KorobovParams> out;
    for (const auto& w : weight_grid())
        for (const auto& s : smoothness_grid()) out.emplace_back(w, s);
    return out;
}

std::string label(const KorobovParams& p) {
    return to_string(p.weights()) + "/" + to_string(p.smoothness());
}

const std::vector<double> kEpsGrid = {0.9, 0.6, 0.45, 0.3, 0.1};

Outcome spectrum_equivalence() {
    constexpr std::size_t n = 2000;
    int configs = 0;
    double worst = 0.0;
    for (const auto& p : param_grid())
        for (std::size_t d = 1; d <= 3; ++d) {
            const auto top = enumerate_top(p, d, n);
            // Size the box so every eigenvalue above half of lambda_n fits.
            const double target = top.back().value / 2;
            std::vector<std::size_t> kmax(d);
            for (std::size_t j = 0; j < d; ++j)
                kmax[j] = static_cast<std::size_t>(
                    std::ceil(std::pow(p.gamma(j + 1) / target, 1.0 / (2 * p.alpha(j + 1)))));
            const auto bf = brute_force_spectrum(p, kmax, 100'000'000);
            const double limit = brute_force_validity_threshold(p, kmax);
            if (bf.size() < n || !(bf[n - 1].value > limit))
                return {false, "box does not certify top " + std::to_string(n) + " for " + label(p)};
            for (std::size_t i = 0; i < n; ++i) {
                const double rel = std::abs(top[i].value - bf[i].value) / bf[i].value;
                worst = std::max(worst, rel);
                if (rel > 1e-12)
                    return {false, label(p) + " d=" + std::to_string(d) + " rank " + std::to_string(i + 1)};
            }
            ++configs;
        }
    char buf[128];
    std::snprintf(buf, sizeof buf, "%d configurations, n=%zu, max rel err %.3g", configs, n, worst);
    return {true, buf};
}

Outcome counting_equivalence() {
    int cases = 0;
    for (const auto& p : param_grid())
        for (std::size_t d = 1; d <= 4; ++d)
            for (double eps : kEpsGrid) {
                const ComplexityQuery q{p, d, eps};
                const auto a = info_complexity(q).count;
                const auto b = count_box_oracle(q, minimal_certified_kmax(q));
                if (a != b)
                    return {false, label(p) + " d=" + std::to_string(d) + " eps=" + std::to_string(eps) +
                                       ": " + std::to_string(a) + " vs " + std::to_string(b)};
                ++cases;
            }
    return {true, std::to_string(cases) + " (params, d, eps) cases equal"};
}

Outcome curse_exactness() {
    const auto p = validate(weights::Constant{1}, smoothness::Constant{1});
    std::uint64_t three = 1;
    std::uint64_t at7 = 0;
    for (std::size_t d = 1; d <= 7; ++d) {
        three *= 3;
        const auto n = info_complexity({p, d, 0.5}).count;
        if (n != three) return {false, "d=" + std::to_string(d) + " count " + std::to_string(n)};
        at7 = n;
        for (double eps : {0.95, 0.8, 0.7, 0.3, 0.2, 0.1})
            if (info_complexity({p, d, eps}).count < three)
                return {false, "below 3^d at d=" + std::to_string(d) + " eps=" + std::to_string(eps)};
    }
    return {true, "n(0.5, d) = 3^d for d=1..7, n(0.5, 7) = " + std::to_string(at7)};
}

Outcome product_identity() {
    const auto p = validate(weights::Explicit{{0.5, 0.5}}, smoothness::Explicit{{1, 1}});
    const double total = eigen_sum_tau(p, 2, 2.0);
    SpectrumIterator it(p, 2);
    double sum = 0.0, comp = 0.0;
    for (int i = 0; i < 100000; ++i) {
        const double v = it.next().value;
        const double t = v * v;
        const double s = sum + t;
        comp += std::abs(sum) >= t ? (sum - s) + t : (t - s) + sum;
        sum = s;
        if (sum + comp > total) return {false, "partial sum exceeds product at term " + std::to_string(i + 1)};
    }
    const double gap = total - (sum + comp);
    char buf[160];
    std::snprintf(buf, sizeof buf, "product %.16g, gap after 1e5 terms %.3g", total, gap);
    return {gap < 1e-6 && std::abs(total - 2.37517912926887196) < 1e-12, buf};
}

Outcome upper_bound() {
    int checked = 0, violations = 0;
    for (const auto& p : param_grid())
        for (std::size_t d = 1; d <= 4; ++d)
            for (double eps : kEpsGrid)
                for (double tau : {0.5, 0.75, 1.0, 2.0, 4.0}) {
                    if (!(2 * p.alpha(1) * tau > 1)) continue;
                    const ComplexityQuery q{p, d, eps};
                    if (static_cast<double>(info_complexity(q).count) > info_complexity_upper_bound(q, tau))
                        ++violations;
                    ++checked;
                }
    return {violations == 0, std::to_string(checked) + " checks, " + std::to_string(violations) + " violations"};
}

Outcome optimal_error() {
    double worst_gap = 0.0;
    for (const auto& p : param_grid())
        for (std::size_t d = 1; d <= 3; ++d)
            for (std::size_t n = 0; n <= 50; ++n) {
                const auto w = worst_case_witness(p, d, n);
                worst_gap = std::max(worst_gap, std::abs(w.error - worst_case_error(p, d, n)));
            }
    if (worst_gap > 1e-12) return {false, "witness gap " + std::to_string(worst_gap)};

    std::mt19937 rng(12345);
    std::uniform_int_distribution<int> kdist(-5, 5), terms(1, 15);
    std::normal_distribution<double> coef;
    const auto grid = param_grid();
    double worst_excess = -1.0;
    for (int trial = 0; trial < 200; ++trial) {
        const auto& p = grid[trial % grid.size()];
        const std::size_t d = 1 + trial % 3;
        const std::size_t n = static_cast<std::size_t>(trial * 7) % 51;
        FourierPoly f(d);
        const int m = terms(rng);
        for (int t = 0; t < m; ++t) {
            Frequency k(d);
            for (auto& v : k) v = kdist(rng);
            f.set(k, {coef(rng), coef(rng)});
        }
        const double norm = h_norm(f, p);
        FourierPoly unit(d);
        for (const auto& [k, c] : f.terms()) unit.set(k, c / norm);
        const double excess = l2_error(unit, approximate(unit, p, n)) - worst_case_error(p, d, n);
        worst_excess = std::max(worst_excess, excess);
    }
    char buf[160];
    std::snprintf(buf, sizeof buf, "witness gap %.3g; 200 random unit-ball polys, max excess over bound %.3g",
                  worst_gap, worst_excess);
    return {worst_excess <= 1e-12, buf};
}

Outcome exponent_formula() {
    const double a = spt_exponent(validate(weights::PolyDecay{4}, smoothness::Constant{1}));
    const double b = spt_exponent(validate(weights::Geometric{0.5}, smoothness::Constant{1}));
    const double c = spt_exponent(validate(weights::PolyDecay{1}, smoothness::Constant{2}));
    if (a != 1.0 || b != 1.0 || c != 2.0) return {false, "closed-form exponents differ from 1, 1, 2"};
    std::vector<double> grid;
    for (int i = 2; i <= 10; ++i) grid.push_back(std::ldexp(1.0, -i));
    const auto fit = fit_exponent(validate(weights::PolyDecay{4}, smoothness::Constant{1}), 20, grid);
    char buf[160];
    std::snprintf(buf, sizeof buf, "p_str 1, 1, 2; fitted slope %.6f (d=20, eps 2^-2..2^-10), required [0.65, 1.35]",
                  fit.slope);
    return {fit.slope >= 0.65 && fit.slope <= 1.35, buf};
}

Outcome zeta_accuracy() {
    constexpr double pi = std::numbers::pi;
    const double e2 = std::abs(riemann_zeta(2).value - pi * pi / 6);
    const double e4 = std::abs(riemann_zeta(4).value - pi * pi * pi * pi / 90);
    char buf[96];
    std::snprintf(buf, sizeof buf, "|err| at s=2: %.3g, s=4: %.3g", e2, e4);
    return {e2 <= 1e-12 && e4 <= 1e-12, buf};
}

}  // namespace

int main() {
    report(1, "spectrum oracle equivalence", 30, spectrum_equivalence);
    report(2, "counting equivalence", 60, counting_equivalence);
    report(3, "curse exactness", 0, curse_exactness);
    report(4, "product identity", 0, product_identity);
    report(5, "upper bound", 0, upper_bound);
    report(6, "optimal error", 0, optimal_error);
    report(7, "exponent formula", 300, exponent_formula);
    report(8, "zeta accuracy", 0, zeta_accuracy);
    std::printf("%d of 8 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
