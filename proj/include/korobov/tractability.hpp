#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "korobov/complexity.hpp"
#include "korobov/params.hpp"

namespace korobov {

enum class Trivalent { Yes, No, EmpiricalOnly };

std::string to_string(Trivalent t);

struct TractabilityReport {
    DeltaEstimate delta;
    double alpha1 = 0.0;
    Trivalent spt = Trivalent::No;
    Trivalent pt = Trivalent::No;  // always equal to spt
    std::optional<double> p_str;   // present unless spt == No; +inf allowed
    Trivalent curse = Trivalent::No;
    Trivalent wt_t1_gt_1 = Trivalent::Yes;  // holds for every admissible sequence
    std::string notes;
};

/// SPT and PT hold exactly when delta > 0. Closed-form weights are classified
/// symbolically; explicit lists only get EmpiricalOnly labels.
TractabilityReport classify(const KorobovParams& params);

/// p_str = 2 max(1/delta, 1/(2 alpha_1)). Throws NotApplicable unless delta is
/// exact and positive.
double spt_exponent(const KorobovParams& params);

struct CurseWitness {
    std::uint64_t lower_bound = 0;  // 3^d when it applies
    bool holds = false;
    std::optional<std::uint64_t> exact_count;
};

/// When gamma_1 = ... = gamma_d = 1 every k in {-1,0,1}^d has eigenvalue 1, so
/// n(epsilon, d) >= 3^d. With `verify` the exact count is computed and checked.
CurseWitness curse_witness(const KorobovParams& params, double epsilon, std::size_t d,
                           bool verify = true, CountOptions options = {});

struct ExponentFit {
    std::size_t d = 0;
    std::vector<double> epsilons;
    std::vector<std::uint64_t> counts;
    double slope = 0.0;  // least squares of ln(count) against ln(1/epsilon)
    double intercept = 0.0;
    double residual = 0.0;  // root mean square of the fit residuals
};

/// Needs at least 4 strictly decreasing epsilons in (0,1).
ExponentFit fit_exponent(const KorobovParams& params, std::size_t d,
                         std::span<const double> epsilon_grid, CountOptions options = {});

/// ln n(epsilon, d) / (d^t1 + epsilon^-t2) for each d; finite-sample view of
/// (t1,t2)-weak tractability.
std::vector<double> weak_tractability_ratios(const KorobovParams& params, double epsilon,
                                             std::span<const std::size_t> dims, double t1,
                                             double t2, CountOptions options = {});

}  // namespace korobov
