#pragma once

#include <cstddef>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace korobov {

// Weight sequences gamma_j, 1 >= gamma_1 >= gamma_2 >= ... >= 0.
namespace weights {
struct Constant {
    double c;
};
/// gamma_j = j^(-a)
struct PolyDecay {
    double a;
};
/// gamma_j = q^j
struct Geometric {
    double q;
};
/// Listed values, the last one repeated forever.
struct Explicit {
    std::vector<double> values;
};
}  // namespace weights

// Smoothness sequences alpha_j, 1/2 < alpha_1 <= alpha_2 <= ...
namespace smoothness {
struct Constant {
    double alpha;
};
/// alpha_j = alpha + b ln(j)
struct LogAffine {
    double alpha;
    double b;
};
struct Explicit {
    std::vector<double> values;
};
}  // namespace smoothness

using WeightSpec = std::variant<weights::Constant, weights::PolyDecay,
                                weights::Geometric, weights::Explicit>;
using SmoothnessSpec =
    std::variant<smoothness::Constant, smoothness::LogAffine, smoothness::Explicit>;

/// Validated pair of weight and smoothness sequences. Immutable.
class KorobovParams {
public:
    /// Throws MonotonicityViolation or RangeViolation.
    KorobovParams(WeightSpec weights, SmoothnessSpec smoothness);

    double gamma(std::size_t j) const;
    double alpha(std::size_t j) const;

    /// gamma_1..gamma_d and alpha_1..alpha_d.
    std::vector<double> gammas(std::size_t d) const;
    std::vector<double> alphas(std::size_t d) const;

    const WeightSpec& weights() const noexcept { return weights_; }
    const SmoothnessSpec& smoothness() const noexcept { return smoothness_; }

private:
    WeightSpec weights_;
    SmoothnessSpec smoothness_;
};

inline KorobovParams validate(WeightSpec weights, SmoothnessSpec smoothness) {
    return KorobovParams(std::move(weights), std::move(smoothness));
}

/// Lower decay exponent liminf ln(1/gamma_j) / ln(j).
struct DeltaEstimate {
    double value = 0.0;  // may be +inf
    bool exact = false;
    std::optional<std::pair<std::size_t, std::size_t>> window;
};

/// Exact for closed-form weights. Explicit weights give the minimum of
/// ln(1/gamma_j)/ln(j) over `window` (default: the second half of the listed
/// values) and are flagged inexact.
DeltaEstimate delta(const KorobovParams& params,
                    std::optional<std::pair<std::size_t, std::size_t>> window = std::nullopt);

// Text forms: "const:1", "poly:2", "geom:0.5", "list:0.5,0.25" for weights;
// "const:1", "logaffine:1,0.5", "list:0.6,0.8" for smoothness.
WeightSpec parse_weight_spec(std::string_view text);
SmoothnessSpec parse_smoothness_spec(std::string_view text);
std::string to_string(const WeightSpec& spec);
std::string to_string(const SmoothnessSpec& spec);

/// Reads `gamma=...` and `alpha=...` lines; '#' starts a comment. Missing
/// keys default to const:1.
KorobovParams load_params_config(std::istream& in);

}  // namespace korobov
