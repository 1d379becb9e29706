#pragma once

#include <cstddef>
#include <cstdint>
#include <queue>
#include <span>
#include <vector>

#include "korobov/params.hpp"

namespace korobov {

using Frequency = std::vector<std::int64_t>;

/// One eigenpair of the approximation operator: frequency k and
/// lambda = prod_j r_{alpha_j,gamma_j}(k_j).
struct EigenEntry {
    Frequency index;
    double value = 0.0;
};

/// Univariate eigenvalue: 1 at k = 0, gamma / |k|^(2 alpha) otherwise.
double univariate_r(std::int64_t k, double alpha, double gamma);

/// Product of univariate_r over coordinates, multiplied left to right.
/// Throws DimensionMismatch when kvec.size() != d.
double product_r(std::span<const std::int64_t> kvec, const KorobovParams& params, std::size_t d);

/// Total order used for every listing of the spectrum: value descending,
/// then sum |k_j| ascending, then (|k_1|,...,|k_d|) lexicographic ascending,
/// then the first coordinate whose sign differs is positive first.
/// Returns true if `a` comes strictly before `b`.
bool spectrum_before(const EigenEntry& a, const EigenEntry& b);

struct SpectrumOptions {
    std::size_t frontier_cap = 10'000'000;
};

/// Lazily yields the d-variate spectrum in spectrum_before order. Each lattice
/// point of Z^d appears exactly once.
///
/// Search runs over vectors m of absolute frequencies; m is pushed only by its
/// canonical parent (m minus the unit vector of its first nonzero
/// coordinate), so no visited-set is needed. Sign patterns of a popped m are
/// expanded on emission. Coordinates with gamma_j = 0 never leave 0 while any
/// positive-value point remains.
class SpectrumIterator {
public:
    SpectrumIterator(const KorobovParams& params, std::size_t d, SpectrumOptions options = {});

    /// Throws ResourceLimit when the frontier would exceed the cap.
    EigenEntry next();

    std::size_t emitted() const noexcept { return emitted_; }
    std::size_t frontier_size() const noexcept { return frontier_.size(); }

private:
    struct Node {
        std::vector<std::uint32_t> abs;  // one per active coordinate
        double value;
        std::uint64_t degree;
    };
    struct NodeAfter {
        bool operator()(const Node& a, const Node& b) const;
    };

    double ladder(std::size_t active, std::uint32_t m) const;
    double node_value(const std::vector<std::uint32_t>& abs) const;
    void push(Node node);
    void load_next_block();
    EigenEntry sign_expand() const;

    std::size_t d_;
    SpectrumOptions options_;
    std::vector<std::size_t> active_;  // coordinates with gamma_j > 0
    std::vector<double> gamma_;
    std::vector<double> alpha_;
    std::priority_queue<Node, std::vector<Node>, NodeAfter> frontier_;

    // Zero-value tail, reached only when every gamma_j is 0.
    bool zero_tail_ = false;
    std::vector<std::uint32_t> zero_abs_;

    Frequency current_abs_;  // full-length absolute frequency being expanded
    double current_value_ = 0.0;
    std::vector<std::size_t> current_nonzero_;
    std::uint64_t sign_pattern_ = 0;
    std::uint64_t sign_count_ = 0;
    std::size_t emitted_ = 0;
};

/// The n largest eigenvalues with their frequencies.
std::vector<EigenEntry> enumerate_top(const KorobovParams& params, std::size_t d, std::size_t n,
                                      SpectrumOptions options = {});

/// lambda_{d,n}, n >= 1.
double nth_eigenvalue(const KorobovParams& params, std::size_t d, std::size_t n,
                      SpectrumOptions options = {});

/// Minimal worst-case error with n linear functionals: sqrt(lambda_{d,n+1}).
double worst_case_error(const KorobovParams& params, std::size_t d, std::size_t n,
                        SpectrumOptions options = {});

/// Every k in the box |k_j| <= kmax, sorted by spectrum_before. The prefix of
/// length m is the true top-m whenever its m-th value exceeds
/// brute_force_validity_threshold(). Throws ResourceLimit when
/// d (2 kmax + 1)^d exceeds `budget`.
std::vector<EigenEntry> brute_force_spectrum(const KorobovParams& params, std::size_t d,
                                             std::size_t kmax, std::size_t budget = 10'000'000);

/// Same over an anisotropic box |k_j| <= kmax[j].
std::vector<EigenEntry> brute_force_spectrum(const KorobovParams& params,
                                             std::span<const std::size_t> kmax,
                                             std::size_t budget = 10'000'000);

/// max_j gamma_j / (kmax_j + 1)^(2 alpha_j): no point outside the box exceeds it.
double brute_force_validity_threshold(const KorobovParams& params,
                                      std::span<const std::size_t> kmax);

/// Sum over the whole spectrum of lambda^tau, via
/// prod_j (1 + 2 gamma_j^tau zeta(2 alpha_j tau)).
/// Throws DomainError when 2 alpha_1 tau <= 1.
double eigen_sum_tau(const KorobovParams& params, std::size_t d, double tau);

/// Coordinate j's factor 1 + 2 gamma_j^tau zeta(2 alpha_j tau).
double eigen_sum_tau_factor(const KorobovParams& params, std::size_t j, double tau);

}  // namespace korobov
