#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

#include "korobov/params.hpp"

namespace korobov {

struct ComplexityQuery {
    const KorobovParams& params;
    std::size_t d;
    double epsilon;  // in (0,1); the counting threshold is epsilon^2
};

struct ComplexityResult {
    std::uint64_t count = 0;
    double epsilon = 0.0;
    std::size_t d = 0;
    std::uint64_t nodes_visited = 0;
    std::optional<double> upper_bound;
};

struct CountOptions {
    std::uint64_t node_budget = 1'000'000'000;
    unsigned threads = 1;  // splits the first coordinate; never changes results
};

/// n(epsilon, d) = |{k in Z^d : prod_j r_j(k_j) > epsilon^2}|, exactly.
///
/// Depth-first over coordinates 1..d carrying the running product P; the
/// branch at coordinate j with frequency k survives only while P r_j(k) > eps^2,
/// and once P gamma_j <= eps^2 only k_j = ... = k_d = 0 remain. The running
/// product is formed in the same order as product_r, so the strict comparison
/// agrees bit for bit with evaluating each point directly.
/// Throws RangeViolation for epsilon outside (0,1), ResourceLimit past the
/// node budget.
ComplexityResult info_complexity(const ComplexityQuery& query, CountOptions options = {});

/// Direct count over the box |k_j| <= kmax. Throws InsufficientBox unless
/// gamma_j / (kmax+1)^(2 alpha_j) <= epsilon^2 for every j, ResourceLimit
/// when (2 kmax + 1)^d exceeds `budget`.
std::uint64_t count_box_oracle(const ComplexityQuery& query, std::size_t kmax,
                               std::uint64_t budget = 100'000'000);

/// Smallest kmax that count_box_oracle accepts for this query.
std::size_t minimal_certified_kmax(const ComplexityQuery& query);

/// 2 epsilon^(-2 tau) prod_j (1 + 2 gamma_j^tau zeta(2 alpha_j tau)).
double info_complexity_upper_bound(const ComplexityQuery& query, double tau);

struct CTauQ {
    double value = 0.0;           // max over d in [1, d_max]
    std::size_t argmax_d = 1;
    bool still_increasing = false;  // last step rose by more than rel_tol
};

/// Truncation at d_max of sup_d (sum_j lambda_{d,j}^tau)^(1/tau) d^(-q),
/// with lambda_{d,1} = 1.
CTauQ C_tau_q(const KorobovParams& params, double tau, double q, std::size_t d_max,
              double rel_tol = 1e-6);

}  // namespace korobov
