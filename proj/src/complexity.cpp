#include "korobov/complexity.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <future>
#include <string>
#include <vector>

#include "korobov/errors.hpp"
#include "korobov/spectrum.hpp"

namespace korobov {

namespace {

void check_query(const ComplexityQuery& q) {
    if (q.d == 0) throw RangeViolation("dimension d must be >= 1");
    if (!(q.epsilon > 0.0 && q.epsilon < 1.0))
        throw RangeViolation("epsilon must lie in (0,1), got " + std::to_string(q.epsilon));
}

// Depth-first lattice count below a fixed threshold. ladders[j][k-1] holds
// r_j(k) for every k with r_j(k) > threshold; no deeper k can contribute.
class Counter {
public:
    Counter(const ComplexityQuery& q, std::uint64_t budget)
        : threshold_(q.epsilon * q.epsilon), budget_(budget), gamma_(q.params.gammas(q.d)) {
        const auto alpha = q.params.alphas(q.d);
        ladders_.resize(q.d);
        for (std::size_t j = 0; j < q.d; ++j) {
            for (std::int64_t k = 1;; ++k) {
                const double r = univariate_r(k, alpha[j], gamma_[j]);
                if (!(r > threshold_)) break;
                ladders_[j].push_back(r);
            }
        }
    }

    std::size_t top_level_width() const { return ladders_.front().size() + 1; }

    // Points with |k_1| = m. The root node itself is visited by visit_root().
    std::uint64_t count_first(std::size_t m) {
        if (m == 0) return count(1, 1.0);
        return 2 * count(1, ladders_[0][m - 1]);
    }

    void visit_root() { visit(); }

    std::uint64_t total() { return count(0, 1.0); }

    std::uint64_t nodes() const { return nodes_.load(std::memory_order_relaxed); }

private:
    void visit() {
        if (nodes_.fetch_add(1, std::memory_order_relaxed) + 1 > budget_)
            throw ResourceLimit("lattice count exceeded node budget of " +
                                std::to_string(budget_));
    }

    // Points below coordinate j given running product p > threshold.
    std::uint64_t count(std::size_t j, double p) {
        visit();
        if (j == gamma_.size()) return 1;
        if (!(p * gamma_[j] > threshold_)) return 1;
        std::uint64_t total = count(j + 1, p);
        for (double r : ladders_[j]) {
            const double pk = p * r;
            if (!(pk > threshold_)) break;
            total += 2 * count(j + 1, pk);
        }
        return total;
    }

    double threshold_;
    std::uint64_t budget_;
    std::vector<double> gamma_;
    std::vector<std::vector<double>> ladders_;
    std::atomic<std::uint64_t> nodes_{0};
};

}  // namespace

ComplexityResult info_complexity(const ComplexityQuery& query, CountOptions options) {
    check_query(query);
    Counter counter(query, options.node_budget);
    ComplexityResult result{0, query.epsilon, query.d, 0, std::nullopt};

    const unsigned threads = std::max(1u, options.threads);
    if (threads == 1 || counter.top_level_width() < 2 ||
        !(query.params.gamma(1) > query.epsilon * query.epsilon)) {
        result.count = counter.total();
    } else {
        // The root node is the first coordinate's loop; children are split
        // round-robin and summed, so the count does not depend on scheduling.
        const std::size_t width = counter.top_level_width();
        counter.visit_root();
        std::vector<std::future<std::uint64_t>> parts;
        for (unsigned t = 0; t < threads; ++t) {
            parts.push_back(std::async(std::launch::async, [&counter, t, threads, width] {
                std::uint64_t sum = 0;
                for (std::size_t m = t; m < width; m += threads) sum += counter.count_first(m);
                return sum;
            }));
        }
        for (auto& f : parts) result.count += f.get();
    }
    result.nodes_visited = counter.nodes();
    return result;
}

std::size_t minimal_certified_kmax(const ComplexityQuery& query) {
    check_query(query);
    const double t = query.epsilon * query.epsilon;
    std::size_t kmax = 0;
    for (std::size_t j = 1; j <= query.d; ++j) {
        const double g = query.params.gamma(j);
        const double a = query.params.alpha(j);
        auto k = static_cast<std::size_t>(std::max(0.0, std::ceil(std::pow(g / t, 0.5 / a)) - 1.0));
        while (g / std::pow(static_cast<double>(k) + 1.0, 2.0 * a) > t) ++k;
        kmax = std::max(kmax, k);
    }
    return kmax;
}

std::uint64_t count_box_oracle(const ComplexityQuery& query, std::size_t kmax,
                               std::uint64_t budget) {
    check_query(query);
    const std::size_t d = query.d;
    const double t = query.epsilon * query.epsilon;
    for (std::size_t j = 1; j <= d; ++j) {
        const double g = query.params.gamma(j);
        const double a = query.params.alpha(j);
        if (g / std::pow(static_cast<double>(kmax) + 1.0, 2.0 * a) > t)
            throw InsufficientBox("box |k_j| <= " + std::to_string(kmax) +
                                  " cannot certify the count: coordinate " + std::to_string(j) +
                                  " still exceeds epsilon^2 at kmax+1");
    }
    const double points = std::pow(2.0 * static_cast<double>(kmax) + 1.0, static_cast<double>(d));
    if (points > static_cast<double>(budget))
        throw ResourceLimit("box oracle needs " + std::to_string(points) +
                            " points, budget is " + std::to_string(budget));

    // r_j(k) for k = -kmax..kmax, evaluated exactly as product_r does.
    const std::size_t width = 2 * kmax + 1;
    std::vector<std::vector<double>> table(d, std::vector<double>(width));
    for (std::size_t j = 0; j < d; ++j)
        for (std::size_t i = 0; i < width; ++i) {
            const auto k = static_cast<std::int64_t>(i) - static_cast<std::int64_t>(kmax);
            table[j][i] = univariate_r(k, query.params.alpha(j + 1), query.params.gamma(j + 1));
        }

    std::vector<std::size_t> idx(d, 0);
    std::uint64_t count = 0;
    while (true) {
        double p = 1.0;
        for (std::size_t j = 0; j < d; ++j) p *= table[j][idx[j]];
        if (p > t) ++count;
        std::size_t j = d;
        while (j-- > 0) {
            if (++idx[j] < width) break;
            idx[j] = 0;
        }
        if (j == static_cast<std::size_t>(-1)) break;
    }
    return count;
}

double info_complexity_upper_bound(const ComplexityQuery& query, double tau) {
    check_query(query);
    const double sum = eigen_sum_tau(query.params, query.d, tau);
    return 2.0 * std::pow(query.epsilon, -2.0 * tau) * sum;
}

CTauQ C_tau_q(const KorobovParams& params, double tau, double q, std::size_t d_max,
              double rel_tol) {
    if (d_max == 0) throw RangeViolation("d_max must be >= 1");
    if (!(2.0 * params.alpha(1) * tau > 1.0))
        throw DomainError("C_tau_q needs 2 alpha_1 tau > 1");
    // eigen_sum_tau(d) is a running product, so extend it one factor at a time.
    CTauQ out;
    double sum = 1.0;
    double previous = 0.0;
    double current = 0.0;
    for (std::size_t d = 1; d <= d_max; ++d) {
        sum *= eigen_sum_tau_factor(params, d, tau);
        previous = current;
        current = std::pow(sum, 1.0 / tau) * std::pow(static_cast<double>(d), -q);
        if (d == 1 || current > out.value) {
            out.value = current;
            out.argmax_d = d;
        }
    }
    out.still_increasing =
        out.argmax_d == d_max && (d_max == 1 || current > previous * (1.0 + rel_tol));
    return out;
}

}  // namespace korobov
