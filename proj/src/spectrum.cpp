#include "korobov/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <string>

#include "korobov/errors.hpp"
#include "korobov/zeta.hpp"

namespace korobov {

namespace {

std::uint64_t degree_of(const Frequency& k) {
    std::uint64_t s = 0;
    for (auto v : k) s += static_cast<std::uint64_t>(std::llabs(v));
    return s;
}

// Lexicographic comparison of (|k_1|, ..., |k_d|): -1, 0 or 1.
int compare_abs(const Frequency& a, const Frequency& b) {
    for (std::size_t j = 0; j < a.size(); ++j) {
        const auto x = std::llabs(a[j]);
        const auto y = std::llabs(b[j]);
        if (x != y) return x < y ? -1 : 1;
    }
    return 0;
}

}  // namespace

double univariate_r(std::int64_t k, double alpha, double gamma) {
    if (k == 0) return 1.0;
    if (gamma == 0.0) return 0.0;
    const double m = static_cast<double>(k < 0 ? -k : k);
    return gamma / std::pow(m, 2.0 * alpha);
}

double product_r(std::span<const std::int64_t> kvec, const KorobovParams& params, std::size_t d) {
    if (kvec.size() != d)
        throw DimensionMismatch("frequency has " + std::to_string(kvec.size()) +
                                " coordinates, expected " + std::to_string(d));
    double p = 1.0;
    for (std::size_t j = 0; j < d; ++j) {
        if (kvec[j] == 0) continue;
        p *= univariate_r(kvec[j], params.alpha(j + 1), params.gamma(j + 1));
    }
    return p;
}

bool spectrum_before(const EigenEntry& a, const EigenEntry& b) {
    if (a.value != b.value) return a.value > b.value;
    const auto da = degree_of(a.index);
    const auto db = degree_of(b.index);
    if (da != db) return da < db;
    if (int c = compare_abs(a.index, b.index); c != 0) return c < 0;
    for (std::size_t j = 0; j < a.index.size(); ++j)
        if (a.index[j] != b.index[j]) return a.index[j] > 0;
    return false;
}

// ---------------------------------------------------------------------------
// SpectrumIterator

bool SpectrumIterator::NodeAfter::operator()(const Node& a, const Node& b) const {
    if (a.value != b.value) return a.value < b.value;
    if (a.degree != b.degree) return a.degree > b.degree;
    return b.abs < a.abs;
}

SpectrumIterator::SpectrumIterator(const KorobovParams& params, std::size_t d,
                                   SpectrumOptions options)
    : d_(d), options_(options), gamma_(params.gammas(d)), alpha_(params.alphas(d)),
      current_abs_(d, 0) {
    if (d == 0) throw DimensionMismatch("dimension d must be >= 1");
    for (std::size_t j = 0; j < d; ++j)
        if (gamma_[j] > 0.0) active_.push_back(j);
    frontier_.push(Node{std::vector<std::uint32_t>(active_.size(), 0), 1.0, 0});
}

double SpectrumIterator::ladder(std::size_t active, std::uint32_t m) const {
    const std::size_t j = active_[active];
    return univariate_r(static_cast<std::int64_t>(m), alpha_[j], gamma_[j]);
}

// Same multiplication order as product_r; inactive coordinates contribute an
// exact factor 1.
double SpectrumIterator::node_value(const std::vector<std::uint32_t>& abs) const {
    double p = 1.0;
    for (std::size_t a = 0; a < abs.size(); ++a)
        if (abs[a] != 0) p *= ladder(a, abs[a]);
    return p;
}

void SpectrumIterator::push(Node node) {
    if (frontier_.size() >= options_.frontier_cap)
        throw ResourceLimit("spectrum frontier exceeded cap of " +
                            std::to_string(options_.frontier_cap) + " entries");
    frontier_.push(std::move(node));
}

void SpectrumIterator::load_next_block() {
    if (!frontier_.empty()) {
        Node node = frontier_.top();
        frontier_.pop();

        std::size_t first_nonzero = node.abs.size();
        for (std::size_t a = 0; a < node.abs.size(); ++a)
            if (node.abs[a] != 0) {
                first_nonzero = a;
                break;
            }
        const std::size_t last_child = std::min(first_nonzero, node.abs.size() - 1);
        for (std::size_t a = 0; !node.abs.empty() && a <= last_child; ++a) {
            Node child{node.abs, 0.0, node.degree + 1};
            ++child.abs[a];
            child.value = node_value(child.abs);
            push(std::move(child));
        }

        std::fill(current_abs_.begin(), current_abs_.end(), 0);
        for (std::size_t a = 0; a < node.abs.size(); ++a) current_abs_[active_[a]] = node.abs[a];
        current_value_ = node.value;
    } else {
        // Every gamma_j is zero: list the remaining (all zero-valued) points by
        // degree, then lexicographically.
        if (!zero_tail_) {
            zero_tail_ = true;
            zero_abs_.assign(d_, 0);
            zero_abs_.back() = 1;
        } else {
            std::uint32_t suffix = zero_abs_.back();
            std::size_t i = d_ - 1;
            bool advanced = false;
            while (i-- > 0) {
                if (suffix > 0) {
                    ++zero_abs_[i];
                    for (std::size_t t = i + 1; t < d_; ++t) zero_abs_[t] = 0;
                    zero_abs_.back() = suffix - 1;
                    advanced = true;
                    break;
                }
                suffix += zero_abs_[i];
            }
            if (!advanced) {
                const std::uint32_t degree =
                    std::accumulate(zero_abs_.begin(), zero_abs_.end(), std::uint32_t{0});
                std::fill(zero_abs_.begin(), zero_abs_.end(), 0);
                zero_abs_.back() = degree + 1;
            }
        }
        for (std::size_t j = 0; j < d_; ++j) current_abs_[j] = zero_abs_[j];
        current_value_ = 0.0;
    }

    current_nonzero_.clear();
    for (std::size_t j = 0; j < d_; ++j)
        if (current_abs_[j] != 0) current_nonzero_.push_back(j);
    sign_pattern_ = 0;
    sign_count_ = std::uint64_t{1} << current_nonzero_.size();
}

// Bit (nnz - 1 - i) of the pattern is the sign of the i-th nonzero coordinate,
// so counting upward lists + before - from the first coordinate on.
EigenEntry SpectrumIterator::sign_expand() const {
    EigenEntry e{current_abs_, current_value_};
    const std::size_t nnz = current_nonzero_.size();
    for (std::size_t i = 0; i < nnz; ++i)
        if ((sign_pattern_ >> (nnz - 1 - i)) & 1u) e.index[current_nonzero_[i]] *= -1;
    return e;
}

EigenEntry SpectrumIterator::next() {
    if (sign_pattern_ >= sign_count_) load_next_block();
    EigenEntry e = sign_expand();
    ++sign_pattern_;
    ++emitted_;
    return e;
}

// ---------------------------------------------------------------------------

std::vector<EigenEntry> enumerate_top(const KorobovParams& params, std::size_t d, std::size_t n,
                                      SpectrumOptions options) {
    SpectrumIterator it(params, d, options);
    std::vector<EigenEntry> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back(it.next());
    return out;
}

double nth_eigenvalue(const KorobovParams& params, std::size_t d, std::size_t n,
                      SpectrumOptions options) {
    if (n == 0) throw RangeViolation("eigenvalue rank n must be >= 1");
    SpectrumIterator it(params, d, options);
    EigenEntry e;
    for (std::size_t i = 0; i < n; ++i) e = it.next();
    return e.value;
}

double worst_case_error(const KorobovParams& params, std::size_t d, std::size_t n,
                        SpectrumOptions options) {
    if (n == 0) return 1.0;
    return std::sqrt(nth_eigenvalue(params, d, n + 1, options));
}

std::vector<EigenEntry> brute_force_spectrum(const KorobovParams& params, std::size_t d,
                                             std::size_t kmax, std::size_t budget) {
    std::vector<std::size_t> box(d, kmax);
    return brute_force_spectrum(params, box, budget);
}

std::vector<EigenEntry> brute_force_spectrum(const KorobovParams& params,
                                             std::span<const std::size_t> kmax,
                                             std::size_t budget) {
    const std::size_t d = kmax.size();
    if (d == 0) throw DimensionMismatch("dimension d must be >= 1");
    double points = 1.0;
    for (auto k : kmax) points *= 2.0 * static_cast<double>(k) + 1.0;
    if (static_cast<double>(d) * points > static_cast<double>(budget))
        throw ResourceLimit("brute-force box of " + std::to_string(points) +
                            " points exceeds budget " + std::to_string(budget));

    std::vector<EigenEntry> out;
    out.reserve(static_cast<std::size_t>(points));
    Frequency k(d);
    for (std::size_t j = 0; j < d; ++j) k[j] = -static_cast<std::int64_t>(kmax[j]);
    while (true) {
        out.push_back({k, product_r(k, params, d)});
        std::size_t j = d;
        while (j-- > 0) {
            if (k[j] < static_cast<std::int64_t>(kmax[j])) {
                ++k[j];
                break;
            }
            k[j] = -static_cast<std::int64_t>(kmax[j]);
        }
        if (j == static_cast<std::size_t>(-1)) break;
    }
    std::sort(out.begin(), out.end(), spectrum_before);
    return out;
}

double brute_force_validity_threshold(const KorobovParams& params,
                                      std::span<const std::size_t> kmax) {
    double worst = 0.0;
    for (std::size_t j = 0; j < kmax.size(); ++j) {
        const double g = params.gamma(j + 1);
        const double a = params.alpha(j + 1);
        worst = std::max(worst, g / std::pow(static_cast<double>(kmax[j]) + 1.0, 2.0 * a));
    }
    return worst;
}

double eigen_sum_tau(const KorobovParams& params, std::size_t d, double tau) {
    if (!(2.0 * params.alpha(1) * tau > 1.0))
        throw DomainError("sum of lambda^tau diverges: 2 alpha_1 tau = " +
                          std::to_string(2.0 * params.alpha(1) * tau) + " <= 1");
    double p = 1.0;
    for (std::size_t j = 1; j <= d; ++j) p *= eigen_sum_tau_factor(params, j, tau);
    return p;
}

double eigen_sum_tau_factor(const KorobovParams& params, std::size_t j, double tau) {
    const double g = params.gamma(j);
    return 1.0 + 2.0 * std::pow(g, tau) * riemann_zeta(2.0 * params.alpha(j) * tau).value;
}

}  // namespace korobov
