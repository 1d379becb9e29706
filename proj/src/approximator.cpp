#include "korobov/approximator.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "korobov/errors.hpp"

namespace korobov {

void FourierPoly::set(const Frequency& k, Coefficient c) {
    if (k.size() != d_)
        throw DimensionMismatch("frequency has " + std::to_string(k.size()) +
                                " coordinates, polynomial has d = " + std::to_string(d_));
    terms_[k] = c;
}

FourierPoly::Coefficient FourierPoly::coefficient(const Frequency& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? Coefficient{} : it->second;
}

double h_norm(const FourierPoly& f, const KorobovParams& params) {
    double sum = 0.0;
    for (const auto& [k, c] : f.terms()) {
        const double mag2 = std::norm(c);
        if (mag2 == 0.0) continue;
        const double r = product_r(k, params, f.dim());
        if (r == 0.0) return std::numeric_limits<double>::infinity();
        sum += mag2 / r;
    }
    return std::sqrt(sum);
}

std::vector<Frequency> optimal_index_set(const KorobovParams& params, std::size_t d,
                                         std::size_t n, SpectrumOptions options) {
    std::vector<Frequency> out;
    if (n == 0) return out;
    out.reserve(n);
    for (auto& e : enumerate_top(params, d, n, options)) out.push_back(std::move(e.index));
    return out;
}

FourierPoly approximate(const FourierPoly& f, const KorobovParams& params, std::size_t n,
                        SpectrumOptions options) {
    FourierPoly out(f.dim());
    for (const auto& k : optimal_index_set(params, f.dim(), n, options)) {
        auto it = f.terms().find(k);
        if (it != f.terms().end()) out.set(k, it->second);
    }
    return out;
}

double l2_error(const FourierPoly& f, const FourierPoly& g) {
    if (f.dim() != g.dim())
        throw DimensionMismatch("l2_error on polynomials of dimension " + std::to_string(f.dim()) +
                                " and " + std::to_string(g.dim()));
    double sum = 0.0;
    for (const auto& [k, c] : f.terms()) sum += std::norm(c - g.coefficient(k));
    for (const auto& [k, c] : g.terms())
        if (!f.terms().contains(k)) sum += std::norm(c);
    return std::sqrt(sum);
}

WorstCaseWitness worst_case_witness(const KorobovParams& params, std::size_t d, std::size_t n,
                                    SpectrumOptions options) {
    // Ties at rank n+1 resolve to the first frequency in spectrum order.
    const auto top = enumerate_top(params, d, n + 1, options);
    const EigenEntry& star = top.back();
    FourierPoly f(d);
    f.set(star.index, std::sqrt(star.value));
    const double error = l2_error(f, approximate(f, params, n, options));
    return {std::move(f), error};
}

}  // namespace korobov
