#pragma once

#include <complex>
#include <cstddef>
#include <map>
#include <vector>

#include "korobov/params.hpp"
#include "korobov/spectrum.hpp"

namespace korobov {

/// Trigonometric polynomial on [0,1]^d held by its Fourier coefficients.
/// Frequencies not stored have coefficient 0.
class FourierPoly {
public:
    using Coefficient = std::complex<double>;
    using Terms = std::map<Frequency, Coefficient>;

    explicit FourierPoly(std::size_t d) : d_(d) {}

    std::size_t dim() const noexcept { return d_; }
    const Terms& terms() const noexcept { return terms_; }

    /// Throws DimensionMismatch on a frequency of the wrong length.
    void set(const Frequency& k, Coefficient c);
    Coefficient coefficient(const Frequency& k) const;

    bool operator==(const FourierPoly&) const = default;

private:
    std::size_t d_;
    Terms terms_;
};

/// sqrt(sum |f(k)|^2 / r(k)); +inf when a nonzero coefficient sits at r(k) = 0.
double h_norm(const FourierPoly& f, const KorobovParams& params);

/// Frequencies of the n largest eigenvalues, in spectrum order.
std::vector<Frequency> optimal_index_set(const KorobovParams& params, std::size_t d,
                                         std::size_t n, SpectrumOptions options = {});

/// The optimal linear algorithm with n functionals: keep the coefficients on
/// optimal_index_set(n), drop the rest.
FourierPoly approximate(const FourierPoly& f, const KorobovParams& params, std::size_t n,
                        SpectrumOptions options = {});

/// L2([0,1]^d) distance via Parseval.
double l2_error(const FourierPoly& f, const FourierPoly& g);

struct WorstCaseWitness {
    FourierPoly f;
    double error;
};

/// Unit-norm eigenfunction at rank n+1; approximate() misses it entirely, so
/// its error is sqrt(lambda_{n+1}).
WorstCaseWitness worst_case_witness(const KorobovParams& params, std::size_t d, std::size_t n,
                                    SpectrumOptions options = {});

}  // namespace korobov
