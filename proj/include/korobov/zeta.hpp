#pragma once

namespace korobov {

struct ZetaValue {
    double s = 0.0;
    double value = 0.0;
    double abs_error_bound = 0.0;  // truncation remainder plus rounding estimate
};

/// Riemann zeta on the real ray s > 1 by Euler-Maclaurin summation.
/// Throws DomainError for s <= 1 (or NaN).
ZetaValue riemann_zeta(double s);

}  // namespace korobov
