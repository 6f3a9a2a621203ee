#pragma once

#include <stdexcept>
#include <string>

namespace cmcrot {

// The geometric problem: hypersurface dimension n, curvature order m,
// prescribed constant m-th mean curvature H (dimensionless).
struct Params {
    int n = 0;
    int m = 0;
    double H = 0.0;

    // H = 0 is admitted only as a limiting case; existence solvers reject it.
    void validate() const {
        const int n_min = (m == 1) ? 2 : 3;
        if (n < n_min)
            throw std::invalid_argument("params: n must be >= " + std::to_string(n_min) +
                                        " for m = " + std::to_string(m));
        if (m < 1 || m > n - 1)
            throw std::invalid_argument("params: m must satisfy 1 <= m <= n-1");
        if (!(H >= 0.0))
            throw std::invalid_argument("params: H_m must be >= 0");
    }
};

} // namespace cmcrot
