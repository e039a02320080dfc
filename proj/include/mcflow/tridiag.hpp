#pragma once

#include <vector>

namespace mcflow {

// Thomas algorithm for a[i] x[i-1] + b[i] x[i] + c[i] x[i+1] = d[i]; overwrites c and d.
inline void solve_tridiagonal(const std::vector<double>& a, const std::vector<double>& b, std::vector<double>& c,
                              std::vector<double>& d)
{
    const std::size_t n = d.size();
    c[0] /= b[0];
    d[0] /= b[0];
    for (std::size_t i = 1; i < n; ++i) {
        const double m = b[i] - a[i] * c[i - 1];
        c[i] /= m;
        d[i] = (d[i] - a[i] * d[i - 1]) / m;
    }
    for (std::size_t i = n - 1; i-- > 0;) d[i] -= c[i] * d[i + 1];
}

} // namespace mcflow
