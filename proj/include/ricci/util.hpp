#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

namespace ricci {

using RadialField = std::vector<double>;

inline double sup(const RadialField& f) {
    double m = -std::numeric_limits<double>::infinity();
    for (double v : f) m = std::max(m, v);
    return m;
}

inline double sup_abs(const RadialField& f) {
    double m = 0.0;
    for (double v : f) m = std::max(m, std::abs(v));
    return m;
}

inline double inf(const RadialField& f) {
    double m = std::numeric_limits<double>::infinity();
    for (double v : f) m = std::min(m, v);
    return m;
}

inline double median(RadialField f) {
    if (f.empty()) return 0.0;
    const std::size_t mid = f.size() / 2;
    std::nth_element(f.begin(), f.begin() + static_cast<std::ptrdiff_t>(mid), f.end());
    double hi = f[mid];
    if (f.size() % 2 == 1) return hi;
    double lo = *std::max_element(f.begin(), f.begin() + static_cast<std::ptrdiff_t>(mid));
    return 0.5 * (lo + hi);
}

inline bool all_finite(const RadialField& f) {
    for (double v : f)
        if (!std::isfinite(v)) return false;
    return true;
}

// C2 smoothstep on [0,1]: zero value/slope/curvature at 0, value 1 with zero
// slope/curvature at 1.
inline double smoothstep5(double x) {
    if (x <= 0.0) return 0.0;
    if (x >= 1.0) return 1.0;
    return x * x * x * (10.0 + x * (-15.0 + 6.0 * x));
}

} // namespace ricci
