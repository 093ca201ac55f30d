#pragma once

#include <cstddef>

#include "ricci/grid.hpp"
#include "ricci/util.hpp"

namespace ricci {

// How a derivative stencil closes at a domain end.
//   ghost_odd  : point reflection through the end value (odd extension; used
//                for the warping function across a sphere pole)
//   ghost_even : mirror reflection (even extension; gauge factor and scalar
//                fields across a pole, both ends of a neck during stepping)
//   one_sided  : biased second-order stencil (neck ends when sampling)
enum class EndRule { ghost_odd, ghost_even, one_sided };

// First derivative in x, second order.
inline RadialField dx1(const RadialField& f, double h, EndRule left, EndRule right) {
    const int n = static_cast<int>(f.size()) - 1;
    RadialField d(f.size());
    for (int i = 1; i < n; ++i) d[i] = (f[i + 1] - f[i - 1]) / (2.0 * h);
    switch (left) {
        case EndRule::ghost_odd:  d[0] = (f[1] - f[0]) / h; break;
        case EndRule::ghost_even: d[0] = 0.0; break;
        case EndRule::one_sided:  d[0] = (-3.0 * f[0] + 4.0 * f[1] - f[2]) / (2.0 * h); break;
    }
    switch (right) {
        case EndRule::ghost_odd:  d[n] = (f[n] - f[n - 1]) / h; break;
        case EndRule::ghost_even: d[n] = 0.0; break;
        case EndRule::one_sided:  d[n] = (3.0 * f[n] - 4.0 * f[n - 1] + f[n - 2]) / (2.0 * h); break;
    }
    return d;
}

// Second derivative in x, second order.
inline RadialField dx2(const RadialField& f, double h, EndRule left, EndRule right) {
    const int n = static_cast<int>(f.size()) - 1;
    const double h2 = h * h;
    RadialField d(f.size());
    for (int i = 1; i < n; ++i) d[i] = (f[i + 1] - 2.0 * f[i] + f[i - 1]) / h2;
    switch (left) {
        case EndRule::ghost_odd:  d[0] = 0.0; break;
        case EndRule::ghost_even: d[0] = 2.0 * (f[1] - f[0]) / h2; break;
        case EndRule::one_sided:
            d[0] = (2.0 * f[0] - 5.0 * f[1] + 4.0 * f[2] - f[3]) / h2;
            break;
    }
    switch (right) {
        case EndRule::ghost_odd:  d[n] = 0.0; break;
        case EndRule::ghost_even: d[n] = 2.0 * (f[n - 1] - f[n]) / h2; break;
        case EndRule::one_sided:
            d[n] = (2.0 * f[n] - 5.0 * f[n - 1] + 4.0 * f[n - 2] - f[n - 3]) / h2;
            break;
    }
    return d;
}

// First derivative in x on the five-point fourth-order stencil. Used where a
// difference of the form 1 - (f')^2 is taken afterwards: near a pole the
// second-order stencil leaves an O(1) relative error in that difference, the
// wide stencil keeps it at O(h^2).
inline RadialField dx1_wide(const RadialField& f, double h, EndRule left, EndRule right) {
    const int n = static_cast<int>(f.size()) - 1;
    RadialField d(f.size());
    for (int i = 2; i <= n - 2; ++i)
        d[i] = (f[i - 2] - 8.0 * f[i - 1] + 8.0 * f[i + 1] - f[i + 2]) / (12.0 * h);
    switch (left) {
        case EndRule::ghost_odd:
            d[0] = (-7.0 * f[0] + 8.0 * f[1] - f[2]) / (6.0 * h);
            d[1] = (-6.0 * f[0] - f[1] + 8.0 * f[2] - f[3]) / (12.0 * h);
            break;
        case EndRule::ghost_even:
            d[0] = 0.0;
            d[1] = (f[1] - 8.0 * f[0] + 8.0 * f[2] - f[3]) / (12.0 * h);
            break;
        case EndRule::one_sided:
            d[0] = (-3.0 * f[0] + 4.0 * f[1] - f[2]) / (2.0 * h);
            d[1] = (f[2] - f[0]) / (2.0 * h);
            break;
    }
    switch (right) {
        case EndRule::ghost_odd:
            d[n] = (7.0 * f[n] - 8.0 * f[n - 1] + f[n - 2]) / (6.0 * h);
            d[n - 1] = (6.0 * f[n] + f[n - 1] - 8.0 * f[n - 2] + f[n - 3]) / (12.0 * h);
            break;
        case EndRule::ghost_even:
            d[n] = 0.0;
            d[n - 1] = (f[n - 3] - 8.0 * f[n - 2] + 8.0 * f[n] - f[n - 1]) / (12.0 * h);
            break;
        case EndRule::one_sided:
            d[n] = (3.0 * f[n] - 4.0 * f[n - 1] + f[n - 2]) / (2.0 * h);
            d[n - 1] = (f[n] - f[n - 2]) / (2.0 * h);
            break;
    }
    return d;
}

// d/ds = psi^{-1} d/dx.
inline RadialField ds1(const RadialField& f, const RadialField& psi, double h,
                       EndRule left, EndRule right) {
    RadialField d = dx1(f, h, left, right);
    for (std::size_t i = 0; i < d.size(); ++i) d[i] /= psi[i];
    return d;
}

// d2/ds2 = f_xx/psi^2 - psi_x f_x / psi^3. The caller supplies psi_x so that
// every consumer differentiates the gauge with one policy.
inline RadialField ds2(const RadialField& f, const RadialField& psi,
                       const RadialField& psi_x, double h, EndRule left, EndRule right) {
    RadialField fx = dx1(f, h, left, right);
    RadialField fxx = dx2(f, h, left, right);
    RadialField d(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) {
        const double p = psi[i];
        d[i] = fxx[i] / (p * p) - psi_x[i] * fx[i] / (p * p * p);
    }
    return d;
}

} // namespace ricci
