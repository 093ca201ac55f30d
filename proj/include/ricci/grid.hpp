#pragma once

#include <string>

#include "ricci/errors.hpp"
#include "ricci/util.hpp"

namespace ricci {

// Uniform coordinate grid on [0,1]: nodes x_i = i/N, i = 0..N.
struct Grid {
    int segments = 0; // N

    Grid() = default;
    explicit Grid(int n_segments) : segments(n_segments) {
        if (segments < 16)
            throw RangeError("grid requires at least 16 segments, got " +
                                 std::to_string(segments),
                             "nodes");
    }

    int node_count() const { return segments + 1; }
    double dx() const { return 1.0 / segments; }
    double x(int i) const { return static_cast<double>(i) / segments; }

    friend bool operator==(const Grid& a, const Grid& b) {
        return a.segments == b.segments;
    }
};

} // namespace ricci
