#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <set>
#include <stdexcept>
#include <string>

namespace staircase {

/// Exponent pair (i,j) of a monomial w^i z^j.
struct LatticePoint {
    int i = 0;
    int j = 0;

    friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;

    LatticePoint operator+(LatticePoint o) const { return {i + o.i, j + o.j}; }
    LatticePoint operator-(LatticePoint o) const { return {i - o.i, j - o.j}; }
};

inline std::string to_string(LatticePoint p) {
    return "(" + std::to_string(p.i) + "," + std::to_string(p.j) + ")";
}

using PointSet = std::set<LatticePoint>;

/// Closed integer box of exponents, plus a ghost margin so operator powers
/// can leave the core box without being silently truncated.  wrap_j turns the
/// j-range into a cyclic stripe (a circle discretized at j-range resolution).
struct Window {
    int i_min = 0, i_max = 0;
    int j_min = 0, j_max = 0;
    int margin = 0;
    bool wrap_j = false;

    Window() = default;
    Window(int i0, int i1, int j0, int j1, int m = 0, bool wrapj = false)
        : i_min(i0), i_max(i1), j_min(j0), j_max(j1), margin(m), wrap_j(wrapj) {
        if (i_min > i_max || j_min > j_max)
            throw std::invalid_argument("window bounds reversed");
        if (margin < 0) throw std::invalid_argument("negative window margin");
    }

    bool contains(LatticePoint p) const {
        return p.i >= i_min && p.i <= i_max && p.j >= j_min && p.j <= j_max;
    }

    /// Core box inflated by the margin.  In a wrapped direction the core is
    /// already the whole circle, so no inflation is applied there.
    bool contains_extended(LatticePoint p) const {
        bool i_ok = p.i >= i_min - margin && p.i <= i_max + margin;
        bool j_ok = wrap_j ? (p.j >= j_min && p.j <= j_max)
                           : (p.j >= j_min - margin && p.j <= j_max + margin);
        return i_ok && j_ok;
    }

    int width() const { return i_max - i_min + 1; }
    int height() const { return j_max - j_min + 1; }
    long size() const { return static_cast<long>(width()) * height(); }

    /// Reduce j into the cyclic stripe.  Identity when wrap_j is off.
    LatticePoint normalize(LatticePoint p) const {
        if (!wrap_j) return p;
        int h = height();
        int r = (p.j - j_min) % h;
        if (r < 0) r += h;
        return {p.i, j_min + r};
    }

    friend bool operator==(const Window&, const Window&) = default;
};

}  // namespace staircase
