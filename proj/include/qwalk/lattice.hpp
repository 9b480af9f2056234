#pragma once

#include <stdexcept>
#include <string>

namespace qwalk {

// Contiguous range of lattice sites [min_x, max_x]. Windows always contain
// the origin: the dephasing boundary sits at x = 0 and every evolution here
// is anchored to it.
struct LatticeWindow {
    int min_x = 0;
    int max_x = 0;

    LatticeWindow() = default;
    LatticeWindow(int lo, int hi) : min_x(lo), max_x(hi) {
        if (lo > hi) throw std::invalid_argument("LatticeWindow: min_x > max_x");
        if (lo > 0 || hi < 0)
            throw std::invalid_argument("LatticeWindow: window must contain the origin, got [" +
                                        std::to_string(lo) + ", " + std::to_string(hi) + "]");
    }

    int width() const { return max_x - min_x + 1; }
    bool contains(int x) const { return x >= min_x && x <= max_x; }

    LatticeWindow grown(int by) const { return {min_x - by, max_x + by}; }

    friend bool operator==(const LatticeWindow&, const LatticeWindow&) = default;
};

// Window that holds every site reachable in `steps` steps from `position`.
inline LatticeWindow reachable_window(int position, int steps) {
    if (steps < 0) throw std::invalid_argument("reachable_window: negative step count");
    return {std::min(position - steps, 0), std::max(position + steps, 0)};
}

}  // namespace qwalk
