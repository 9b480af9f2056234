#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "qwalk/coin.hpp"
#include "qwalk/lattice.hpp"
#include "qwalk/mat2.hpp"

namespace qwalk {

inline constexpr double kNormTolerance = 1e-12;

// Walker localized at one site with a unit-norm chirality vector.
struct InitialState {
    int position = 0;
    Vec2 chirality{cplx{1.0 / std::numbers::sqrt2, 0.0}, cplx{0.0, 1.0 / std::numbers::sqrt2}};

    InitialState() = default;
    InitialState(int pos, Vec2 chi) : position(pos), chirality(chi) {
        if (std::abs(chirality.norm_sq() - 1.0) > kNormTolerance)
            throw std::invalid_argument("InitialState: chirality is not unit norm");
    }
};

// Pure walker state: one (a_x, b_x) amplitude pair per site of the window.
// Sites outside the window carry exactly zero amplitude.
class SpinorField {
  public:
    explicit SpinorField(LatticeWindow window)
        : window_(window), amp_(static_cast<std::size_t>(window.width())) {}

    static SpinorField from_initial(const InitialState& init) {
        SpinorField s(LatticeWindow{std::min(init.position, 0), std::max(init.position, 0)});
        s.at(init.position) = init.chirality;
        return s;
    }

    const LatticeWindow& window() const { return window_; }

    Vec2& at(int x) { return amp_[index(x)]; }
    const Vec2& at(int x) const { return amp_[index(x)]; }

    // Zero outside the window.
    Vec2 amplitude(int x) const { return window_.contains(x) ? amp_[index(x)] : Vec2{}; }

    double norm_sq() const {
        double n = 0.0;
        for (const Vec2& v : amp_) n += v.norm_sq();
        return n;
    }

    void scale(double s) {
        for (Vec2& v : amp_) v = s * v;
    }

    // Smallest window holding all nonzero amplitudes (still containing 0).
    LatticeWindow support() const {
        int lo = 0, hi = 0;
        bool any = false;
        for (int x = window_.min_x; x <= window_.max_x; ++x) {
            if (amp_[index(x)].norm_sq() > 0.0) {
                if (!any) lo = x;
                hi = x;
                any = true;
            }
        }
        if (!any) return {0, 0};
        return {std::min(lo, 0), std::max(hi, 0)};
    }

  private:
    std::size_t index(int x) const { return static_cast<std::size_t>(x - window_.min_x); }

    LatticeWindow window_;
    std::vector<Vec2> amp_;
};

// One step of the unitary walk:
//   a'_x = cos g * a_{x+1} + sin g * b_{x+1}
//   b'_x = sin g * a_{x-1} - cos g * b_{x-1}
// The window grows by one site on each side, so support is never truncated.
inline SpinorField unitary_step(const SpinorField& in, const CoinOperator& coin) {
    const double c = coin.cos_gamma();
    const double s = coin.sin_gamma();
    SpinorField out(in.window().grown(1));
    for (int x = out.window().min_x; x <= out.window().max_x; ++x) {
        const Vec2 right = in.amplitude(x + 1);
        const Vec2 left = in.amplitude(x - 1);
        out.at(x) = {c * right.l + s * right.r, s * left.l - c * left.r};
    }
    return out;
}

// Inverse of unitary_step (conjugate-transpose walk): recovers the input
// state up to rounding.
inline SpinorField unitary_step_adjoint(const SpinorField& in, const CoinOperator& coin) {
    const double c = coin.cos_gamma();
    const double s = coin.sin_gamma();
    SpinorField out(in.window().grown(1));
    for (int x = out.window().min_x; x <= out.window().max_x; ++x) {
        const Vec2 left = in.amplitude(x - 1);
        const Vec2 right = in.amplitude(x + 1);
        out.at(x) = {c * left.l + s * right.r, s * left.l - c * right.r};
    }
    return out;
}

}  // namespace qwalk
