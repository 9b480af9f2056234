#pragma once

#include <cmath>
#include <stdexcept>

#include "qwalk/mat2.hpp"

namespace qwalk {

// Coin matrix sigma_z cos(gamma) + sigma_x sin(gamma): real, symmetric,
// unitary and Hermitian (K^2 = 1). gamma = pi/4 gives the Hadamard coin.
inline Mat2 coin_matrix(double gamma) {
    if (!std::isfinite(gamma)) throw std::invalid_argument("coin_matrix: non-finite angle");
    const double c = std::cos(gamma);
    const double s = std::sin(gamma);
    return {c, s, s, -c};
}

struct CoinOperator {
    double gamma = 0.0;
    Mat2 matrix = Mat2::identity();

    CoinOperator() : CoinOperator(0.0) {}
    explicit CoinOperator(double angle) : gamma(angle), matrix(coin_matrix(angle)) {}

    double cos_gamma() const { return matrix.e00.real(); }
    double sin_gamma() const { return matrix.e01.real(); }
};

}  // namespace qwalk
