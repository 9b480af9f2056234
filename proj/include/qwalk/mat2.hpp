#pragma once

// Fixed-size complex algebra for the two-state coin space {|L>, |R>}.

#include <cmath>
#include <complex>

namespace qwalk {

using cplx = std::complex<double>;

// Spinor components at one lattice site: l = left-chirality amplitude,
// r = right-chirality amplitude.
struct Vec2 {
    cplx l{0.0, 0.0};
    cplx r{0.0, 0.0};

    double norm_sq() const { return std::norm(l) + std::norm(r); }
};

inline Vec2 operator+(const Vec2& u, const Vec2& v) { return {u.l + v.l, u.r + v.r}; }
inline Vec2 operator-(const Vec2& u, const Vec2& v) { return {u.l - v.l, u.r - v.r}; }
inline Vec2 operator*(cplx s, const Vec2& v) { return {s * v.l, s * v.r}; }
inline Vec2 operator*(double s, const Vec2& v) { return {s * v.l, s * v.r}; }

// 2x2 complex matrix, row-major in the coin basis.
struct Mat2 {
    cplx e00{0.0, 0.0};
    cplx e01{0.0, 0.0};
    cplx e10{0.0, 0.0};
    cplx e11{0.0, 0.0};

    static Mat2 zero() { return {}; }
    static Mat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }

    Mat2& operator+=(const Mat2& o) {
        e00 += o.e00;
        e01 += o.e01;
        e10 += o.e10;
        e11 += o.e11;
        return *this;
    }

    Mat2& operator-=(const Mat2& o) {
        e00 -= o.e00;
        e01 -= o.e01;
        e10 -= o.e10;
        e11 -= o.e11;
        return *this;
    }

    Mat2& operator*=(cplx s) {
        e00 *= s;
        e01 *= s;
        e10 *= s;
        e11 *= s;
        return *this;
    }

    Mat2 adjoint() const {
        return {std::conj(e00), std::conj(e10), std::conj(e01), std::conj(e11)};
    }

    cplx trace() const { return e00 + e11; }

    double max_abs() const {
        return std::max(std::max(std::abs(e00), std::abs(e01)),
                        std::max(std::abs(e10), std::abs(e11)));
    }

    // Squared Frobenius norm, sum |entry|^2.
    double frob_sq() const {
        return std::norm(e00) + std::norm(e01) + std::norm(e10) + std::norm(e11);
    }

    bool is_zero() const { return e00 == 0.0 && e01 == 0.0 && e10 == 0.0 && e11 == 0.0; }
};

inline Mat2 operator+(Mat2 a, const Mat2& b) { return a += b; }
inline Mat2 operator-(Mat2 a, const Mat2& b) { return a -= b; }
inline Mat2 operator*(cplx s, Mat2 m) { return m *= s; }
inline Mat2 operator*(double s, Mat2 m) { return m *= cplx{s, 0.0}; }

inline Mat2 operator*(const Mat2& a, const Mat2& b) {
    return {a.e00 * b.e00 + a.e01 * b.e10, a.e00 * b.e01 + a.e01 * b.e11,
            a.e10 * b.e00 + a.e11 * b.e10, a.e10 * b.e01 + a.e11 * b.e11};
}

inline Vec2 operator*(const Mat2& m, const Vec2& v) {
    return {m.e00 * v.l + m.e01 * v.r, m.e10 * v.l + m.e11 * v.r};
}

// u v^dagger
inline Mat2 outer(const Vec2& u, const Vec2& v) {
    return {u.l * std::conj(v.l), u.l * std::conj(v.r),
            u.r * std::conj(v.l), u.r * std::conj(v.r)};
}

inline Mat2 pauli_z() { return {1.0, 0.0, 0.0, -1.0}; }
inline Mat2 pauli_x() { return {0.0, 1.0, 1.0, 0.0}; }

// sigma_z M sigma_z: flips the sign of the coin coherences.
inline Mat2 sigma_z_conjugate(const Mat2& m) { return {m.e00, -m.e01, -m.e10, m.e11}; }

inline double max_abs_diff(const Mat2& a, const Mat2& b) { return (a - b).max_abs(); }

}  // namespace qwalk
