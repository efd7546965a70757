#pragma once

#include <complex>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace pluriloc {

using Complex = std::complex<double>;
using CVec = std::vector<Complex>;   // point in C^n
using RVec = std::vector<double>;    // point in R^n

// Bilinear form <z,w> = sum z_j w_j, no conjugation.
inline Complex bilinear(const CVec& z, const CVec& w) {
    if (z.size() != w.size()) throw std::invalid_argument("bilinear: dimension mismatch");
    Complex s = 0.0;
    for (std::size_t j = 0; j < z.size(); ++j) s += z[j] * w[j];
    return s;
}

// Euclidean norm |z| = <z, conj z>^{1/2}.
inline double euclid_norm(const CVec& z) {
    double s = 0.0;
    for (const auto& zj : z) s += std::norm(zj);
    return std::sqrt(s);
}

inline double euclid_norm(const RVec& x) {
    double s = 0.0;
    for (double xj : x) s += xj * xj;
    return std::sqrt(s);
}

inline double dot(const RVec& x, const RVec& y) {
    if (x.size() != y.size()) throw std::invalid_argument("dot: dimension mismatch");
    double s = 0.0;
    for (std::size_t j = 0; j < x.size(); ++j) s += x[j] * y[j];
    return s;
}

inline CVec scale(const CVec& z, Complex t) {
    CVec r = z;
    for (auto& rj : r) rj *= t;
    return r;
}

inline RVec real_part(const CVec& z) {
    RVec r(z.size());
    for (std::size_t j = 0; j < z.size(); ++j) r[j] = z[j].real();
    return r;
}

inline RVec imag_part(const CVec& z) {
    RVec r(z.size());
    for (std::size_t j = 0; j < z.size(); ++j) r[j] = z[j].imag();
    return r;
}

inline CVec complexify(const RVec& x) {
    CVec z(x.size());
    for (std::size_t j = 0; j < x.size(); ++j) z[j] = Complex(x[j], 0.0);
    return z;
}

inline bool is_zero_point(const CVec& z) {
    for (const auto& zj : z)
        if (zj != Complex(0.0, 0.0)) return false;
    return true;
}

}  // namespace pluriloc
