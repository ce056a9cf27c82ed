#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "matrix.hpp"

namespace qwspectra {

// Eigenvalues of a real symmetric matrix by cyclic Jacobi rotations,
// returned in descending order. Symmetry is checked up to sym_tol and
// violations throw NotSymmetricError.
inline std::vector<double> symmetric_eigenvalues(const FloatMatrix& m,
                                                 double sym_tol = 1e-12) {
    if (!m.is_square())
        throw DimensionError("eigenvalues of non-square matrix " + m.shape_str());
    std::size_t n = m.rows();
    std::vector<double> a(n * n);
    double scale = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            scale = std::max(scale, std::abs(m(i, j)));
    double tol = sym_tol * std::max(scale, 1.0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const auto& z = m(i, j);
            if (std::abs(z.imag()) > tol)
                throw NotSymmetricError("matrix has a nonreal entry at (" +
                                        std::to_string(i) + "," + std::to_string(j) + ")");
            if (std::abs(z.real() - m(j, i).real()) > tol)
                throw NotSymmetricError("matrix is not symmetric at (" +
                                        std::to_string(i) + "," + std::to_string(j) + ")");
            a[i * n + j] = z.real();
        }
    // Enforce exact symmetry of the working copy.
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            double v = 0.5 * (a[i * n + j] + a[j * n + i]);
            a[i * n + j] = a[j * n + i] = v;
        }

    auto off = [&]() {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                s += a[i * n + j] * a[i * n + j];
        return std::sqrt(2.0 * s);
    };

    const double stop = 1e-14 * std::max(scale, 1.0) * static_cast<double>(n);
    for (int sweep = 0; sweep < 100 && off() > stop; ++sweep) {
        for (std::size_t p = 0; p + 1 < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) {
                double apq = a[p * n + q];
                if (std::abs(apq) <= 1e-300)
                    continue;
                double app = a[p * n + p], aqq = a[q * n + q];
                double theta = (aqq - app) / (2.0 * apq);
                double t = std::copysign(1.0, theta) /
                           (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                double c = 1.0 / std::sqrt(t * t + 1.0);
                double s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    double akp = a[k * n + p], akq = a[k * n + q];
                    a[k * n + p] = c * akp - s * akq;
                    a[k * n + q] = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    double apk = a[p * n + k], aqk = a[q * n + k];
                    a[p * n + k] = c * apk - s * aqk;
                    a[q * n + k] = s * apk + c * aqk;
                }
            }
    }
    std::vector<double> eig(n);
    for (std::size_t i = 0; i < n; ++i)
        eig[i] = a[i * n + i];
    std::sort(eig.begin(), eig.end(), std::greater<>());
    return eig;
}

} // namespace qwspectra
