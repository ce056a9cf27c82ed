#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "matrix.hpp"
#include "polynomial.hpp"

namespace qwspectra {

namespace detail {

// Gaussian integer, used only as the scaled-up backend for characteristic
// polynomials of matrices with nonreal entries.
struct GaussInt {
    BigInt re, im;
    GaussInt() = default;
    GaussInt(int v) : re(v) {} // NOLINT(google-explicit-constructor)
    GaussInt(BigInt r, BigInt i) : re(std::move(r)), im(std::move(i)) {}

    GaussInt& operator+=(const GaussInt& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    friend GaussInt operator*(const GaussInt& a, const GaussInt& b) {
        if (a.im == 0 && b.im == 0)
            return {a.re * b.re, BigInt(0)};
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend GaussInt operator-(const GaussInt& a, const GaussInt& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend bool operator==(const GaussInt& a, const GaussInt& b) {
        return a.re == b.re && a.im == b.im;
    }
};

inline bool scalar_is_zero(const GaussInt& z) { return z.re == 0 && z.im == 0; }

inline BigInt exact_div_int(const BigInt& x, unsigned k) {
    BigInt q, r;
    boost::multiprecision::divide_qr(x, BigInt(k), q, r);
    if (r != 0)
        throw Error("internal: characteristic polynomial trace not divisible");
    return q;
}

} // namespace detail

// Faddeev-LeVerrier over any exact scalar that supports ring ops plus the
// div_trace hook (division of a trace by a positive machine integer).
// Returns coefficients of det(xI - M), low degree first, leading term 1.
// The Cayley-Hamilton residual M_n + c_n I = 0 is checked before returning.
template <class T, class DivTrace>
std::vector<T> faddeev_leverrier(const Matrix<T>& m, DivTrace div_trace) {
    if (!m.is_square())
        throw DimensionError("characteristic polynomial of non-square matrix " + m.shape_str());
    std::size_t n = m.rows();
    std::vector<T> c(n + 1, T(0));
    c[n] = T(1);
    if (n == 0)
        return c;
    Matrix<T> mk = m;
    for (std::size_t k = 1; k <= n; ++k) {
        if (k > 1) {
            // mk <- m * (mk_prev + c_{k-1} I)
            Matrix<T> shifted = mk;
            for (std::size_t i = 0; i < n; ++i)
                shifted(i, i) += c[n - (k - 1)];
            mk = m * shifted;
        }
        T t(0);
        for (std::size_t i = 0; i < n; ++i)
            t += mk(i, i);
        c[n - k] = T(0) - div_trace(t, static_cast<unsigned>(k));
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            T want = (i == j) ? (T(0) - c[0]) : T(0);
            if (!(mk(i, j) == want))
                throw Error("internal: Cayley-Hamilton self-check failed");
        }
    return c;
}

namespace detail {

inline BigInt scale_factor(const ExactMatrix& m) {
    BigInt l(1);
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            l = lcm(l, denominator(m(i, j).real()));
            l = lcm(l, denominator(m(i, j).imag()));
        }
    return l;
}

} // namespace detail

// Exact characteristic polynomial det(xI - M). Internally clears
// denominators and runs over (Gaussian) integers, then rescales.
inline Polynomial<GaussianRational> charpoly_exact(const ExactMatrix& m) {
    if (!m.is_square())
        throw DimensionError("characteristic polynomial of non-square matrix " + m.shape_str());
    std::size_t n = m.rows();
    BigInt l = detail::scale_factor(m);
    BigRational lq(l);
    std::vector<GaussianRational> out(n + 1);

    if (is_real(m)) {
        Matrix<BigInt> b(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                const BigRational& v = m(i, j).real();
                b(i, j) = numerator(v) * (l / denominator(v));
            }
        auto c = faddeev_leverrier(b, [](const BigInt& t, unsigned k) {
            return detail::exact_div_int(t, k);
        });
        BigRational scale(1);
        for (std::size_t k = 0; k <= n; ++k) {
            out[n - k] = GaussianRational(BigRational(c[n - k]) / scale);
            scale *= lq;
        }
    } else {
        Matrix<detail::GaussInt> b(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                const GaussianRational& v = m(i, j);
                b(i, j) = {numerator(v.real()) * (l / denominator(v.real())),
                           numerator(v.imag()) * (l / denominator(v.imag()))};
            }
        auto c = faddeev_leverrier(b, [](const detail::GaussInt& t, unsigned k) {
            return detail::GaussInt{detail::exact_div_int(t.re, k), detail::exact_div_int(t.im, k)};
        });
        BigRational scale(1);
        for (std::size_t k = 0; k <= n; ++k) {
            out[n - k] = GaussianRational(BigRational(c[n - k].re) / scale,
                                          BigRational(c[n - k].im) / scale);
            scale *= lq;
        }
    }
    return Polynomial<GaussianRational>(std::move(out));
}

// Fraction-free style elimination with partial pivoting; exact over a field.
template <class T>
T determinant_bareiss(Matrix<T> m) {
    if (!m.is_square())
        throw DimensionError("determinant of non-square matrix " + m.shape_str());
    std::size_t n = m.rows();
    if (n == 0)
        return T(1);
    bool negate = false;
    T prev(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (scalar_is_zero(m(k, k))) {
            std::size_t p = k + 1;
            while (p < n && scalar_is_zero(m(p, k)))
                ++p;
            if (p == n)
                return T(0);
            for (std::size_t j = k; j < n; ++j)
                std::swap(m(k, j), m(p, j));
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
        prev = m(k, k);
    }
    T det = m(n - 1, n - 1);
    return negate ? T(0) - det : det;
}

// det(x^2 A2 + x A1 + A0), computed by evaluating the determinant at 2n+1
// integer points and interpolating. Independent of the Faddeev-LeVerrier
// route on purpose: identity checks compare the two.
inline Polynomial<GaussianRational> det_quadratic_pencil(const ExactMatrix& a2,
                                                         const ExactMatrix& a1,
                                                         const ExactMatrix& a0) {
    if (!a2.is_square() || a2.rows() != a1.rows() || a2.rows() != a0.rows() ||
        a1.cols() != a1.rows() || a0.cols() != a0.rows())
        throw DimensionError("pencil blocks must be square and equal-sized");
    std::size_t n = a2.rows();
    std::size_t points = 2 * n + 1;
    std::vector<GaussianRational> xs(points), ys(points);
    for (std::size_t k = 0; k < points; ++k) {
        // 0, 1, -1, 2, -2, ...
        long v = static_cast<long>((k + 1) / 2);
        if (k % 2 == 0)
            v = -v;
        GaussianRational x{BigRational(v)};
        ExactMatrix at(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                at(i, j) = (x * x) * a2(i, j) + x * a1(i, j) + a0(i, j);
        xs[k] = x;
        ys[k] = determinant_bareiss(std::move(at));
    }
    return newton_interpolate(xs, ys);
}

// det(xI - M) through the pencil/interpolation route; the test-side oracle
// counterpart of charpoly_exact.
inline Polynomial<GaussianRational> charpoly_by_interpolation(const ExactMatrix& m) {
    std::size_t n = m.rows();
    ExactMatrix zero(n, n);
    ExactMatrix neg(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            neg(i, j) = -m(i, j);
    // x^2 * 0 + x * I + (-M)
    return det_quadratic_pencil(zero, ExactMatrix::identity(n), neg);
}

} // namespace qwspectra
