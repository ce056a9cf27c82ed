#pragma once

#include <complex>
#include <string>

#include "rational.hpp"

namespace qwspectra {

// Element of Q(i). Arithmetic is exact; division throws on a zero divisor.
class GaussianRational {
public:
    GaussianRational() = default;
    GaussianRational(int v) : re_(v) {}                  // NOLINT(google-explicit-constructor)
    GaussianRational(BigRational re) : re_(std::move(re)) {} // NOLINT(google-explicit-constructor)
    GaussianRational(BigRational re, BigRational im)
        : re_(std::move(re)), im_(std::move(im)) {}

    static GaussianRational i() { return {BigRational(0), BigRational(1)}; }

    const BigRational& real() const { return re_; }
    const BigRational& imag() const { return im_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_real() const { return im_ == 0; }

    GaussianRational conj() const { return {re_, -im_}; }

    // |z|^2, always a nonnegative rational.
    BigRational norm2() const { return re_ * re_ + im_ * im_; }

    GaussianRational operator-() const { return {-re_, -im_}; }

    GaussianRational& operator+=(const GaussianRational& o) {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }

    GaussianRational& operator-=(const GaussianRational& o) {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }

    GaussianRational& operator*=(const GaussianRational& o) {
        if (im_ == 0 && o.im_ == 0) {
            re_ *= o.re_;
            return *this;
        }
        BigRational r = re_ * o.re_ - im_ * o.im_;
        im_ = re_ * o.im_ + im_ * o.re_;
        re_ = std::move(r);
        return *this;
    }

    GaussianRational& operator/=(const GaussianRational& o) {
        if (o.is_zero())
            throw Error("division by zero in Q(i)");
        if (im_ == 0 && o.im_ == 0) {
            re_ /= o.re_;
            return *this;
        }
        BigRational n2 = o.norm2();
        *this *= o.conj();
        re_ /= n2;
        im_ /= n2;
        return *this;
    }

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

private:
    BigRational re_;
    BigRational im_;
};

// "p/q" for real values, "re+im*i" otherwise (matches parse_gaussian).
inline std::string format_gaussian(const GaussianRational& z) {
    if (z.is_real())
        return format_rational(z.real());
    std::string im = format_rational(z.imag()) + "*i";
    if (z.real() == 0)
        return im;
    std::string sep = (im[0] == '-') ? "" : "+";
    return format_rational(z.real()) + sep + im;
}

// Accepts "p/q", "p/q*i", "a+b*i", "a-b/c*i". No whitespace.
inline GaussianRational parse_gaussian(std::string_view s) {
    if (s.empty())
        throw ParseError("empty gaussian literal");
    bool imag_unit = false;
    if (s.size() >= 2 && s.substr(s.size() - 2) == "*i") {
        imag_unit = true;
        s.remove_suffix(2);
    }
    // Split on the last '+' or '-' that is not a leading sign and not after '/'.
    std::size_t split = std::string_view::npos;
    for (std::size_t k = 1; k < s.size(); ++k) {
        if ((s[k] == '+' || s[k] == '-') && s[k - 1] != '/')
            split = k;
    }
    if (split == std::string_view::npos) {
        BigRational v = parse_rational(s);
        return imag_unit ? GaussianRational(BigRational(0), v) : GaussianRational(v);
    }
    if (!imag_unit)
        throw ParseError("bad gaussian literal: '" + std::string(s) + "'");
    BigRational re = parse_rational(s.substr(0, split));
    BigRational im = parse_rational(s.substr(split));
    return {re, im};
}

inline std::complex<double> to_complex(const GaussianRational& z) {
    return {to_double(z.real()), to_double(z.imag())};
}

// Scalar hooks shared by the matrix/polynomial templates.
inline GaussianRational conjugate(const GaussianRational& z) { return z.conj(); }
inline BigRational conjugate(const BigRational& q) { return q; }
inline BigInt conjugate(const BigInt& n) { return n; }
inline double conjugate(double x) { return x; }
inline std::complex<double> conjugate(const std::complex<double>& z) { return std::conj(z); }

inline bool scalar_is_zero(const GaussianRational& z) { return z.is_zero(); }
inline bool scalar_is_zero(const BigRational& q) { return q == 0; }
inline bool scalar_is_zero(const BigInt& n) { return n == 0; }
inline bool scalar_is_zero(double x) { return x == 0.0; }
inline bool scalar_is_zero(const std::complex<double>& z) { return z == std::complex<double>(0.0); }

} // namespace qwspectra
