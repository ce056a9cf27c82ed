#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "errors.hpp"
#include "gaussian.hpp"

namespace qwspectra {

// Dense univariate polynomial, coefficients stored low degree first and
// always trimmed. degree() of the zero polynomial is -1.
template <class T>
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }
    Polynomial(std::initializer_list<T> coeffs) : c_(coeffs) { trim(); }

    static Polynomial constant(T v) { return Polynomial(std::vector<T>{std::move(v)}); }

    // c * x^k
    static Polynomial monomial(T c, std::size_t k) {
        std::vector<T> v(k + 1, T(0));
        v[k] = std::move(c);
        return Polynomial(std::move(v));
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }

    // Coefficient of x^k, zero beyond the stored range.
    const T& coeff(std::size_t k) const {
        static const T zero(0);
        return k < c_.size() ? c_[k] : zero;
    }

    const std::vector<T>& coeffs() const { return c_; }

    const T& leading() const {
        if (c_.empty())
            throw Error("leading coefficient of zero polynomial");
        return c_.back();
    }

    template <class X>
    X eval(const X& x) const {
        X acc(0);
        for (std::size_t k = c_.size(); k-- > 0;)
            acc = acc * x + X(c_[k]);
        return acc;
    }

    Polynomial& operator+=(const Polynomial& o) {
        if (o.c_.size() > c_.size())
            c_.resize(o.c_.size(), T(0));
        for (std::size_t k = 0; k < o.c_.size(); ++k)
            c_[k] += o.c_[k];
        trim();
        return *this;
    }

    Polynomial& operator-=(const Polynomial& o) {
        if (o.c_.size() > c_.size())
            c_.resize(o.c_.size(), T(0));
        for (std::size_t k = 0; k < o.c_.size(); ++k)
            c_[k] -= o.c_[k];
        trim();
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero())
            return {};
        std::vector<T> out(a.c_.size() + b.c_.size() - 1, T(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (scalar_is_zero(a.c_[i]))
                continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                out[i + j] += a.c_[i] * b.c_[j];
        }
        return Polynomial(std::move(out));
    }

    friend Polynomial operator*(const T& s, const Polynomial& p) {
        std::vector<T> out(p.c_);
        for (auto& c : out)
            c = s * c;
        return Polynomial(std::move(out));
    }

    Polynomial pow(unsigned e) const {
        Polynomial acc = constant(T(1));
        for (unsigned k = 0; k < e; ++k)
            acc = acc * (*this);
        return acc;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

private:
    void trim() {
        while (!c_.empty() && scalar_is_zero(c_.back()))
            c_.pop_back();
    }

    std::vector<T> c_;
};

// Exact quotient num / den over a field. Throws NonzeroRemainderError when
// den does not divide num, and Error on a zero divisor.
template <class T>
Polynomial<T> poly_divide_exact(const Polynomial<T>& num, const Polynomial<T>& den) {
    if (num.is_zero())
        return {};
    if (den.is_zero())
        throw NonzeroRemainderError("zero divisor leaves the whole numerator");
    if (num.degree() < den.degree())
        throw NonzeroRemainderError("quotient degree would be negative");
    std::vector<T> rem(num.coeffs());
    std::vector<T> quot(num.degree() - den.degree() + 1, T(0));
    const T& lead = den.leading();
    for (std::size_t k = quot.size(); k-- > 0;) {
        T q = rem[k + den.degree()] / lead;
        if (!scalar_is_zero(q)) {
            for (int j = 0; j <= den.degree(); ++j)
                rem[k + j] -= q * den.coeff(j);
        }
        quot[k] = std::move(q);
    }
    for (const T& r : rem)
        if (!scalar_is_zero(r))
            throw NonzeroRemainderError("polynomial division leaves a nonzero remainder");
    return Polynomial<T>(std::move(quot));
}

// Multiplicity of the root r, by repeated exact division by (x - r).
template <class T>
unsigned root_multiplicity(Polynomial<T> p, const T& r) {
    Polynomial<T> factor({-r, T(1)});
    unsigned mult = 0;
    while (!p.is_zero() && scalar_is_zero(p.template eval<T>(r))) {
        p = poly_divide_exact(p, factor);
        ++mult;
    }
    return mult;
}

// Newton divided-difference interpolation through (xs[k], ys[k]). The xs
// must be pairwise distinct.
template <class T>
Polynomial<T> newton_interpolate(const std::vector<T>& xs, const std::vector<T>& ys) {
    if (xs.size() != ys.size())
        throw DimensionError("interpolation point/value count mismatch");
    std::size_t n = xs.size();
    std::vector<T> dd(ys);
    for (std::size_t level = 1; level < n; ++level)
        for (std::size_t k = n; k-- > level;)
            dd[k] = (dd[k] - dd[k - 1]) / (xs[k] - xs[k - level]);
    Polynomial<T> result;
    Polynomial<T> basis = Polynomial<T>::constant(T(1));
    for (std::size_t k = 0; k < n; ++k) {
        result += dd[k] * basis;
        basis = basis * Polynomial<T>({-xs[k], T(1)});
    }
    return result;
}

inline std::string format_polynomial(const Polynomial<GaussianRational>& p, const char* var = "x") {
    if (p.is_zero())
        return "0";
    std::string out;
    for (std::size_t k = p.coeffs().size(); k-- > 0;) {
        const auto& c = p.coeff(k);
        if (c.is_zero())
            continue;
        if (!out.empty())
            out += " + ";
        std::string cs = format_gaussian(c);
        if (k == 0) {
            out += cs;
        } else {
            if (cs != "1")
                out += "(" + cs + ")*";
            out += var;
            if (k > 1)
                out += "^" + std::to_string(k);
        }
    }
    return out;
}

} // namespace qwspectra
