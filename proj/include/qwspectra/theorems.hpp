#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <chrono>
#include <cmath>
#include <complex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "charpoly.hpp"
#include "graph.hpp"
#include "jacobi.hpp"
#include "walk_matrices.hpp"

namespace qwspectra {

enum class Verdict { holds, fails, precondition_violated };

inline const char* verdict_name(Verdict v) {
    switch (v) {
    case Verdict::holds: return "holds";
    case Verdict::fails: return "fails";
    case Verdict::precondition_violated: return "precondition-violated";
    }
    return "?";
}

struct Witness {
    std::string description;
    long index = -1; // coefficient degree or flattened entry index, -1 when n/a
    std::string lhs, rhs;
};

struct GraphSummary {
    int n = 0;
    int m = 0;
    std::optional<int> k;
    std::optional<int> girth;
};

inline GraphSummary summarize(const Graph& g) {
    return {g.vertex_count(), g.edge_count(), g.regular_degree(), girth(g)};
}

struct VerificationReport {
    std::string theorem;
    GraphSummary graph;
    std::string mode = "exact";
    Verdict verdict = Verdict::fails;
    std::optional<Witness> witness;
    std::vector<std::pair<std::string, std::string>> details;
    double elapsed_ms = 0.0;

    void detail(std::string key, std::string value) {
        details.emplace_back(std::move(key), std::move(value));
    }

    std::string detail(const std::string& key) const {
        for (const auto& [k, v] : details)
            if (k == key)
                return v;
        return {};
    }
};

enum class VerifyMode { auto_select, exact, floating };

namespace detail {

class Stopwatch {
public:
    Stopwatch() : t0_(std::chrono::steady_clock::now()) {}
    double ms() const {
        auto dt = std::chrono::steady_clock::now() - t0_;
        return std::chrono::duration<double, std::milli>(dt).count();
    }

private:
    std::chrono::steady_clock::time_point t0_;
};

using ExactPoly = Polynomial<GaussianRational>;

inline ExactPoly lambda_sq_minus_1() {
    return ExactPoly({GaussianRational(-1), GaussianRational(0), GaussianRational(1)});
}

inline std::optional<Witness> compare_polys(const ExactPoly& lhs, const ExactPoly& rhs) {
    int top = std::max(lhs.degree(), rhs.degree());
    for (int k = 0; k <= top; ++k)
        if (!(lhs.coeff(k) == rhs.coeff(k)))
            return Witness{"coefficient of x^" + std::to_string(k), k,
                           format_gaussian(lhs.coeff(k)), format_gaussian(rhs.coeff(k))};
    return std::nullopt;
}

inline std::optional<Witness> compare_matrices(const ExactMatrix& lhs, const ExactMatrix& rhs) {
    if (auto d = first_difference(lhs, rhs)) {
        auto [i, j] = *d;
        return Witness{"entry (" + std::to_string(i) + "," + std::to_string(j) + ")",
                       static_cast<long>(i * lhs.cols() + j),
                       format_gaussian(lhs(i, j)), format_gaussian(rhs(i, j))};
    }
    return std::nullopt;
}

// Multiplies by (x^2-1)^(m-n) or divides it out when m < n; division
// failure is reported through NonzeroRemainderError.
inline ExactPoly apply_sq_factor(const ExactPoly& p, int m, int n) {
    if (m >= n)
        return lambda_sq_minus_1().pow(static_cast<unsigned>(m - n)) * p;
    return poly_divide_exact(p, lambda_sq_minus_1().pow(static_cast<unsigned>(n - m)));
}

inline std::vector<std::complex<double>> to_float_coeffs(const ExactPoly& p) {
    std::vector<std::complex<double>> c(static_cast<std::size_t>(p.degree() + 1));
    for (std::size_t k = 0; k < c.size(); ++k)
        c[k] = to_complex(p.coeff(k));
    return c;
}

inline std::complex<double> horner(const std::vector<std::complex<double>>& c,
                                   std::complex<double> x) {
    std::complex<double> acc(0.0);
    for (std::size_t k = c.size(); k-- > 0;)
        acc = acc * x + c[k];
    return acc;
}

// Determinant of a float matrix by LU with partial pivoting.
inline std::complex<double> determinant_float(FloatMatrix m) {
    std::size_t n = m.rows();
    std::complex<double> det(1.0);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        for (std::size_t i = k + 1; i < n; ++i)
            if (std::abs(m(i, k)) > std::abs(m(p, k)))
                p = i;
        if (std::abs(m(p, k)) == 0.0)
            return {0.0, 0.0};
        if (p != k) {
            for (std::size_t j = k; j < n; ++j)
                std::swap(m(k, j), m(p, j));
            det = -det;
        }
        det *= m(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            std::complex<double> f = m(i, k) / m(k, k);
            for (std::size_t j = k; j < n; ++j)
                m(i, j) -= f * m(k, j);
        }
    }
    return det;
}

inline std::string format_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return buf;
}

} // namespace detail

// Theorem 1: det(xI - U^{w,s}) = (x^2-1)^{m-n} det((x^2-1)I - sx S + s D).
// The left side goes through Faddeev-LeVerrier, the right through Bareiss
// evaluation and interpolation; the two pipelines share no determinant code.
inline VerificationReport verify_theorem1(const Graph& g, const WeightAssignment& w,
                                          const BigRational& s) {
    detail::Stopwatch clock;
    VerificationReport rep;
    rep.theorem = "thm1";
    rep.graph = summarize(g);
    if (!g.is_connected()) {
        rep.verdict = Verdict::precondition_violated;
        rep.detail("reason", "graph is not connected");
        rep.elapsed_ms = clock.ms();
        return rep;
    }
    int n = g.vertex_count(), m = g.edge_count();
    auto lhs = charpoly_exact(matrix_U(g, w, s));

    GaussianRational sg{s};
    ExactMatrix id = ExactMatrix::identity(n);
    ExactMatrix y = (GaussianRational(0) - sg) * matrix_S(g, w);
    ExactMatrix z = sg * matrix_D(g, w) - id;
    try {
        auto rhs = detail::apply_sq_factor(det_quadratic_pencil(id, y, z), m, n);
        rep.witness = detail::compare_polys(lhs, rhs);
        rep.verdict = rep.witness ? Verdict::fails : Verdict::holds;
    } catch (const NonzeroRemainderError&) {
        rep.verdict = Verdict::fails;
        rep.witness = Witness{"(x^2-1)^(n-m) does not divide the vertex determinant", -1, "", ""};
    }
    rep.elapsed_ms = clock.ms();
    return rep;
}

namespace detail {

// Float-mode check of det(xI - U) = (x^2-1)^{m-n} det((x^2+1)I - 2x K) by
// comparing both sides at sample points; negative m-n is handled by
// multiplying the left side instead of dividing the right.
inline void sampled_pencil_check(VerificationReport& rep, const FloatMatrix& u,
                                 const FloatMatrix& k_mat, int m, int n, double tol) {
    std::size_t arcs = u.rows();
    std::size_t points = 2 * arcs + 1;
    double worst = 0.0;
    bool failed = false;
    for (std::size_t j = 0; j < points && !failed; ++j) {
        double x = -1.37 + 2.74 * static_cast<double>(j) / static_cast<double>(points - 1);
        FloatMatrix lm(arcs, arcs);
        for (std::size_t a = 0; a < arcs; ++a)
            for (std::size_t b = 0; b < arcs; ++b)
                lm(a, b) = (a == b ? std::complex<double>(x) : 0.0) - u(a, b);
        std::complex<double> lhs = determinant_float(std::move(lm));
        FloatMatrix rm(k_mat.rows(), k_mat.cols());
        for (std::size_t a = 0; a < k_mat.rows(); ++a)
            for (std::size_t b = 0; b < k_mat.cols(); ++b)
                rm(a, b) = (a == b ? std::complex<double>(x * x + 1.0) : 0.0) -
                           2.0 * x * k_mat(a, b);
        std::complex<double> rhs = determinant_float(std::move(rm));
        double fac = x * x - 1.0;
        if (m >= n)
            rhs *= std::pow(fac, m - n);
        else
            lhs *= std::pow(fac, n - m);
        double scale = std::max({1.0, std::abs(lhs), std::abs(rhs)});
        double err = std::abs(lhs - rhs) / scale;
        worst = std::max(worst, err);
        if (err > tol) {
            failed = true;
            rep.verdict = Verdict::fails;
            rep.witness = Witness{"sampled determinant at x=" + format_double(x), -1,
                                  format_double(lhs.real()), format_double(rhs.real())};
        }
    }
    rep.detail("max-relative-error", format_double(worst));
    if (!failed)
        rep.verdict = Verdict::holds;
}

using HP = boost::multiprecision::cpp_bin_float_50;

struct HPComplex {
    HP re, im;
};

inline HPComplex hp_add(const HPComplex& a, const HPComplex& b) { return {a.re + b.re, a.im + b.im}; }
inline HPComplex hp_sub(const HPComplex& a, const HPComplex& b) { return {a.re - b.re, a.im - b.im}; }
inline HPComplex hp_mul(const HPComplex& a, const HPComplex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
inline HP hp_abs2(const HPComplex& a) { return a.re * a.re + a.im * a.im; }
inline HPComplex hp_div(const HPComplex& a, const HPComplex& b) {
    HP d = hp_abs2(b);
    return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}

inline HP to_hp(const BigRational& q) {
    return HP(numerator(q)) / HP(denominator(q));
}

inline HPComplex hp_eval(const std::vector<HPComplex>& c, const HPComplex& z) {
    HPComplex acc{HP(0), HP(0)};
    for (auto it = c.rbegin(); it != c.rend(); ++it)
        acc = hp_add(hp_mul(acc, z), *it);
    return acc;
}

// |p(z0)| computed at 50-digit precision, after a short Newton polish that is
// only accepted while it stays within 1e-9 of the starting point. A correct
// closed-form eigenvalue is certified far below any double-precision noise
// floor; a wrong one cannot sneak in by drifting to some other root.
inline double certified_residual(const Polynomial<GaussianRational>& p, std::complex<double> z0) {
    std::vector<HPComplex> c, dc;
    c.reserve(static_cast<std::size_t>(p.degree() + 1));
    for (int k = 0; k <= p.degree(); ++k) {
        const GaussianRational& g = p.coeff(static_cast<std::size_t>(k));
        c.push_back({to_hp(g.real()), to_hp(g.imag())});
        if (k >= 1)
            dc.push_back({HP(k) * c.back().re, HP(k) * c.back().im});
    }
    HPComplex z{HP(z0.real()), HP(z0.imag())};
    const HPComplex start = z;
    HP leash = HP(1e-9) * std::max(1.0, std::abs(z0));
    HP best = hp_abs2(hp_eval(c, z));
    for (int it = 0; it < 8 && best != 0; ++it) {
        HPComplex pd = hp_eval(dc, z);
        if (hp_abs2(pd) == 0)
            break;
        HPComplex cand = hp_sub(z, hp_div(hp_eval(c, z), pd));
        if (hp_abs2(hp_sub(cand, start)) > leash * leash)
            break;
        HP v = hp_abs2(hp_eval(c, cand));
        if (v >= best)
            break;
        best = v;
        z = cand;
    }
    return std::sqrt(best.convert_to<double>());
}

} // namespace detail

// Corollary 2.1: det(xI - U_szegedy) = (x^2-1)^{m-n} det((x^2+1)I - 2x S_p).
// Exact when every needed square root is rational, otherwise float-sampled.
inline VerificationReport verify_cor21(const Graph& g, const TransitionProbability& p,
                                       VerifyMode mode = VerifyMode::auto_select,
                                       double tol = 1e-8) {
    detail::Stopwatch clock;
    VerificationReport rep;
    rep.theorem = "cor21";
    rep.graph = summarize(g);
    if (!g.is_connected()) {
        rep.verdict = Verdict::precondition_violated;
        rep.detail("reason", "graph is not connected");
        rep.elapsed_ms = clock.ms();
        return rep;
    }
    int n = g.vertex_count(), m = g.edge_count();
    if (mode != VerifyMode::floating) {
        try {
            auto lhs = charpoly_exact(szegedy(g, p));
            ExactMatrix id = ExactMatrix::identity(n);
            ExactMatrix y = GaussianRational(-2) * matrix_Sp(g, p);
            auto rhs = detail::apply_sq_factor(det_quadratic_pencil(id, y, id), m, n);
            rep.witness = detail::compare_polys(lhs, rhs);
            rep.verdict = rep.witness ? Verdict::fails : Verdict::holds;
            rep.elapsed_ms = clock.ms();
            return rep;
        } catch (const IrrationalWeightError&) {
            if (mode == VerifyMode::exact)
                throw;
        } catch (const NonzeroRemainderError&) {
            rep.verdict = Verdict::fails;
            rep.witness = Witness{"(x^2-1)^(n-m) does not divide the vertex determinant", -1, "", ""};
            rep.elapsed_ms = clock.ms();
            return rep;
        }
    }
    rep.mode = "float";
    detail::sampled_pencil_check(rep, szegedy_float(g, p), matrix_Sp_float(g, p), m, n, tol);
    rep.elapsed_ms = clock.ms();
    return rep;
}

// Corollary 2.2: same determinant identity with T_p in place of S_p, valid
// for reversible p; for the simple walk the Grover/adjacency form
// prod(deg) * det(xI - U) = (x^2-1)^{m-n} det((x^2+1)D - 2x A) is checked too.
inline VerificationReport verify_cor22(const Graph& g, const TransitionProbability& p,
                                       VerifyMode mode = VerifyMode::auto_select,
                                       double tol = 1e-8) {
    detail::Stopwatch clock;
    VerificationReport rep;
    rep.theorem = "cor22";
    rep.graph = summarize(g);
    if (!g.is_connected()) {
        rep.verdict = Verdict::precondition_violated;
        rep.detail("reason", "graph is not connected");
        rep.elapsed_ms = clock.ms();
        return rep;
    }
    if (!reversible_measure(g, p)) {
        rep.verdict = Verdict::precondition_violated;
        rep.detail("reason", "transition probability is not reversible");
        rep.elapsed_ms = clock.ms();
        return rep;
    }
    int n = g.vertex_count(), m = g.edge_count();

    bool simple = true;
    for (int a = 0; a < g.arc_count() && simple; ++a)
        simple = p.at(a) == BigRational(1, g.degree(g.origin(a)));

    if (mode != VerifyMode::floating) {
        try {
            auto lhs = charpoly_exact(szegedy(g, p));
            ExactMatrix id = ExactMatrix::identity(n);
            ExactMatrix y = GaussianRational(-2) * transition_T(g, p);
            auto rhs = detail::apply_sq_factor(det_quadratic_pencil(id, y, id), m, n);
            rep.witness = detail::compare_polys(lhs, rhs);
            rep.verdict = rep.witness ? Verdict::fails : Verdict::holds;
            if (simple && rep.verdict == Verdict::holds) {
                // prod(deg) * charpoly(grover) vs (x^2-1)^{m-n} det((x^2+1)D - 2xA)
                auto glhs = charpoly_exact(grover(g));
                GaussianRational prod_deg(1);
                ExactMatrix d(n, n);
                for (int v = 0; v < n; ++v) {
                    d(v, v) = GaussianRational(g.degree(v));
                    prod_deg *= GaussianRational(g.degree(v));
                }
                ExactMatrix a2 = d;
                ExactMatrix y2(n, n);
                const ExactMatrix adj = g.adjacency();
                for (int i = 0; i < n; ++i)
                    for (int j = 0; j < n; ++j)
                        y2(i, j) = GaussianRational(-2) * adj(i, j);
                auto grhs = detail::apply_sq_factor(det_quadratic_pencil(a2, y2, d), m, n);
                auto w = detail::compare_polys(prod_deg * glhs, grhs);
                rep.detail("grover-form", w ? "fails" : "holds");
                if (w) {
                    rep.verdict = Verdict::fails;
                    rep.witness = std::move(w);
                }
            }
            rep.elapsed_ms = clock.ms();
            return rep;
        } catch (const IrrationalWeightError&) {
            if (mode == VerifyMode::exact)
                throw;
        } catch (const NonzeroRemainderError&) {
            rep.verdict = Verdict::fails;
            rep.witness = Witness{"(x^2-1)^(n-m) does not divide the vertex determinant", -1, "", ""};
            rep.elapsed_ms = clock.ms();
            return rep;
        }
    }
    rep.mode = "float";
    FloatMatrix t = to_float(transition_T(g, p));
    detail::sampled_pencil_check(rep, szegedy_float(g, p), t, m, n, tol);
    rep.elapsed_ms = clock.ms();
    return rep;
}

struct SpectrumResult {
    std::vector<std::complex<double>> eigenvalues; // sorted by (re, im)
    VerificationReport report;
};

namespace detail {

inline void sort_spectrum(std::vector<std::complex<double>>& v) {
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) {
        if (a.real() != b.real())
            return a.real() < b.real();
        return a.imag() < b.imag();
    });
}

inline bool regular_precondition(VerificationReport& rep, const Graph& g, int min_k) {
    if (!g.is_connected()) {
        rep.verdict = Verdict::precondition_violated;
        rep.detail("reason", "graph is not connected");
        return false;
    }
    auto k = g.regular_degree();
    if (!k || *k < min_k) {
        rep.verdict = Verdict::precondition_violated;
        rep.detail("reason", k ? "degree " + std::to_string(*k) + " is below " +
                                     std::to_string(min_k)
                               : "graph is not regular");
        return false;
    }
    return true;
}

} // namespace detail

// Corollary 2.3: charpoly(U+) = (x^2-1)^{m-n} det((x^2-1)I - xA + kI)
// checked exactly; eigenvalues emitted from the closed form
// lambda_A/2 +- i sqrt(k-1-lambda_A^2/4) plus m-n copies each of +-1,
// residual-checked against the exact polynomial.
inline SpectrumResult spectrum_u_plus(const Graph& g, double tol = 1e-8) {
    detail::Stopwatch clock;
    SpectrumResult out;
    VerificationReport& rep = out.report;
    rep.theorem = "cor23";
    rep.graph = summarize(g);
    if (!detail::regular_precondition(rep, g, 2)) {
        rep.elapsed_ms = clock.ms();
        return out;
    }
    int n = g.vertex_count(), m = g.edge_count(), k = *g.regular_degree();

    auto lhs = charpoly_exact(positive_support(grover(g)));
    ExactMatrix id = ExactMatrix::identity(n);
    ExactMatrix y(n, n);
    const ExactMatrix adj = g.adjacency();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            y(i, j) = GaussianRational(0) - adj(i, j);
    ExactMatrix z = GaussianRational(k - 1) * id;
    auto rhs = detail::apply_sq_factor(det_quadratic_pencil(id, y, z), m, n);
    rep.witness = detail::compare_polys(lhs, rhs);
    rep.verdict = rep.witness ? Verdict::fails : Verdict::holds;

    auto lam_a = symmetric_eigenvalues(to_float(adj));
    for (double la : lam_a) {
        double r = k - 1.0 - la * la / 4.0;
        if (std::abs(r) < 1e-12)
            r = 0.0;
        if (r >= 0.0) {
            out.eigenvalues.emplace_back(la / 2.0, std::sqrt(r));
            out.eigenvalues.emplace_back(la / 2.0, -std::sqrt(r));
        } else {
            out.eigenvalues.emplace_back(la / 2.0 + std::sqrt(-r), 0.0);
            out.eigenvalues.emplace_back(la / 2.0 - std::sqrt(-r), 0.0);
        }
    }
    for (int c = 0; c < m - n; ++c) {
        out.eigenvalues.emplace_back(1.0, 0.0);
        out.eigenvalues.emplace_back(-1.0, 0.0);
    }
    detail::sort_spectrum(out.eigenvalues);

    double worst = 0.0;
    for (const auto& ev : out.eigenvalues)
        worst = std::max(worst, detail::certified_residual(lhs, ev));
    rep.detail("max-residual", detail::format_double(worst));
    if (worst > tol && rep.verdict == Verdict::holds) {
        rep.verdict = Verdict::fails;
        rep.witness = Witness{"closed-form eigenvalue residual exceeds tolerance", -1,
                              detail::format_double(worst), detail::format_double(tol)};
    }
    rep.detail("factor-exponent", std::to_string(m - n));
    rep.detail("mult-plus-1", std::to_string(root_multiplicity(lhs, GaussianRational(1))));
    rep.detail("mult-minus-1", std::to_string(root_multiplicity(lhs, GaussianRational(-1))));
    rep.elapsed_ms = clock.ms();
    return out;
}

// Theorem 3 at the characteristic-polynomial level:
// charpoly((U^2)+) = (x-2)^{2(m-n)} det((x+k-2)^2 I - (x-1) A^2), with the
// closed-form spectrum (lambda_A^2-2k+4)/2 +- i lambda_A sqrt(k-1-lambda_A^2/4)
// plus 2(m-n) copies of 2.
inline SpectrumResult spectrum_u2_plus(const Graph& g, double tol = 1e-8) {
    detail::Stopwatch clock;
    SpectrumResult out;
    VerificationReport& rep = out.report;
    rep.theorem = "thm3";
    rep.graph = summarize(g);
    if (!detail::regular_precondition(rep, g, 2)) {
        rep.elapsed_ms = clock.ms();
        return out;
    }
    int n = g.vertex_count(), m = g.edge_count(), k = *g.regular_degree();

    ExactMatrix u = grover(g);
    auto lhs = charpoly_exact(positive_support(u * u));
    const ExactMatrix adj = g.adjacency();
    ExactMatrix a2 = adj * adj;
    ExactMatrix id = ExactMatrix::identity(n);
    // (x+k-2)^2 I - (x-1) A^2 = x^2 I + x(2(k-2)I - A^2) + ((k-2)^2 I + A^2)
    ExactMatrix y = GaussianRational(2 * (k - 2)) * id - a2;
    ExactMatrix z = GaussianRational((k - 2) * (k - 2)) * id + a2;
    Polynomial<GaussianRational> factor({GaussianRational(-2), GaussianRational(1)});
    auto rhs = factor.pow(static_cast<unsigned>(2 * (m - n))) * det_quadratic_pencil(id, y, z);
    rep.witness = detail::compare_polys(lhs, rhs);
    rep.verdict = rep.witness ? Verdict::fails : Verdict::holds;

    auto lam_a = symmetric_eigenvalues(to_float(adj));
    for (double la : lam_a) {
        double r = k - 1.0 - la * la / 4.0;
        if (std::abs(r) < 1e-12)
            r = 0.0;
        double x = (la * la - 2.0 * k + 4.0) / 2.0;
        if (r >= 0.0) {
            out.eigenvalues.emplace_back(x, la * std::sqrt(r));
            out.eigenvalues.emplace_back(x, -la * std::sqrt(r));
        } else {
            out.eigenvalues.emplace_back(x + la * std::sqrt(-r), 0.0);
            out.eigenvalues.emplace_back(x - la * std::sqrt(-r), 0.0);
        }
    }
    for (int c = 0; c < 2 * (m - n); ++c)
        out.eigenvalues.emplace_back(2.0, 0.0);
    detail::sort_spectrum(out.eigenvalues);

    double worst = 0.0;
    for (const auto& ev : out.eigenvalues)
        worst = std::max(worst, detail::certified_residual(lhs, ev));
    rep.detail("max-residual", detail::format_double(worst));
    if (worst > tol && rep.verdict == Verdict::holds) {
        rep.verdict = Verdict::fails;
        rep.witness = Witness{"closed-form eigenvalue residual exceeds tolerance", -1,
                              detail::format_double(worst), detail::format_double(tol)};
    }
    rep.detail("mult-2", std::to_string(root_multiplicity(lhs, GaussianRational(2))));
    rep.detail("factor-exponent", std::to_string(2 * (m - n)));
    rep.elapsed_ms = clock.ms();
    return out;
}

// Eq. (24): (U^2)+ = (U+)^2 + I. The verdict reflects the support-level
// comparison; whether the identity holds verbatim (no clamping needed on
// the right) is recorded separately.
inline VerificationReport verify_eq24(const Graph& g) {
    detail::Stopwatch clock;
    VerificationReport rep;
    rep.theorem = "eq24";
    rep.graph = summarize(g);
    if (!detail::regular_precondition(rep, g, 2)) {
        rep.elapsed_ms = clock.ms();
        return rep;
    }
    ExactMatrix u = grover(g);
    ExactMatrix lhs = positive_support(u * u);
    ExactMatrix up = positive_support(u);
    ExactMatrix rhs = up * up + ExactMatrix::identity(up.rows());
    bool verbatim = lhs == rhs;
    rep.detail("verbatim", verbatim ? "true" : "false");
    rep.witness = detail::compare_matrices(lhs, positive_support(rhs));
    rep.verdict = rep.witness ? Verdict::fails : Verdict::holds;
    if (rep.verdict == Verdict::fails && !verbatim)
        rep.witness = detail::compare_matrices(lhs, rhs);
    rep.elapsed_ms = clock.ms();
    return rep;
}

// Theorem 2: (U^3)+ = (U+)^3 + transpose(U+) for connected k-regular
// graphs, k >= 3, girth >= 5.
inline VerificationReport verify_theorem2(const Graph& g) {
    detail::Stopwatch clock;
    VerificationReport rep;
    rep.theorem = "thm2";
    rep.graph = summarize(g);
    if (!detail::regular_precondition(rep, g, 3)) {
        rep.elapsed_ms = clock.ms();
        return rep;
    }
    auto gv = girth(g);
    if (!gv || *gv < 5) {
        rep.verdict = Verdict::precondition_violated;
        rep.detail("reason", gv ? "girth " + std::to_string(*gv) + " is below 5"
                                : "graph is acyclic");
        rep.elapsed_ms = clock.ms();
        return rep;
    }
    ExactMatrix u = grover(g);
    ExactMatrix lhs = positive_support(u.pow(3));
    ExactMatrix up = positive_support(u);
    ExactMatrix rhs = up.pow(3) + up.transpose();
    rep.witness = detail::compare_matrices(lhs, rhs);
    rep.verdict = rep.witness ? Verdict::fails : Verdict::holds;
    rep.elapsed_ms = clock.ms();
    return rep;
}

// Eight-term expansion of B^3 = (Q+P)^3 with Q = B - P, plus the proof's
// structural claims on k-regular girth >= 5 graphs: Q^3 is 0/1, Q^3 and
// PQP have disjoint supports, and the backtracking contributions to U^3
// cancel exactly on adjacent non-inverse arc pairs.
inline VerificationReport backtracking_decomposition(const Graph& g) {
    detail::Stopwatch clock;
    VerificationReport rep;
    rep.theorem = "decomp";
    rep.graph = summarize(g);
    if (g.vertex_count() == 0 || g.min_degree() < 2) {
        rep.verdict = Verdict::precondition_violated;
        rep.detail("reason", "minimum degree below 2");
        rep.elapsed_ms = clock.ms();
        return rep;
    }
    ExactMatrix b = edge_matrix_B(g);
    ExactMatrix p = shift_P(g);
    ExactMatrix q = b - p;
    ExactMatrix lhs = b.pow(3);
    ExactMatrix qq = q * q, qp = q * p, pq = p * q, pp = p * p;
    ExactMatrix rhs = qq * q + qq * p + qp * q + pq * q + qp * p + pp * q + pq * p + pp * p;
    rep.witness = detail::compare_matrices(lhs, rhs);
    rep.verdict = rep.witness ? Verdict::fails : Verdict::holds;
    rep.detail("expansion", rep.witness ? "fails" : "holds");

    auto k = g.regular_degree();
    auto gv = girth(g);
    if (k && gv && *gv >= 5) {
        ExactMatrix q3 = qq * q;
        bool zero_one = true;
        for (std::size_t i = 0; i < q3.rows() && zero_one; ++i)
            for (std::size_t j = 0; j < q3.cols() && zero_one; ++j)
                zero_one = q3(i, j) == GaussianRational(0) || q3(i, j) == GaussianRational(1);
        rep.detail("q3-entries-01", zero_one ? "true" : "false");

        ExactMatrix pqp = pq * p;
        bool disjoint = true;
        for (std::size_t i = 0; i < q3.rows() && disjoint; ++i)
            for (std::size_t j = 0; j < q3.cols() && disjoint; ++j)
                disjoint = q3(i, j).is_zero() || pqp(i, j).is_zero();
        rep.detail("q3-pqp-disjoint", disjoint ? "true" : "false");

        BigRational c(2, *k);
        GaussianRational cancel{c * (c - 1) * c * (*k - 2) + BigRational(2) * c * (c - 1) * (c - 1)};
        ExactMatrix u3 = grover(g).pow(3);
        bool cancels = true;
        for (int e = 0; e < g.arc_count() && cancels; ++e)
            for (int f = 0; f < g.arc_count() && cancels; ++f) {
                if (g.terminus(e) != g.origin(f) || f == g.inverse(e))
                    continue;
                cancels = u3(f, e) == cancel;
            }
        rep.detail("cancellation", cancels ? "holds" : "fails");
        rep.detail("cancellation-value", format_gaussian(cancel));
        if (!(zero_one && disjoint && cancels))
            rep.verdict = Verdict::fails;
    }
    rep.elapsed_ms = clock.ms();
    return rep;
}

// Number of (e,f)-paths with `len` arcs and exactly `backtracks` junctions
// stepping onto the inverse arc; plain depth-first enumeration, the oracle
// side of the Figure-1 case matrices.
inline long count_backtracking_paths(const Graph& g, int e, int f, int len, int backtracks) {
    if (len < 1 || len > 4)
        throw PreconditionError("path length must be between 1 and 4");
    g.origin(e);
    g.origin(f);
    long count = 0;
    struct Frame {
        int arc;
        int depth;
        int bt;
    };
    std::vector<Frame> stack{{e, 1, 0}};
    while (!stack.empty()) {
        Frame fr = stack.back();
        stack.pop_back();
        if (fr.depth == len) {
            if (fr.arc == f && fr.bt == backtracks)
                ++count;
            continue;
        }
        for (int a : g.out_arcs(g.terminus(fr.arc)))
            stack.push_back({a, fr.depth + 1, fr.bt + (a == g.inverse(fr.arc) ? 1 : 0)});
    }
    return count;
}

} // namespace qwspectra
