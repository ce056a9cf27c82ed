#pragma once

#include <complex>
#include <string>
#include <vector>

#include <json.hpp>

#include "graph.hpp"
#include "isospec.hpp"
#include "theorems.hpp"
#include "walk_matrices.hpp"

namespace qwspectra {

using json = nlohmann::json;

// Real values serialize as "p/q" strings; nonreal ones as {"re","im"}.
inline json gaussian_to_json(const GaussianRational& z) {
    if (z.is_real())
        return format_rational(z.real());
    return json{{"re", format_rational(z.real())}, {"im", format_rational(z.imag())}};
}

inline GaussianRational gaussian_from_json(const json& j) {
    if (j.is_string())
        return parse_gaussian(j.get<std::string>());
    if (j.is_number_integer())
        return GaussianRational(BigRational(j.get<long long>()));
    if (j.is_object()) {
        BigRational re = j.contains("re") ? parse_rational(j["re"].get<std::string>()) : BigRational(0);
        BigRational im = j.contains("im") ? parse_rational(j["im"].get<std::string>()) : BigRational(0);
        return {re, im};
    }
    throw ParseError("expected \"p/q\", an integer, or {\"re\",\"im\"}");
}

inline json graph_summary_to_json(const GraphSummary& s) {
    json j;
    j["n"] = s.n;
    j["m"] = s.m;
    j["k"] = s.k ? json(*s.k) : json(nullptr);
    j["girth"] = s.girth ? json(*s.girth) : json(nullptr);
    return j;
}

inline json witness_to_json(const Witness& w) {
    json j;
    j["description"] = w.description;
    j["index"] = w.index;
    j["lhs"] = w.lhs;
    j["rhs"] = w.rhs;
    return j;
}

inline json report_to_json(const VerificationReport& r) {
    json j;
    j["theorem"] = r.theorem;
    j["graph"] = graph_summary_to_json(r.graph);
    j["mode"] = r.mode;
    j["verdict"] = verdict_name(r.verdict);
    j["witness"] = r.witness ? witness_to_json(*r.witness) : json(nullptr);
    if (!r.details.empty()) {
        json d = json::object();
        for (const auto& [k, v] : r.details)
            d[k] = v;
        j["details"] = d;
    }
    j["elapsed_ms"] = r.elapsed_ms;
    return j;
}

inline json arc_legend_to_json(const Graph& g) {
    json legend = json::array();
    for (int a = 0; a < g.arc_count(); ++a) {
        json row;
        row["arc"] = a;
        row["origin"] = g.origin(a);
        row["terminus"] = g.terminus(a);
        row["inverse"] = g.inverse(a);
        legend.push_back(std::move(row));
    }
    return legend;
}

inline json matrix_to_json(const ExactMatrix& m) {
    json j;
    j["mode"] = "exact";
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t k = 0; k < m.cols(); ++k)
            row.push_back(gaussian_to_json(m(i, k)));
        rows.push_back(std::move(row));
    }
    j["entries"] = std::move(rows);
    return j;
}

inline json matrix_to_json(const FloatMatrix& m) {
    json j;
    j["mode"] = "float";
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t k = 0; k < m.cols(); ++k) {
            const auto& z = m(i, k);
            if (z.imag() == 0.0)
                row.push_back(z.real());
            else
                row.push_back(json{{"re", z.real()}, {"im", z.imag()}});
        }
        rows.push_back(std::move(row));
    }
    j["entries"] = std::move(rows);
    return j;
}

inline ExactMatrix exact_matrix_from_json(const json& j) {
    if (!j.contains("entries") || !j["entries"].is_array())
        throw ParseError("matrix JSON: missing entries array");
    const json& rows = j["entries"];
    std::size_t r = rows.size();
    std::size_t c = r ? rows[0].size() : 0;
    ExactMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (!rows[i].is_array() || rows[i].size() != c)
            throw ParseError("matrix JSON: ragged entries");
        for (std::size_t k = 0; k < c; ++k)
            m(i, k) = gaussian_from_json(rows[i][k]);
    }
    return m;
}

namespace detail {

inline const json& value_array(const json& j, const char* what) {
    if (j.is_array())
        return j;
    if (j.contains("values") && j["values"].is_array())
        return j["values"];
    throw ParseError(std::string(what) + " JSON: expected an array or a 'values' array");
}

} // namespace detail

// Array of 2m Gaussian rationals indexed by arc (bare or under "values").
inline WeightAssignment weights_from_json(const Graph& g, const json& j) {
    const json& arr = detail::value_array(j, "weights");
    if (static_cast<int>(arr.size()) != g.arc_count())
        throw ParseError("weights JSON: got " + std::to_string(arr.size()) +
                         " values for " + std::to_string(g.arc_count()) + " arcs");
    std::vector<GaussianRational> w;
    w.reserve(arr.size());
    for (const auto& v : arr)
        w.push_back(gaussian_from_json(v));
    return WeightAssignment(g, std::move(w));
}

inline TransitionProbability probability_from_json(const Graph& g, const json& j) {
    const json& arr = detail::value_array(j, "probability");
    if (static_cast<int>(arr.size()) != g.arc_count())
        throw ParseError("probability JSON: got " + std::to_string(arr.size()) +
                         " values for " + std::to_string(g.arc_count()) + " arcs");
    std::vector<BigRational> p;
    p.reserve(arr.size());
    for (const auto& v : arr) {
        GaussianRational z = gaussian_from_json(v);
        if (!z.is_real())
            throw ParseError("probability JSON: entries must be real");
        p.push_back(z.real());
    }
    return TransitionProbability(g, std::move(p));
}

inline json fingerprint_to_json(const Fingerprint& fp) {
    json j;
    j["kind"] = matrix_kind_name(fp.kind);
    j["coeffs"] = fp.coeffs;
    j["graph"] = graph_summary_to_json(fp.graph);
    j["hash"] = fp.hash;
    return j;
}

inline json batch_report_to_json(const BatchReport& rep, bool include_fingerprints = false) {
    json j;
    j["kind"] = matrix_kind_name(rep.kind);
    json classes = json::array();
    for (const auto& cls : rep.classes)
        classes.push_back(cls);
    j["classes"] = std::move(classes);
    json skipped = json::array();
    for (const auto& [idx, reason] : rep.skipped)
        skipped.push_back(json{{"index", idx}, {"reason", reason}});
    j["skipped"] = std::move(skipped);
    if (include_fingerprints) {
        json fps = json::array();
        for (std::size_t f = 0; f < rep.fingerprints.size(); ++f) {
            json e = fingerprint_to_json(rep.fingerprints[f]);
            e["index"] = rep.fingerprint_index[f];
            fps.push_back(std::move(e));
        }
        j["fingerprints"] = std::move(fps);
    }
    return j;
}

inline json spectrum_to_json(const std::vector<std::complex<double>>& eigenvalues,
                             const std::vector<double>& residuals) {
    json arr = json::array();
    for (std::size_t i = 0; i < eigenvalues.size(); ++i) {
        json e;
        e["re"] = eigenvalues[i].real();
        e["im"] = eigenvalues[i].imag();
        if (i < residuals.size())
            e["residual"] = residuals[i];
        arr.push_back(std::move(e));
    }
    return arr;
}

} // namespace qwspectra
