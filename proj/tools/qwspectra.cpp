// Command-line front end: build walk matrices, verify the determinant and
// support identities, list closed-form spectra, and compare graphs for
// exact isospectrality.
//
// Exit codes: 0 holds / isospectral / success, 1 not isospectral, 2 an
// identity fails, 3 precondition violated, 64 usage, 65 unreadable or
// malformed input, 70 internal error.

#include <CLI11.hpp>

#include <qwspectra/json_io.hpp>
#include <qwspectra/qwspectra.hpp>

#include <algorithm>
#include <complex>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace fs = std::filesystem;
using namespace qwspectra;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_not_isospectral = 1;
constexpr int exit_fails = 2;
constexpr int exit_precondition = 3;
constexpr int exit_usage = 64;
constexpr int exit_data = 65;
constexpr int exit_internal = 70;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class FileFormat { by_extension, edge_list, graph6 };

FileFormat parse_format(const std::string& s) {
    if (s.empty() || s == "auto")
        return FileFormat::by_extension;
    if (s == "edge-list")
        return FileFormat::edge_list;
    if (s == "graph6")
        return FileFormat::graph6;
    throw UsageError("unknown format '" + s + "' (edge-list|graph6)");
}

bool looks_graph6(const std::string& path, FileFormat fmt) {
    if (fmt == FileFormat::edge_list)
        return false;
    if (fmt == FileFormat::graph6)
        return true;
    return path.size() >= 3 && path.compare(path.size() - 3, 3, ".g6") == 0;
}

Graph load_one(const std::string& path, FileFormat fmt) {
    std::string text = read_text_file(path);
    if (looks_graph6(path, fmt)) {
        auto graphs = parse_graph6_file(text);
        if (graphs.empty())
            throw TruncatedError("graph6: no graphs in '" + path + "'");
        return graphs.front();
    }
    return parse_edge_list(text);
}

struct NamedGraph {
    std::string label;
    Graph graph;
};

// Files contribute one graph (edge list) or one per line (graph6);
// directories contribute their .el and .g6 entries in name order.
std::vector<NamedGraph> load_many(const std::vector<std::string>& paths, FileFormat fmt) {
    std::vector<std::string> files;
    for (const auto& p : paths) {
        if (fs::is_directory(p)) {
            std::vector<std::string> inner;
            for (const auto& ent : fs::directory_iterator(p)) {
                auto ext = ent.path().extension().string();
                if (ent.is_regular_file() && (ext == ".g6" || ext == ".el"))
                    inner.push_back(ent.path().string());
            }
            std::sort(inner.begin(), inner.end());
            files.insert(files.end(), inner.begin(), inner.end());
        } else {
            files.push_back(p);
        }
    }
    std::vector<NamedGraph> out;
    for (const auto& f : files) {
        std::string text = read_text_file(f);
        if (looks_graph6(f, fmt)) {
            auto graphs = parse_graph6_file(text);
            for (std::size_t i = 0; i < graphs.size(); ++i) {
                std::string label = f;
                if (graphs.size() > 1)
                    label += "#" + std::to_string(i);
                out.push_back({std::move(label), std::move(graphs[i])});
            }
        } else {
            out.push_back({f, parse_edge_list(text)});
        }
    }
    return out;
}

void write_output(const std::string& out_path, const std::string& text) {
    if (out_path.empty()) {
        std::fputs(text.c_str(), stdout);
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f)
        throw Error("cannot open '" + out_path + "' for writing");
    f << text;
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string q = "\"";
    for (char c : s) {
        if (c == '"')
            q += '"';
        q += c;
    }
    q += '"';
    return q;
}

int verdict_exit(Verdict v) {
    switch (v) {
    case Verdict::holds: return exit_ok;
    case Verdict::fails: return exit_fails;
    case Verdict::precondition_violated: return exit_precondition;
    }
    return exit_internal;
}

struct Options {
    std::string graph_path;
    std::string format = "auto";
    std::string matrix;
    std::string weights_path;
    std::string prob_path;
    std::string s_value = "2";
    std::string mode = "auto";
    std::string theorem;
    std::string out_path;
    std::string emit = "json";
    double tol = 1e-8;
    bool with_fingerprints = false;
    std::vector<std::string> inputs;
};

WeightAssignment load_weights(const Graph& g, const std::string& path) {
    if (path.empty())
        return WeightAssignment::unit(g);
    return weights_from_json(g, json::parse(read_text_file(path)));
}

TransitionProbability load_prob(const Graph& g, const std::string& path) {
    if (path.empty())
        return TransitionProbability::simple_walk(g);
    return probability_from_json(g, json::parse(read_text_file(path)));
}

VerifyMode parse_mode(const std::string& s) {
    if (s == "auto")
        return VerifyMode::auto_select;
    if (s == "exact")
        return VerifyMode::exact;
    if (s == "float")
        return VerifyMode::floating;
    throw UsageError("unknown mode '" + s + "' (exact|float)");
}

json built_matrix_json(const Graph& g, const Options& opt) {
    bool exact = opt.mode != "float";
    if (opt.matrix == "u") {
        ExactMatrix u =
            matrix_U(g, load_weights(g, opt.weights_path), parse_rational(opt.s_value));
        return exact ? matrix_to_json(u) : matrix_to_json(to_float(u));
    }
    auto kind = parse_matrix_kind(opt.matrix);
    if (!kind)
        throw UsageError("unknown matrix kind '" + opt.matrix + "'");
    if (*kind == MatrixKind::szegedy) {
        if (opt.prob_path.empty())
            throw UsageError("--matrix szegedy needs --prob");
        if (!exact)
            return matrix_to_json(szegedy_float(g, load_prob(g, opt.prob_path)));
        return matrix_to_json(szegedy(g, load_prob(g, opt.prob_path)));
    }
    ExactMatrix m = build_kind_matrix(g, *kind);
    return exact ? matrix_to_json(m) : matrix_to_json(to_float(m));
}

int cmd_build(const Options& opt) {
    Graph g = load_one(opt.graph_path, parse_format(opt.format));
    json j;
    j["graph"] = graph_summary_to_json(summarize(g));
    j["arcs"] = arc_legend_to_json(g);
    j["matrix"] = built_matrix_json(g, opt);

    if (opt.emit == "csv") {
        std::string text;
        const json& rows = j["matrix"]["entries"];
        for (const auto& row : rows) {
            for (std::size_t k = 0; k < row.size(); ++k) {
                if (k)
                    text += ',';
                const json& cell = row[k];
                if (cell.is_string())
                    text += csv_escape(cell.get<std::string>());
                else
                    text += cell.dump();
            }
            text += '\n';
        }
        write_output(opt.out_path, text);
    } else {
        write_output(opt.out_path, j.dump(2) + "\n");
    }
    return exit_ok;
}

int emit_report(const Options& opt, const VerificationReport& rep) {
    if (opt.emit == "csv") {
        std::string text = "theorem,verdict,mode,elapsed_ms\n";
        text += rep.theorem + "," + verdict_name(rep.verdict) + "," + rep.mode + "," +
                std::to_string(rep.elapsed_ms) + "\n";
        write_output(opt.out_path, text);
    } else {
        write_output(opt.out_path, report_to_json(rep).dump(2) + "\n");
    }
    return verdict_exit(rep.verdict);
}

int cmd_verify(const Options& opt) {
    Graph g = load_one(opt.graph_path, parse_format(opt.format));
    const std::string& id = opt.theorem;
    VerifyMode mode = parse_mode(opt.mode);

    if (id == "thm1")
        return emit_report(opt, verify_theorem1(g, load_weights(g, opt.weights_path),
                                                parse_rational(opt.s_value)));
    if (id == "cor21")
        return emit_report(opt, verify_cor21(g, load_prob(g, opt.prob_path), mode, opt.tol));
    if (id == "cor22")
        return emit_report(opt, verify_cor22(g, load_prob(g, opt.prob_path), mode, opt.tol));
    if (id == "cor23")
        return emit_report(opt, spectrum_u_plus(g, opt.tol).report);
    if (id == "thm3")
        return emit_report(opt, spectrum_u2_plus(g, opt.tol).report);
    if (id == "eq24")
        return emit_report(opt, verify_eq24(g));
    if (id == "thm2")
        return emit_report(opt, verify_theorem2(g));
    if (id == "decomp")
        return emit_report(opt, backtracking_decomposition(g));
    throw UsageError("unknown theorem '" + id +
                     "' (thm1|cor21|cor22|cor23|thm3|eq24|thm2|decomp)");
}

int cmd_spectrum(const Options& opt) {
    Graph g = load_one(opt.graph_path, parse_format(opt.format));
    auto kind = parse_matrix_kind(opt.matrix.empty() ? "adjacency" : opt.matrix);
    if (!kind || (*kind != MatrixKind::adjacency && *kind != MatrixKind::u_plus &&
                  *kind != MatrixKind::u2_plus))
        throw UsageError("spectrum supports --matrix adjacency|u-plus|u2-plus");

    std::vector<std::complex<double>> eigenvalues;
    std::optional<VerificationReport> report;
    if (*kind == MatrixKind::adjacency) {
        auto vals = symmetric_eigenvalues(to_float(g.adjacency()));
        for (double v : vals)
            eigenvalues.emplace_back(v, 0.0);
    } else {
        auto out = *kind == MatrixKind::u_plus ? spectrum_u_plus(g, opt.tol)
                                               : spectrum_u2_plus(g, opt.tol);
        report = out.report;
        eigenvalues = std::move(out.eigenvalues);
        if (report->verdict == Verdict::precondition_violated)
            throw PreconditionError(report->detail("reason"));
    }
    std::sort(eigenvalues.begin(), eigenvalues.end(), [](const auto& a, const auto& b) {
        if (a.real() != b.real())
            return a.real() < b.real();
        return a.imag() < b.imag();
    });

    auto p = charpoly_exact(build_kind_matrix(g, *kind));
    std::vector<double> residuals;
    double worst = 0.0;
    for (const auto& ev : eigenvalues) {
        residuals.push_back(detail::certified_residual(p, ev));
        worst = std::max(worst, residuals.back());
    }

    json j;
    j["kind"] = matrix_kind_name(*kind);
    j["graph"] = graph_summary_to_json(summarize(g));
    j["eigenvalues"] = spectrum_to_json(eigenvalues, residuals);
    j["max-residual"] = worst;
    if (report)
        j["report"] = report_to_json(*report);

    if (opt.emit == "csv") {
        std::string text = "re,im,residual\n";
        for (std::size_t i = 0; i < eigenvalues.size(); ++i) {
            text += detail::format_double(eigenvalues[i].real()) + "," +
                    detail::format_double(eigenvalues[i].imag()) + "," +
                    detail::format_double(residuals[i]) + "\n";
        }
        write_output(opt.out_path, text);
    } else {
        write_output(opt.out_path, j.dump(2) + "\n");
    }
    if (report && report->verdict != Verdict::holds)
        return verdict_exit(report->verdict);
    return worst <= opt.tol ? exit_ok : exit_fails;
}

int cmd_isospec(const Options& opt) {
    auto kind = parse_matrix_kind(opt.matrix.empty() ? "adjacency" : opt.matrix);
    if (!kind)
        throw UsageError("unknown matrix kind '" + opt.matrix + "'");
    auto graphs = load_many(opt.inputs, parse_format(opt.format));
    if (graphs.size() < 2)
        throw UsageError("isospec needs at least two graphs");

    std::vector<Graph> gs;
    gs.reserve(graphs.size());
    for (auto& ng : graphs)
        gs.push_back(ng.graph);
    auto rep = batch_compare(gs, *kind);
    bool isospectral = rep.skipped.empty() && rep.classes.size() == 1;

    json j = batch_report_to_json(rep, opt.with_fingerprints);
    json labels = json::array();
    for (const auto& ng : graphs)
        labels.push_back(ng.label);
    j["graphs"] = std::move(labels);
    j["isospectral"] = isospectral;

    if (opt.emit == "csv") {
        std::string text = "index,graph,class,note\n";
        std::vector<std::string> cls(graphs.size()), note(graphs.size());
        for (std::size_t c = 0; c < rep.classes.size(); ++c)
            for (std::size_t idx : rep.classes[c])
                cls[idx] = std::to_string(c);
        for (const auto& [idx, reason] : rep.skipped)
            note[idx] = reason;
        for (std::size_t i = 0; i < graphs.size(); ++i)
            text += std::to_string(i) + "," + csv_escape(graphs[i].label) + "," + cls[i] +
                    "," + csv_escape(note[i]) + "\n";
        write_output(opt.out_path, text);
    } else {
        write_output(opt.out_path, j.dump(2) + "\n");
    }
    if (!rep.skipped.empty())
        return exit_precondition;
    return isospectral ? exit_ok : exit_not_isospectral;
}

} // namespace

int main(int argc, char** argv) {
    Options opt;
    CLI::App app{"quantum walk spectra toolkit"};
    app.require_subcommand(1);

    auto add_common = [&](CLI::App* sub, bool graph_required) {
        if (graph_required)
            sub->add_option("--graph", opt.graph_path, "graph file (.el or .g6)")->required();
        sub->add_option("--format", opt.format, "input format: edge-list|graph6 (default: by extension)");
        sub->add_option("--out", opt.out_path, "write output here instead of stdout");
        sub->add_option("--emit", opt.emit, "output form")
            ->check(CLI::IsMember({"json", "csv"}));
    };

    CLI::App* build = app.add_subcommand("build", "construct a walk matrix");
    add_common(build, true);
    build->add_option("--matrix", opt.matrix, "matrix kind, or 'u' for the weighted walk")
        ->required();
    build->add_option("--weights", opt.weights_path, "weight JSON (for --matrix u)");
    build->add_option("--prob", opt.prob_path, "transition probability JSON");
    build->add_option("--s", opt.s_value, "s parameter for --matrix u (rational)");
    build->add_option("--mode", opt.mode, "exact|float entries");

    CLI::App* verify = app.add_subcommand("verify", "check one of the walk spectral identities");
    verify->add_option("theorem", opt.theorem,
                       "thm1|cor21|cor22|cor23|thm3|eq24|thm2|decomp")
        ->required();
    add_common(verify, true);
    verify->add_option("--weights", opt.weights_path, "weight JSON (thm1)");
    verify->add_option("--s", opt.s_value, "s parameter (thm1, rational)");
    verify->add_option("--prob", opt.prob_path, "transition probability JSON (cor21/cor22)");
    verify->add_option("--mode", opt.mode, "auto|exact|float (cor21/cor22)");
    verify->add_option("--tol", opt.tol, "float-mode tolerance");

    CLI::App* spectrum = app.add_subcommand("spectrum", "list eigenvalues with exact residuals");
    add_common(spectrum, true);
    spectrum->add_option("--matrix", opt.matrix, "adjacency|u-plus|u2-plus");
    spectrum->add_option("--tol", opt.tol, "residual tolerance");

    CLI::App* isospec = app.add_subcommand("isospec", "compare graphs by exact fingerprints");
    add_common(isospec, false);
    isospec->add_option("--matrix", opt.matrix, "matrix kind (default adjacency)");
    isospec->add_flag("--fingerprints", opt.with_fingerprints, "include fingerprints in JSON");
    isospec->add_option("graphs", opt.inputs, "graph files or directories")->expected(-1);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    try {
        if (build->parsed())
            return cmd_build(opt);
        if (verify->parsed())
            return cmd_verify(opt);
        if (spectrum->parsed())
            return cmd_spectrum(opt);
        return cmd_isospec(opt);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return exit_usage;
    } catch (const PreconditionError& e) {
        std::cerr << "precondition violated: " << e.what() << "\n";
        return exit_precondition;
    } catch (const IrrationalWeightError& e) {
        std::cerr << "exact mode impossible: " << e.what()
                  << " (rerun with --mode float)\n";
        return exit_precondition;
    } catch (const json::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return exit_data;
    } catch (const Error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return exit_data;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return exit_internal;
    }
}
