#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "sccol/colourings.hpp"
#include "sccol/derived_graphs.hpp"
#include "sccol/io.hpp"
#include "sccol/partitions.hpp"
#include "sccol/reductions.hpp"
#include "sccol/sullivan.hpp"

namespace {

constexpr int kExitOk = 0;       // success / affirmative
constexpr int kExitNegative = 1; // well-formed negative answer
constexpr int kExitError = 2;    // input or usage error

using sccol::Json;

void print_json(const Json& j) {
    std::cout << j.dump(2) << "\n";
}

sccol::ColourScheme scheme_from_options(std::string text, std::optional<int> s_opt) {
    if (s_opt && text.find(':') == std::string::npos)
        text += ":" + std::to_string(*s_opt);
    return sccol::ColourScheme::parse(text);
}

sccol::DerivedKind kind_from_options(const std::string& kind, std::optional<int> dim) {
    auto fixed = [&](sccol::DerivedKind k) {
        if (dim)
            sccol::fail(sccol::Errc::ParseError, "kind '" + kind + "' takes no --dim");
        return k;
    };
    auto levelled = [&](bool ascending) {
        if (!dim)
            sccol::fail(sccol::Errc::ParseError, "kind '" + kind + "' needs --dim");
        return ascending ? sccol::DerivedKind::exchange(*dim)
                         : sccol::DerivedKind::descending(*dim);
    };
    if (kind == "two-section") return fixed(sccol::DerivedKind::two_section());
    if (kind == "line") return fixed(sccol::DerivedKind::line());
    if (kind == "total") return fixed(sccol::DerivedKind::total());
    if (kind == "inclusion") return fixed(sccol::DerivedKind::inclusion());
    if (kind == "full") return fixed(sccol::DerivedKind::full());
    if (kind == "complete-asc") return fixed(sccol::DerivedKind::complete_asc());
    if (kind == "complete-desc") return fixed(sccol::DerivedKind::complete_desc());
    if (kind == "cart-asc") return fixed(sccol::DerivedKind::cart_asc());
    if (kind == "cart-desc") return fixed(sccol::DerivedKind::cart_desc());
    if (kind == "exchange") return levelled(true);
    if (kind == "descending") return levelled(false);
    sccol::fail(sccol::Errc::ParseError, "unknown graph kind '" + kind + "'");
}

int run_info(const std::string& file) {
    const auto x = sccol::read_complex_file(file);
    Json counts = Json::array();
    for (int r = 0; r <= x.dim(); ++r)
        counts.push_back(x.faces_of_dim(r).size());
    const auto h = x.homogeneity();
    print_json(Json{{"connected", x.is_connected()},
                    {"dimension", x.dim()},
                    {"face_counts", counts},
                    {"faces", x.faces().size()},
                    {"pure", h.pure},
                    {"strongly_connected", x.is_strongly_connected()},
                    {"vertex_homogeneous", h.vertex_homogeneous},
                    {"vertices", x.vertices().size()}});
    return kExitOk;
}

int run_graph(const std::string& file, const std::string& kind, std::optional<int> dim,
              const std::string& format) {
    const auto x = sccol::read_complex_file(file);
    const auto g = sccol::derive(x, kind_from_options(kind, dim));
    if (format == "dot")
        std::cout << sccol::graph_to_dot(g);
    else if (format == "matrix")
        std::cout << sccol::graph_to_adjacency_text(g);
    else
        print_json(sccol::graph_to_json(g));
    return kExitOk;
}

int run_colour(const std::string& file, const std::string& scheme_text, int k,
               std::optional<int> s_opt, bool theorem_backed) {
    const auto x = sccol::read_complex_file(file);
    const auto scheme = scheme_from_options(scheme_text, s_opt);
    const auto mode =
        theorem_backed ? sccol::SolveMode::TheoremBacked : sccol::SolveMode::Plain;
    if (auto a = sccol::colour(x, scheme, k, mode)) {
        print_json(sccol::assignment_to_json(*a));
        return kExitOk;
    }
    std::cout << "none\n";
    return kExitNegative;
}

int run_chromatic(const std::string& file, const std::string& scheme_text,
                  std::optional<int> s_opt, bool theorem_backed) {
    const auto x = sccol::read_complex_file(file);
    const auto scheme = scheme_from_options(scheme_text, s_opt);
    const auto mode =
        theorem_backed ? sccol::SolveMode::TheoremBacked : sccol::SolveMode::Plain;
    std::cout << sccol::chromatic(x, scheme, mode) << "\n";
    return kExitOk;
}

int run_check(const std::string& file, const std::string& scheme_text,
              std::optional<int> s_opt, const std::string& assignment_file,
              bool strict_total) {
    const auto x = sccol::read_complex_file(file);
    const auto scheme = scheme_from_options(scheme_text, s_opt);
    const auto a = sccol::read_assignment_file(assignment_file);
    const auto rule = strict_total ? sccol::TotalRule::AllPairs : sccol::TotalRule::Incidence;
    if (sccol::check(x, scheme, a, rule)) {
        std::cout << "valid\n";
        return kExitOk;
    }
    std::cout << "invalid\n";
    return kExitNegative;
}

int run_model(const std::string& file, const std::string& scheme_text, int k,
              std::optional<int> s_opt, const std::string& format) {
    const auto x = sccol::read_complex_file(file);
    const auto scheme = scheme_from_options(scheme_text, s_opt);
    const auto model = sccol::model_for_scheme(x, scheme, k);
    if (format == "text")
        std::cout << sccol::model_to_text(model);
    else
        print_json(sccol::model_to_json(model));
    return kExitOk;
}

int run_verdict(const std::string& file, const std::string& scheme_text, int k,
                std::optional<int> s_opt) {
    const auto x = sccol::read_complex_file(file);
    const auto scheme = scheme_from_options(scheme_text, s_opt);
    const auto v = sccol::ellipticity_verdict(x, scheme, k);
    Json out{{"justification", v.justification},
             {"k", k},
             {"scheme", scheme.name()},
             {"verdict", v.verdict == sccol::Verdict::Elliptic ? "Elliptic" : "NonElliptic"}};
    if (v.witness)
        out["witness"] = sccol::assignment_to_json(*v.witness);
    print_json(out);
    return v.verdict == sccol::Verdict::Elliptic ? kExitNegative : kExitOk;
}

int run_reduce(const std::string& gfile, const std::string& lemma_text, int k) {
    const auto g = sccol::read_graph_file(gfile);
    const auto lemma = sccol::parse_lemma(lemma_text);
    const auto x = sccol::graph_to_complex(g);
    const auto report = sccol::reduction_size_report(lemma, g);
    const auto target = sccol::lemma_target_scheme(lemma);

    Json out{{"complex", sccol::complex_to_json(x)},
             {"lemma", sccol::lemma_name(lemma)},
             {"size_report",
              Json{{"complex_faces", report.complex_faces},
                   {"graph_bits", report.graph_bits},
                   {"ratio", report.ratio}}},
             {"source_k", k},
             {"target_k", sccol::lemma_target_k(lemma, k)},
             {"target_scheme", target.name()}};

    std::optional<sccol::GraphColouring> source;
    switch (lemma) {
    case sccol::LemmaId::C1:
    case sccol::LemmaId::C4:
    case sccol::LemmaId::C7:
    case sccol::LemmaId::C8C10:
        source = sccol::is_k_colourable(g, k);
        break;
    case sccol::LemmaId::C5:
    case sccol::LemmaId::C9C11:
        source = sccol::edge_colouring(g, k);
        break;
    case sccol::LemmaId::C6:
        source = sccol::total_colouring(g, k);
        break;
    }
    out["source_colourable"] = source.has_value();
    if (source) {
        const auto forward = sccol::translate_forward(lemma, g, *source);
        const auto back = sccol::translate_backward(lemma, g, forward);
        out["source_colouring"] = sccol::colouring_to_json(*source);
        out["translated_assignment"] = sccol::assignment_to_json(forward);
        out["roundtrip_colouring"] = sccol::colouring_to_json(back);
    }
    print_json(out);
    return source ? kExitOk : kExitNegative;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"colouring toolkit for finite simplicial complexes"};
    app.require_subcommand(1);

    std::string file, scheme, assignment_file, lemma;
    std::string kind, format = "json";
    int k = 0;
    std::optional<int> dim, s_opt;
    bool theorem_backed = false, strict_total = false;

    auto* info = app.add_subcommand("info", "structural summary of a complex");
    info->add_option("file", file, "complex file (.cx or JSON)")->required();

    auto* graph = app.add_subcommand("graph", "emit a derived graph");
    graph->add_option("file", file)->required();
    graph->add_option("--kind", kind, "two-section|line|total|inclusion|full|complete-asc|"
                                      "complete-desc|cart-asc|cart-desc|exchange|descending")
        ->required();
    graph->add_option("--dim", dim, "level for exchange/descending");
    graph->add_option("--format", format, "json|dot|matrix");

    auto* colour = app.add_subcommand("colour", "find a colouring with k colours");
    colour->add_option("file", file)->required();
    colour->add_option("--scheme", scheme, "c1..c11, ps:s, asc:r, desc:s")->required();
    colour->add_option("--k", k)->required();
    colour->add_option("--s", s_opt, "index for ps/c7 given without one");
    colour->add_flag("--theorem-backed", theorem_backed,
                     "demand the hypotheses of the encoding theorems");

    auto* chromatic = app.add_subcommand("chromatic", "least admissible palette size");
    chromatic->add_option("file", file)->required();
    chromatic->add_option("--scheme", scheme)->required();
    chromatic->add_option("--s", s_opt);
    chromatic->add_flag("--theorem-backed", theorem_backed);

    auto* check = app.add_subcommand("check", "validate an assignment");
    check->add_option("file", file)->required();
    check->add_option("--scheme", scheme)->required();
    check->add_option("--s", s_opt);
    check->add_option("--assignment", assignment_file, "assignment JSON file")->required();
    check->add_flag("--strict-total", strict_total,
                    "read the vertex-vs-face clause of c3 as all pairs");

    auto* model = app.add_subcommand("model", "emit the pure Sullivan model");
    model->add_option("file", file)->required();
    model->add_option("--scheme", scheme)->required();
    model->add_option("--k", k)->required();
    model->add_option("--s", s_opt);
    model->add_option("--format", format, "json|text");

    auto* verdict = app.add_subcommand("verdict", "ellipticity verdict for the model");
    verdict->add_option("file", file)->required();
    verdict->add_option("--scheme", scheme)->required();
    verdict->add_option("--k", k)->required();
    verdict->add_option("--s", s_opt);

    auto* reduce = app.add_subcommand("reduce", "translate a graph instance and colourings");
    reduce->add_option("gfile", file, "graph file (JSON or adjacency matrix)")->required();
    reduce->add_option("--lemma", lemma, "c1|c4|c5|c6|c7|c8c10|c9c11")->required();
    reduce->add_option("--k", k)->required();

    try {
        app.parse(argc, argv);
        if (info->parsed())
            return run_info(file);
        if (graph->parsed())
            return run_graph(file, kind, dim, format);
        if (colour->parsed())
            return run_colour(file, scheme, k, s_opt, theorem_backed);
        if (chromatic->parsed())
            return run_chromatic(file, scheme, s_opt, theorem_backed);
        if (check->parsed())
            return run_check(file, scheme, s_opt, assignment_file, strict_total);
        if (model->parsed())
            return run_model(file, scheme, k, s_opt, format);
        if (verdict->parsed())
            return run_verdict(file, scheme, k, s_opt);
        if (reduce->parsed())
            return run_reduce(file, lemma, k);
        return kExitError;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitError;
    } catch (const sccol::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
}
