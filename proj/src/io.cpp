#include "sccol/io.hpp"

#include <cctype>
#include <fstream>
#include <limits>
#include <sstream>

namespace sccol {

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        fail(Errc::ParseError, "cannot open " + path);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

bool looks_like_json(const std::string& text) {
    for (char ch : text) {
        if (std::isspace(static_cast<unsigned char>(ch)))
            continue;
        return ch == '{' || ch == '[';
    }
    return false;
}

Json parse_json(const std::string& text, const std::string& what) {
    Json j = Json::parse(text, nullptr, false);
    if (j.is_discarded())
        fail(Errc::ParseError, "malformed JSON in " + what);
    return j;
}

} // namespace

SimplicialComplex parse_cx_text(std::istream& in) {
    std::vector<std::vector<std::string>> facets;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos)
            line.resize(hash);
        std::istringstream words(line);
        std::vector<std::string> facet;
        std::string w;
        while (words >> w)
            facet.push_back(w);
        if (!facet.empty())
            facets.push_back(std::move(facet));
    }
    return SimplicialComplex::from_facets(facets);
}

SimplicialComplex complex_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("facets") || !j["facets"].is_array())
        fail(Errc::ParseError, "complex JSON needs a \"facets\" array");
    std::vector<std::vector<std::string>> facets;
    for (const auto& row : j["facets"]) {
        std::vector<std::string> facet;
        for (const auto& label : row) {
            if (!label.is_string())
                fail(Errc::ParseError, "facet entries must be strings");
            facet.push_back(label.get<std::string>());
        }
        facets.push_back(std::move(facet));
    }
    return SimplicialComplex::from_facets(facets);
}

SimplicialComplex read_complex_file(const std::string& path) {
    const std::string text = slurp(path);
    if (looks_like_json(text))
        return complex_from_json(parse_json(text, path));
    std::istringstream in(text);
    return parse_cx_text(in);
}

Json complex_to_json(const SimplicialComplex& x) {
    Json facets = Json::array();
    for (const auto& f : x.facets())
        facets.push_back(f.labels());
    return Json{{"facets", facets}};
}

Graph graph_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
        fail(Errc::ParseError, "graph JSON needs \"vertices\" and \"edges\"");
    Graph g;
    for (const auto& v : j["vertices"]) {
        if (!v.is_string())
            fail(Errc::ParseError, "vertex names must be strings");
        g.add_vertex(v.get<std::string>());
    }
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string())
            fail(Errc::ParseError, "edges must be pairs of vertex names");
        g.add_edge(e[0].get<std::string>(), e[1].get<std::string>());
    }
    return g;
}

Graph parse_adjacency_text(std::istream& in) {
    std::size_t n = 0;
    if (!(in >> n))
        fail(Errc::ParseError, "adjacency text must start with the vertex count");
    Graph g;
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) {
        names.push_back("v" + std::to_string(i + 1));
        g.add_vertex(names.back());
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            int cell = 0;
            if (!(in >> cell))
                fail(Errc::ParseError, "adjacency matrix is truncated");
            if (cell != 0 && cell != 1)
                fail(Errc::ParseError, "adjacency entries must be 0 or 1");
            if (cell == 1 && i < j)
                g.add_edge(names[i], names[j]);
            if (cell == 1 && i == j)
                fail(Errc::ParseError, "adjacency diagonal must be 0");
        }
    return g;
}

Graph read_graph_file(const std::string& path) {
    const std::string text = slurp(path);
    if (looks_like_json(text))
        return graph_from_json(parse_json(text, path));
    std::istringstream in(text);
    return parse_adjacency_text(in);
}

Json graph_to_json(const Graph& g) {
    Json edges = Json::array();
    for (const auto& [u, v] : g.edges())
        edges.push_back(Json::array({u, v}));
    return Json{{"edges", edges}, {"vertices", g.vertices()}};
}

std::string graph_to_dot(const Graph& g) {
    std::ostringstream out;
    out << "graph g {\n";
    for (const auto& v : g.vertices())
        out << "  \"" << v << "\";\n";
    for (const auto& [u, v] : g.edges())
        out << "  \"" << u << "\" -- \"" << v << "\";\n";
    out << "}\n";
    return out.str();
}

std::string graph_to_adjacency_text(const Graph& g) {
    const auto names = g.vertices();
    std::ostringstream out;
    out << names.size() << "\n";
    for (const auto& u : names) {
        for (std::size_t j = 0; j < names.size(); ++j)
            out << (j ? " " : "") << (g.has_edge(u, names[j]) ? 1 : 0);
        out << "\n";
    }
    return out.str();
}

namespace {

std::string domain_to_string(const Assignment& a) {
    switch (a.domain) {
    case AssignmentDomain::Vertices: return "vertices";
    case AssignmentDomain::Faces: return "faces";
    case AssignmentDomain::Both: return "both";
    case AssignmentDomain::Dim: return "dim:" + std::to_string(a.dim);
    }
    fail(Errc::InvalidInput, "unknown assignment domain");
}

} // namespace

Assignment assignment_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("k") || !j.contains("domain") || !j.contains("colours"))
        fail(Errc::ParseError, "assignment JSON needs \"k\", \"domain\", \"colours\"");
    Assignment a;
    if (!j["k"].is_number_integer())
        fail(Errc::ParseError, "\"k\" must be an integer");
    a.k = j["k"].get<int>();
    const std::string dom = j["domain"].get<std::string>();
    if (dom == "vertices")
        a.domain = AssignmentDomain::Vertices;
    else if (dom == "faces")
        a.domain = AssignmentDomain::Faces;
    else if (dom == "both")
        a.domain = AssignmentDomain::Both;
    else if (dom.rfind("dim:", 0) == 0) {
        a.domain = AssignmentDomain::Dim;
        try {
            a.dim = std::stoi(dom.substr(4));
        } catch (const std::exception&) {
            fail(Errc::ParseError, "bad dimension in domain '" + dom + "'");
        }
    } else
        fail(Errc::ParseError, "unknown domain '" + dom + "'");
    if (!j["colours"].is_object())
        fail(Errc::ParseError, "\"colours\" must be an object");
    for (const auto& [key, value] : j["colours"].items()) {
        if (!value.is_number_integer())
            fail(Errc::ParseError, "colours must be integers");
        a.colours[key] = value.get<int>();
    }
    return a;
}

Json assignment_to_json(const Assignment& a) {
    return Json{{"colours", a.colours}, {"domain", domain_to_string(a)}, {"k", a.k}};
}

Assignment read_assignment_file(const std::string& path) {
    return assignment_from_json(parse_json(slurp(path), path));
}

Json colouring_to_json(const GraphColouring& c) {
    return Json{{"colours", c.colours}, {"k", c.k}};
}

GraphColouring colouring_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("k") || !j.contains("colours"))
        fail(Errc::ParseError, "colouring JSON needs \"k\" and \"colours\"");
    GraphColouring c;
    c.k = j["k"].get<int>();
    for (const auto& [key, value] : j["colours"].items())
        c.colours[key] = value.get<int>();
    return c;
}

Json partition_to_json(const Partition& p) {
    Json blocks = Json::array();
    for (const auto& b : p.blocks)
        blocks.push_back(b);
    return Json{{"blocks", blocks}};
}

Partition partition_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("blocks") || !j["blocks"].is_array())
        fail(Errc::ParseError, "partition JSON needs a \"blocks\" array");
    std::vector<std::vector<std::string>> blocks;
    for (const auto& row : j["blocks"]) {
        std::vector<std::string> block;
        for (const auto& v : row)
            block.push_back(v.get<std::string>());
        blocks.push_back(std::move(block));
    }
    return Partition::of(std::move(blocks));
}

namespace {

long long coeff_to_ll(const BigInt& c) {
    if (c > std::numeric_limits<long long>::max() || c < std::numeric_limits<long long>::min())
        fail(Errc::TooLarge, "coefficient exceeds the JSON integer range");
    return static_cast<long long>(c);
}

Json poly_to_json(const FormalPoly& poly) {
    Json terms = Json::array();
    for (const auto& term : poly) {
        Json mono = Json::object();
        for (const auto& [name, exp] : term.mono.powers)
            mono[name] = exp;
        terms.push_back(Json{{"coeff", coeff_to_ll(term.coeff)}, {"monomial", mono}});
    }
    return terms;
}

std::string poly_to_text(const FormalPoly& poly) {
    if (poly.empty())
        return "0";
    std::ostringstream out;
    for (std::size_t t = 0; t < poly.size(); ++t) {
        if (t)
            out << " + ";
        const auto& term = poly[t];
        bool wrote = false;
        if (term.coeff != 1 || term.mono.powers.empty()) {
            out << term.coeff.str();
            wrote = true;
        }
        for (const auto& [name, exp] : term.mono.powers) {
            if (wrote)
                out << " ";
            out << name;
            if (exp > 1)
                out << "^" << exp;
            wrote = true;
        }
    }
    return out.str();
}

} // namespace

Json presentation_to_json(const SullivanPresentation& s) {
    Json gens = Json::array();
    for (const auto& g : s.even_generators())
        gens.push_back(Json{{"degree", g.degree}, {"name", g.name}});
    for (const auto& g : s.odd_generators())
        gens.push_back(Json{{"degree", g.degree}, {"name", g.name}});
    Json diffs = Json::object();
    for (const auto& [name, poly] : s.differentials())
        diffs[name] = poly_to_json(poly);
    return Json{{"differentials", diffs}, {"generators", gens}, {"k", s.k()}};
}

Json model_to_json(const SchemeModel& m) {
    if (const auto* single = std::get_if<SullivanPresentation>(&m))
        return presentation_to_json(*single);
    Json factors = Json::array();
    for (const auto& f : std::get<TensorPresentation>(m).factors)
        factors.push_back(presentation_to_json(f));
    return Json{{"factors", factors}};
}

std::string presentation_to_text(const SullivanPresentation& s) {
    std::ostringstream out;
    out << "pure Sullivan presentation, k = " << s.k() << "\n";
    for (const auto& g : s.even_generators())
        out << "  |" << g.name << "| = " << g.degree << ", d(" << g.name << ") = 0\n";
    for (const auto& [name, poly] : s.differentials()) {
        out << "  |" << name << "| = " << 2 * s.k() - 3 << ", d(" << name
            << ") = " << poly_to_text(poly) << "\n";
    }
    return out.str();
}

std::string model_to_text(const SchemeModel& m) {
    if (const auto* single = std::get_if<SullivanPresentation>(&m))
        return presentation_to_text(*single);
    const auto& factors = std::get<TensorPresentation>(m).factors;
    std::ostringstream out;
    out << "tensor of " << factors.size() << " pure Sullivan presentations\n";
    for (std::size_t i = 0; i < factors.size(); ++i) {
        out << "factor " << i << ":\n";
        std::istringstream lines(presentation_to_text(factors[i]));
        std::string line;
        while (std::getline(lines, line))
            out << "  " << line << "\n";
    }
    return out.str();
}

} // namespace sccol
