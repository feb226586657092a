// Command-line front end: surface-subgroup certificates for right-angled
// Artin groups via co-contraction and kernel-doubling moves.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "raag/certify.hpp"
#include "raag/cocontract.hpp"
#include "raag/graph_io.hpp"
#include "raag/rs_engine.hpp"

namespace {

constexpr int kExitCertified = 0;
constexpr int kExitUnresolved = 1;
constexpr int kExitUsage = 2;

raag::Graph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    const std::string text = buf.str();
    // Adjacency-list files contain ':'; a graph6 line never does.
    if (text.find(':') != std::string::npos) return raag::parse_adjlist(text);
    return raag::parse_graph6(text);
}

int run_rs(const std::string& graph_path, const std::string& vertex, int order) {
    const raag::Graph g = load_graph(graph_path);
    const auto z = g.vertex_by_label(vertex);
    if (!z) throw std::runtime_error("no vertex labeled " + vertex);
    const raag::CyclicQuotientMap q{g, *z, order};

    const raag::Presentation simplified = raag::tietze_simplify(raag::rs_presentation(q));
    const auto [kg, labeling] = raag::kernel_graph(q);
    raag::cross_validate(q);

    std::cout << "presentation:\n" << simplified.to_text();
    std::cout << "kernel graph (graph6): " << raag::emit_graph6(kg) << "\n";
    std::cout << "kernel graph (adjacency):\n" << raag::emit_adjlist(kg);
    std::cout << "generator words:\n";
    auto name = [&g](int v) { return g.label(v); };
    for (int v = 0; v < kg.size(); ++v)
        std::cout << "  " << kg.label(v) << " = " << raag::word_to_string(labeling.words[v], name)
                  << "\n";
    return kExitCertified;
}

int run_cocontract(const std::string& graph_path, const std::vector<std::string>& labels,
                   bool witness) {
    const raag::Graph g = load_graph(graph_path);
    raag::VertexSet s = 0;
    for (const std::string& label : labels) {
        const auto v = g.vertex_by_label(label);
        if (!v) throw std::runtime_error("no vertex labeled " + label);
        s |= raag::set_of(*v);
    }
    const raag::ContractionResult res = raag::cocontraction(g, s);
    std::cout << "co-contraction (graph6): " << raag::emit_graph6(res.graph) << "\n";
    std::cout << raag::emit_adjlist(res.graph);
    if (witness) {
        const raag::EmbeddingWordMap m = raag::embedding_words(g, s);
        auto name = [&g](int v) { return g.label(v); };
        for (int v = 0; v < res.graph.size(); ++v)
            std::cout << res.graph.label(v) << ": " << raag::word_to_string(m.words[v], name)
                      << "\n";
    }
    return kExitCertified;
}

int run_detect(const std::string& graph_path, int depth, bool doubling, int max_vertices,
               const std::string& out_path) {
    const raag::Graph g = load_graph(graph_path);
    const auto cert = raag::detect(g, depth, doubling, std::max(max_vertices, g.size()));
    if (!cert) {
        std::cout << "unresolved\n";
        return kExitUnresolved;
    }
    const auto j = raag::certificate_to_json(*cert);
    if (!out_path.empty()) {
        std::ofstream out(out_path);
        if (!out) throw std::runtime_error("cannot write " + out_path);
        out << j.dump(2) << "\n";
    }
    std::cout << "certified: " << cert->moves.size() << " move(s), cycle length "
              << cert->cycle.size() << ", genus bound " << cert->genus << "\n";
    if (out_path.empty()) std::cout << j.dump(2) << "\n";
    return kExitCertified;
}

int run_verify(const std::string& cert_path) {
    std::ifstream in(cert_path);
    if (!in) throw std::runtime_error("cannot open " + cert_path);
    nlohmann::json j;
    in >> j;
    const raag::Certificate cert = raag::certificate_from_json(j);
    const raag::VerifyResult res = raag::verify(cert);
    if (res.ok) {
        std::cout << "valid\n";
        return kExitCertified;
    }
    std::cout << "invalid: " << raag::to_string(res.reason) << " (" << res.detail << ")\n";
    return kExitUnresolved;
}

int run_scan(const std::string& corpus_path, int depth, bool doubling, int max_vertices) {
    std::ifstream in(corpus_path);
    if (!in) throw std::runtime_error("cannot open " + corpus_path);
    const raag::ScanReport report = raag::scan_corpus(in, depth, doubling, max_vertices);
    for (const raag::ScanEntry& e : report.entries) {
        std::cout << "line " << e.line << " " << e.graph6 << ": ";
        switch (e.verdict) {
            case raag::ScanEntry::Verdict::Certified:
                std::cout << "certified (" << e.certificate->moves.size() << " moves, genus bound "
                          << e.certificate->genus << ")\n";
                break;
            case raag::ScanEntry::Verdict::Unresolved:
                std::cout << "unresolved\n";
                break;
            case raag::ScanEntry::Verdict::Error:
                std::cout << "error: " << e.error << "\n";
                break;
        }
    }
    std::cout << report.certified << " certified, " << report.unresolved << " unresolved, "
              << report.errors << " errors\n";
    return report.certified > 0 ? kExitCertified : kExitUnresolved;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Surface-subgroup certificates for right-angled Artin groups"};
    app.require_subcommand(1);

    std::string graph_path, vertex, cert_path, corpus_path, out_path;
    std::vector<std::string> set_labels;
    int order = 2, depth = 0, max_vertices = raag::kMaxVertices;
    bool witness = false, doubling = false;

    CLI::App* rs = app.add_subcommand("rs", "Reidemeister-Schreier kernel of a cyclic quotient");
    rs->add_option("--graph", graph_path)->required();
    rs->add_option("--vertex", vertex)->required();
    rs->add_option("--order", order)->required();

    CLI::App* co = app.add_subcommand("cocontract", "Co-contract a vertex set");
    co->add_option("--graph", graph_path)->required();
    co->add_option("-S", set_labels)->required();
    co->add_flag("--witness", witness, "Print embedding words");

    CLI::App* det = app.add_subcommand("detect", "Search for a surface-subgroup certificate");
    det->add_option("--graph", graph_path)->required();
    det->add_option("--depth", depth);
    det->add_flag("--doubling", doubling);
    det->add_option("--max-vertices", max_vertices);
    det->add_option("--out", out_path);

    CLI::App* ver = app.add_subcommand("verify", "Verify a certificate file");
    ver->add_option("--cert", cert_path)->required();

    CLI::App* scan = app.add_subcommand("scan", "Scan a file of graph6 lines");
    scan->add_option("--corpus", corpus_path)->required();
    scan->add_option("--depth", depth);
    scan->add_flag("--doubling", doubling);
    scan->add_option("--max-vertices", max_vertices);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (rs->parsed()) return run_rs(graph_path, vertex, order);
        if (co->parsed()) return run_cocontract(graph_path, set_labels, witness);
        if (det->parsed()) return run_detect(graph_path, depth, doubling, max_vertices, out_path);
        if (ver->parsed()) return run_verify(cert_path);
        if (scan->parsed()) return run_scan(corpus_path, depth, doubling, max_vertices);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
