#include "raag/certify.hpp"

#include <deque>
#include <istream>
#include <set>
#include <stdexcept>

#include "raag/graph_io.hpp"
#include "raag/raag_words.hpp"
#include "raag/rs_engine.hpp"

namespace raag {

long long genus_bound(int k) {
    if (k < 5) throw std::invalid_argument("genus bound needs a cycle of length at least 5");
    return 1 + static_cast<long long>(k - 4) * (1LL << (k - 3));
}

namespace {

struct SearchNode {
    Graph graph;
    std::vector<Move> moves;
    std::vector<Word> embed;  // graph vertex -> word over input vertices
};

Certificate make_certificate(const Graph& input, const SearchNode& node, const CycleWitness& w) {
    Certificate c;
    c.input = input;
    c.moves = node.moves;
    for (int v : w.vertices) c.cycle.push_back(node.graph.label(v));
    for (int v = 0; v < node.graph.size(); ++v) c.embedding[node.graph.label(v)] = node.embed[v];
    c.genus = genus_bound(static_cast<int>(w.vertices.size()));
    return c;
}

}  // namespace

std::optional<Certificate> detect(const Graph& g, int max_depth, bool allow_doubling,
                                  int max_vertices) {
    if (max_depth < 0) throw std::invalid_argument("search depth must be nonnegative");
    if (max_vertices < g.size())
        throw std::invalid_argument("vertex budget below the input graph size");

    std::deque<SearchNode> queue;
    std::set<std::string> seen;
    {
        SearchNode root{g, {}, {}};
        for (int v = 0; v < g.size(); ++v) root.embed.push_back({{v, 1}});
        seen.insert(canonical_form(g));
        queue.push_back(std::move(root));
    }

    auto push_child = [&](SearchNode&& child) {
        if (seen.insert(canonical_form(child.graph)).second) queue.push_back(std::move(child));
    };

    while (!queue.empty()) {
        SearchNode node = std::move(queue.front());
        queue.pop_front();

        if (auto w = find_induced_cycle(node.graph, 5)) return make_certificate(g, node, *w);
        if (static_cast<int>(node.moves.size()) == max_depth) continue;

        const Graph& cur = node.graph;
        for (int i = 0; i < cur.size(); ++i) {
            for (int j = i + 1; j < cur.size(); ++j) {
                if (cur.adjacent(i, j)) continue;
                const VertexSet pair = set_of(i) | set_of(j);
                ContractionResult res = cocontraction(cur, pair);
                const EmbeddingWordMap step = embedding_words(cur, pair);
                SearchNode child;
                child.moves = node.moves;
                child.moves.push_back(
                    {MoveKind::Cocontract, cur.label(i), cur.label(j), 0, res.graph});
                for (const Word& w : step.words)
                    child.embed.push_back(substitute(w, node.embed));
                child.graph = std::move(res.graph);
                push_child(std::move(child));
            }
        }
        if (allow_doubling) {
            for (int z = 0; z < cur.size(); ++z) {
                auto [kg, labeling] = kernel_graph({cur, z, 2});
                if (kg.size() > max_vertices) continue;
                SearchNode child;
                child.moves = node.moves;
                child.moves.push_back({MoveKind::KernelDouble, cur.label(z), "", 2, kg});
                for (const Word& w : labeling.words)
                    child.embed.push_back(substitute(w, node.embed));
                child.graph = std::move(kg);
                push_child(std::move(child));
            }
        }
    }
    return std::nullopt;
}

const char* to_string(VerifyFailure f) {
    switch (f) {
        case VerifyFailure::None: return "none";
        case VerifyFailure::Malformed: return "malformed";
        case VerifyFailure::BadMove: return "bad-move";
        case VerifyFailure::MoveMismatch: return "move-mismatch";
        case VerifyFailure::CycleTooShort: return "cycle-too-short";
        case VerifyFailure::CycleNotInduced: return "cycle-not-induced";
        case VerifyFailure::EmbeddingMissing: return "embedding-missing";
        case VerifyFailure::EdgeNotCommuting: return "edge-not-commuting";
        case VerifyFailure::NonEdgeCommuting: return "non-edge-commuting";
        case VerifyFailure::GenusMismatch: return "genus-mismatch";
    }
    return "unknown";
}

namespace {

VerifyResult fail(VerifyFailure reason, std::string detail) {
    return {false, reason, std::move(detail)};
}

}  // namespace

VerifyResult verify(const Certificate& c) {
    Graph cur = c.input;
    for (std::size_t i = 0; i < c.moves.size(); ++i) {
        const Move& m = c.moves[i];
        const auto z = cur.vertex_by_label(m.z);
        if (!z) return fail(VerifyFailure::BadMove, "move " + std::to_string(i) +
                                                        ": unknown vertex " + m.z);
        Graph next;
        if (m.kind == MoveKind::Cocontract) {
            const auto z2 = cur.vertex_by_label(m.partner);
            if (!z2) return fail(VerifyFailure::BadMove, "move " + std::to_string(i) +
                                                             ": unknown vertex " + m.partner);
            if (cur.adjacent(*z, *z2))
                return fail(VerifyFailure::BadMove,
                            "move " + std::to_string(i) + ": co-contraction pair is adjacent");
            next = cocontraction(cur, set_of(*z) | set_of(*z2)).graph;
        } else {
            if (m.order < 2)
                return fail(VerifyFailure::BadMove,
                            "move " + std::to_string(i) + ": doubling order below 2");
            next = kernel_graph({cur, *z, m.order}).first;
        }
        if (emit_graph6(next) != emit_graph6(m.result))
            return fail(VerifyFailure::MoveMismatch,
                        "move " + std::to_string(i) + ": recomputed graph differs");
        cur = std::move(next);
    }

    if (c.cycle.size() < 5)
        return fail(VerifyFailure::CycleTooShort,
                    "cycle has " + std::to_string(c.cycle.size()) + " vertices");
    std::vector<int> cycle;
    for (const std::string& label : c.cycle) {
        const auto v = cur.vertex_by_label(label);
        if (!v) return fail(VerifyFailure::Malformed, "cycle vertex not in final graph: " + label);
        cycle.push_back(*v);
    }
    const int k = static_cast<int>(cycle.size());
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            if (cycle[i] == cycle[j])
                return fail(VerifyFailure::CycleNotInduced, "repeated cycle vertex");
            const bool consecutive = (j == i + 1) || (i == 0 && j == k - 1);
            if (cur.adjacent(cycle[i], cycle[j]) != consecutive)
                return fail(VerifyFailure::CycleNotInduced,
                            "pair " + cur.label(cycle[i]) + "," + cur.label(cycle[j]));
        }

    std::vector<Word> images;
    for (int v : cycle) {
        const auto it = c.embedding.find(cur.label(v));
        if (it == c.embedding.end())
            return fail(VerifyFailure::EmbeddingMissing, "no word for " + cur.label(v));
        for (const Letter& l : it->second)
            if (l.gen < 0 || l.gen >= c.input.size())
                return fail(VerifyFailure::Malformed, "embedding word uses a foreign generator");
        images.push_back(it->second);
    }
    const RaagContext ctx{c.input};
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            const bool consecutive = (j == i + 1) || (i == 0 && j == k - 1);
            const bool comm = commutes(ctx, images[i], images[j]);
            if (consecutive && !comm)
                return fail(VerifyFailure::EdgeNotCommuting,
                            "images of " + c.cycle[i] + "," + c.cycle[j]);
            if (!consecutive && comm)
                return fail(VerifyFailure::NonEdgeCommuting,
                            "images of " + c.cycle[i] + "," + c.cycle[j]);
        }

    if (c.genus != genus_bound(k))
        return fail(VerifyFailure::GenusMismatch, "stored " + std::to_string(c.genus));
    return {true, VerifyFailure::None, ""};
}

nlohmann::ordered_json certificate_to_json(const Certificate& c) {
    nlohmann::ordered_json j;
    j["input"]["graph6"] = emit_graph6(c.input);
    j["input"]["labels"] = c.input.labels();
    j["moves"] = nlohmann::ordered_json::array();
    for (const Move& m : c.moves) {
        nlohmann::ordered_json jm;
        jm["kind"] = m.kind == MoveKind::Cocontract ? "cocontract" : "kernel_double";
        if (m.kind == MoveKind::Cocontract)
            jm["params"] = {{"z", m.z}, {"z2", m.partner}};
        else
            jm["params"] = {{"z", m.z}, {"n", m.order}};
        jm["result_graph6"] = emit_graph6(m.result);
        j["moves"].push_back(std::move(jm));
    }
    j["cycle"] = c.cycle;
    auto name = [&c](int v) { return c.input.label(v); };
    j["embedding"] = nlohmann::ordered_json::object();
    for (const auto& [label, word] : c.embedding) j["embedding"][label] = word_to_string(word, name);
    j["genus_bound"] = c.genus;
    return j;
}

Certificate certificate_from_json(const nlohmann::json& j) {
    Certificate c;
    const Graph shape = parse_graph6(j.at("input").at("graph6").get<std::string>());
    c.input = Graph(shape.size(), j.at("input").at("labels").get<std::vector<std::string>>());
    for (int u = 0; u < shape.size(); ++u)
        for (int v = u + 1; v < shape.size(); ++v)
            if (shape.adjacent(u, v)) c.input.add_edge(u, v);

    for (const auto& jm : j.at("moves")) {
        Move m;
        const std::string kind = jm.at("kind").get<std::string>();
        if (kind == "cocontract") {
            m.kind = MoveKind::Cocontract;
            m.z = jm.at("params").at("z").get<std::string>();
            m.partner = jm.at("params").at("z2").get<std::string>();
        } else if (kind == "kernel_double") {
            m.kind = MoveKind::KernelDouble;
            m.z = jm.at("params").at("z").get<std::string>();
            m.order = jm.at("params").at("n").get<int>();
        } else {
            throw std::invalid_argument("unknown move kind: " + kind);
        }
        m.result = parse_graph6(jm.at("result_graph6").get<std::string>());
        c.moves.push_back(std::move(m));
    }

    c.cycle = j.at("cycle").get<std::vector<std::string>>();
    auto id_of = [&c](const std::string& label) {
        const auto v = c.input.vertex_by_label(label);
        if (!v) throw std::invalid_argument("embedding word uses unknown label: " + label);
        return *v;
    };
    for (const auto& [label, text] : j.at("embedding").items())
        c.embedding[label] = parse_word(text.get<std::string>(), id_of);
    c.genus = j.at("genus_bound").get<long long>();
    return c;
}

ScanReport scan_corpus(std::istream& in, int max_depth, bool allow_doubling, int max_vertices) {
    ScanReport report;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        ScanEntry entry;
        entry.line = lineno;
        entry.graph6 = line;
        try {
            const Graph g = parse_graph6(line);
            auto cert = detect(g, max_depth, allow_doubling,
                               std::max(max_vertices, g.size()));
            if (cert) {
                entry.verdict = ScanEntry::Verdict::Certified;
                entry.certificate = std::move(cert);
                ++report.certified;
            } else {
                entry.verdict = ScanEntry::Verdict::Unresolved;
                ++report.unresolved;
            }
        } catch (const std::exception& e) {
            entry.verdict = ScanEntry::Verdict::Error;
            entry.error = e.what();
            ++report.errors;
        }
        report.entries.push_back(std::move(entry));
    }
    return report;
}

}  // namespace raag
