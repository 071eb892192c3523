#pragma once

#include <string>
#include <vector>

#include "thick/graph.hpp"
#include "thick/io.hpp"

#ifndef THICK_CORPUS_DIR
#error "THICK_CORPUS_DIR must point at corpus/"
#endif

namespace fixtures {

inline thick::LabelledGraph figure(const std::string& name) {
    return thick::read_graph_file(std::string(THICK_CORPUS_DIR) + "/figures/" + name + ".graph");
}

// Vertex set from single-letter labels, e.g. "fgij".
inline thick::VertexSet letters(const thick::LabelledGraph& lg, const std::string& s) {
    thick::VertexSet out;
    for (char c : s)
        for (std::size_t i = 0; i < lg.labels.size(); ++i)
            if (lg.labels[i] == std::string(1, c)) out.push_back(static_cast<int>(i));
    return thick::normalized(out);
}

inline thick::Graph make(int n, const std::vector<thick::Edge>& e) { return thick::Graph::from_edge_list(n, e); }
inline thick::Graph path(int n) {
    std::vector<thick::Edge> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return make(n, e);
}
inline thick::Graph cycle(int n) {
    std::vector<thick::Edge> e;
    for (int i = 0; i < n; ++i) e.emplace_back(std::min(i, (i + 1) % n), std::max(i, (i + 1) % n));
    return make(n, e);
}
inline thick::Graph complete(int n) {
    std::vector<thick::Edge> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return make(n, e);
}

}  // namespace fixtures
