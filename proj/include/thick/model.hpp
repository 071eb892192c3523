#pragma once

#include <optional>
#include <string>
#include <vector>

#include "thick/graph.hpp"

namespace thick {

// Thin graph H on thin_n vertices plus phi: V(G) -> V(H).
struct ThickModel {
    int thin_n = 0;
    std::vector<Edge> thin_edges;  // u < v, sorted
    std::vector<int> phi;

    std::vector<VertexSet> parts() const;
    Graph thin_graph() const;
    bool operator==(const ThickModel&) const = default;
};

enum class ThinClass { Any, TriangleFree, Forest };

struct ModelCheck {
    bool ok = true;
    std::string violation;  // empty when ok
};

// Model conditions: cliques as thick vertices, every edge inside one or across a thin edge,
// no empty thick vertex, plus the shape requirement on H.
ModelCheck verify_model(const Graph& g, const ThickModel& m, ThinClass require);

// Model whose thick vertices are the given parts, renumbered by least vertex, with H the quotient.
ThickModel model_from_partition(const Graph& g, const std::vector<VertexSet>& parts);

struct Witness {
    std::string step;
    VertexSet vertices;
};

struct RecognitionOutcome {
    bool accepted = false;
    std::optional<ThickModel> model;
    std::optional<Witness> witness;

    static RecognitionOutcome accept(std::optional<ThickModel> m) { return {true, std::move(m), std::nullopt}; }
    static RecognitionOutcome reject(std::string step, VertexSet vs) {
        return {false, std::nullopt, Witness{std::move(step), std::move(vs)}};
    }
};

}  // namespace thick
