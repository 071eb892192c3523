#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "thick/counting.hpp"
#include "thick/decomposition.hpp"
#include "thick/graph.hpp"
#include "thick/model.hpp"
#include "thick/parameterized.hpp"

namespace thick {

struct LabelledGraph {
    Graph graph;
    std::vector<std::string> labels;  // empty when the file has no "# labels" line
};

// '#' comments are skipped except "# labels a b ...", which names vertices 0..n-1.
LabelledGraph read_graph(std::istream& in);
LabelledGraph read_graph_file(const std::string& path);
void write_graph(std::ostream& out, const Graph& g, const std::vector<std::string>& labels = {});

nlohmann::json model_to_json(const ThickModel& m);
ThickModel model_from_json(const nlohmann::json& j);

// Rationals as "p/q" strings (or plain integers).
mpq_class parse_rational(const std::string& s);
std::string rational_string(const mpq_class& q);
std::vector<mpq_class> weights_from_json(const nlohmann::json& j);

nlohmann::json decomposition_to_json(const DecompositionTree& t);
nlohmann::json outcome_to_json(const RecognitionOutcome& r);
nlohmann::json polynomial_to_json(const CountPolynomial& p);

struct PaceTd {
    int thin_n = 0;
    RawTreeDecomposition td;
};

// PACE 2017: "s td <bags> <width+1> <n>", "b <id> <v...>" with 1-based ids and vertices, then tree edges.
PaceTd read_pace_td(std::istream& in);
void write_pace_td(std::ostream& out, int n, const RawTreeDecomposition& td);

}  // namespace thick
