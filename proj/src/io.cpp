#include "thick/io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

namespace thick {

namespace {

bool is_blank(const std::string& line) { return line.find_first_not_of(" \t\r") == std::string::npos; }

long parse_int(const std::string& tok, const std::string& what) {
    std::size_t used = 0;
    long v = 0;
    try {
        v = std::stol(tok, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != tok.size() || tok.empty()) throw InputError(what + ": expected an integer, got '" + tok + "'");
    return v;
}

std::vector<std::string> tokens(const std::string& line) {
    std::istringstream is(line);
    std::vector<std::string> out;
    for (std::string t; is >> t;) out.push_back(t);
    return out;
}

}  // namespace

LabelledGraph read_graph(std::istream& in) {
    std::vector<std::string> labels;
    std::vector<std::vector<std::string>> data;
    std::size_t lineno = 0;
    std::vector<std::size_t> data_line;
    for (std::string line; std::getline(in, line);) {
        ++lineno;
        if (is_blank(line)) continue;
        auto first = line.find_first_not_of(" \t");
        if (line[first] == '#') {
            auto t = tokens(line.substr(first + 1));
            if (!t.empty() && t[0] == "labels") labels.assign(t.begin() + 1, t.end());
            continue;
        }
        data.push_back(tokens(line));
        data_line.push_back(lineno);
    }
    if (data.empty()) throw InputError("graph: missing 'n m' header");
    if (data[0].size() != 2) throw InputError("graph: header must be 'n m'");
    long n = parse_int(data[0][0], "graph header"), m = parse_int(data[0][1], "graph header");
    if (n < 0 || m < 0) throw InputError("graph: negative n or m");
    if (static_cast<long>(data.size()) - 1 != m) {
        std::ostringstream os;
        os << "graph: header announces " << m << " edges, found " << data.size() - 1;
        throw InputError(os.str());
    }
    std::set<Edge> seen;
    std::vector<Edge> edges;
    for (std::size_t i = 1; i < data.size(); ++i) {
        const std::string where = "graph line " + std::to_string(data_line[i]);
        if (data[i].size() != 2) throw InputError(where + ": expected 'u v'");
        long u = parse_int(data[i][0], where), v = parse_int(data[i][1], where);
        if (!(0 <= u && u < v && v < n)) throw InputError(where + ": need 0 <= u < v < n");
        Edge e{static_cast<int>(u), static_cast<int>(v)};
        if (!seen.insert(e).second) throw InputError(where + ": duplicate edge");
        edges.push_back(e);
    }
    if (!labels.empty() && static_cast<long>(labels.size()) != n)
        throw InputError("graph: label table size differs from n");
    return {Graph::from_edge_list(static_cast<int>(n), edges), labels};
}

LabelledGraph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    return read_graph(in);
}

void write_graph(std::ostream& out, const Graph& g, const std::vector<std::string>& labels) {
    if (!labels.empty()) {
        out << "# labels";
        for (const auto& l : labels) out << ' ' << l;
        out << '\n';
    }
    out << g.n() << ' ' << g.m() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

nlohmann::json model_to_json(const ThickModel& m) {
    nlohmann::json edges = nlohmann::json::array();
    for (auto [a, b] : m.thin_edges) edges.push_back({a, b});
    return {{"thin_n", m.thin_n}, {"thin_edges", edges}, {"phi", m.phi}};
}

ThickModel model_from_json(const nlohmann::json& j) {
    try {
        ThickModel m;
        m.thin_n = j.at("thin_n").get<int>();
        for (const auto& e : j.at("thin_edges")) {
            if (!e.is_array() || e.size() != 2) throw InputError("model: thin edge must be a pair");
            int a = e[0].get<int>(), b = e[1].get<int>();
            m.thin_edges.emplace_back(std::min(a, b), std::max(a, b));
        }
        std::sort(m.thin_edges.begin(), m.thin_edges.end());
        m.phi = j.at("phi").get<std::vector<int>>();
        return m;
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("model: ") + e.what());
    }
}

mpq_class parse_rational(const std::string& s) {
    auto slash = s.find('/');
    auto digits = [&](const std::string& t) {
        std::size_t i = (!t.empty() && t[0] == '-') ? 1 : 0;
        return i < t.size() && t.find_first_not_of("0123456789", i) == std::string::npos;
    };
    std::string num = s.substr(0, slash), den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!digits(num) || !digits(den) || den[0] == '-') throw InputError("bad rational '" + s + "'");
    mpz_class d(den);
    if (d == 0) throw InputError("zero denominator in '" + s + "'");
    mpq_class q(mpz_class(num), d);
    q.canonicalize();
    return q;
}

std::string rational_string(const mpq_class& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::vector<mpq_class> weights_from_json(const nlohmann::json& j) {
    try {
        std::vector<mpq_class> out;
        for (const auto& w : j.at("weights")) {
            if (w.is_string()) {
                out.push_back(parse_rational(w.get<std::string>()));
            } else if (w.is_number_integer()) {
                out.emplace_back(mpz_class(std::to_string(w.get<long long>())));
            } else {
                throw InputError("weights: entries must be \"p/q\" strings or integers");
            }
            if (out.back() < 0) throw InputError("weights: negative weight");
        }
        return out;
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("weights: ") + e.what());
    }
}

nlohmann::json decomposition_to_json(const DecompositionTree& t) {
    nlohmann::json nodes = nlohmann::json::array();
    for (const auto& n : t.nodes) {
        nlohmann::json node = {{"vertices", n.vertices}};
        if (n.is_leaf()) {
            const char* kind = n.kind.tag == AtomTag::Clique        ? "clique"
                               : n.kind.tag == AtomTag::Cobipartite ? "cobipartite"
                                                                    : "other";
            node["kind"] = kind;
            node["atom"] = n.vertices;
            node["sep"] = nullptr;
            node["children"] = nlohmann::json::array();
            if (n.kind.tag == AtomTag::Cobipartite) node["sides"] = {n.kind.sideU, n.kind.sideW};
        } else {
            node["kind"] = "split";
            node["atom"] = nullptr;
            node["sep"] = n.separator;
            node["children"] = {n.left, n.right};
        }
        nodes.push_back(node);
    }
    return {{"root", t.root}, {"nodes", nodes}};
}

nlohmann::json outcome_to_json(const RecognitionOutcome& r) {
    nlohmann::json j;
    j["accepted"] = r.accepted;
    j["model"] = r.model ? model_to_json(*r.model) : nlohmann::json(nullptr);
    j["witness"] = r.witness ? nlohmann::json{{"step", r.witness->step}, {"vertices", r.witness->vertices}}
                             : nlohmann::json(nullptr);
    return j;
}

nlohmann::json polynomial_to_json(const CountPolynomial& p) {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& c : p.coeffs) a.push_back(rational_string(c));
    return a;
}

PaceTd read_pace_td(std::istream& in) {
    PaceTd out;
    bool header = false;
    long bags = 0, width1 = 0;
    std::vector<char> bag_seen;
    std::size_t lineno = 0;
    for (std::string line; std::getline(in, line);) {
        ++lineno;
        auto t = tokens(line);
        if (t.empty() || t[0] == "c") continue;
        const std::string where = "td line " + std::to_string(lineno);
        if (t[0] == "s") {
            if (header || t.size() != 5 || t[1] != "td") throw InputError(where + ": bad 's td' header");
            bags = parse_int(t[2], where);
            width1 = parse_int(t[3], where);
            out.thin_n = static_cast<int>(parse_int(t[4], where));
            if (bags < 0 || width1 < 0 || out.thin_n < 0) throw InputError(where + ": negative header field");
            out.td.bags.resize(bags);
            bag_seen.assign(bags, 0);
            header = true;
        } else if (!header) {
            throw InputError(where + ": data before the 's td' header");
        } else if (t[0] == "b") {
            if (t.size() < 2) throw InputError(where + ": bag line needs an id");
            long id = parse_int(t[1], where);
            if (id < 1 || id > bags || bag_seen[id - 1]) throw InputError(where + ": bad or repeated bag id");
            bag_seen[id - 1] = 1;
            VertexSet bag;
            for (std::size_t i = 2; i < t.size(); ++i) {
                long v = parse_int(t[i], where);
                if (v < 1 || v > out.thin_n) throw InputError(where + ": vertex out of range");
                bag.push_back(static_cast<int>(v - 1));
            }
            bag = normalized(bag);
            if (static_cast<long>(bag.size()) > width1) throw InputError(where + ": bag exceeds announced width");
            out.td.bags[id - 1] = bag;
        } else {
            if (t.size() != 2) throw InputError(where + ": expected a tree edge 'i j'");
            long a = parse_int(t[0], where), b = parse_int(t[1], where);
            if (a < 1 || b < 1 || a > bags || b > bags) throw InputError(where + ": tree edge out of range");
            out.td.tree_edges.emplace_back(static_cast<int>(a - 1), static_cast<int>(b - 1));
        }
    }
    if (!header) throw InputError("td: missing 's td' header");
    for (long i = 0; i < bags; ++i)
        if (!bag_seen[i]) throw InputError("td: bag " + std::to_string(i + 1) + " is missing");
    return out;
}

void write_pace_td(std::ostream& out, int n, const RawTreeDecomposition& td) {
    out << "s td " << td.bags.size() << ' ' << td.width() + 1 << ' ' << n << '\n';
    for (std::size_t i = 0; i < td.bags.size(); ++i) {
        out << "b " << i + 1;
        for (int v : td.bags[i]) out << ' ' << v + 1;
        out << '\n';
    }
    for (auto [a, b] : td.tree_edges) out << a + 1 << ' ' << b + 1 << '\n';
}

}  // namespace thick
