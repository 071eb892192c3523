// Command-line front end. Exit codes: 0 accepted / success, 1 rejected, 2 input or usage error.
#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>

#include "thick/chordal.hpp"
#include "thick/counting.hpp"
#include "thick/decomposition.hpp"
#include "thick/generators.hpp"
#include "thick/io.hpp"
#include "thick/oracles.hpp"
#include "thick/parameterized.hpp"
#include "thick/recognition.hpp"

using namespace thick;
using nlohmann::json;

namespace {

constexpr int kAccept = 0, kReject = 1, kError = 2;

int verdict(const RecognitionOutcome& r) {
    std::cout << outcome_to_json(r).dump() << '\n';
    return r.accepted ? kAccept : kReject;
}

json read_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw InputError(path + ": " + e.what());
    }
}

void write_file(const std::string& path, const std::function<void(std::ostream&)>& body) {
    if (path == "-") {
        body(std::cout);
        return;
    }
    std::ofstream out(path);
    if (!out) throw InputError("cannot write " + path);
    body(out);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Thick graph recognition and exact counting"};
    app.require_subcommand(1);
    int threads = 1;
    app.add_option("--threads", threads, "Worker threads for atom-level work")->check(CLI::PositiveNumber);

    std::string input;
    std::string cls;
    auto* recognize = app.add_subcommand("recognize", "Recognize a graph class");
    recognize->add_option("--class", cls, "Graph class")
        ->required()
        ->check(CLI::IsMember({"cobipartite", "chordal", "unipolar", "quasi-thick-forest", "thick-forest"}));
    recognize->add_option("graph", input, "Input .graph file")->required();

    int nu = 0;
    auto* fpt = app.add_subcommand("recognize-fpt", "Thick triangle-free recognition with at most nu thick vertices");
    fpt->add_option("--nu", nu, "Parameter")->required()->check(CLI::NonNegativeNumber);
    fpt->add_option("graph", input, "Input .graph file")->required();

    auto* decompose = app.add_subcommand("decompose", "Clique cutset decomposition as JSON");
    decompose->add_option("graph", input, "Input .graph file")->required();

    auto* count = app.add_subcommand("count", "Exact counts");
    count->require_subcommand(1);
    std::string weights_path, model_path, td_path;
    bool poly = false;
    long q = 0;
    auto* count_ind = count->add_subcommand("ind", "Weighted independent sets");
    count_ind->add_option("graph", input, "Input .graph file")->required();
    count_ind->add_option("--weights", weights_path, "Weights JSON");
    count_ind->add_flag("--poly", poly, "Print the independence polynomial coefficients");
    auto* count_col = count->add_subcommand("col", "Proper q-colourings");
    count_col->add_option("graph", input, "Input .graph file")->required();
    count_col->add_option("--q", q, "Number of colours")->required()->check(CLI::NonNegativeNumber);
    auto* count_tw = count->add_subcommand("ind-tw", "Independent sets by treewidth DP over a model");
    count_tw->add_option("graph", input, "Input .graph file")->required();
    count_tw->add_option("--model", model_path, "Model JSON")->required();
    count_tw->add_option("--td", td_path, "PACE .td of the thin graph")->required();

    auto* oracle = app.add_subcommand("oracle", "Brute-force reference values");
    oracle->require_subcommand(1);
    auto* o_ind = oracle->add_subcommand("ind", "Independent sets by enumeration");
    o_ind->add_option("graph", input)->required();
    auto* o_col = oracle->add_subcommand("col", "Colourings by enumeration");
    o_col->add_option("graph", input)->required();
    o_col->add_option("--q", q)->required()->check(CLI::NonNegativeNumber);
    auto* o_tf = oracle->add_subcommand("thick-forest", "Thick forest by 2-colouring search");
    o_tf->add_option("graph", input)->required();
    auto* o_mcs = oracle->add_subcommand("mcs", "Maximal clique separators by enumeration");
    o_mcs->add_option("graph", input)->required();

    auto* gen = app.add_subcommand("gen", "Generate graphs");
    gen->require_subcommand(1);
    int k = 0, t = 0, nh = 0, max_clique = 0;
    std::uint64_t seed = 0;
    double density = 0.5;
    std::string out_path = "-", model_out;
    std::vector<CLI::App*> gens;
    for (const char* name : {"cochain", "maxsepsb", "maxsepsc"}) {
        auto* s = gen->add_subcommand(name, std::string("Generate the ") + name + " graph");
        s->add_option("--k", k)->required();
        s->add_option("--out", out_path, ".graph output path ('-' for stdout)");
        gens.push_back(s);
    }
    auto* g_forb = gen->add_subcommand("forbinf", "Forbidden family member with t triangles");
    g_forb->add_option("--t", t)->required()->check(CLI::NonNegativeNumber);
    g_forb->add_option("--out", out_path);
    auto* g_rand = gen->add_subcommand("random-thick-forest", "Random thick forest with its model");
    g_rand->add_option("--seed", seed)->required();
    g_rand->add_option("--nh", nh, "Thin vertices")->required()->check(CLI::PositiveNumber);
    g_rand->add_option("--max-clique", max_clique)->required()->check(CLI::PositiveNumber);
    g_rand->add_option("--density", density)->check(CLI::Range(0.0, 1.0));
    g_rand->add_option("--out", out_path);
    g_rand->add_option("--model-out", model_out, "Model JSON output path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kError;
    }

    try {
        if (*recognize) {
            Graph g = read_graph_file(input).graph;
            if (cls == "cobipartite") return verdict(recognize_cobipartite_outcome(g));
            if (cls == "chordal") return verdict(recognize_chordal_outcome(g));
            if (cls == "unipolar") return verdict(recognize_unipolar_outcome(g));
            if (cls == "quasi-thick-forest") return verdict(recognize_quasi_outcome(g));
            return verdict(recognize_thick_forest(g));
        }
        if (*fpt) return verdict(recognize_fpt_trianglefree(read_graph_file(input).graph, nu));
        if (*decompose) {
            std::cout << decomposition_to_json(clique_cutset_decompose(read_graph_file(input).graph)).dump() << '\n';
            return kAccept;
        }
        if (*count_ind) {
            Graph g = read_graph_file(input).graph;
            std::vector<mpq_class> w;
            if (!weights_path.empty()) w = weights_from_json(read_json(weights_path));
            if (poly) {
                std::cout << polynomial_to_json(independence_polynomial(g, w)).dump() << '\n';
            } else {
                std::cout << rational_string(weighted_independent_sum(g, w)) << '\n';
            }
            return kAccept;
        }
        if (*count_col) {
            std::cout << count_colourings(read_graph_file(input).graph, q, threads).get_str() << '\n';
            return kAccept;
        }
        if (*count_tw) {
            Graph g = read_graph_file(input).graph;
            ThickModel m = model_from_json(read_json(model_path));
            std::ifstream in(td_path);
            if (!in) throw InputError("cannot open " + td_path);
            PaceTd pace = read_pace_td(in);
            if (pace.thin_n != m.thin_n) throw InputError("td vertex count differs from the model's thin_n");
            auto check = verify_model(g, m, ThinClass::Any);
            if (!check.ok) throw InputError("model: " + check.violation);
            auto nice = make_nice(m.thin_graph(), pace.td);
            std::cout << count_ind_treewidth(g, m, nice).get_str() << '\n';
            return kAccept;
        }
        if (*o_ind) {
            std::cout << brute_ind_count(read_graph_file(input).graph).get_str() << '\n';
            return kAccept;
        }
        if (*o_col) {
            std::cout << brute_col_count(read_graph_file(input).graph, q).get_str() << '\n';
            return kAccept;
        }
        if (*o_tf) {
            bool ok = brute_thick_forest(read_graph_file(input).graph);
            std::cout << json{{"accepted", ok}}.dump() << '\n';
            return ok ? kAccept : kReject;
        }
        if (*o_mcs) {
            std::cout << json(brute_max_clique_separators(read_graph_file(input).graph)).dump() << '\n';
            return kAccept;
        }
        if (*gen) {
            Graph g;
            if (*gens[0]) g = gen_cochain(k).graph;
            if (*gens[1]) g = gen_maxsepsb(k);
            if (*gens[2]) g = gen_maxsepsc(k);
            if (*g_forb) g = gen_forb_inf(t);
            if (*g_rand) {
                auto r = gen_random_thick_forest(seed, nh, max_clique, density);
                g = r.graph;
                if (!model_out.empty())
                    write_file(model_out, [&](std::ostream& o) { o << model_to_json(r.model).dump() << '\n'; });
            }
            write_file(out_path, [&](std::ostream& o) { write_graph(o, g); });
            return kAccept;
        }
    } catch (const ClassError& e) {
        std::cerr << "error: " << e.what() << '\n';
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
    } catch (const ResourceError& e) {
        std::cerr << "error: " << e.what() << '\n';
    } catch (const ContractError& e) {
        std::cerr << "error: " << e.what() << '\n';
    }
    return kError;
}
