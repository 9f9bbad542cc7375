// flowpoly command-line tool: build and inspect networks, query the flow
// polytope, run the choice-model transforms, and run the verification corpus.
// All output is JSON on stdout (DOT for `net dot`); exit codes: 0 success,
// 1 domain error (machine-readable error object), 2 usage error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "flowpoly/flowpoly.hpp"

namespace {

using flowpoly::Json;

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in) throw flowpoly::ParseError("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Json parse_json(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw flowpoly::ParseError(std::string("malformed JSON: ") + e.what());
    }
}

flowpoly::Network load_network(const std::string& path) {
    return flowpoly::network_from_json(parse_json(read_input(path)));
}

void emit(const Json& doc) { std::cout << doc.dump(2) << "\n"; }

int parse_int(const std::string& text, const char* what) {
    try {
        std::size_t used = 0;
        int v = std::stoi(text, &used);
        if (used != text.size()) throw std::invalid_argument(text);
        return v;
    } catch (const std::exception&) {
        throw flowpoly::ParseError(std::string("not an integer ") + what + ": \"" + text + "\"");
    }
}

int run(int argc, char** argv) {
    CLI::App app{"flow polytopes of acyclic networks: exact queries and cross-checks"};
    app.require_subcommand(1);

    std::string file, path_a, path_b, family, out_file = "-";
    std::string arc_a, arc_b, seeds = "1..50";
    int n = 0;

    CLI::App* net = app.add_subcommand("net", "network inspection");
    net->require_subcommand(1);
    CLI::App* net_reduce = net->add_subcommand("reduce", "arcs/nodes on s-t paths");
    CLI::App* net_corridors = net->add_subcommand("corridors", "corridor partition");
    CLI::App* net_dot = net->add_subcommand("dot", "DOT export");
    for (CLI::App* c : {net_reduce, net_corridors, net_dot})
        c->add_option("file", file, "network document (- for stdin)")->required();

    CLI::App* poly = app.add_subcommand("poly", "flow-polytope queries");
    poly->require_subcommand(1);
    CLI::App* poly_vertices = poly->add_subcommand("vertices", "all vertices (s-t paths)");
    CLI::App* poly_dimension = poly->add_subcommand("dimension", "polytope dimension");
    CLI::App* poly_facets = poly->add_subcommand("facets", "facet handles");
    CLI::App* poly_diameter = poly->add_subcommand("diameter", "skeleton diameter");
    CLI::App* poly_describe = poly->add_subcommand("describe", "minimum affine descriptions");
    CLI::App* poly_adj_v = poly->add_subcommand("adjacent-vertices", "vertex adjacency");
    CLI::App* poly_adj_f = poly->add_subcommand("adjacent-facets", "facet adjacency");
    for (CLI::App* c : {poly_vertices, poly_dimension, poly_facets, poly_diameter, poly_describe,
                        poly_adj_v, poly_adj_f})
        c->add_option("file", file, "network document (- for stdin)")->required();
    poly_adj_v->add_option("pathA", path_a, "comma-separated arc ids")->required();
    poly_adj_v->add_option("pathB", path_b, "comma-separated arc ids")->required();
    poly_adj_f->add_option("arcA", arc_a, "facet-defining arc id")->required();
    poly_adj_f->add_option("arcB", arc_b, "facet-defining arc id")->required();

    CLI::App* model = app.add_subcommand("model", "model networks");
    CLI::App* model_build = model->add_subcommand("build", "build a model network document");
    model_build->add_option("family", family, "lo|wo|io|so")->required();
    model_build->add_option("--n", n, "number of alternatives")->required();
    model_build->add_option("--out", out_file, "output file (default stdout)");
    model->require_subcommand(1);

    CLI::App* mcm = app.add_subcommand("mcm", "multiple choice model");
    mcm->require_subcommand(1);
    CLI::App* mcm_predict = mcm->add_subcommand("predict", "distribution -> choice table");
    CLI::App* mcm_bm = mcm->add_subcommand("bm-check", "Block-Marschak membership test");
    CLI::App* mcm_rho = mcm->add_subcommand("rho", "choice table -> arc vector");
    CLI::App* mcm_sigma = mcm->add_subcommand("sigma", "arc vector -> choice table");
    CLI::App* mcm_identify = mcm->add_subcommand("identify", "identifiability of a distribution");
    for (CLI::App* c : {mcm_predict, mcm_bm, mcm_rho, mcm_sigma, mcm_identify})
        c->add_option("file", file, "input document (- for stdin)")->required();

    CLI::App* verify = app.add_subcommand("verify", "verification suites");
    CLI::App* verify_corpus_cmd = verify->add_subcommand("corpus", "run every cross-check");
    verify_corpus_cmd->add_option("--seeds", seeds, "seed range A..B (default 1..50)");
    verify->require_subcommand(1);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        emit(Json{{"error", Json{{"kind", "usage"}, {"message", e.what()}}}});
        return 2;
    }

    if (*net_reduce) {
        flowpoly::Network network = load_network(file);
        flowpoly::ReducedNetwork red = flowpoly::reduce(network);
        Json dropped_arcs = Json::array(), dropped_nodes = Json::array();
        std::vector<char> node_kept(network.graph.node_count(), 0);
        for (int v : red.kept_nodes) node_kept[v] = 1;
        for (int a = 0; a < network.graph.arc_count(); ++a)
            if (!red.arc_kept[a]) dropped_arcs.push_back(a);
        for (int v = 0; v < network.graph.node_count(); ++v)
            if (!node_kept[v]) dropped_nodes.push_back(v);
        emit(Json{{"kept_arcs", red.kept_arcs},
                  {"kept_nodes", red.kept_nodes},
                  {"dropped_arcs", std::move(dropped_arcs)},
                  {"dropped_nodes", std::move(dropped_nodes)}});
    } else if (*net_corridors) {
        flowpoly::Network network = load_network(file);
        Json arr = Json::array();
        for (const flowpoly::Corridor& c : flowpoly::corridors(flowpoly::reduce(network)))
            arr.push_back(Json{{"arcs", c.arcs},
                               {"initial_node", c.initial_node},
                               {"terminal_node", c.terminal_node},
                               {"good", c.good}});
        emit(Json{{"corridors", std::move(arr)}});
    } else if (*net_dot) {
        std::cout << flowpoly::to_dot(load_network(file));
    } else if (*poly_vertices) {
        flowpoly::Network network = load_network(file);
        Json arr = Json::array();
        for (const flowpoly::Path& p : flowpoly::enumerate_paths(network))
            arr.push_back(flowpoly::path_to_json(p));
        emit(Json{{"count", arr.size()}, {"vertices", std::move(arr)}});
    } else if (*poly_dimension) {
        emit(Json{{"dimension", flowpoly::dimension(load_network(file))}});
    } else if (*poly_facets) {
        Json doc = flowpoly::facets_to_json(flowpoly::facets(load_network(file)));
        doc["count"] = doc["facets"].size();
        emit(doc);
    } else if (*poly_diameter) {
        emit(Json{{"diameter", flowpoly::skeleton_diameter(load_network(file))}});
    } else if (*poly_describe) {
        flowpoly::Network network = load_network(file);
        emit(Json{{"all_corridors",
                   flowpoly::affine_system_to_json(flowpoly::min_description(
                       network, flowpoly::DescriptionVariant::AllCorridors))},
                  {"facets_only",
                   flowpoly::affine_system_to_json(flowpoly::min_description(
                       network, flowpoly::DescriptionVariant::FacetsOnly))}});
    } else if (*poly_adj_v) {
        flowpoly::Network network = load_network(file);
        flowpoly::Path P = flowpoly::parse_path(path_a), Q = flowpoly::parse_path(path_b);
        bool adjacent = flowpoly::vertices_adjacent(network, P, Q);
        Json doc{{"adjacent", adjacent}};
        if (!adjacent) {
            auto [R, S] = flowpoly::nonadjacent_witness(network, P, Q);
            doc["witness"] = Json::array({flowpoly::path_to_json(R), flowpoly::path_to_json(S)});
        }
        emit(doc);
    } else if (*poly_adj_f) {
        flowpoly::Network network = load_network(file);
        int a = parse_int(arc_a, "arc id"), b = parse_int(arc_b, "arc id");
        flowpoly::ReducedNetwork red = flowpoly::reduce(network);
        std::vector<flowpoly::Corridor> cors = flowpoly::corridors(red);
        std::vector<int> cor_of = flowpoly::corridor_of_arc(cors, network.graph.arc_count());
        auto handle = [&](int arc) {
            if (arc < 0 || arc >= network.graph.arc_count())
                throw flowpoly::IndexError("arc id out of range: " + std::to_string(arc));
            if (cor_of[arc] < 0 || !cors[cor_of[arc]].good)
                throw flowpoly::NotFacetDefining("arc " + std::to_string(arc) +
                                                 " is not facet-defining");
            const flowpoly::Corridor& c = cors[cor_of[arc]];
            return flowpoly::FacetHandle{c, c.representative_arc()};
        };
        emit(Json{{"adjacent", flowpoly::facets_adjacent(network, handle(a), handle(b))}});
    } else if (*model_build) {
        flowpoly::Family fam;
        if (family == "lo") fam = flowpoly::Family::lo;
        else if (family == "wo") fam = flowpoly::Family::wo;
        else if (family == "io") fam = flowpoly::Family::io;
        else if (family == "so") fam = flowpoly::Family::so;
        else throw flowpoly::ParseError("unknown family: \"" + family + "\"");
        Json doc = flowpoly::network_to_json(flowpoly::build_model(fam, n).net);
        if (out_file == "-") {
            emit(doc);
        } else {
            std::ofstream out(out_file);
            if (!out) throw flowpoly::ParseError("cannot open file: " + out_file);
            out << doc.dump(2) << "\n";
        }
    } else if (*mcm_predict) {
        flowpoly::OrderDistribution d =
            flowpoly::distribution_from_json(parse_json(read_input(file)));
        emit(flowpoly::choice_table_to_json(flowpoly::predict(d)));
    } else if (*mcm_bm) {
        flowpoly::ChoiceProbabilities p =
            flowpoly::choice_table_from_json(parse_json(read_input(file)));
        Json q = Json::object();
        const flowpoly::Mask full = (flowpoly::Mask(1) << p.n) - 1;
        for (flowpoly::Mask T = 1; T <= full; ++T)
            for (int i = 1; i <= p.n; ++i)
                if (T & (flowpoly::Mask(1) << (i - 1)))
                    q[flowpoly::choice_key(i, T)] =
                        flowpoly::to_string(flowpoly::block_marschak(p, i, T));
        emit(Json{{"in_mcp", flowpoly::in_mcp(p)}, {"q", std::move(q)}});
    } else if (*mcm_rho) {
        flowpoly::ChoiceProbabilities p =
            flowpoly::choice_table_from_json(parse_json(read_input(file)));
        flowpoly::ModelNetwork lo = flowpoly::build_model(flowpoly::Family::lo, p.n);
        emit(Json{{"n", p.n},
                  {"r", flowpoly::rational_vector_to_json(flowpoly::rho(lo, p))}});
    } else if (*mcm_sigma) {
        Json doc = parse_json(read_input(file));
        if (!doc.is_object() || !doc.contains("r"))
            throw flowpoly::ParseError("sigma input needs an \"r\" array");
        flowpoly::RationalVector r = flowpoly::rational_vector_from_json(doc.at("r"));
        int found = 0;
        for (int k = 1; k <= 6; ++k)
            if (r.size() == std::size_t(k) << (k - 1)) found = k;
        if (doc.contains("n")) found = doc.at("n").get<int>();
        if (found == 0)
            throw flowpoly::ParseError("arc vector length matches no D_lo(n), n <= 6");
        flowpoly::ModelNetwork lo = flowpoly::build_model(flowpoly::Family::lo, found);
        if (r.size() != std::size_t(lo.net.graph.arc_count()))
            throw flowpoly::DimensionMismatch("arc vector length mismatch");
        emit(flowpoly::choice_table_to_json(flowpoly::sigma(lo, r)));
    } else if (*mcm_identify) {
        flowpoly::OrderDistribution d =
            flowpoly::distribution_from_json(parse_json(read_input(file)));
        flowpoly::IdentifyResult res = flowpoly::is_identified(d);
        Json doc{{"identified", res.identified}};
        if (!res.identified) {
            doc["U"] = flowpoly::mask_to_json(d.n, res.U);
            doc["triple"] = Json::array({res.i, res.j, res.k});
            doc["pair"] = Json::array({flowpoly::order_to_string(res.first),
                                       flowpoly::order_to_string(res.second)});
        }
        emit(doc);
    } else if (*verify_corpus_cmd) {
        std::size_t dots = seeds.find("..");
        if (dots == std::string::npos)
            throw flowpoly::ParseError("seed range must look like A..B");
        int lo = parse_int(seeds.substr(0, dots), "seed");
        int hi = parse_int(seeds.substr(dots + 2), "seed");
        flowpoly::VerifyReport report = flowpoly::verify_corpus(lo, hi);
        Json arr = Json::array();
        for (const flowpoly::CheckResult& c : report.checks)
            arr.push_back(Json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
        emit(Json{{"all_pass", report.all_pass()}, {"checks", std::move(arr)}});
        return report.all_pass() ? 0 : 1;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const flowpoly::CycleError& e) {
        emit(Json{{"error",
                   Json{{"kind", e.kind()}, {"message", e.what()}, {"cycle", e.cycle()}}}});
        return 1;
    } catch (const flowpoly::Error& e) {
        emit(Json{{"error", Json{{"kind", e.kind()}, {"message", e.what()}}}});
        return 1;
    } catch (const std::exception& e) {
        emit(Json{{"error", Json{{"kind", "internal"}, {"message", e.what()}}}});
        return 1;
    }
}
