#pragma once

#include <json.hpp>

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include "flowpoly/geometry.hpp"
#include "flowpoly/models.hpp"
#include "flowpoly/network.hpp"
#include "flowpoly/paths.hpp"
#include "flowpoly/rational.hpp"

// Serialization: network documents, DOT export, paths, orders, distributions,
// choice tables and affine systems. All numbers are rational strings ("3/7",
// lowest terms); no floating point appears in any format.

namespace flowpoly {

using Json = nlohmann::ordered_json;

// --- network documents ------------------------------------------------------

inline Json network_to_json(const Network& net) {
    Json doc;
    Json nodes = Json::array();
    for (int v = 0; v < net.graph.node_count(); ++v) nodes.push_back(net.graph.label(v));
    Json arcs = Json::array();
    for (const Arc& a : net.graph.arcs()) arcs.push_back(Json::array({a.tail, a.head}));
    doc["nodes"] = std::move(nodes);
    doc["arcs"] = std::move(arcs);
    doc["source"] = net.source;
    doc["sink"] = net.sink;
    return doc;
}

inline Network network_from_json(const Json& doc) {
    if (!doc.is_object() || !doc.contains("nodes") || !doc.contains("arcs") ||
        !doc.contains("source") || !doc.contains("sink"))
        throw ParseError("network document needs nodes, arcs, source, sink");
    std::vector<std::string> labels;
    for (const Json& v : doc.at("nodes")) {
        if (!v.is_string()) throw ParseError("node labels must be strings");
        labels.push_back(v.get<std::string>());
    }
    std::vector<std::pair<int, int>> arcs;
    for (const Json& a : doc.at("arcs")) {
        if (!a.is_array() || a.size() != 2 || !a[0].is_number_integer() ||
            !a[1].is_number_integer())
            throw ParseError("each arc must be an index pair [tail, head]");
        arcs.emplace_back(a[0].get<int>(), a[1].get<int>());
    }
    if (!doc.at("source").is_number_integer() || !doc.at("sink").is_number_integer())
        throw ParseError("source and sink must be node indices");
    const int node_count = int(labels.size());
    return Network(Digraph(node_count, arcs, std::move(labels)), doc.at("source").get<int>(),
                   doc.at("sink").get<int>());
}

/// DOT export: one line per arc, `"u" -> "v";`, labels quoted, arcs in id order.
inline std::string to_dot(const Network& net) {
    auto quote = [](const std::string& s) {
        std::string out = "\"";
        for (char c : s) {
            if (c == '"' || c == '\\') out += '\\';
            out += c;
        }
        return out + "\"";
    };
    std::ostringstream out;
    out << "digraph {\n";
    for (const Arc& a : net.graph.arcs())
        out << "  " << quote(net.graph.label(a.tail)) << " -> " << quote(net.graph.label(a.head))
            << ";\n";
    out << "}\n";
    return out.str();
}

// --- paths and arc vectors --------------------------------------------------

/// Comma-separated arc ids, e.g. "0,2,5".
inline Path parse_path(const std::string& text) {
    Path p;
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        try {
            std::size_t used = 0;
            int id = std::stoi(item, &used);
            if (used != item.size()) throw std::invalid_argument(item);
            p.arcs.push_back(id);
        } catch (const std::exception&) {
            throw ParseError("not an arc id list: \"" + text + "\"");
        }
    }
    if (p.arcs.empty()) throw ParseError("empty path: \"" + text + "\"");
    return p;
}

inline Json path_to_json(const Path& p) { return Json(p.arcs); }

inline Json rational_vector_to_json(const RationalVector& x) {
    Json arr = Json::array();
    for (const Rational& r : x) arr.push_back(to_string(r));
    return arr;
}

inline RationalVector rational_vector_from_json(const Json& arr) {
    if (!arr.is_array()) throw ParseError("expected an array of rational strings");
    RationalVector x;
    for (const Json& v : arr) {
        if (!v.is_string()) throw ParseError("rationals must be strings like \"3/7\"");
        x.push_back(parse_rational(v.get<std::string>()));
    }
    return x;
}

// --- orders and distributions -----------------------------------------------

/// Permutation string "1>2>3", best alternative first.
inline Order parse_order(const std::string& text) {
    Order order;
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, '>')) {
        try {
            std::size_t used = 0;
            int i = std::stoi(item, &used);
            if (used != item.size()) throw std::invalid_argument(item);
            order.push_back(i);
        } catch (const std::exception&) {
            throw ParseError("not an order: \"" + text + "\"");
        }
    }
    if (order.empty()) throw ParseError("empty order: \"" + text + "\"");
    return order;
}

inline std::string order_to_string(const Order& order) {
    std::string out;
    for (std::size_t k = 0; k < order.size(); ++k) {
        if (k) out += ">";
        out += std::to_string(order[k]);
    }
    return out;
}

/// {"orders": {"1>2>3": "1/2", ...}}; n is inferred from the order length.
inline OrderDistribution distribution_from_json(const Json& doc) {
    if (!doc.is_object() || !doc.contains("orders") || !doc.at("orders").is_object())
        throw ParseError("distribution document needs an \"orders\" object");
    OrderDistribution d{0, {}};
    for (const auto& [key, value] : doc.at("orders").items()) {
        Order order = parse_order(key);
        if (!value.is_string()) throw ParseError("masses must be rational strings");
        if (d.n == 0) d.n = int(order.size());
        d.support.emplace_back(std::move(order), parse_rational(value.get<std::string>()));
    }
    if (d.support.empty()) throw ParseError("distribution has empty support");
    validate_distribution(d);
    return d;
}

inline Json distribution_to_json(const OrderDistribution& d) {
    Json orders = Json::object();
    for (const auto& [order, mass] : d.support) orders[order_to_string(order)] = to_string(mass);
    return Json{{"orders", std::move(orders)}};
}

// --- choice tables ----------------------------------------------------------

inline std::string choice_key(int i, Mask S) {
    return std::to_string(i) + "|" + detail::set_label(S);
}

/// {"p": {"1|{1,2}": "1/3", ...}}, subsets in ascending element order.
/// The table must be complete: one entry per pair (i, S) with i in S.
inline ChoiceProbabilities choice_table_from_json(const Json& doc) {
    if (!doc.is_object() || !doc.contains("p") || !doc.at("p").is_object())
        throw ParseError("choice-table document needs a \"p\" object");
    const Json& table = doc.at("p");
    int n = 0;
    for (const auto& [key, value] : table.items()) {
        (void)value;
        std::size_t bar = key.find('|');
        if (bar == std::string::npos) throw ParseError("choice key must look like \"i|{...}\"");
        for (std::size_t pos = bar; pos < key.size(); ++pos)
            if (key[pos] >= '1' && key[pos] <= '9') n = std::max(n, key[pos] - '0');
    }
    if (n == 0) throw ParseError("choice table names no alternatives");
    ChoiceProbabilities p = ChoiceProbabilities::zero(n);
    std::size_t filled = 0;
    const Mask full = (Mask(1) << n) - 1;
    for (Mask S = 1; S <= full; ++S)
        for (int i = 1; i <= n; ++i) {
            if (!(S & (Mask(1) << (i - 1)))) continue;
            std::string key = choice_key(i, S);
            if (!table.contains(key)) throw ParseError("choice table is missing \"" + key + "\"");
            if (!table.at(key).is_string())
                throw ParseError("choice probabilities must be rational strings");
            p.at(S, i) = parse_rational(table.at(key).get<std::string>());
            ++filled;
        }
    if (filled != table.size()) throw ParseError("choice table has unexpected extra keys");
    return p;
}

inline Json choice_table_to_json(const ChoiceProbabilities& p) {
    Json table = Json::object();
    const Mask full = (Mask(1) << p.n) - 1;
    for (Mask S = 1; S <= full; ++S)
        for (int i = 1; i <= p.n; ++i)
            if (S & (Mask(1) << (i - 1))) table[choice_key(i, S)] = to_string(p.at(S, i));
    return Json{{"p", std::move(table)}};
}

// --- geometry output --------------------------------------------------------

inline Json affine_system_to_json(const AffineSystem& sys) {
    auto rows = [](const std::vector<std::pair<RationalVector, Rational>>& list) {
        Json arr = Json::array();
        for (const auto& [row, rhs] : list)
            arr.push_back(Json{{"row", rational_vector_to_json(row)}, {"rhs", to_string(rhs)}});
        return arr;
    };
    return Json{{"equalities", rows(sys.equalities)}, {"inequalities", rows(sys.inequalities)}};
}

inline Json facets_to_json(const FacetList& list) {
    Json arr = Json::array();
    for (const FacetHandle& f : list.facets)
        arr.push_back(Json{{"representative_arc", f.representative_arc},
                           {"corridor", f.corridor.arcs},
                           {"initial_node", f.corridor.initial_node},
                           {"terminal_node", f.corridor.terminal_node}});
    return Json{{"facets", std::move(arr)}, {"single_path", list.single_path}};
}

inline Json mask_to_json(int, Mask S) {
    Json arr = Json::array();
    for (int i = 0; S >> i; ++i)
        if (S & (Mask(1) << i)) arr.push_back(i + 1);
    return arr;
}

}  // namespace flowpoly
