#pragma once

#include "logrank/protocol/tree.hpp"

#include "json.hpp"

namespace logrank {

using ordered_json = nlohmann::ordered_json;

inline constexpr int kTreeSchemaVersion = 1;

namespace detail {

inline ordered_json node_to_json(const ProtocolTree& tree, std::size_t id) {
    const ProtocolNode& n = tree.nodes[id];
    ordered_json j;
    if (n.leaf) {
        j["type"] = "leaf";
        j["output"] = n.output;
        j["area"] = n.area;
        j["rank"] = n.rank;
        return j;
    }
    j["type"] = "internal";
    j["speaker"] = to_string(n.speaker);
    j["split"] = n.split;
    j["annotations"] = {{"area", n.note.area},     {"rank", n.note.rank},     {"rank_r", n.note.rank_r},
                        {"rank_s", n.note.rank_s}, {"q_rows", n.note.q_rows}, {"q_cols", n.note.q_cols},
                        {"delta", to_string(n.note.delta)}, {"forced", n.note.forced}};
    j["children"] = ordered_json::array({node_to_json(tree, n.children[0]), node_to_json(tree, n.children[1])});
    return j;
}

template <class T>
T field(const ordered_json& j, const char* key) {
    if (!j.contains(key)) throw ParseError(std::string("protocol tree: missing field '") + key + "'");
    try {
        return j.at(key).get<T>();
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("protocol tree: bad field '") + key + "': " + e.what());
    }
}

inline std::size_t node_from_json(const ordered_json& j, ProtocolTree& tree) {
    const std::size_t id = tree.nodes.size();
    tree.nodes.emplace_back();
    const auto type = field<std::string>(j, "type");
    if (type == "leaf") {
        ProtocolNode& n = tree.nodes[id];
        n.output = field<int>(j, "output");
        if (n.output != 0 && n.output != 1) throw ParseError("protocol tree: leaf output must be 0 or 1");
        n.area = field<std::size_t>(j, "area");
        n.rank = field<std::size_t>(j, "rank");
        return id;
    }
    if (type != "internal") throw ParseError("protocol tree: unknown node type '" + type + "'");
    const auto speaker = field<std::string>(j, "speaker");
    if (speaker != "row" && speaker != "column") throw ParseError("protocol tree: unknown speaker '" + speaker + "'");
    auto split = field<std::vector<std::size_t>>(j, "split");
    if (!std::is_sorted(split.begin(), split.end()) || split.empty())
        throw ParseError("protocol tree: split must be a nonempty sorted index array");
    const ordered_json& a = j.at("annotations");
    NodeAnnotation note;
    note.area = field<std::size_t>(a, "area");
    note.rank = field<std::size_t>(a, "rank");
    note.rank_r = field<std::size_t>(a, "rank_r");
    note.rank_s = field<std::size_t>(a, "rank_s");
    note.q_rows = field<std::size_t>(a, "q_rows");
    note.q_cols = field<std::size_t>(a, "q_cols");
    note.delta = parse_rational(field<std::string>(a, "delta"));
    note.forced = field<bool>(a, "forced");
    const auto& kids = j.at("children");
    if (!kids.is_array() || kids.size() != 2) throw ParseError("protocol tree: internal node needs two children");
    const std::size_t c0 = node_from_json(kids[0], tree);
    const std::size_t c1 = node_from_json(kids[1], tree);
    ProtocolNode& n = tree.nodes[id];
    n.leaf = false;
    n.speaker = speaker == "row" ? Speaker::Row : Speaker::Column;
    n.split = std::move(split);
    n.children = {c0, c1};
    n.area = note.area;
    n.rank = note.rank;
    n.note = std::move(note);
    return id;
}

}  // namespace detail

inline ordered_json tree_to_json(const ProtocolTree& tree) {
    ordered_json j;
    j["schema_version"] = kTreeSchemaVersion;
    j["rows"] = tree.rows;
    j["cols"] = tree.cols;
    j["leaves"] = tree.leaves();
    j["depth"] = tree.depth();
    j["root"] = detail::node_to_json(tree, 0);
    return j;
}

inline ProtocolTree tree_from_json(const ordered_json& j) {
    if (detail::field<int>(j, "schema_version") != kTreeSchemaVersion)
        throw ParseError("protocol tree: unsupported schema_version");
    ProtocolTree tree;
    tree.rows = detail::field<std::size_t>(j, "rows");
    tree.cols = detail::field<std::size_t>(j, "cols");
    if (!j.contains("root")) throw ParseError("protocol tree: missing root");
    detail::node_from_json(j.at("root"), tree);
    for (const auto& n : tree.nodes) {
        const std::size_t bound = n.speaker == Speaker::Row ? tree.rows : tree.cols;
        if (!n.leaf && n.split.back() >= bound) throw ParseError("protocol tree: split index out of range");
    }
    return tree;
}

inline ProtocolTree parse_tree(const std::string& text) {
    try {
        return tree_from_json(ordered_json::parse(text));
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("protocol tree: ") + e.what());
    }
}

}  // namespace logrank
