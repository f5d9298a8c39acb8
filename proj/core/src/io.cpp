/*
 * SPDX-License-Identifier: Apache-2.0
 */
#include "sierpdom/io.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

namespace sierpdom {

namespace {

using nlohmann::json;

void require_whole_graph(const GraphParams& g, std::uint64_t cap, const char* op) {
    if (g.vertex_count() > cap) {
        throw capacity_error(std::string(op) + ": emitting " +
                             std::to_string(g.vertex_count()) +
                             " vertices exceeds the cap of " + std::to_string(cap));
    }
}

// Edges as sorted (u, v) rank pairs, u < v.
template <typename Fn>
void for_each_edge(const GraphParams& g, Fn&& fn) {
    std::vector<std::uint64_t> nbrs;
    for (std::uint64_t r = 0; r < g.vertex_count(); ++r) {
        nbrs.clear();
        neighbor_ranks(g, r, nbrs);
        std::sort(nbrs.begin(), nbrs.end());
        for (std::uint64_t y : nbrs) {
            if (y > r) fn(r, y);
        }
    }
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

GraphParams params_from_json(const json& j) {
    if (!j.contains("n") || !j.contains("t") || !j["n"].is_number_unsigned() ||
        !j["t"].is_number_unsigned()) {
        throw invalid_set_error("missing or malformed n/t fields");
    }
    return GraphParams(j["n"].get<std::uint32_t>(), j["t"].get<std::uint32_t>());
}

json parse(std::string_view text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw invalid_set_error("malformed JSON input");
    return j;
}

}  // namespace

std::string word_to_string(const Word& w) {
    std::string out;
    for (std::uint32_t i = 0; i < w.length(); ++i) {
        if (i) out += '.';
        out += std::to_string(w.at(i));
    }
    return out;
}

Word word_from_string(const GraphParams& g, std::string_view text) {
    std::vector<Label> labels;
    std::uint64_t current = 0;
    bool have_digit = false;
    for (char c : text) {
        if (c >= '0' && c <= '9') {
            current = current * 10 + static_cast<std::uint64_t>(c - '0');
            if (current > g.n()) {
                throw invalid_word_error("label out of range in '" + std::string(text) + "'");
            }
            have_digit = true;
        } else if (c == '.') {
            if (!have_digit) {
                throw invalid_word_error("empty label in '" + std::string(text) + "'");
            }
            labels.push_back(static_cast<Label>(current));
            current = 0;
            have_digit = false;
        } else {
            throw invalid_word_error("unexpected character in '" + std::string(text) + "'");
        }
    }
    if (!have_digit) throw invalid_word_error("empty label in '" + std::string(text) + "'");
    labels.push_back(static_cast<Label>(current));
    Word w(std::move(labels));
    validate_word(g, w);
    return w;
}

std::string to_edge_list(const GraphParams& g, std::uint64_t vertex_cap) {
    require_whole_graph(g, vertex_cap, "edge list");
    std::string out;
    for_each_edge(g, [&](std::uint64_t a, std::uint64_t b) {
        out += word_to_string(word_at_rank(g, a));
        out += ' ';
        out += word_to_string(word_at_rank(g, b));
        out += '\n';
    });
    return out;
}

std::string to_dot(const GraphParams& g, std::uint64_t vertex_cap) {
    require_whole_graph(g, vertex_cap, "dot export");
    std::string out = "graph {\n";
    for_each_edge(g, [&](std::uint64_t a, std::uint64_t b) {
        out += "  \"" + word_to_string(word_at_rank(g, a)) + "\" -- \"" +
               word_to_string(word_at_rank(g, b)) + "\";\n";
    });
    out += "}\n";
    return out;
}

std::string graph_to_json(const GraphParams& g, std::uint64_t vertex_cap) {
    require_whole_graph(g, vertex_cap, "json export");
    json j;
    j["n"] = g.n();
    j["t"] = g.t();
    json vertices = json::array();
    for (std::uint64_t r = 0; r < g.vertex_count(); ++r) {
        vertices.push_back(word_to_string(word_at_rank(g, r)));
    }
    j["vertices"] = std::move(vertices);
    json edges = json::array();
    for_each_edge(g, [&](std::uint64_t a, std::uint64_t b) {
        edges.push_back(json::array(
            {word_to_string(word_at_rank(g, a)), word_to_string(word_at_rank(g, b))}));
    });
    j["edges"] = std::move(edges);
    return dump(j);
}

std::string set_kind_name(SetKind kind) {
    return kind == SetKind::dominating ? "D" : "D_star";
}

std::string vertex_set_to_json(const VertexSet& s, SetKind kind) {
    json j;
    j["n"] = s.params().n();
    j["t"] = s.params().t();
    j["kind"] = set_kind_name(kind);
    json members = json::array();
    for (const Word& w : s) members.push_back(word_to_string(w));
    j["members"] = std::move(members);
    return dump(j);
}

ParsedVertexSet vertex_set_from_json(std::string_view text) {
    json j = parse(text);
    GraphParams g = params_from_json(j);
    if (!j.contains("kind") || !j["kind"].is_string()) {
        throw invalid_set_error("missing kind field");
    }
    const std::string kind_name = j["kind"].get<std::string>();
    SetKind kind;
    if (kind_name == "D") kind = SetKind::dominating;
    else if (kind_name == "D_star") kind = SetKind::dominating_star;
    else throw invalid_set_error("unknown kind '" + kind_name + "'");
    if (!j.contains("members") || !j["members"].is_array()) {
        throw invalid_set_error("missing members array");
    }
    std::vector<Word> words;
    words.reserve(j["members"].size());
    for (const json& m : j["members"]) {
        if (!m.is_string()) throw invalid_set_error("non-string member");
        words.push_back(word_from_string(g, m.get<std::string>()));
    }
    return {VertexSet::from_words(g, std::move(words)), kind};
}

std::string labeling_to_json(const Labeling& f) {
    json j;
    j["n"] = f.params().n();
    j["t"] = f.params().t();
    j["mode"] = f.mode() == LabelingMode::roman ? "roman" : "double_roman";
    j["weight"] = f.weight();
    json assignments = json::object();
    f.for_each_assignment([&](const Word& w, std::uint8_t value) {
        assignments[word_to_string(w)] = value;
    });
    j["assignments"] = std::move(assignments);
    return dump(j);
}

Labeling labeling_from_json(std::string_view text) {
    json j = parse(text);
    GraphParams g = params_from_json(j);
    if (!j.contains("mode") || !j["mode"].is_string()) {
        throw invalid_set_error("missing mode field");
    }
    const std::string mode_name = j["mode"].get<std::string>();
    LabelingMode mode;
    if (mode_name == "roman") mode = LabelingMode::roman;
    else if (mode_name == "double_roman") mode = LabelingMode::double_roman;
    else throw invalid_set_error("unknown mode '" + mode_name + "'");
    Labeling f(g, mode);
    if (!j.contains("assignments") || !j["assignments"].is_object()) {
        throw invalid_set_error("missing assignments object");
    }
    for (const auto& [key, value] : j["assignments"].items()) {
        if (!value.is_number_unsigned()) {
            throw invalid_set_error("non-integer assignment for '" + key + "'");
        }
        f.assign(word_from_string(g, key), value.get<std::uint8_t>());
    }
    if (j.contains("weight") && j["weight"].is_number_unsigned() &&
        j["weight"].get<std::uint64_t>() != f.weight()) {
        throw invalid_set_error("declared weight does not match assignments");
    }
    return f;
}

}  // namespace sierpdom
