/*
 * SPDX-License-Identifier: Apache-2.0
 */
#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "sierpdom/graph.hpp"
#include "sierpdom/labeling.hpp"

namespace sierpdom {

/// Dot-separated decimal labels, e.g. "1.2.2". Unambiguous for any n.
std::string word_to_string(const Word& w);

/// Parses and validates a dot-separated word against g.
Word word_from_string(const GraphParams& g, std::string_view text);

/// One "u v" pair per line, u < v, lines sorted.
std::string to_edge_list(const GraphParams& g, std::uint64_t vertex_cap = default_vertex_cap);

/// Undirected DOT with quoted word names.
std::string to_dot(const GraphParams& g, std::uint64_t vertex_cap = default_vertex_cap);

/// {"n":..., "t":..., "vertices":[...], "edges":[[u,v],...]} , pretty-printed.
std::string graph_to_json(const GraphParams& g, std::uint64_t vertex_cap = default_vertex_cap);

enum class SetKind { dominating, dominating_star };

std::string set_kind_name(SetKind kind);  // "D" or "D_star"

/// {"kind":"D"|"D_star", "members":[...], "n":..., "t":...} with members
/// sorted; pretty-printed, keys sorted, byte-stable.
std::string vertex_set_to_json(const VertexSet& s, SetKind kind);

struct ParsedVertexSet {
    VertexSet set;
    SetKind kind;
};

ParsedVertexSet vertex_set_from_json(std::string_view text);

/// {"assignments":{"1.1":2,...}, "mode":..., "n":..., "t":..., "weight":...}
/// listing only nonzero values, keys sorted.
std::string labeling_to_json(const Labeling& f);

Labeling labeling_from_json(std::string_view text);

}  // namespace sierpdom
