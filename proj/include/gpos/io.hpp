#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "gpos/families.hpp"
#include "gpos/graph.hpp"
#include "gpos/solvers.hpp"

namespace gpos {

/// graph6 short form covers orders 0..62.
inline constexpr std::size_t kGraph6MaxOrder = 62;

/// Decodes one graph6 line (a trailing newline is tolerated). Throws
/// ParseError with a byte offset, or CapacityError for the long form.
Graph parse_graph6(std::string_view text);
std::string emit_graph6(const Graph& g);

/// "n m" header then m lines "u v", 0-based. Blank lines are skipped.
/// Throws ParseError with a 1-based line number.
Graph parse_edge_list(std::string_view text);
/// Canonical form: header, then edges (u < v) in lexicographic order.
std::string emit_edge_list(const Graph& g);

enum class GraphFormat { graph6, edges };

/// Picks edges when the first non-blank line contains whitespace.
GraphFormat detect_format(std::string_view text);

struct GraphDocument {
    enum class Source { file, generator, inline_text };

    Graph graph;
    std::string label;
    Source source = Source::inline_text;
};

GraphDocument read_graph_document(std::string_view text, std::optional<GraphFormat> format, std::string label,
                                  GraphDocument::Source source);

/// {invariant, value, witness, nodes_explored, method}; value null when
/// undefined. `labels`, when given, adds "witness_labels".
nlohmann::json to_json(const InvariantReport& r, const std::vector<std::string>* labels = nullptr);
nlohmann::json to_json(const FamilySpec& spec);

}  // namespace gpos
