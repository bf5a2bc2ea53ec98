#include "gpos/io.hpp"

#include <charconv>

#include "gpos/errors.hpp"

namespace gpos {

namespace {

using Where = ParseError::Where;

std::string_view strip_newline(std::string_view s) {
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
    text = strip_newline(text);
    if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
    if (text.empty()) throw ParseError("empty graph6 string", Where::byte, 0);
    for (std::size_t i = 0; i < text.size(); ++i) {
        const auto c = static_cast<unsigned char>(text[i]);
        if (c < 63 || c > 126) throw ParseError("byte outside the graph6 range 63..126", Where::byte, i);
    }
    if (text[0] == 126) throw CapacityError("graph6 long form (n > 62) is not supported");
    const std::size_t n = static_cast<unsigned char>(text[0]) - 63;
    const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
    const std::size_t body = (bits + 5) / 6;
    if (text.size() < 1 + body) throw ParseError("truncated adjacency bits", Where::byte, text.size());
    if (text.size() > 1 + body) throw ParseError("trailing bytes after adjacency bits", Where::byte, 1 + body);

    std::vector<Edge> edges;
    std::size_t k = 0;
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = 0; i < j; ++i, ++k) {
            const auto byte = static_cast<unsigned>(static_cast<unsigned char>(text[1 + k / 6]) - 63);
            if ((byte >> (5 - k % 6)) & 1U) edges.emplace_back(i, j);
        }
    if (bits % 6 != 0) {
        const auto last = static_cast<unsigned>(static_cast<unsigned char>(text[body]) - 63);
        if ((last & ((1U << (6 - bits % 6)) - 1)) != 0) throw ParseError("nonzero padding bits", Where::byte, body);
    }
    return Graph::from_edges(n, edges);
}

std::string emit_graph6(const Graph& g) {
    const std::size_t n = g.order();
    if (n > kGraph6MaxOrder) throw CapacityError("graph6 short form holds at most 62 vertices");
    std::string out(1, static_cast<char>(63 + n));
    unsigned chunk = 0;
    std::size_t filled = 0;
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = 0; i < j; ++i) {
            chunk = (chunk << 1) | (g.adjacent(i, j) ? 1U : 0U);
            if (++filled == 6) {
                out.push_back(static_cast<char>(63 + chunk));
                chunk = 0;
                filled = 0;
            }
        }
    if (filled > 0) out.push_back(static_cast<char>(63 + (chunk << (6 - filled))));
    return out;
}

namespace {

struct Line {
    std::string_view text;
    std::size_t number;
};

std::vector<Line> content_lines(std::string_view text) {
    std::vector<Line> out;
    std::size_t number = 0;
    while (!text.empty()) {
        const std::size_t end = text.find('\n');
        std::string_view line = text.substr(0, end);
        ++number;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (line.find_first_not_of(" \t") != std::string_view::npos) out.push_back({line, number});
        if (end == std::string_view::npos) break;
        text.remove_prefix(end + 1);
    }
    return out;
}

/// Exactly two non-negative integers separated by blanks.
std::pair<std::size_t, std::size_t> two_numbers(const Line& line) {
    std::size_t values[2];
    std::string_view rest = line.text;
    for (auto& value : values) {
        const std::size_t start = rest.find_first_not_of(" \t");
        if (start == std::string_view::npos) throw ParseError("expected two integers", Where::line, line.number);
        rest.remove_prefix(start);
        const auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), value);
        if (ec != std::errc() || (ptr != rest.data() + rest.size() && *ptr != ' ' && *ptr != '\t'))
            throw ParseError("expected two integers", Where::line, line.number);
        rest.remove_prefix(static_cast<std::size_t>(ptr - rest.data()));
    }
    if (rest.find_first_not_of(" \t") != std::string_view::npos)
        throw ParseError("unexpected text after two integers", Where::line, line.number);
    return {values[0], values[1]};
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
    const auto lines = content_lines(text);
    if (lines.empty()) throw ParseError("missing 'n m' header", Where::line, 1);
    const auto [n, m] = two_numbers(lines[0]);
    if (lines.size() - 1 != m)
        throw ParseError("header promises " + std::to_string(m) + " edges but " + std::to_string(lines.size() - 1) +
                             " follow",
                         Where::line, lines.size() - 1 < m ? lines.back().number + 1 : lines[m + 1].number);
    std::vector<Edge> edges;
    edges.reserve(m);
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto [u, v] = two_numbers(lines[i]);
        if (u >= n || v >= n) throw ParseError("vertex out of range [0," + std::to_string(n) + ")", Where::line, lines[i].number);
        if (u == v) throw ParseError("loop edge", Where::line, lines[i].number);
        edges.emplace_back(u, v);
    }
    return Graph::from_edges(n, edges);
}

std::string emit_edge_list(const Graph& g) {
    std::string out = std::to_string(g.order()) + " " + std::to_string(g.size()) + "\n";
    for (auto [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

GraphFormat detect_format(std::string_view text) {
    for (const auto& line : content_lines(text))
        return line.text.find_first_of(" \t") != std::string_view::npos ? GraphFormat::edges : GraphFormat::graph6;
    return GraphFormat::edges;
}

GraphDocument read_graph_document(std::string_view text, std::optional<GraphFormat> format, std::string label,
                                  GraphDocument::Source source) {
    GraphDocument doc;
    doc.label = std::move(label);
    doc.source = source;
    const GraphFormat f = format.value_or(detect_format(text));
    if (f == GraphFormat::edges) {
        doc.graph = parse_edge_list(text);
    } else {
        const auto lines = content_lines(text);
        if (lines.size() != 1) throw ParseError("expected exactly one graph6 line", Where::byte, 0);
        doc.graph = parse_graph6(lines[0].text);
    }
    return doc;
}

nlohmann::json to_json(const InvariantReport& r, const std::vector<std::string>* labels) {
    nlohmann::json j;
    j["invariant"] = r.invariant;
    j["value"] = r.value ? nlohmann::json(*r.value) : nlohmann::json(nullptr);
    j["witness"] = r.witness.to_vector();
    j["nodes_explored"] = r.nodes_explored;
    j["method"] = to_string(r.method);
    if (labels != nullptr) {
        auto arr = nlohmann::json::array();
        r.witness.for_each([&](Vertex v) { arr.push_back(v < labels->size() ? (*labels)[v] : std::to_string(v)); });
        j["witness_labels"] = std::move(arr);
    }
    return j;
}

nlohmann::json to_json(const FamilySpec& spec) {
    nlohmann::json j;
    j["family"] = spec.family;
    j["params"] = spec.params;
    auto expected = nlohmann::json::object();
    for (const auto& [name, value] : spec.expected) expected[name] = value;
    j["expected"] = std::move(expected);
    return j;
}

}  // namespace gpos
