#include "gpos/families.hpp"

#include <algorithm>
#include <string>

#include "gpos/errors.hpp"

namespace gpos {

std::optional<std::size_t> FamilySpec::expected_value(std::string_view invariant) const {
    for (const auto& [name, value] : expected)
        if (name == invariant) return value;
    return std::nullopt;
}

namespace {

std::vector<std::string> numeric_labels(std::size_t n) {
    std::vector<std::string> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back(std::to_string(i));
    return out;
}

/// Adds a clique on vertices [begin, end).
void add_clique(std::vector<Edge>& edges, std::size_t begin, std::size_t end) {
    for (std::size_t u = begin; u < end; ++u)
        for (std::size_t v = u + 1; v < end; ++v) edges.emplace_back(u, v);
}

void add_biclique(std::vector<Edge>& edges, std::size_t b1, std::size_t e1, std::size_t b2, std::size_t e2) {
    for (std::size_t u = b1; u < e1; ++u)
        for (std::size_t v = b2; v < e2; ++v) edges.emplace_back(u, v);
}

Family with_spec(Graph g, std::string name, std::vector<std::int64_t> params,
                 std::vector<std::pair<std::string, std::size_t>> expected) {
    Family f;
    f.labels = numeric_labels(g.order());
    f.graph = std::move(g);
    f.spec = FamilySpec{std::move(name), std::move(params), std::move(expected)};
    return f;
}

std::int64_t as_param(std::size_t x) { return static_cast<std::int64_t>(x); }

}  // namespace

namespace closed_form {

std::size_t lower_gp_cycle(std::size_t n) { return n % 2 == 0 ? 2 : 3; }

std::size_t lower_gp_multipartite(std::span<const std::size_t> parts) {
    return std::min(parts.size(), *std::min_element(parts.begin(), parts.end()));
}

std::size_t lower_gp_kneser(std::size_t n) {
    if (n == 3 || n == 6 || n == 7) return 3;
    if (n == 5 || n == 8 || n == 9) return 4;
    if (n == 10 || n == 11) return 5;
    return 6;
}

std::size_t lower_gp_line_complete(std::size_t n) { return n % 2 == 0 ? n / 2 : (n + 3) / 2; }

std::size_t lower_gp_rook(std::size_t r, std::size_t s) { return std::min(r, s); }

std::size_t gp_rook(std::size_t r, std::size_t s) { return r + s - 2; }

std::size_t lower_gp_direct(std::size_t r, std::size_t s) { return std::min({r, s, std::size_t{4}}); }

std::size_t lower_gp_gp_order(std::size_t a, std::size_t b) {
    const std::size_t half = b / 2;
    return b + (a > half ? std::max<std::size_t>(1, a - half) : 1);
}

}  // namespace closed_form

Family cycle(std::size_t n) {
    if (n < 3) throw InputError("cycle needs n >= 3");
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return with_spec(Graph::from_edges(n, edges), "cycle", {as_param(n)},
                     {{"gp-", closed_form::lower_gp_cycle(n)}});
}

Family path(std::size_t n) {
    if (n < 1) throw InputError("path needs n >= 1");
    std::vector<Edge> edges;
    for (std::size_t i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    std::vector<std::pair<std::string, std::size_t>> expected;
    expected.emplace_back("gp-", n >= 2 ? 2 : 1);
    return with_spec(Graph::from_edges(n, edges), "path", {as_param(n)}, std::move(expected));
}

Family complete(std::size_t n) {
    if (n < 1) throw InputError("complete graph needs n >= 1");
    return with_spec(complete_graph(n), "complete", {as_param(n)}, {{"gp-", n}, {"gp", n}});
}

Family complete_multipartite(std::span<const std::size_t> parts) {
    if (parts.empty()) throw InputError("complete multipartite graph needs at least one part");
    if (std::any_of(parts.begin(), parts.end(), [](std::size_t p) { return p == 0; }))
        throw InputError("part sizes must be positive");
    std::size_t n = 0;
    std::vector<std::size_t> start;
    for (std::size_t p : parts) {
        start.push_back(n);
        n += p;
    }
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (std::size_t j = i + 1; j < parts.size(); ++j)
            add_biclique(edges, start[i], start[i] + parts[i], start[j], start[j] + parts[j]);
    std::vector<std::int64_t> params;
    for (std::size_t p : parts) params.push_back(as_param(p));
    std::vector<std::pair<std::string, std::size_t>> expected;
    const bool formula_applies =
        parts.size() >= 2 && std::all_of(parts.begin(), parts.end(), [](std::size_t p) { return p >= 2; });
    if (formula_applies) expected.emplace_back("gp-", closed_form::lower_gp_multipartite(parts));
    return with_spec(Graph::from_edges(n, edges), "complete_multipartite", std::move(params), std::move(expected));
}

std::pair<std::size_t, std::size_t> kneser_pair(std::size_t n, Vertex index) {
    for (std::size_t a = 1; a <= n; ++a) {
        const std::size_t row = n - a;
        if (index < row) return {a, a + 1 + index};
        index -= row;
    }
    throw InputError("Kneser index out of range");
}

Family kneser_2(std::size_t n) {
    if (n < 3) throw InputError("K(n,2) needs n >= 3");
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t a = 1; a <= n; ++a)
        for (std::size_t b = a + 1; b <= n; ++b) pairs.emplace_back(a, b);
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < pairs.size(); ++i)
        for (std::size_t j = i + 1; j < pairs.size(); ++j) {
            const auto [a, b] = pairs[i];
            const auto [c, d] = pairs[j];
            if (a != c && a != d && b != c && b != d) edges.emplace_back(i, j);
        }
    Family f = with_spec(Graph::from_edges(pairs.size(), edges), "kneser_2", {as_param(n)},
                         {{"gp-", closed_form::lower_gp_kneser(n)}});
    for (std::size_t i = 0; i < pairs.size(); ++i)
        f.labels[i] = "{" + std::to_string(pairs[i].first) + "," + std::to_string(pairs[i].second) + "}";
    return f;
}

Family petersen() {
    const std::vector<Edge> edges{{0, 1}, {0, 4}, {1, 2}, {2, 3}, {3, 4}, {5, 6}, {5, 9}, {6, 7},
                                  {7, 8}, {8, 9}, {0, 5}, {1, 8}, {2, 6}, {3, 9}, {4, 7}};
    return with_spec(Graph::from_edges(10, edges), "petersen", {}, {{"gp", 6}, {"gp-", 4}, {"mp-", 2}});
}

Family realisation_gp_geodetic(std::size_t a, std::size_t b) {
    const bool join_branch = a >= 2 && a <= b;
    const bool clique_branch = b >= 4 && b < a;
    if (!join_branch && !clique_branch)
        throw InputError("no graph has gp- = " + std::to_string(a) + " and g = " + std::to_string(b) +
                         " (need 2 <= a <= b or 4 <= b <= a)");
    std::vector<Edge> edges;
    std::size_t n = 0;
    std::vector<std::string> labels;
    if (join_branch) {
        // bK_1 on 0..b-1, K_{a-1} on b..b+a-2.
        n = b + a - 1;
        add_clique(edges, b, n);
        add_biclique(edges, 0, b, b, n);
        for (std::size_t i = 0; i < b; ++i) labels.push_back("i" + std::to_string(i));
        for (std::size_t i = 0; i + 1 < a; ++i) labels.push_back("k" + std::to_string(i));
    } else {
        const std::size_t x = a - 2, y = b - 3;
        const std::size_t x1 = 0, x2 = x, y0 = 2 * x, w = 2 * x + y, z = w + 1;
        n = z + 1;
        add_clique(edges, x1, x1 + x);
        add_clique(edges, x2, x2 + x);
        add_clique(edges, y0, y0 + y);
        add_biclique(edges, x1, x1 + x, y0, y0 + y);
        for (std::size_t v = x2; v < x2 + x; ++v) edges.emplace_back(x1, v);
        for (std::size_t v = x1; v < x1 + x; ++v)
            if (v != x1) edges.emplace_back(x2, v);
        for (std::size_t v = x2; v < x2 + x; ++v) edges.emplace_back(w, v);
        for (std::size_t v = 0; v < z; ++v) edges.emplace_back(v, z);
        for (std::size_t i = 0; i < x; ++i) labels.push_back("X1." + std::to_string(i));
        for (std::size_t i = 0; i < x; ++i) labels.push_back("X2." + std::to_string(i));
        for (std::size_t i = 0; i < y; ++i) labels.push_back("Y." + std::to_string(i));
        labels.push_back("w");
        labels.push_back("z");
    }
    Family f = with_spec(Graph::from_edges(n, edges), "realisation_gp_geodetic", {as_param(a), as_param(b)},
                         {{"gp-", a}, {"geodetic", b}});
    f.labels = std::move(labels);
    return f;
}

std::size_t realisation_clique_split(std::size_t a, std::size_t b) {
    if (a < 2 || a >= b) throw InputError("need 2 <= a < b");
    for (std::size_t c = 1; c < a; ++c) {
        const std::size_t union_size = b - a + 2 * c;
        if (a <= union_size && union_size <= b) return c;
    }
    throw InputError("no admissible clique split");
}

Family realisation_gp_lower_gp(std::size_t a, std::size_t b) {
    const std::size_t c = realisation_clique_split(a, b);
    const std::size_t big = b - a + c, apex = a - c;
    const std::size_t n = c + big + apex;
    std::vector<Edge> edges;
    add_clique(edges, 0, c);
    add_clique(edges, c, c + big);
    add_clique(edges, c + big, n);
    add_biclique(edges, 0, c + big, c + big, n);
    return with_spec(Graph::from_edges(n, edges), "realisation_gp_lower_gp", {as_param(a), as_param(b)},
                     {{"gp-", a}, {"gp", b}});
}

Family size_extremal(std::size_t n, std::size_t k) {
    if (k < 2) throw InputError("size_extremal needs k >= 2");
    if (n < 2 * k - 1) throw InputError("size_extremal needs n >= 2k-1");
    std::vector<Edge> edges;
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v)
            if (!(u == 0 && v < k)) edges.emplace_back(u, v);
    return with_spec(Graph::from_edges(n, edges), "size_extremal", {as_param(n), as_param(k)},
                     {{"gp-", k}, {"edges", n * (n - 1) / 2 - k + 1}});
}

std::vector<std::size_t> hexagon_clique_sizes(std::size_t a, std::size_t b) {
    if (a < 2 || a >= b) throw InputError("hexagon_blowup needs 2 <= a < b");
    std::vector<std::size_t> sizes(6);
    if (a % 2 == 0) {
        sizes[0] = sizes[2] = a / 2;
        sizes[1] = sizes[3] = sizes[4] = sizes[5] = b - a / 2;
    } else {
        sizes[0] = (a + 1) / 2;
        sizes[2] = (a - 1) / 2;
        sizes[1] = sizes[3] = sizes[4] = sizes[5] = b - (a - 1) / 2;
    }
    if (std::any_of(sizes.begin(), sizes.end(), [](std::size_t s) { return s == 0; }))
        throw InputError("hexagon_blowup produced an empty clique");
    return sizes;
}

Family hexagon_blowup(std::size_t a, std::size_t b) {
    const auto sizes = hexagon_clique_sizes(a, b);
    std::vector<std::size_t> start(7, 0);
    for (std::size_t i = 0; i < 6; ++i) start[i + 1] = start[i] + sizes[i];
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < 6; ++i) {
        add_clique(edges, start[i], start[i + 1]);
        const std::size_t j = (i + 1) % 6;
        add_biclique(edges, start[i], start[i + 1], start[j], start[j + 1]);
    }
    Family f = with_spec(Graph::from_edges(start[6], edges), "hexagon_blowup", {as_param(a), as_param(b)},
                         {{"mp-", a}, {"gp-", b}});
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t v = start[i]; v < start[i + 1]; ++v)
            f.labels[v] = "W" + std::to_string(i) + "." + std::to_string(v - start[i]);
    return f;
}

Family z_graph(std::size_t w, std::size_t r, std::size_t s) {
    if (s < 1 || r < 1 || w < s) throw InputError("z_graph needs w >= s >= 1 and r >= 1");
    const std::size_t r0 = w, s1 = w + r, s2 = s1 + s, x1 = s2 + s, x2 = x1 + 1, n = x2 + 1;
    std::vector<Edge> edges;
    add_clique(edges, 0, x1);
    for (std::size_t v = s1; v < s2; ++v) edges.emplace_back(v, x1);
    for (std::size_t v = s2; v < x1; ++v) edges.emplace_back(v, x2);
    for (std::size_t v = r0; v < s1; ++v) {
        edges.emplace_back(v, x1);
        edges.emplace_back(v, x2);
    }
    Family f = with_spec(Graph::from_edges(n, edges), "z_graph", {as_param(w), as_param(r), as_param(s)},
                         {{"gp-", s + 2}, {"mp-", std::min(w + 2, r + s + 1)}});
    for (std::size_t v = 0; v < n; ++v) {
        if (v < r0) f.labels[v] = "W." + std::to_string(v);
        else if (v < s1) f.labels[v] = "R." + std::to_string(v - r0);
        else if (v < s2) f.labels[v] = "S1." + std::to_string(v - s1);
        else if (v < x1) f.labels[v] = "S2." + std::to_string(v - s2);
    }
    f.labels[x1] = "x1";
    f.labels[x2] = "x2";
    return f;
}

namespace {

void label_product(Family& f, std::size_t s) {
    for (std::size_t v = 0; v < f.graph.order(); ++v)
        f.labels[v] = "(" + std::to_string(v / s) + "," + std::to_string(v % s) + ")";
}

}  // namespace

Family rook(std::size_t r, std::size_t s) {
    if (r < 2 || s < 2) throw InputError("rook graph needs r, s >= 2");
    Family f = with_spec(cartesian_product(complete_graph(r), complete_graph(s)), "rook", {as_param(r), as_param(s)},
                         {{"gp-", closed_form::lower_gp_rook(r, s)}, {"gp", closed_form::gp_rook(r, s)}});
    label_product(f, s);
    return f;
}

Family direct_complete(std::size_t r, std::size_t s) {
    if (r < 2 || s < 2) throw InputError("direct product needs r, s >= 2");
    std::vector<std::pair<std::string, std::size_t>> expected;
    if (!(r == 2 && s == 2)) expected.emplace_back("gp-", closed_form::lower_gp_direct(r, s));
    Family f = with_spec(direct_product(complete_graph(r), complete_graph(s)), "direct_complete",
                         {as_param(r), as_param(s)}, std::move(expected));
    label_product(f, s);
    return f;
}

Family line_complete(std::size_t n) {
    if (n < 2) throw InputError("L(K_n) needs n >= 2");
    auto lg = line_graph(complete_graph(n));
    Family f = with_spec(std::move(lg.graph), "line_complete", {as_param(n)},
                         {{"gp-", closed_form::lower_gp_line_complete(n)}});
    for (std::size_t i = 0; i < lg.edge_of.size(); ++i)
        f.labels[i] = "{" + std::to_string(lg.edge_of[i].first) + "," + std::to_string(lg.edge_of[i].second) + "}";
    return f;
}

namespace {

std::size_t param(std::span<const std::int64_t> p, std::size_t i, std::string_view family) {
    if (p[i] < 0) throw InputError(std::string(family) + ": parameters must be non-negative");
    return static_cast<std::size_t>(p[i]);
}

void expect_count(std::span<const std::int64_t> p, std::size_t count, std::string_view family) {
    if (p.size() != count)
        throw InputError(std::string(family) + " takes " + std::to_string(count) + " parameter(s), got " +
                         std::to_string(p.size()));
}

}  // namespace

std::vector<std::string> family_names() {
    return {"cycle",          "path",          "complete",     "complete_multipartite",
            "kneser_2",       "petersen",      "realisation_gp_geodetic", "realisation_gp_lower_gp",
            "size_extremal",  "hexagon_blowup", "z_graph",     "rook",
            "direct_complete", "line_complete"};
}

Family make_family(std::string_view name, std::span<const std::int64_t> p) {
    auto one = [&](auto&& gen) {
        expect_count(p, 1, name);
        return gen(param(p, 0, name));
    };
    auto two = [&](auto&& gen) {
        expect_count(p, 2, name);
        return gen(param(p, 0, name), param(p, 1, name));
    };
    if (name == "cycle") return one(cycle);
    if (name == "path") return one(path);
    if (name == "complete") return one(complete);
    if (name == "kneser_2") return one(kneser_2);
    if (name == "line_complete") return one(line_complete);
    if (name == "petersen") {
        expect_count(p, 0, name);
        return petersen();
    }
    if (name == "complete_multipartite") {
        std::vector<std::size_t> parts;
        for (std::size_t i = 0; i < p.size(); ++i) parts.push_back(param(p, i, name));
        return complete_multipartite(parts);
    }
    if (name == "realisation_gp_geodetic") return two(realisation_gp_geodetic);
    if (name == "realisation_gp_lower_gp") return two(realisation_gp_lower_gp);
    if (name == "size_extremal") return two(size_extremal);
    if (name == "hexagon_blowup") return two(hexagon_blowup);
    if (name == "rook") return two(rook);
    if (name == "direct_complete") return two(direct_complete);
    if (name == "z_graph") {
        expect_count(p, 3, name);
        return z_graph(param(p, 0, name), param(p, 1, name), param(p, 2, name));
    }
    throw InputError("unknown family '" + std::string(name) + "'");
}

}  // namespace gpos
