#pragma once

#include <algorithm>
#include <queue>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"
#include "schultz/error.hpp"

namespace schultz {

/// Parameters of one of the four supported graph families.
///
/// Complete bipartite specs are normalized so that a >= b; `n` holds the
/// larger part a and `b` the smaller part.
struct family_spec {
    enum class family { path, cycle, complete, complete_bipartite };

    family kind = family::path;
    int n = 0;
    int b = 0; // complete_bipartite only

    static family_spec path(int n) {
        if (n < 1) fail(errc::bad_params, "path needs n >= 1, got " + std::to_string(n));
        return {family::path, n, 0};
    }
    static family_spec cycle(int n) {
        if (n < 3) fail(errc::bad_params, "cycle needs n >= 3, got " + std::to_string(n));
        return {family::cycle, n, 0};
    }
    static family_spec complete(int n) {
        if (n < 1) fail(errc::bad_params, "complete graph needs n >= 1, got " + std::to_string(n));
        return {family::complete, n, 0};
    }
    static family_spec complete_bipartite(int a, int b) {
        if (a < 1 || b < 1)
            fail(errc::bad_params, "complete bipartite needs a, b >= 1, got a=" + std::to_string(a) +
                                       " b=" + std::to_string(b));
        if (a < b) std::swap(a, b);
        return {family::complete_bipartite, a, b};
    }

    int vertex_count() const {
        return kind == family::complete_bipartite ? n + b : n;
    }

    std::string description() const {
        switch (kind) {
            case family::path: return "path n=" + std::to_string(n);
            case family::cycle: return "cycle n=" + std::to_string(n);
            case family::complete: return "complete n=" + std::to_string(n);
            case family::complete_bipartite:
                return "complete-bipartite a=" + std::to_string(n) + " b=" + std::to_string(b);
        }
        return "?";
    }

    bool operator==(const family_spec&) const = default;
};

/// Simple undirected connected graph on vertices 0..n-1.
///
/// Construction deduplicates edges, rejects self-loops and out-of-range
/// endpoints, and verifies connectivity; every distance-based quantity in
/// this library assumes finite distances.
class graph {
public:
    graph(int n, std::vector<std::pair<int, int>> edge_list) : n_(n) {
        if (n < 1) fail(errc::bad_params, "graph needs at least one vertex");
        for (auto& [u, v] : edge_list) {
            if (u < 0 || u >= n || v < 0 || v >= n)
                fail(errc::out_of_range_vertex, "edge (" + std::to_string(u) + "," + std::to_string(v) +
                                                    ") outside 0.." + std::to_string(n - 1));
            if (u == v) fail(errc::self_loop, "vertex " + std::to_string(u));
            if (u > v) std::swap(u, v);
        }
        std::sort(edge_list.begin(), edge_list.end());
        edge_list.erase(std::unique(edge_list.begin(), edge_list.end()), edge_list.end());
        edges_ = std::move(edge_list);

        adj_.assign(static_cast<std::size_t>(n_), {});
        for (const auto& [u, v] : edges_) {
            adj_[static_cast<std::size_t>(u)].push_back(v);
            adj_[static_cast<std::size_t>(v)].push_back(u);
        }

        // connectivity check: BFS from 0 must reach everything
        std::vector<char> seen(static_cast<std::size_t>(n_), 0);
        std::queue<int> q;
        q.push(0);
        seen[0] = 1;
        int reached = 1;
        while (!q.empty()) {
            const int u = q.front();
            q.pop();
            for (int w : adj_[static_cast<std::size_t>(u)])
                if (!seen[static_cast<std::size_t>(w)]) {
                    seen[static_cast<std::size_t>(w)] = 1;
                    ++reached;
                    q.push(w);
                }
        }
        if (reached != n_)
            fail(errc::disconnected, "graph has " + std::to_string(n_ - reached) +
                                         " vertices unreachable from vertex 0");
    }

    int vertex_count() const { return n_; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::vector<int>& neighbours(int v) const { return adj_[static_cast<std::size_t>(v)]; }

    bool operator==(const graph& o) const { return n_ == o.n_ && edges_ == o.edges_; }

private:
    int n_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adj_;
};

inline graph generate(const family_spec& spec) {
    std::vector<std::pair<int, int>> edges;
    switch (spec.kind) {
        case family_spec::family::path:
            for (int i = 0; i + 1 < spec.n; ++i) edges.push_back({i, i + 1});
            return graph(spec.n, std::move(edges));
        case family_spec::family::cycle:
            for (int i = 0; i + 1 < spec.n; ++i) edges.push_back({i, i + 1});
            edges.push_back({spec.n - 1, 0});
            return graph(spec.n, std::move(edges));
        case family_spec::family::complete:
            for (int i = 0; i < spec.n; ++i)
                for (int j = i + 1; j < spec.n; ++j) edges.push_back({i, j});
            return graph(spec.n, std::move(edges));
        case family_spec::family::complete_bipartite:
            for (int i = 0; i < spec.n; ++i)
                for (int j = 0; j < spec.b; ++j) edges.push_back({i, spec.n + j});
            return graph(spec.n + spec.b, std::move(edges));
    }
    fail(errc::bad_params, "unknown family");
}

/// All-pairs shortest-path distances, by BFS from every vertex.
class distance_matrix {
public:
    explicit distance_matrix(const graph& g)
        : n_(g.vertex_count()), d_(static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_), -1) {
        for (int s = 0; s < n_; ++s) {
            at_ref(s, s) = 0;
            std::queue<int> q;
            q.push(s);
            while (!q.empty()) {
                const int u = q.front();
                q.pop();
                for (int w : g.neighbours(u))
                    if (at_ref(s, w) < 0) {
                        at_ref(s, w) = at_ref(s, u) + 1;
                        q.push(w);
                    }
            }
        }
        diameter_ = *std::max_element(d_.begin(), d_.end());
    }

    int size() const { return n_; }
    int at(int u, int v) const { return d_[static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(v)]; }
    int diameter() const { return diameter_; }

private:
    int& at_ref(int u, int v) { return d_[static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(v)]; }

    int n_;
    std::vector<int> d_;
    int diameter_ = 0;
};

inline distance_matrix distances(const graph& g) { return distance_matrix(g); }

namespace detail {

inline graph graph_from_json(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        fail(errc::malformed_input, std::string("graph JSON: ") + e.what());
    }
    if (!j.is_object()) fail(errc::malformed_input, "graph JSON: top level must be an object");
    if (!j.contains("n") || !j["n"].is_number_integer())
        fail(errc::malformed_input, "graph JSON: field \"n\" missing or not an integer");
    if (!j.contains("edges") || !j["edges"].is_array())
        fail(errc::malformed_input, "graph JSON: field \"edges\" missing or not an array");
    const int n = j["n"].get<int>();
    std::vector<std::pair<int, int>> edges;
    int idx = 0;
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
            fail(errc::malformed_input,
                 "graph JSON: edges[" + std::to_string(idx) + "] must be a pair of integers");
        edges.push_back({e[0].get<int>(), e[1].get<int>()});
        ++idx;
    }
    return graph(n, std::move(edges));
}

inline graph graph_from_text(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    auto next_line = [&]() -> bool {
        while (std::getline(in, line)) {
            ++lineno;
            if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
        }
        return false;
    };
    if (!next_line()) fail(errc::malformed_input, "empty graph input");
    std::istringstream header(line);
    int n = 0, m = 0;
    if (!(header >> n >> m))
        fail(errc::malformed_input, "line " + std::to_string(lineno) + ": expected \"n m\"");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < m; ++i) {
        if (!next_line())
            fail(errc::malformed_input, "expected " + std::to_string(m) + " edge lines, got " +
                                            std::to_string(i));
        std::istringstream row(line);
        int u = 0, v = 0;
        if (!(row >> u >> v))
            fail(errc::malformed_input, "line " + std::to_string(lineno) + ": expected \"u v\"");
        edges.push_back({u, v});
    }
    return graph(n, std::move(edges));
}

} // namespace detail

/// Accepts either the JSON form {"n":..,"edges":[[u,v],..]} or plain text
/// ("n m" header followed by m lines "u v").
inline graph parse_graph(std::string_view text) {
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) fail(errc::malformed_input, "empty graph input");
    if (text[first] == '{') return detail::graph_from_json(text);
    return detail::graph_from_text(text);
}

inline std::string serialize_graph(const graph& g) {
    nlohmann::ordered_json j;
    j["n"] = g.vertex_count();
    auto edges = nlohmann::ordered_json::array();
    for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
    j["edges"] = std::move(edges);
    return j.dump();
}

} // namespace schultz
