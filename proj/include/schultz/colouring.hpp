#pragma once

#include <cstdlib>
#include <string>
#include <vector>

#include "json.hpp"
#include "schultz/error.hpp"
#include "schultz/graph.hpp"

namespace schultz {

/// A proper vertex colouring. zeta[v] is the subscript of v's colour, in
/// 1..k, and every colour in 1..k is used by at least one vertex.
struct colouring {
    std::vector<int> zeta;
    int k = 0;
    bool operator==(const colouring&) const = default;
};

enum class direction { minus, plus };

inline bool is_proper(const graph& g, const colouring& c) {
    if (static_cast<int>(c.zeta.size()) != g.vertex_count())
        fail(errc::length_mismatch, "colouring covers " + std::to_string(c.zeta.size()) +
                                        " vertices, graph has " + std::to_string(g.vertex_count()));
    for (int z : c.zeta)
        if (z < 1 || z > c.k)
            fail(errc::bad_params, "colour subscript " + std::to_string(z) + " outside 1.." +
                                       std::to_string(c.k));
    for (const auto& [u, v] : g.edges())
        if (c.zeta[static_cast<std::size_t>(u)] == c.zeta[static_cast<std::size_t>(v)]) return false;
    return true;
}

/// Colour-class sizes (theta(c_1), ..., theta(c_k)).
inline std::vector<int> colour_profile(const colouring& c) {
    std::vector<int> theta(static_cast<std::size_t>(c.k), 0);
    for (int z : c.zeta) {
        if (z < 1 || z > c.k)
            fail(errc::bad_params, "colour subscript " + std::to_string(z) + " outside 1.." +
                                       std::to_string(c.k));
        ++theta[static_cast<std::size_t>(z - 1)];
    }
    return theta;
}

/// Vertex cap for the exact searches; SCHULTZ_SEARCH_LIMIT overrides the
/// default of 24. All searches are exponential in the worst case.
inline int search_limit() {
    if (const char* s = std::getenv("SCHULTZ_SEARCH_LIMIT")) {
        char* end = nullptr;
        const long v = std::strtol(s, &end, 10);
        if (end != s && *end == '\0' && v >= 1) return static_cast<int>(v);
    }
    return 24;
}

namespace detail {

inline void check_search_size(const graph& g, int limit, const char* what) {
    const int cap = limit > 0 ? limit : search_limit();
    if (g.vertex_count() > cap)
        fail(errc::too_large, std::string(what) + " search capped at " + std::to_string(cap) +
                                  " vertices (override with SCHULTZ_SEARCH_LIMIT); graph has " +
                                  std::to_string(g.vertex_count()));
}

// Vertices sorted by degree descending (ties by index) — the usual order for
// the greedy bounds.
inline std::vector<int> by_degree_desc(const graph& g) {
    std::vector<int> order(static_cast<std::size_t>(g.vertex_count()));
    for (int v = 0; v < g.vertex_count(); ++v) order[static_cast<std::size_t>(v)] = v;
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return g.neighbours(a).size() > g.neighbours(b).size();
    });
    return order;
}

inline int greedy_clique_bound(const graph& g) {
    std::vector<char> in_clique(static_cast<std::size_t>(g.vertex_count()), 0);
    int size = 0;
    for (int v : by_degree_desc(g)) {
        int adjacent = 0;
        for (int w : g.neighbours(v)) adjacent += in_clique[static_cast<std::size_t>(w)];
        if (adjacent == size) {
            in_clique[static_cast<std::size_t>(v)] = 1;
            ++size;
        }
    }
    return size;
}

inline int greedy_colouring_bound(const graph& g) {
    std::vector<int> col(static_cast<std::size_t>(g.vertex_count()), 0);
    int used = 0;
    for (int v : by_degree_desc(g)) {
        std::vector<char> taken(static_cast<std::size_t>(used + 2), 0);
        for (int w : g.neighbours(v)) {
            const int cw = col[static_cast<std::size_t>(w)];
            if (cw > 0 && cw <= used + 1) taken[static_cast<std::size_t>(cw)] = 1;
        }
        int c = 1;
        while (taken[static_cast<std::size_t>(c)]) ++c;
        col[static_cast<std::size_t>(v)] = c;
        if (c > used) used = c;
    }
    return used;
}

// Backtracking k-colourability with the standard symmetry break: vertex 0 is
// fixed to colour 1 and a new colour may only follow all smaller ones.
inline bool k_colourable_rec(const graph& g, std::vector<int>& col, int v, int k, int max_used) {
    if (v == g.vertex_count()) return true;
    const int cap = std::min(k, max_used + 1);
    for (int c = 1; c <= cap; ++c) {
        bool ok = true;
        for (int w : g.neighbours(v))
            if (col[static_cast<std::size_t>(w)] == c) {
                ok = false;
                break;
            }
        if (!ok) continue;
        col[static_cast<std::size_t>(v)] = c;
        if (k_colourable_rec(g, col, v + 1, k, std::max(max_used, c))) return true;
        col[static_cast<std::size_t>(v)] = 0;
    }
    return false;
}

inline bool k_colourable(const graph& g, int k) {
    std::vector<int> col(static_cast<std::size_t>(g.vertex_count()), 0);
    return k_colourable_rec(g, col, 0, k, 0);
}

// Exact maximum independent set size; used as a cap on colour-class sizes
// when bounding the profile search.
inline void mis_rec(const graph& g, std::vector<char>& alive, int alive_count, int size, int& best) {
    if (size + alive_count <= best) return;
    if (alive_count == 0) {
        best = std::max(best, size);
        return;
    }
    int v = -1, vdeg = -1;
    for (int u = 0; u < g.vertex_count(); ++u) {
        if (!alive[static_cast<std::size_t>(u)]) continue;
        int deg = 0;
        for (int w : g.neighbours(u)) deg += alive[static_cast<std::size_t>(w)];
        if (deg > vdeg) {
            v = u;
            vdeg = deg;
        }
    }
    // isolated vertices always belong to an optimal set
    if (vdeg == 0) {
        best = std::max(best, size + alive_count);
        return;
    }
    std::vector<int> removed;
    alive[static_cast<std::size_t>(v)] = 0;
    for (int w : g.neighbours(v))
        if (alive[static_cast<std::size_t>(w)]) {
            alive[static_cast<std::size_t>(w)] = 0;
            removed.push_back(w);
        }
    mis_rec(g, alive, alive_count - 1 - static_cast<int>(removed.size()), size + 1, best);
    for (int w : removed) alive[static_cast<std::size_t>(w)] = 1;
    mis_rec(g, alive, alive_count - 1, size, best);
    alive[static_cast<std::size_t>(v)] = 1;
}

inline int max_independent_set(const graph& g) {
    std::vector<char> alive(static_cast<std::size_t>(g.vertex_count()), 1);
    int best = 0;
    mis_rec(g, alive, g.vertex_count(), 0, best);
    return best;
}

// Branch-and-bound over proper chi-colourings, maximizing the colour-class
// profile lexicographically in the requested reading order (theta_1.. for
// minus, theta_chi.. for plus). Vertices are assigned in index order with
// colours ascending, so complete colourings are visited in zeta-lex order and
// the first colouring attaining the optimal profile is the zeta-lex minimum.
class profile_searcher {
public:
    profile_searcher(const graph& g, int chi, direction dir)
        : g_(g),
          n_(g.vertex_count()),
          chi_(chi),
          dir_(dir),
          alpha_(max_independent_set(g)),
          zeta_(static_cast<std::size_t>(n_), 0),
          counts_(static_cast<std::size_t>(chi) + 1, 0),
          blocked_(static_cast<std::size_t>(n_), std::vector<int>(static_cast<std::size_t>(chi) + 1, 0)),
          compat_(static_cast<std::size_t>(chi) + 1, n_),
          uncoloured_(n_) {}

    colouring run() {
        dfs(0);
        return {best_zeta_, chi_};
    }

private:
    int read_colour(int idx) const { return dir_ == direction::minus ? idx + 1 : chi_ - idx; }

    void assign(int v, int c) {
        zeta_[static_cast<std::size_t>(v)] = c;
        ++counts_[static_cast<std::size_t>(c)];
        --uncoloured_;
        for (int j = 1; j <= chi_; ++j)
            if (blocked_[static_cast<std::size_t>(v)][static_cast<std::size_t>(j)] == 0)
                --compat_[static_cast<std::size_t>(j)];
        for (int w : g_.neighbours(v)) {
            if (zeta_[static_cast<std::size_t>(w)] != 0) continue;
            if (++blocked_[static_cast<std::size_t>(w)][static_cast<std::size_t>(c)] == 1)
                --compat_[static_cast<std::size_t>(c)];
        }
    }

    void unassign(int v, int c) {
        for (int w : g_.neighbours(v)) {
            if (zeta_[static_cast<std::size_t>(w)] != 0) continue;
            if (--blocked_[static_cast<std::size_t>(w)][static_cast<std::size_t>(c)] == 0)
                ++compat_[static_cast<std::size_t>(c)];
        }
        zeta_[static_cast<std::size_t>(v)] = 0;
        --counts_[static_cast<std::size_t>(c)];
        ++uncoloured_;
        for (int j = 1; j <= chi_; ++j)
            if (blocked_[static_cast<std::size_t>(v)][static_cast<std::size_t>(j)] == 0)
                ++compat_[static_cast<std::size_t>(j)];
    }

    // True if some completion of the current partial colouring could still
    // strictly beat the incumbent profile. Uses the budgeted per-colour upper
    // bound min(counts + compatible, alpha) read in profile order.
    bool can_beat_incumbent() const {
        for (int c = 1; c <= chi_; ++c)
            if (counts_[static_cast<std::size_t>(c)] == 0 && compat_[static_cast<std::size_t>(c)] == 0)
                return false; // a colour class can no longer be populated
        if (best_profile_.empty()) return true;
        int budget = uncoloured_;
        for (int idx = 0; idx < chi_; ++idx) {
            const int c = read_colour(idx);
            const int cap = std::min(counts_[static_cast<std::size_t>(c)] + compat_[static_cast<std::size_t>(c)], alpha_);
            const int extra = std::min(cap - counts_[static_cast<std::size_t>(c)], budget);
            const int optimistic = counts_[static_cast<std::size_t>(c)] + extra;
            budget -= extra;
            if (optimistic > best_profile_[static_cast<std::size_t>(idx)]) return true;
            if (optimistic < best_profile_[static_cast<std::size_t>(idx)]) return false;
        }
        return false; // at best a tie; earlier zeta-lex incumbent wins
    }

    void dfs(int v) {
        if (v == n_) {
            std::vector<int> profile(static_cast<std::size_t>(chi_));
            for (int idx = 0; idx < chi_; ++idx) {
                const int c = read_colour(idx);
                if (counts_[static_cast<std::size_t>(c)] == 0) return; // colour unused
                profile[static_cast<std::size_t>(idx)] = counts_[static_cast<std::size_t>(c)];
            }
            if (best_profile_.empty() || profile > best_profile_) {
                best_profile_ = std::move(profile);
                best_zeta_ = zeta_;
            }
            return;
        }
        for (int c = 1; c <= chi_; ++c) {
            if (blocked_[static_cast<std::size_t>(v)][static_cast<std::size_t>(c)] != 0) continue;
            assign(v, c);
            if (can_beat_incumbent()) dfs(v + 1);
            unassign(v, c);
        }
    }

    const graph& g_;
    int n_;
    int chi_;
    direction dir_;
    int alpha_;
    std::vector<int> zeta_;
    std::vector<int> counts_;
    std::vector<std::vector<int>> blocked_;
    std::vector<int> compat_;
    int uncoloured_;
    std::vector<int> best_profile_; // in reading order
    std::vector<int> best_zeta_;
};

} // namespace detail

/// Exact chromatic number by branch and bound: greedy clique lower bound,
/// greedy colouring upper bound, backtracking in between.
inline int chromatic_number(const graph& g, int limit = 0) {
    detail::check_search_size(g, limit, "chromatic number");
    if (g.edges().empty()) return 1; // connected and edgeless means a single vertex
    int lo = std::max(2, detail::greedy_clique_bound(g));
    const int hi = detail::greedy_colouring_bound(g);
    for (int k = lo; k < hi; ++k)
        if (detail::k_colourable(g, k)) return k;
    return hi;
}

namespace detail {

inline colouring optimal_colouring(const graph& g, direction dir, int limit) {
    check_search_size(g, limit, "optimal colouring");
    const int chi = chromatic_number(g, limit);
    profile_searcher search(g, chi, dir);
    return search.run();
}

} // namespace detail

/// Proper chi(G)-colouring whose profile (theta(c_1),...,theta(c_chi)) is
/// lexicographically maximal; ties are broken by the smallest zeta vector.
inline colouring chi_minus_colouring(const graph& g, int limit = 0) {
    return detail::optimal_colouring(g, direction::minus, limit);
}

/// Mirror optimization: profile read as (theta(c_chi),...,theta(c_1)).
inline colouring chi_plus_colouring(const graph& g, int limit = 0) {
    return detail::optimal_colouring(g, direction::plus, limit);
}

/// O(n) constructions of the canonical colourings the closed forms assume.
/// Paths and even cycles alternate colours 1,2 from vertex 0; odd cycles give
/// the last vertex colour 3; complete graphs colour vertex i with i+1; in a
/// complete bipartite graph the larger part gets colour 1. The plus direction
/// applies the corresponding colour interchange (1<->2, or 1<->3 for odd
/// cycles). A one-vertex graph admits only the trivial colouring.
inline colouring canonical_family_colouring(const family_spec& spec, direction dir) {
    const int n = spec.vertex_count();
    colouring out;
    switch (spec.kind) {
        case family_spec::family::path: {
            if (n == 1) return {{1}, 1};
            out.k = 2;
            for (int i = 0; i < n; ++i) out.zeta.push_back(i % 2 == 0 ? 1 : 2);
            if (dir == direction::plus)
                for (int& z : out.zeta) z = 3 - z;
            return out;
        }
        case family_spec::family::cycle: {
            if (n % 2 == 0) {
                out.k = 2;
                for (int i = 0; i < n; ++i) out.zeta.push_back(i % 2 == 0 ? 1 : 2);
                if (dir == direction::plus)
                    for (int& z : out.zeta) z = 3 - z;
                return out;
            }
            out.k = 3;
            for (int i = 0; i + 1 < n; ++i) out.zeta.push_back(i % 2 == 0 ? 1 : 2);
            out.zeta.push_back(3);
            if (dir == direction::plus)
                for (int& z : out.zeta) z = (z == 2) ? 2 : 4 - z;
            return out;
        }
        case family_spec::family::complete: {
            out.k = n;
            for (int i = 0; i < n; ++i) out.zeta.push_back(i + 1);
            return out;
        }
        case family_spec::family::complete_bipartite: {
            out.k = 2;
            const int large = (dir == direction::minus) ? 1 : 2;
            for (int i = 0; i < spec.n; ++i) out.zeta.push_back(large);
            for (int i = 0; i < spec.b; ++i) out.zeta.push_back(3 - large);
            return out;
        }
    }
    fail(errc::bad_params, "unknown family");
}

/// Every proper chi-colouring attaining the lexicographically maximal
/// profile, in zeta-lex order. Diagnostic tool; exhaustive, so the default
/// cap is strict.
inline std::vector<colouring> enumerate_optimal_colourings(const graph& g, int limit = 12) {
    if (g.vertex_count() > limit)
        fail(errc::too_large, "enumeration capped at " + std::to_string(limit) +
                                  " vertices; graph has " + std::to_string(g.vertex_count()));
    const int chi = chromatic_number(g, limit);
    const int n = g.vertex_count();

    std::vector<int> zeta(static_cast<std::size_t>(n), 0);
    std::vector<int> counts(static_cast<std::size_t>(chi) + 1, 0);
    std::vector<int> best;
    std::vector<colouring> out;

    auto dfs = [&](auto&& self, int v) -> void {
        if (v == n) {
            std::vector<int> profile(counts.begin() + 1, counts.end());
            for (int c : profile)
                if (c == 0) return;
            if (best.empty() || profile > best) {
                best = profile;
                out.clear();
            }
            if (profile == best) out.push_back({zeta, chi});
            return;
        }
        for (int c = 1; c <= chi; ++c) {
            bool ok = true;
            for (int w : g.neighbours(v))
                if (zeta[static_cast<std::size_t>(w)] == c) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            zeta[static_cast<std::size_t>(v)] = c;
            ++counts[static_cast<std::size_t>(c)];
            // keep ties: only prune branches that cannot even tie the incumbent
            bool viable = true;
            if (!best.empty()) {
                int budget = n - v - 1;
                for (int idx = 0; idx < chi; ++idx) {
                    const int have = counts[static_cast<std::size_t>(idx + 1)];
                    if (have + budget > best[static_cast<std::size_t>(idx)]) break; // could beat
                    if (have + budget < best[static_cast<std::size_t>(idx)]) {
                        viable = false;
                        break;
                    }
                    // tying at this position consumes the exact remainder
                    budget -= best[static_cast<std::size_t>(idx)] - have;
                }
            }
            if (viable) self(self, v + 1);
            --counts[static_cast<std::size_t>(c)];
            zeta[static_cast<std::size_t>(v)] = 0;
        }
    };
    dfs(dfs, 0);
    return out;
}

inline std::string colouring_to_json(const colouring& c) {
    nlohmann::ordered_json j;
    j["zeta"] = c.zeta;
    j["k"] = c.k;
    return j.dump();
}

inline colouring colouring_from_json(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        fail(errc::malformed_input, std::string("colouring JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("zeta") || !j.contains("k") || !j["zeta"].is_array() ||
        !j["k"].is_number_integer())
        fail(errc::malformed_input, "colouring JSON: expected {\"zeta\":[...],\"k\":<int>}");
    colouring c;
    c.k = j["k"].get<int>();
    for (const auto& z : j["zeta"]) {
        if (!z.is_number_integer()) fail(errc::malformed_input, "colouring JSON: zeta entries must be integers");
        c.zeta.push_back(z.get<int>());
    }
    return c;
}

} // namespace schultz
