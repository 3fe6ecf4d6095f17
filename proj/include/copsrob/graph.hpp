#pragma once

#include <climits>
#include <cstdint>
#include <deque>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "copsrob/bitset.hpp"

namespace copsrob {

// Simple undirected graph on vertices 0..n-1, immutable after construction.
// Adjacency is kept as one bitset row per vertex.
class Graph {
public:
    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges,
                            std::string name = {}) {
        if (n < 1) throw std::invalid_argument("graph needs at least one vertex");
        Graph g;
        g.n_ = n;
        g.name_ = std::move(name);
        g.adj_.assign(n, Bitset(n));
        for (auto [a, b] : edges) {
            if (a < 0 || a >= n || b < 0 || b >= n)
                throw std::invalid_argument("edge endpoint out of range");
            if (a == b) throw std::invalid_argument("self-loop not allowed");
            g.adj_[a].set(b);
            g.adj_[b].set(a);
        }
        return g;
    }

    int n() const { return n_; }
    const std::string& name() const { return name_; }
    bool has_edge(int a, int b) const { return adj_[a].test(b); }
    const Bitset& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return adj_[v].count(); }

    Bitset closed_neighbors(int v) const {
        Bitset b = adj_[v];
        b.set(v);
        return b;
    }

    int edge_count() const {
        int s = 0;
        for (int v = 0; v < n_; ++v) s += degree(v);
        return s / 2;
    }

    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        for (int v = 0; v < n_; ++v)
            for (int u = adj_[v].next(v + 1); u >= 0; u = adj_[v].next(u + 1))
                out.emplace_back(v, u);
        return out;
    }

private:
    int n_ = 0;
    std::vector<Bitset> adj_;
    std::string name_;
};

// ---------------------------------------------------------------------------
// generators

namespace gen {

inline Graph path(int n) {
    if (n < 1) throw std::invalid_argument("path: n >= 1");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph::from_edges(n, e, "P" + std::to_string(n));
}

inline Graph cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle: n >= 3");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return Graph::from_edges(n, e, "C" + std::to_string(n));
}

inline Graph complete(int n) {
    if (n < 1) throw std::invalid_argument("complete: n >= 1");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return Graph::from_edges(n, e, "K" + std::to_string(n));
}

inline Graph petersen() {
    // outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < 5; ++i) {
        e.emplace_back(i, (i + 1) % 5);
        e.emplace_back(5 + i, 5 + (i + 2) % 5);
        e.emplace_back(i, 5 + i);
    }
    return Graph::from_edges(10, e, "Petersen");
}

inline bool is_prime(int q) {
    if (q < 2) return false;
    for (int d = 2; d * d <= q; ++d)
        if (q % d == 0) return false;
    return true;
}

// Paley graph on GF(q), q prime with q = 1 mod 4: x ~ y iff x-y is a
// nonzero quadratic residue.
inline Graph paley(int q) {
    if (!is_prime(q) || q % 4 != 1)
        throw std::invalid_argument("paley: q must be a prime with q = 1 mod 4");
    std::vector<bool> residue(q, false);
    for (int x = 1; x < q; ++x) residue[int(int64_t(x) * x % q)] = true;
    std::vector<std::pair<int, int>> e;
    for (int a = 0; a < q; ++a)
        for (int b = a + 1; b < q; ++b)
            if (residue[(b - a) % q]) e.emplace_back(a, b);
    return Graph::from_edges(q, e, "Paley" + std::to_string(q));
}

}  // namespace gen

// ---------------------------------------------------------------------------
// metrics

inline std::vector<int> bfs_distances(const Graph& g, int source) {
    std::vector<int> dist(g.n(), -1);
    std::deque<int> q{source};
    dist[source] = 0;
    while (!q.empty()) {
        int v = q.front();
        q.pop_front();
        const Bitset& nb = g.neighbors(v);
        for (int u = nb.next(); u >= 0; u = nb.next(u + 1))
            if (dist[u] < 0) {
                dist[u] = dist[v] + 1;
                q.push_back(u);
            }
    }
    return dist;
}

inline bool is_connected(const Graph& g) {
    auto d = bfs_distances(g, 0);
    for (int v = 0; v < g.n(); ++v)
        if (d[v] < 0) return false;
    return true;
}

inline int eccentricity(const Graph& g, int v) {
    auto d = bfs_distances(g, v);
    int e = 0;
    for (int x : d) {
        if (x < 0) throw std::invalid_argument("eccentricity: graph disconnected");
        e = std::max(e, x);
    }
    return e;
}

inline int diameter(const Graph& g) {
    int d = 0;
    for (int v = 0; v < g.n(); ++v) d = std::max(d, eccentricity(g, v));
    return d;
}

inline int min_degree(const Graph& g) {
    int d = INT_MAX;
    for (int v = 0; v < g.n(); ++v) d = std::min(d, g.degree(v));
    return d;
}

// Sentinel returned by girth() on forests.
inline constexpr int kInfiniteGirth = INT_MAX;

// Shortest cycle length via BFS from every vertex. A non-tree edge seen at
// depth d closes a cycle of length d(u)+d(v)+1 through the BFS root.
inline int girth(const Graph& g) {
    int best = kInfiniteGirth;
    for (int s = 0; s < g.n(); ++s) {
        std::vector<int> dist(g.n(), -1), parent(g.n(), -1);
        std::deque<int> q{s};
        dist[s] = 0;
        while (!q.empty()) {
            int v = q.front();
            q.pop_front();
            if (2 * dist[v] >= best) break;
            const Bitset& nb = g.neighbors(v);
            for (int u = nb.next(); u >= 0; u = nb.next(u + 1)) {
                if (u == parent[v]) continue;
                if (dist[u] < 0) {
                    dist[u] = dist[v] + 1;
                    parent[u] = v;
                    q.push_back(u);
                } else {
                    best = std::min(best, dist[u] + dist[v] + 1);
                }
            }
        }
    }
    return best;
}

namespace gen {

// Hoffman-Singleton graph: 5 pentagons P_h and 5 pentagrams Q_i, with
// vertex j of P_h joined to vertex h*i+j mod 5 of Q_i. The construction is
// self-checked for order, regularity and girth.
inline Graph hoffman_singleton() {
    auto P = [](int h, int j) { return 5 * h + j; };        // pentagons: 0..24
    auto Q = [](int i, int j) { return 25 + 5 * i + j; };   // pentagrams: 25..49
    std::vector<std::pair<int, int>> e;
    for (int h = 0; h < 5; ++h)
        for (int j = 0; j < 5; ++j) {
            e.emplace_back(P(h, j), P(h, (j + 1) % 5));
            e.emplace_back(Q(h, j), Q(h, (j + 2) % 5));
        }
    for (int h = 0; h < 5; ++h)
        for (int i = 0; i < 5; ++i)
            for (int j = 0; j < 5; ++j) e.emplace_back(P(h, j), Q(i, (h * i + j) % 5));
    Graph g = Graph::from_edges(50, e, "HoffmanSingleton");
    if (g.edge_count() != 175 || min_degree(g) != 7 || girth(g) != 5)
        throw std::logic_error("hoffman_singleton: construction self-check failed");
    return g;
}

}  // namespace gen

// ---------------------------------------------------------------------------
// layer decomposition

// BFS layers N_0..N_e from a base vertex; the antipode is the lowest-index
// vertex in the farthest layer.
struct LayerDecomposition {
    int base = 0;
    int antipode = 0;
    std::vector<Bitset> layers;   // layers[i] = vertices at distance i
    std::vector<int> layer_of;    // distance from base, per vertex

    int eccentricity() const { return int(layers.size()) - 1; }

    // N_{>=i}: union of layers i..e (empty set when i > e)
    Bitset suffix_union(int i) const {
        Bitset b(int(layer_of.size()));
        for (size_t j = size_t(std::max(i, 0)); j < layers.size(); ++j) b |= layers[j];
        return b;
    }

    // union of layers lo..hi, clamped
    Bitset layer_range(int lo, int hi) const {
        Bitset b(int(layer_of.size()));
        for (int j = std::max(lo, 0); j <= std::min<int>(hi, eccentricity()); ++j)
            b |= layers[j];
        return b;
    }
};

inline LayerDecomposition distance_layers(const Graph& g, int u) {
    auto dist = bfs_distances(g, u);
    int ecc = 0;
    for (int v = 0; v < g.n(); ++v) {
        if (dist[v] < 0) throw std::invalid_argument("distance_layers: graph disconnected");
        ecc = std::max(ecc, dist[v]);
    }
    LayerDecomposition ld;
    ld.base = u;
    ld.layer_of = dist;
    ld.layers.assign(ecc + 1, Bitset(g.n()));
    for (int v = 0; v < g.n(); ++v) ld.layers[dist[v]].set(v);
    ld.antipode = ld.layers[ecc].next();
    return ld;
}

// Base vertex for the strategies: the lowest-index vertex whose eccentricity
// attains the diameter.
inline LayerDecomposition diameter_layers(const Graph& g) {
    int d = diameter(g);
    for (int u = 0; u < g.n(); ++u)
        if (eccentricity(g, u) == d) return distance_layers(g, u);
    throw std::logic_error("diameter_layers: unreachable");
}

// ---------------------------------------------------------------------------
// graph6

// Decode one graph6 line (n <= 62 uses a single length byte, larger n the
// 126-prefixed 18-bit form). A leading ">>graph6<<" header is tolerated.
inline Graph parse_graph6(const std::string& line_in) {
    std::string line = line_in;
    const std::string header = ">>graph6<<";
    if (line.rfind(header, 0) == 0) line = line.substr(header.size());
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.pop_back();
    if (line.empty()) throw std::invalid_argument("graph6: empty input");
    for (unsigned char c : line)
        if (c < 63 || c > 126)
            throw std::invalid_argument("graph6: byte out of range 63..126");

    size_t pos = 0;
    int64_t n;
    if (line[0] != 126) {
        n = line[0] - 63;
        pos = 1;
    } else {
        if (line.size() >= 2 && line[1] == 126)
            throw std::invalid_argument("graph6: n > 258047 unsupported");
        if (line.size() < 4) throw std::invalid_argument("graph6: truncated length field");
        n = (int64_t(line[1] - 63) << 12) | (int64_t(line[2] - 63) << 6) | int64_t(line[3] - 63);
        pos = 4;
    }
    if (n < 1 || n > 2000) throw std::invalid_argument("graph6: vertex count out of range");

    int64_t nbits = n * (n - 1) / 2;
    size_t need = size_t((nbits + 5) / 6);
    if (line.size() - pos != need)
        throw std::invalid_argument("graph6: body length mismatch");

    std::vector<std::pair<int, int>> e;
    int64_t bit = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++bit) {
            int byte = line[pos + size_t(bit / 6)] - 63;
            if ((byte >> (5 - bit % 6)) & 1) e.emplace_back(i, j);
        }
    return Graph::from_edges(int(n), e);
}

inline std::string encode_graph6(const Graph& g) {
    int n = g.n();
    std::string out;
    if (n <= 62) {
        out.push_back(char(n + 63));
    } else {
        out.push_back(char(126));
        out.push_back(char(((n >> 12) & 63) + 63));
        out.push_back(char(((n >> 6) & 63) + 63));
        out.push_back(char((n & 63) + 63));
    }
    int acc = 0, nb = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++nb == 6) {
                out.push_back(char(acc + 63));
                acc = nb = 0;
            }
        }
    if (nb > 0) out.push_back(char((acc << (6 - nb)) + 63));
    return out;
}

}  // namespace copsrob
