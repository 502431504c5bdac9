#include "twistcode/graph.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <numeric>
#include <ostream>
#include <queue>
#include <set>
#include <string>

#include <Eigen/Dense>

#include "twistcode/errors.hpp"
#include "twistcode/random.hpp"
#include "twistcode/text_io.hpp"

namespace twistcode {

Graph::Graph(std::size_t vertex_count, std::vector<Edge> edges) : adjacency_(vertex_count) {
    for (auto& e : edges) {
        if (e.u == e.v) throw ValidationError("loop at vertex " + std::to_string(e.u));
        if (e.u >= vertex_count || e.v >= vertex_count) {
            throw ValidationError("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                  "} has an endpoint outside 0.." + std::to_string(vertex_count));
        }
        if (e.u > e.v) std::swap(e.u, e.v);
    }
    std::sort(edges.begin(), edges.end());
    if (const auto dup = std::adjacent_find(edges.begin(), edges.end()); dup != edges.end()) {
        throw ValidationError("repeated edge {" + std::to_string(dup->u) + "," + std::to_string(dup->v) + "}");
    }
    for (const auto& e : edges) {
        adjacency_[e.u].push_back(e.v);
        adjacency_[e.v].push_back(e.u);
    }
    for (auto& list : adjacency_) std::sort(list.begin(), list.end());
    edges_ = std::move(edges);
}

std::span<const Vertex> Graph::neighbors(Vertex u) const {
    if (u >= adjacency_.size()) throw ValidationError("vertex " + std::to_string(u) + " out of range");
    return adjacency_[u];
}

std::optional<std::size_t> Graph::edge_index(Vertex u, Vertex v) const {
    if (u > v) std::swap(u, v);
    const Edge key{u, v};
    const auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
    if (it == edges_.end() || *it != key) return std::nullopt;
    return static_cast<std::size_t>(it - edges_.begin());
}

std::optional<std::size_t> regular_degree(const Graph& g) {
    if (g.vertex_count() == 0) return std::nullopt;
    const auto d = g.degree(0);
    for (Vertex u = 1; u < g.vertex_count(); ++u) {
        if (g.degree(u) != d) return std::nullopt;
    }
    return d;
}

std::vector<double> adjacency_spectrum(const Graph& g) {
    const auto n = static_cast<Eigen::Index>(g.vertex_count());
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
    for (const auto& e : g.edges()) {
        a(e.u, e.v) = 1.0;
        a(e.v, e.u) = 1.0;
    }
    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) throw DomainError("adjacency eigensolve did not converge");
    const auto& ascending = solver.eigenvalues();
    std::vector<double> descending(ascending.data(), ascending.data() + ascending.size());
    std::reverse(descending.begin(), descending.end());
    return descending;
}

SpectralSummary spectral_summary(const Graph& g) {
    if (g.vertex_count() < 2) throw ValidationError("spectral summary needs at least 2 vertices");
    const auto spectrum = adjacency_spectrum(g);
    const double second = spectrum[1];
    const double smallest = spectrum.back();
    return {spectrum.front(), second, smallest, std::max(std::abs(second), std::abs(smallest))};
}

double second_eigenvalue(const Graph& g) { return spectral_summary(g).second; }

std::optional<std::size_t> girth(const Graph& g) {
    const std::size_t n = g.vertex_count();
    std::size_t best = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> dist(n);
    std::vector<Vertex> parent(n);
    constexpr auto unseen = std::numeric_limits<std::size_t>::max();
    for (Vertex root = 0; root < n; ++root) {
        std::fill(dist.begin(), dist.end(), unseen);
        dist[root] = 0;
        parent[root] = root;
        std::queue<Vertex> frontier;
        frontier.push(root);
        while (!frontier.empty()) {
            const Vertex u = frontier.front();
            frontier.pop();
            // No shorter cycle through root can be found past this depth.
            if (2 * dist[u] + 1 >= best) break;
            for (const Vertex w : g.neighbors(u)) {
                if (dist[w] == unseen) {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    frontier.push(w);
                } else if (parent[u] != w) {
                    best = std::min(best, dist[u] + dist[w] + 1);
                }
            }
        }
    }
    if (best == std::numeric_limits<std::size_t>::max()) return std::nullopt;
    return best;
}

std::size_t component_count(const Graph& g) {
    std::vector<Vertex> root(g.vertex_count());
    std::iota(root.begin(), root.end(), Vertex{0});
    auto find = [&](Vertex x) {
        while (root[x] != x) x = root[x] = root[root[x]];
        return x;
    };
    std::size_t components = g.vertex_count();
    for (const auto& e : g.edges()) {
        const auto a = find(e.u);
        const auto b = find(e.v);
        if (a != b) {
            root[a] = b;
            --components;
        }
    }
    return components;
}

std::size_t cycle_space_dimension(const Graph& g) {
    return g.edge_count() + component_count(g) - g.vertex_count();
}

namespace graphs {

Graph complete(std::size_t n) {
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) edges.push_back({u, v});
    }
    return {n, std::move(edges)};
}

Graph cycle(std::size_t n) {
    if (n < 3) throw ValidationError("cycle needs at least 3 vertices");
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u) edges.push_back({u, static_cast<Vertex>((u + 1) % n)});
    return {n, std::move(edges)};
}

Graph path(std::size_t n) {
    std::vector<Edge> edges;
    for (Vertex u = 0; u + 1 < n; ++u) edges.push_back({u, u + 1});
    return {n, std::move(edges)};
}

Graph star(std::size_t leaves) {
    std::vector<Edge> edges;
    for (Vertex v = 1; v <= leaves; ++v) edges.push_back({0, v});
    return {leaves + 1, std::move(edges)};
}

Graph petersen() {
    std::vector<Edge> edges;
    for (Vertex i = 0; i < 5; ++i) {
        edges.push_back({i, (i + 1) % 5});          // outer cycle
        edges.push_back({i, i + 5});                // spokes
        edges.push_back({i + 5, (i + 2) % 5 + 5});  // inner pentagram
    }
    return {10, std::move(edges)};
}

Graph hypercube(std::size_t k) {
    if (k > 20) throw ValidationError("hypercube dimension too large");
    const std::size_t n = std::size_t{1} << k;
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u) {
        for (std::size_t b = 0; b < k; ++b) {
            const auto v = static_cast<Vertex>(u ^ (1U << b));
            if (u < v) edges.push_back({u, v});
        }
    }
    return {n, std::move(edges)};
}

Graph random_regular(std::size_t n, std::size_t d, std::uint64_t seed) {
    if ((n * d) % 2 != 0) throw ValidationError("random_regular: n*d must be even");
    if (d >= n && !(n == 0 && d == 0)) throw ValidationError("random_regular: need d < n");
    Rng rng(seed);
    for (int restart = 0; restart < 10000; ++restart) {
        std::vector<Vertex> points;
        points.reserve(n * d);
        for (Vertex u = 0; u < n; ++u) points.insert(points.end(), d, u);
        std::set<Edge> edges;
        bool stuck = false;
        while (!points.empty() && !stuck) {
            // A handful of draws; if none is admissible, fall back to a full scan
            // to tell a dead end from bad luck.
            bool placed = false;
            for (int tries = 0; tries < 64 && !placed; ++tries) {
                const auto i = rng.below(points.size());
                const auto j = rng.below(points.size());
                const Vertex a = points[i];
                const Vertex b = points[j];
                if (i == j || a == b) continue;
                const Edge e{std::min(a, b), std::max(a, b)};
                if (edges.contains(e)) continue;
                edges.insert(e);
                points.erase(points.begin() + static_cast<std::ptrdiff_t>(std::max(i, j)));
                points.erase(points.begin() + static_cast<std::ptrdiff_t>(std::min(i, j)));
                placed = true;
            }
            if (placed) continue;
            stuck = true;
            for (std::size_t i = 0; i < points.size() && stuck; ++i) {
                for (std::size_t j = i + 1; j < points.size(); ++j) {
                    const Edge e{std::min(points[i], points[j]), std::max(points[i], points[j])};
                    if (points[i] != points[j] && !edges.contains(e)) {
                        stuck = false;
                        break;
                    }
                }
            }
        }
        if (!stuck) return {n, std::vector<Edge>(edges.begin(), edges.end())};
    }
    throw DomainError("random_regular: no simple pairing after 10^4 restarts");
}

Graph random_graph(std::size_t n, std::size_t m, std::uint64_t seed) {
    if (n < 2 ? m > 0 : m > n * (n - 1) / 2) throw ValidationError("random_graph: too many edges");
    Rng rng(seed);
    std::set<Edge> edges;
    while (edges.size() < m) {
        const auto a = static_cast<Vertex>(rng.below(n));
        const auto b = static_cast<Vertex>(rng.below(n));
        if (a != b) edges.insert({std::min(a, b), std::max(a, b)});
    }
    return {n, std::vector<Edge>(edges.begin(), edges.end())};
}

}  // namespace graphs

void write_graph(std::ostream& out, const Graph& g) {
    out << "p " << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const auto& e : g.edges()) out << "e " << e.u << ' ' << e.v << '\n';
}

Graph read_graph(std::istream& in) {
    LineReader reader(in);
    const auto header = reader.require_tokens("'p <n> <m>'");
    if (header.size() != 3 || header[0] != "p") reader.fail("expected 'p <n> <m>'");
    const auto n = reader.to_size(header[1]);
    const auto m = reader.to_size(header[2]);
    std::vector<Edge> edges;
    edges.reserve(m);
    for (std::size_t i = 0; i < m; ++i) {
        const auto tokens = reader.require_tokens("'e <u> <v>'");
        if (tokens.size() != 3 || tokens[0] != "e") reader.fail("expected 'e <u> <v>'");
        const auto u = reader.to_size(tokens[1]);
        const auto v = reader.to_size(tokens[2]);
        if (u >= n || v >= n) reader.fail("edge endpoint out of range");
        if (u >= v) reader.fail("edge must be written with u < v");
        const Edge e{static_cast<Vertex>(u), static_cast<Vertex>(v)};
        if (!edges.empty() && !(edges.back() < e)) reader.fail("edges must be sorted and distinct");
        edges.push_back(e);
    }
    if (reader.next_tokens()) reader.fail("trailing content after " + std::to_string(m) + " edges");
    return {n, std::move(edges)};
}

}  // namespace twistcode
