#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

namespace twistcode {

using Vertex = std::uint32_t;

/// Undirected edge stored with u < v.
struct Edge {
    Vertex u;
    Vertex v;
    auto operator<=>(const Edge&) const = default;
};

/// Simple undirected graph on vertices 0..n-1. The numeric vertex order is the
/// fixed linear order used for simplex orientation; the sorted edge list fixes
/// the coordinates of F2^E; each neighbor list is ascending and fixes the
/// coordinates of F2^{Gamma(u)}.
class Graph {
public:
    Graph() = default;
    /// Canonicalizes and sorts the edges. Throws ValidationError on loops,
    /// repeated edges, or endpoints >= n.
    Graph(std::size_t vertex_count, std::vector<Edge> edges);

    std::size_t vertex_count() const noexcept { return adjacency_.size(); }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    std::span<const Edge> edges() const noexcept { return edges_; }

    /// Ascending neighbor ids. Throws ValidationError if u is out of range.
    std::span<const Vertex> neighbors(Vertex u) const;
    std::size_t degree(Vertex u) const { return neighbors(u).size(); }

    /// Coordinate of edge {u, v} in F2^E, if present.
    std::optional<std::size_t> edge_index(Vertex u, Vertex v) const;

    bool operator==(const Graph&) const = default;

private:
    std::vector<Edge> edges_;
    std::vector<std::vector<Vertex>> adjacency_;
};

/// d when every vertex has degree d.
std::optional<std::size_t> regular_degree(const Graph& g);

/// Full adjacency spectrum, sorted descending.
std::vector<double> adjacency_spectrum(const Graph& g);

/// Second entry of the descending adjacency spectrum (signed, with multiplicity).
/// Throws ValidationError when n < 2.
double second_eigenvalue(const Graph& g);

struct SpectralSummary {
    double largest;
    double second;            // signed second largest
    double smallest;
    double second_absolute;   // max(|second|, |smallest|)
};
SpectralSummary spectral_summary(const Graph& g);

/// Shortest cycle length, or nullopt for a forest.
std::optional<std::size_t> girth(const Graph& g);
std::size_t component_count(const Graph& g);
/// |E| - |V| + components.
std::size_t cycle_space_dimension(const Graph& g);

namespace graphs {

Graph complete(std::size_t n);
Graph cycle(std::size_t n);
Graph path(std::size_t n);
Graph star(std::size_t leaves);
Graph petersen();
Graph hypercube(std::size_t k);

/// d-regular simple graph from the pairing model. Points are matched one pair
/// at a time, rejecting pairs that would form a loop or repeat an edge; a dead
/// end restarts the whole pairing (at most 10^4 restarts).
Graph random_regular(std::size_t n, std::size_t d, std::uint64_t seed);

/// Uniform graph with exactly m distinct edges.
Graph random_graph(std::size_t n, std::size_t m, std::uint64_t seed);

}  // namespace graphs

// Graph text format: "p <n> <m>" then m lines "e <u> <v>", u < v, sorted.
void write_graph(std::ostream& out, const Graph& g);
Graph read_graph(std::istream& in);

}  // namespace twistcode
