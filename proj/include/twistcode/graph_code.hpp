#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "twistcode/bitmatrix.hpp"
#include "twistcode/codes.hpp"
#include "twistcode/graph.hpp"
#include "twistcode/homology.hpp"

namespace twistcode {

/// One parity-check matrix A_u per vertex. Column j of A_u is w_{u v} for the
/// j-th neighbor v of u in ascending order. Matrices are kept as given, so
/// redundant rows are allowed.
class LocalCodeAssignment {
public:
    /// Throws ValidationError naming the first vertex whose column count differs
    /// from its degree.
    LocalCodeAssignment(const Graph& g, std::vector<BitMatrix> parity_checks);

    std::size_t vertex_count() const noexcept { return parity_checks_.size(); }
    const BitMatrix& parity_check(Vertex u) const { return parity_checks_.at(u); }
    const LinearCode& local_code(Vertex u) const { return codes_.at(u); }

private:
    std::vector<BitMatrix> parity_checks_;
    std::vector<LinearCode> codes_;
};

/// Builds the same kind of local code at every vertex from a spec string:
/// "parity", "hamming74", "repetition", "full", "zero", or "random:<k>".
/// Random codes use an independent stream per vertex derived from `seed`.
LocalCodeAssignment synthesize_assignment(const Graph& g, std::string_view spec, std::uint64_t seed);

// Assignment text format: for every vertex, "v <u> <rows> <cols>" followed by
// the matrix rows; columns follow the ascending neighbor order.
void write_assignment(std::ostream& out, const LocalCodeAssignment& assignment);
LocalCodeAssignment read_assignment(std::istream& in, const Graph& g);

/// The graph code C(G, {C_u}) in F2^E, coordinates in sorted edge order.
class GraphCodeInstance {
public:
    GraphCodeInstance(Graph graph, LocalCodeAssignment assignment);

    const Graph& graph() const noexcept { return graph_; }
    const LocalCodeAssignment& assignment() const noexcept { return assignment_; }
    /// Vertical stack of the per-vertex blocks: row block u, column uv holds w_uv.
    const BitMatrix& parity_check() const noexcept { return parity_check_; }
    const LinearCode& code() const noexcept { return code_; }

    /// (x_uv : v in Gamma(u)) in ascending neighbor order.
    BitVector local_view(const BitVector& x, Vertex u) const;
    /// Membership checked vertex by vertex against each local code.
    bool satisfies_local_codes(const BitVector& x) const;

private:
    Graph graph_;
    LocalCodeAssignment assignment_;
    BitMatrix parity_check_;
    LinearCode code_;
};

inline GraphCodeInstance build_graph_code(Graph g, LocalCodeAssignment assignment) {
    return {std::move(g), std::move(assignment)};
}

/// The twisted coefficient system on G: F(u) = L_u, the column space of A_u,
/// held in the basis B_u = column_space_basis(A_u); F(uv) = F2; the map
/// F(uv) -> F(u) sends 1 to the coordinates of w_uv in B_u.
struct TwistedRealization {
    SimplicialComplex complex;
    LocalSystem system;
    std::vector<std::vector<BitVector>> vertex_bases;
};

TwistedRealization build_local_system(const GraphCodeInstance& instance);

/// Per-vertex syndromes sum_v x_uv w_uv, expressed in the bases B_u.
std::vector<BitVector> boundary_evaluate(const GraphCodeInstance& instance, const TwistedRealization& realization,
                                         const BitVector& x);

struct PropositionVerdict {
    bool holds = false;
    std::size_t code_dimension = 0;
    std::size_t homology_dimension = 0;
    /// A vector in one subspace but not the other, when they differ.
    std::optional<BitVector> witness;
    std::string detail;
};

/// Compares C (kernel of the stacked parity matrix) with H_1(G; F) (kernel of
/// the twisted boundary) inside F2^E: equal dimensions and mutual containment.
PropositionVerdict verify_proposition(const GraphCodeInstance& instance);
PropositionVerdict verify_proposition(const GraphCodeInstance& instance, const TwistedRealization& realization);

/// 2r - 1.
Rational rate_bound(const Rational& local_rate);

/// ((delta - lambda/d) / (1 - lambda/d))^2, taken as 0 when delta <= lambda/d.
/// Throws ValidationError when lambda >= d or d == 0.
Rational distance_bound(const Rational& delta, const Rational& lambda, std::int64_t d);
double distance_bound(double delta, double lambda, std::size_t d);

}  // namespace twistcode
