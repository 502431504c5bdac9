#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "twistcode/bitmatrix.hpp"
#include "twistcode/codes.hpp"
#include "twistcode/graph.hpp"

namespace twistcode {

/// Strictly increasing vertex tuple [v0 ... vk].
using Simplex = std::vector<Vertex>;

/// The i-th face: the simplex with v_i removed.
Simplex face(const Simplex& simplex, std::size_t i);

/// Finite simplicial complex with ordered vertices. X(k) is sorted
/// lexicographically; that order fixes the coordinates of C_k.
class SimplicialComplex {
public:
    SimplicialComplex() = default;

    /// Downward closure of the given simplices. Vertex tuples may be unsorted
    /// but must not repeat a vertex. Every vertex 0..vertex_count-1 is a 0-simplex.
    static SimplicialComplex from_simplices(std::size_t vertex_count, std::span<const Simplex> simplices);
    static SimplicialComplex from_graph(const Graph& g);

    std::size_t vertex_count() const noexcept { return vertex_count_; }
    /// Largest k with X(k) nonempty, or -1 for the empty complex.
    int dimension() const noexcept { return static_cast<int>(by_dimension_.size()) - 1; }

    /// X(k); empty for k beyond the dimension.
    std::span<const Simplex> simplices(std::size_t k) const;
    /// f_k(X) = |X(k)|.
    std::size_t face_count(std::size_t k) const { return simplices(k).size(); }

    std::optional<std::size_t> index_of(const Simplex& simplex) const;
    /// Index in X(k-1) of the i-th face of X(k)[t].
    std::size_t face_index(std::size_t k, std::size_t t, std::size_t i) const { return faces_[k][t][i]; }

private:
    std::size_t vertex_count_ = 0;
    std::vector<std::vector<Simplex>> by_dimension_;
    std::vector<std::vector<std::vector<std::size_t>>> faces_;  // [k][t][i]
};

/// Full n-skeleton of the simplex on N vertices. Throws when the total
/// simplex count would exceed 10^6.
SimplicialComplex skeleton_complex(std::size_t vertex_count, std::size_t n);

/// Random 2-complex: each edge kept with probability edge_p, then each
/// triangle whose three edges are present kept with probability triangle_p.
SimplicialComplex random_complex(std::size_t vertex_count, double edge_p, double triangle_p, std::uint64_t seed);

/// Local system of finite-dimensional F2 spaces on a complex. Holds dim F(s)
/// for every simplex and the restriction F(t) -> F(t_i) for every simplex t
/// and face index i, as a dim F(t_i) x dim F(t) matrix. Longer composites are
/// never stored.
class LocalSystem {
public:
    LocalSystem() = default;
    /// All stalks zero-dimensional, all maps empty.
    explicit LocalSystem(const SimplicialComplex& complex);

    std::size_t stalk_dimension(std::size_t k, std::size_t t) const { return dims_.at(k).at(t); }
    void set_stalk_dimension(std::size_t k, std::size_t t, std::size_t dim) { dims_.at(k).at(t) = dim; }

    /// Restriction from X(k)[t] to its i-th face; k >= 1.
    const BitMatrix& restriction(std::size_t k, std::size_t t, std::size_t i) const {
        return maps_.at(k).at(t).at(i);
    }
    void set_restriction(std::size_t k, std::size_t t, std::size_t i, BitMatrix map) {
        maps_.at(k).at(t).at(i) = std::move(map);
    }

    /// dim C_k(X; F) = sum of stalk dimensions over X(k).
    std::size_t chain_dimension(std::size_t k) const;
    /// Coordinate offset of X(k)[t]'s block inside C_k.
    std::size_t chain_offset(std::size_t k, std::size_t t) const;

    /// Number of simplex dimensions covered (complex dimension + 1).
    std::size_t dimension_count() const noexcept { return dims_.size(); }

private:
    std::vector<std::vector<std::size_t>> dims_;
    std::vector<std::vector<std::vector<BitMatrix>>> maps_;
};

/// F(s) = F2^m everywhere, every restriction the identity.
LocalSystem constant_local_system(const SimplicialComplex& complex, std::size_t m = 1);

/// F(s) = F2^m with rho_s^t = g_s^{-1} g_t for a random invertible g per simplex.
/// Compatible by construction and isomorphic to the constant system.
LocalSystem gauge_local_system(const SimplicialComplex& complex, std::size_t m, std::uint64_t seed);

struct SystemCheck {
    enum class Status { valid, shape_mismatch, incompatible };
    Status status = Status::valid;
    std::string detail;

    explicit operator bool() const noexcept { return status == Status::valid; }
};

/// Checks every stored map's shape, then that for every simplex t and every
/// pair of faces sharing a codimension-2 face the two composites agree.
SystemCheck validate_local_system(const SimplicialComplex& complex, const LocalSystem& system);

/// Matrix of the twisted boundary C_k -> C_{k-1}, for 1 <= k <= dim + 1.
/// The (t_i, t) block is the restriction map. Over F2 the face signs are all +1.
BitMatrix boundary_matrix(const SimplicialComplex& complex, const LocalSystem& system, std::size_t k);

struct Homology {
    std::size_t dimension = 0;
    /// Cycles whose classes form a basis of H_k.
    std::vector<BitVector> representatives;
};

/// H_k(X; F). Throws ValidationError when the system is invalid.
Homology homology(const SimplicialComplex& complex, const LocalSystem& system, std::size_t k);

/// H_n(X; F2) as a code in F2^{f_n(X)}, n the top dimension of X.
LinearCode homology_code(const SimplicialComplex& complex, std::size_t n);

// Complex text format: "dim <k_max>" then one "s v0 ... vk" line per simplex;
// faces are added on load.
void write_complex(std::ostream& out, const SimplicialComplex& complex);
SimplicialComplex read_complex(std::istream& in);

// Local system text format: "system <levels>" (levels = dim + 1), then for each k a line
// "dims <k> d_0 d_1 ...", then for each k >= 1, simplex t and face i a line
// "rho <k> <t> <i>" followed by the map in matrix text format.
void write_local_system(std::ostream& out, const SimplicialComplex& complex, const LocalSystem& system);
LocalSystem read_local_system(std::istream& in, const SimplicialComplex& complex);

}  // namespace twistcode
