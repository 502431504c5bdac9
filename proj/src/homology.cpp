#include "twistcode/homology.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <set>

#include "twistcode/errors.hpp"
#include "twistcode/random.hpp"
#include "twistcode/text_io.hpp"

namespace twistcode {

Simplex face(const Simplex& simplex, std::size_t i) {
    Simplex out;
    out.reserve(simplex.size() - 1);
    for (std::size_t j = 0; j < simplex.size(); ++j) {
        if (j != i) out.push_back(simplex[j]);
    }
    return out;
}

// ---------------------------------------------------------------- complex

SimplicialComplex SimplicialComplex::from_simplices(std::size_t vertex_count, std::span<const Simplex> simplices) {
    std::vector<std::set<Simplex>> levels;
    auto add_closure = [&](auto&& self, const Simplex& s) -> void {
        const std::size_t k = s.size() - 1;
        if (levels.size() <= k) levels.resize(k + 1);
        if (!levels[k].insert(s).second || k == 0) return;
        for (std::size_t i = 0; i < s.size(); ++i) self(self, face(s, i));
    };
    for (Vertex v = 0; v < vertex_count; ++v) add_closure(add_closure, Simplex{v});
    for (auto s : simplices) {
        if (s.empty()) throw ValidationError("empty simplex");
        std::sort(s.begin(), s.end());
        if (std::adjacent_find(s.begin(), s.end()) != s.end()) throw ValidationError("simplex repeats a vertex");
        if (s.back() >= vertex_count) throw ValidationError("simplex vertex out of range");
        add_closure(add_closure, s);
    }

    SimplicialComplex complex;
    complex.vertex_count_ = vertex_count;
    for (auto& level : levels) complex.by_dimension_.emplace_back(level.begin(), level.end());
    complex.faces_.resize(complex.by_dimension_.size());
    for (std::size_t k = 1; k < complex.by_dimension_.size(); ++k) {
        const auto& below = complex.by_dimension_[k - 1];
        for (const auto& s : complex.by_dimension_[k]) {
            std::vector<std::size_t> indices(s.size());
            for (std::size_t i = 0; i < s.size(); ++i) {
                const auto f = face(s, i);
                indices[i] = static_cast<std::size_t>(std::lower_bound(below.begin(), below.end(), f) - below.begin());
            }
            complex.faces_[k].push_back(std::move(indices));
        }
    }
    return complex;
}

SimplicialComplex SimplicialComplex::from_graph(const Graph& g) {
    std::vector<Simplex> edges;
    edges.reserve(g.edge_count());
    for (const auto& e : g.edges()) edges.push_back({e.u, e.v});
    return from_simplices(g.vertex_count(), edges);
}

std::span<const Simplex> SimplicialComplex::simplices(std::size_t k) const {
    if (k >= by_dimension_.size()) return {};
    return by_dimension_[k];
}

std::optional<std::size_t> SimplicialComplex::index_of(const Simplex& simplex) const {
    if (simplex.empty()) return std::nullopt;
    const auto level = simplices(simplex.size() - 1);
    const auto it = std::lower_bound(level.begin(), level.end(), simplex);
    if (it == level.end() || *it != simplex) return std::nullopt;
    return static_cast<std::size_t>(it - level.begin());
}

namespace {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    std::uint64_t result = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        result = result * (n - k + i) / i;
        if (result > (std::uint64_t{1} << 40)) return result;
    }
    return result;
}

void subsets_of_size(std::size_t n, std::size_t size, Simplex& current, std::vector<Simplex>& out) {
    if (current.size() == size) {
        out.push_back(current);
        return;
    }
    const Vertex start = current.empty() ? 0 : current.back() + 1;
    for (Vertex v = start; v + (size - current.size()) <= n; ++v) {
        current.push_back(v);
        subsets_of_size(n, size, current, out);
        current.pop_back();
    }
}

}  // namespace

SimplicialComplex skeleton_complex(std::size_t vertex_count, std::size_t n) {
    if (n >= vertex_count) throw ValidationError("skeleton: need n < number of vertices");
    std::uint64_t total = 0;
    for (std::size_t k = 0; k <= n; ++k) total += binomial(vertex_count, k + 1);
    if (total > 1'000'000) throw ValidationError("skeleton: more than 10^6 simplices");
    std::vector<Simplex> top;
    Simplex scratch;
    subsets_of_size(vertex_count, n + 1, scratch, top);
    return SimplicialComplex::from_simplices(vertex_count, top);
}

SimplicialComplex random_complex(std::size_t vertex_count, double edge_p, double triangle_p, std::uint64_t seed) {
    Rng rng(seed);
    std::set<Edge> edges;
    std::vector<Simplex> simplices;
    for (Vertex u = 0; u < vertex_count; ++u) {
        for (Vertex v = u + 1; v < vertex_count; ++v) {
            if (rng.bernoulli(edge_p)) {
                edges.insert({u, v});
                simplices.push_back({u, v});
            }
        }
    }
    for (Vertex a = 0; a < vertex_count; ++a) {
        for (Vertex b = a + 1; b < vertex_count; ++b) {
            if (!edges.contains({a, b})) continue;
            for (Vertex c = b + 1; c < vertex_count; ++c) {
                if (edges.contains({a, c}) && edges.contains({b, c}) && rng.bernoulli(triangle_p)) {
                    simplices.push_back({a, b, c});
                }
            }
        }
    }
    return SimplicialComplex::from_simplices(vertex_count, simplices);
}

// ---------------------------------------------------------------- local systems

LocalSystem::LocalSystem(const SimplicialComplex& complex) {
    const auto levels = static_cast<std::size_t>(complex.dimension() + 1);
    dims_.resize(levels);
    maps_.resize(levels);
    for (std::size_t k = 0; k < levels; ++k) {
        dims_[k].assign(complex.face_count(k), 0);
        if (k > 0) maps_[k].assign(complex.face_count(k), std::vector<BitMatrix>(k + 1));
    }
}

std::size_t LocalSystem::chain_dimension(std::size_t k) const {
    if (k >= dims_.size()) return 0;
    std::size_t total = 0;
    for (const auto d : dims_[k]) total += d;
    return total;
}

std::size_t LocalSystem::chain_offset(std::size_t k, std::size_t t) const {
    std::size_t offset = 0;
    for (std::size_t s = 0; s < t; ++s) offset += dims_.at(k).at(s);
    return offset;
}

LocalSystem constant_local_system(const SimplicialComplex& complex, std::size_t m) {
    LocalSystem system(complex);
    for (std::size_t k = 0; k < system.dimension_count(); ++k) {
        for (std::size_t t = 0; t < complex.face_count(k); ++t) {
            system.set_stalk_dimension(k, t, m);
            if (k == 0) continue;
            for (std::size_t i = 0; i <= k; ++i) system.set_restriction(k, t, i, BitMatrix::identity(m));
        }
    }
    return system;
}

LocalSystem gauge_local_system(const SimplicialComplex& complex, std::size_t m, std::uint64_t seed) {
    if (m == 0) throw ValidationError("gauge system needs m >= 1");
    Rng rng(seed);
    auto random_invertible = [&] {
        for (;;) {
            BitMatrix g(m, m);
            for (std::size_t r = 0; r < m; ++r) {
                for (std::size_t c = 0; c < m; ++c) {
                    if (rng.bits() & 1U) g.set(r, c);
                }
            }
            if (auto inv = inverse(g)) return std::pair{g, *inv};
        }
    };

    LocalSystem system(complex);
    std::vector<std::vector<std::pair<BitMatrix, BitMatrix>>> gauge(system.dimension_count());
    for (std::size_t k = 0; k < system.dimension_count(); ++k) {
        for (std::size_t t = 0; t < complex.face_count(k); ++t) {
            system.set_stalk_dimension(k, t, m);
            gauge[k].push_back(random_invertible());
        }
    }
    for (std::size_t k = 1; k < system.dimension_count(); ++k) {
        for (std::size_t t = 0; t < complex.face_count(k); ++t) {
            for (std::size_t i = 0; i <= k; ++i) {
                const auto& face_inverse = gauge[k - 1][complex.face_index(k, t, i)].second;
                system.set_restriction(k, t, i, face_inverse * gauge[k][t].first);
            }
        }
    }
    return system;
}

namespace {

std::string describe(const Simplex& s) {
    std::string out = "[";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(s[i]);
    }
    return out + "]";
}

}  // namespace

SystemCheck validate_local_system(const SimplicialComplex& complex, const LocalSystem& system) {
    using Status = SystemCheck::Status;
    const auto levels = static_cast<std::size_t>(complex.dimension() + 1);
    if (system.dimension_count() != levels) {
        return {Status::shape_mismatch, "local system covers " + std::to_string(system.dimension_count()) +
                                            " dimensions, complex has " + std::to_string(levels)};
    }
    for (std::size_t k = 1; k < levels; ++k) {
        for (std::size_t t = 0; t < complex.face_count(k); ++t) {
            for (std::size_t i = 0; i <= k; ++i) {
                const auto& map = system.restriction(k, t, i);
                const auto rows = system.stalk_dimension(k - 1, complex.face_index(k, t, i));
                const auto cols = system.stalk_dimension(k, t);
                if (map.rows() != rows || map.cols() != cols) {
                    return {Status::shape_mismatch, "restriction from " + describe(complex.simplices(k)[t]) +
                                                        " to face " + std::to_string(i) + " is " +
                                                        std::to_string(map.rows()) + "x" +
                                                        std::to_string(map.cols()) + ", expected " +
                                                        std::to_string(rows) + "x" + std::to_string(cols)};
                }
            }
        }
    }
    // Removing v_i then v_j (i < j) is the same face as removing v_j then v_i;
    // in the first intermediate face v_j sits at position j - 1.
    for (std::size_t k = 2; k < levels; ++k) {
        for (std::size_t t = 0; t < complex.face_count(k); ++t) {
            for (std::size_t i = 0; i <= k; ++i) {
                for (std::size_t j = i + 1; j <= k; ++j) {
                    const auto via_i = complex.face_index(k, t, i);
                    const auto via_j = complex.face_index(k, t, j);
                    const auto lhs = system.restriction(k - 1, via_i, j - 1) * system.restriction(k, t, i);
                    const auto rhs = system.restriction(k - 1, via_j, i) * system.restriction(k, t, j);
                    if (lhs != rhs) {
                        return {Status::incompatible,
                                "restrictions from " + describe(complex.simplices(k)[t]) + " to " +
                                    describe(face(face(complex.simplices(k)[t], j), i)) +
                                    " disagree between the two intermediate faces"};
                    }
                }
            }
        }
    }
    return {};
}

BitMatrix boundary_matrix(const SimplicialComplex& complex, const LocalSystem& system, std::size_t k) {
    const auto top = static_cast<std::size_t>(std::max(complex.dimension(), 0));
    if (k == 0 || k > top + 1) {
        throw ValidationError("boundary index " + std::to_string(k) + " out of range 1.." + std::to_string(top + 1));
    }
    BitMatrix boundary(system.chain_dimension(k - 1), system.chain_dimension(k));
    if (k > top || complex.dimension() < 0) return boundary;

    std::vector<std::size_t> row_offset(complex.face_count(k - 1) + 1, 0);
    for (std::size_t s = 0; s < complex.face_count(k - 1); ++s) {
        row_offset[s + 1] = row_offset[s] + system.stalk_dimension(k - 1, s);
    }
    std::size_t col = 0;
    for (std::size_t t = 0; t < complex.face_count(k); ++t) {
        for (std::size_t i = 0; i <= k; ++i) {
            boundary.add_block(row_offset[complex.face_index(k, t, i)], col, system.restriction(k, t, i));
        }
        col += system.stalk_dimension(k, t);
    }
    return boundary;
}

Homology homology(const SimplicialComplex& complex, const LocalSystem& system, std::size_t k) {
    if (const auto check = validate_local_system(complex, system); !check) {
        throw ValidationError("invalid local system: " + check.detail);
    }
    if (complex.dimension() < 0 || k > static_cast<std::size_t>(complex.dimension())) return {};

    const auto chain_dim = system.chain_dimension(k);
    std::vector<BitVector> cycles;
    if (k == 0) {
        for (std::size_t i = 0; i < chain_dim; ++i) cycles.push_back(BitVector::unit(chain_dim, i));
    } else {
        cycles = kernel_basis(boundary_matrix(complex, system, k));
    }

    SpanBasis quotient(chain_dim);
    const auto boundaries = column_space_basis(boundary_matrix(complex, system, k + 1));
    for (const auto& b : boundaries) quotient.insert(b);

    Homology result;
    for (auto& z : cycles) {
        if (quotient.insert(z)) result.representatives.push_back(std::move(z));
    }
    result.dimension = result.representatives.size();
    return result;
}

LinearCode homology_code(const SimplicialComplex& complex, std::size_t n) {
    if (complex.dimension() < 0 || n > static_cast<std::size_t>(complex.dimension())) {
        throw ValidationError("homology_code: n exceeds the complex dimension");
    }
    if (n != static_cast<std::size_t>(complex.dimension())) {
        throw ValidationError("homology_code: n must be the top dimension so H_n is a subspace of C_n");
    }
    if (n == 0) return codes::full(complex.face_count(0));
    return LinearCode::from_parity_check(boundary_matrix(complex, constant_local_system(complex), n));
}

// ---------------------------------------------------------------- text formats

void write_complex(std::ostream& out, const SimplicialComplex& complex) {
    out << "dim " << complex.dimension() << '\n';
    for (std::size_t k = 0; k < static_cast<std::size_t>(complex.dimension() + 1); ++k) {
        for (const auto& s : complex.simplices(k)) {
            out << 's';
            for (const auto v : s) out << ' ' << v;
            out << '\n';
        }
    }
}

SimplicialComplex read_complex(std::istream& in) {
    LineReader reader(in);
    const auto header = reader.require_tokens("'dim <k_max>'");
    if (header.size() != 2 || header[0] != "dim") reader.fail("expected 'dim <k_max>'");
    const auto k_max = reader.to_size(header[1]);
    std::vector<Simplex> simplices;
    std::size_t vertex_count = 0;
    std::size_t largest = 0;
    while (auto tokens = reader.next_tokens()) {
        if (tokens->front() != "s" || tokens->size() < 2) reader.fail("expected 's v0 ... vk'");
        Simplex s;
        for (std::size_t i = 1; i < tokens->size(); ++i) s.push_back(static_cast<Vertex>(reader.to_size((*tokens)[i])));
        auto sorted = s;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) reader.fail("simplex repeats a vertex");
        if (s.size() - 1 > k_max) reader.fail("simplex dimension exceeds declared dim " + std::to_string(k_max));
        largest = std::max(largest, s.size() - 1);
        vertex_count = std::max<std::size_t>(vertex_count, sorted.back() + 1);
        simplices.push_back(std::move(s));
    }
    if (simplices.empty() || largest != k_max) {
        throw ParseError(reader.line(), "declared dim " + std::to_string(k_max) + " but largest simplex has dim " +
                                            std::to_string(largest));
    }
    return SimplicialComplex::from_simplices(vertex_count, simplices);
}

void write_local_system(std::ostream& out, const SimplicialComplex& complex, const LocalSystem& system) {
    out << "system " << system.dimension_count() << '\n';
    for (std::size_t k = 0; k < system.dimension_count(); ++k) {
        out << "dims " << k;
        for (std::size_t t = 0; t < complex.face_count(k); ++t) out << ' ' << system.stalk_dimension(k, t);
        out << '\n';
    }
    for (std::size_t k = 1; k < system.dimension_count(); ++k) {
        for (std::size_t t = 0; t < complex.face_count(k); ++t) {
            for (std::size_t i = 0; i <= k; ++i) {
                out << "rho " << k << ' ' << t << ' ' << i << '\n';
                write_matrix(out, system.restriction(k, t, i));
            }
        }
    }
}

LocalSystem read_local_system(std::istream& in, const SimplicialComplex& complex) {
    LineReader reader(in);
    const auto header = reader.require_tokens("'system <levels>'");
    if (header.size() != 2 || header[0] != "system") reader.fail("expected 'system <levels>'");
    const auto levels = reader.to_size(header[1]);
    if (levels != static_cast<std::size_t>(complex.dimension() + 1)) {
        reader.fail("system covers " + std::to_string(levels) + " dimensions, complex has " +
                    std::to_string(complex.dimension() + 1));
    }
    LocalSystem system(complex);
    for (std::size_t k = 0; k < levels; ++k) {
        const auto tokens = reader.require_tokens("'dims <k> ...'");
        if (tokens.size() != complex.face_count(k) + 2 || tokens[0] != "dims" || reader.to_size(tokens[1]) != k) {
            reader.fail("expected 'dims " + std::to_string(k) + "' with " + std::to_string(complex.face_count(k)) +
                        " entries");
        }
        for (std::size_t t = 0; t < complex.face_count(k); ++t) {
            system.set_stalk_dimension(k, t, reader.to_size(tokens[t + 2]));
        }
    }
    for (std::size_t k = 1; k < levels; ++k) {
        for (std::size_t t = 0; t < complex.face_count(k); ++t) {
            for (std::size_t i = 0; i <= k; ++i) {
                const auto tokens = reader.require_tokens("'rho <k> <t> <i>'");
                if (tokens.size() != 4 || tokens[0] != "rho" || reader.to_size(tokens[1]) != k ||
                    reader.to_size(tokens[2]) != t || reader.to_size(tokens[3]) != i) {
                    reader.fail("expected 'rho " + std::to_string(k) + ' ' + std::to_string(t) + ' ' +
                                std::to_string(i) + "'");
                }
                system.set_restriction(k, t, i, read_matrix(reader));
            }
        }
    }
    return system;
}

}  // namespace twistcode
