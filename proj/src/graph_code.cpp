#include "twistcode/graph_code.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <ostream>

#include "twistcode/errors.hpp"
#include "twistcode/random.hpp"
#include "twistcode/text_io.hpp"

namespace twistcode {

LocalCodeAssignment::LocalCodeAssignment(const Graph& g, std::vector<BitMatrix> parity_checks)
    : parity_checks_(std::move(parity_checks)) {
    if (parity_checks_.size() != g.vertex_count()) {
        throw ValidationError("assignment has " + std::to_string(parity_checks_.size()) + " local codes for " +
                              std::to_string(g.vertex_count()) + " vertices");
    }
    codes_.reserve(parity_checks_.size());
    for (Vertex u = 0; u < g.vertex_count(); ++u) {
        if (parity_checks_[u].cols() != g.degree(u)) {
            throw ValidationError("vertex " + std::to_string(u) + ": local code length " +
                                  std::to_string(parity_checks_[u].cols()) + " does not match degree " +
                                  std::to_string(g.degree(u)));
        }
        codes_.push_back(LinearCode::from_parity_check(parity_checks_[u]));
    }
}

LocalCodeAssignment synthesize_assignment(const Graph& g, std::string_view spec, std::uint64_t seed) {
    std::vector<BitMatrix> checks;
    checks.reserve(g.vertex_count());
    for (Vertex u = 0; u < g.vertex_count(); ++u) {
        const auto deg = g.degree(u);
        auto prefix = [&] { return "vertex " + std::to_string(u) + " (degree " + std::to_string(deg) + "): "; };
        if (spec == "parity") {
            checks.push_back(codes::parity(deg).parity_check());
        } else if (spec == "hamming74") {
            if (deg != 7) throw ValidationError(prefix() + "hamming74 needs degree 7");
            checks.push_back(codes::hamming_7_4().parity_check());
        } else if (spec == "repetition") {
            checks.push_back(codes::repetition(deg).parity_check());
        } else if (spec == "full") {
            checks.push_back(codes::full(deg).parity_check());
        } else if (spec == "zero") {
            checks.push_back(codes::zero(deg).parity_check());
        } else if (spec.starts_with("random:")) {
            const auto digits = spec.substr(7);
            std::size_t k = 0;
            const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), k);
            if (ec != std::errc{} || ptr != digits.data() + digits.size()) {
                throw ValidationError("local code spec 'random:<k>' needs an integer k");
            }
            if (k > deg) throw ValidationError(prefix() + "random code dimension " + std::to_string(k) + " > degree");
            checks.push_back(codes::random_code(deg, k, Rng::derive(seed, u)).parity_check());
        } else {
            throw ValidationError("unknown local code spec '" + std::string(spec) +
                                  "' (expected parity, hamming74, repetition, full, zero, random:<k>)");
        }
    }
    return {g, std::move(checks)};
}

void write_assignment(std::ostream& out, const LocalCodeAssignment& assignment) {
    for (Vertex u = 0; u < assignment.vertex_count(); ++u) {
        const auto& a = assignment.parity_check(u);
        out << "v " << u << ' ' << a.rows() << ' ' << a.cols() << '\n';
        if (a.cols() > 0) out << a.to_string();
    }
}

LocalCodeAssignment read_assignment(std::istream& in, const Graph& g) {
    LineReader reader(in);
    std::vector<std::optional<BitMatrix>> seen(g.vertex_count());
    while (auto tokens = reader.next_tokens()) {
        if (tokens->size() != 4 || tokens->front() != "v") reader.fail("expected 'v <u> <rows> <cols>'");
        const auto u = reader.to_size((*tokens)[1]);
        const auto rows = reader.to_size((*tokens)[2]);
        const auto cols = reader.to_size((*tokens)[3]);
        if (u >= g.vertex_count()) reader.fail("vertex " + std::to_string(u) + " out of range");
        if (seen[u]) reader.fail("vertex " + std::to_string(u) + " assigned twice");
        seen[u] = read_matrix_rows(reader, rows, cols);
    }
    std::vector<BitMatrix> checks;
    checks.reserve(g.vertex_count());
    for (Vertex u = 0; u < g.vertex_count(); ++u) {
        if (!seen[u]) throw ValidationError("vertex " + std::to_string(u) + ": no local code assigned");
        checks.push_back(*std::move(seen[u]));
    }
    return {g, std::move(checks)};
}

namespace {

BitMatrix stacked_parity_check(const Graph& g, const LocalCodeAssignment& assignment) {
    std::size_t rows = 0;
    for (Vertex u = 0; u < g.vertex_count(); ++u) rows += assignment.parity_check(u).rows();
    BitMatrix h(rows, g.edge_count());
    std::size_t offset = 0;
    for (Vertex u = 0; u < g.vertex_count(); ++u) {
        const auto& a = assignment.parity_check(u);
        const auto neighbors = g.neighbors(u);
        for (std::size_t j = 0; j < neighbors.size(); ++j) {
            const auto edge = *g.edge_index(u, neighbors[j]);
            for (std::size_t r = 0; r < a.rows(); ++r) {
                if (a.get(r, j)) h.set(offset + r, edge);
            }
        }
        offset += a.rows();
    }
    return h;
}

}  // namespace

GraphCodeInstance::GraphCodeInstance(Graph graph, LocalCodeAssignment assignment)
    : graph_(std::move(graph)),
      assignment_(std::move(assignment)),
      parity_check_(stacked_parity_check(graph_, assignment_)),
      code_(LinearCode::from_parity_check(parity_check_)) {}

BitVector GraphCodeInstance::local_view(const BitVector& x, Vertex u) const {
    if (x.size() != graph_.edge_count()) throw DimensionMismatch("edge vector length must equal |E|");
    const auto neighbors = graph_.neighbors(u);
    BitVector view(neighbors.size());
    for (std::size_t j = 0; j < neighbors.size(); ++j) {
        if (x.get(*graph_.edge_index(u, neighbors[j]))) view.set(j);
    }
    return view;
}

bool GraphCodeInstance::satisfies_local_codes(const BitVector& x) const {
    for (Vertex u = 0; u < graph_.vertex_count(); ++u) {
        if (!assignment_.local_code(u).contains(local_view(x, u))) return false;
    }
    return true;
}

TwistedRealization build_local_system(const GraphCodeInstance& instance) {
    const auto& g = instance.graph();
    TwistedRealization out{SimplicialComplex::from_graph(g), {}, {}};
    out.system = LocalSystem(out.complex);
    std::vector<BitMatrix> basis_matrices;
    for (Vertex u = 0; u < g.vertex_count(); ++u) {
        const auto& a = instance.assignment().parity_check(u);
        auto basis = column_space_basis(a);
        out.system.set_stalk_dimension(0, u, basis.size());
        basis_matrices.push_back(BitMatrix::from_columns(basis, a.rows()));
        out.vertex_bases.push_back(std::move(basis));
    }

    // Coordinates of w_uv in B_u, as a dim L_u x 1 matrix.
    auto restriction = [&](Vertex u, Vertex v) {
        const auto neighbors = g.neighbors(u);
        const auto j = static_cast<std::size_t>(std::lower_bound(neighbors.begin(), neighbors.end(), v) -
                                                neighbors.begin());
        const auto coords = solve(basis_matrices[u], instance.assignment().parity_check(u).column(j));
        if (!coords) throw std::logic_error("column of A_u outside its own column space");
        return BitMatrix::from_columns(std::span(&*coords, 1), coords->size());
    };

    for (std::size_t t = 0; t < g.edge_count(); ++t) {
        const auto [u, v] = g.edges()[t];
        out.system.set_stalk_dimension(1, t, 1);
        // Face 0 of [u v] drops u, leaving [v]; face 1 leaves [u].
        out.system.set_restriction(1, t, 0, restriction(v, u));
        out.system.set_restriction(1, t, 1, restriction(u, v));
    }
    return out;
}

std::vector<BitVector> boundary_evaluate(const GraphCodeInstance& instance, const TwistedRealization& realization,
                                         const BitVector& x) {
    const auto& g = instance.graph();
    if (x.size() != g.edge_count()) throw DimensionMismatch("edge vector length must equal |E|");
    std::vector<BitVector> syndromes;
    syndromes.reserve(g.vertex_count());
    for (Vertex u = 0; u < g.vertex_count(); ++u) {
        const auto& a = instance.assignment().parity_check(u);
        const auto ambient = mat_vec(a, instance.local_view(x, u));
        const auto& basis = realization.vertex_bases.at(u);
        const auto coords = solve(BitMatrix::from_columns(basis, a.rows()), ambient);
        if (!coords) throw std::logic_error("syndrome outside the column space of A_u");
        syndromes.push_back(*coords);
    }
    return syndromes;
}

PropositionVerdict verify_proposition(const GraphCodeInstance& instance) {
    return verify_proposition(instance, build_local_system(instance));
}

PropositionVerdict verify_proposition(const GraphCodeInstance& instance, const TwistedRealization& realization) {
    const auto& code = instance.code();
    const auto h1 = homology(realization.complex, realization.system, 1);

    PropositionVerdict verdict;
    verdict.code_dimension = code.dimension();
    verdict.homology_dimension = h1.dimension;

    const auto code_basis = code.generator().row_vectors();
    for (const auto& z : h1.representatives) {
        if (!in_span(code_basis, z)) {
            verdict.witness = z;
            verdict.detail = "a twisted 1-cycle is not a codeword";
            return verdict;
        }
    }
    for (const auto& c : code_basis) {
        if (!in_span(h1.representatives, c)) {
            verdict.witness = c;
            verdict.detail = "a codeword is not a twisted 1-cycle";
            return verdict;
        }
    }
    if (verdict.code_dimension != verdict.homology_dimension) {
        verdict.detail = "dimensions differ";
        return verdict;
    }
    verdict.holds = true;
    return verdict;
}

Rational rate_bound(const Rational& local_rate) { return Rational(2) * local_rate - Rational(1); }

Rational distance_bound(const Rational& delta, const Rational& lambda, std::int64_t d) {
    if (d <= 0) throw ValidationError("distance_bound: need d >= 1");
    const Rational ratio = lambda / Rational(d);
    if (ratio >= Rational(1)) throw ValidationError("distance_bound: need lambda < d");
    if (delta <= ratio) return Rational(0);
    const Rational base = (delta - ratio) / (Rational(1) - ratio);
    return base * base;
}

double distance_bound(double delta, double lambda, std::size_t d) {
    if (d == 0) throw ValidationError("distance_bound: need d >= 1");
    const double ratio = lambda / static_cast<double>(d);
    if (!(ratio < 1.0)) throw ValidationError("distance_bound: need lambda < d");
    if (delta <= ratio) return 0.0;
    const double base = (delta - ratio) / (1.0 - ratio);
    return base * base;
}

}  // namespace twistcode
