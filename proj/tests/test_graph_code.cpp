#include <set>
#include <sstream>

#include "doctest.h"
#include "support/instances.hpp"
#include "support/oracles.hpp"

using namespace twistcode;

namespace {

GraphCodeInstance uniform(const Graph& g, std::string_view spec, std::uint64_t seed = 0) {
    return build_graph_code(g, synthesize_assignment(g, spec, seed));
}

BitVector random_vector(std::size_t n, Rng& rng) {
    BitVector v(n);
    for (std::size_t i = 0; i < n; ++i) v.set(i, rng.bits() & 1U);
    return v;
}

BitVector edge_indicator(const Graph& g, std::initializer_list<Edge> edges) {
    BitVector x(g.edge_count());
    for (const auto& e : edges) x.set(*g.edge_index(e.u, e.v));
    return x;
}

}  // namespace

TEST_CASE("assignment validation") {
    const auto k4 = graphs::complete(4);
    std::vector<BitMatrix> checks(4, BitMatrix::ones(1, 3));
    checks[2] = BitMatrix::ones(1, 4);
    try {
        LocalCodeAssignment bad(k4, checks);
        FAIL("expected a validation error");
    } catch (const ValidationError& err) {
        CHECK(std::string(err.what()).find("vertex 2") != std::string::npos);
    }
    CHECK_THROWS_AS(synthesize_assignment(k4, "hamming74", 0), ValidationError);
    CHECK_THROWS_AS(synthesize_assignment(k4, "random:5", 0), ValidationError);
    CHECK_THROWS_AS(synthesize_assignment(k4, "bogus", 0), ValidationError);
}

TEST_CASE("build examples") {
    const auto k4 = graphs::complete(4);
    CHECK(uniform(k4, "parity").code().dimension() == 3);
    CHECK(uniform(k4, "full").code().dimension() == 6);
    CHECK(uniform(k4, "zero").code().dimension() == 0);
    CHECK(uniform(k4, "parity").parity_check().rows() == 4);
    CHECK(uniform(k4, "parity").parity_check().cols() == 6);
    CHECK(uniform(graphs::complete(8), "hamming74").code().dimension() == 6);
}

TEST_CASE("global membership agrees with local checks") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const auto inst = testing::random_regular_instance(seed);
        Rng rng(seed);
        for (int trial = 0; trial < 200; ++trial) {
            const auto x = random_vector(inst.graph().edge_count(), rng);
            CHECK(is_codeword(inst.code(), x) == inst.satisfies_local_codes(x));
        }
        for (std::size_t r = 0; r < inst.code().generator().rows(); ++r) {
            CHECK(inst.satisfies_local_codes(inst.code().generator().row(r)));
        }
    }
}

TEST_CASE("local system examples") {
    SUBCASE("parity gives the constant system") {
        const auto inst = uniform(graphs::petersen(), "parity");
        const auto r = build_local_system(inst);
        CHECK(validate_local_system(r.complex, r.system));
        for (std::size_t u = 0; u < 10; ++u) CHECK(r.system.stalk_dimension(0, u) == 1);
        for (std::size_t t = 0; t < 15; ++t) {
            for (std::size_t i = 0; i < 2; ++i) CHECK(r.system.restriction(1, t, i) == BitMatrix::identity(1));
        }
        CHECK(homology(r.complex, r.system, 1).dimension == cycle_space_dimension(inst.graph()));
    }
    SUBCASE("full codes give empty vertex stalks") {
        const auto inst = uniform(graphs::petersen(), "full");
        const auto r = build_local_system(inst);
        for (std::size_t u = 0; u < 10; ++u) CHECK(r.system.stalk_dimension(0, u) == 0);
        CHECK(boundary_matrix(r.complex, r.system, 1).rows() == 0);
        CHECK(homology(r.complex, r.system, 1).dimension == 15);
    }
    SUBCASE("Hamming on K8") {
        const auto inst = uniform(graphs::complete(8), "hamming74");
        const auto r = build_local_system(inst);
        CHECK(validate_local_system(r.complex, r.system));
        for (Vertex u = 0; u < 8; ++u) {
            REQUIRE(r.system.stalk_dimension(0, u) == 3);
            // The seven maps into F(u) are the seven nonzero vectors of F2^3.
            std::set<std::string> images;
            for (std::size_t t = 0; t < 28; ++t) {
                const auto& e = r.complex.simplices(1)[t];
                if (e[0] != u && e[1] != u) continue;
                const std::size_t i = e[0] == u ? 1 : 0;
                const auto& rho = r.system.restriction(1, t, i);
                REQUIRE(rho.rows() == 3);
                REQUIRE(rho.cols() == 1);
                images.insert(rho.column(0).to_string());
            }
            CHECK(images.size() == 7);
            CHECK_FALSE(images.contains("000"));
        }
    }
    SUBCASE("redundant rows do not change stalk dimensions") {
        Rng rng(4);
        const auto g = graphs::complete(8);
        std::vector<BitMatrix> checks;
        for (Vertex u = 0; u < 8; ++u) {
            checks.push_back(testing::with_redundant_rows(codes::hamming_7_4().parity_check(), 2, rng));
        }
        const GraphCodeInstance inst(g, LocalCodeAssignment(g, checks));
        const auto r = build_local_system(inst);
        for (Vertex u = 0; u < 8; ++u) CHECK(r.system.stalk_dimension(0, u) == 3);
        CHECK(inst.code().dimension() == 6);
        CHECK(verify_proposition(inst, r).holds);
    }
}

TEST_CASE("boundary_evaluate examples") {
    const auto k4 = graphs::complete(4);
    const auto inst = uniform(k4, "parity");
    const auto r = build_local_system(inst);

    for (const auto& s : boundary_evaluate(inst, r, BitVector(6))) CHECK(s.is_zero());
    for (const auto& s : boundary_evaluate(inst, r, edge_indicator(k4, {{0, 1}, {1, 2}, {0, 2}}))) {
        CHECK(s.is_zero());
    }
    const auto single = boundary_evaluate(inst, r, edge_indicator(k4, {{1, 3}}));
    CHECK(single[0].is_zero());
    CHECK_FALSE(single[1].is_zero());
    CHECK(single[2].is_zero());
    CHECK_FALSE(single[3].is_zero());
    CHECK_THROWS_AS(boundary_evaluate(inst, r, BitVector(5)), DimensionMismatch);
}

TEST_CASE("boundary_evaluate vanishes exactly on codewords") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const auto inst = testing::random_regular_instance(seed + 500);
        const auto r = build_local_system(inst);
        const auto d1 = boundary_matrix(r.complex, r.system, 1);
        Rng rng(seed);
        for (int trial = 0; trial < 1000; ++trial) {
            const auto x = random_vector(inst.graph().edge_count(), rng);
            const auto syndromes = boundary_evaluate(inst, r, x);
            const bool zero = std::all_of(syndromes.begin(), syndromes.end(), [](const auto& s) { return s.is_zero(); });
            CHECK(zero == is_codeword(inst.code(), x));
            CHECK(zero == mat_vec(d1, x).is_zero());
        }
    }
}

TEST_CASE("proposition verdicts") {
    const auto k4 = uniform(graphs::complete(4), "parity");
    const auto v = verify_proposition(k4);
    CHECK(v.holds);
    CHECK(v.code_dimension == 3);
    CHECK(v.homology_dimension == 3);
    CHECK_FALSE(v.witness);

    const auto full = verify_proposition(uniform(graphs::petersen(), "full"));
    CHECK(full.holds);
    CHECK(full.code_dimension == 15);

    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const auto inst = testing::random_regular_instance(seed + 1000);
        const auto verdict = verify_proposition(inst);
        CHECK(verdict.holds);
        CHECK(verdict.code_dimension == verdict.homology_dimension);
    }
}

TEST_CASE("a tampered realization is caught with a witness") {
    const auto inst = uniform(graphs::complete(4), "parity");
    auto r = build_local_system(inst);
    r.system.set_restriction(1, 0, 0, BitMatrix(1, 1));
    const auto v = verify_proposition(inst, r);
    CHECK_FALSE(v.holds);
    REQUIRE(v.witness);
    CHECK(is_codeword(inst.code(), *v.witness) != mat_vec(boundary_matrix(r.complex, r.system, 1), *v.witness).is_zero());
}

TEST_CASE("parity codes reduce to the cycle space") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const auto g = testing::mixed_random_graph(seed);
        const auto inst = uniform(g, "parity");
        const auto r = build_local_system(inst);
        CHECK(homology(r.complex, r.system, 1).dimension == cycle_space_dimension(g));
    }
}

TEST_CASE("rate bound") {
    CHECK(rate_bound(Rational(1, 2)) == Rational(0));
    CHECK(rate_bound(Rational(4, 7)) == Rational(1, 7));
    CHECK(rate_bound(Rational(2, 3)) == Rational(1, 3));
    CHECK(rate_bound(Rational(1, 4)) == Rational(-1, 2));

    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const auto inst = testing::random_regular_instance(seed + 2000);
        Rational r(1);
        for (Vertex u = 0; u < inst.graph().vertex_count(); ++u) {
            r = std::min(r, rate(inst.assignment().local_code(u)));
        }
        const auto n = static_cast<std::int64_t>(inst.graph().edge_count());
        CHECK(Rational(static_cast<std::int64_t>(inst.code().dimension())) >= Rational(n) * rate_bound(r));
    }
}

TEST_CASE("distance bound examples") {
    CHECK(distance_bound(Rational(3, 7), Rational(-1), 7) == Rational(1, 4));
    CHECK(distance_bound(Rational(1, 7), Rational(1), 7) == Rational(0));
    CHECK(distance_bound(Rational(1, 10), Rational(2), 7) == Rational(0));
    CHECK(distance_bound(Rational(1, 2), Rational(0), 3) == Rational(1, 4));
    CHECK_THROWS_AS(distance_bound(Rational(1, 2), Rational(3), 3), ValidationError);
    CHECK_THROWS_AS(distance_bound(Rational(1, 2), Rational(0), 0), ValidationError);

    CHECK(distance_bound(3.0 / 7.0, -1.0, 7) == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(distance_bound(0.1, 2.0, 7) == 0.0);
    CHECK_THROWS_AS(distance_bound(0.5, 3.5, 3), ValidationError);
}

TEST_CASE("signed eigenvalue bound overshoots on K4") {
    // dist/N = 3/6 for the cycle space of K4, while the signed formula gives 9/16.
    const auto inst = uniform(graphs::complete(4), "parity");
    CHECK(min_distance(inst.code()) == 3);
    CHECK(distance_bound(Rational(2, 3), Rational(-1), 3) == Rational(9, 16));
    CHECK(Rational(3, 6) < Rational(9, 16));
    CHECK(distance_bound(Rational(2, 3), Rational(1), 3) == Rational(1, 4));
}

TEST_CASE("distance bound with |lambda| holds on brute-forceable instances") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const auto inst = testing::random_regular_instance(seed + 3000);
        const auto& g = inst.graph();
        if (inst.code().dimension() == 0 || inst.code().dimension() > 20) continue;
        const auto d = *regular_degree(g);
        const auto spectrum = spectral_summary(g);
        if (spectrum.second >= double(d) - 1e-9) continue;
        Rational delta(1);
        for (Vertex u = 0; u < g.vertex_count(); ++u) {
            const auto& c = inst.assignment().local_code(u);
            if (c.dimension() > 0) delta = std::min(delta, relative_distance(c));
        }
        const double bound = distance_bound(boost::rational_cast<double>(delta), spectrum.second_absolute, d);
        const double measured = double(min_distance(inst.code())) / double(g.edge_count());
        CHECK(measured >= bound - 1e-9);
    }
}

TEST_CASE("assignment text format") {
    const auto g = graphs::complete(8);
    const auto a = synthesize_assignment(g, "random:5", 3);
    std::stringstream buffer;
    write_assignment(buffer, a);
    const auto b = read_assignment(buffer, g);
    for (Vertex u = 0; u < 8; ++u) CHECK(a.parity_check(u) == b.parity_check(u));

    const auto k3 = graphs::complete(3);
    std::stringstream twice("v 0 1 2\n11\nv 0 1 2\n11\n");
    CHECK_THROWS_AS(read_assignment(twice, k3), ParseError);
    std::stringstream missing("v 0 1 2\n11\nv 1 1 2\n11\n");
    CHECK_THROWS_AS(read_assignment(missing, k3), ValidationError);
    std::stringstream wrong_len("v 0 1 2\n11\nv 1 1 2\n11\nv 2 1 3\n111\n");
    CHECK_THROWS_AS(read_assignment(wrong_len, k3), ValidationError);
    std::stringstream corrupt("v 0 1 2\n1x\n");
    CHECK_THROWS_AS(read_assignment(corrupt, k3), ParseError);
}

TEST_CASE("random assignments are seeded") {
    const auto g = graphs::petersen();
    const auto a = synthesize_assignment(g, "random:2", 11);
    const auto b = synthesize_assignment(g, "random:2", 11);
    for (Vertex u = 0; u < 10; ++u) CHECK(a.parity_check(u) == b.parity_check(u));
}
