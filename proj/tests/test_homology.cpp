#include <sstream>

#include "doctest.h"
#include "support/oracles.hpp"
#include "twistcode/random.hpp"

using namespace twistcode;

namespace {

SimplicialComplex hollow_triangle() {
    const std::vector<Simplex> s{{0, 1}, {1, 2}, {0, 2}};
    return SimplicialComplex::from_simplices(3, s);
}

SimplicialComplex filled_triangle() {
    const std::vector<Simplex> s{{0, 1, 2}};
    return SimplicialComplex::from_simplices(3, s);
}

SimplicialComplex sphere() { return skeleton_complex(4, 2); }

std::vector<std::size_t> betti(const SimplicialComplex& x, const LocalSystem& f) {
    std::vector<std::size_t> out;
    for (int k = 0; k <= x.dimension(); ++k) out.push_back(homology(x, f, static_cast<std::size_t>(k)).dimension);
    return out;
}

}  // namespace

TEST_CASE("faces and closure") {
    CHECK(face({3, 5, 9}, 0) == Simplex{5, 9});
    CHECK(face({3, 5, 9}, 1) == Simplex{3, 9});
    CHECK(face({3, 5, 9}, 2) == Simplex{3, 5});

    const std::vector<Simplex> s{{2, 0, 1}};
    const auto x = SimplicialComplex::from_simplices(4, s);
    CHECK(x.dimension() == 2);
    CHECK(x.face_count(0) == 4);
    CHECK(x.face_count(1) == 3);
    CHECK(x.face_count(2) == 1);
    CHECK(x.simplices(1)[0] == Simplex{0, 1});
    CHECK(x.simplices(1)[1] == Simplex{0, 2});
    CHECK(x.simplices(1)[2] == Simplex{1, 2});
    CHECK(x.face_count(3) == 0);
    CHECK(x.index_of({1, 2}) == 2);
    CHECK_FALSE(x.index_of({0, 3}));
    // Face 0 of [0 1 2] is [1 2].
    CHECK(x.face_index(2, 0, 0) == 2);

    const std::vector<Simplex> bad{{1, 1}};
    CHECK_THROWS_AS(SimplicialComplex::from_simplices(2, bad), ValidationError);
    CHECK(SimplicialComplex().dimension() == -1);
}

TEST_CASE("skeleta") {
    CHECK(skeleton_complex(4, 1).face_count(1) == 6);
    CHECK(skeleton_complex(4, 2).face_count(2) == 4);
    CHECK(skeleton_complex(5, 2).face_count(2) == 10);
    CHECK_THROWS_AS(skeleton_complex(100, 5), ValidationError);
}

TEST_CASE("local system validation") {
    CHECK(validate_local_system(filled_triangle(), constant_local_system(filled_triangle())));
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto x = random_complex(8, 0.6, 0.7, seed);
        CHECK(validate_local_system(x, gauge_local_system(x, 2, seed)));
    }

    SUBCASE("zero map breaks a commuting square") {
        const auto x = filled_triangle();
        auto f = constant_local_system(x);
        f.set_restriction(2, 0, 1, BitMatrix(1, 1));
        const auto check = validate_local_system(x, f);
        CHECK_FALSE(check);
        CHECK(check.status == SystemCheck::Status::incompatible);
    }
    SUBCASE("shape mismatch is reported separately") {
        const auto x = hollow_triangle();
        auto f = constant_local_system(x);
        f.set_restriction(1, 0, 0, BitMatrix(2, 1));
        const auto check = validate_local_system(x, f);
        CHECK(check.status == SystemCheck::Status::shape_mismatch);
        CHECK_FALSE(check.detail.empty());
        CHECK_THROWS_AS(homology(x, f, 1), ValidationError);
    }
}

TEST_CASE("gauge with m = 1 is the constant system") {
    const auto x = random_complex(7, 0.7, 0.7, 3);
    const auto g = gauge_local_system(x, 1, 99);
    for (std::size_t k = 1; k < g.dimension_count(); ++k) {
        for (std::size_t t = 0; t < x.face_count(k); ++t) {
            for (std::size_t i = 0; i <= k; ++i) CHECK(g.restriction(k, t, i) == BitMatrix::identity(1));
        }
    }
}

TEST_CASE("boundary of a graph is its incidence matrix") {
    const auto g = graphs::complete(4);
    const auto x = SimplicialComplex::from_graph(g);
    const auto d1 = boundary_matrix(x, constant_local_system(x), 1);
    REQUIRE(d1.rows() == 4);
    REQUIRE(d1.cols() == 6);
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        for (Vertex u = 0; u < 4; ++u) CHECK(d1.get(u, e) == (g.edges()[e].u == u || g.edges()[e].v == u));
    }
}

TEST_CASE("boundary with zero-dimensional stalks") {
    const auto x = hollow_triangle();
    LocalSystem f(x);
    for (std::size_t t = 0; t < 3; ++t) f.set_stalk_dimension(1, t, 1);
    for (std::size_t t = 0; t < 3; ++t) {
        for (std::size_t i = 0; i < 2; ++i) f.set_restriction(1, t, i, BitMatrix(0, 1));
    }
    REQUIRE(validate_local_system(x, f));
    const auto d1 = boundary_matrix(x, f, 1);
    CHECK(d1.rows() == 0);
    CHECK(d1.cols() == 3);
    CHECK(homology(x, f, 1).dimension == 3);
    CHECK(homology(x, f, 0).dimension == 0);
}

TEST_CASE("boundary range") {
    const auto x = filled_triangle();
    const auto f = constant_local_system(x);
    CHECK_THROWS_AS(boundary_matrix(x, f, 0), ValidationError);
    CHECK(boundary_matrix(x, f, 3).cols() == 0);
    CHECK_THROWS_AS(boundary_matrix(x, f, 4), ValidationError);
}

TEST_CASE("boundary squares to zero") {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const auto x = random_complex(4 + seed % 9, 0.7, 0.6, seed);
        if (x.dimension() < 2) continue;
        const auto f = gauge_local_system(x, 1 + seed % 3, seed);
        CHECK((boundary_matrix(x, f, 1) * boundary_matrix(x, f, 2)).is_zero());
    }
    for (std::size_t n : {4, 5, 6}) {
        const auto x = skeleton_complex(n, 3);
        const auto f = constant_local_system(x, 2);
        CHECK((boundary_matrix(x, f, 1) * boundary_matrix(x, f, 2)).is_zero());
        CHECK((boundary_matrix(x, f, 2) * boundary_matrix(x, f, 3)).is_zero());
    }
}

TEST_CASE("homology examples") {
    CHECK(homology(hollow_triangle(), constant_local_system(hollow_triangle()), 1).dimension == 1);
    CHECK(homology(filled_triangle(), constant_local_system(filled_triangle()), 1).dimension == 0);
    CHECK(homology(sphere(), constant_local_system(sphere()), 2).dimension == 1);
    CHECK(homology(sphere(), constant_local_system(sphere()), 0).dimension == 1);
    CHECK(homology(sphere(), constant_local_system(sphere()), 1).dimension == 0);
    CHECK(homology(hollow_triangle(), constant_local_system(hollow_triangle(), 3), 1).dimension == 3);
    const Graph two(4, {{0, 1}, {2, 3}});
    const auto xg = SimplicialComplex::from_graph(two);
    CHECK(homology(xg, constant_local_system(xg), 0).dimension == 2);
}

TEST_CASE("representatives are independent cycles") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const auto x = random_complex(9, 0.6, 0.3, seed);
        const auto f = gauge_local_system(x, 2, seed + 1000);
        for (std::size_t k = 1; k <= 2 && int(k) <= x.dimension(); ++k) {
            const auto h = homology(x, f, k);
            const auto d = boundary_matrix(x, f, k);
            REQUIRE(h.representatives.size() == h.dimension);
            for (const auto& z : h.representatives) CHECK(mat_vec(d, z).is_zero());
            // Independent modulo boundaries.
            SpanBasis span(f.chain_dimension(k));
            const auto up = boundary_matrix(x, f, k + 1);
            for (std::size_t c = 0; c < up.cols(); ++c) span.insert(up.column(c));
            for (const auto& z : h.representatives) CHECK(span.insert(z));
        }
    }
}

TEST_CASE("Euler characteristic with constant coefficients") {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const auto x = random_complex(3 + seed % 10, 0.6, 0.5, seed);
        const auto f = constant_local_system(x);
        long faces = 0;
        long homs = 0;
        for (int k = 0; k <= x.dimension(); ++k) {
            const long sign = k % 2 == 0 ? 1 : -1;
            faces += sign * long(x.face_count(std::size_t(k)));
            homs += sign * long(homology(x, f, std::size_t(k)).dimension);
        }
        CHECK(faces == homs);
    }
}

TEST_CASE("gauge systems have constant-coefficient homology") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const auto x = random_complex(5 + seed % 8, 0.6, 0.5, seed);
        const std::size_t m = 1 + seed % 3;
        CHECK(betti(x, gauge_local_system(x, m, seed)) == betti(x, constant_local_system(x, m)));
    }
}

TEST_CASE("homology codes") {
    const auto s = homology_code(sphere(), 2);
    CHECK(s.length() == 4);
    CHECK(s.dimension() == 1);
    CHECK(min_distance(s) == 4);

    const auto k4 = homology_code(SimplicialComplex::from_graph(graphs::complete(4)), 1);
    CHECK(k4.length() == 6);
    CHECK(k4.dimension() == 3);

    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const auto g = graphs::random_graph(10, 5 + seed % 30, seed);
        const auto x = SimplicialComplex::from_graph(g);
        if (x.dimension() != 1) continue;
        CHECK(homology_code(x, 1).dimension() == cycle_space_dimension(g));
    }
    CHECK_THROWS_AS(homology_code(sphere(), 3), ValidationError);
}

TEST_CASE("complex and local system text formats") {
    const auto x = random_complex(7, 0.7, 0.6, 12);
    std::stringstream cbuf;
    write_complex(cbuf, x);
    const auto y = read_complex(cbuf);
    REQUIRE(y.dimension() == x.dimension());
    for (int k = 0; k <= x.dimension(); ++k) {
        const auto a = x.simplices(std::size_t(k));
        const auto b = y.simplices(std::size_t(k));
        CHECK(std::vector<Simplex>(a.begin(), a.end()) == std::vector<Simplex>(b.begin(), b.end()));
    }

    const auto f = gauge_local_system(x, 2, 5);
    std::stringstream fbuf;
    write_local_system(fbuf, x, f);
    const auto g = read_local_system(fbuf, x);
    for (std::size_t k = 1; k <= std::size_t(x.dimension()); ++k) {
        CHECK(boundary_matrix(x, g, k) == boundary_matrix(x, f, k));
    }

    std::stringstream closure("dim 2\ns 0 1 2\n");
    CHECK(read_complex(closure).face_count(1) == 3);
    std::stringstream wrong_dim("dim 1\ns 0 1 2\n");
    CHECK_THROWS_AS(read_complex(wrong_dim), ParseError);
}
