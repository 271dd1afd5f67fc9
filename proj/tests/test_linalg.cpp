#include <doctest.h>

#include <random>

#include "hfe/field.hpp"
#include "hfe/linalg.hpp"
#include "hfe/toy_example.hpp"

using namespace hfe;

namespace {

Mat<Gf> random_matrix(const Gf& gf, std::size_t n, std::mt19937_64& rng) {
    Mat<Gf> m(gf, n, n);
    for (auto& e : m.e) e = gf.random_element(rng);
    return m;
}

Mat<Gf> random_invertible(const Gf& gf, std::size_t n, std::mt19937_64& rng) {
    while (true) {
        auto m = random_matrix(gf, n, rng);
        if (rank(gf, m) == n) return m;
    }
}

}  // namespace

TEST_CASE("solve with the identity matrix") {
    const Gf gf(FieldParams::make_default(2, 4));
    std::mt19937_64 rng(1);
    const auto id = identity(gf, 4);
    std::vector<FieldElement> b;
    for (int i = 0; i < 4; ++i) b.push_back(gf.random_element(rng));
    const auto sol = solve(gf, id, b);
    CHECK(sol.solution == b);
    CHECK(sol.rank == 4);
    CHECK(sol.free_count == 0);
}

TEST_CASE("the printed 7x7 toy system solves to the printed alias") {
    const Gf gf(toy::field_params());
    const auto sys = toy::printed_system(gf);
    const auto sol = solve(gf, sys.matrix, sys.rhs);
    CHECK(sol.rank == 7);
    const auto eq8 = toy::printed_alias(gf);
    for (int e = 0; e < 7; ++e) CHECK(sol.solution[static_cast<std::size_t>(e)] == eq8.coeff(gf, e));
}

TEST_CASE("solve recovers a planted solution exactly") {
    const Gf gf(FieldParams::make_default(2, 5));
    std::mt19937_64 rng(2);
    for (int trial = 0; trial < 20; ++trial) {
        const auto a = random_invertible(gf, 6, rng);
        std::vector<FieldElement> x;
        for (int i = 0; i < 6; ++i) x.push_back(gf.random_element(rng));
        const auto b = matvec(gf, a, x);
        const auto sol = solve(gf, a, b);
        CHECK(sol.rank == 6);
        CHECK(sol.solution == x);
    }
}

TEST_CASE("every solve result satisfies A x = b") {
    const Gf gf(FieldParams::make_default(2, 3));
    std::mt19937_64 rng(3);
    int solved = 0;
    for (int trial = 0; trial < 100; ++trial) {
        // random, possibly singular; keep consistent by construction
        Mat<Gf> a = random_matrix(gf, 5, rng);
        std::vector<FieldElement> x;
        for (int i = 0; i < 5; ++i) x.push_back(gf.random_element(rng));
        const auto b = matvec(gf, a, x);
        const auto sol = solve(gf, a, b);
        CHECK(matvec(gf, a, sol.solution) == b);
        CHECK(sol.rank + sol.free_count == 5);
        ++solved;
    }
    CHECK(solved == 100);
}

TEST_CASE("inconsistent systems are reported") {
    const Gf gf(toy::field_params());
    Mat<Gf> a(gf, 2, 2);
    a.at(0, 0) = gf.one();
    a.at(1, 0) = gf.one();  // rows equal, rhs differs
    std::vector<FieldElement> b = {gf.one(), gf.zero()};
    CHECK_THROWS_AS((void)solve(gf, a, b), InconsistentSystemError);
}

TEST_CASE("invert") {
    const Gf gf(FieldParams::make_default(2, 4));
    const auto id = identity(gf, 5);
    CHECK(mat_eq(gf, invert(gf, id), id));
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 10; ++trial) {
        const auto a = random_invertible(gf, 5, rng);
        const auto ainv = invert(gf, a);
        CHECK(mat_eq(gf, matmul(gf, ainv, a), id));
        CHECK(mat_eq(gf, invert(gf, ainv), a));
    }
    Mat<Gf> z(gf, 3, 3);
    CHECK_THROWS_AS((void)invert(gf, z), SingularMatrixError);
}

TEST_CASE("rank") {
    const Gf gf(toy::field_params());
    Mat<Gf> z(gf, 4, 4);
    CHECK(rank(gf, z) == 0);
    CHECK(rank(gf, identity(gf, 4)) == 4);
}

TEST_CASE("congruence preserves rank for invertible P") {
    std::mt19937_64 rng(5);
    for (std::uint32_t n : {3u, 1u}) {
        const Gf gf(FieldParams::make_default(2, n == 1 ? 1 : 3));
        for (int trial = 0; trial < 100; ++trial) {
            const std::size_t dim = 2 + trial % 5;
            // random symmetric B
            Mat<Gf> b(gf, dim, dim);
            for (std::size_t i = 0; i < dim; ++i)
                for (std::size_t j = i; j < dim; ++j) {
                    const auto c = gf.random_element(rng);
                    b.at(i, j) = c;
                    b.at(j, i) = c;
                }
            const auto p = random_invertible(gf, dim, rng);
            const auto pb = congruence(gf, p, b);
            CHECK(rank(gf, pb) == rank(gf, b));
            // congruence preserves symmetry
            CHECK(mat_eq(gf, pb, transpose(gf, pb)));
        }
    }
}
