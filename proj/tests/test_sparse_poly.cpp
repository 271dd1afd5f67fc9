#include <doctest.h>

#include <random>

#include "hfe/field.hpp"
#include "hfe/hfe.hpp"
#include "hfe/sparse_poly.hpp"
#include "hfe/toy_example.hpp"

using namespace hfe;

namespace {

SparsePoly random_hfe_shape(const Gf& gf, const BigInt& d, std::mt19937_64& rng) {
    SparsePoly f;
    for (const auto& e : admissible_exponents(gf.params(), d))
        f.set_term(gf, e, gf.random_element(rng));
    return f;
}

SparsePoly random_linearized_invertible(const Gf& gf, std::mt19937_64& rng) {
    const PrimeField fp(gf.p());
    const Basis id = Basis::identity(fp, gf.n());
    std::uniform_int_distribution<std::uint32_t> dist(0, gf.p() - 1);
    while (true) {
        Mat<PrimeField> m(fp, gf.n(), gf.n());
        for (auto& e : m.e) e = static_cast<std::uint8_t>(dist(rng));
        if (rank(fp, m) == gf.n()) return to_linearized_poly(gf, id, m);
    }
}

}  // namespace

TEST_CASE("exponent weight") {
    CHECK(SparsePoly::weight(6, 2) == 2);  // 110_2
    CHECK(SparsePoly::weight(0, 2) == 0);
    CHECK(SparsePoly::weight(7, 2) == 3);
    CHECK(SparsePoly::weight(6, 3) == 1);  // 20_3: a single nonzero digit
    CHECK(SparsePoly::weight(Exp(1) << 100, 2) == 1);
}

TEST_CASE("poly_weight of the printed alias is 2") {
    const Gf gf(toy::field_params());
    CHECK(toy::printed_alias(gf).poly_weight(2) == 2);
}

TEST_CASE("eval") {
    const Gf gf(toy::field_params());
    const auto a = toy::printed_alias(gf);
    CHECK(a.eval(gf, gf.zero()) == gf.one());            // constant row: a = 1
    CHECK(a.eval(gf, gf.one()) == gf.from_text("001"));  // sum of printed coefficients = t^2

    SparsePoly c;
    c.set_term(gf, 0, gf.from_text("011"));
    std::mt19937_64 rng(1);
    CHECK(c.eval(gf, gf.random_element(rng)) == gf.from_text("011"));
}

TEST_CASE("compose_linearized basics") {
    const Gf gf(FieldParams::make_default(2, 5));
    std::mt19937_64 rng(2);
    SparsePoly x;
    x.set_term(gf, 1, gf.one());

    const auto f = random_hfe_shape(gf, 8, rng);
    CHECK(f.compose_linearized(gf, x) == f);

    for (std::uint32_t a = 0; a < 5; ++a)
        for (std::uint32_t b = 0; b < 5; ++b) {
            SparsePoly pa, pb;
            pa.set_term(gf, Exp(1) << a, gf.one());
            pb.set_term(gf, Exp(1) << b, gf.one());
            const auto composed = pa.compose_linearized(gf, pb);
            SparsePoly expect;
            expect.set_term(gf, Exp(1) << ((a + b) % 5), gf.one());
            CHECK(composed == expect);
        }

    SparsePoly not_linear;
    not_linear.set_term(gf, 3, gf.one());
    CHECK_THROWS_AS((void)f.compose_linearized(gf, not_linear), ShapeError);
}

TEST_CASE("symbolic composition equals pointwise composition on all of F_32") {
    const Gf gf(FieldParams::make_default(2, 5));
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 10; ++trial) {
        const auto f = random_hfe_shape(gf, 8, rng);
        const auto s = random_linearized_invertible(gf, rng);
        const auto t = random_linearized_invertible(gf, rng);
        const auto chain = f.compose_linearized(gf, t).compose_linear_outer(gf, s);
        CHECK(chain.poly_weight(2) <= 2);
        for (std::uint64_t k = 0; k < 32; ++k) {
            const auto x = gf.from_index(k);
            const auto direct = s.eval(gf, f.eval(gf, t.eval(gf, x)));
            CHECK(chain.eval(gf, x) == direct);
        }
    }
}

TEST_CASE("composition associativity on evaluations") {
    const Gf gf(FieldParams::make_default(2, 4));
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 10; ++trial) {
        const auto f = random_hfe_shape(gf, 6, rng);
        const auto s = random_linearized_invertible(gf, rng);
        const auto t = random_linearized_invertible(gf, rng);
        const auto left = f.compose_linear_outer(gf, s).compose_linearized(gf, t);
        const auto right = f.compose_linearized(gf, t).compose_linear_outer(gf, s);
        for (std::uint64_t k = 0; k < 16; ++k) {
            const auto x = gf.from_index(k);
            CHECK(left.eval(gf, x) == right.eval(gf, x));
        }
    }
}

TEST_CASE("compose_translate") {
    const Gf gf(FieldParams::make_default(2, 5));
    std::mt19937_64 rng(5);
    const auto f = random_hfe_shape(gf, 8, rng);
    CHECK(f.compose_translate(gf, gf.zero(), TranslateSide::Right) == f);
    CHECK(f.compose_translate(gf, gf.zero(), TranslateSide::Left) == f);

    // right-translate x^(q^0+q^1) by c: x^(q+1) + c x^q + c^q x + c^(q+1)
    SparsePoly p;
    p.set_term(gf, 3, gf.one());
    const auto c = gf.random_element(rng);
    const auto shifted = p.compose_translate(gf, c, TranslateSide::Right);
    SparsePoly expect;
    expect.set_term(gf, 3, gf.one());
    expect.set_term(gf, 2, c);
    expect.set_term(gf, 1, gf.frobenius(c, 1));
    expect.set_term(gf, 0, gf.mul(c, gf.frobenius(c, 1)));
    CHECK(shifted == expect);

    // shape and degree are preserved
    for (int trial = 0; trial < 100; ++trial) {
        const auto g = random_hfe_shape(gf, 12, rng);
        const auto cc = gf.random_element(rng);
        const auto moved = g.compose_translate(gf, cc, TranslateSide::Right);
        CHECK(moved.poly_weight(2) <= 2);
        // evaluation agreement
        const auto x = gf.random_element(rng);
        CHECK(moved.eval(gf, x) == g.eval(gf, gf.add(x, cc)));
    }
}

TEST_CASE("frobenius_twist") {
    const Gf gf(FieldParams::make_default(2, 5));
    std::mt19937_64 rng(6);
    const auto f = random_hfe_shape(gf, 8, rng);
    CHECK(f.frobenius_twist(gf, 0) == f);
    CHECK(f.frobenius_twist(gf, 5) == f);

    for (std::uint32_t i = 0; i < 5; ++i) {
        SparsePoly p;
        p.set_term(gf, Exp(1) << i, gf.one());
        SparsePoly expect;
        expect.set_term(gf, Exp(1) << ((i + 2) % 5), gf.one());
        CHECK(p.frobenius_twist(gf, 2) == expect);
    }

    for (int trial = 0; trial < 20; ++trial) {
        const auto x = gf.random_element(rng);
        const std::uint32_t k = trial % 5;
        CHECK(f.frobenius_twist(gf, k).eval(gf, x) == gf.frobenius(f.eval(gf, x), k));
    }
}

TEST_CASE("exponent reduction is sound on all points") {
    const Gf gf(FieldParams::make_default(2, 5));
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        SparsePoly p;
        std::uniform_int_distribution<std::uint64_t> exp_dist(0, 1u << 12);
        for (int term = 0; term < 6; ++term)
            p.set_term(gf, exp_dist(rng), gf.random_element(rng));
        const auto reduced = p.reduce(gf);
        if (!reduced.is_zero()) CHECK(reduced.degree() < gf.order());
        for (std::uint64_t k = 0; k < 32; ++k) {
            const auto x = gf.from_index(k);
            CHECK(reduced.eval(gf, x) == p.eval(gf, x));
        }
    }
}

TEST_CASE("reduction keeps the constant term distinct from q^n - 1") {
    const Gf gf(toy::field_params());
    SparsePoly p;
    p.set_term(gf, 7, gf.one());   // x^(q^n - 1)
    p.set_term(gf, 0, gf.one());
    const auto reduced = p.reduce(gf);
    CHECK(reduced.coeff(gf, 0) == gf.one());
    CHECK(reduced.coeff(gf, 7) == gf.one());
    // and x^(q^n) folds to x
    SparsePoly q;
    q.set_term(gf, 8, gf.one());
    CHECK(q.reduce(gf).coeff(gf, 1) == gf.one());
}

TEST_CASE("2q^theta exponents at p = 3") {
    const Gf gf(FieldParams::make_default(3, 2));
    const auto exps = admissible_exponents(gf.params(), 8);
    // 0, 1, 2, 3, 4 (=1+3), 6 (=2*3) are admissible at d = 8
    CHECK(exps == std::vector<Exp>{0, 1, 2, 3, 4, 6});
    SparsePoly p;
    p.set_term(gf, 6, gf.one());
    CHECK(p.poly_weight(3) == 1);  // single base-3 digit (2)
    std::mt19937_64 rng(8);
    SparsePoly x;
    x.set_term(gf, 1, gf.one());
    CHECK(p.compose_linearized(gf, x) == p);
}
