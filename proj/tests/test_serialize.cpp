#include <doctest.h>

#include <random>

#include "hfe/serialize.hpp"
#include "hfe/toy_example.hpp"

using namespace hfe;

namespace {

HfeParams params_for(std::uint32_t n, std::uint64_t seed) {
    return HfeParams{FieldParams::make_default(2, n), 8, seed};
}

}  // namespace

TEST_CASE("field params round trip") {
    const auto params = FieldParams::make_default(2, 7);
    CHECK(field_params_from_json(field_params_to_json(params)) == params);
    const auto p3 = FieldParams::make_default(3, 2);
    CHECK(field_params_from_json(field_params_to_json(p3)) == p3);
}

TEST_CASE("sparse poly round trip") {
    const Gf gf(FieldParams::make_default(2, 6));
    std::mt19937_64 rng(1);
    for (int trial = 0; trial < 20; ++trial) {
        SparsePoly p;
        for (const auto& e : enumerate_monomials(gf.params()).exponents)
            if (rng() % 2) p.set_term(gf, e, gf.random_element(rng));
        CHECK(sparse_poly_from_json(gf, sparse_poly_to_json(gf, p)) == p);
    }
    // huge exponents survive as decimal strings
    SparsePoly big;
    big.set_term(gf, (Exp(1) << 80) + 1, gf.one());
    const auto j = sparse_poly_to_json(gf, big);
    CHECK(j.at(0).at("exponent").get<std::string>() == ((Exp(1) << 80) + 1).str());
    CHECK(sparse_poly_from_json(gf, j) == big);
}

TEST_CASE("key files round trip") {
    const auto [sk, pk] = keygen(params_for(5, 99));
    const auto skj = private_key_to_json(sk);
    CHECK(skj.at("format_version") == 1);
    CHECK(skj.at("p") == 2);
    CHECK(skj.at("n") == 5);
    const auto sk2 = private_key_from_json(skj);
    CHECK(private_key_to_json(sk2) == skj);

    const auto pkj = public_key_to_json(pk);
    CHECK(pkj.at("format_version") == 1);
    const auto pk2 = public_key_from_json(pkj);
    CHECK(public_key_to_json(pk2) == pkj);

    // the reloaded private key decrypts what the reloaded public key encrypts
    const Gf gf(sk2.params.field);
    const std::vector<std::uint8_t> msg = {1, 0, 1, 1, 0};
    const auto ct = encrypt(pk2, msg);
    const auto cands = decrypt(gf, sk2, ct);
    CHECK(std::find(cands.begin(), cands.end(), msg) != cands.end());
}

TEST_CASE("alias and reduced key round trips") {
    const Gf gf(FieldParams::make_default(2, 5));
    const PrimeField fp(2);
    const Basis id = Basis::identity(fp, 5);
    const auto [sk, pk] = keygen(params_for(5, 7));
    const auto alias = recover_alias(gf, pk, id);

    const auto aj = alias_to_json(gf, alias);
    CHECK(aj.at("format_version") == 1);
    CHECK(aj.at("achieved_rank") == 16);
    const auto alias2 = alias_from_json(gf, aj);
    CHECK(alias2.a == alias.a);
    CHECK(alias2.points_used == alias.points_used);
    CHECK(alias2.convention == alias.convention);

    const auto rk = reduce(gf, alias);
    const auto rj = reduced_key_to_json(gf, rk);
    const auto rk2 = reduced_key_from_json(gf, rj);
    CHECK(rk2.f_prime == rk.f_prime);
    CHECK(mat_eq(gf, rk2.p_total, rk.p_total));
    CHECK(rk2.r == rk.r);
    CHECK(rk2.provenance == rk.provenance);
}

TEST_CASE("format version is enforced") {
    const auto [sk, pk] = keygen(params_for(4, 1));
    auto j = public_key_to_json(pk);
    j["format_version"] = 2;
    CHECK_THROWS(public_key_from_json(j));
}
