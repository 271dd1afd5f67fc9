#include "hfe/serialize.hpp"

#include <fstream>

namespace hfe {

using nlohmann::json;

namespace {

json matrix_to_json(const Mat<PrimeField>& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows; ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols; ++j) row.push_back(int{m.at(i, j)});
        rows.push_back(std::move(row));
    }
    return rows;
}

Mat<PrimeField> matrix_from_json(const PrimeField& f, const json& j) {
    const std::size_t rows = j.size();
    const std::size_t cols = rows ? j.at(0).size() : 0;
    Mat<PrimeField> m(f, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t k = 0; k < cols; ++k)
            m.at(i, k) = j.at(i).at(k).get<std::uint8_t>();
    return m;
}

json k_matrix_to_json(const Gf& gf, const Mat<Gf>& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows; ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols; ++j) row.push_back(gf.to_text(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Mat<Gf> k_matrix_from_json(const Gf& gf, const json& j) {
    const std::size_t rows = j.size();
    const std::size_t cols = rows ? j.at(0).size() : 0;
    Mat<Gf> m(gf, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t k = 0; k < cols; ++k)
            m.at(i, k) = gf.from_text(j.at(i).at(k).get<std::string>());
    return m;
}

std::vector<std::uint8_t> bytes_from_json(const json& j) {
    std::vector<std::uint8_t> v;
    for (const auto& e : j) v.push_back(e.get<std::uint8_t>());
    return v;
}

json bytes_to_json(const std::vector<std::uint8_t>& v) {
    json out = json::array();
    for (auto c : v) out.push_back(int{c});
    return out;
}

void check_header(const json& j) {
    if (!j.contains("format_version") || j.at("format_version").get<int>() != kFormatVersion)
        throw Error("unsupported file format version");
}

}  // namespace

json field_params_to_json(const FieldParams& params) {
    return json{{"p", params.p}, {"n", params.n}, {"modulus", bytes_to_json(params.modulus)}};
}

FieldParams field_params_from_json(const json& j) {
    return FieldParams::make(j.at("p").get<std::uint32_t>(), j.at("n").get<std::uint32_t>(),
                             bytes_from_json(j.at("modulus")));
}

json sparse_poly_to_json(const Gf& gf, const SparsePoly& poly) {
    json terms = json::array();
    for (const auto& [e, c] : poly.terms())
        terms.push_back(json{{"exponent", e.str()}, {"coeff", gf.to_text(c)}});
    return terms;
}

SparsePoly sparse_poly_from_json(const Gf& gf, const json& j) {
    SparsePoly poly;
    for (const auto& term : j) {
        const Exp e(term.at("exponent").get<std::string>());
        poly.set_term(gf, e, gf.from_text(term.at("coeff").get<std::string>()));
    }
    return poly;
}

json private_key_to_json(const PrivateKey& sk) {
    const Gf gf(sk.params.field);
    json j;
    j["format_version"] = kFormatVersion;
    j["p"] = sk.params.field.p;
    j["n"] = sk.params.field.n;
    j["modulus"] = bytes_to_json(sk.params.field.modulus);
    j["d"] = sk.params.d.str();
    j["seed"] = sk.params.seed;
    j["basis"] = matrix_to_json(sk.basis.matrix());
    j["f"] = sparse_poly_to_json(gf, sk.f);
    j["S"] = json{{"matrix", matrix_to_json(sk.s.matrix)},
                  {"translation", bytes_to_json(sk.s.translation)}};
    j["T"] = json{{"matrix", matrix_to_json(sk.t.matrix)},
                  {"translation", bytes_to_json(sk.t.translation)}};
    return j;
}

PrivateKey private_key_from_json(const json& j) {
    check_header(j);
    FieldParams field = FieldParams::make(j.at("p").get<std::uint32_t>(),
                                          j.at("n").get<std::uint32_t>(),
                                          bytes_from_json(j.at("modulus")));
    const Gf gf(field);
    const PrimeField fp(field.p);
    HfeParams params{field, BigInt(j.at("d").get<std::string>()),
                     j.at("seed").get<std::uint64_t>()};
    Basis basis = Basis::make(fp, matrix_from_json(fp, j.at("basis")));
    SparsePoly f = sparse_poly_from_json(gf, j.at("f"));
    AffineMap s{matrix_from_json(fp, j.at("S").at("matrix")),
                bytes_from_json(j.at("S").at("translation"))};
    AffineMap t{matrix_from_json(fp, j.at("T").at("matrix")),
                bytes_from_json(j.at("T").at("translation"))};
    return PrivateKey{std::move(params), std::move(basis), std::move(f), std::move(s),
                      std::move(t)};
}

json public_key_to_json(const PublicKey& pk) {
    json j;
    j["format_version"] = kFormatVersion;
    j["p"] = pk.p;
    j["n"] = pk.n;
    json polys = json::array();
    for (const auto& poly : pk.polys) {
        polys.push_back(json{{"constant", int{poly.constant}},
                             {"linear", bytes_to_json(poly.linear)},
                             {"quad", matrix_to_json(poly.quad)}});
    }
    j["polys"] = std::move(polys);
    return j;
}

PublicKey public_key_from_json(const json& j) {
    check_header(j);
    PublicKey pk;
    pk.p = j.at("p").get<std::uint32_t>();
    pk.n = j.at("n").get<std::uint32_t>();
    const PrimeField fp(pk.p);
    for (const auto& poly : j.at("polys")) {
        PublicPoly pp;
        pp.constant = poly.at("constant").get<std::uint8_t>();
        pp.linear = bytes_from_json(poly.at("linear"));
        pp.quad = matrix_from_json(fp, poly.at("quad"));
        pk.polys.push_back(std::move(pp));
    }
    return pk;
}

json alias_to_json(const Gf& gf, const AliasKey& alias) {
    json j;
    j["format_version"] = kFormatVersion;
    j["p"] = gf.p();
    j["n"] = gf.n();
    j["modulus"] = bytes_to_json(gf.params().modulus);
    j["A"] = sparse_poly_to_json(gf, alias.a);
    j["points_used"] = alias.points_used;
    j["achieved_rank"] = alias.achieved_rank;
    j["convention"] = alias.convention;
    return j;
}

AliasKey alias_from_json(const Gf& gf, const json& j) {
    check_header(j);
    AliasKey alias;
    alias.a = sparse_poly_from_json(gf, j.at("A"));
    alias.points_used = j.at("points_used").get<std::size_t>();
    alias.achieved_rank = j.at("achieved_rank").get<std::size_t>();
    alias.convention = j.at("convention").get<std::string>();
    return alias;
}

json reduced_key_to_json(const Gf& gf, const ReducedKey& rk) {
    json j;
    j["format_version"] = kFormatVersion;
    j["p"] = gf.p();
    j["n"] = gf.n();
    j["F_prime"] = sparse_poly_to_json(gf, rk.f_prime);
    j["P_total"] = k_matrix_to_json(gf, rk.p_total);
    j["r"] = rk.r;
    j["degree"] = rk.f_prime.degree().str();
    j["provenance"] = rk.provenance;
    return j;
}

ReducedKey reduced_key_from_json(const Gf& gf, const json& j) {
    check_header(j);
    ReducedKey rk;
    rk.f_prime = sparse_poly_from_json(gf, j.at("F_prime"));
    rk.p_total = k_matrix_from_json(gf, j.at("P_total"));
    rk.r = j.at("r").get<std::size_t>();
    rk.provenance = j.at("provenance").get<std::string>();
    return rk;
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    json j;
    in >> j;
    return j;
}

void save_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write " + path);
    out << j.dump(2) << '\n';
}

}  // namespace hfe
