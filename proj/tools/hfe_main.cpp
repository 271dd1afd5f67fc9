// hfe: key management, encryption, the interpolation attack, the published
// toy instance, and the scaling benchmark.
//
// Exit codes: 0 success, 1 usage/IO error, 2 domain failure (not in image,
// rank deficient), 3 internal invariant breach.

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "hfe/alias.hpp"
#include "hfe/bench.hpp"
#include "hfe/forms.hpp"
#include "hfe/hfe.hpp"
#include "hfe/serialize.hpp"
#include "hfe/toy_example.hpp"

namespace {

using nlohmann::json;

int cmd_keygen(std::uint32_t p, std::uint32_t n, std::uint64_t d, std::uint64_t seed,
               const std::string& out_private, const std::string& out_public) {
    const hfe::FieldParams field = hfe::FieldParams::make_default(p, n);
    const hfe::HfeParams params{field, d, seed};
    const auto [sk, pk] = hfe::keygen(params);
    hfe::save_json_file(out_private, hfe::private_key_to_json(sk));
    hfe::save_json_file(out_public, hfe::public_key_to_json(pk));
    const auto w = hfe::enumerate_monomials(field).count;
    std::cout << "wrote " << out_private << " and " << out_public << "\n"
              << "alias unknowns W = " << w << ", expected attack cost W^3 = "
              << static_cast<unsigned long long>(w) * w * w << " K-multiplications\n";
    return 0;
}

int cmd_encrypt(const std::string& public_path, const std::string& msg_text) {
    const auto pk = hfe::public_key_from_json(hfe::load_json_file(public_path));
    const hfe::Gf gf(hfe::FieldParams::make_default(pk.p, pk.n));
    const auto msg = gf.from_text(msg_text);
    const auto ct = hfe::encrypt(pk, msg.coeffs);
    std::cout << gf.to_text(hfe::FieldElement{ct}) << "\n";
    return 0;
}

int cmd_decrypt(const std::string& private_path, const std::string& ct_text) {
    const auto sk = hfe::private_key_from_json(hfe::load_json_file(private_path));
    const hfe::Gf gf(sk.params.field);
    const auto ct = gf.from_text(ct_text);
    const auto candidates = hfe::decrypt(gf, sk, ct.coeffs);
    if (candidates.empty()) {
        std::cerr << "not in image: no plaintext encrypts to this ciphertext\n";
        return 2;
    }
    for (const auto& cand : candidates)
        std::cout << gf.to_text(hfe::FieldElement{cand}) << "\n";
    return 0;
}

int cmd_recover_alias(const std::string& public_path, const std::string& out_path) {
    const auto pk = hfe::public_key_from_json(hfe::load_json_file(public_path));
    // Eve chooses her own field representation; the deterministic smallest
    // irreducible modulus and the power basis.
    const hfe::Gf gf(hfe::FieldParams::make_default(pk.p, pk.n));
    const hfe::PrimeField fp(pk.p);
    const hfe::Basis basis = hfe::Basis::identity(fp, pk.n);
    const auto alias = hfe::recover_alias(gf, pk, basis);
    hfe::save_json_file(out_path, hfe::alias_to_json(gf, alias));
    std::cout << "recovered alias with " << alias.a.term_count() << " terms using "
              << alias.points_used << " points (rank " << alias.achieved_rank << ")\n";
    return 0;
}

int cmd_reduce(const std::string& alias_path, const std::string& out_path) {
    const auto aj = hfe::load_json_file(alias_path);
    const hfe::FieldParams field = hfe::FieldParams::make(
        aj.at("p").get<std::uint32_t>(), aj.at("n").get<std::uint32_t>(),
        [&aj] {
            std::vector<std::uint8_t> m;
            for (const auto& c : aj.at("modulus")) m.push_back(c.get<std::uint8_t>());
            return m;
        }());
    const hfe::Gf gf(field);
    const auto alias = hfe::alias_from_json(gf, aj);
    const auto rk = hfe::reduce(gf, alias);
    auto out = hfe::reduced_key_to_json(gf, rk);
    out["constant_preserved"] =
        gf.eq(rk.f_prime.coeff(gf, 0), alias.a.coeff(gf, 0));
    hfe::save_json_file(out_path, out);
    std::cout << "reduced: r = " << rk.r << ", deg F' = " << rk.f_prime.degree().str()
              << " (was " << alias.a.degree().str() << ")\n";
    return 0;
}

int cmd_attack(const std::string& public_path, const std::string& ct_text) {
    const auto pk = hfe::public_key_from_json(hfe::load_json_file(public_path));
    const hfe::Gf gf(hfe::FieldParams::make_default(pk.p, pk.n));
    const hfe::PrimeField fp(pk.p);
    const hfe::Basis basis = hfe::Basis::identity(fp, pk.n);

    const auto alias = hfe::recover_alias(gf, pk, basis);
    std::cout << json{{"stage", "recover-alias"},
                      {"points_used", alias.points_used},
                      {"achieved_rank", alias.achieved_rank}}
                     .dump()
              << "\n";

    const auto rk = hfe::reduce(gf, alias);
    std::cout << json{{"stage", "reduce"},
                      {"r", rk.r},
                      {"deg_F_prime", rk.f_prime.degree().str()}}
                     .dump()
              << "\n";

    const auto ct_vec = gf.from_text(ct_text);
    const auto ct = hfe::encode(gf, ct_vec.coeffs, basis);
    const auto candidates = hfe::solve_via_reduction(gf, rk, alias, ct);
    int verified = 0;
    for (const auto& x : candidates) {
        const auto plain = hfe::decode(gf, x, basis);
        const bool ok = hfe::encrypt(pk, plain) == ct_vec.coeffs;
        if (ok) ++verified;
        std::cout << json{{"stage", "candidate"},
                          {"plaintext", gf.to_text(hfe::FieldElement{plain})},
                          {"verified", ok}}
                         .dump()
                  << "\n";
    }
    std::cout << json{{"stage", "summary"},
                      {"candidates", candidates.size()},
                      {"verified", verified},
                      {"hit", verified > 0}}
                     .dump()
              << "\n";
    return 0;
}

int cmd_demo_toy() {
    const auto v = hfe::toy::run_demo();
    for (const auto& line : v.verdict_lines) std::cout << line << "\n";
    return 0;
}

int cmd_bench(std::uint32_t n_min, std::uint32_t n_max, std::uint32_t trials,
              const std::string& out_csv) {
    const auto rows = hfe::run_attack_bench(n_min, n_max, trials);
    if (out_csv.empty() || out_csv == "-") {
        hfe::write_csv(rows, std::cout);
    } else {
        std::ofstream out(out_csv);
        if (!out) throw hfe::Error("cannot write " + out_csv);
        hfe::write_csv(rows, out);
    }
    const auto mult_fit = hfe::fit_loglog_mults(rows);
    const auto wall_fit = hfe::fit_loglog_wall(rows);
    std::cout << "log-log slope of solve K-multiplications vs n: " << mult_fit.slope
              << "\n"
              << "log-log slope of wall time vs n (context only): " << wall_fit.slope
              << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"HFE workbench: cryptosystem, interpolation attack, benchmark"};
    app.require_subcommand(1);

    std::uint32_t p = 2, n = 8;
    std::uint64_t d = 8, seed = 1;
    std::string out_private = "private.json", out_public = "public.json";
    auto* keygen_cmd = app.add_subcommand("keygen", "generate a key pair");
    keygen_cmd->add_option("--p", p, "prime base field order")->capture_default_str();
    keygen_cmd->add_option("--n", n, "extension degree")->capture_default_str();
    keygen_cmd->add_option("--d", d, "degree bound for the private polynomial")
        ->capture_default_str();
    keygen_cmd->add_option("--seed", seed, "keygen seed")->capture_default_str();
    keygen_cmd->add_option("--out-private", out_private, "private key file")
        ->capture_default_str();
    keygen_cmd->add_option("--out-public", out_public, "public key file")
        ->capture_default_str();

    std::string public_path, private_path, msg_text, ct_text, alias_path, out_path;
    auto* encrypt_cmd = app.add_subcommand("encrypt", "encrypt a message vector");
    encrypt_cmd->add_option("--public", public_path, "public key file")->required();
    encrypt_cmd->add_option("--msg", msg_text, "message digits, little-endian")->required();

    auto* decrypt_cmd = app.add_subcommand("decrypt", "list all plaintext candidates");
    decrypt_cmd->add_option("--private", private_path, "private key file")->required();
    decrypt_cmd->add_option("--ct", ct_text, "ciphertext digits, little-endian")->required();

    auto* recover_cmd = app.add_subcommand("recover-alias",
                                           "recover the univariate alias of a public key");
    recover_cmd->add_option("--public", public_path, "public key file")->required();
    recover_cmd->add_option("--out", out_path, "alias report file")->required();

    auto* reduce_cmd = app.add_subcommand("reduce", "canonicalize an alias to low degree");
    reduce_cmd->add_option("--alias", alias_path, "alias report file")->required();
    reduce_cmd->add_option("--out", out_path, "reduced key file")->required();

    auto* attack_cmd = app.add_subcommand("attack", "full pipeline on one ciphertext");
    attack_cmd->add_option("--public", public_path, "public key file")->required();
    attack_cmd->add_option("--ct", ct_text, "ciphertext digits, little-endian")->required();

    app.add_subcommand("demo-toy", "reproduce the published toy instance");

    std::uint32_t n_min = 8, n_max = 16, trials = 1;
    std::string out_csv = "-";
    auto* bench_cmd = app.add_subcommand("bench", "scaling benchmark of the attack");
    bench_cmd->add_option("--n-min", n_min, "smallest extension degree")
        ->capture_default_str();
    bench_cmd->add_option("--n-max", n_max, "largest extension degree")
        ->capture_default_str();
    bench_cmd->add_option("--trials", trials, "keys per n")->capture_default_str();
    bench_cmd->add_option("--out-csv", out_csv, "CSV path, '-' for stdout")
        ->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand("keygen"))
            return cmd_keygen(p, n, d, seed, out_private, out_public);
        if (app.got_subcommand("encrypt")) return cmd_encrypt(public_path, msg_text);
        if (app.got_subcommand("decrypt")) return cmd_decrypt(private_path, ct_text);
        if (app.got_subcommand("recover-alias"))
            return cmd_recover_alias(public_path, out_path);
        if (app.got_subcommand("reduce")) return cmd_reduce(alias_path, out_path);
        if (app.got_subcommand("attack")) return cmd_attack(public_path, ct_text);
        if (app.got_subcommand("demo-toy")) return cmd_demo_toy();
        if (app.got_subcommand("bench")) return cmd_bench(n_min, n_max, trials, out_csv);
    } catch (const hfe::VerificationError& e) {
        std::cerr << "internal invariant breach: " << e.what() << "\n";
        return 3;
    } catch (const hfe::RankDeficientError& e) {
        std::cerr << "domain failure: " << e.what() << "\n";
        return 2;
    } catch (const hfe::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
