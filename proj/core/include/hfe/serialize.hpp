#ifndef HFE_SERIALIZE_HPP
#define HFE_SERIALIZE_HPP

// JSON file formats. Every document carries {format_version: 1, p, n};
// GF(p) scalars are integers, matrices row-major, K elements little-endian
// digit strings, exponents decimal strings.

#include <string>

#include <json.hpp>

#include "hfe/alias.hpp"
#include "hfe/field.hpp"
#include "hfe/forms.hpp"
#include "hfe/hfe.hpp"

namespace hfe {

inline constexpr int kFormatVersion = 1;

nlohmann::json field_params_to_json(const FieldParams& params);
FieldParams field_params_from_json(const nlohmann::json& j);

nlohmann::json sparse_poly_to_json(const Gf& gf, const SparsePoly& poly);
SparsePoly sparse_poly_from_json(const Gf& gf, const nlohmann::json& j);

nlohmann::json private_key_to_json(const PrivateKey& sk);
PrivateKey private_key_from_json(const nlohmann::json& j);

nlohmann::json public_key_to_json(const PublicKey& pk);
PublicKey public_key_from_json(const nlohmann::json& j);

// Alias report also records the field so `reduce` can reload it standalone.
nlohmann::json alias_to_json(const Gf& gf, const AliasKey& alias);
AliasKey alias_from_json(const Gf& gf, const nlohmann::json& j);

nlohmann::json reduced_key_to_json(const Gf& gf, const ReducedKey& rk);
ReducedKey reduced_key_from_json(const Gf& gf, const nlohmann::json& j);

nlohmann::json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const nlohmann::json& j);

}  // namespace hfe

#endif
