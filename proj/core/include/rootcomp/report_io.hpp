#pragma once

#include <string>

#include "rootcomp/mult_table.hpp"
#include "rootcomp/tensor.hpp"
#include "rootcomp/verify.hpp"

#include "json.hpp"

namespace rootcomp {

// Weight <-> {"finite":[...], "level":n, "s":...}; rationals serialize as
// JSON integers when integral and as "p/q" strings otherwise, and both forms
// are accepted on input, so parse/serialize round-trips are idempotent.
nlohmann::json weight_to_json(const Weight& w);
Weight weight_from_json(const CartanData& cd, const nlohmann::json& j);

nlohmann::json mult_table_to_json(const CartanData& cd, const MultTable& t);
std::string mult_table_to_tsv(const CartanData& cd, const MultTable& t);
std::string mult_table_to_text(const CartanData& cd, const MultTable& t);

nlohmann::json decomposition_to_json(const CartanData& cd, const DecompositionReport& r);
DecompositionReport decomposition_from_json(const CartanData& cd, const nlohmann::json& j);
std::string decomposition_to_tsv(const CartanData& cd, const DecompositionReport& r);
std::string decomposition_to_text(const CartanData& cd, const DecompositionReport& r);

nlohmann::json verification_to_json(const VerificationReport& r);
std::string verification_to_text(const VerificationReport& r);

}  // namespace rootcomp
