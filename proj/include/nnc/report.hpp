#pragma once

#include <string>

#include "json.hpp"
#include "nnc/verify.hpp"

namespace nnc {

/// {criterion, passed, samples_tested, rng_seed, violations:[{query,
/// observed, required, detail}]} plus `point` / `samples_in_region` when set.
nlohmann::json to_json(const VerificationReport& report);
VerificationReport report_from_json(const nlohmann::json& j);

}  // namespace nnc
