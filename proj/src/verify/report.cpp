#include "nnc/report.hpp"

#include "nnc/error.hpp"

namespace nnc {

nlohmann::json to_json(const VerificationReport& report) {
  nlohmann::json violations = nlohmann::json::array();
  for (const Witness& w : report.violations) {
    nlohmann::json v{{"query", w.query},
                     {"observed", w.observed},
                     {"required", w.required},
                     {"detail", w.detail}};
    if (w.point) v["point"] = *w.point;
    violations.push_back(std::move(v));
  }
  nlohmann::json j{{"criterion", std::string(to_string(report.criterion))},
                   {"passed", report.passed},
                   {"samples_tested", report.samples_tested},
                   {"rng_seed", report.rng_seed},
                   {"violations", std::move(violations)}};
  if (report.samples_in_region) j["samples_in_region"] = *report.samples_in_region;
  return j;
}

VerificationReport report_from_json(const nlohmann::json& j) {
  try {
    VerificationReport report;
    report.criterion = parse_criterion(j.at("criterion").get<std::string>());
    report.passed = j.at("passed").get<bool>();
    report.samples_tested = j.at("samples_tested").get<std::size_t>();
    report.rng_seed = j.at("rng_seed").get<std::uint64_t>();
    for (const auto& v : j.at("violations")) {
      Witness w;
      w.query = v.at("query").get<std::vector<double>>();
      w.observed = v.at("observed").get<double>();
      w.required = v.at("required").get<double>();
      w.detail = v.at("detail").get<std::string>();
      if (v.contains("point")) w.point = v.at("point").get<PointIndex>();
      report.violations.push_back(std::move(w));
    }
    if (j.contains("samples_in_region")) {
      report.samples_in_region = j.at("samples_in_region").get<std::size_t>();
    }
    return report;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParse, std::string("malformed report: ") + e.what());
  }
}

}  // namespace nnc
