#pragma once

#include <json.hpp>

#include "entbound/bounds.hpp"

namespace entbound {

// State file schema (JSON):
//   {"m": 3, "n": 3, "density": [[re, im], ...]}            row-major mn x mn
//   {"m": 3, "n": 3, "ensemble": [{"p": w, "matrix": [[[re, im], ...], ...]}, ...]}
// Optional flags:
//   "exact": true      entries are Gaussian-rational strings ("1/2", "1/2-3/4i")
//   "normalize": true  state vectors are scaled to unit norm on load and the
//                      weights rescaled to sum to one
StateInput parse_state(const nlohmann::json& j);
StateInput load_state(const std::string& path);

nlohmann::json density_to_json(const DensityMatrix& rho);
void save_density(const DensityMatrix& rho, const std::string& path);

// Report payloads are fully deterministic for fixed seeds; volatile data
// (timestamps) lives outside the payload object.
nlohmann::json report_to_json(const SchmidtBoundReport& rep);
void save_report(const SchmidtBoundReport& rep, const std::string& path);

nlohmann::json wrap_payload(nlohmann::json payload);
void save_wrapped(const nlohmann::json& payload, const std::string& path);

}  // namespace entbound
