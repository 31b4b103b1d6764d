#include "entbound/state_io.hpp"

#include <chrono>
#include <cmath>
#include <fstream>

namespace entbound {

using nlohmann::json;

namespace {

std::size_t parse_dim(const json& j, const char* field) {
  if (!j.contains(field) || !j.at(field).is_number_integer()) {
    throw ParseError(std::string("field '") + field + "' must be an integer");
  }
  const long long v = j.at(field).get<long long>();
  if (v < 2) throw ParseError(std::string("field '") + field + "' must be >= 2");
  return static_cast<std::size_t>(v);
}

Cplx parse_float_entry(const json& e, const std::string& where) {
  if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number()) {
    throw ParseError(where + ": expected a [re, im] number pair");
  }
  return {e[0].get<double>(), e[1].get<double>()};
}

GaussianRational parse_exact_entry(const json& e, const std::string& where) {
  if (!e.is_string()) throw ParseError(where + ": exact entries must be strings");
  try {
    return GaussianRational::parse(e.get<std::string>());
  } catch (const ParseError& err) {
    throw ParseError(where + ": " + err.what());
  }
}

StateInput parse_density_payload(const json& j, std::size_t m, std::size_t n, bool exact) {
  const std::size_t mn = m * n;
  const auto& arr = j.at("density");
  if (!arr.is_array() || arr.size() != mn * mn) {
    throw ParseError("field 'density' must hold " + std::to_string(mn * mn) +
                     " row-major entries");
  }
  StateInput input;
  input.m = m;
  input.n = n;
  ComplexDenseMatrix mat(mn, mn);
  std::optional<ExactDenseMatrix> exact_mat;
  if (exact) exact_mat.emplace(mn, mn);
  for (std::size_t idx = 0; idx < arr.size(); ++idx) {
    const std::string where = "density[" + std::to_string(idx) + "]";
    const std::size_t i = idx / mn, k = idx % mn;
    if (exact) {
      auto g = parse_exact_entry(arr[idx], where);
      mat(i, k) = g.to_complex();
      (*exact_mat)(i, k) = std::move(g);
    } else {
      mat(i, k) = parse_float_entry(arr[idx], where);
    }
  }
  input.density = DensityMatrix::validated(std::move(mat), m, n);
  if (exact) {
    input.exact = ExactStateInput{m, n, std::move(exact_mat), {}};
  }
  return input;
}

StateInput parse_ensemble_payload(const json& j, std::size_t m, std::size_t n, bool exact,
                                  bool normalize) {
  const auto& arr = j.at("ensemble");
  if (!arr.is_array() || arr.empty()) {
    throw ParseError("field 'ensemble' must be a nonempty array");
  }
  StateInput input;
  input.m = m;
  input.n = n;

  std::vector<double> weights;
  std::vector<PureState> states;
  std::vector<ExactDenseMatrix> exact_coeffs;
  for (std::size_t l = 0; l < arr.size(); ++l) {
    const std::string where = "ensemble[" + std::to_string(l) + "]";
    const auto& entry = arr[l];
    if (!entry.is_object() || !entry.contains("p") || !entry.contains("matrix")) {
      throw ParseError(where + ": expected an object with 'p' and 'matrix'");
    }
    double p;
    if (entry.at("p").is_number()) {
      p = entry.at("p").get<double>();
    } else if (entry.at("p").is_string()) {
      p = parse_exact_entry(entry.at("p"), where + ".p").to_complex().real();
    } else {
      throw ParseError(where + ".p: expected a number or rational string");
    }
    if (!(p > 0.0)) {
      throw ParseError("NegativeWeight: " + where + ".p = " + std::to_string(p) +
                       " (weights must be > 0)");
    }
    weights.push_back(p);

    const auto& rows = entry.at("matrix");
    if (!rows.is_array() || rows.size() != m) {
      throw ParseError(where + ".matrix: expected " + std::to_string(m) + " rows");
    }
    ComplexDenseMatrix coeff(m, n);
    ExactDenseMatrix ecoeff;
    if (exact) ecoeff = ExactDenseMatrix(m, n);
    for (std::size_t i = 0; i < m; ++i) {
      const auto& row = rows[i];
      if (!row.is_array() || row.size() != n) {
        throw ParseError(where + ".matrix[" + std::to_string(i) + "]: expected " +
                         std::to_string(n) + " entries");
      }
      for (std::size_t jj = 0; jj < n; ++jj) {
        const std::string cell = where + ".matrix[" + std::to_string(i) + "][" +
                                 std::to_string(jj) + "]";
        if (exact) {
          auto g = parse_exact_entry(row[jj], cell);
          coeff(i, jj) = g.to_complex();
          ecoeff(i, jj) = std::move(g);
        } else {
          coeff(i, jj) = parse_float_entry(row[jj], cell);
        }
      }
    }
    states.push_back(normalize ? PureState::normalized(std::move(coeff))
                               : PureState::validated(std::move(coeff)));
    if (exact) exact_coeffs.push_back(std::move(ecoeff));
  }

  if (normalize) {
    double sum = 0.0;
    for (double w : weights) sum += w;
    for (double& w : weights) w /= sum;
  }
  input.ensemble = Ensemble::validated(std::move(weights), std::move(states));
  if (exact) {
    input.exact = ExactStateInput{m, n, std::nullopt, std::move(exact_coeffs)};
  }
  return input;
}

}  // namespace

StateInput parse_state(const json& j) {
  if (!j.is_object()) throw ParseError("top level must be a JSON object");
  const std::size_t m = parse_dim(j, "m");
  const std::size_t n = parse_dim(j, "n");
  const bool exact = j.value("exact", false);
  const bool normalize = j.value("normalize", false);
  const bool has_density = j.contains("density");
  const bool has_ensemble = j.contains("ensemble");
  if (has_density == has_ensemble) {
    throw ParseError("expected exactly one of 'density' or 'ensemble'");
  }
  return has_density ? parse_density_payload(j, m, n, exact)
                     : parse_ensemble_payload(j, m, n, exact, normalize);
}

StateInput load_state(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
  try {
    return parse_state(j);
  } catch (ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

json density_to_json(const DensityMatrix& rho) {
  json entries = json::array();
  const auto& m = rho.matrix();
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      entries.push_back({m(i, j).real(), m(i, j).imag()});
  return json{{"m", rho.dim_a()}, {"n", rho.dim_b()}, {"density", std::move(entries)}};
}

void save_density(const DensityMatrix& rho, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write '" + path + "'");
  out << density_to_json(rho).dump(2) << "\n";
}

namespace {

json verdict_to_json(const VarietyVerdict& v) {
  json jv{{"level", v.level},
          {"status", to_string(v.status)},
          {"engine", to_string(v.engine)},
          {"certified_nonempty", v.certified_nonempty}};
  if (std::isnan(v.achieved_sigma)) {
    jv["achieved_sigma"] = nullptr;
  } else {
    jv["achieved_sigma"] = v.achieved_sigma;
  }
  if (v.witness) {
    json w = json::array();
    for (const auto& c : *v.witness) w.push_back({c.real(), c.imag()});
    jv["witness"] = std::move(w);
  } else {
    jv["witness"] = nullptr;
  }
  return jv;
}

json side_to_json(const SideAnalysis& sa) {
  if (!sa.analyzed) return json{{"analyzed", false}};
  json verdicts = json::array();
  for (const auto& v : sa.verdicts) verdicts.push_back(verdict_to_json(v));
  return json{{"analyzed", true},
              {"best_empty_level", sa.best_empty_level},
              {"bound", sa.bound},
              {"degenerate", sa.degenerate},
              {"verdicts", std::move(verdicts)}};
}

}  // namespace

json report_to_json(const SchmidtBoundReport& rep) {
  return json{
      {"type", "schmidt_bound_report"},
      {"m", rep.m},
      {"n", rep.n},
      {"rank", rep.rank},
      {"rank_provenance", rep.rank_exact ? "exact" : "numerical"},
      {"ppt", {{"is_ppt", rep.ppt.is_ppt}, {"min_eigenvalue", rep.ppt.min_eigenvalue}}},
      {"sides", {{"A", side_to_json(rep.side_a)}, {"B", side_to_json(rep.side_b)}}},
      {"schmidt_lower_bound", rep.schmidt_lower_bound},
      {"winning", {{"side", side_name(rep.winning_side)}, {"level", rep.winning_level}}},
      {"entangled", rep.entangled},
      {"certification", to_string(rep.certification)},
      {"engine", to_string(rep.engine_used)},
      {"config",
       {{"engine", to_string(rep.config.engine)},
        {"num_starts", rep.config.opt.num_starts},
        {"max_iters", rep.config.opt.max_iters},
        {"witness_tol", rep.config.opt.witness_tol},
        {"evidence_tol", rep.config.opt.evidence_tol},
        {"seed", rep.config.opt.seed},
        {"rank_rel_tol", rep.config.tol.rank_rel_tol},
        {"hermiticity_tol", rep.config.tol.hermiticity_tol},
        {"psd_tol", rep.config.tol.psd_tol},
        {"trace_tol", rep.config.tol.trace_tol}}}};
}

json wrap_payload(json payload) {
  const auto now = std::chrono::system_clock::now().time_since_epoch();
  return json{{"payload", std::move(payload)},
              {"generated_at_unix_ms",
               std::chrono::duration_cast<std::chrono::milliseconds>(now).count()}};
}

void save_wrapped(const json& payload, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write '" + path + "'");
  out << wrap_payload(payload).dump(2) << "\n";
}

void save_report(const SchmidtBoundReport& rep, const std::string& path) {
  save_wrapped(report_to_json(rep), path);
}

}  // namespace entbound
