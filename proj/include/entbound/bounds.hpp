#pragma once

#include <array>

#include "entbound/exact_pencil.hpp"

namespace entbound {

// Input to the analysis pipeline: a state as loaded from a file or built
// programmatically. The float form is always present; the exact payload is
// carried alongside when the source was exact.
struct StateInput {
  std::size_t m = 0, n = 0;
  std::optional<DensityMatrix> density;
  std::optional<Ensemble> ensemble;
  std::optional<ExactStateInput> exact;

  DensityMatrix to_density(const ToleranceConfig& tol = {}) const;
};

struct BoundValue {
  int value = 1;
  // r <= h would mean the whole parameter space is rank deficient while
  // level h is empty, which signals an upstream verdict error; the bound is
  // capped at the local dimension and flagged.
  bool degenerate = false;
};

// Schmidt-number lower bound from one empty level: ceil(dim / (r - h)) when
// r > h; dim (flagged) when r <= h; 1 when h is the no-empty-level sentinel.
BoundValue schmidt_lower_bound(std::size_t dim, std::size_t r, int h);

// Dimension-count prediction for generic rank-r states: the level-k locus on
// side A is expected empty iff (n-k)(r-k) >= m (the codimension of the
// rank-<=k stratum at least matches the parameter dimension); side B swaps
// the roles of m and n.
bool generic_emptiness_prediction(std::size_t m, std::size_t n, std::size_t r, std::size_t k,
                                  Side side);

struct PredictionCase {
  int id = 0;     // printed-case label, 1..4
  int value = 0;  // integerized bound the case formula yields
};

struct GenericPrediction {
  std::size_t m = 0, n = 0, r = 0;
  int predicted_level_a = -1;
  int predicted_level_b = -1;
  int predicted_bound = 1;  // from direct search over the prediction levels
  std::vector<PredictionCase> cases;
};

// Direct search for the largest generically-empty level on each side plus
// the closed-form case values that apply to (m, n, r).
GenericPrediction predict_generic_bound(std::size_t m, std::size_t n, std::size_t r);

struct ProductSpanCheck {
  bool pass = false;
  std::array<std::size_t, 3> schmidt_ranks{};
  bool independent = false;
  double max_orthogonality_residual = 0.0;
};

// The rank-one triple v1 = -c|11>+a|21>, v2 = -d|12>+b|22>,
// v3 = -(c+d)(|11>+|12>) + (a+b)(|21>+|22>) spans a 3-dimensional subspace
// of product vectors annihilated by (a, b, c, d) under the bilinear pairing.
// Throws ValidationError (DegenerateParameters) when d = 0 or ad = bc.
ProductSpanCheck verify_product_span(Cplx a, Cplx b, Cplx c, Cplx d);

enum class EngineChoice { Auto, Numeric, Symbolic };
enum class Certification { Certified, NumericalEvidence };

const char* to_string(EngineChoice e);
const char* to_string(Certification c);

struct AnalyzeConfig {
  EngineChoice engine = EngineChoice::Auto;
  OptimizerConfig opt;
  ToleranceConfig tol;
  GroebnerLimits limits;
  bool side_a = true;
  bool side_b = true;
};

struct SideAnalysis {
  Side side = Side::A;
  bool analyzed = false;
  int best_empty_level = -1;
  std::vector<VarietyVerdict> verdicts;
  int bound = 1;
  bool degenerate = false;
};

struct SchmidtBoundReport {
  std::size_t m = 0, n = 0;
  std::size_t rank = 0;
  bool rank_exact = false;
  SideAnalysis side_a, side_b;
  int schmidt_lower_bound = 1;
  Side winning_side = Side::A;
  int winning_level = -1;
  bool entangled = false;
  Certification certification = Certification::NumericalEvidence;
  PptResult ppt;
  EngineChoice engine_used = EngineChoice::Numeric;
  AnalyzeConfig config;
};

// Full per-state analysis: both pencils, level scans (exact engine when the
// input carries exact data and the engine choice allows it), bounds from
// both sides, PPT, and provenance.
SchmidtBoundReport analyze(const StateInput& input, const AnalyzeConfig& cfg = {});

}  // namespace entbound
