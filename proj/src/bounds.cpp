#include "entbound/bounds.hpp"

#include <cmath>

namespace entbound {

DensityMatrix StateInput::to_density(const ToleranceConfig& tol) const {
  if (density) return *density;
  if (ensemble) return from_ensemble(*ensemble, tol);
  throw ValidationError("StateInput holds neither a density matrix nor an ensemble");
}

const char* to_string(EngineChoice e) {
  switch (e) {
    case EngineChoice::Auto: return "auto";
    case EngineChoice::Numeric: return "numeric";
    case EngineChoice::Symbolic: return "symbolic";
  }
  return "?";
}

const char* to_string(Certification c) {
  return c == Certification::Certified ? "Certified" : "NumericalEvidence";
}

BoundValue schmidt_lower_bound(std::size_t dim, std::size_t r, int h) {
  if (h < 0) return BoundValue{1, false};
  const auto hh = static_cast<std::size_t>(h);
  if (r <= hh) return BoundValue{static_cast<int>(dim), true};
  const std::size_t denom = r - hh;
  return BoundValue{static_cast<int>((dim + denom - 1) / denom), false};
}

bool generic_emptiness_prediction(std::size_t m, std::size_t n, std::size_t r, std::size_t k,
                                  Side side) {
  const std::size_t rows = side == Side::A ? n : m;    // shape of M(r) is rows x r
  const std::size_t params = side == Side::A ? m : n;  // dimension of the parameter space
  if (k >= std::min(rows, r)) return false;            // rank <= k holds identically
  return (rows - k) * (r - k) >= params;
}

namespace {

std::size_t isqrt(std::size_t x) {
  auto r = static_cast<std::size_t>(std::sqrt(static_cast<double>(x)));
  while (r * r > x) --r;
  while ((r + 1) * (r + 1) <= x) ++r;
  return r;
}

int ceil_div(std::size_t num, std::size_t den) {
  return static_cast<int>((num + den - 1) / den);
}

int predicted_level(std::size_t m, std::size_t n, std::size_t r, Side side) {
  const std::size_t rows = side == Side::A ? n : m;
  int best = -1;
  for (std::size_t k = 0; k < std::min(rows, r); ++k) {
    if (generic_emptiness_prediction(m, n, r, k, side)) best = static_cast<int>(k);
  }
  return best;
}

}  // namespace

GenericPrediction predict_generic_bound(std::size_t m, std::size_t n, std::size_t r) {
  if (m < 2 || n < 2 || r < 1 || r > m * n) {
    throw ValidationError("predict_generic_bound: need m,n >= 2 and 1 <= r <= mn");
  }
  GenericPrediction out;
  out.m = m;
  out.n = n;
  out.r = r;
  out.predicted_level_a = predicted_level(m, n, r, Side::A);
  out.predicted_level_b = predicted_level(m, n, r, Side::B);
  out.predicted_bound = std::max(schmidt_lower_bound(m, r, out.predicted_level_a).value,
                                 schmidt_lower_bound(n, r, out.predicted_level_b).value);

  // Closed-form case values, each evaluated exactly as printed and
  // integerized by ceiling where the formula is a ratio.
  {
    int v = 0;
    bool applicable = false;
    if (r <= m) {
      v = std::max(v, static_cast<int>(isqrt(m)) - 1);
      applicable = true;
    }
    if (r <= n) {
      v = std::max(v, static_cast<int>(isqrt(n)) - 1);
      applicable = true;
    }
    if (applicable) out.cases.push_back(PredictionCase{1, v});
  }
  {
    int v = 0;
    bool applicable = false;
    if (r > m) {
      v = std::max(v, ceil_div(m, r - m + isqrt(m) + 1));
      applicable = true;
    }
    if (r > n) {
      v = std::max(v, ceil_div(n, r - n + isqrt(n) + 1));
      applicable = true;
    }
    if (applicable) out.cases.push_back(PredictionCase{2, v});
  }
  if ((m >= 169 && r > m && 2 * r <= 3 * m - 10) || (n >= 169 && r > n && 2 * r <= 3 * n - 10)) {
    out.cases.push_back(PredictionCase{3, 3});
  }
  if (r <= m + n - 3) {
    out.cases.push_back(PredictionCase{4, 2});
  }
  return out;
}

ProductSpanCheck verify_product_span(Cplx a, Cplx b, Cplx c, Cplx d) {
  const double scale = std::max({std::abs(a), std::abs(b), std::abs(c), std::abs(d), 1e-300});
  if (std::abs(d) <= 1e-12 * scale || std::abs(a * d - b * c) <= 1e-12 * scale * scale) {
    throw ValidationError("DegenerateParameters: need d != 0 and ad != bc");
  }

  std::array<ComplexDenseMatrix, 3> vecs{ComplexDenseMatrix(2, 2), ComplexDenseMatrix(2, 2),
                                         ComplexDenseMatrix(2, 2)};
  vecs[0](0, 0) = -c;
  vecs[0](1, 0) = a;
  vecs[1](0, 1) = -d;
  vecs[1](1, 1) = b;
  vecs[2](0, 0) = -(c + d);
  vecs[2](0, 1) = -(c + d);
  vecs[2](1, 0) = a + b;
  vecs[2](1, 1) = a + b;

  ProductSpanCheck out;
  const std::array<Cplx, 4> normal{a, b, c, d};
  ComplexDenseMatrix stacked(3, 4);
  double max_residual = 0.0;
  for (std::size_t l = 0; l < 3; ++l) {
    const auto state = PureState::normalized(vecs[l]);
    out.schmidt_ranks[l] = schmidt_rank(state);
    const auto amp = state.amplitudes();
    // The span is annihilated by (a,b,c,d) under the bilinear pairing
    // sum_i v_i w_i (no conjugation).
    Cplx pairing = 0.0;
    for (std::size_t i = 0; i < 4; ++i) {
      pairing += amp[i] * normal[i];
      stacked(l, i) = amp[i];
    }
    max_residual = std::max(max_residual, std::abs(pairing) / scale);
  }
  out.max_orthogonality_residual = max_residual;
  out.independent = numerical_rank(stacked) == 3;
  out.pass = out.independent && max_residual < 1e-12 &&
             out.schmidt_ranks[0] == 1 && out.schmidt_ranks[1] == 1 && out.schmidt_ranks[2] == 1;
  return out;
}

namespace {

SideAnalysis analyze_side_numeric(const StateInput& input, const DensityMatrix& rho, Side side,
                                  const AnalyzeConfig& cfg) {
  SideAnalysis sa;
  sa.side = side;
  sa.analyzed = true;
  const MatrixPencil pencil = input.ensemble ? pencil_from_ensemble(*input.ensemble, side)
                                             : build_pencil(rho, side, cfg.tol);
  auto scan = best_empty_level(pencil, cfg.opt, cfg.tol);
  sa.best_empty_level = scan.best_empty_level;
  sa.verdicts = std::move(scan.verdicts);
  return sa;
}

SideAnalysis analyze_side_symbolic(const StateInput& input, Side side, const AnalyzeConfig& cfg) {
  SideAnalysis sa;
  sa.side = side;
  sa.analyzed = true;
  const ExactMatrixPencil pencil = build_exact_pencil(*input.exact, side);
  const MatrixPencil fpencil = to_float(pencil);
  if (pencil.max_level() == 0) return sa;
  for (std::size_t k = pencil.max_level(); k-- > 0;) {
    VarietyVerdict v;
    try {
      v = check_emptiness_exact(pencil, k, cfg.limits);
    } catch (const EngineOverflow&) {
      v = check_emptiness(fpencil, k, cfg.opt, cfg.tol);
    }
    if (v.certified_nonempty && !v.witness) {
      // Nonemptiness is proven; ask the numeric engine for a concrete point.
      auto hunt = check_emptiness(fpencil, k, cfg.opt, cfg.tol);
      if (hunt.status == VerdictStatus::NonEmptyWitness) {
        v.status = VerdictStatus::NonEmptyWitness;
        v.witness = std::move(hunt.witness);
        v.achieved_sigma = hunt.achieved_sigma;
      }
    }
    const bool empty = v.is_empty_verdict();
    sa.verdicts.push_back(std::move(v));
    if (empty) {
      sa.best_empty_level = static_cast<int>(k);
      break;
    }
  }
  return sa;
}

const VarietyVerdict* winning_verdict(const SideAnalysis& sa) {
  if (sa.best_empty_level < 0) return nullptr;
  for (const auto& v : sa.verdicts) {
    if (static_cast<int>(v.level) == sa.best_empty_level) return &v;
  }
  return nullptr;
}

}  // namespace

SchmidtBoundReport analyze(const StateInput& input, const AnalyzeConfig& cfg) {
  EngineChoice engine = cfg.engine;
  if (engine == EngineChoice::Auto) {
    engine = input.exact ? EngineChoice::Symbolic : EngineChoice::Numeric;
  }
  if (engine == EngineChoice::Symbolic && !input.exact) {
    throw ValidationError("InexactInput: the symbolic engine needs an exact input file");
  }
  if (!cfg.side_a && !cfg.side_b) {
    throw ValidationError("analyze: at least one side must be enabled");
  }

  SchmidtBoundReport rep;
  rep.m = input.m;
  rep.n = input.n;
  rep.engine_used = engine;
  rep.config = cfg;

  const DensityMatrix rho = input.to_density(cfg.tol);
  if (engine == EngineChoice::Symbolic) {
    rep.rank = exact_state_rank(*input.exact);
    rep.rank_exact = true;
  } else {
    rep.rank = numerical_rank(rho.matrix(), cfg.tol);
  }
  rep.ppt = ppt_check(rho, cfg.tol);

  for (Side side : {Side::A, Side::B}) {
    if ((side == Side::A && !cfg.side_a) || (side == Side::B && !cfg.side_b)) continue;
    SideAnalysis sa = engine == EngineChoice::Symbolic
                          ? analyze_side_symbolic(input, side, cfg)
                          : analyze_side_numeric(input, rho, side, cfg);
    const std::size_t dim = side == Side::A ? input.m : input.n;
    const BoundValue bv = schmidt_lower_bound(dim, rep.rank, sa.best_empty_level);
    sa.bound = bv.value;
    sa.degenerate = bv.degenerate;
    (side == Side::A ? rep.side_a : rep.side_b) = std::move(sa);
  }

  // Headline bound: the better side; certified beats uncertified on ties.
  auto side_score = [&](const SideAnalysis& sa) {
    if (!sa.analyzed) return -1;
    return sa.bound;
  };
  const int score_a = side_score(rep.side_a);
  const int score_b = side_score(rep.side_b);
  const VarietyVerdict* va = winning_verdict(rep.side_a);
  const VarietyVerdict* vb = winning_verdict(rep.side_b);
  const bool cert_a = va && va->status == VerdictStatus::EmptyCertified;
  const bool cert_b = vb && vb->status == VerdictStatus::EmptyCertified;
  bool pick_a = score_a >= score_b;
  if (score_a == score_b && cert_b && !cert_a) pick_a = false;

  const SideAnalysis& win = pick_a ? rep.side_a : rep.side_b;
  rep.winning_side = win.side;
  rep.winning_level = win.best_empty_level;
  rep.schmidt_lower_bound = std::max(std::max(score_a, score_b), 1);
  const VarietyVerdict* wv = winning_verdict(win);
  rep.certification = (wv && wv->status == VerdictStatus::EmptyCertified)
                          ? Certification::Certified
                          : Certification::NumericalEvidence;
  rep.entangled = rep.schmidt_lower_bound >= 2 || !rep.ppt.is_ppt;
  return rep;
}

}  // namespace entbound
