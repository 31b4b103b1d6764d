#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "entbound/pencil.hpp"

namespace entbound {

struct OptimizerConfig {
  std::size_t num_starts = 64;
  std::size_t max_iters = 500;
  double grad_tol = 1e-12;      // projected-gradient convergence threshold
  double witness_tol = 1e-8;    // sigma at or below this accepts a rank-drop witness
  double evidence_tol = 1e-4;   // sigma floor above which emptiness is claimed
  std::uint64_t seed = 0x5eedbed5ULL;
  std::size_t threads = 0;      // 0 = hardware concurrency

  void validate() const;
};

enum class VerdictStatus { NonEmptyWitness, EmptyEvidence, EmptyCertified, Inconclusive };
enum class Engine { Numeric, ExactLinear, Symbolic };

const char* to_string(VerdictStatus s);
const char* to_string(Engine e);

// Emptiness decision for (pencil, level). A NonEmptyWitness always carries a
// witness that passed an independent rank re-verification; EmptyCertified is
// only ever produced by the exact engines. certified_nonempty marks a
// symbolic nonemptiness proof that has no numeric witness attached.
struct VarietyVerdict {
  std::size_t level = 0;
  VerdictStatus status = VerdictStatus::Inconclusive;
  std::optional<std::vector<Cplx>> witness;
  double achieved_sigma = std::numeric_limits<double>::quiet_NaN();
  Engine engine = Engine::Numeric;
  bool certified_nonempty = false;

  bool is_empty_verdict() const {
    return status == VerdictStatus::EmptyEvidence || status == VerdictStatus::EmptyCertified;
  }
};

// (k+1)-th singular value of M(r/|r|); defined as 0 when k exceeds the
// feasible range. Throws on the zero vector.
double sigma_objective(const MatrixPencil& p, std::size_t k, std::span<const Cplx> r);

struct MinimizeResult {
  std::vector<Cplx> best_r;  // unit vector
  double best_value = 0.0;
  std::size_t starts_run = 0;
};

// Multistart projected-descent minimization of sigma_objective over the unit
// sphere. Deterministic for a fixed seed regardless of thread count; stops
// early (on a wave boundary) once a witness-quality value is found.
MinimizeResult minimize_sigma(const MatrixPencil& p, std::size_t k, const OptimizerConfig& cfg);

// Level 0 decided by linear algebra alone: the variety {r != 0 : M(r) = 0}
// is empty iff the matrix of vectorized blocks has full column rank.
bool exact_empty_level0(const MatrixPencil& p, const ToleranceConfig& tol = {});

VarietyVerdict check_emptiness(const MatrixPencil& p, std::size_t k, const OptimizerConfig& cfg,
                               const ToleranceConfig& tol = {});

struct LevelScan {
  int best_empty_level = -1;  // -1 sentinel: no empty level
  std::vector<VarietyVerdict> verdicts;
};

// Largest h with an Empty* verdict, scanning downward from max_level()-1
// (the varieties are nested, so the first empty level hit is the largest).
LevelScan best_empty_level(const MatrixPencil& p, const OptimizerConfig& cfg,
                           const ToleranceConfig& tol = {});

}  // namespace entbound
