#pragma once

#include "entbound/bounds.hpp"

namespace entbound {
namespace fixtures {

// Built-in example states. The integer coefficient lists below are stored
// unnormalized; the float path normalizes them and the exact path uses them
// as-is (column scaling leaves the rank-deficiency loci unchanged).

// 5x5 rank-2 mixture of |11>+|22> and |33>+|44>+|55>+|45>, arbitrary
// positive weights. Level 0 is empty on side A and the bound is 3
// independent of the weights.
StateInput two_state_5x5(double w1 = 0.5, double w2 = 0.5);

// 7x7 rank-3 mixture whose first member is the maximally entangled vector;
// the remaining two states are seeded Gaussian randoms. Level 0 stays empty
// whatever the random members are.
StateInput maxent_member_7x7(std::uint64_t seed);

// 3x3 rank-3 state whose side-A pencil is
//   [[r1, r2, r3], [0, r1, r2], [r3, 0, r1]].
StateInput cyclic_3x3();

// 4x4 rank-5 state whose side-A pencil is
//   [[r1, r2, r3, r4, 0], [0, r1, r2, r3, r4], [0, 0, r1, r2, r3],
//    [0, 0, r4, 0, 0]].
StateInput band_4x4();

// The coefficient matrices of the states above, as printed integer patterns.
std::vector<ComplexDenseMatrix> cyclic_3x3_coefficients();
std::vector<ComplexDenseMatrix> band_4x4_coefficients();
std::vector<ComplexDenseMatrix> two_state_5x5_coefficients();

// Exact integer 4-parameter family member for the product-span check.
struct QuadSample {
  Cplx a, b, c, d;
};
QuadSample random_nondegenerate_quad(std::uint64_t seed);

}  // namespace fixtures
}  // namespace entbound
