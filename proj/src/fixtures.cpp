#include "entbound/fixtures.hpp"

namespace entbound {
namespace fixtures {

namespace {

ComplexDenseMatrix pattern(std::size_t m, std::size_t n,
                           std::initializer_list<std::pair<std::size_t, std::size_t>> ones) {
  ComplexDenseMatrix c(m, n);
  for (auto [i, j] : ones) c(i, j) = 1.0;
  return c;
}

ExactDenseMatrix to_exact(const ComplexDenseMatrix& c) {
  ExactDenseMatrix e(c.rows(), c.cols());
  for (std::size_t i = 0; i < c.rows(); ++i)
    for (std::size_t j = 0; j < c.cols(); ++j) {
      e(i, j) = GaussianRational(static_cast<long>(c(i, j).real()));
    }
  return e;
}

StateInput from_integer_patterns(std::size_t m, std::size_t n,
                                 std::vector<ComplexDenseMatrix> coeffs,
                                 std::vector<double> weights) {
  double sum = 0.0;
  for (double w : weights) sum += w;
  for (double& w : weights) w /= sum;

  std::vector<PureState> states;
  std::vector<ExactDenseMatrix> exact;
  states.reserve(coeffs.size());
  exact.reserve(coeffs.size());
  for (auto& c : coeffs) {
    exact.push_back(to_exact(c));
    states.push_back(PureState::normalized(std::move(c)));
  }
  StateInput input;
  input.m = m;
  input.n = n;
  input.ensemble = Ensemble::validated(std::move(weights), std::move(states));
  input.exact = ExactStateInput{m, n, std::nullopt, std::move(exact)};
  return input;
}

}  // namespace

std::vector<ComplexDenseMatrix> two_state_5x5_coefficients() {
  return {pattern(5, 5, {{0, 0}, {1, 1}}),
          pattern(5, 5, {{2, 2}, {3, 3}, {4, 4}, {3, 4}})};
}

StateInput two_state_5x5(double w1, double w2) {
  return from_integer_patterns(5, 5, two_state_5x5_coefficients(), {w1, w2});
}

StateInput maxent_member_7x7(std::uint64_t seed) {
  ComplexDenseMatrix ident(7, 7);
  for (std::size_t i = 0; i < 7; ++i) ident(i, i) = 1.0;

  std::vector<PureState> states;
  states.push_back(PureState::normalized(std::move(ident)));
  states.push_back(random_pure(7, 7, derive_seed(seed, 7001, 0)));
  states.push_back(random_pure(7, 7, derive_seed(seed, 7001, 1)));

  StateInput input;
  input.m = 7;
  input.n = 7;
  input.ensemble = Ensemble::validated({1.0 / 3, 1.0 / 3, 1.0 / 3}, std::move(states));
  return input;
}

std::vector<ComplexDenseMatrix> cyclic_3x3_coefficients() {
  return {pattern(3, 3, {{0, 0}, {2, 2}}),
          pattern(3, 3, {{0, 1}, {1, 0}}),
          pattern(3, 3, {{0, 2}, {1, 1}, {2, 0}})};
}

StateInput cyclic_3x3() {
  return from_integer_patterns(3, 3, cyclic_3x3_coefficients(), {1, 1, 1});
}

std::vector<ComplexDenseMatrix> band_4x4_coefficients() {
  return {pattern(4, 4, {{0, 0}}),
          pattern(4, 4, {{0, 1}, {1, 0}}),
          pattern(4, 4, {{0, 2}, {1, 1}, {2, 0}, {3, 3}}),
          pattern(4, 4, {{1, 2}, {2, 1}, {3, 0}}),
          pattern(4, 4, {{2, 2}, {3, 1}})};
}

StateInput band_4x4() {
  return from_integer_patterns(4, 4, band_4x4_coefficients(), {1, 1, 1, 1, 1});
}

QuadSample random_nondegenerate_quad(std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  while (true) {
    const Cplx a = complex_gaussian(gen), b = complex_gaussian(gen);
    const Cplx c = complex_gaussian(gen), d = complex_gaussian(gen);
    const double scale = std::max({std::abs(a), std::abs(b), std::abs(c), std::abs(d)});
    if (std::abs(d) > 0.1 * scale && std::abs(a * d - b * c) > 0.05 * scale * scale) {
      return {a, b, c, d};
    }
  }
}

}  // namespace fixtures
}  // namespace entbound
