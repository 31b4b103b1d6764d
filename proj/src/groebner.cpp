#include "entbound/groebner.hpp"

#include <algorithm>
#include <set>

namespace entbound {

MultivariatePoly normal_form(MultivariatePoly f, std::span<const MultivariatePoly> g) {
  MultivariatePoly remainder(f.nvars());
  while (!f.is_zero()) {
    const Term& lt = f.leading_term();
    bool reduced = false;
    for (const auto& gi : g) {
      if (gi.is_zero()) continue;
      const Term& glt = gi.leading_term();
      if (!monomial_divides(glt.mono, lt.mono)) continue;
      f -= gi.times_term(monomial_div(lt.mono, glt.mono), lt.coeff / glt.coeff);
      reduced = true;
      break;
    }
    if (!reduced) {
      remainder += MultivariatePoly::from_terms(f.nvars(), {lt});
      f -= MultivariatePoly::from_terms(f.nvars(), {lt});
    }
  }
  return remainder;
}

MultivariatePoly s_polynomial(const MultivariatePoly& f, const MultivariatePoly& g) {
  const Term& lf = f.leading_term();
  const Term& lg = g.leading_term();
  const Monomial lcm = monomial_lcm(lf.mono, lg.mono);
  return f.times_term(monomial_div(lcm, lf.mono), GaussianRational(1) / lf.coeff) -
         g.times_term(monomial_div(lcm, lg.mono), GaussianRational(1) / lg.coeff);
}

namespace {

struct Pair {
  std::uint32_t lcm_degree;
  Monomial lcm;
  std::size_t i, j;

  // Normal strategy: lowest lcm degree first, then degrevlex on the lcm,
  // then indices, so the processing order is fully deterministic.
  bool operator<(const Pair& o) const {
    if (lcm_degree != o.lcm_degree) return lcm_degree < o.lcm_degree;
    const int c = degrevlex_compare(lcm, o.lcm);
    if (c != 0) return c < 0;
    if (i != o.i) return i < o.i;
    return j < o.j;
  }
};

Pair make_pair_entry(const std::vector<MultivariatePoly>& basis, std::size_t i, std::size_t j) {
  Monomial lcm = monomial_lcm(basis[i].leading_term().mono, basis[j].leading_term().mono);
  return Pair{total_degree(lcm), std::move(lcm), i, j};
}

}  // namespace

GroebnerBasis buchberger(std::vector<MultivariatePoly> polys, const GroebnerLimits& limits) {
  std::vector<MultivariatePoly> basis;
  std::size_t nvars = 0;
  for (auto& p : polys) {
    if (p.is_zero()) continue;
    if (!basis.empty() && p.nvars() != nvars) {
      throw DimensionError("DimMismatch: generators disagree on variable count");
    }
    nvars = p.nvars();
    p.make_monic();
    basis.push_back(std::move(p));
  }
  if (basis.empty()) throw Error("EmptyInput: no nonzero generators");

  std::set<Pair> pending;
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j)
      pending.insert(make_pair_entry(basis, i, j));

  auto still_pending = [&](std::size_t a, std::size_t b) {
    const auto [lo, hi] = std::minmax(a, b);
    return std::any_of(pending.begin(), pending.end(),
                       [&](const Pair& p) { return p.i == lo && p.j == hi; });
  };

  while (!pending.empty()) {
    const Pair top = *pending.begin();
    pending.erase(pending.begin());
    const Monomial& li = basis[top.i].leading_term().mono;
    const Monomial& lj = basis[top.j].leading_term().mono;

    // Product criterion: coprime leading terms reduce to zero.
    if (top.lcm == monomial_mul(li, lj)) continue;
    // Chain criterion: some other leading term divides the lcm and both
    // companion pairs were already handled.
    bool skip = false;
    for (std::size_t k = 0; k < basis.size() && !skip; ++k) {
      if (k == top.i || k == top.j) continue;
      if (monomial_divides(basis[k].leading_term().mono, top.lcm) &&
          !still_pending(top.i, k) && !still_pending(top.j, k)) {
        skip = true;
      }
    }
    if (skip) continue;

    MultivariatePoly h = normal_form(s_polynomial(basis[top.i], basis[top.j]), basis);
    if (h.is_zero()) continue;
    if (h.degree() > limits.max_total_degree) {
      throw EngineOverflow("EngineOverflow: basis degree exceeds " +
                           std::to_string(limits.max_total_degree));
    }
    h.make_monic();
    basis.push_back(std::move(h));
    if (basis.size() > limits.max_basis_size) {
      throw EngineOverflow("EngineOverflow: basis size exceeds " +
                           std::to_string(limits.max_basis_size));
    }
    const std::size_t newest = basis.size() - 1;
    for (std::size_t i = 0; i < newest; ++i) pending.insert(make_pair_entry(basis, i, newest));
  }

  // Minimal basis: drop generators whose leading term another one divides.
  std::vector<bool> keep(basis.size(), true);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = 0; j < basis.size() && keep[i]; ++j) {
      if (i == j || !keep[j]) continue;
      const auto& li = basis[i].leading_term().mono;
      const auto& lj = basis[j].leading_term().mono;
      if (monomial_divides(lj, li) && (li != lj || j < i)) keep[i] = false;
    }
  }
  std::vector<MultivariatePoly> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (keep[i]) minimal.push_back(std::move(basis[i]));
  }

  // Reduce each generator's tail against the others.
  std::vector<MultivariatePoly> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<MultivariatePoly> others;
    for (std::size_t j = 0; j < minimal.size(); ++j) {
      if (j != i) others.push_back(minimal[j]);
    }
    MultivariatePoly r = normal_form(minimal[i], others);
    r.make_monic();
    reduced.push_back(std::move(r));
  }
  std::sort(reduced.begin(), reduced.end(), [](const MultivariatePoly& a, const MultivariatePoly& b) {
    return degrevlex_compare(a.leading_term().mono, b.leading_term().mono) > 0;
  });
  return GroebnerBasis{nvars, std::move(reduced)};
}

bool projective_empty(const GroebnerBasis& basis) {
  for (const auto& g : basis.generators) {
    if (!g.is_homogeneous()) {
      throw ValidationError("NotHomogeneous: projective emptiness needs homogeneous generators");
    }
  }
  // A nonzero constant generator means the ideal is everything.
  for (const auto& g : basis.generators) {
    if (!g.is_zero() && total_degree(g.leading_term().mono) == 0) return true;
  }
  for (std::size_t var = 0; var < basis.nvars; ++var) {
    bool pure_power = false;
    for (const auto& g : basis.generators) {
      if (g.is_zero()) continue;
      const Monomial& lt = g.leading_term().mono;
      bool pure = lt[var] > 0;
      for (std::size_t w = 0; w < lt.size() && pure; ++w) {
        if (w != var && lt[w] != 0) pure = false;
      }
      if (pure) {
        pure_power = true;
        break;
      }
    }
    if (!pure_power) return false;
  }
  return true;
}

bool satisfies_buchberger_criterion(const GroebnerBasis& basis) {
  const auto& g = basis.generators;
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = i + 1; j < g.size(); ++j) {
      if (!normal_form(s_polynomial(g[i], g[j]), g).is_zero()) return false;
    }
  }
  return true;
}

bool is_reduced_basis(const GroebnerBasis& basis) {
  const auto& g = basis.generators;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g[i].is_zero()) return false;
    if (!(g[i].leading_term().coeff == GaussianRational(1))) return false;
    for (std::size_t j = 0; j < g.size(); ++j) {
      if (i == j) continue;
      for (const auto& t : g[i].terms()) {
        if (monomial_divides(g[j].leading_term().mono, t.mono)) return false;
      }
    }
  }
  return true;
}

}  // namespace entbound
