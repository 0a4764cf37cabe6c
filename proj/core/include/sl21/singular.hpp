#pragma once

#include <vector>

#include "sl21/vacuum_module.hpp"

namespace sl21 {

/// e1(0), e2(0), f12(1): generators of the positive part of the affine algebra.
std::vector<Mode> raising_set();

/// Weight of the singular vector generating the maximal submodule at an admissible
/// level k + 1 = (m + 1)/M: h-weight (m + 1, m + 1), degree (m + 1) M.
/// Throws std::invalid_argument for non-admissible levels.
Weight singular_target(const Level& level);

/// True iff every raising mode kills s. Throws std::invalid_argument if s is zero,
/// contains a nonnegative mode, or is not weight-homogeneous.
bool verify_singular(VacuumModule& module, const State& s);

struct SingularSearch {
  Weight weight;
  std::vector<Monomial> weight_basis;
  std::vector<State> basis;  // basis of the singular subspace

  std::size_t dimension() const { return basis.size(); }
};

/// Exact nullspace of the stacked raising-operator matrices on the weight space.
/// Each returned vector has coefficient 1 on its last (in weight_basis order)
/// nonzero monomial, and these last monomials are distinct.
SingularSearch find_singular(const Level& level, const Weight& weight, unsigned threads = 1);
SingularSearch find_singular(const Level& level, unsigned threads = 1);

}  // namespace sl21
