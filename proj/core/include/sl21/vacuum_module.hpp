#pragma once

#include <vector>

#include "sl21/affine_env.hpp"

namespace sl21 {

/// A vector of V(k, C): an Element whose modes all have n <= -1, acting on an
/// implicit trailing vacuum.
using State = Element;

/// (w1, w2; degree): h1/h2 eigenvalues and minus the mode sum.
struct Weight {
  Rational w1;
  Rational w2;
  int degree = 0;

  friend bool operator==(const Weight&, const Weight&) = default;
};

std::string to_string(const Weight& w);

Weight weight_of(const Monomial& m);

/// The weight shared by every monomial of s; nullopt if s is zero or mixes weights.
std::optional<Weight> homogeneous_weight(const State& s);

bool is_state(const Element& e);

/// The vacuum module V(k, C): the whole of g[t] annihilates the vacuum.
class VacuumModule {
 public:
  explicit VacuumModule(Level level) : straightener_(std::move(level), Straightener::Quotient::vacuum) {}

  const Level& level() const { return straightener_.level(); }

  State act(const Mode& m, const State& s);
  const State& act(const Mode& m, const Monomial& basis_vector);

  /// Applies the word right-to-left: act(w[0], act(w[1], ... s)).
  State act(const Monomial& word, const State& s);

  /// Canonical state for an arbitrary combination of negative-mode words.
  State reduce(const Element& raw);

 private:
  Straightener straightener_;
};

/// All PBW monomials (n <= -1, odd modes not repeated) of weight w, in MonomialLess
/// order.
std::vector<Monomial> weight_space_basis(const Weight& w);

}  // namespace sl21
