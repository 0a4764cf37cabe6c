#pragma once

#include <vector>

#include "sl21/polyring.hpp"
#include "sl21/vacuum_module.hpp"

namespace sl21 {

/// An element of U(g): an Element whose modes all have n = 0, kept in PBW order
/// f12 < f1 < f2 < h1 < h2 < e1 < e2 < e12.
using UgElement = Element;

bool is_ug(const Element& e);

/// Word of zero modes, e.g. ug_word({e2, e1}) for e2 e1.
Monomial ug_word(std::initializer_list<Generator> gens);

/// PBW normal form and products in U(g).
class UgAlgebra {
 public:
  UgAlgebra() : straightener_(Level{0}) {}

  UgElement normal_order(const Element& raw) { return straightener_.normal_order(raw); }
  UgElement multiply(const UgElement& a, const UgElement& b) { return straightener_.multiply(a, b); }

  /// [x, u] extended to words as a super-derivation.
  UgElement adjoint(Generator x, const UgElement& u);

 private:
  Straightener straightener_;
};

/// F(a_1(-n_1-1) ... a_r(-n_r-1)) = (-1)^{sum_{i<j}|a_i||a_j| + sum n_i} a_r ... a_1,
/// extended linearly and normal-ordered. Throws std::invalid_argument on a mode n >= 0.
UgElement zhu_F(const State& s);

UgElement adjoint(Generator x, const UgElement& u);

struct NplusReduction {
  bool in_cartan = false;  // survivor uses only h1, h2
  BiPoly poly;             // valid when in_cartan
  UgElement rest;          // the survivor itself
};

/// Drops every PBW word that ends in e1, e2 or e12.
NplusReduction reduce_mod_nplus(const UgElement& u);

struct P0Result {
  State singular;
  UgElement image;
  std::vector<Monomial> words;       // lowering words, applied right to left
  std::vector<BiPoly> reductions;    // one per word
  std::vector<BiPoly> basis;         // reduced echelon basis of the span
};

/// Classification polynomials: the span of all adjoint images of F(v) under lowering
/// words of h-weight -(m+1, m+1), reduced mod U(g)n+. Throws std::runtime_error if the
/// singular space is not one-dimensional or a reduction leaves S(h).
P0Result p0_polynomials(const Level& level, unsigned threads = 1);

/// Basis of span(polys) in reduced row-echelon form, leading terms by degrevlex.
std::vector<BiPoly> span_basis(const std::vector<BiPoly>& polys);

/// Rational in the open interval (0, 1).
class XiParam {
 public:
  explicit XiParam(Rational xi);
  const Rational& value() const { return xi_; }

 private:
  Rational xi_;
};

/// degree - (xi/2)(w1 + w2).
Rational xi_weight(const Monomial& mono, const XiParam& xi);

}  // namespace sl21
