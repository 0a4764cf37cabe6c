#pragma once

#include <compare>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sl21/affine_env.hpp"
#include "sl21/rational.hpp"

namespace sl21 {

/// Exponent pair of t1^d1 t2^d2.
struct Exponent {
  int d1 = 0;
  int d2 = 0;

  int total() const { return d1 + d2; }
  bool divides(const Exponent& o) const { return d1 <= o.d1 && d2 <= o.d2; }
  friend auto operator<=>(const Exponent&, const Exponent&) = default;
};

enum class MonomialOrder { degrevlex, lex };

/// Term order with t1 > t2. Returns <0, 0, >0.
int compare(const Exponent& a, const Exponent& b, MonomialOrder ord);

/// Sparse bivariate polynomial over Q in t1, t2.
class BiPoly {
 public:
  using Terms = std::map<Exponent, Rational>;

  BiPoly() = default;
  BiPoly(Rational c);  // NOLINT: constants convert implicitly
  static BiPoly monomial(Exponent e, Rational c = 1);
  static BiPoly t1() { return monomial({1, 0}); }
  static BiPoly t2() { return monomial({0, 1}); }

  void add(const Exponent& e, const Rational& c);
  BiPoly& operator+=(const BiPoly& o);
  BiPoly& operator-=(const BiPoly& o);
  BiPoly& operator*=(const Rational& c);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponent{}); }
  Rational coefficient(const Exponent& e) const;
  const Terms& terms() const { return terms_; }
  int total_degree() const;
  int degree_t1() const;
  int degree_t2() const;

  /// Leading exponent under ord; the polynomial must be nonzero.
  Exponent leading(MonomialOrder ord) const;
  Rational leading_coefficient(MonomialOrder ord) const;
  BiPoly monic(MonomialOrder ord) const;

  Rational evaluate(const Rational& x1, const Rational& x2) const;

  friend bool operator==(const BiPoly&, const BiPoly&) = default;

 private:
  Terms terms_;
};

BiPoly operator+(BiPoly a, const BiPoly& b);
BiPoly operator-(BiPoly a, const BiPoly& b);
BiPoly operator-(BiPoly a);
BiPoly operator*(const BiPoly& a, const BiPoly& b);
BiPoly pow(const BiPoly& a, int k);

/// Parses sums of products of rationals, t1, t2, '^' powers and parentheses.
BiPoly parse_bipoly(std::string_view src);
/// Terms in descending degrevlex order, e.g. "2*t1^2 - 4*t1*t2 + t1".
std::string render(const BiPoly& p);

class UnsupportedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Full normal form of f modulo the (not necessarily Groebner) list g.
BiPoly reduce(const BiPoly& f, const std::vector<BiPoly>& g, MonomialOrder ord);
BiPoly s_polynomial(const BiPoly& f, const BiPoly& g, MonomialOrder ord);

/// Reduced, monic Groebner basis sorted by ascending leading monomial.
/// Buchberger with the coprime-leading-term and chain criteria.
std::vector<BiPoly> groebner(const std::vector<BiPoly>& gens, MonomialOrder ord = MonomialOrder::degrevlex);

struct QuotientDim {
  bool finite = false;
  std::size_t count = 0;  // meaningful when finite

  static QuotientDim infinite() { return {false, 0}; }
  static QuotientDim of(std::size_t n) { return {true, n}; }
  friend bool operator==(const QuotientDim&, const QuotientDim&) = default;
};

std::string to_string(const QuotientDim& q);

QuotientDim quotient_dim(const std::vector<BiPoly>& gens, MonomialOrder ord = MonomialOrder::degrevlex);

/// Standard monomials of a reduced Groebner basis (finite case only).
std::vector<Exponent> standard_monomials(const std::vector<BiPoly>& basis, MonomialOrder ord);

using Point = std::pair<Rational, Rational>;

/// Linear (total degree 1) factors of p over Q, without multiplicity and without
/// constants. Throws UnsupportedError if p has a factor of degree >= 2.
std::vector<BiPoly> linear_factors(const BiPoly& p);

/// Common zeros of generators that split into linear factors over Q.
/// Throws UnsupportedError on a nonlinear factor or a positive-dimensional component.
std::vector<Point> solve_factored(const std::vector<BiPoly>& gens);

/// True iff p(a + b s, c + d s) vanishes identically in s.
bool verify_on_line(const BiPoly& p, const Rational& a, const Rational& b, const Rational& c, const Rational& d);

/// (lambda(h1), lambda(h2)) for both admissible-weight families at an admissible
/// level, sorted and deduplicated. Throws std::invalid_argument otherwise.
std::vector<Point> admissible_weights(const Level& level);

}  // namespace sl21
