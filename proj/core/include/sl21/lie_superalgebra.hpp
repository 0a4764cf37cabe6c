#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string_view>

#include "sl21/rational.hpp"

namespace sl21 {

/// Basis of sl(2|1). Enumerator order is the PBW order used everywhere:
/// f12 < f1 < f2 < h1 < h2 < e1 < e2 < e12.
enum class Generator : std::uint8_t { f12, f1, f2, h1, h2, e1, e2, e12 };

inline constexpr std::array<Generator, 8> kGenerators = {
    Generator::f12, Generator::f1, Generator::f2, Generator::h1,
    Generator::h2,  Generator::e1, Generator::e2, Generator::e12};

enum class Parity : std::uint8_t { even = 0, odd = 1 };

constexpr Parity parity(Generator g) {
  switch (g) {
    case Generator::e1:
    case Generator::e2:
    case Generator::f1:
    case Generator::f2:
      return Parity::odd;
    default:
      return Parity::even;
  }
}

constexpr bool is_odd(Generator g) { return parity(g) == Parity::odd; }

/// (-1)^{|a||b|}
constexpr int super_sign(Generator a, Generator b) { return is_odd(a) && is_odd(b) ? -1 : 1; }

constexpr bool is_raising(Generator g) {
  return g == Generator::e1 || g == Generator::e2 || g == Generator::e12;
}
constexpr bool is_lowering(Generator g) {
  return g == Generator::f1 || g == Generator::f2 || g == Generator::f12;
}
constexpr bool is_cartan(Generator g) { return g == Generator::h1 || g == Generator::h2; }

std::string_view name(Generator g);
std::optional<Generator> generator_from_name(std::string_view s);

using Matrix3 = std::array<std::array<Rational, 3>, 3>;

/// The defining 3x3 supermatrix; index 3 is the odd index.
const Matrix3& matrix(Generator g);
Rational supertrace(const Matrix3& m);

/// Sparse linear combination of generators; zero coefficients are never stored.
class GLinComb {
 public:
  GLinComb() = default;
  explicit GLinComb(Generator g, Rational c = 1) { add(g, c); }

  void add(Generator g, const Rational& c);
  GLinComb& operator+=(const GLinComb& o);
  GLinComb& operator*=(const Rational& c);

  Rational coefficient(Generator g) const;
  bool empty() const { return terms_.empty(); }
  const std::map<Generator, Rational>& terms() const { return terms_; }

  friend bool operator==(const GLinComb&, const GLinComb&) = default;

 private:
  std::map<Generator, Rational> terms_;
};

GLinComb operator+(GLinComb a, const GLinComb& b);
GLinComb operator-(GLinComb a, const GLinComb& b);
GLinComb operator*(const Rational& c, GLinComb a);

/// Re-expresses a supertraceless 3x3 matrix in the generator basis.
/// Throws std::logic_error if the matrix is not in the span.
GLinComb decompose(const Matrix3& m);

/// Supercommutator [a,b] = ab - (-1)^{|a||b|} ba.
const GLinComb& bracket(Generator a, Generator b);
GLinComb bracket(const GLinComb& a, const GLinComb& b);

/// Invariant form (a,b) = str(ab).
Rational form(Generator a, Generator b);
Rational form(const GLinComb& a, const GLinComb& b);

struct HWeight {
  Rational w1;
  Rational w2;
  friend bool operator==(const HWeight&, const HWeight&) = default;
};

/// Adjoint eigenvalues (c1, c2) with [h1,a] = c1 a and [h2,a] = c2 a.
const HWeight& hweight(Generator a);

/// Outcome of the exhaustive structure checks on the 8-dimensional basis.
struct StructureReport {
  int skew_checked = 0;
  int skew_passed = 0;
  int jacobi_checked = 0;
  int jacobi_passed = 0;
  int invariance_checked = 0;
  int invariance_passed = 0;
  Rational gram_determinant;
  bool ok() const {
    return skew_passed == skew_checked && jacobi_passed == jacobi_checked &&
           invariance_passed == invariance_checked && !is_zero(gram_determinant);
  }
};

StructureReport check_structure();

}  // namespace sl21
