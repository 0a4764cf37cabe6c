#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <unordered_map>
#include <vector>

#include "sl21/lie_superalgebra.hpp"
#include "sl21/rational.hpp"

namespace sl21 {

/// a(n) = a (x) t^n.
struct Mode {
  Generator gen;
  int n;

  friend bool operator==(const Mode&, const Mode&) = default;
};

/// PBW key: n ascending, then generator order.
inline std::strong_ordering pbw_compare(const Mode& a, const Mode& b) {
  if (auto c = a.n <=> b.n; c != 0) return c;
  return a.gen <=> b.gen;
}
inline bool pbw_less(const Mode& a, const Mode& b) { return pbw_compare(a, b) < 0; }

/// Level k. Admissible levels satisfy k + 1 = (m + 1) / M with gcd(M, m + 1) = 1.
struct Level {
  Rational k;

  struct Admissible {
    long m;
    long M;
  };
  std::optional<Admissible> admissible() const;

  friend bool operator==(const Level&, const Level&) = default;
};

using Monomial = std::vector<Mode>;

bool is_canonical(const Monomial& m);
int mode_sum(const Monomial& m);
Parity parity(const Monomial& m);

/// Display/storage order of monomials inside an Element: longer monomials first,
/// then lexicographic in the PBW key read from the rightmost mode.
struct MonomialLess {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Sparse linear combination of mode monomials. The empty monomial is the unit
/// (or, for states, the vacuum). Zero coefficients are never stored.
class Element {
 public:
  using Terms = std::map<Monomial, Rational, MonomialLess>;

  Element() = default;
  static Element unit(Rational c = 1);
  static Element monomial(Monomial m, Rational c = 1);

  void add(const Monomial& m, const Rational& c);
  void add_scaled(const Element& o, const Rational& c);
  Element& operator+=(const Element& o);
  Element& operator-=(const Element& o);
  Element& operator*=(const Rational& c);

  Rational coefficient(const Monomial& m) const;
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Terms& terms() const { return terms_; }
  bool is_canonical() const;

  friend bool operator==(const Element&, const Element&) = default;

 private:
  Terms terms_;
};

Element operator+(Element a, const Element& b);
Element operator-(Element a, const Element& b);
Element operator*(const Rational& c, Element a);

/// [a(m), b(n)] = [a,b](m+n) + m delta_{m+n,0} (a,b) k, central element specialized.
Element mode_bracket(const Mode& a, const Mode& b, const Level& level);

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

/// Straightening engine for the level-k enveloping superalgebra. With
/// Quotient::vacuum it works in V(k, C) = U / U(g[t]) instead: every monomial whose
/// rightmost mode has n >= 0 is discarded as soon as it appears.
///
/// Results are memoized; the table is guarded by a mutex so one instance may be
/// shared across threads.
class Straightener {
 public:
  enum class Quotient { none, vacuum };

  explicit Straightener(Level level, Quotient q = Quotient::none) : level_(std::move(level)), quotient_(q) {}
  Straightener(const Straightener&) = delete;
  Straightener& operator=(const Straightener&) = delete;

  const Level& level() const { return level_; }
  Quotient quotient() const { return quotient_; }

  /// x * m for canonical m; the result is canonical.
  const Element& left_multiply(const Mode& x, const Monomial& m);
  Element left_multiply(const Mode& x, const Element& e);

  /// Canonical form of an arbitrary (not necessarily ordered) combination of words.
  Element normal_order(const Element& raw);
  Element normal_order(const Monomial& word);

  Element multiply(const Element& a, const Element& b);

  std::size_t memo_size() const;

 private:
  Element compute(const Mode& x, const Monomial& m);
  void emit(Element& out, Monomial m, const Rational& c) const;

  Level level_;
  Quotient quotient_;
  mutable std::mutex mutex_;
  std::unordered_map<Monomial, Element, MonomialHash> memo_;
};

/// Convenience wrappers using a fresh Straightener.
Element normal_order(const Element& raw, const Level& level);
Element multiply(const Element& a, const Element& b, const Level& level);

}  // namespace sl21
