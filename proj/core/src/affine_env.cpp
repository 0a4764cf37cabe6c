#include "sl21/affine_env.hpp"

#include <algorithm>
#include <utility>

namespace sl21 {

std::optional<Level::Admissible> Level::admissible() const {
  Rational shifted = k + 1;
  if (sgn(shifted) <= 0) return std::nullopt;
  // mpq_class is kept canonical, so numerator and denominator are coprime.
  return Admissible{shifted.get_num().get_si() - 1, shifted.get_den().get_si()};
}

bool is_canonical(const Monomial& m) {
  for (std::size_t i = 1; i < m.size(); ++i) {
    auto c = pbw_compare(m[i - 1], m[i]);
    if (c > 0) return false;
    if (c == 0 && is_odd(m[i].gen)) return false;
  }
  return true;
}

int mode_sum(const Monomial& m) {
  int s = 0;
  for (const auto& x : m) s += x.n;
  return s;
}

Parity parity(const Monomial& m) {
  int p = 0;
  for (const auto& x : m) p ^= is_odd(x.gen) ? 1 : 0;
  return static_cast<Parity>(p);
}

bool MonomialLess::operator()(const Monomial& a, const Monomial& b) const {
  if (a.size() != b.size()) return a.size() > b.size();
  return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend(), pbw_less);
}

Element Element::unit(Rational c) { return monomial({}, std::move(c)); }

Element Element::monomial(Monomial m, Rational c) {
  Element e;
  e.add(m, c);
  return e;
}

void Element::add(const Monomial& m, const Rational& c) {
  if (is_zero(c)) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (is_zero(it->second)) terms_.erase(it);
  }
}

void Element::add_scaled(const Element& o, const Rational& c) {
  if (is_zero(c)) return;
  for (const auto& [m, x] : o.terms_) add(m, x * c);
}

Element& Element::operator+=(const Element& o) {
  for (const auto& [m, c] : o.terms_) add(m, c);
  return *this;
}

Element& Element::operator-=(const Element& o) {
  add_scaled(o, -1);
  return *this;
}

Element& Element::operator*=(const Rational& c) {
  if (is_zero(c)) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, x] : terms_) x *= c;
  return *this;
}

Rational Element::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

bool Element::is_canonical() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return sl21::is_canonical(t.first); });
}

Element operator+(Element a, const Element& b) { return a += b; }
Element operator-(Element a, const Element& b) { return a -= b; }
Element operator*(const Rational& c, Element a) { return a *= c; }

Element mode_bracket(const Mode& a, const Mode& b, const Level& level) {
  Element out;
  const int n = a.n + b.n;
  for (const auto& [g, c] : bracket(a.gen, b.gen).terms()) out.add({Mode{g, n}}, c);
  if (n == 0 && a.n != 0) {
    const Rational f = form(a.gen, b.gen);
    if (!is_zero(f)) out.add({}, Rational(a.n) * f * level.k);
  }
  return out;
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::size_t h = m.size();
  for (const auto& x : m) {
    std::size_t v = (static_cast<std::size_t>(static_cast<std::uint32_t>(x.n)) << 8) ^ static_cast<std::size_t>(x.gen);
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

void Straightener::emit(Element& out, Monomial m, const Rational& c) const {
  if (quotient_ == Quotient::vacuum && !m.empty() && m.back().n >= 0) return;
  out.add(m, c);
}

const Element& Straightener::left_multiply(const Mode& x, const Monomial& m) {
  Monomial key;
  key.reserve(m.size() + 1);
  key.push_back(x);
  key.insert(key.end(), m.begin(), m.end());
  {
    std::lock_guard lock(mutex_);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
  }
  Element value = compute(x, m);
  std::lock_guard lock(mutex_);
  // Concurrent computations of the same key produce equal values; keep the first.
  return memo_.try_emplace(std::move(key), std::move(value)).first->second;
}

Element Straightener::compute(const Mode& x, const Monomial& m) {
  Element out;
  if (m.empty()) {
    emit(out, {x}, 1);
    return out;
  }
  const Mode& y = m.front();
  const Monomial rest(m.begin() + 1, m.end());
  const auto order = pbw_compare(x, y);

  if (order < 0 || (order == 0 && !is_odd(x.gen))) {
    Monomial prepended;
    prepended.reserve(m.size() + 1);
    prepended.push_back(x);
    prepended.insert(prepended.end(), m.begin(), m.end());
    emit(out, std::move(prepended), 1);
    return out;
  }

  const Element commutator = mode_bracket(x, y, level_);
  if (order == 0) {
    // x odd: x x = (1/2)[x, x]
    for (const auto& [z, c] : commutator.terms()) {
      if (z.empty())
        emit(out, rest, c / 2);
      else
        out.add_scaled(left_multiply(z.front(), rest), c / 2);
    }
    return out;
  }

  // x y rest = (-1)^{|x||y|} y (x rest) + [x, y] rest
  const Element moved = left_multiply(x, rest);
  const Rational sign = super_sign(x.gen, y.gen);
  for (const auto& [r, c] : moved.terms()) out.add_scaled(left_multiply(y, r), sign * c);
  for (const auto& [z, c] : commutator.terms()) {
    if (z.empty())
      emit(out, rest, c);
    else
      out.add_scaled(left_multiply(z.front(), rest), c);
  }
  return out;
}

Element Straightener::left_multiply(const Mode& x, const Element& e) {
  Element out;
  for (const auto& [m, c] : e.terms()) out.add_scaled(left_multiply(x, m), c);
  return out;
}

Element Straightener::normal_order(const Monomial& word) {
  Element acc;
  emit(acc, {}, 1);
  for (auto it = word.rbegin(); it != word.rend(); ++it) acc = left_multiply(*it, acc);
  return acc;
}

Element Straightener::normal_order(const Element& raw) {
  Element out;
  for (const auto& [w, c] : raw.terms()) out.add_scaled(normal_order(w), c);
  return out;
}

Element Straightener::multiply(const Element& a, const Element& b) {
  Element out;
  for (const auto& [w, c] : a.terms()) {
    Element acc = b;
    for (auto it = w.rbegin(); it != w.rend(); ++it) acc = left_multiply(*it, acc);
    out.add_scaled(acc, c);
  }
  return out;
}

std::size_t Straightener::memo_size() const {
  std::lock_guard lock(mutex_);
  return memo_.size();
}

Element normal_order(const Element& raw, const Level& level) {
  Straightener s(level);
  return s.normal_order(raw);
}

Element multiply(const Element& a, const Element& b, const Level& level) {
  Straightener s(level);
  return s.multiply(a, b);
}

}  // namespace sl21
