#include "sl21/zhu.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "sl21/linalg.hpp"
#include "sl21/singular.hpp"

namespace sl21 {

bool is_ug(const Element& e) {
  for (const auto& [w, c] : e.terms())
    for (const auto& m : w)
      if (m.n != 0) return false;
  return true;
}

Monomial ug_word(std::initializer_list<Generator> gens) {
  Monomial w;
  for (Generator g : gens) w.push_back({g, 0});
  return w;
}

UgElement UgAlgebra::adjoint(Generator x, const UgElement& u) {
  const Mode mx{x, 0};
  UgElement out;
  for (const auto& [w, c] : u.terms()) {
    out.add_scaled(straightener_.left_multiply(mx, w), c);
    Monomial wx = w;
    wx.push_back(mx);
    const int sign = is_odd(x) && parity(w) == Parity::odd ? -1 : 1;
    out.add_scaled(straightener_.normal_order(wx), -sign * c);
  }
  return out;
}

UgElement adjoint(Generator x, const UgElement& u) {
  UgAlgebra ug;
  return ug.adjoint(x, u);
}

namespace {

UgElement zhu_F(UgAlgebra& ug, const State& s) {
  Element raw;
  for (const auto& [w, c] : s.terms()) {
    int exponent = 0;
    int odd_seen = 0;
    Monomial reversed;
    for (const auto& m : w) {
      if (m.n >= 0) throw std::invalid_argument("zhu_F needs modes with n <= -1, got " + std::string(name(m.gen)) + "(" + std::to_string(m.n) + ")");
      exponent += -m.n - 1;
      if (is_odd(m.gen)) exponent += odd_seen++;
    }
    for (auto it = w.rbegin(); it != w.rend(); ++it) reversed.push_back({it->gen, 0});
    raw.add(reversed, exponent % 2 == 0 ? c : Rational(-c));
  }
  return ug.normal_order(raw);
}

}  // namespace

UgElement zhu_F(const State& s) {
  UgAlgebra ug;
  return zhu_F(ug, s);
}

NplusReduction reduce_mod_nplus(const UgElement& u) {
  NplusReduction r;
  r.in_cartan = true;
  for (const auto& [w, c] : u.terms()) {
    if (!w.empty() && is_raising(w.back().gen)) continue;
    r.rest.add(w, c);
    Exponent e;
    for (const auto& m : w) {
      if (m.gen == Generator::h1) {
        ++e.d1;
      } else if (m.gen == Generator::h2) {
        ++e.d2;
      } else {
        r.in_cartan = false;
      }
    }
    if (r.in_cartan) r.poly.add(e, c);
  }
  if (!r.in_cartan) r.poly = BiPoly();
  return r;
}

std::vector<BiPoly> span_basis(const std::vector<BiPoly>& polys) {
  std::vector<Exponent> cols;
  for (const auto& p : polys)
    for (const auto& [e, c] : p.terms()) cols.push_back(e);
  std::sort(cols.begin(), cols.end(), [](const Exponent& a, const Exponent& b) {
    return compare(a, b, MonomialOrder::degrevlex) > 0;
  });
  cols.erase(std::unique(cols.begin(), cols.end()), cols.end());
  if (cols.empty()) return {};

  RationalMatrix m(polys.size(), cols.size());
  for (std::size_t i = 0; i < polys.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) m(i, j) = polys[i].coefficient(cols[j]);
  std::vector<BiPoly> out;
  for (const auto& row : rref(m)) {
    BiPoly p;
    for (std::size_t j = 0; j < cols.size(); ++j) p.add(cols[j], row[j]);
    out.push_back(std::move(p));
  }
  return out;
}

namespace {

void lowering_words(int need1, int need2, Monomial& prefix, std::vector<Monomial>& out) {
  if (need1 == 0 && need2 == 0) {
    out.push_back(prefix);
    return;
  }
  for (Generator g : {Generator::f12, Generator::f1, Generator::f2}) {
    const HWeight& w = hweight(g);
    const int d1 = -static_cast<int>(w.w1.get_num().get_si());
    const int d2 = -static_cast<int>(w.w2.get_num().get_si());
    if (d1 > need1 || d2 > need2) continue;
    prefix.push_back({g, 0});
    lowering_words(need1 - d1, need2 - d2, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

P0Result p0_polynomials(const Level& level, unsigned threads) {
  const auto adm = level.admissible();
  if (!adm) throw std::invalid_argument("level " + to_string(level.k) + " is not admissible");
  const SingularSearch search = find_singular(level, threads);
  if (search.dimension() != 1)
    throw std::runtime_error("expected a one-dimensional singular space, found dimension " + std::to_string(search.dimension()));

  P0Result r;
  r.singular = search.basis.front();
  UgAlgebra ug;
  r.image = zhu_F(ug, r.singular);

  Monomial prefix;
  const int need = static_cast<int>(adm->m + 1);
  lowering_words(need, need, prefix, r.words);
  std::sort(r.words.begin(), r.words.end(), MonomialLess{});

  // Images of suffixes are shared between words.
  std::map<Monomial, UgElement, MonomialLess> memo;
  memo.emplace(Monomial{}, r.image);
  auto image_of = [&](const Monomial& word, auto& self) -> const UgElement& {
    if (auto it = memo.find(word); it != memo.end()) return it->second;
    const Monomial suffix(word.begin() + 1, word.end());
    UgElement v = ug.adjoint(word.front().gen, self(suffix, self));
    return memo.emplace(word, std::move(v)).first->second;
  };

  for (const auto& word : r.words) {
    const NplusReduction red = reduce_mod_nplus(image_of(word, image_of));
    if (!red.in_cartan) throw std::runtime_error("reduction of the adjoint image under a lowering word left S(h)");
    r.reductions.push_back(red.poly);
  }
  r.basis = span_basis(r.reductions);
  return r;
}

XiParam::XiParam(Rational xi) : xi_(std::move(xi)) {
  if (sgn(xi_) <= 0 || xi_ >= 1) throw std::invalid_argument("xi must satisfy 0 < xi < 1, got " + to_string(xi_));
}

Rational xi_weight(const Monomial& mono, const XiParam& xi) {
  const Weight w = weight_of(mono);
  return Rational(w.degree) - xi.value() / 2 * (w.w1 + w.w2);
}

}  // namespace sl21
