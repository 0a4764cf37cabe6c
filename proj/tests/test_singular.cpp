#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "sl21/expression.hpp"
#include "sl21/linalg.hpp"
#include "sl21/singular.hpp"
#include "support.hpp"

using namespace sl21;
using namespace sl21::testing;
using G = Generator;

namespace {

const char* kV1 = "2*e1(-1)*e2(-1)+2*h1(-1)*e12(-1)-2*h2(-1)*e12(-1)-e12(-2)";

Element scaled_to(const State& s, const Monomial& key, const Rational& value) {
  Element out = s;
  out *= value / s.coefficient(key);
  return out;
}

}  // namespace

TEST_CASE("raising set") {
  const std::vector<Mode> expected{md(G::e1, 0), md(G::e2, 0), md(G::f12, 1)};
  CHECK(raising_set() == expected);
  VacuumModule module(Level{q(-1, 2)});
  for (const Mode& r : raising_set()) CHECK(module.act(r, Element::unit()).empty());
}

TEST_CASE("raising set brackets reach the rest of the positive part") {
  const Level level{q(-1, 2)};
  std::set<std::pair<int, int>> reached;
  std::vector<Mode> frontier = raising_set();
  for (const Mode& m : frontier) reached.insert({static_cast<int>(m.gen), m.n});
  for (int depth = 0; depth < 3; ++depth) {
    std::vector<Mode> next;
    for (const Mode& a : raising_set())
      for (const Mode& b : frontier) {
        const Element br = mode_bracket(a, b, level);
        for (const auto& [w, c] : br.terms())
          if (w.size() == 1 && reached.insert({static_cast<int>(w[0].gen), w[0].n}).second) next.push_back(w[0]);
      }
    frontier = next;
  }
  for (const Mode& m : {md(G::e12, 0), md(G::e1, 1), md(G::e2, 1)})
    CHECK(reached.count({static_cast<int>(m.gen), m.n}) == 1);
  // h+(1) shows up as h1(1) and h2(1) components
  CHECK(reached.count({static_cast<int>(G::h1), 1}) == 1);
  CHECK(reached.count({static_cast<int>(G::h2), 1}) == 1);
}

TEST_CASE("singular_target closed form") {
  CHECK(singular_target(Level{q(-1, 2)}) == Weight{1, 1, 2});
  CHECK(singular_target(Level{q(1, 2)}) == Weight{3, 3, 6});
  CHECK(singular_target(Level{q(0)}) == Weight{1, 1, 1});
  CHECK_THROWS_AS(singular_target(Level{q(-3, 2)}), std::invalid_argument);
}

TEST_CASE("verify_singular examples") {
  VacuumModule module(Level{q(-1, 2)});
  CHECK(verify_singular(module, module.reduce(parse_expression(kV1))));
  CHECK_FALSE(verify_singular(module, Element::monomial({md(G::e12, -2)})));
  CHECK_THROWS_AS(verify_singular(module, Element()), std::invalid_argument);
  CHECK_THROWS_AS(verify_singular(module, parse_expression("e12(-1) + e12(-2)")), std::invalid_argument);
  CHECK_THROWS_AS(verify_singular(module, parse_expression("e12(0)")), std::invalid_argument);
}

TEST_CASE("the expected vector at level 1/2 is singular") {
  VacuumModule module(Level{q(1, 2)});
  const State v2 = module.reduce(parse_expression(data_file("v2.txt")));
  CHECK(homogeneous_weight(v2) == Weight{3, 3, 6});
  CHECK(verify_singular(module, v2));
}

TEST_CASE("find_singular at -1/2 reproduces v1") {
  const Level level{q(-1, 2)};
  const SingularSearch s = find_singular(level);
  CHECK(s.weight == Weight{1, 1, 2});
  CHECK(s.weight_basis.size() == 4);
  REQUIRE(s.dimension() == 1);
  VacuumModule module(level);
  const State v1 = module.reduce(parse_expression(kV1));
  CHECK(scaled_to(s.basis[0], {md(G::e1, -1), md(G::e2, -1)}, 2) == v1);
  // normalization: last weight-basis monomial has coefficient 1
  CHECK(s.basis[0].coefficient({md(G::e12, -2)}) == 1);
}

TEST_CASE("find_singular at a non-singular weight is empty") {
  CHECK(find_singular(Level{q(-1, 2)}, Weight{1, 1, 1}).dimension() == 0);
}

TEST_CASE("find_singular at 1/2 reproduces v2") {
  const Level level{q(1, 2)};
  const SingularSearch s = find_singular(level);
  REQUIRE(s.dimension() == 1);
  const Monomial key{md(G::e12, -2), md(G::e12, -2), md(G::e12, -2)};
  const State v = scaled_to(s.basis[0], key, q(2889, 128));

  VacuumModule module(level);
  CHECK(v == module.reduce(parse_expression(data_file("v2.txt"))));

  // The display is written in non-PBW words; compare coordinates in those words.
  const auto terms = data_terms("v2.txt");
  const auto coords = coordinates(module, terms, v);
  REQUIRE(coords.size() == terms.size());
  for (std::size_t i = 0; i < terms.size(); ++i) {
    CAPTURE(render(terms[i]));
    CHECK(coords[i] == terms[i].terms().begin()->second);
  }
  auto coordinate_of = [&](const char* word) {
    const Element w = parse_expression(word);
    for (std::size_t i = 0; i < terms.size(); ++i)
      if (terms[i].terms().begin()->first == w.terms().begin()->first) return coords[i];
    return Rational(0);
  };
  CHECK(coordinate_of("e12(-4)e12(-1)^2") == q(81, 8));
  CHECK(coordinate_of("f12(-1)e12(-2)e12(-1)^3") == q(9, 8));
}

TEST_CASE("find_singular output is exactly in the nullspace and thread-count independent") {
  const Level level{q(1, 2)};
  const SingularSearch one = find_singular(level, 1);
  const SingularSearch three = find_singular(level, 3);
  CHECK(one.basis == three.basis);
  VacuumModule module(level);
  for (const auto& v : one.basis) {
    CHECK(verify_singular(module, v));
    for (const Mode& r : raising_set()) CHECK(module.act(r, v).empty());
  }
}

TEST_CASE("singular dimension does not depend on basis order") {
  // Reversing the weight basis permutes matrix columns; the rank is unchanged.
  const Level level{q(-1, 2)};
  VacuumModule module(level);
  auto basis = weight_space_basis({1, 1, 2});
  std::reverse(basis.begin(), basis.end());
  std::size_t rows = 0;
  std::map<Monomial, std::size_t, MonomialLess> row_of;
  std::vector<std::vector<std::pair<std::size_t, Rational>>> cols;
  for (const auto& m : basis) {
    std::vector<std::pair<std::size_t, Rational>> col;
    for (const Mode& r : raising_set())
      for (const auto& [w, c] : module.act(r, m).terms()) {
        Monomial key = w;
        key.insert(key.begin(), r);  // tag rows by operator
        auto [it, fresh] = row_of.try_emplace(key, rows);
        if (fresh) ++rows;
        col.emplace_back(it->second, c);
      }
    cols.push_back(col);
  }
  RationalMatrix mat(rows, basis.size());
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (const auto& [i, c] : cols[j]) mat(i, j) += c;
  CHECK(nullspace(mat).size() == find_singular(level).dimension());
}
