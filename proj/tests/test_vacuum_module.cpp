#include <doctest.h>

#include <map>
#include <random>
#include <tuple>

#include "sl21/expression.hpp"
#include "sl21/vacuum_module.hpp"
#include "support.hpp"

using namespace sl21;
using namespace sl21::testing;
using G = Generator;

namespace {

const char* kV1 = "2*e1(-1)*e2(-1)+2*h1(-1)*e12(-1)-2*h2(-1)*e12(-1)-e12(-2)";

State act_element(VacuumModule& module, const Element& x, const State& s) {
  State out;
  for (const auto& [w, c] : x.terms()) out.add_scaled(module.act(w, s), c);
  return out;
}

using Key = std::tuple<int, int, int>;  // (w1, w2, degree)

// Character of the vacuum module truncated at degree max_d: product over n >= 1 of
// 1/(1 - x^wt q^n) for even generators and (1 + x^wt q^n) for odd ones.
std::map<Key, long> character(int max_d) {
  std::map<Key, long> series{{{0, 0, 0}, 1}};
  for (int n = 1; n <= max_d; ++n)
    for (G g : kGenerators) {
      const int a = static_cast<int>(hweight(g).w1.get_num().get_si());
      const int b = static_cast<int>(hweight(g).w2.get_num().get_si());
      std::map<Key, long> next;
      for (const auto& [key, c] : series) {
        const auto [w1, w2, d] = key;
        for (int p = 0; d + p * n <= max_d; ++p) {
          if (is_odd(g) && p > 1) break;
          next[{w1 + p * a, w2 + p * b, d + p * n}] += c;
        }
      }
      series = std::move(next);
    }
  return series;
}

}  // namespace

TEST_CASE("act examples") {
  const Level level{q(-1, 2)};
  VacuumModule module(level);
  const State v1 = module.reduce(parse_expression(kV1));
  CHECK(module.act(md(G::e1, 0), v1).empty());

  const State e12 = Element::monomial({md(G::e12, -1)});
  CHECK(module.act(md(G::h1, 0), e12) == e12);
  CHECK(module.act(md(G::f12, 1), Element::unit()).empty());
  for (G g : kGenerators) CHECK(module.act(md(g, 0), Element::unit()).empty());
}

TEST_CASE("weight_of examples") {
  CHECK(weight_of({md(G::e12, -2)}) == Weight{1, 1, 2});
  CHECK(weight_of({}) == Weight{0, 0, 0});
  CHECK(weight_of({md(G::e1, -1), md(G::e2, -1)}) == Weight{1, 1, 2});
  CHECK(to_string(Weight{q(-3, 2), 0, 4}) == "(-3/2, 0; 4)");
}

TEST_CASE("weight_space_basis examples") {
  const std::vector<Monomial> expected{{md(G::e1, -1), md(G::e2, -1)},
                                       {md(G::h1, -1), md(G::e12, -1)},
                                       {md(G::h2, -1), md(G::e12, -1)},
                                       {md(G::e12, -2)}};
  CHECK(weight_space_basis({1, 1, 2}) == expected);
  CHECK(weight_space_basis({0, 0, 0}) == std::vector<Monomial>{{}});

  const auto big = weight_space_basis({3, 3, 6});
  CHECK(big.size() == 56);
  auto contains = [&](const Monomial& m) { return std::find(big.begin(), big.end(), m) != big.end(); };
  CHECK(contains({md(G::e12, -2), md(G::e12, -2), md(G::e12, -2)}));
  CHECK(contains({md(G::e12, -4), md(G::e12, -1), md(G::e12, -1)}));
  CHECK(contains({md(G::e1, -3), md(G::e2, -1), md(G::e12, -1), md(G::e12, -1)}));
  for (const auto& m : big) {
    CHECK(is_canonical(m));
    CHECK(weight_of(m) == Weight{3, 3, 6});
  }
}

TEST_CASE("weight space dimensions match the character to degree 4") {
  for (const auto& [key, count] : character(4)) {
    const auto [w1, w2, d] = key;
    CAPTURE(w1);
    CAPTURE(w2);
    CAPTURE(d);
    CHECK(static_cast<long>(weight_space_basis({w1, w2, d}).size()) == count);
  }
  // Weights outside the support are empty.
  CHECK(weight_space_basis({5, 0, 2}).empty());
}

TEST_CASE("representation property") {
  std::mt19937 rng(99);
  for (const Rational& k : {q(-1, 2), q(1, 2), q(2, 5)}) {
    const Level level{k};
    VacuumModule module(level);
    for (int trial = 0; trial < 100; ++trial) {
      const Mode a = random_mode(rng, -2, 2);
      const Mode b = random_mode(rng, -2, 2);
      const State s = random_state(rng, module, 4);
      State lhs = module.act(a, module.act(b, s));
      lhs.add_scaled(module.act(b, module.act(a, s)), -super_sign(a.gen, b.gen));
      CHECK(lhs == act_element(module, mode_bracket(a, b, level), s));
    }
  }
}

TEST_CASE("act shifts weights covariantly") {
  std::mt19937 rng(17);
  const Level level{q(1, 2)};
  VacuumModule module(level);
  for (int trial = 0; trial < 60; ++trial) {
    const Monomial w = random_state_word(rng, 4);
    const State s = module.reduce(Element::monomial(w));
    if (s.empty()) continue;
    const Weight ws = *homogeneous_weight(s);
    const Mode a = random_mode(rng, -2, 2);
    const State t = module.act(a, s);
    if (t.empty()) continue;
    const Weight wt = *homogeneous_weight(t);
    CHECK(wt.w1 == ws.w1 + hweight(a.gen).w1);
    CHECK(wt.w2 == ws.w2 + hweight(a.gen).w2);
    CHECK(wt.degree == ws.degree - a.n);
  }
}

TEST_CASE("homogeneous_weight and is_state") {
  CHECK_FALSE(homogeneous_weight(Element()).has_value());
  CHECK_FALSE(homogeneous_weight(parse_expression("e12(-1) + e12(-2)")).has_value());
  CHECK(is_state(parse_expression("e12(-1)")));
  CHECK_FALSE(is_state(parse_expression("e12(0)")));
}
