#include <doctest.h>

#include <random>
#include <thread>

#include "sl21/affine_env.hpp"
#include "support.hpp"

using namespace sl21;
using namespace sl21::testing;
using G = Generator;

namespace {

// Independent straightener: repeatedly fixes a randomly chosen out-of-order adjacent
// pair. No memoization and no fixed rewriting order.
Element bubble_normal_order(const Element& raw, const Level& level, std::mt19937& rng) {
  Element todo = raw;
  Element done;
  while (!todo.empty()) {
    const auto [w, c] = *todo.terms().begin();
    todo.add(w, -c);
    std::vector<std::size_t> bad;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      const auto cmp = pbw_compare(w[i], w[i + 1]);
      if (cmp > 0 || (cmp == 0 && is_odd(w[i].gen))) bad.push_back(i);
    }
    if (bad.empty()) {
      done.add(w, c);
      continue;
    }
    const std::size_t i = bad[std::uniform_int_distribution<std::size_t>(0, bad.size() - 1)(rng)];
    const Monomial head(w.begin(), w.begin() + i);
    const Monomial tail(w.begin() + i + 2, w.end());
    const Element br = mode_bracket(w[i], w[i + 1], level);
    const bool square = w[i] == w[i + 1];
    if (!square) {
      Monomial swapped = head;
      swapped.push_back(w[i + 1]);
      swapped.push_back(w[i]);
      swapped.insert(swapped.end(), tail.begin(), tail.end());
      todo.add(swapped, c * super_sign(w[i].gen, w[i + 1].gen));
    }
    for (const auto& [bw, bc] : br.terms()) {
      Monomial out = head;
      out.insert(out.end(), bw.begin(), bw.end());
      out.insert(out.end(), tail.begin(), tail.end());
      todo.add(out, square ? Rational(c * bc / 2) : Rational(c * bc));
    }
  }
  return done;
}

Monomial random_word(std::mt19937& rng, std::size_t max_len) {
  Monomial w(std::uniform_int_distribution<std::size_t>(1, max_len)(rng));
  for (auto& m : w) m = random_mode(rng, -2, 2);
  return w;
}

}  // namespace

TEST_CASE("mode_bracket examples") {
  const Level level{q(-1, 2)};
  Element expected;
  expected.add({md(G::h1, -1)}, -1);
  expected.add({md(G::h2, -1)}, -1);
  CHECK(mode_bracket(md(G::f12, 1), md(G::e12, -2), level) == expected);

  const Level k{q(3, 7)};
  CHECK(mode_bracket(md(G::h1, 2), md(G::h2, -2), k) == Element::unit(2 * k.k));
  CHECK(mode_bracket(md(G::e1, 0), md(G::e1, 0), k).empty());
  CHECK(mode_bracket(md(G::e1, 1), md(G::f1, -1), k) ==
        Element::monomial({md(G::h1, 0)}) + Element::unit(k.k));
}

TEST_CASE("normal_order examples") {
  const Level level{q(-1, 2)};
  Element expected;
  expected.add({md(G::e1, -1), md(G::e2, -1)}, -1);
  expected.add({md(G::e12, -2)}, 1);
  CHECK(normal_order(Element::monomial({md(G::e2, -1), md(G::e1, -1)}), level) == expected);

  const Monomial canonical{md(G::f1, -3), md(G::h1, -1), md(G::e12, -1), md(G::e12, -1), md(G::e2, 2)};
  REQUIRE(is_canonical(canonical));
  CHECK(normal_order(Element::monomial(canonical), level) == Element::monomial(canonical));

  CHECK(normal_order(Element::monomial({md(G::e1, -1), md(G::e1, -1)}), level).empty());
}

TEST_CASE("even squares are canonical, odd squares are not") {
  CHECK(is_canonical({md(G::e12, -1), md(G::e12, -1)}));
  CHECK_FALSE(is_canonical({md(G::f2, -1), md(G::f2, -1)}));
  CHECK_FALSE(is_canonical({md(G::e12, -1), md(G::h1, -1)}));
}

TEST_CASE("admissible level decomposition") {
  auto adm = [](Rational k) { return Level{k}.admissible(); };
  REQUIRE(adm(q(-1, 2)));
  CHECK(adm(q(-1, 2))->m == 0);
  CHECK(adm(q(-1, 2))->M == 2);
  CHECK(adm(q(1, 2))->m == 2);
  CHECK(adm(q(1, 2))->M == 2);
  CHECK(adm(q(0))->m == 0);
  CHECK(adm(q(0))->M == 1);
  CHECK_FALSE(adm(q(-1)));
  CHECK_FALSE(adm(q(-3, 2)));
}

TEST_CASE("homomorphism: normal ordered supercommutator equals mode_bracket") {
  const Level level{q(-1, 2)};
  Straightener s(level);
  for (G a : kGenerators)
    for (G b : kGenerators)
      for (int m = -2; m <= 2; ++m)
        for (int n = -2; n <= 2; ++n) {
          Element raw;
          raw.add({md(a, m), md(b, n)}, 1);
          raw.add({md(b, n), md(a, m)}, -super_sign(a, b));
          CHECK(s.normal_order(raw) == mode_bracket(md(a, m), md(b, n), level));
        }
}

TEST_CASE("confluence under random reassociation") {
  std::mt19937 rng(2024);
  for (const Rational& k : {q(-1, 2), q(1, 2), q(5, 3)}) {
    const Level level{k};
    Straightener s(level);
    for (int trial = 0; trial < 200; ++trial) {
      const Monomial w = random_word(rng, 6);
      const Element whole = s.normal_order(w);
      CHECK(whole.is_canonical());

      const std::size_t cut = std::uniform_int_distribution<std::size_t>(0, w.size())(rng);
      const Monomial left(w.begin(), w.begin() + cut), right(w.begin() + cut, w.end());
      CHECK(s.multiply(s.normal_order(left), s.normal_order(right)) == whole);

      CHECK(bubble_normal_order(Element::monomial(w), level, rng) == whole);
    }
  }
}

TEST_CASE("normal ordering preserves mode sum and parity") {
  std::mt19937 rng(11);
  const Level level{q(1, 2)};
  Straightener s(level);
  for (int trial = 0; trial < 100; ++trial) {
    const Monomial w = random_word(rng, 5);
    const Element normal = s.normal_order(w);
    for (const auto& [out, c] : normal.terms()) {
      if (out.empty()) continue;  // central terms
      CHECK(mode_sum(out) == mode_sum(w));
      CHECK(parity(out) == parity(w));
    }
  }
}

TEST_CASE("vacuum quotient drops words ending in nonnegative modes") {
  const Level level{q(-1, 2)};
  Straightener vac(level, Straightener::Quotient::vacuum);
  CHECK(vac.left_multiply(md(G::e1, 0), Monomial{}).empty());
  CHECK(vac.left_multiply(md(G::f12, 1), Monomial{}).empty());
  const Element r = vac.left_multiply(md(G::f12, 1), Monomial{md(G::e12, -2)});
  Element expected;
  expected.add({md(G::h1, -1)}, -1);
  expected.add({md(G::h2, -1)}, -1);
  CHECK(r == expected);
}

TEST_CASE("a shared straightener gives identical results across threads") {
  const Level level{q(1, 2)};
  std::mt19937 rng(5);
  std::vector<Monomial> words;
  for (int i = 0; i < 40; ++i) words.push_back(random_word(rng, 6));
  std::vector<Element> reference;
  {
    Straightener s(level);
    for (const auto& w : words) reference.push_back(s.normal_order(w));
  }
  Straightener shared(level);
  std::vector<std::vector<Element>> results(4);
  std::vector<std::thread> pool;
  for (int t = 0; t < 4; ++t)
    pool.emplace_back([&, t] {
      for (const auto& w : words) results[t].push_back(shared.normal_order(w));
    });
  for (auto& th : pool) th.join();
  for (const auto& r : results) CHECK(r == reference);
}
