#pragma once

#include <fstream>
#include <map>
#include <random>
#include <sstream>
#include <string>

#include "sl21/affine_env.hpp"
#include "sl21/expression.hpp"
#include "sl21/linalg.hpp"
#include "sl21/vacuum_module.hpp"

namespace sl21::testing {

inline std::string data_file(const std::string& name) {
  std::ifstream f(std::string(SL21_TEST_DATA_DIR) + "/" + name);
  if (!f) throw std::runtime_error("missing test data " + name);
  std::stringstream s;
  s << f.rdbuf();
  return s.str();
}

inline Mode md(Generator g, int n) { return {g, n}; }

inline Rational q(long p, long r = 1) {
  Rational x(p, r);
  x.canonicalize();
  return x;
}

inline Generator random_generator(std::mt19937& rng) {
  return kGenerators[std::uniform_int_distribution<std::size_t>(0, kGenerators.size() - 1)(rng)];
}

inline Mode random_mode(std::mt19937& rng, int lo, int hi) {
  return {random_generator(rng), std::uniform_int_distribution<int>(lo, hi)(rng)};
}

inline Rational random_coefficient(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-5, 5), den(1, 4);
  int p = num(rng);
  if (p == 0) p = 1;
  return q(p, den(rng));
}

/// Random raw word of negative modes with total degree at most max_degree.
inline Monomial random_state_word(std::mt19937& rng, int max_degree) {
  Monomial w;
  int budget = std::uniform_int_distribution<int>(0, max_degree)(rng);
  while (budget > 0) {
    const int n = std::uniform_int_distribution<int>(1, budget)(rng);
    w.push_back({random_generator(rng), -n});
    budget -= n;
  }
  return w;
}

inline State random_state(std::mt19937& rng, VacuumModule& module, int max_degree, int terms = 3) {
  Element raw;
  for (int i = 0; i < terms; ++i) raw.add(random_state_word(rng, max_degree), random_coefficient(rng));
  return module.reduce(raw);
}

/// One raw term per line, as in the transcribed displays under data/.
inline std::vector<Element> data_terms(const std::string& name, Spelling spelling = Spelling::modes) {
  std::istringstream in(data_file(name));
  std::vector<Element> terms;
  for (std::string line; std::getline(in, line);)
    if (line.find_first_not_of(" \t\r") != std::string::npos) terms.push_back(parse_expression(line, spelling));
  return terms;
}

/// Coordinates of v in the span of the normal-ordered raw words of terms (their
/// coefficients are ignored). Empty if the words are dependent or v is outside.
inline std::vector<Rational> coordinates(VacuumModule& module, const std::vector<Element>& terms, const State& v) {
  std::vector<State> cols;
  for (const auto& t : terms) cols.push_back(module.reduce(Element::monomial(t.terms().begin()->first)));
  std::map<Monomial, std::size_t, MonomialLess> row_of;
  auto row = [&](const Monomial& m) { return row_of.try_emplace(m, row_of.size()).first->second; };
  for (const auto& c : cols)
    for (const auto& [m, x] : c.terms()) row(m);
  for (const auto& [m, x] : v.terms()) row(m);
  RationalMatrix a(row_of.size(), cols.size() + 1);
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (const auto& [m, x] : cols[j].terms()) a(row_of.at(m), j) = x;
  for (const auto& [m, x] : v.terms()) a(row_of.at(m), cols.size()) = x;
  const auto r = rref(a);
  if (r.size() != cols.size()) return {};
  std::vector<Rational> out;
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (r[j][j] != 1) return {};
    out.push_back(r[j][cols.size()]);
  }
  return out;
}

}  // namespace sl21::testing
