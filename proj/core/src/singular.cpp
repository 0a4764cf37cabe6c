#include "sl21/singular.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <thread>

#include "sl21/linalg.hpp"

namespace sl21 {

std::vector<Mode> raising_set() {
  return {Mode{Generator::e1, 0}, Mode{Generator::e2, 0}, Mode{Generator::f12, 1}};
}

Weight singular_target(const Level& level) {
  const auto adm = level.admissible();
  if (!adm) throw std::invalid_argument("level " + to_string(level.k) + " is not admissible (k + 1 must be positive)");
  const long j = adm->m + 1;
  return Weight{Rational(j), Rational(j), static_cast<int>(j * adm->M)};
}

bool verify_singular(VacuumModule& module, const State& s) {
  if (s.empty()) throw std::invalid_argument("verify_singular: zero vector");
  if (!is_state(s)) throw std::invalid_argument("verify_singular: state contains a mode with n >= 0");
  if (!homogeneous_weight(s)) throw std::invalid_argument("verify_singular: state mixes weights");
  for (const Mode& r : raising_set())
    if (!module.act(r, s).empty()) return false;
  return true;
}

namespace {

using Column = std::vector<State>;  // one image per raising mode

std::vector<Column> images(const Level& level, const std::vector<Monomial>& basis, unsigned threads) {
  const auto raising = raising_set();
  std::vector<Column> cols(basis.size());
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(basis.size())));
  auto work = [&](unsigned id) {
    VacuumModule module(level);
    for (std::size_t j = id; j < basis.size(); j += threads) {
      cols[j].reserve(raising.size());
      for (const Mode& r : raising) cols[j].push_back(module.act(r, basis[j]));
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
    for (auto& t : pool) t.join();
  }
  return cols;
}

}  // namespace

SingularSearch find_singular(const Level& level, const Weight& weight, unsigned threads) {
  SingularSearch out;
  out.weight = weight;
  out.weight_basis = weight_space_basis(weight);
  const auto& basis = out.weight_basis;
  if (basis.empty()) return out;

  const auto cols = images(level, basis, threads);
  const std::size_t nr = raising_set().size();

  std::vector<std::map<Monomial, std::size_t, MonomialLess>> row_index(nr);
  for (const auto& col : cols)
    for (std::size_t r = 0; r < nr; ++r)
      for (const auto& [m, c] : col[r].terms()) row_index[r].try_emplace(m, 0);
  std::size_t rows = 0;
  for (auto& idx : row_index)
    for (auto& [m, i] : idx) i = rows++;

  RationalMatrix a(rows, basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j)
    for (std::size_t r = 0; r < nr; ++r)
      for (const auto& [m, c] : cols[j][r].terms()) a(row_index[r].at(m), j) = c;

  auto kernel = nullspace(a);
  if (kernel.empty()) return out;

  // Re-echelonize from the right so each vector ends in a distinct unit coefficient.
  const std::size_t n = basis.size();
  RationalMatrix reversed(kernel.size(), n);
  for (std::size_t i = 0; i < kernel.size(); ++i)
    for (std::size_t j = 0; j < n; ++j) reversed(i, j) = kernel[i][n - 1 - j];
  for (const auto& row : rref(reversed)) {
    State s;
    for (std::size_t j = 0; j < n; ++j) s.add(basis[j], row[n - 1 - j]);
    out.basis.push_back(std::move(s));
  }
  return out;
}

SingularSearch find_singular(const Level& level, unsigned threads) {
  return find_singular(level, singular_target(level), threads);
}

}  // namespace sl21
