#include "sl21/vacuum_module.hpp"

#include <algorithm>
#include <stdexcept>

namespace sl21 {

std::string to_string(const Weight& w) {
  return "(" + to_string(w.w1) + ", " + to_string(w.w2) + "; " + std::to_string(w.degree) + ")";
}

Weight weight_of(const Monomial& m) {
  Weight w{0, 0, 0};
  for (const auto& x : m) {
    const HWeight& h = hweight(x.gen);
    w.w1 += h.w1;
    w.w2 += h.w2;
    w.degree -= x.n;
  }
  return w;
}

std::optional<Weight> homogeneous_weight(const State& s) {
  if (s.empty()) return std::nullopt;
  const Weight w = weight_of(s.terms().begin()->first);
  for (const auto& [m, c] : s.terms())
    if (!(weight_of(m) == w)) return std::nullopt;
  return w;
}

bool is_state(const Element& e) {
  for (const auto& [m, c] : e.terms())
    for (const auto& x : m)
      if (x.n >= 0) return false;
  return true;
}

State VacuumModule::act(const Mode& m, const State& s) { return straightener_.left_multiply(m, s); }

const State& VacuumModule::act(const Mode& m, const Monomial& basis_vector) {
  return straightener_.left_multiply(m, basis_vector);
}

State VacuumModule::act(const Monomial& word, const State& s) {
  State acc = s;
  for (auto it = word.rbegin(); it != word.rend(); ++it) acc = act(*it, acc);
  return acc;
}

State VacuumModule::reduce(const Element& raw) { return straightener_.normal_order(raw); }

namespace {

struct Enumerator {
  const Weight& target;
  std::vector<Mode> modes;  // candidate modes in PBW order
  std::vector<Monomial> out;
  Monomial current;

  void run(std::size_t start, int remaining, const Rational& w1, const Rational& w2) {
    if (remaining == 0) {
      if (w1 == target.w1 && w2 == target.w2) out.push_back(current);
      return;
    }
    // Each mode changes w1 and w2 by at most 1 and costs at least 1 degree.
    if (abs(target.w1 - w1) > remaining || abs(target.w2 - w2) > remaining) return;
    for (std::size_t i = start; i < modes.size(); ++i) {
      const Mode& x = modes[i];
      if (-x.n > remaining) continue;
      const HWeight& h = hweight(x.gen);
      current.push_back(x);
      run(is_odd(x.gen) ? i + 1 : i, remaining + x.n, w1 + h.w1, w2 + h.w2);
      current.pop_back();
    }
  }
};

}  // namespace

std::vector<Monomial> weight_space_basis(const Weight& w) {
  if (w.degree < 0) throw std::invalid_argument("weight_space_basis: negative degree");
  Enumerator e{w, {}, {}, {}};
  for (int n = -w.degree; n <= -1; ++n)
    for (Generator g : kGenerators) e.modes.push_back(Mode{g, n});
  e.run(0, w.degree, 0, 0);
  std::sort(e.out.begin(), e.out.end(), MonomialLess{});
  return e.out;
}

}  // namespace sl21
