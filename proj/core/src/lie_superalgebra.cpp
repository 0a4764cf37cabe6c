#include "sl21/lie_superalgebra.hpp"

#include <stdexcept>
#include <string>

#include "sl21/linalg.hpp"

namespace sl21 {

namespace {

constexpr std::size_t idx(Generator g) { return static_cast<std::size_t>(g); }

Matrix3 unit(int r, int c, int value = 1) {
  Matrix3 m{};
  for (auto& row : m)
    for (auto& x : row) x = 0;
  m[r][c] = value;
  return m;
}

Matrix3 diag(int a, int b, int c) {
  Matrix3 m = unit(0, 0, a);
  m[1][1] = b;
  m[2][2] = c;
  return m;
}

Matrix3 multiply(const Matrix3& a, const Matrix3& b) {
  Matrix3 out{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Rational s = 0;
      for (int k = 0; k < 3; ++k) s += a[i][k] * b[k][j];
      out[i][j] = s;
    }
  return out;
}

struct Tables {
  std::array<Matrix3, 8> matrices;
  std::array<std::array<GLinComb, 8>, 8> brackets;
  std::array<std::array<Rational, 8>, 8> forms;
  std::array<HWeight, 8> weights;

  Tables() {
    matrices[idx(Generator::h1)] = diag(1, 0, 1);
    matrices[idx(Generator::h2)] = diag(0, -1, -1);
    matrices[idx(Generator::e12)] = unit(0, 1);
    matrices[idx(Generator::f12)] = unit(1, 0);
    matrices[idx(Generator::e1)] = unit(0, 2);
    matrices[idx(Generator::f1)] = unit(2, 0);
    matrices[idx(Generator::e2)] = unit(2, 1);
    matrices[idx(Generator::f2)] = unit(1, 2, -1);

    for (Generator a : kGenerators)
      for (Generator b : kGenerators) {
        const Matrix3 ab = multiply(matrices[idx(a)], matrices[idx(b)]);
        const Matrix3 ba = multiply(matrices[idx(b)], matrices[idx(a)]);
        Matrix3 sc{};
        for (int i = 0; i < 3; ++i)
          for (int j = 0; j < 3; ++j) sc[i][j] = ab[i][j] - super_sign(a, b) * ba[i][j];
        brackets[idx(a)][idx(b)] = decompose(sc);
        forms[idx(a)][idx(b)] = supertrace(ab);
      }

    for (Generator a : kGenerators) {
      HWeight w{0, 0};
      if (!is_cartan(a)) {
        const GLinComb& x1 = brackets[idx(Generator::h1)][idx(a)];
        const GLinComb& x2 = brackets[idx(Generator::h2)][idx(a)];
        w.w1 = x1.coefficient(a);
        w.w2 = x2.coefficient(a);
        if (!(x1 == w.w1 * GLinComb(a)) || !(x2 == w.w2 * GLinComb(a)))
          throw std::logic_error("generator is not an ad(h) eigenvector");
      }
      weights[idx(a)] = w;
    }
  }
};

const Tables& tables() {
  static const Tables t;
  return t;
}

}  // namespace

std::string_view name(Generator g) {
  switch (g) {
    case Generator::f12: return "f12";
    case Generator::f1: return "f1";
    case Generator::f2: return "f2";
    case Generator::h1: return "h1";
    case Generator::h2: return "h2";
    case Generator::e1: return "e1";
    case Generator::e2: return "e2";
    case Generator::e12: return "e12";
  }
  return "?";
}

std::optional<Generator> generator_from_name(std::string_view s) {
  for (Generator g : kGenerators)
    if (name(g) == s) return g;
  return std::nullopt;
}

const Matrix3& matrix(Generator g) { return tables().matrices[idx(g)]; }

Rational supertrace(const Matrix3& m) { return m[0][0] + m[1][1] - m[2][2]; }

void GLinComb::add(Generator g, const Rational& c) {
  if (is_zero(c)) return;
  auto [it, inserted] = terms_.try_emplace(g, c);
  if (!inserted) {
    it->second += c;
    if (is_zero(it->second)) terms_.erase(it);
  }
}

GLinComb& GLinComb::operator+=(const GLinComb& o) {
  for (const auto& [g, c] : o.terms_) add(g, c);
  return *this;
}

GLinComb& GLinComb::operator*=(const Rational& c) {
  if (is_zero(c)) {
    terms_.clear();
    return *this;
  }
  for (auto& [g, x] : terms_) x *= c;
  return *this;
}

Rational GLinComb::coefficient(Generator g) const {
  auto it = terms_.find(g);
  return it == terms_.end() ? Rational(0) : it->second;
}

GLinComb operator+(GLinComb a, const GLinComb& b) { return a += b; }
GLinComb operator-(GLinComb a, const GLinComb& b) {
  GLinComb nb = b;
  nb *= -1;
  return a += nb;
}
GLinComb operator*(const Rational& c, GLinComb a) { return a *= c; }

GLinComb decompose(const Matrix3& m) {
  if (!is_zero(supertrace(m))) throw std::logic_error("matrix has nonzero supertrace");
  GLinComb out;
  out.add(Generator::e12, m[0][1]);
  out.add(Generator::f12, m[1][0]);
  out.add(Generator::e1, m[0][2]);
  out.add(Generator::f1, m[2][0]);
  out.add(Generator::e2, m[2][1]);
  out.add(Generator::f2, -m[1][2]);
  // diag(a, -b, a - b) = a h1 + b h2
  out.add(Generator::h1, m[0][0]);
  out.add(Generator::h2, -m[1][1]);
  if (m[2][2] != m[0][0] + m[1][1]) throw std::logic_error("diagonal not in the Cartan span");
  return out;
}

const GLinComb& bracket(Generator a, Generator b) { return tables().brackets[idx(a)][idx(b)]; }

GLinComb bracket(const GLinComb& a, const GLinComb& b) {
  GLinComb out;
  for (const auto& [ga, ca] : a.terms())
    for (const auto& [gb, cb] : b.terms()) out += (ca * cb) * bracket(ga, gb);
  return out;
}

Rational form(Generator a, Generator b) { return tables().forms[idx(a)][idx(b)]; }

Rational form(const GLinComb& a, const GLinComb& b) {
  Rational s = 0;
  for (const auto& [ga, ca] : a.terms())
    for (const auto& [gb, cb] : b.terms()) s += ca * cb * form(ga, gb);
  return s;
}

const HWeight& hweight(Generator a) { return tables().weights[idx(a)]; }

StructureReport check_structure() {
  StructureReport rep;
  for (Generator a : kGenerators)
    for (Generator b : kGenerators) {
      ++rep.skew_checked;
      GLinComb rhs = bracket(b, a);
      rhs *= -super_sign(a, b);
      if (bracket(a, b) == rhs) ++rep.skew_passed;
    }
  for (Generator a : kGenerators)
    for (Generator b : kGenerators)
      for (Generator c : kGenerators) {
        ++rep.jacobi_checked;
        const GLinComb ga(a), gb(b), gc(c);
        GLinComb sum = Rational(super_sign(a, c)) * bracket(ga, bracket(b, c));
        sum += Rational(super_sign(b, a)) * bracket(gb, bracket(c, a));
        sum += Rational(super_sign(c, b)) * bracket(gc, bracket(a, b));
        if (sum.empty()) ++rep.jacobi_passed;

        ++rep.invariance_checked;
        if (form(bracket(a, b), gc) == form(ga, bracket(b, c))) ++rep.invariance_passed;
      }
  RationalMatrix gram(8, 8);
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j) gram(i, j) = form(kGenerators[i], kGenerators[j]);
  rep.gram_determinant = determinant(gram);
  return rep;
}

}  // namespace sl21
