#include "sl21/polyring.hpp"

#include "sl21/linalg.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace sl21 {

int compare(const Exponent& a, const Exponent& b, MonomialOrder ord) {
  if (ord == MonomialOrder::degrevlex && a.total() != b.total()) return a.total() < b.total() ? -1 : 1;
  // With two variables, revlex ties and lex both reduce to comparing the t1 power.
  if (a.d1 != b.d1) return a.d1 < b.d1 ? -1 : 1;
  if (a.d2 != b.d2) return a.d2 < b.d2 ? -1 : 1;
  return 0;
}

BiPoly::BiPoly(Rational c) { add({}, c); }

BiPoly BiPoly::monomial(Exponent e, Rational c) {
  BiPoly p;
  p.add(e, c);
  return p;
}

void BiPoly::add(const Exponent& e, const Rational& c) {
  if (sl21::is_zero(c)) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (sl21::is_zero(it->second)) terms_.erase(it);
  }
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
  for (const auto& [e, c] : o.terms_) add(e, c);
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
  for (const auto& [e, c] : o.terms_) add(e, -c);
  return *this;
}

BiPoly& BiPoly::operator*=(const Rational& c) {
  if (sl21::is_zero(c)) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, x] : terms_) x *= c;
  return *this;
}

Rational BiPoly::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

int BiPoly::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e.total());
  return d;
}

int BiPoly::degree_t1() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e.d1);
  return d;
}

int BiPoly::degree_t2() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e.d2);
  return d;
}

Exponent BiPoly::leading(MonomialOrder ord) const {
  if (terms_.empty()) throw std::logic_error("leading term of the zero polynomial");
  Exponent best = terms_.begin()->first;
  for (const auto& [e, c] : terms_)
    if (compare(e, best, ord) > 0) best = e;
  return best;
}

Rational BiPoly::leading_coefficient(MonomialOrder ord) const { return coefficient(leading(ord)); }

BiPoly BiPoly::monic(MonomialOrder ord) const {
  BiPoly p = *this;
  if (!p.is_zero()) p *= 1 / leading_coefficient(ord);
  return p;
}

Rational BiPoly::evaluate(const Rational& x1, const Rational& x2) const {
  Rational s = 0;
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (int i = 0; i < e.d1; ++i) t *= x1;
    for (int i = 0; i < e.d2; ++i) t *= x2;
    s += t;
  }
  return s;
}

BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
BiPoly operator-(BiPoly a) { return a *= -1; }

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  BiPoly out;
  for (const auto& [ea, ca] : a.terms())
    for (const auto& [eb, cb] : b.terms()) out.add({ea.d1 + eb.d1, ea.d2 + eb.d2}, ca * cb);
  return out;
}

BiPoly pow(const BiPoly& a, int k) {
  BiPoly out(1);
  for (int i = 0; i < k; ++i) out = out * a;
  return out;
}

// ---------------------------------------------------------------------------
// text form

namespace {

class PolyParser {
 public:
  explicit PolyParser(std::string_view s) : s_(s) {}

  BiPoly parse() {
    skip();
    if (pos_ >= s_.size()) throw ParseError("empty polynomial", pos_);
    BiPoly p = expr();
    skip();
    if (pos_ < s_.size()) throw ParseError(std::string("unexpected '") + s_[pos_] + "'", pos_);
    return p;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  char peek() {
    skip();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  BiPoly expr() {
    BiPoly acc;
    int sign = 1;
    if (peek() == '-' || peek() == '+') sign = s_[pos_++] == '-' ? -1 : 1;
    acc += sign == 1 ? term() : -term();
    while (peek() == '+' || peek() == '-') {
      sign = s_[pos_++] == '-' ? -1 : 1;
      acc += sign == 1 ? term() : -term();
    }
    return acc;
  }

  bool starts_factor() {
    char c = peek();
    return std::isdigit(static_cast<unsigned char>(c)) || c == 't' || c == '(';
  }

  BiPoly term() {
    if (!starts_factor()) throw ParseError("expected a term", pos_);
    BiPoly acc = factor();
    for (;;) {
      if (peek() == '*') {
        ++pos_;
        if (!starts_factor()) throw ParseError("expected a factor after '*'", pos_);
        acc = acc * factor();
      } else if (starts_factor()) {
        acc = acc * factor();
      } else {
        return acc;
      }
    }
  }

  BiPoly factor() {
    BiPoly base = primary();
    if (peek() == '^') {
      ++pos_;
      skip();
      const std::size_t start = pos_;
      int k = 0;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) k = 10 * k + (s_[pos_++] - '0');
      if (pos_ == start) throw ParseError("expected an exponent", start);
      return pow(base, k);
    }
    return base;
  }

  BiPoly primary() {
    const char c = peek();
    const std::size_t start = pos_;
    if (c == '(') {
      ++pos_;
      BiPoly p = expr();
      if (peek() != ')') throw ParseError("expected ')'", pos_);
      ++pos_;
      return p;
    }
    if (c == 't') {
      ++pos_;
      if (pos_ < s_.size() && s_[pos_] == '1') {
        ++pos_;
        return BiPoly::t1();
      }
      if (pos_ < s_.size() && s_[pos_] == '2') {
        ++pos_;
        return BiPoly::t2();
      }
      throw ParseError("unknown variable; expected t1 or t2", start);
    }
    std::string num;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) num += s_[pos_++];
    if (pos_ < s_.size() && s_[pos_] == '/') {
      num += s_[pos_++];
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) num += s_[pos_++];
    }
    try {
      return BiPoly(parse_rational(num));
    } catch (const ParseError&) {
      throw ParseError("expected a number, t1, t2 or '('", start);
    }
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

BiPoly parse_bipoly(std::string_view src) { return PolyParser(src).parse(); }

std::string render(const BiPoly& p) {
  if (p.is_zero()) return "0";
  std::vector<std::pair<Exponent, Rational>> terms(p.terms().begin(), p.terms().end());
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    return compare(a.first, b.first, MonomialOrder::degrevlex) > 0;
  });
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms) {
    const bool negative = sgn(c) < 0;
    os << (first ? (negative ? "-" : "") : (negative ? " - " : " + "));
    first = false;
    const Rational mag = abs(c);
    std::vector<std::string> parts;
    if (mag != 1 || e.total() == 0) parts.push_back(to_string(mag));
    if (e.d1 > 0) parts.push_back(e.d1 == 1 ? "t1" : "t1^" + std::to_string(e.d1));
    if (e.d2 > 0) parts.push_back(e.d2 == 1 ? "t2" : "t2^" + std::to_string(e.d2));
    for (std::size_t i = 0; i < parts.size(); ++i) os << (i ? "*" : "") << parts[i];
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Groebner bases

BiPoly reduce(const BiPoly& f, const std::vector<BiPoly>& g, MonomialOrder ord) {
  std::vector<std::pair<Exponent, Rational>> leads;
  for (const auto& q : g) {
    if (q.is_zero()) {
      leads.emplace_back(Exponent{-1, -1}, 0);
      continue;
    }
    const Exponent e = q.leading(ord);
    leads.emplace_back(e, q.coefficient(e));
  }
  BiPoly p = f;
  BiPoly r;
  while (!p.is_zero()) {
    const Exponent lt = p.leading(ord);
    const Rational lc = p.coefficient(lt);
    bool divided = false;
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (g[i].is_zero() || !leads[i].first.divides(lt)) continue;
      const Exponent shift{lt.d1 - leads[i].first.d1, lt.d2 - leads[i].first.d2};
      p -= BiPoly::monomial(shift, lc / leads[i].second) * g[i];
      divided = true;
      break;
    }
    if (!divided) {
      r.add(lt, lc);
      p.add(lt, -lc);
    }
  }
  return r;
}

BiPoly s_polynomial(const BiPoly& f, const BiPoly& g, MonomialOrder ord) {
  const Exponent a = f.leading(ord);
  const Exponent b = g.leading(ord);
  const Exponent l{std::max(a.d1, b.d1), std::max(a.d2, b.d2)};
  return BiPoly::monomial({l.d1 - a.d1, l.d2 - a.d2}, 1 / f.coefficient(a)) * f -
         BiPoly::monomial({l.d1 - b.d1, l.d2 - b.d2}, 1 / g.coefficient(b)) * g;
}

std::vector<BiPoly> groebner(const std::vector<BiPoly>& gens, MonomialOrder ord) {
  std::vector<BiPoly> g;
  for (const auto& p : gens)
    if (!p.is_zero()) g.push_back(p.monic(ord));
  if (g.empty()) return {};

  std::set<std::pair<std::size_t, std::size_t>> pending;
  for (std::size_t j = 1; j < g.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) pending.insert({i, j});

  auto lcm_of = [&](std::size_t i, std::size_t j) {
    const Exponent a = g[i].leading(ord), b = g[j].leading(ord);
    return Exponent{std::max(a.d1, b.d1), std::max(a.d2, b.d2)};
  };
  auto is_pending = [&](std::size_t i, std::size_t j) { return pending.count({std::min(i, j), std::max(i, j)}) > 0; };

  while (!pending.empty()) {
    // Smallest lcm first (normal selection strategy).
    auto best = pending.begin();
    for (auto it = pending.begin(); it != pending.end(); ++it)
      if (compare(lcm_of(it->first, it->second), lcm_of(best->first, best->second), ord) < 0) best = it;
    const auto [i, j] = *best;
    pending.erase(best);

    const Exponent a = g[i].leading(ord), b = g[j].leading(ord);
    if (std::min(a.d1, b.d1) == 0 && std::min(a.d2, b.d2) == 0) continue;  // coprime leading terms
    const Exponent l = lcm_of(i, j);
    bool chain = false;
    for (std::size_t k = 0; k < g.size() && !chain; ++k)
      chain = k != i && k != j && g[k].leading(ord).divides(l) && !is_pending(i, k) && !is_pending(j, k);
    if (chain) continue;

    BiPoly h = reduce(s_polynomial(g[i], g[j], ord), g, ord);
    if (h.is_zero()) continue;
    g.push_back(h.monic(ord));
    const std::size_t n = g.size() - 1;
    for (std::size_t k = 0; k < n; ++k) pending.insert({k, n});
  }

  // Minimalize, then interreduce.
  std::vector<BiPoly> minimal;
  for (std::size_t i = 0; i < g.size(); ++i) {
    const Exponent li = g[i].leading(ord);
    bool redundant = false;
    for (std::size_t j = 0; j < g.size() && !redundant; ++j) {
      if (i == j) continue;
      const Exponent lj = g[j].leading(ord);
      redundant = lj.divides(li) && (lj != li || j < i);
    }
    if (!redundant) minimal.push_back(g[i]);
  }
  std::vector<BiPoly> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<BiPoly> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    reduced.push_back(reduce(minimal[i], others, ord).monic(ord));
  }
  std::sort(reduced.begin(), reduced.end(), [ord](const BiPoly& x, const BiPoly& y) {
    return compare(x.leading(ord), y.leading(ord), ord) < 0;
  });
  return reduced;
}

std::string to_string(const QuotientDim& q) { return q.finite ? std::to_string(q.count) : "infinite"; }

std::vector<Exponent> standard_monomials(const std::vector<BiPoly>& basis, MonomialOrder ord) {
  int bound1 = -1, bound2 = -1;
  std::vector<Exponent> leads;
  for (const auto& p : basis) {
    const Exponent e = p.leading(ord);
    leads.push_back(e);
    if (e.d2 == 0 && (bound1 < 0 || e.d1 < bound1)) bound1 = e.d1;
    if (e.d1 == 0 && (bound2 < 0 || e.d2 < bound2)) bound2 = e.d2;
  }
  if (bound1 < 0 || bound2 < 0) throw std::logic_error("quotient is infinite-dimensional");
  std::vector<Exponent> out;
  for (int a = 0; a < bound1; ++a)
    for (int b = 0; b < bound2; ++b) {
      const Exponent e{a, b};
      if (std::none_of(leads.begin(), leads.end(), [&](const Exponent& l) { return l.divides(e); })) out.push_back(e);
    }
  return out;
}

QuotientDim quotient_dim(const std::vector<BiPoly>& gens, MonomialOrder ord) {
  const auto basis = groebner(gens, ord);
  if (basis.empty()) return QuotientDim::infinite();
  bool pure1 = false, pure2 = false;
  for (const auto& p : basis) {
    const Exponent e = p.leading(ord);
    pure1 = pure1 || e.d2 == 0;
    pure2 = pure2 || e.d1 == 0;
  }
  if (!pure1 || !pure2) return QuotientDim::infinite();
  return QuotientDim::of(standard_monomials(basis, ord).size());
}

// ---------------------------------------------------------------------------
// linear factorization over Q

namespace {

// Dense univariate polynomial in t2, index = degree, no trailing zeros.
using UPoly = std::vector<Rational>;

void trim(UPoly& p) {
  while (!p.empty() && is_zero(p.back())) p.pop_back();
}

int deg(const UPoly& p) { return static_cast<int>(p.size()) - 1; }

UPoly mul(const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return {};
  UPoly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  trim(out);
  return out;
}

UPoly sub(UPoly a, const UPoly& b) {
  if (a.size() < b.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

UPoly scale(UPoly a, const Rational& c) {
  for (auto& x : a) x *= c;
  trim(a);
  return a;
}

std::pair<UPoly, UPoly> divmod(UPoly a, const UPoly& b) {
  if (b.empty()) throw std::domain_error("polynomial division by zero");
  UPoly q(std::max(0, deg(a) - deg(b) + 1));
  while (!a.empty() && deg(a) >= deg(b)) {
    const int shift = deg(a) - deg(b);
    const Rational c = a.back() / b.back();
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= c * b[i];
    trim(a);
  }
  trim(q);
  return {q, a};
}

UPoly gcd(UPoly a, UPoly b) {
  while (!b.empty()) {
    UPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) a = scale(a, 1 / a.back());
  return a;
}

std::optional<Rational> rational_sqrt(const Rational& q) {
  if (sgn(q) < 0) return std::nullopt;
  const Integer& n = q.get_num();
  const Integer& d = q.get_den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return std::nullopt;
  Integer rn, rd;
  mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
  return Rational(rn, rd);
}

std::optional<UPoly> poly_sqrt(const UPoly& p) {
  if (p.empty()) return UPoly{};
  if (deg(p) % 2 != 0) return std::nullopt;
  const auto lead = rational_sqrt(p.back());
  if (!lead) return std::nullopt;
  const int h = deg(p) / 2;
  UPoly s(h + 1);
  s[h] = *lead;
  for (int k = 1; k <= h; ++k) {
    // coefficient of t^{2h-k} in s^2 determines s[h-k]
    Rational acc = p[2 * h - k];
    for (int i = h - k + 1; i <= h; ++i) {
      const int j = 2 * h - k - i;
      if (j >= h - k + 1 && j <= h) acc -= s[i] * s[j];
    }
    s[h - k] = acc / (2 * s[h]);
  }
  trim(s);
  if (mul(s, s) != p) return std::nullopt;
  return s;
}

/// Rational roots with multiplicity; throws if an irreducible factor of degree >= 2 remains.
std::vector<Rational> split_univariate(UPoly p) {
  std::vector<Rational> roots;
  while (!p.empty() && is_zero(p.front())) {
    roots.push_back(0);
    p.erase(p.begin());
  }
  while (deg(p) >= 1) {
    if (deg(p) == 1) {
      roots.push_back(-p[0] / p[1]);
      break;
    }
    Integer den = 1;
    for (const auto& c : p) den = lcm(den, c.get_den());
    const Integer a0 = abs(Integer(p.front() * den));
    const Integer an = abs(Integer(p.back() * den));
    if (a0 > Integer("1000000000000") || an > Integer("1000000000000"))
      throw UnsupportedError("coefficients too large for rational root search");
    auto divisors = [](const Integer& n) {
      std::vector<Integer> ds;
      for (Integer i = 1; i * i <= n; ++i)
        if (n % i == 0) {
          ds.push_back(i);
          if (i * i != n) ds.push_back(n / i);
        }
      return ds;
    };
    bool found = false;
    for (const auto& num : divisors(a0)) {
      for (const auto& dd : divisors(an)) {
        for (int s : {1, -1}) {
          Rational r(s * num, dd);
          r.canonicalize();
          Rational v = 0;
          for (std::size_t i = p.size(); i-- > 0;) v = v * r + p[i];
          if (is_zero(v)) {
            roots.push_back(r);
            p = divmod(p, UPoly{-r, 1}).first;
            found = true;
            break;
          }
        }
        if (found) break;
      }
      if (found) break;
    }
    if (!found) throw UnsupportedError("univariate factor of degree " + std::to_string(deg(p)) + " has no rational root");
  }
  return roots;
}

BiPoly from_t1_coeffs(const std::vector<UPoly>& coeffs) {
  BiPoly out;
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    for (std::size_t j = 0; j < coeffs[i].size(); ++j) out.add({static_cast<int>(i), static_cast<int>(j)}, coeffs[i][j]);
  return out;
}

BiPoly normalized_linear(BiPoly f) {
  // Make the first nonzero of (t1, t2, 1) coefficients equal to 1 for deduplication.
  for (Exponent e : {Exponent{1, 0}, Exponent{0, 1}, Exponent{0, 0}}) {
    const Rational c = f.coefficient(e);
    if (!is_zero(c)) return f *= 1 / c;
  }
  return f;
}

}  // namespace

std::vector<BiPoly> linear_factors(const BiPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("linear_factors of the zero polynomial");
  const int d = p.degree_t1();
  std::vector<UPoly> c(d + 1);
  for (const auto& [e, x] : p.terms()) {
    if (static_cast<int>(c[e.d1].size()) <= e.d2) c[e.d1].resize(e.d2 + 1);
    c[e.d1][e.d2] = x;
  }
  for (auto& ci : c) trim(ci);

  UPoly content;
  for (const auto& ci : c) content = gcd(content, ci);

  std::vector<BiPoly> factors;
  for (const auto& r : split_univariate(content)) factors.push_back(BiPoly::t2() - BiPoly(r));

  std::vector<UPoly> q(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) q[i] = divmod(c[i], content).first;

  auto is_linear_in_t2 = [](const UPoly& u) { return deg(u) <= 1; };
  if (d == 1) {
    if (deg(q[1]) != 0 || !is_linear_in_t2(q[0]))
      throw UnsupportedError("irreducible factor of degree " + std::to_string(from_t1_coeffs(q).total_degree()));
    factors.push_back(from_t1_coeffs(q));
  } else if (d == 2) {
    const UPoly& A = q[2];
    const UPoly& B = q[1];
    const UPoly& C = q[0];
    if (deg(A) != 0) throw UnsupportedError("quadratic factor with non-constant leading coefficient in t1");
    const UPoly disc = sub(mul(B, B), scale(mul(A, C), 4));
    const auto root = poly_sqrt(disc);
    if (!root) throw UnsupportedError("irreducible quadratic factor over Q");
    const Rational inv = 1 / (2 * A[0]);
    for (int s : {1, -1}) {
      // t1 - r(t2) with r = (-B + s*sqrt(disc)) / (2A)
      UPoly r = scale(sub(scale(*root, s), B), inv);
      if (!is_linear_in_t2(r)) throw UnsupportedError("quadratic factor splits into non-linear pieces");
      std::vector<UPoly> lin(2);
      lin[1] = UPoly{1};
      lin[0] = scale(r, -1);
      factors.push_back(from_t1_coeffs(lin));
    }
  } else if (d > 2) {
    throw UnsupportedError("factor of degree " + std::to_string(d) + " in t1 exceeds the linear-factor solver");
  }

  std::vector<BiPoly> unique;
  for (auto& f : factors) {
    f = normalized_linear(f);
    if (std::find(unique.begin(), unique.end(), f) == unique.end()) unique.push_back(f);
  }
  return unique;
}

std::vector<Point> solve_factored(const std::vector<BiPoly>& gens) {
  std::vector<std::vector<BiPoly>> choices;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    if (g.is_constant()) return {};
    choices.push_back(linear_factors(g));
  }
  if (choices.empty()) throw UnsupportedError("no nonzero generators: the variety is the whole plane");

  std::vector<Point> points;
  std::vector<std::size_t> pick(choices.size(), 0);
  for (;;) {
    // rows: a t1 + b t2 = -c
    RationalMatrix m(choices.size(), 3);
    for (std::size_t i = 0; i < choices.size(); ++i) {
      const BiPoly& f = choices[i][pick[i]];
      m(i, 0) = f.coefficient({1, 0});
      m(i, 1) = f.coefficient({0, 1});
      m(i, 2) = -f.coefficient({0, 0});
    }
    const auto rows = rref(m);
    bool consistent = true;
    for (const auto& r : rows)
      if (is_zero(r[0]) && is_zero(r[1])) consistent = false;
    if (consistent) {
      if (rows.size() < 2) throw UnsupportedError("positive-dimensional component");
      points.emplace_back(rows[0][2], rows[1][2]);
    }
    std::size_t k = 0;
    while (k < pick.size() && ++pick[k] == choices[k].size()) pick[k++] = 0;
    if (k == pick.size()) break;
  }

  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  for (const auto& [x, y] : points)
    for (const auto& g : gens)
      if (!is_zero(g.evaluate(x, y))) throw std::logic_error("solve_factored produced a non-root");
  return points;
}

bool verify_on_line(const BiPoly& p, const Rational& a, const Rational& b, const Rational& c, const Rational& d) {
  UPoly total;
  const UPoly x{a, b}, y{c, d};
  for (const auto& [e, coef] : p.terms()) {
    UPoly t{coef};
    for (int i = 0; i < e.d1; ++i) t = mul(t, x);
    for (int i = 0; i < e.d2; ++i) t = mul(t, y);
    if (total.size() < t.size()) total.resize(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) total[i] += t[i];
  }
  trim(total);
  return total.empty();
}

std::vector<Point> admissible_weights(const Level& level) {
  const auto adm = level.admissible();
  if (!adm) throw std::invalid_argument("level " + to_string(level.k) + " is not admissible: k + 1 = (m+1)/M needs m >= 0, M >= 1");
  const Rational shifted = level.k + 1;
  const long M = adm->M;
  std::vector<Point> out;
  // first family: k0 + k1 + k2 = M - 1
  for (long k1 = 0; k1 <= M - 1; ++k1)
    for (long k2 = 0; k1 + k2 <= M - 1; ++k2) out.emplace_back(-k1 * shifted, -k2 * shifted);
  // second family: k0 + k1 + k2 = M + 1, 1 <= k1, k2 <= M - 1, k1 + k2 <= M
  for (long k1 = 1; k1 <= M - 1; ++k1)
    for (long k2 = 1; k2 <= M - 1; ++k2)
      if (k1 + k2 <= M && M + 1 - k1 - k2 >= 0) out.emplace_back(k1 * shifted, k2 * shifted);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace sl21
