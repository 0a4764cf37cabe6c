#include "sl21/expression.hpp"

#include <cctype>
#include <sstream>

namespace sl21 {

namespace {

Element product(const Element& a, const Element& b) {
  Element out;
  for (const auto& [wa, ca] : a.terms())
    for (const auto& [wb, cb] : b.terms()) {
      Monomial w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      out.add(w, ca * cb);
    }
  return out;
}

std::string valid_names() {
  std::string s;
  for (Generator g : kGenerators) {
    if (!s.empty()) s += ", ";
    s += name(g);
  }
  return s + ", h+, h-";
}

class Parser {
 public:
  Parser(std::string_view src, Spelling spelling) : src_(src), spelling_(spelling) {}

  Element parse() {
    skip_ws();
    if (at_end()) throw ParseError("empty input", pos_);
    Element e = expr();
    skip_ws();
    if (!at_end()) throw ParseError(std::string("unexpected '") + peek() + "'", pos_);
    return e;
  }

 private:
  bool at_end() const { return pos_ >= src_.size(); }
  char peek() const { return at_end() ? '\0' : src_[pos_]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip_ws();
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) throw ParseError(std::string("expected '") + c + "'", pos_);
  }

  Element expr() {
    Element out;
    skip_ws();
    int sign = 1;
    if (accept('-'))
      sign = -1;
    else
      accept('+');
    out.add_scaled(term(), sign);
    for (;;) {
      skip_ws();
      if (accept('+'))
        sign = 1;
      else if (accept('-'))
        sign = -1;
      else
        break;
      out.add_scaled(term(), sign);
    }
    return out;
  }

  bool starts_factor() {
    skip_ws();
    return std::isalpha(static_cast<unsigned char>(peek())) || peek() == '(';
  }

  Element term() {
    skip_ws();
    Element acc = Element::unit();
    bool any = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      acc = Element::unit(rational());
      any = true;
    }
    for (;;) {
      skip_ws();
      std::size_t save = pos_;
      bool star = accept('*');
      if (!starts_factor()) {
        if (star) throw ParseError("expected a generator after '*'", pos_);
        pos_ = save;
        break;
      }
      acc = product(acc, factor());
      any = true;
    }
    if (!any) throw ParseError("expected a term", pos_);
    return acc;
  }

  Element factor() {
    Element base = atom();
    if (accept('^')) {
      skip_ws();
      std::size_t at = pos_;
      long k = integer(false);
      if (k < 0) throw ParseError("negative exponent", at);
      Element out = Element::unit();
      for (long i = 0; i < k; ++i) out = product(out, base);
      return out;
    }
    return base;
  }

  Element atom() {
    skip_ws();
    if (accept('(')) {
      Element e = expr();
      expect(')');
      return e;
    }
    const std::size_t start = pos_;
    std::string word;
    // A name is one letter plus its index digits, so juxtaposed words like e2e1 split.
    if (!at_end() && std::isalpha(static_cast<unsigned char>(peek()))) word += src_[pos_++];
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) word += src_[pos_++];
    GLinComb gens;
    if (word == "h" && (peek() == '+' || peek() == '-')) {
      const bool plus = src_[pos_++] == '+';
      gens.add(Generator::h1, 1);
      gens.add(Generator::h2, plus ? 1 : -1);
    } else if (auto g = generator_from_name(word)) {
      gens.add(*g, 1);
    } else {
      throw ParseError("unknown generator '" + word + "'; valid names: " + valid_names(), start);
    }
    int n = 0;
    if (spelling_ == Spelling::modes) {
      expect('(');
      skip_ws();
      n = static_cast<int>(integer(true));
      expect(')');
    }
    Element out;
    for (const auto& [g, c] : gens.terms()) out.add({Mode{g, n}}, c);
    return out;
  }

  long integer(bool allow_sign) {
    skip_ws();
    const std::size_t start = pos_;
    std::string s;
    if (allow_sign && (peek() == '-' || peek() == '+')) s += src_[pos_++];
    while (std::isdigit(static_cast<unsigned char>(peek()))) s += src_[pos_++];
    if (s.empty() || s == "-" || s == "+") throw ParseError("expected an integer", start);
    return std::stol(s);
  }

  Rational rational() {
    const std::size_t start = pos_;
    std::string s;
    while (std::isdigit(static_cast<unsigned char>(peek()))) s += src_[pos_++];
    if (peek() == '/') {
      ++pos_;
      s += '/';
      if (!std::isdigit(static_cast<unsigned char>(peek()))) throw ParseError("expected a denominator", pos_);
      while (std::isdigit(static_cast<unsigned char>(peek()))) s += src_[pos_++];
    }
    try {
      return parse_rational(s);
    } catch (const ParseError& e) {
      throw ParseError(e.what(), start);
    }
  }

  std::string_view src_;
  Spelling spelling_;
  std::size_t pos_ = 0;
};

void render_mode(std::ostream& os, const Mode& m, Spelling spelling) {
  os << name(m.gen);
  if (spelling == Spelling::modes) os << '(' << m.n << ')';
}

}  // namespace

Element parse_expression(std::string_view src, Spelling spelling) { return Parser(src, spelling).parse(); }

std::string render(const Monomial& m, Spelling spelling) {
  std::ostringstream os;
  for (std::size_t i = 0; i < m.size();) {
    std::size_t j = i;
    while (j < m.size() && m[j] == m[i]) ++j;
    if (i > 0) os << '*';
    render_mode(os, m[i], spelling);
    if (j - i > 1) os << '^' << (j - i);
    i = j;
  }
  return os.str();
}

std::string render(const Element& e, Spelling spelling) {
  if (e.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : e.terms()) {
    const bool negative = sgn(c) < 0;
    const Rational mag = abs(c);
    if (first)
      os << (negative ? "-" : "");
    else
      os << (negative ? " - " : " + ");
    first = false;
    if (m.empty()) {
      os << to_string(mag);
      continue;
    }
    if (mag != 1) os << to_string(mag) << '*';
    os << render(m, spelling);
  }
  return os.str();
}

}  // namespace sl21
