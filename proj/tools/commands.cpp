#include "commands.hpp"

#include <fstream>
#include <sstream>

#include "sl21/expression.hpp"
#include "sl21/lie_superalgebra.hpp"
#include "sl21/polyring.hpp"
#include "sl21/singular.hpp"
#include "sl21/zhu.hpp"

namespace sl21::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Rational rational_flag(const std::string& flag, const std::string& value) {
  if (value.empty()) throw UsageError("missing required flag --" + flag);
  try {
    return parse_rational(value);
  } catch (const ParseError& e) {
    throw UsageError("--" + flag + ": " + e.what());
  }
}

Level level_flag(const Command& cmd) { return Level{rational_flag("level", cmd.level)}; }

std::string slurp(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw UsageError("cannot open '" + path + "'");
  std::stringstream s;
  s << f.rdbuf();
  return s.str();
}

std::vector<BiPoly> read_generators(const std::string& path) {
  if (path.empty()) throw UsageError("missing required flag --gens");
  std::istringstream in(slurp(path));
  std::vector<BiPoly> gens;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      gens.push_back(parse_bipoly(line));
    } catch (const ParseError& e) {
      throw UsageError(path + ":" + std::to_string(lineno) + ": " + e.what());
    }
  }
  return gens;
}

MonomialOrder order_flag(const std::string& s) {
  if (s == "degrevlex") return MonomialOrder::degrevlex;
  if (s == "lex") return MonomialOrder::lex;
  throw UsageError("--order must be degrevlex or lex, got '" + s + "'");
}

json polys_to_json(const std::vector<BiPoly>& ps) {
  json out = json::array();
  for (const auto& p : ps) out.push_back(render(p));
  return out;
}

json points_to_json(const std::vector<Point>& ps) {
  json out = json::array();
  for (const auto& [a, b] : ps) out.push_back({to_string(a), to_string(b)});
  return out;
}

std::string points_text(const std::vector<Point>& ps) {
  std::string s;
  for (const auto& [a, b] : ps) s += "  (" + to_string(a) + ", " + to_string(b) + ")\n";
  return s;
}

Report algebra_check() {
  const StructureReport r = check_structure();
  Report rep;
  rep.status = r.ok() ? Report::Status::ok : Report::Status::error;
  auto pair = [](int passed, int checked) { return json{{"passed", passed}, {"checked", checked}}; };
  rep.payload = {{"skew_symmetry", pair(r.skew_passed, r.skew_checked)},
                 {"jacobi", pair(r.jacobi_passed, r.jacobi_checked)},
                 {"invariance", pair(r.invariance_passed, r.invariance_checked)},
                 {"gram_determinant", to_string(r.gram_determinant)},
                 {"ok", r.ok()}};
  std::ostringstream os;
  os << "skew symmetry  " << r.skew_passed << "/" << r.skew_checked << "\n"
     << "super Jacobi   " << r.jacobi_passed << "/" << r.jacobi_checked << "\n"
     << "invariance     " << r.invariance_passed << "/" << r.invariance_checked << "\n"
     << "gram det       " << to_string(r.gram_determinant) << "\n";
  rep.text = os.str();
  return rep;
}

Report singular_find(const Command& cmd) {
  const Level level = level_flag(cmd);
  Weight target;
  if (cmd.degree || !cmd.w1.empty() || !cmd.w2.empty()) {
    if (!cmd.degree || cmd.w1.empty() || cmd.w2.empty()) throw UsageError("--degree, --w1 and --w2 must be given together");
    target = {rational_flag("w1", cmd.w1), rational_flag("w2", cmd.w2), *cmd.degree};
    if (target.degree < 0) throw UsageError("--degree must be nonnegative");
  } else {
    try {
      target = singular_target(level);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  const SingularSearch s = find_singular(level, target, cmd.threads);
  Report rep;
  rep.status = s.dimension() == 0 ? Report::Status::empty : Report::Status::ok;
  json basis = json::array();
  std::ostringstream os;
  os << "level " << to_string(level.k) << ", weight " << to_string(s.weight) << "\n"
     << "weight space dimension " << s.weight_basis.size() << "\n"
     << "singular space dimension " << s.dimension() << "\n";
  for (const auto& v : s.basis) {
    basis.push_back(element_to_json(v));
    os << "  " << render(v) << "\n";
  }
  rep.payload = {{"level", to_string(level.k)},
                 {"weight", weight_to_json(s.weight)},
                 {"weight_space_dimension", s.weight_basis.size()},
                 {"dimension", s.dimension()},
                 {"basis", std::move(basis)}};
  rep.text = os.str();
  if (!s.basis.empty()) rep.state = state_to_json({level, s.basis.front()});
  return rep;
}

SavedState load_state(const std::string& path) {
  if (path.empty()) throw UsageError("missing required flag --in");
  try {
    return state_from_json(json::parse(slurp(path)));
  } catch (const json::exception& e) {
    throw UsageError(path + ": " + e.what());
  } catch (const ParseError& e) {
    throw UsageError(path + ": " + e.what());
  }
}

Report singular_verify(const Command& cmd) {
  const Level level = level_flag(cmd);
  const SavedState saved = load_state(cmd.in);
  if (saved.level != level)
    throw UsageError("state was saved at level " + to_string(saved.level.k) + " but --level is " + to_string(level.k));
  VacuumModule module(level);
  const State s = module.reduce(saved.state);
  const bool singular = verify_singular(module, s);
  Report rep;
  rep.payload = {{"level", to_string(level.k)}, {"weight", weight_to_json(*homogeneous_weight(s))}, {"singular", singular}};
  rep.text = std::string(singular ? "singular" : "not singular") + " at weight " + to_string(*homogeneous_weight(s)) + "\n";
  return rep;
}

Report zhu_image(const Command& cmd) {
  const Level level = level_flag(cmd);
  State s;
  if (cmd.in.empty()) {
    const SingularSearch search = find_singular(level, cmd.threads);
    if (search.dimension() == 0) {
      Report rep;
      rep.status = Report::Status::empty;
      rep.payload = {{"level", to_string(level.k)}, {"image", nullptr}};
      rep.text = "no singular vector at level " + to_string(level.k) + "\n";
      return rep;
    }
    s = search.basis.front();
  } else {
    const SavedState saved = load_state(cmd.in);
    if (saved.level != level)
      throw UsageError("state was saved at level " + to_string(saved.level.k) + " but --level is " + to_string(level.k));
    s = saved.state;
  }
  const UgElement image = zhu_F(s);
  Report rep;
  rep.payload = {{"level", to_string(level.k)},
                 {"state", render(s)},
                 {"image", render(image, Spelling::bare)},
                 {"image_terms", element_to_json(image)}};
  rep.text = "F(" + render(s) + ")\n  = " + render(image, Spelling::bare) + "\n";
  return rep;
}

Report zhu_p0(const Command& cmd) {
  const Level level = level_flag(cmd);
  if (!level.admissible()) throw UsageError("level " + to_string(level.k) + " is not admissible");
  const P0Result r = p0_polynomials(level, cmd.threads);
  Report rep;
  rep.payload = {{"level", to_string(level.k)}, {"words", r.words.size()}, {"polynomials", polys_to_json(r.basis)}};
  std::ostringstream os;
  os << "level " << to_string(level.k) << ": " << r.words.size() << " lowering words, span dimension " << r.basis.size() << "\n";
  for (const auto& p : r.basis) os << "  " << render(p) << "\n";
  rep.text = os.str();
  return rep;
}

Report xi_weight_cmd(const Command& cmd) {
  const Rational xv = rational_flag("xi", cmd.xi);
  std::optional<XiParam> xi;
  try {
    xi.emplace(xv);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (cmd.expr.empty()) throw UsageError("missing required flag --expr");
  Element e;
  try {
    e = parse_expression(cmd.expr);
  } catch (const ParseError& err) {
    throw UsageError(std::string("--expr: ") + err.what());
  }
  if (e.size() != 1) throw UsageError("--expr must be a single monomial");
  const Monomial& m = e.terms().begin()->first;
  if (!is_canonical(m) || !is_state(e)) throw UsageError("--expr must be a canonical monomial with all modes n <= -1");
  const Rational w = xi_weight(m, *xi);
  Report rep;
  rep.payload = {{"xi", to_string(xv)}, {"monomial", render(m)}, {"weight", to_string(w)}};
  rep.text = "wt " + render(m) + " = " + to_string(w) + "\n";
  return rep;
}

Report ideal_groebner(const Command& cmd) {
  const MonomialOrder ord = order_flag(cmd.order);
  const auto basis = groebner(read_generators(cmd.gens), ord);
  Report rep;
  rep.payload = {{"order", cmd.order}, {"basis", polys_to_json(basis)}};
  for (const auto& p : basis) rep.text += render(p) + "\n";
  return rep;
}

Report ideal_dim(const Command& cmd) {
  const MonomialOrder ord = order_flag(cmd.order);
  const QuotientDim d = quotient_dim(read_generators(cmd.gens), ord);
  Report rep;
  rep.payload = {{"finite", d.finite}, {"dimension", d.finite ? json(d.count) : json("infinite")}};
  rep.text = "dim = " + to_string(d) + "\n";
  return rep;
}

Report classify(const Command& cmd) {
  const Level level = level_flag(cmd);
  if (!level.admissible()) throw UsageError("level " + to_string(level.k) + " is not admissible");
  const P0Result r = p0_polynomials(level, cmd.threads);
  const auto expected = admissible_weights(level);
  Report rep;
  rep.payload = {{"level", to_string(level.k)}, {"polynomials", polys_to_json(r.basis)}, {"admissible", points_to_json(expected)}};
  std::string poly_text;
  for (const auto& p : r.basis) poly_text += "  " + render(p) + "\n";
  try {
    const auto points = solve_factored(r.basis);
    const bool match = points == expected;
    rep.status = match ? Report::Status::ok : Report::Status::error;
    rep.payload["points"] = points_to_json(points);
    rep.payload["match"] = match;
    rep.text = "P0 generators:\n" + poly_text + "solutions:\n" + points_text(points) + "admissible weights:\n" +
               points_text(expected) + (match ? "match\n" : "MISMATCH\n");
  } catch (const UnsupportedError& e) {
    rep.status = Report::Status::unsupported;
    rep.payload["points"] = nullptr;
    rep.payload["match"] = nullptr;
    rep.payload["reason"] = e.what();
    rep.text = "P0 generators:\n" + poly_text + "solver: unsupported (" + e.what() + ")\nadmissible weights:\n" +
               points_text(expected);
  }
  return rep;
}

Report admissible(const Command& cmd) {
  const Level level = level_flag(cmd);
  const auto adm = level.admissible();
  if (!adm) throw UsageError("level " + to_string(level.k) + " is not admissible: k + 1 = (m+1)/M needs m >= 0, M >= 1");
  const auto weights = admissible_weights(level);
  Report rep;
  rep.payload = {{"level", to_string(level.k)}, {"m", adm->m}, {"M", adm->M}, {"weights", points_to_json(weights)}};
  rep.text = "level " + to_string(level.k) + " (m = " + std::to_string(adm->m) + ", M = " + std::to_string(adm->M) + ")\n" +
             points_text(weights);
  return rep;
}

Report dispatch(const Command& cmd) {
  switch (cmd.kind) {
    case CommandKind::algebra_check: return algebra_check();
    case CommandKind::singular_find: return singular_find(cmd);
    case CommandKind::singular_verify: return singular_verify(cmd);
    case CommandKind::zhu_image: return zhu_image(cmd);
    case CommandKind::zhu_p0: return zhu_p0(cmd);
    case CommandKind::xi_weight: return xi_weight_cmd(cmd);
    case CommandKind::ideal_groebner: return ideal_groebner(cmd);
    case CommandKind::ideal_dim: return ideal_dim(cmd);
    case CommandKind::classify: return classify(cmd);
    case CommandKind::admissible: return admissible(cmd);
  }
  throw std::logic_error("unknown command");
}

Report failure(Report::Status status, const std::string& message) {
  Report rep;
  rep.status = status;
  rep.payload = {{"error", message}};
  rep.text = message + "\n";
  return rep;
}

}  // namespace

int Report::exit_code() const {
  switch (status) {
    case Status::ok: return 0;
    case Status::empty:
    case Status::unsupported: return 1;
    case Status::error: return 2;
  }
  return 2;
}

std::string to_string(Report::Status s) {
  switch (s) {
    case Report::Status::ok: return "ok";
    case Report::Status::empty: return "empty";
    case Report::Status::unsupported: return "unsupported";
    case Report::Status::error: return "error";
  }
  return "error";
}

Report run(const Command& cmd) {
  try {
    return dispatch(cmd);
  } catch (const UnsupportedError& e) {
    return failure(Report::Status::unsupported, e.what());
  } catch (const std::exception& e) {
    return failure(Report::Status::error, e.what());
  }
}

}  // namespace sl21::cli
