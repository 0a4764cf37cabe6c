#include "app.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <ostream>

#include "commands.hpp"

namespace sl21::cli {

int run_app(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computer algebra for affine sl(2|1)", "sl21"};
  app.require_subcommand(1);
  app.fallthrough();

  Command cmd;
  bool as_json = false;
  std::string out_path;
  app.add_flag("--json", as_json, "Print the JSON report instead of text");
  app.add_option("--out", out_path, "Write the saved state (or the JSON report) to PATH");
  app.add_option("--threads", cmd.threads, "Worker threads for matrix assembly")->check(CLI::Range(1u, 256u));

  auto select = [&cmd](CommandKind k) { return [&cmd, k]() { cmd.kind = k; }; };

  app.add_subcommand("algebra-check", "Skew symmetry, super Jacobi and form invariance on the basis")
      ->callback(select(CommandKind::algebra_check));

  auto* singular = app.add_subcommand("singular", "Singular vectors in the vacuum module");
  singular->require_subcommand(1);
  auto* find = singular->add_subcommand("find", "Nullspace of the raising operators on a weight space");
  find->add_option("--level", cmd.level, "Level k as P/Q")->required();
  find->add_option("--degree", cmd.degree, "Degree of the weight space");
  find->add_option("--w1", cmd.w1, "h1 eigenvalue");
  find->add_option("--w2", cmd.w2, "h2 eigenvalue");
  find->callback(select(CommandKind::singular_find));
  auto* verify = singular->add_subcommand("verify", "Check a saved state against the raising operators");
  verify->add_option("--in", cmd.in, "State JSON file")->required();
  verify->add_option("--level", cmd.level, "Level k as P/Q")->required();
  verify->callback(select(CommandKind::singular_verify));

  auto* zhu = app.add_subcommand("zhu", "Zhu algebra map and classification polynomials");
  zhu->require_subcommand(1);
  auto* image = zhu->add_subcommand("image", "F(v) in U(g)");
  image->add_option("--level", cmd.level, "Level k as P/Q")->required();
  image->add_option("--in", cmd.in, "State JSON file (defaults to the singular vector)");
  image->callback(select(CommandKind::zhu_image));
  auto* p0 = zhu->add_subcommand("p0", "Span of the reduced adjoint images");
  p0->add_option("--level", cmd.level, "Level k as P/Q")->required();
  p0->callback(select(CommandKind::zhu_p0));
  auto* xi = zhu->add_subcommand("xi-weight", "Regraded weight of a monomial");
  xi->add_option("--xi", cmd.xi, "xi in (0, 1) as A/B")->required();
  xi->add_option("--expr", cmd.expr, "Monomial such as e12(-1)")->required();
  xi->callback(select(CommandKind::xi_weight));

  auto* ideal = app.add_subcommand("ideal", "Ideals in Q[t1, t2]");
  ideal->require_subcommand(1);
  auto* gb = ideal->add_subcommand("groebner", "Reduced Groebner basis");
  gb->add_option("--gens", cmd.gens, "File with one polynomial per line")->required();
  gb->add_option("--order", cmd.order, "degrevlex or lex");
  gb->callback(select(CommandKind::ideal_groebner));
  auto* dim = ideal->add_subcommand("dim", "Dimension of the quotient ring");
  dim->add_option("--gens", cmd.gens, "File with one polynomial per line")->required();
  dim->add_option("--order", cmd.order, "degrevlex or lex");
  dim->callback(select(CommandKind::ideal_dim));

  app.add_subcommand("classify", "Solve the P0 polynomials and compare with the admissible weights")
      ->callback(select(CommandKind::classify))
      ->add_option("--level", cmd.level, "Level k as P/Q")
      ->required();
  app.add_subcommand("admissible", "Admissible highest weights at a level")
      ->callback(select(CommandKind::admissible))
      ->add_option("--level", cmd.level, "Level k as P/Q")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    // Subcommand help requests surface as CallForHelp too; everything else is usage.
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return 2;
  }

  const Report rep = run(cmd);
  const json doc = {{"status", to_string(rep.status)}, {"result", rep.payload}};
  if (as_json) {
    out << doc.dump(2) << "\n";
  } else if (rep.status == Report::Status::error) {
    err << "error: " << rep.text;
  } else {
    out << rep.text;
  }
  if (!out_path.empty() && rep.status != Report::Status::error) {
    std::ofstream f(out_path);
    if (!f) {
      err << "error: cannot write '" << out_path << "'\n";
      return 2;
    }
    f << (rep.state ? *rep.state : doc).dump(2) << "\n";
  }
  return rep.exit_code();
}

}  // namespace sl21::cli
