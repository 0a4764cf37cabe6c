#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "app.hpp"
#include "commands.hpp"
#include "sl21/expression.hpp"
#include "sl21/polyring.hpp"
#include "support.hpp"

using namespace sl21;
using namespace sl21::cli;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "sl21");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_app(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("sl21_cli_test_" + name);
}

void write(const std::filesystem::path& p, const std::string& s) { std::ofstream(p) << s; }

}  // namespace

TEST_CASE("algebra-check") {
  const auto r = invoke({"algebra-check", "--json"});
  CHECK(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["status"] == "ok");
  CHECK(j["result"]["jacobi"]["passed"] == 512);
}

TEST_CASE("singular find at -1/2 and verify round-trip") {
  const auto path = temp_file("v1.json");
  const auto r = invoke({"singular", "find", "--level", "-1/2", "--json", "--out", path.string()});
  CHECK(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["result"]["dimension"] == 1);
  const Element v = element_from_json(j["result"]["basis"][0]);
  Element v1 = parse_expression("2*e1(-1)*e2(-1)+2*h1(-1)*e12(-1)-2*h2(-1)*e12(-1)-e12(-2)");
  v1 *= -1;  // the stored normalization has e12(-2) coefficient 1
  CHECK(v == v1);

  CHECK(invoke({"singular", "verify", "--in", path.string(), "--level", "-1/2"}).code == 0);
  const auto mismatch = invoke({"singular", "verify", "--in", path.string(), "--level", "1/2"});
  CHECK(mismatch.code == 2);
  CHECK(mismatch.err.find("level") != std::string::npos);
  std::filesystem::remove(path);
}

TEST_CASE("saved states carry schema and level") {
  const SavedState s{Level{testing::q(1, 2)}, parse_expression("e12(-1)^2 - 3/4 f1(-2) e1(-1)")};
  const json j = state_to_json(s);
  CHECK(j["schema"] == 1);
  CHECK(j["level"] == "1/2");
  const SavedState back = state_from_json(j);
  CHECK(back.level == s.level);
  CHECK(back.state == s.state);
  json bad = j;
  bad["schema"] = 2;
  CHECK_THROWS(state_from_json(bad));
}

TEST_CASE("singular find at an empty weight exits 1") {
  const auto r = invoke({"singular", "find", "--level", "-1/2", "--degree", "1", "--w1", "1", "--w2", "1"});
  CHECK(r.code == 1);
  CHECK(r.out.find("singular space dimension 0") != std::string::npos);
}

TEST_CASE("classify at -1/2 matches the admissible weights") {
  const auto r = invoke({"classify", "--level", "-1/2", "--json"});
  CHECK(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["result"]["match"] == true);
  CHECK(j["result"]["points"].size() == 4);
}

TEST_CASE("classify at 1/2 is unsupported by the linear solver") {
  const auto r = invoke({"classify", "--level", "1/2"});
  CHECK(r.code == 1);
  CHECK(r.out.find("unsupported") != std::string::npos);
}

TEST_CASE("ideal dim on the level 1/2 polynomials is infinite") {
  const auto path = temp_file("primes.txt");
  write(path, render(parse_bipoly(testing::data_file("p1_prime.txt"))) + "\n" +
                  render(parse_bipoly(testing::data_file("p2_prime.txt"))) + "\n");
  const auto r = invoke({"ideal", "dim", "--gens", path.string(), "--json"});
  CHECK(r.code == 0);
  CHECK(json::parse(r.out)["result"]["dimension"] == "infinite");
  std::filesystem::remove(path);
}

TEST_CASE("ideal groebner and dim on q1, q2") {
  const auto path = temp_file("q.txt");
  write(path, "t1(t1-2t2)\n\nt2(t2-2t1)\n");
  CHECK(invoke({"ideal", "dim", "--gens", path.string()}).out == "dim = 4\n");
  const auto lex = invoke({"ideal", "groebner", "--gens", path.string(), "--order", "lex"});
  CHECK(lex.code == 0);
  CHECK(invoke({"ideal", "groebner", "--gens", path.string(), "--order", "grlex"}).code == 2);
  std::filesystem::remove(path);
}

TEST_CASE("zhu commands") {
  const auto image = invoke({"zhu", "image", "--level", "-1/2"});
  CHECK(image.code == 0);
  CHECK(image.out.find("-2*e1*e2 - 2*h1*e12 + 2*h2*e12 + e12") != std::string::npos);

  const auto p0 = invoke({"zhu", "p0", "--level", "-1/2", "--json"});
  CHECK(json::parse(p0.out)["result"]["polynomials"].size() == 2);

  const auto xi = invoke({"zhu", "xi-weight", "--xi", "1/3", "--expr", "e12(-1)", "--json"});
  CHECK(json::parse(xi.out)["result"]["weight"] == "2/3");
  CHECK(invoke({"zhu", "xi-weight", "--xi", "1", "--expr", "e12(-1)"}).code == 2);
  CHECK(invoke({"zhu", "xi-weight", "--xi", "1/2", "--expr", "e12(-1) + e1(-1)"}).code == 2);
}

TEST_CASE("admissible") {
  const auto r = invoke({"admissible", "--level", "1/2", "--json"});
  const json j = json::parse(r.out);
  CHECK(j["result"]["m"] == 2);
  CHECK(j["result"]["M"] == 2);
  CHECK(j["result"]["weights"].size() == 4);
  CHECK(invoke({"admissible", "--level", "-3"}).code == 2);
}

TEST_CASE("usage errors exit 2 with a diagnostic on stderr") {
  const auto bad_level = invoke({"singular", "find", "--level", "1/x"});
  CHECK(bad_level.code == 2);
  CHECK(bad_level.out.empty());
  CHECK(bad_level.err.find("--level") != std::string::npos);
  CHECK(invoke({"singular", "find"}).code == 2);
  CHECK(invoke({"nonsense"}).code == 2);
  CHECK(invoke({"singular", "verify", "--in", "/nonexistent.json", "--level", "0"}).code == 2);
}

TEST_CASE("identical invocations produce identical JSON") {
  const auto a = invoke({"singular", "find", "--level", "1/2", "--json"});
  const auto b = invoke({"singular", "find", "--level", "1/2", "--json", "--threads", "3"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("rendered command output parses back") {
  const auto r = invoke({"singular", "find", "--level", "1/2", "--json"});
  const Element v = element_from_json(json::parse(r.out)["result"]["basis"][0]);
  CHECK(parse_expression(render(v)) == v);
}

TEST_CASE("run never throws") {
  Command cmd;
  cmd.kind = CommandKind::ideal_dim;
  cmd.gens = "/nonexistent";
  const Report r = run(cmd);
  CHECK(r.status == Report::Status::error);
  CHECK(r.exit_code() == 2);
}
