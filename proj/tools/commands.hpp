#pragma once

#include <optional>
#include <string>

#include "state_json.hpp"

namespace sl21::cli {

enum class CommandKind {
  algebra_check,
  singular_find,
  singular_verify,
  zhu_image,
  zhu_p0,
  xi_weight,
  ideal_groebner,
  ideal_dim,
  classify,
  admissible,
};

/// Parsed flags. Numbers stay textual so that malformed input becomes a reported
/// usage error instead of a parser crash.
struct Command {
  CommandKind kind = CommandKind::algebra_check;
  std::string level;
  std::optional<int> degree;
  std::string w1;
  std::string w2;
  std::string in;
  std::string xi;
  std::string expr;
  std::string gens;
  std::string order = "degrevlex";
  unsigned threads = 1;
};

struct Report {
  enum class Status { ok, empty, unsupported, error };

  Status status = Status::ok;
  json payload;
  std::string text;
  /// Saved-state document written by --out, when the command produces one.
  std::optional<json> state;

  int exit_code() const;
};

std::string to_string(Report::Status s);
using sl21::to_string;

/// Never throws: failures come back as Status::error with a message in text.
Report run(const Command& cmd);

}  // namespace sl21::cli
