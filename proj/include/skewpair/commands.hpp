#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace skewpair::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kParse = 2, kWitness = 3, kOracle = 4 };

struct CanonicalizeOptions {
  std::string input;
  bool witness = false;
  bool verify = false;
  bool oracle = false;
};

struct GenerateOptions {
  std::string blocks;
  std::string field = "Q";
  std::uint64_t seed = 0;
  bool random_congruence = true;
  std::optional<std::string> answer_path;
};

// Each command writes its JSON document to `out` and diagnostics to `err`,
// and returns an ExitCode.
int cmd_canonicalize(const CanonicalizeOptions& opt, std::ostream& out, std::ostream& err);
int cmd_regularize(const std::string& input, bool witness, std::ostream& out, std::ostream& err);
int cmd_invariants(const std::string& input, std::ostream& out, std::ostream& err);
int cmd_verify(const std::string& input, const std::string& claimed, std::ostream& out, std::ostream& err);
int cmd_generate(const GenerateOptions& opt, std::ostream& out, std::ostream& err);

}  // namespace skewpair::cli
