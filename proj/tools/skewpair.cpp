#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "skewpair/commands.hpp"

namespace {

// Sends a command's document to -o FILE or stdout.
template <class Run>
int emit(const std::string& output, Run&& run) {
  std::ostringstream buf;
  const int code = run(buf);
  if (output.empty()) {
    std::cout << buf.str();
  } else {
    std::ofstream f(output, std::ios::binary);
    if (!f) {
      std::cerr << "error: cannot write " << output << "\n";
      return skewpair::cli::kUsage;
    }
    f << buf.str();
  }
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace skewpair::cli;

  CLI::App app{"Congruence canonical forms of skew-symmetric matrix pairs"};
  app.require_subcommand(1);
  std::string output;

  CanonicalizeOptions canon;
  auto* c = app.add_subcommand("canonicalize", "Canonical form with optional witness");
  c->add_option("input", canon.input, "Instance JSON")->required();
  c->add_flag("--witness", canon.witness, "Include the congruence witness");
  c->add_flag("--verify", canon.verify, "Re-multiply the witness");
  c->add_flag("--oracle", canon.oracle, "Cross-check against pencil invariants");
  c->add_option("-o,--output", output, "Write the result here instead of stdout");

  std::string reg_input;
  bool reg_witness = false;
  auto* r = app.add_subcommand("regularize", "Split off the singular summands");
  r->add_option("input", reg_input, "Instance JSON")->required();
  r->add_flag("--witness", reg_witness, "Include the congruence witness");
  r->add_option("-o,--output", output, "Write the result here instead of stdout");

  std::string inv_input;
  auto* i = app.add_subcommand("invariants", "Kronecker invariants of the pencil xA - B");
  i->add_option("input", inv_input, "Instance JSON")->required();
  i->add_option("-o,--output", output, "Write the result here instead of stdout");

  std::string ver_input, ver_claimed;
  auto* v = app.add_subcommand("verify", "Check a result file against an instance");
  v->add_option("input", ver_input, "Instance JSON")->required();
  v->add_option("result", ver_claimed, "Result JSON")->required();

  GenerateOptions gen;
  std::string congruence = "random";
  std::string answer;
  auto* g = app.add_subcommand("generate", "Scrambled instance with a known canonical form");
  g->add_option("--blocks", gen.blocks, "Block spec, e.g. J:2:3,K:1,L:2")->required();
  g->add_option("--field", gen.field, "Q or GF(p)")->capture_default_str();
  g->add_option("--seed", gen.seed, "PRNG seed")->required();
  g->add_option("--congruence", congruence, "random or identity")
      ->check(CLI::IsMember({"random", "identity"}))
      ->capture_default_str();
  g->add_option("--answer", answer, "Write ground-truth blocks and scrambling matrix here");
  g->add_option("-o,--output", output, "Write the instance here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // --help is reported as a ParseError with a zero code
    return app.exit(e) == 0 ? kOk : kUsage;
  }

  if (c->parsed()) return emit(output, [&](std::ostream& o) { return cmd_canonicalize(canon, o, std::cerr); });
  if (r->parsed()) return emit(output, [&](std::ostream& o) { return cmd_regularize(reg_input, reg_witness, o, std::cerr); });
  if (i->parsed()) return emit(output, [&](std::ostream& o) { return cmd_invariants(inv_input, o, std::cerr); });
  if (v->parsed()) return cmd_verify(ver_input, ver_claimed, std::cout, std::cerr);
  gen.random_congruence = congruence == "random";
  if (!answer.empty()) gen.answer_path = answer;
  return emit(output, [&](std::ostream& o) { return cmd_generate(gen, o, std::cerr); });
}
