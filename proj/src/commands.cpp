#include "skewpair/commands.hpp"

#include <ostream>

#include "skewpair/canon.hpp"
#include "skewpair/generate.hpp"
#include "skewpair/io.hpp"
#include "skewpair/kronecker.hpp"
#include "skewpair/regcore.hpp"

namespace skewpair::cli {

using io::json;

namespace {

MatrixPair load_instance(const std::string& path) { return io::parse_instance(io::read_json_file(path)); }

bool witness_reaches(const MatrixPair& input, const Matrix& s, const MatrixPair& target) {
  if (s.rows() != input.size() || s.cols() != input.size() || target.size() != input.size()) return false;
  if (rank(s) != s.rows()) return false;
  return congruence_unchecked(input, s) == target;
}

bool all_fully_decomposed(const std::vector<CanonicalBlock>& blocks) {
  for (const auto& b : blocks) {
    if (b.poly && !b.fully_decomposed) return false;
  }
  return true;
}

// Shared error mapping: malformed input is exit 2, anything else a usage/runtime failure.
template <class F>
int guarded(std::ostream& err, F&& body) {
  try {
    return body();
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kParse;
  } catch (const FieldError& e) {
    err << "error: " << e.what() << "\n";
    return kParse;
  } catch (const json::exception& e) {
    err << "error: malformed JSON: " << e.what() << "\n";
    return kParse;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace

int cmd_canonicalize(const CanonicalizeOptions& opt, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    MatrixPair p = load_instance(opt.input);
    CanonicalForm form = canonicalize(p);
    json result = {{"field", p.field().name()},
                   {"blocks", io::blocks_to_json(form.blocks)},
                   {"witness_complete", form.witness_complete},
                   {"verified", false}};
    if (opt.witness && form.witness) result["witness"] = io::matrix_to_json(form.witness->s);

    int code = kOk;
    if (opt.verify && form.witness) {
      const bool ok = witness_reaches(p, form.witness->s, realize_sum(form.blocks, p.field()));
      result["verified"] = ok;
      if (!ok) {
        err << "error: witness does not reproduce the canonical form\n";
        code = kWitness;
      }
    }
    if (opt.oracle) {
      PencilInvariants observed = pencil_invariants(p);
      PencilInvariants expected = expected_invariants(form.blocks, p.field());
      const bool ok = concordant(observed, expected, all_fully_decomposed(form.blocks)) &&
                      skew_symmetry_checks(observed);
      result["invariants"] = io::invariants_to_json(observed);
      result["oracle_concordant"] = ok;
      if (!ok && code == kOk) {
        err << "error: pencil invariants disagree with the canonical form\n";
        code = kOracle;
      }
    }
    out << io::dump(result);
    return code;
  });
}

int cmd_regularize(const std::string& input, bool witness, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    MatrixPair p = load_instance(input);
    RegularizationResult r = regularize(p);
    const std::vector<MatrixPair> parts{r.regular, realize_sum(r.singular_summands, p.field())};
    MatrixPair target = direct_sum(parts, p.field());
    const bool ok = witness_reaches(p, r.witness.s, target);
    json result = {{"field", p.field().name()},
                   {"blocks", io::blocks_to_json(r.singular_summands)},
                   {"regular_part", {{"a", io::matrix_to_json(r.regular.a())}, {"b", io::matrix_to_json(r.regular.b())}}},
                   {"witness_complete", true},
                   {"verified", ok}};
    if (witness) result["witness"] = io::matrix_to_json(r.witness.s);
    out << io::dump(result);
    if (!ok) {
      err << "error: regularization witness does not verify\n";
      return static_cast<int>(kWitness);
    }
    return static_cast<int>(kOk);
  });
}

int cmd_invariants(const std::string& input, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    MatrixPair p = load_instance(input);
    PencilInvariants inv = pencil_invariants(p);
    json result = {{"field", p.field().name()},
                   {"invariants", io::invariants_to_json(inv)},
                   {"skew_symmetry_checks", skew_symmetry_checks(inv)},
                   {"dimension_accounting", dimension_accounting_holds(inv, p.size())}};
    out << io::dump(result);
    return static_cast<int>(kOk);
  });
}

int cmd_verify(const std::string& input, const std::string& claimed_path, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    MatrixPair p = load_instance(input);
    json claimed = io::read_json_file(claimed_path);
    if (!claimed.is_object() || !claimed.contains("blocks")) throw ParseError("result file needs \"blocks\"");
    std::vector<CanonicalBlock> blocks = io::parse_blocks(claimed["blocks"], p.field());
    MatrixPair target = realize_sum(blocks, p.field());
    if (claimed.contains("regular_part")) {
      const json& reg = claimed["regular_part"];
      MatrixPair regular(io::parse_matrix(reg.at("a"), p.field()), io::parse_matrix(reg.at("b"), p.field()));
      const std::vector<MatrixPair> parts{regular, target};
      target = direct_sum(parts, p.field());
    }

    if (claimed.contains("witness")) {
      Matrix s = io::parse_matrix(claimed["witness"], p.field());
      const bool ok = witness_reaches(p, s, target);
      out << io::dump({{"method", "witness"}, {"verified", ok}});
      if (!ok) err << "error: S (A, B) S^T does not equal the claimed direct sum\n";
      return static_cast<int>(ok ? kOk : kWitness);
    }
    // Without a witness only the invariants can be checked.
    if (claimed.contains("regular_part")) throw ParseError("regularization result without a witness cannot be verified");
    const bool ok = concordant(pencil_invariants(p), expected_invariants(blocks, p.field()), all_fully_decomposed(blocks));
    out << io::dump({{"method", "oracle"}, {"verified", ok}});
    if (!ok) err << "error: pencil invariants disagree with the claimed blocks\n";
    return static_cast<int>(ok ? kOk : kOracle);
  });
}

int cmd_generate(const GenerateOptions& opt, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    FieldSpec field = FieldSpec::parse(opt.field);
    std::vector<CanonicalBlock> blocks = parse_block_spec(opt.blocks, field);
    GeneratedInstance g = generate_instance(blocks, field, opt.seed, opt.random_congruence);
    out << io::dump(io::instance_to_json(g.pair));
    if (opt.answer_path) {
      json answer = {{"field", field.name()},
                     {"blocks", io::blocks_to_json(g.blocks)},
                     {"spec", opt.blocks},
                     {"seed", opt.seed},
                     {"scramble", io::matrix_to_json(g.scramble)}};
      io::write_text_file(*opt.answer_path, io::dump(answer));
    }
    return static_cast<int>(kOk);
  });
}

}  // namespace skewpair::cli
