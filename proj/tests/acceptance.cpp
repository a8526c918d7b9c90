// Prints one PASS/FAIL line per acceptance criterion; exit status is nonzero if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "skewpair/canon.hpp"
#include "skewpair/generate.hpp"
#include "skewpair/kronecker.hpp"
#include "skewpair/regcore.hpp"

using namespace skewpair;
using oracle::skew;
using B = CanonicalBlock;
using Clock = std::chrono::steady_clock;

namespace {

const FieldSpec Q;

struct Tally {
  std::size_t ok = 0;
  std::size_t total = 0;
  void add(bool pass) {
    ++total;
    ok += pass;
  }
  bool all() const { return ok == total; }
  std::string str() const { return std::to_string(ok) + "/" + std::to_string(total); }
};

int failures = 0;

void report(int id, bool pass, const std::string& detail) {
  std::cout << "criterion " << id << ": " << (pass ? "PASS" : "FAIL") << "  " << detail << std::endl;
  failures += !pass;
}

bool witness_ok(const MatrixPair& p, const CanonicalForm& form) {
  return form.witness && is_nonsingular(form.witness->s) &&
         congruence_unchecked(p, form.witness->s) == realize_sum(form.blocks, p.field());
}

// Canonical sum of total size <= budget with block orders n <= 4.
std::vector<B> random_blocks(FieldSpec f, std::mt19937_64& rng, std::size_t budget) {
  std::vector<B> out;
  std::size_t total = 0;
  for (int attempts = 0; attempts < 8; ++attempts) {
    const std::size_t n = 1 + rng() % 4;
    const auto kind = rng() % 3;
    B b = kind == 0   ? B::L(n)
          : kind == 1 ? B::K(n)
                      : B::J(n, f.from_int(static_cast<long long>(rng() % 7) - 3));
    if (total + b.size() > budget) continue;
    total += b.size();
    out.push_back(b);
  }
  if (out.empty()) out.push_back(B::L(1));
  return out;
}

struct Instance {
  MatrixPair pair;
  std::vector<B> blocks;  // sorted ground truth
};

// Shared state between criteria 2 through 5.
std::vector<Instance> instances;
Tally witnesses;

void criterion1() {
  struct Example {
    const char* name;
    MatrixPair pair;
    std::vector<B> expected;
  };
  std::vector<Example> examples{
      {"4x4 pair", {skew(Q, 4, {{0, 1, 1}}), skew(Q, 4, {{0, 3, 1}, {1, 2, 1}})}, {B::K(2)}},
      {"6x6 pair", {skew(Q, 6, {{0, 2, 1}, {1, 3, 1}}), skew(Q, 6, {{0, 5, 1}, {1, 4, 1}, {2, 3, 1}})}, {B::K(3)}},
      {"3x3 pair", {skew(Q, 3, {{0, 1, 1}}), skew(Q, 3, {{0, 2, 1}})}, {B::L(2)}},
  };
  bool pass = true;
  std::ostringstream detail;
  for (const auto& ex : examples) {
    CanonicalForm f = canonicalize(ex.pair);
    const bool w = witness_ok(ex.pair, f);
    witnesses.add(w);
    const bool ok = f.blocks == ex.expected && w;
    pass = pass && ok;
    detail << ex.name << " -> ";
    for (const auto& b : f.blocks) detail << b.to_string() << " ";
    detail << (w ? "(witness ok) " : "(witness FAILED) ");
  }
  report(1, pass, detail.str());
}

void criterion2() {
  const std::vector<FieldSpec> fields{Q, FieldSpec::prime(3), FieldSpec::prime(7), FieldSpec::prime(97)};
  bool pass = true;
  std::ostringstream detail;
  std::uint64_t seed = 1000;
  for (FieldSpec f : fields) {
    std::mt19937_64 rng(seed);
    Tally t;
    const auto start = Clock::now();
    for (int it = 0; it < 100; ++it) {
      GeneratedInstance g = generate_instance(random_blocks(f, rng, 14), f, seed + static_cast<std::uint64_t>(it));
      CanonicalForm form = canonicalize(g.pair);
      t.add(form.blocks == g.blocks);
      witnesses.add(witness_ok(g.pair, form));
      instances.push_back({g.pair, g.blocks});
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    pass = pass && t.all() && secs < 60.0;
    char buf[96];
    std::snprintf(buf, sizeof buf, "%s %s in %.2fs; ", f.name().c_str(), t.str().c_str(), secs);
    detail << buf;
    seed += 1000;
  }
  report(2, pass, detail.str());
}

void criterion3() {
  report(3, witnesses.all() && witnesses.total > 0, "exact witnesses " + witnesses.str());
}

void criterion4() {
  Tally conc, skewck;
  for (const auto& inst : instances) {
    PencilInvariants inv = pencil_invariants(inst.pair);
    conc.add(inv == expected_invariants(inst.blocks, inst.pair.field()));
    skewck.add(skew_symmetry_checks(inv));
  }
  report(4, conc.all() && skewck.all() && conc.total == 400,
         "concordant " + conc.str() + ", skew checks " + skewck.str());
}

void criterion5() {
  Tally t;
  std::size_t l_in_second_pass = 0;
  for (const auto& inst : instances) {
    RegularizationResult r = regularize(inst.pair);
    for (auto k : r.second_pass_kinds) l_in_second_pass += k == B::Kind::L;
    t.add(is_nonsingular(r.regular.a()) && is_nonsingular(r.regular.b()));
  }
  report(5, t.all() && l_in_second_pass == 0,
         "nonsingular regular parts " + t.str() + ", L blocks in second pass: " + std::to_string(l_in_second_pass));
}

void criterion6() {
  const std::vector<FieldSpec> fields{Q, FieldSpec::prime(3), FieldSpec::prime(7), FieldSpec::prime(97)};
  std::mt19937_64 rng(6006);
  Tally t;
  for (int it = 0; it < 50; ++it) {
    FieldSpec f = fields[static_cast<std::size_t>(it) % fields.size()];
    std::vector<B> blocks = random_blocks(f, rng, 12);
    auto x = canonicalize(generate_instance(blocks, f, rng()).pair);
    auto y = canonicalize(generate_instance(blocks, f, rng()).pair);
    t.add(x.blocks == y.blocks);
  }
  report(6, t.all(), "identical sorted multisets " + t.str());
}

void criterion7() {
  const std::vector<FieldSpec> fields{Q, FieldSpec::prime(3), FieldSpec::prime(7), FieldSpec::prime(97)};
  std::mt19937_64 rng(7007);
  Tally t;
  for (FieldSpec f : fields) {
    for (int it = 0; it < 50; ++it) {
      const std::size_t n = 2 * (1 + rng() % 3);
      Matrix b(f, n, n);
      do {
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = i + 1; j < n; ++j) {
            b(i, j) = random_small_scalar(f, rng);
            b(j, i) = -b(i, j);
          }
      } while (oracle::leibniz_det(b).is_zero());
      Matrix e(f, n, n);
      for (std::size_t i = 0; i < n / 2; ++i) {
        e(i, n / 2 + i) = f.one();
        e(n / 2 + i, i) = -f.one();
      }
      MatrixPair p = congruence_unchecked(MatrixPair(e, b), random_congruence(f, n, rng));
      std::vector<Polynomial> d = smith_form(PolyMatrix::characteristic(inverse(p.a()) * p.b()));
      bool paired = d.size() == n;
      for (std::size_t i = 0; paired && i + 1 < d.size(); i += 2) paired = d[i] == d[i + 1];
      t.add(paired);
    }
  }
  report(7, t.all(), "paired invariant factors " + t.str());
}

void criterion8() {
  Tally t;
  for (FieldSpec f : {Q, FieldSpec::prime(7)}) {
    std::vector<B> singles, small;
    for (std::size_t n = 1; n <= 5; ++n) {
      std::vector<B> row{B::L(n), B::K(n)};
      for (long long lambda : {0, 1, -1, 3}) row.push_back(B::J(n, f.from_int(lambda)));
      for (const auto& b : row) {
        singles.push_back(b);
        if (n <= 3) small.push_back(b);
      }
    }
    for (const auto& b : singles) t.add(canonicalize(realize(b, f)).blocks == std::vector<B>{b});
    for (std::size_t i = 0; i < small.size(); ++i) {
      for (std::size_t j = i; j < small.size(); ++j) {
        std::vector<B> pair{small[i], small[j]};
        std::vector<B> sorted;
        for (std::size_t k : canonical_block_order(pair)) sorted.push_back(pair[k]);
        t.add(canonicalize(realize_sum(pair, f)).blocks == sorted);
      }
    }
  }
  report(8, t.all(), "fixed points " + t.str());
}

MatrixPair companion_pair(FieldSpec f) {
  Matrix c = companion_matrix(Polynomial::from_ints(f, {1, 0, 1}));
  Matrix a(f, 4, 4), b(f, 4, 4);
  for (std::size_t i = 0; i < 2; ++i) {
    a(i, 2 + i) = f.one();
    a(2 + i, i) = -f.one();
    for (std::size_t j = 0; j < 2; ++j) {
      b(i, 2 + j) = c(i, j);
      b(2 + j, i) = -c(i, j);
    }
  }
  return {a, b};
}

void criterion9() {
  CanonicalForm q = canonicalize(companion_pair(Q));
  const bool q_ok = q.blocks.size() == 1 && q.blocks[0].poly == Polynomial::from_ints(Q, {1, 0, 1}) &&
                    !q.witness_complete;
  FieldSpec f5 = FieldSpec::prime(5);
  MatrixPair p5 = companion_pair(f5);
  CanonicalForm g = canonicalize(p5);
  const bool g_ok = g.blocks == std::vector<B>{B::J(1, f5.from_int(2)), B::J(1, f5.from_int(3))} && witness_ok(p5, g);
  std::ostringstream detail;
  detail << "Q -> ";
  for (const auto& b : q.blocks) detail << b.to_string() << " ";
  detail << "(witness_complete=" << (q.witness_complete ? "true" : "false") << "); GF(5) -> ";
  for (const auto& b : g.blocks) detail << b.to_string() << " ";
  detail << (witness_ok(p5, g) ? "(witness ok)" : "(witness FAILED)");
  report(9, q_ok && g_ok, detail.str());
}

void guarded(int id, const std::function<void()>& body) {
  try {
    body();
  } catch (const std::exception& e) {
    report(id, false, std::string("exception: ") + e.what());
  }
}

}  // namespace

int main() {
  guarded(1, criterion1);
  guarded(2, criterion2);
  guarded(3, criterion3);
  guarded(4, criterion4);
  guarded(5, criterion5);
  guarded(6, criterion6);
  guarded(7, criterion7);
  guarded(8, criterion8);
  guarded(9, criterion9);
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}
