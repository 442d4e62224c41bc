// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>

#include <json.hpp>

#include "subinv/cli/cli.hpp"
#include "subinv/closure/closure.hpp"
#include "subinv/errors.hpp"
#include "subinv/freealg/free_poly.hpp"
#include "subinv/matrix/determinant.hpp"
#include "subinv/matrix/inversion.hpp"
#include "subinv/proof/consequences.hpp"
#include "subinv/proof/replay.hpp"
#include "subinv/proof/trace.hpp"
#include "subinv/ring/rings.hpp"

using namespace subinv;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool condition, const std::string& what) {
    if (!condition && pass) {
      pass = false;
      detail = what;
    }
  }
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

RingMatrix random_matrix(const RingHandle& ring, std::size_t n, std::mt19937_64& rng) {
  std::vector<Element> entries;
  for (std::size_t i = 0; i < n * n; ++i) entries.push_back(ring->random(rng));
  return RingMatrix(ring, n, std::move(entries));
}

bool is_identity(const FractionMatrix& m) {
  const Localization& loc = m.ring();
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) {
      if (!frac_eq(m(i, j), i == j ? loc.one() : loc.zero())) return false;
    }
  return true;
}

Outcome replay_small_dimensions() {
  Outcome o;
  std::ostringstream timing;
  auto start = Clock::now();
  for (std::size_t n = 1; n <= 4; ++n) {
    for (Side side : {Side::right, Side::left}) {
      const ReplayReport r = verify_theorem(n, side);
      o.require(r.equal, "n=" + std::to_string(n) + " " + std::string(to_string(side)) + " not equal");
    }
  }
  const double small = seconds_since(start);
  o.require(small < 10.0, "n<=4 took " + std::to_string(small) + " s");
  start = Clock::now();
  for (Side side : {Side::right, Side::left}) {
    o.require(verify_theorem(5, side).equal, "n=5 " + std::string(to_string(side)) + " not equal");
  }
  const double five = seconds_since(start);
  o.require(five < 60.0, "n=5 took " + std::to_string(five) + " s");
  timing.precision(2);
  timing << std::fixed << "n<=4 " << small << " s, n=5 " << five << " s";
  if (o.pass) o.detail = timing.str();
  return o;
}

Outcome trace_fidelity() {
  Outcome o;
  const Trace2x2 trace = trace_2x2();
  o.require(trace.consistent(), "trace is inconsistent");
  std::vector<std::string> mismatched;
  for (const TraceStep& s : trace.steps) {
    if (s.matches) continue;
    mismatched.push_back(s.label);
    o.require(!s.note.empty(), "unannotated mismatch at " + s.label);
  }
  o.require(mismatched == std::vector<std::string>{"a12 d21 b22", "d21 d12"}, "unexpected mismatch set");
  const SymbolicSetup setup = SymbolicSetup::make(2);
  bool factorization = false;
  for (const TraceStep& s : trace.steps) {
    if (s.label == "factorization") factorization = s.matches && s.computed == target_poly(setup, Side::right);
  }
  o.require(factorization, "final factorization does not match");
  if (o.pass) o.detail = std::to_string(trace.steps.size()) + " steps, 2 annotated misprints";
  return o;
}

Outcome consequence_sweeps() {
  Outcome o;
  std::uint64_t invertible = 0;
  for (std::size_t n : {1, 2, 3}) {
    for (std::uint64_t m : {2, 3, 4, 5, 12}) {
      const SweepReport r = consequences_sweep({m, n, 200, 1000 + m * 10 + n, 1});
      invertible += r.invertible;
      o.require(r.samples == 200, "wrong sample count");
      o.require(r.violations == 0,
                "n=" + std::to_string(n) + " m=" + std::to_string(m) + ": " + std::to_string(r.violations) +
                    " violations");
    }
  }
  o.require(invertible > 0, "no invertible samples drawn");
  if (o.pass) o.detail = "15 sweeps x 200 samples, " + std::to_string(invertible) + " invertible, 0 violations";
  return o;
}

Outcome ordered_determinants() {
  Outcome o;
  for (std::size_t n = 1; n <= 4; ++n) {
    const FreeAlgebra algebra(CommutationSpec::proof_replay(n));
    const SymbolicMatrix b = symbolic_matrix(algebra, GeneratorKind::b_entry);
    o.require(ocdet_fwd(b) == ocdet_recursive(b), "symbolic fwd != recursive at n=" + std::to_string(n));
  }
  std::mt19937_64 rng(2024);
  const std::vector<long> moduli = {2, 3, 4, 6, 12, 97};
  for (int trial = 0; trial < 500; ++trial) {
    const RingHandle r = parse_ring_spec("zmod:" + std::to_string(moduli[trial % moduli.size()]));
    const RingMatrix a = random_matrix(r, 1 + rng() % 4, rng);
    const Element d = det_leibniz(a);
    o.require(r.equal(ocdet_fwd(a), d) && r.equal(ocdet_left(a), d) && r.equal(ocdet_recursive(a), d),
              "ordered determinant differs from Leibniz over " + r->descriptor());
  }
  if (o.pass) o.detail = "symbolic n<=4, 500 random Z/m matrices";
  return o;
}

Outcome adjugate_inversion() {
  Outcome o;
  for (std::size_t n = 1; n <= 4; ++n) {
    o.require(verify_adjugate_identity(n), "symbolic adjugate identity fails at n=" + std::to_string(n));
  }
  const RingHandle integers = parse_ring_spec("int");
  std::mt19937_64 rng(7);
  int done = 0;
  while (done < 100) {
    const RingMatrix a = random_matrix(integers, 1 + rng() % 4, rng);
    if (det_leibniz(a).scalar() == 0) continue;
    const FractionMatrix b = invert_via_adjugate(a, nonzero_integers());
    const FractionMatrix af = to_fractions(a, b.ring());
    o.require(is_identity(af * b) && is_identity(b * af), "A * A^-1 != I");
    ++done;
  }
  if (o.pass) o.detail = "symbolic n<=4, 100 random integer inverses";
  return o;
}

ElementSet parse_gens(const FiniteRingTable& s, const char* text) {
  return parse_generators(nlohmann::json::parse(text), s);
}

Outcome closure_reports() {
  Outcome o;
  struct Instance {
    const char* ring;
    const char* gens;
    std::size_t max_matrix;
  };
  const Instance instances[] = {{"zmod:6", "[]", 2},
                                {"zmod:6", "[]", 3},
                                {"mat:2:zmod:2", "[[[0,1],[0,0]]]", 2},
                                {"mat:2:zmod:2", "[[[0,1],[0,0]]]", 3},
                                {"mat:2:zmod:3", "[[[0,1],[0,0]]]", 2}};
  for (const Instance& inst : instances) {
    const std::string tag = std::string(inst.ring) + " N=" + std::to_string(inst.max_matrix);
    const FiniteRingTable s(parse_ring_spec(inst.ring));
    RationalClosureOptions options;
    options.max_matrix = inst.max_matrix;
    const SubsetReport report = closure_report(parse_gens(s, inst.gens), s, options);
    o.require(report.holds(), tag + ": report does not hold");
    o.require(report.check("eq1_holds"), tag + ": RT^-1 != D");
    o.require(report.check("rat_subset_rt"), tag + ": Rat_N not inside RT^-1");
    o.require(report.check("power_inverse_all_units"), tag + ": power inverse failed");
    o.require(report.check("rat_monotone"), tag + ": Rat not monotone");
  }
  bool refused = false;
  try {
    const FiniteRingTable s(parse_ring_spec("mat:2:zmod:3"));
    RationalClosureOptions options;
    options.max_matrix = 3;
    closure_report(parse_gens(s, "[[[0,1],[0,0]]]"), s, options);
  } catch (const BudgetExceededError& e) {
    refused = e.required() > e.budget();
  }
  o.require(refused, "Mat2(Z/3) at N=3 was not refused");
  if (o.pass) o.detail = "5 instances hold, Mat2(Z/3) N=3 over budget";
  return o;
}

Word random_word(const CommutationSpec& spec, std::mt19937_64& rng, std::size_t max_len) {
  Word w(rng() % (max_len + 1));
  for (auto& g : w) g = static_cast<GeneratorId>(rng() % spec.generator_count());
  return w;
}

FreePoly random_poly(const SpecPtr& spec, std::mt19937_64& rng) {
  FreePoly p(spec);
  const std::size_t terms = rng() % 5;
  for (std::size_t t = 0; t < terms; ++t) {
    p.add_monomial(random_word(*spec, rng, 3), mpz_class(static_cast<long>(rng() % 7) - 3));
  }
  return p;
}

Word b_subword(const Word& w, const CommutationSpec& spec) {
  Word out;
  for (GeneratorId g : w) {
    if (spec.generator(g).kind == GeneratorKind::b_entry) out.push_back(g);
  }
  return out;
}

using CommPoly = std::map<std::vector<GeneratorId>, mpz_class>;

CommPoly commutative_image(const FreePoly& p) {
  CommPoly out;
  for (const auto& [word, c] : p.terms()) {
    Word sorted = word;
    std::sort(sorted.begin(), sorted.end());
    out[sorted] += c;
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

CommPoly commutative_product(const CommPoly& p, const CommPoly& q) {
  CommPoly out;
  for (const auto& [u, a] : p)
    for (const auto& [v, b] : q) {
      std::vector<GeneratorId> w;
      std::merge(u.begin(), u.end(), v.begin(), v.end(), std::back_inserter(w));
      out[w] += a * b;
    }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

Outcome free_algebra_properties() {
  Outcome o;
  std::mt19937_64 rng(11);
  const SpecPtr spec = CommutationSpec::proof_replay(3);
  for (int trial = 0; trial < 500; ++trial) {
    const Word w = random_word(*spec, rng, 9);
    const Word nf = normalize_monomial(w, *spec);
    o.require(normalize_monomial(nf, *spec) == nf, "normalization not idempotent");
    o.require(b_subword(nf, *spec) == b_subword(w, *spec), "b-subword changed");
  }
  const SpecPtr small = CommutationSpec::proof_replay(2);
  for (int trial = 0; trial < 500; ++trial) {
    const FreePoly p = random_poly(small, rng), q = random_poly(small, rng), r = random_poly(small, rng);
    o.require((p * q) * r == p * (q * r), "multiplication not associative");
    o.require(p * (q + r) == p * q + p * r && (p + q) * r == p * r + q * r, "not distributive");
  }
  const SpecPtr commuting = CommutationSpec::fully_commuting(2);
  for (int trial = 0; trial < 200; ++trial) {
    const FreePoly p = random_poly(commuting, rng), q = random_poly(commuting, rng);
    o.require(commutative_image(p * q) == commutative_product(commutative_image(p), commutative_image(q)),
              "commutative product disagrees with the oracle");
  }
  if (o.pass) o.detail = "500 normalizations, 500 ring-law samples, 200 oracle products";
  return o;
}

std::string run_cli(std::vector<std::string> args, int& code) {
  std::ostringstream out, err;
  code = cli::run(args, out, err);
  return out.str();
}

std::string strip_millis(const std::string& text) {
  nlohmann::ordered_json doc = nlohmann::ordered_json::parse(text);
  for (auto& report : doc) report.erase("millis");
  return doc.dump();
}

Outcome determinism() {
  Outcome o;
  const std::string gens = std::string(SUBINV_DATA_DIR) + "/mat2z2_E.json";
  const std::vector<std::vector<std::string>> parallel = {
      {"consequences", "--modulus", "12", "--n", "3", "--samples", "200", "--seed", "5", "--json"},
      {"closure", "--ring", "mat:2:zmod:2", "--gens", gens, "--max-matrix", "3", "--json"},
  };
  for (const auto& base : parallel) {
    int code = 0;
    const std::string first = run_cli(base, code);
    o.require(code == 0, base[0] + " exited with " + std::to_string(code));
    for (const char* workers : {"1", "2", "4"}) {
      auto args = base;
      args.insert(args.end(), {"--workers", workers});
      o.require(run_cli(args, code) == first, base[0] + " output depends on --workers " + workers);
    }
  }
  int code = 0;
  const std::vector<std::vector<std::string>> sequential = {
      {"trace2x2", "--json"},
      {"invert", "--ring", "int", "--matrix", std::string(SUBINV_DATA_DIR) + "/m.json", "--json"},
      {"ocdet", "--ring", "mat:2:zmod:3", "--matrix", std::string(SUBINV_DATA_DIR) + "/id2.json", "--json"},
  };
  for (const auto& args : sequential) {
    o.require(run_cli(args, code) == run_cli(args, code), args[0] + " output differs between runs");
  }
  const std::vector<std::string> verify = {"verify", "--n", "4", "--json"};
  const std::string v1 = strip_millis(run_cli(verify, code));
  o.require(v1 == strip_millis(run_cli({"verify", "--n", "4", "--json", "--workers", "3"}, code)),
            "verify output depends on --workers");
  if (o.pass) o.detail = "consequences, closure, trace2x2, invert, ocdet, verify";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"theorem replay n=1..5, both sides", replay_small_dimensions},
      {"2x2 trace fidelity", trace_fidelity},
      {"consequence sweeps", consequence_sweeps},
      {"ordered determinants", ordered_determinants},
      {"adjugate inversion", adjugate_inversion},
      {"closure lab reports", closure_reports},
      {"free algebra properties", free_algebra_properties},
      {"deterministic output", determinism},
  };
  int failures = 0;
  int index = 0;
  for (const auto& [name, check] : criteria) {
    ++index;
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    if (!o.pass) ++failures;
    std::cout << (o.pass ? "PASS" : "FAIL") << " [" << index << "] " << name << ": " << o.detail << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
