#include "subinv/cli/cli.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "subinv/closure/closure.hpp"
#include "subinv/errors.hpp"
#include "subinv/matrix/matrix_io.hpp"
#include "subinv/proof/consequences.hpp"
#include "subinv/proof/replay.hpp"
#include "subinv/proof/trace.hpp"

namespace subinv::cli {

namespace {

struct VerifyArgs {
  std::size_t n = 0;
  std::string side = "both";
  std::size_t max_n = ReplayOptions{}.max_n;
  unsigned workers = 1;
  bool json = false;
};

struct MatrixArgs {
  std::string ring;
  std::string matrix;
  std::string denoms;
  std::string variant = "fwd";
  bool json = false;
};

struct ClosureArgs {
  std::string ring;
  std::string gens;
  std::size_t max_matrix = 2;
  std::uint64_t budget = RationalClosureOptions::kDefaultBudget;
  unsigned workers = 1;
  bool json = false;
};

struct ConsequencesArgs {
  std::uint64_t modulus = 0;
  std::size_t n = 0;
  std::size_t samples = 0;
  std::uint64_t seed = 1;
  unsigned workers = 1;
  bool json = false;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

// Loads a matrix file and checks it against the ring named on the command line.
RingMatrix load_matrix(const MatrixArgs& args) {
  const RingHandle ring = parse_ring_spec(args.ring);
  RingMatrix m = parse_matrix(read_file(args.matrix));
  if (!(m.ring() == ring)) {
    throw ParseError("matrix file is over " + m.ring().descriptor() + " but --ring is " + ring.descriptor());
  }
  return m;
}

std::string render_set(const ElementSet& set, const SubsetReport& report) {
  std::string out = "{";
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (i) out += ", ";
    out += report.elements[set[i]];
  }
  return out + "}";
}

int cmd_verify(const VerifyArgs& args, std::ostream& out) {
  std::vector<Side> sides;
  if (args.side == "both") {
    sides = {Side::right, Side::left};
  } else {
    sides = {*parse_side(args.side)};
  }
  const ReplayOptions options{args.max_n, args.workers};
  std::vector<ReplayReport> reports;
  for (Side side : sides) reports.push_back(verify_theorem(args.n, side, options));

  if (args.json) {
    nlohmann::ordered_json doc = nlohmann::ordered_json::array();
    for (const ReplayReport& r : reports) doc.push_back(to_json(r));
    out << doc.dump(2) << "\n";
  } else {
    for (const ReplayReport& r : reports) {
      out << "n=" << r.n << " side=" << to_string(r.side) << ": " << (r.equal ? "equal" : "NOT EQUAL")
          << "  raw_terms=" << r.raw_terms << " p_terms=" << r.p_terms << " q_terms=" << r.q_terms << "  ("
          << r.millis << " ms)\n";
    }
  }
  const bool all_equal = std::all_of(reports.begin(), reports.end(), [](const ReplayReport& r) { return r.equal; });
  return all_equal ? kOk : kVerificationFailure;
}

int cmd_trace(bool json, std::ostream& out) {
  const Trace2x2 trace = trace_2x2();
  if (json) {
    out << to_json(trace).dump(2) << "\n";
  } else {
    out << render_text(trace);
  }
  return trace.consistent() ? kOk : kVerificationFailure;
}

int cmd_invert(const MatrixArgs& args, std::ostream& out) {
  const RingMatrix a = load_matrix(args);
  const RingHandle& ring = a.ring();
  std::string denoms = args.denoms;
  if (denoms.empty()) denoms = ring.descriptor() == "int" ? "nonzero" : "unitsof:" + ring.descriptor();
  const FractionMatrix inverse = invert_via_adjugate(a, parse_denominator_spec(denoms, ring));

  if (args.json) {
    out << fraction_matrix_to_json(inverse).dump(2) << "\n";
    return kOk;
  }
  out << "det = " << ring->render(det_leibniz(a)) << "\n";
  for (std::size_t i = 0; i < inverse.size(); ++i) {
    out << (i == 0 ? "inverse = [" : "           ") << "[";
    for (std::size_t j = 0; j < inverse.size(); ++j) {
      if (j) out << ", ";
      out << inverse.ring().render(inverse(i, j));
    }
    out << "]" << (i + 1 == inverse.size() ? "]" : "") << "\n";
  }
  return kOk;
}

int cmd_ocdet(const MatrixArgs& args, std::ostream& out) {
  const RingMatrix b = load_matrix(args);
  Element value;
  if (args.variant == "fwd") {
    value = ocdet_fwd(b);
  } else if (args.variant == "left") {
    value = ocdet_left(b);
  } else {
    value = ocdet_recursive(b);
  }
  if (args.json) {
    nlohmann::ordered_json doc;
    doc["ring"] = b.ring().descriptor();
    doc["variant"] = args.variant;
    doc["value"] = nlohmann::ordered_json(b.ring()->to_json(value));
    out << doc.dump(2) << "\n";
  } else {
    out << "ocdet_" << args.variant << " = " << b.ring()->render(value) << "\n";
  }
  return kOk;
}

int cmd_closure(const ClosureArgs& args, std::ostream& out) {
  const FiniteRingTable s(parse_ring_spec(args.ring));
  nlohmann::json gens_doc;
  try {
    gens_doc = nlohmann::json::parse(read_file(args.gens));
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(args.gens + ": " + e.what());
  }
  RationalClosureOptions options;
  options.max_matrix = args.max_matrix;
  options.budget = args.budget;
  options.workers = args.workers;
  const SubsetReport report = closure_report(parse_generators(gens_doc, s), s, options);

  if (args.json) {
    out << to_json(report).dump(2) << "\n";
  } else {
    out << "ring " << report.ring << " (" << report.elements.size() << " elements)\n";
    out << "R      = " << render_set(report.r, report) << "\n";
    out << "T      = " << render_set(report.t, report) << "\n";
    out << "RT^-1  = " << render_set(report.rt_inverse, report) << "\n";
    out << "D(R,S) = " << render_set(report.d, report) << "\n";
    out << "Rat_" << report.rat.max_matrix << "  = " << render_set(report.rat.set, report) << "\n";
    for (const auto& [name, value] : report.checks) out << "  " << name << ": " << (value ? "yes" : "no") << "\n";
    if (report.check("degenerate")) out << "regime: degenerate (finite S, every closure collapses to R)\n";
  }
  return report.holds() ? kOk : kVerificationFailure;
}

int cmd_consequences(const ConsequencesArgs& args, std::ostream& out) {
  const SweepReport report = consequences_sweep({args.modulus, args.n, args.samples, args.seed, args.workers});
  if (args.json) {
    out << to_json(report).dump(2) << "\n";
  } else {
    out << "R = dualnum:zmod:" << report.modulus << " inside S = mat:2:zmod:" << report.modulus << ", n=" << report.n
        << ", seed=" << report.seed << "\n";
    out << report.samples << " samples, " << report.invertible << " invertible over S, " << report.violations
        << " violations\n";
  }
  return report.violations == 0 ? kOk : kVerificationFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact checks for inverting matrices over commutative subrings", "subinv"};
  app.require_subcommand(1);

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Replay the proof symbolically for one dimension");
  verify_cmd->add_option("--n", verify.n, "Matrix dimension")->required()->check(CLI::PositiveNumber);
  verify_cmd->add_option("--side", verify.side, "right, left or both")
      ->check(CLI::IsMember({"right", "left", "both"}));
  verify_cmd->add_option("--max-n", verify.max_n, "Largest dimension allowed");
  verify_cmd->add_option("--workers", verify.workers, "Worker threads")->check(CLI::PositiveNumber);
  verify_cmd->add_flag("--json", verify.json, "JSON output");

  bool trace_json = false;
  auto* trace_cmd = app.add_subcommand("trace2x2", "Step through the 2x2 case");
  trace_cmd->add_flag("--json", trace_json, "JSON output");

  MatrixArgs invert;
  auto* invert_cmd = app.add_subcommand("invert", "Invert a matrix inside a localization");
  invert_cmd->add_option("--ring", invert.ring, "Entry ring")->required();
  invert_cmd->add_option("--matrix", invert.matrix, "Matrix file")->required();
  invert_cmd->add_option("--denoms", invert.denoms, "nonzero | powersof:<p> | unitsof:<ring>");
  invert_cmd->add_flag("--json", invert.json, "JSON output");

  MatrixArgs ocdet;
  auto* ocdet_cmd = app.add_subcommand("ocdet", "Evaluate an ordered column determinant");
  ocdet_cmd->add_option("--ring", ocdet.ring, "Entry ring")->required();
  ocdet_cmd->add_option("--matrix", ocdet.matrix, "Matrix file")->required();
  ocdet_cmd->add_option("--variant", ocdet.variant, "fwd, left or recursive")
      ->check(CLI::IsMember({"fwd", "left", "recursive"}));
  ocdet_cmd->add_flag("--json", ocdet.json, "JSON output");

  ClosureArgs closure;
  auto* closure_cmd = app.add_subcommand("closure", "Closure sets of a subring of a finite ring");
  closure_cmd->add_option("--ring", closure.ring, "Ambient finite ring")->required();
  closure_cmd->add_option("--gens", closure.gens, "Generator file")->required();
  closure_cmd->add_option("--max-matrix", closure.max_matrix, "Matrix-size bound")->check(CLI::PositiveNumber);
  closure_cmd->add_option("--budget", closure.budget, "Enumeration budget");
  closure_cmd->add_option("--workers", closure.workers, "Worker threads")->check(CLI::PositiveNumber);
  closure_cmd->add_flag("--json", closure.json, "JSON output");

  ConsequencesArgs consequences;
  auto* consequences_cmd = app.add_subcommand("consequences", "Random sweep over dual numbers inside 2x2 matrices");
  consequences_cmd->add_option("--modulus", consequences.modulus, "Modulus m")->required()->check(CLI::Range(2, 1 << 30));
  consequences_cmd->add_option("--n", consequences.n, "Matrix dimension")->required()->check(CLI::PositiveNumber);
  consequences_cmd->add_option("--samples", consequences.samples, "Number of samples")->required();
  consequences_cmd->add_option("--seed", consequences.seed, "Random seed");
  consequences_cmd->add_option("--workers", consequences.workers, "Worker threads")->check(CLI::PositiveNumber);
  consequences_cmd->add_flag("--json", consequences.json, "JSON output");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kParseError;
  }

  try {
    if (*verify_cmd) return cmd_verify(verify, out);
    if (*trace_cmd) return cmd_trace(trace_json, out);
    if (*invert_cmd) return cmd_invert(invert, out);
    if (*ocdet_cmd) return cmd_ocdet(ocdet, out);
    if (*closure_cmd) return cmd_closure(closure, out);
    if (*consequences_cmd) return cmd_consequences(consequences, out);
  } catch (const BudgetExceededError& e) {
    err << "budget exceeded: " << e.what() << " (required " << e.required() << ", budget " << e.budget() << ")\n";
    return kBudgetExceeded;
  } catch (const NotInvertibleError& e) {
    err << e.what() << "\n";
    return kNotInvertible;
  } catch (const VerificationFailure& e) {
    err << "verification failure: " << e.what() << "\n";
    return kVerificationFailure;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kParseError;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << "\n";
    return kParseError;
  }
  return kParseError;
}

}  // namespace subinv::cli
