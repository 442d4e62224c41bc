#include "subinv/proof/replay.hpp"

#include <algorithm>
#include <chrono>
#include <thread>

#include "subinv/errors.hpp"
#include "subinv/matrix/determinant.hpp"

namespace subinv {

std::string_view to_string(Side side) { return side == Side::right ? "right" : "left"; }

std::optional<Side> parse_side(std::string_view text) {
  if (text == "right") return Side::right;
  if (text == "left") return Side::left;
  return std::nullopt;
}

SymbolicMatrix symbolic_matrix(const FreeAlgebra& algebra, GeneratorKind kind) {
  const CommutationSpec& spec = *algebra.spec();
  const std::size_t n = spec.dimension();
  SymbolicMatrix m(algebra, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = algebra.gen(spec.id({kind, i + 1, j + 1}));
  return m;
}

SymbolicSetup SymbolicSetup::make(std::size_t n) {
  SpecPtr spec = CommutationSpec::proof_replay(n);
  std::vector<GeneratorId> a_ids;
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= n; ++j) a_ids.push_back(spec->id({GeneratorKind::a_entry, i, j}));
  FreeAlgebra a_algebra(spec, std::move(a_ids));
  FreeAlgebra full(spec);
  return {n, spec, symbolic_matrix(a_algebra, GeneratorKind::a_entry), symbolic_matrix(full, GeneratorKind::b_entry)};
}

FreePoly expand_sigma_product(const SymbolicSetup& setup, const Permutation& sigma, std::uint64_t* raw_terms) {
  const std::size_t n = setup.n;
  FreePoly acc = FreePoly::constant(setup.spec, 1);
  for (std::size_t t = 0; t < n; ++t) {
    const bool last = (t + 1 == n);
    FreePoly next(setup.spec);
    for (std::size_t k = 0; k < n; ++k) {
      FreePoly left = poly_mul(setup.a(sigma(t), k), acc);
      next = poly_add(next, poly_mul(left, setup.b(k, t), last ? raw_terms : nullptr));
    }
    acc = std::move(next);
  }
  return acc;
}

namespace {

Expansion expand_right(const SymbolicSetup& setup, unsigned workers) {
  const std::vector<Permutation> perms = all_permutations(setup.n);
  workers = std::clamp<unsigned>(workers, 1, static_cast<unsigned>(perms.size()));

  std::vector<Expansion> partial(workers, Expansion{FreePoly(setup.spec), 0});
  auto run_chunk = [&](unsigned w) {
    const std::size_t begin = perms.size() * w / workers;
    const std::size_t end = perms.size() * (w + 1) / workers;
    Expansion& out = partial[w];
    for (std::size_t idx = begin; idx < end; ++idx) {
      const Permutation& sigma = perms[idx];
      FreePoly product = expand_sigma_product(setup, sigma, &out.raw_terms);
      out.poly = sigma.sign() > 0 ? poly_add(out.poly, product) : poly_sub(out.poly, product);
    }
  };

  if (workers == 1) {
    run_chunk(0);
  } else {
    std::vector<std::jthread> threads;
    threads.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) threads.emplace_back(run_chunk, w);
  }

  Expansion total{FreePoly(setup.spec), 0};
  for (Expansion& e : partial) {
    total.poly = poly_add(total.poly, e.poly);
    total.raw_terms += e.raw_terms;
  }
  return total;
}

}  // namespace

Expansion expand_identity_det(const SymbolicSetup& setup, Side side, unsigned workers) {
  if (side == Side::right) return expand_right(setup, workers);
  // B A = I over S is A^T B^T = I over the opposite ring; run the right-hand
  // expansion there and read every word backwards.
  SymbolicSetup transposed{setup.n, setup.spec, setup.a.transpose(), setup.b.transpose()};
  Expansion op = expand_right(transposed, workers);
  return {op.poly.opposite(), op.raw_terms};
}

FreePoly target_poly(const SymbolicSetup& setup, Side side) {
  const FreePoly det_a = det_leibniz(setup.a);
  if (side == Side::right) return poly_mul(det_a, ocdet_fwd(setup.b));
  return poly_mul(ocdet_left(setup.b), det_a);
}

std::uint64_t replay_cost(std::size_t n) {
  std::uint64_t cost = factorial(n);
  for (std::size_t i = 0; i < n; ++i) cost *= n;
  return cost;
}

ReplayReport verify_theorem(std::size_t n, Side side, const ReplayOptions& options) {
  if (n < 1) throw MismatchError("verify needs n >= 1");
  if (n > options.max_n) {
    throw BudgetExceededError("n = " + std::to_string(n) + " exceeds the cap " + std::to_string(options.max_n) +
                                  ": " + std::to_string(replay_cost(n)) + " raw monomials",
                              replay_cost(n), replay_cost(options.max_n));
  }
  const auto start = std::chrono::steady_clock::now();
  const SymbolicSetup setup = SymbolicSetup::make(n);
  const Expansion p = expand_identity_det(setup, side, options.workers);
  const FreePoly q = target_poly(setup, side);
  const auto stop = std::chrono::steady_clock::now();

  ReplayReport report;
  report.n = n;
  report.side = side;
  report.raw_terms = p.raw_terms;
  report.p_terms = p.poly.size();
  report.q_terms = q.size();
  report.equal = (p.poly == q);
  report.millis = std::chrono::duration_cast<std::chrono::milliseconds>(stop - start).count();
  return report;
}

nlohmann::ordered_json to_json(const ReplayReport& report) {
  nlohmann::ordered_json j;
  j["n"] = report.n;
  j["side"] = std::string(to_string(report.side));
  j["raw_terms"] = report.raw_terms;
  j["p_terms"] = report.p_terms;
  j["q_terms"] = report.q_terms;
  j["equal"] = report.equal;
  j["millis"] = report.millis;
  return j;
}

ReplayReport replay_report_from_json(const nlohmann::json& j) {
  try {
    ReplayReport r;
    r.n = j.at("n").get<std::size_t>();
    auto side = parse_side(j.at("side").get<std::string>());
    if (!side) throw ParseError("bad side in replay report");
    r.side = *side;
    r.raw_terms = j.at("raw_terms").get<std::uint64_t>();
    r.p_terms = j.at("p_terms").get<std::size_t>();
    r.q_terms = j.at("q_terms").get<std::size_t>();
    r.equal = j.at("equal").get<bool>();
    r.millis = j.at("millis").get<std::int64_t>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed replay report: ") + e.what());
  }
}

bool verify_adjugate_identity(std::size_t n) {
  FreeAlgebra algebra(CommutationSpec::fully_commuting(n));
  const SymbolicMatrix a = symbolic_matrix(algebra, GeneratorKind::a_entry);
  const SymbolicMatrix adj = adjugate(a);
  const SymbolicMatrix scaled = scale_left(det_leibniz(a), SymbolicMatrix::identity(algebra, n));
  return matrices_equal(a * adj, scaled) && matrices_equal(adj * a, scaled);
}

}  // namespace subinv
