#include "subinv/closure/closure.hpp"

#include <algorithm>
#include <limits>
#include <thread>

#include "subinv/errors.hpp"
#include "subinv/matrix/modular_inverse.hpp"
#include "subinv/ring/power_inverse.hpp"

namespace subinv {

namespace {

using Mask = std::vector<char>;

Mask to_mask(const ElementSet& set, std::size_t size) {
  Mask mask(size, 0);
  for (ElementIndex i : set) mask.at(i) = 1;
  return mask;
}

ElementSet from_mask(const Mask& mask) {
  ElementSet out;
  for (ElementIndex i = 0; i < mask.size(); ++i) {
    if (mask[i]) out.push_back(i);
  }
  return out;
}

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) return std::numeric_limits<std::uint64_t>::max();
  return a * b;
}

std::uint64_t saturating_pow(std::uint64_t base, std::size_t exponent) {
  std::uint64_t out = 1;
  for (std::size_t i = 0; i < exponent; ++i) out = saturating_mul(out, base);
  return out;
}

std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) {
  return b > std::numeric_limits<std::uint64_t>::max() - a ? std::numeric_limits<std::uint64_t>::max() : a + b;
}

bool uses_exhaustive(std::size_t n, const FiniteRingTable& s, InversionMethod method) {
  return n >= 2 && (method == InversionMethod::exhaustive || !s.linear());
}

// Entry (i, j) of the product of two n x n matrices over S.
ElementIndex product_entry(const std::vector<ElementIndex>& a, const std::vector<ElementIndex>& b, std::size_t n,
                           std::size_t i, std::size_t j, const FiniteRingTable& s) {
  ElementIndex acc = s.zero();
  for (std::size_t k = 0; k < n; ++k) acc = s.add(acc, s.mul(a[i * n + k], b[k * n + j]));
  return acc;
}

bool is_identity_product(const std::vector<ElementIndex>& a, const std::vector<ElementIndex>& b, std::size_t n,
                         const FiniteRingTable& s) {
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (product_entry(a, b, n, i, j, s) != (i == j ? s.one() : s.zero())) return false;
    }
  return true;
}

std::optional<std::vector<ElementIndex>> invert_exhaustive(const std::vector<ElementIndex>& a, std::size_t n,
                                                           const FiniteRingTable& s) {
  std::vector<ElementIndex> x(n * n, 0);
  const std::size_t base = s.size();
  while (true) {
    if (is_identity_product(a, x, n, s) && is_identity_product(x, a, n, s)) return x;
    std::size_t pos = 0;
    while (pos < x.size() && ++x[pos] == base) x[pos++] = 0;
    if (pos == x.size()) return std::nullopt;
  }
}

std::optional<std::vector<ElementIndex>> invert_linear(const std::vector<ElementIndex>& a, std::size_t n,
                                                       const LinearRepresentation& rep) {
  const std::size_t k = rep.k;
  const std::size_t dim = n * k;
  std::vector<std::int64_t> flat(dim * dim);
  for (std::size_t bi = 0; bi < n; ++bi)
    for (std::size_t bj = 0; bj < n; ++bj) {
      const auto& block = rep.blocks[a[bi * n + bj]];
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) flat[(bi * k + i) * dim + bj * k + j] = block[i * k + j];
    }
  auto inv = invert_mod<std::int64_t>(flat, dim, rep.modulus);
  if (!inv) return std::nullopt;
  std::vector<ElementIndex> out(n * n);
  std::vector<std::int64_t> block(k * k);
  for (std::size_t bi = 0; bi < n; ++bi)
    for (std::size_t bj = 0; bj < n; ++bj) {
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) block[i * k + j] = (*inv)[(bi * k + i) * dim + bj * k + j];
      // The inverse over Mat_nk(Z/m) is unique; if a block falls outside S,
      // A has no inverse over Mat_n(S).
      auto e = rep.element_of(block);
      if (!e) return std::nullopt;
      out[bi * n + bj] = *e;
    }
  return out;
}

// Entries of inverses of all n x n matrices over r, split across workers.
Mask inverse_entries(const ElementSet& r, std::size_t n, const FiniteRingTable& s, InversionMethod method,
                     unsigned workers) {
  const std::size_t cells = n * n;
  const std::uint64_t total = saturating_pow(r.size(), cells);
  workers = static_cast<unsigned>(std::clamp<std::uint64_t>(workers, 1, std::max<std::uint64_t>(total, 1)));
  std::vector<Mask> found(workers, Mask(s.size(), 0));

  auto run_chunk = [&](unsigned w) {
    const std::uint64_t begin = total / workers * w + std::min<std::uint64_t>(w, total % workers);
    const std::uint64_t count = total / workers + (w < total % workers ? 1 : 0);
    std::vector<std::size_t> digits(cells);
    std::uint64_t rest = begin;
    for (std::size_t c = 0; c < cells; ++c) {
      digits[c] = rest % r.size();
      rest /= r.size();
    }
    std::vector<ElementIndex> a(cells);
    Mask& mine = found[w];
    for (std::uint64_t step = 0; step < count; ++step) {
      for (std::size_t c = 0; c < cells; ++c) a[c] = r[digits[c]];
      const auto inv = invert_over(a, n, s, method);
      if (inv) {
        for (ElementIndex e : *inv) mine[e] = 1;
      }
      for (std::size_t c = 0; c < cells && ++digits[c] == r.size(); ++c) digits[c] = 0;
    }
  };

  if (r.empty()) return Mask(s.size(), 0);
  if (workers == 1) {
    run_chunk(0);
  } else {
    std::vector<std::jthread> threads;
    for (unsigned w = 0; w < workers; ++w) threads.emplace_back(run_chunk, w);
  }
  Mask out(s.size(), 0);
  for (const Mask& m : found)
    for (std::size_t i = 0; i < out.size(); ++i) out[i] |= m[i];
  return out;
}

}  // namespace

ElementSet generated_subring(const ElementSet& gens, const FiniteRingTable& s) {
  Mask mask = to_mask(gens, s.size());
  mask[s.zero()] = 1;
  mask[s.one()] = 1;
  bool changed = true;
  while (changed) {
    changed = false;
    const ElementSet current = from_mask(mask);
    auto adjoin = [&](ElementIndex e) {
      if (!mask[e]) {
        mask[e] = 1;
        changed = true;
      }
    };
    for (ElementIndex a : current) {
      adjoin(s.neg(a));
      for (ElementIndex b : current) {
        adjoin(s.add(a, b));
        adjoin(s.mul(a, b));
      }
    }
  }
  return from_mask(mask);
}

ElementSet unit_denominators(const ElementSet& r, const FiniteRingTable& s) {
  ElementSet out;
  std::copy_if(r.begin(), r.end(), std::back_inserter(out), [&](ElementIndex e) { return s.is_unit(e); });
  return out;
}

ElementSet rt_inverse(const ElementSet& r, const ElementSet& t_set, const FiniteRingTable& s) {
  Mask mask(s.size(), 0);
  for (ElementIndex t : t_set) {
    const auto t_inv = s.inverse(t);
    if (!t_inv) throw MismatchError("denominator " + s.ring()->render(s.element(t)) + " is not a unit");
    for (ElementIndex x : r) mask[s.mul(x, *t_inv)] = 1;
  }
  return from_mask(mask);
}

Fixpoint division_closure(const ElementSet& r, const FiniteRingTable& s) {
  Fixpoint out{generated_subring(r, s), 0};
  while (true) {
    Mask mask = to_mask(out.set, s.size());
    bool added = false;
    for (ElementIndex e : out.set) {
      if (auto inv = s.inverse(e); inv && !mask[*inv]) {
        mask[*inv] = 1;
        added = true;
      }
    }
    if (!added) return out;
    ++out.rounds;
    out.set = generated_subring(from_mask(mask), s);
  }
}

bool is_subset(const ElementSet& a, const ElementSet& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

bool is_subring(const ElementSet& a, const FiniteRingTable& s) {
  const Mask mask = to_mask(a, s.size());
  if (!mask[s.zero()] || !mask[s.one()]) return false;
  for (ElementIndex x : a) {
    if (!mask[s.neg(x)]) return false;
    for (ElementIndex y : a) {
      if (!mask[s.add(x, y)] || !mask[s.mul(x, y)]) return false;
    }
  }
  return true;
}

bool is_commutative(const ElementSet& a, const FiniteRingTable& s) {
  for (ElementIndex x : a)
    for (ElementIndex y : a) {
      if (s.mul(x, y) != s.mul(y, x)) return false;
    }
  return true;
}

std::optional<std::vector<ElementIndex>> invert_over(const std::vector<ElementIndex>& a, std::size_t n,
                                                     const FiniteRingTable& s, InversionMethod method) {
  if (a.size() != n * n) throw MismatchError("matrix entry count does not match its dimension");
  if (n == 0) return std::vector<ElementIndex>{};
  if (n == 1) {
    auto inv = s.inverse(a[0]);
    if (!inv) return std::nullopt;
    return std::vector<ElementIndex>{*inv};
  }
  if (uses_exhaustive(n, s, method)) return invert_exhaustive(a, n, s);
  return invert_linear(a, n, *s.linear());
}

std::uint64_t rational_closure_cost(std::size_t r_size, const FiniteRingTable& s, const RationalClosureOptions& options) {
  std::uint64_t total = 0;
  for (std::size_t n = 1; n <= options.max_matrix; ++n) {
    std::uint64_t count = saturating_pow(r_size, n * n);
    if (uses_exhaustive(n, s, options.method)) count = saturating_mul(count, saturating_pow(s.size(), n * n));
    total = saturating_add(total, count);
  }
  return total;
}

RationalClosure rational_closure_bounded(const ElementSet& r, const FiniteRingTable& s,
                                         const RationalClosureOptions& options) {
  if (options.max_matrix < 1) throw MismatchError("the matrix-size bound must be at least 1");
  const std::uint64_t cost = rational_closure_cost(r.size(), s, options);
  if (cost > options.budget) {
    throw BudgetExceededError("rational closure up to size " + std::to_string(options.max_matrix) + " needs " +
                                  std::to_string(cost) + " enumeration steps, budget is " +
                                  std::to_string(options.budget),
                              cost, options.budget);
  }
  RationalClosure out;
  out.max_matrix = options.max_matrix;
  Mask acc(s.size(), 0);
  for (std::size_t n = 1; n <= options.max_matrix; ++n) {
    const Mask entries = inverse_entries(r, n, s, options.method, options.workers);
    for (std::size_t i = 0; i < acc.size(); ++i) acc[i] |= entries[i];
    ElementSet current = from_mask(acc);
    if (!out.by_size.empty()) {
      out.monotone = out.monotone && is_subset(out.by_size.back(), current);
      out.grew = current != out.by_size.back();
    } else {
      out.grew = !current.empty();
    }
    out.by_size.push_back(std::move(current));
  }
  out.set = out.by_size.back();
  return out;
}

bool SubsetReport::check(const std::string& name) const {
  for (const auto& [key, value] : checks) {
    if (key == name) return value;
  }
  throw MismatchError("no check named " + name);
}

bool SubsetReport::holds() const {
  return check("rt_subset_d") && check("power_inverse_all_units") && check("rat_monotone") &&
         (!check("r_commutative") || check("eq1_holds"));
}

SubsetReport closure_report(const ElementSet& gens, const FiniteRingTable& s, const RationalClosureOptions& options) {
  SubsetReport report;
  report.ring = s.ring().descriptor();
  for (const Element& e : s.elements()) report.elements.push_back(s.ring()->render(e));
  report.r = generated_subring(gens, s);
  report.t = unit_denominators(report.r, s);
  report.rt_inverse = rt_inverse(report.r, report.t, s);
  report.d = division_closure(report.r, s).set;
  report.rat = rational_closure_bounded(report.r, s, options);

  bool powers_ok = true;
  for (ElementIndex u = 0; u < s.size(); ++u) {
    if (!s.is_unit(u)) continue;
    const auto by_powers = finite_unit_inverse_by_powers(s.ring(), s.element(u));
    powers_ok = powers_ok && by_powers && s.index_of(*by_powers) == *s.inverse(u);
  }

  ElementSet rat_or_d;
  std::set_union(report.rat.set.begin(), report.rat.set.end(), report.d.begin(), report.d.end(),
                 std::back_inserter(rat_or_d));
  const bool r_commutative = is_commutative(report.r, s);
  const bool rt_equals_d = report.rt_inverse == report.d;
  const bool rat_subset_rt = is_subset(report.rat.set, report.rt_inverse);
  const bool degenerate =
      report.rt_inverse == report.r && report.d == report.r && is_subset(report.rat.set, report.r);
  report.checks = {
      {"rt_subset_d", is_subset(report.rt_inverse, report.d)},
      {"eq1_holds", rt_equals_d && rat_subset_rt},
      {"r_commutative", r_commutative},
      {"rt_equals_d", rt_equals_d},
      {"rat_subset_rt", rat_subset_rt},
      {"d_subset_rat_or_d", is_subset(report.d, rat_or_d)},
      {"rt_is_subring", is_subring(report.rt_inverse, s)},
      {"rt_commutative", is_commutative(report.rt_inverse, s)},
      {"d_is_subring", is_subring(report.d, s)},
      {"rat_monotone", report.rat.monotone},
      {"power_inverse_all_units", powers_ok},
      {"degenerate", degenerate},
  };
  return report;
}

ElementSet parse_generators(const nlohmann::json& j, const FiniteRingTable& s) {
  if (!j.is_array()) throw ParseError("generator file must hold a JSON list");
  Mask mask(s.size(), 0);
  for (const auto& item : j) {
    Element e;
    try {
      e = s.ring()->from_json(item);
    } catch (const Error& err) {
      throw ParseError(std::string("bad generator ") + item.dump() + ": " + err.what());
    }
    if (!s.ring()->is_valid(e)) throw ParseError("bad generator " + item.dump());
    mask[s.index_of(e)] = 1;
  }
  return from_mask(mask);
}

nlohmann::ordered_json to_json(const SubsetReport& report) {
  nlohmann::ordered_json j;
  j["ring"] = report.ring;
  j["elements"] = report.elements;
  j["R"] = report.r;
  j["T"] = report.t;
  j["RTinv"] = report.rt_inverse;
  j["D"] = report.d;
  nlohmann::ordered_json rat;
  rat["N"] = report.rat.max_matrix;
  rat["set"] = report.rat.set;
  nlohmann::ordered_json sizes = nlohmann::ordered_json::array();
  for (const ElementSet& s : report.rat.by_size) sizes.push_back(s.size());
  rat["size_by_bound"] = std::move(sizes);
  rat["grew"] = report.rat.grew;
  j["Rat"] = std::move(rat);
  nlohmann::ordered_json checks;
  for (const auto& [name, value] : report.checks) checks[name] = value;
  j["checks"] = std::move(checks);
  j["regime"] = report.check("degenerate") ? "degenerate" : "nondegenerate";
  return j;
}

}  // namespace subinv
