#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "subinv/closure/finite_ring.hpp"

namespace subinv {

/// Least subring of S containing `gens`, 0 and 1 (fixpoint of +, -, *).
ElementSet generated_subring(const ElementSet& gens, const FiniteRingTable& s);

/// Elements of `r` that are units of S.
ElementSet unit_denominators(const ElementSet& r, const FiniteRingTable& s);

/// { x t^-1 : x in r, t in t_set }.
ElementSet rt_inverse(const ElementSet& r, const ElementSet& t_set, const FiniteRingTable& s);

struct Fixpoint {
  ElementSet set;
  std::size_t rounds = 0;  // rounds that adjoined at least one new inverse
};

/// Least subring containing `r` that contains the S-inverse of each of its
/// units: alternate generated_subring with adjoining inverses until stable.
Fixpoint division_closure(const ElementSet& r, const FiniteRingTable& s);

bool is_subset(const ElementSet& a, const ElementSet& b);
bool is_subring(const ElementSet& a, const FiniteRingTable& s);
bool is_commutative(const ElementSet& a, const FiniteRingTable& s);

enum class InversionMethod {
  automatic,   // flatten to Z/m when S has a linear representation
  exhaustive,  // search all X with AX = XA = I
};

/// Inverse over Mat_n(S) of the matrix whose (row-major) entries are the
/// given element indices, or nullopt when it has none.
std::optional<std::vector<ElementIndex>> invert_over(const std::vector<ElementIndex>& a, std::size_t n,
                                                     const FiniteRingTable& s, InversionMethod method);

struct RationalClosureOptions {
  static constexpr std::uint64_t kDefaultBudget = 20'000'000;

  std::size_t max_matrix = 2;
  std::uint64_t budget = kDefaultBudget;
  unsigned workers = 1;
  InversionMethod method = InversionMethod::automatic;
};

/// Number of matrices (times candidate inverses, for exhaustive search)
/// examined for sizes 1..max_matrix; saturates at UINT64_MAX.
std::uint64_t rational_closure_cost(std::size_t r_size, const FiniteRingTable& s, const RationalClosureOptions& options);

struct RationalClosure {
  std::size_t max_matrix = 0;
  ElementSet set;                  // entries of inverses of all matrices up to max_matrix
  std::vector<ElementSet> by_size; // by_size[k] is the set for bound k + 1
  bool grew = false;               // the last size added something new
  bool monotone = true;
};

/// Union over n <= N of the entries of A^-1 for A in Mat_n(r) invertible over
/// Mat_n(S). Throws BudgetExceededError, carrying the required count, when
/// rational_closure_cost exceeds the budget.
RationalClosure rational_closure_bounded(const ElementSet& r, const FiniteRingTable& s,
                                         const RationalClosureOptions& options);

struct SubsetReport {
  std::string ring;
  std::vector<std::string> elements;  // rendering of each element index
  ElementSet r;
  ElementSet t;
  ElementSet rt_inverse;
  ElementSet d;
  RationalClosure rat;
  std::vector<std::pair<std::string, bool>> checks;

  bool check(const std::string& name) const;
  /// RT^-1 is contained in D, the unit inverses are powers, and, for
  /// commutative R, RT^-1 = D with the bounded rational closure inside it.
  bool holds() const;
};

/// Runs every closure computation for R generated by `gens` inside `s`.
SubsetReport closure_report(const ElementSet& gens, const FiniteRingTable& s, const RationalClosureOptions& options);

/// Reads a generator file body: a JSON list of elements in the ring's
/// encoding. Throws ParseError.
ElementSet parse_generators(const nlohmann::json& j, const FiniteRingTable& s);

nlohmann::ordered_json to_json(const SubsetReport& report);

}  // namespace subinv
