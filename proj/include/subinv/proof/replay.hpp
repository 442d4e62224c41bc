#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

#include <json.hpp>

#include "subinv/freealg/free_poly.hpp"
#include "subinv/matrix/matrix.hpp"
#include "subinv/matrix/permutation.hpp"

namespace subinv {

using SymbolicMatrix = Matrix<FreeAlgebra>;

enum class Side { right, left };

std::string_view to_string(Side side);
std::optional<Side> parse_side(std::string_view text);

/// Generic matrices A = (a_ij) and B = (b_ij) under the proof-replay spec:
/// the a_ij commute with each other, nothing else commutes.
struct SymbolicSetup {
  std::size_t n;
  SpecPtr spec;
  SymbolicMatrix a;  // over the commutative subalgebra generated by the a_ij
  SymbolicMatrix b;  // over the whole algebra

  static SymbolicSetup make(std::size_t n);
};

/// Matrix of generators of one kind over the given algebra context.
SymbolicMatrix symbolic_matrix(const FreeAlgebra& algebra, GeneratorKind kind);

/// d_{sigma(1),1} d_{sigma(2),2} ... d_{sigma(n),n} with d_ij = sum_k a_ik b_kj,
/// built from the inside out: at step t the accumulated product is multiplied
/// by a_{sigma(t),k} on the left and b_{k,t} on the right, summed over k.
/// `raw_terms`, when given, grows by the number of monomials formed in the
/// final step (n^n).
FreePoly expand_sigma_product(const SymbolicSetup& setup, const Permutation& sigma,
                              std::uint64_t* raw_terms = nullptr);

struct Expansion {
  FreePoly poly;
  std::uint64_t raw_terms = 0;
};

/// sum_sigma sgn(sigma) d_{sigma(1),1} ... d_{sigma(n),n} for AB = I (right),
/// or the same computation for BA = I carried out in the opposite algebra
/// (left). The per-sigma products are split across `workers` threads; the
/// result does not depend on the split.
Expansion expand_identity_det(const SymbolicSetup& setup, Side side, unsigned workers = 1);

/// det(A) * ocdet_fwd(B) (right) or ocdet_left(B) * det(A) (left).
FreePoly target_poly(const SymbolicSetup& setup, Side side);

/// n! * n^n, the number of monomials formed before cancellation.
std::uint64_t replay_cost(std::size_t n);

struct ReplayOptions {
  std::size_t max_n = 5;
  unsigned workers = 1;
};

struct ReplayReport {
  std::size_t n = 0;
  Side side = Side::right;
  std::uint64_t raw_terms = 0;
  std::size_t p_terms = 0;
  std::size_t q_terms = 0;
  bool equal = false;
  std::int64_t millis = 0;

  friend bool operator==(const ReplayReport&, const ReplayReport&) = default;
};

/// Expands both sides and compares them structurally. Throws
/// BudgetExceededError when n > options.max_n.
ReplayReport verify_theorem(std::size_t n, Side side, const ReplayOptions& options = {});

nlohmann::ordered_json to_json(const ReplayReport& report);
ReplayReport replay_report_from_json(const nlohmann::json& j);

/// A adj(A) = adj(A) A = det(A) I for generic A over commuting generators.
bool verify_adjugate_identity(std::size_t n);

}  // namespace subinv
