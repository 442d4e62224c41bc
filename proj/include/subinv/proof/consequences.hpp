#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "subinv/matrix/inversion.hpp"

namespace subinv {

/// Outcome of checking the consequences of the theorem for one matrix A over
/// a commutative subring R of S. When `invertible` is false A has no inverse
/// over S and no identity was checked.
struct ConsequenceReport {
  bool invertible = false;

  bool det_s_is_one = false;       // det(A) s = 1 with s = ocdet_fwd(B)
  bool s_det_is_one = false;       // s det(A) = 1
  bool left_det_is_one = false;    // ocdet_left(B) det(A) = 1
  bool fwd_equals_left = false;    // ocdet_fwd(B) = ocdet_left(B)
  bool b_det_is_adj = false;       // B det(A) = adj(A)
  bool det_b_is_adj = false;       // det(A) B = adj(A)
  bool b_is_adj_s = false;         // B = adj(A) s
  bool b_is_s_adj = false;         // B = s adj(A)
  bool entries_in_rt_inverse = false;  // B_ij = r det(A)^-1 with r in R
  bool b_is_inverse = false;       // AB = BA = I over S

  /// Names of the checks, in report order, paired with their outcomes.
  std::vector<std::pair<std::string, bool>> checks() const;

  /// True when A is not invertible or every check passed.
  bool all_hold() const;
};

/// Checks the consequences for A over `r` viewed inside `s` through the
/// standard embedding. B is computed independently of the adjugate: A is
/// flattened to a matrix over the base of S and inverted there by gcd
/// elimination (zmod base) or by adjugate over the base (any other
/// commutative base).
///
/// Throws MismatchError when S is not a matrix ring over a commutative base or
/// A does not live over `r`, NotCommutativeError when `r` is not commutative.
ConsequenceReport verify_consequences(const RingMatrix& a, const RingHandle& r, const RingHandle& s);

struct SweepOptions {
  std::uint64_t modulus = 2;
  std::size_t n = 1;
  std::size_t samples = 200;
  std::uint64_t seed = 1;
  unsigned workers = 1;
};

struct SweepReport {
  std::uint64_t modulus = 0;
  std::size_t n = 0;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  std::size_t invertible = 0;
  std::size_t violations = 0;
  std::vector<std::size_t> violating_samples;

  friend bool operator==(const SweepReport&, const SweepReport&) = default;
};

/// Draws `samples` random n x n matrices over dualnum:zmod:m and checks each
/// inside mat:2:zmod:m. Samples are drawn up front from one seeded generator,
/// so the report does not depend on the worker count.
SweepReport consequences_sweep(const SweepOptions& options);

nlohmann::ordered_json to_json(const SweepReport& report);
SweepReport sweep_report_from_json(const nlohmann::json& j);

}  // namespace subinv
