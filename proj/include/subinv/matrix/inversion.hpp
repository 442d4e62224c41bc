#pragma once

#include <memory>
#include <optional>

#include "subinv/matrix/determinant.hpp"
#include "subinv/matrix/matrix.hpp"
#include "subinv/ring/embedding.hpp"
#include "subinv/ring/fraction.hpp"
#include "subinv/ring/ring.hpp"

namespace subinv {

using RingMatrix = Matrix<RingHandle>;
using FractionMatrix = Matrix<Localization>;

/// A^-1 over a commutative ring: adj(A) * det(A)^-1 when det(A) is a unit,
/// nullopt otherwise. The empty matrix is its own inverse.
std::optional<RingMatrix> invert_commutative(const RingMatrix& a);

/// A^-1 inside R T^-1: entry (i, j) is the formal fraction adj(A)_{ij} / det(A).
/// Throws NotInvertibleError("not invertible over this localization") when
/// det(A) is not in T, NotCommutativeError when R is not commutative.
FractionMatrix invert_via_adjugate(const RingMatrix& a,
                                   std::shared_ptr<const DenominatorSet> denominators);

/// Lifts every entry of a matrix over R into the localization.
FractionMatrix to_fractions(const RingMatrix& a, const Localization& loc);

/// Identifies Mat_n(Mat_k(base)) with Mat_{nk}(base). Throws MismatchError
/// when the entry ring is not a matrix ring.
RingMatrix flatten(const RingMatrix& m);

/// Inverse of flatten: cuts an nk x nk matrix over `block_ring`'s base into
/// k x k blocks. Throws MismatchError when nk is not divisible by k.
RingMatrix unflatten(const RingMatrix& m, const RingHandle& block_ring);

/// Entrywise image of a matrix under a ring embedding.
RingMatrix embed_matrix(const RingMatrix& m, const Embedding& embedding);

}  // namespace subinv
