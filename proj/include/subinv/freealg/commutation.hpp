#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace subinv {

/// Index of a generator a_ij or b_ij. All a-entries come first, each kind
/// in row-major order, so comparing ids compares generators.
using GeneratorId = std::uint8_t;

enum class GeneratorKind : std::uint8_t { a_entry, b_entry };

/// Symbolic matrix entry; row and col are 1-based.
struct Generator {
  GeneratorKind kind;
  std::size_t row;
  std::size_t col;

  friend bool operator==(const Generator&, const Generator&) = default;
};

/// Symmetric "these two generators commute" relation over the universe
/// {a_ij, b_ij : 1 <= i, j <= n}.
class CommutationSpec {
 public:
  static constexpr std::size_t kMaxDimension = 11;  // 2 n^2 ids must fit a byte

  /// a-entries commute with each other; nothing else commutes.
  static std::shared_ptr<const CommutationSpec> proof_replay(std::size_t n);
  /// Every pair commutes: ordinary commutative polynomials.
  static std::shared_ptr<const CommutationSpec> fully_commuting(std::size_t n);
  /// Exactly the listed unordered pairs commute.
  static std::shared_ptr<const CommutationSpec> from_pairs(
      std::size_t n, const std::vector<std::pair<GeneratorId, GeneratorId>>& pairs);

  std::size_t dimension() const noexcept { return n_; }
  std::size_t generator_count() const noexcept { return 2 * n_ * n_; }

  bool commutes(GeneratorId x, GeneratorId y) const { return table_[x * generator_count() + y]; }

  /// True when commuting is transitive on distinct generators, i.e. the
  /// commutation graph is a disjoint union of cliques. Stable insertion
  /// then yields the lexicographically least representative.
  bool is_transitive() const noexcept { return transitive_; }

  GeneratorId id(const Generator& g) const;
  Generator generator(GeneratorId id) const;

  /// "a21", "b12"; for n >= 10 the indices are comma separated ("a10,3").
  std::string name(GeneratorId id) const;
  std::optional<GeneratorId> parse_name(std::string_view name) const;

  friend bool operator==(const CommutationSpec& a, const CommutationSpec& b) {
    return a.n_ == b.n_ && a.table_ == b.table_;
  }

 private:
  CommutationSpec(std::size_t n, std::vector<bool> table);

  std::size_t n_;
  std::vector<bool> table_;
  bool transitive_ = false;
};

using SpecPtr = std::shared_ptr<const CommutationSpec>;

}  // namespace subinv
