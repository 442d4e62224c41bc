#include "subinv/freealg/commutation.hpp"

#include <charconv>

#include "subinv/errors.hpp"

namespace subinv {

namespace {

void check_dimension(std::size_t n) {
  if (n == 0 || n > CommutationSpec::kMaxDimension) {
    throw MismatchError("generator universe needs 1 <= n <= " + std::to_string(CommutationSpec::kMaxDimension));
  }
}

}  // namespace

CommutationSpec::CommutationSpec(std::size_t n, std::vector<bool> table) : n_(n), table_(std::move(table)) {
  const std::size_t g = generator_count();
  transitive_ = true;
  for (std::size_t x = 0; x < g && transitive_; ++x) {
    for (std::size_t y = 0; y < g && transitive_; ++y) {
      if (x == y || !table_[x * g + y]) continue;
      for (std::size_t z = 0; z < g; ++z) {
        if (z != x && table_[y * g + z] && !table_[x * g + z]) {
          transitive_ = false;
          break;
        }
      }
    }
  }
}

std::shared_ptr<const CommutationSpec> CommutationSpec::proof_replay(std::size_t n) {
  check_dimension(n);
  const std::size_t g = 2 * n * n;
  const std::size_t a_count = n * n;
  std::vector<bool> table(g * g, false);
  for (std::size_t x = 0; x < a_count; ++x)
    for (std::size_t y = 0; y < a_count; ++y) table[x * g + y] = (x != y);
  return std::shared_ptr<const CommutationSpec>(new CommutationSpec(n, std::move(table)));
}

std::shared_ptr<const CommutationSpec> CommutationSpec::fully_commuting(std::size_t n) {
  check_dimension(n);
  const std::size_t g = 2 * n * n;
  std::vector<bool> table(g * g, true);
  for (std::size_t x = 0; x < g; ++x) table[x * g + x] = false;
  return std::shared_ptr<const CommutationSpec>(new CommutationSpec(n, std::move(table)));
}

std::shared_ptr<const CommutationSpec> CommutationSpec::from_pairs(
    std::size_t n, const std::vector<std::pair<GeneratorId, GeneratorId>>& pairs) {
  check_dimension(n);
  const std::size_t g = 2 * n * n;
  std::vector<bool> table(g * g, false);
  for (auto [x, y] : pairs) {
    if (x >= g || y >= g) throw MismatchError("generator id outside the universe");
    if (x == y) continue;
    table[x * g + y] = true;
    table[y * g + x] = true;
  }
  return std::shared_ptr<const CommutationSpec>(new CommutationSpec(n, std::move(table)));
}

GeneratorId CommutationSpec::id(const Generator& g) const {
  if (g.row < 1 || g.row > n_ || g.col < 1 || g.col > n_) throw MismatchError("generator index out of range");
  const std::size_t offset = g.kind == GeneratorKind::a_entry ? 0 : n_ * n_;
  return static_cast<GeneratorId>(offset + (g.row - 1) * n_ + (g.col - 1));
}

Generator CommutationSpec::generator(GeneratorId id) const {
  if (id >= generator_count()) throw MismatchError("generator id outside the universe");
  const std::size_t nn = n_ * n_;
  const GeneratorKind kind = id < nn ? GeneratorKind::a_entry : GeneratorKind::b_entry;
  const std::size_t local = id % nn;
  return {kind, local / n_ + 1, local % n_ + 1};
}

std::string CommutationSpec::name(GeneratorId id) const {
  const Generator g = generator(id);
  std::string out = g.kind == GeneratorKind::a_entry ? "a" : "b";
  out += std::to_string(g.row);
  if (n_ >= 10) out += ",";
  out += std::to_string(g.col);
  return out;
}

std::optional<GeneratorId> CommutationSpec::parse_name(std::string_view text) const {
  if (text.size() < 3 || (text[0] != 'a' && text[0] != 'b')) return std::nullopt;
  const GeneratorKind kind = text[0] == 'a' ? GeneratorKind::a_entry : GeneratorKind::b_entry;
  std::string_view digits = text.substr(1);
  std::size_t row = 0;
  std::size_t col = 0;
  auto parse_index = [](std::string_view s, std::size_t& out) {
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc{} && ptr == s.data() + s.size();
  };
  if (n_ >= 10) {
    const auto comma = digits.find(',');
    if (comma == std::string_view::npos) return std::nullopt;
    if (!parse_index(digits.substr(0, comma), row) || !parse_index(digits.substr(comma + 1), col)) return std::nullopt;
  } else {
    if (digits.size() != 2 || !parse_index(digits.substr(0, 1), row) || !parse_index(digits.substr(1), col)) {
      return std::nullopt;
    }
  }
  if (row < 1 || row > n_ || col < 1 || col > n_) return std::nullopt;
  return id({kind, row, col});
}

}  // namespace subinv
