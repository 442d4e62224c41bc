#include "subinv/matrix/permutation.hpp"

#include <algorithm>
#include <numeric>

#include "subinv/errors.hpp"

namespace subinv {

std::size_t inversion_count(const std::vector<std::size_t>& images) {
  std::size_t count = 0;
  for (std::size_t i = 0; i < images.size(); ++i)
    for (std::size_t j = i + 1; j < images.size(); ++j)
      if (images[i] > images[j]) ++count;
  return count;
}

Permutation::Permutation(std::vector<std::size_t> images) : images_(std::move(images)) {
  std::vector<bool> hit(images_.size(), false);
  for (std::size_t v : images_) {
    if (v >= images_.size() || hit[v]) throw MismatchError("not a permutation");
    hit[v] = true;
  }
  sign_ = inversion_count(images_) % 2 == 0 ? 1 : -1;
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<std::size_t> images(n);
  std::iota(images.begin(), images.end(), std::size_t{0});
  return Permutation(std::move(images), 1);
}

std::string Permutation::to_string() const {
  std::string out = "(";
  for (std::size_t t = 0; t < images_.size(); ++t) {
    if (t) out += " ";
    out += std::to_string(images_[t] + 1);
  }
  return out + ")";
}

PermutationRange::iterator::iterator(std::size_t n) : current_(Permutation::identity(n)), done_(false) {}

PermutationRange::iterator& PermutationRange::iterator::operator++() {
  std::vector<std::size_t> next = current_.images_;
  if (!std::next_permutation(next.begin(), next.end())) {
    done_ = true;
    return *this;
  }
  const int sign = inversion_count(next) % 2 == 0 ? 1 : -1;
  current_ = Permutation(std::move(next), sign);
  return *this;
}

std::vector<Permutation> all_permutations(std::size_t n) {
  std::vector<Permutation> out;
  for (const Permutation& p : permutations_with_sign(n)) out.push_back(p);
  return out;
}

std::uint64_t factorial(std::size_t n) {
  std::uint64_t f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace subinv
