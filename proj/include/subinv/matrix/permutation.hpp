#pragma once

#include <cstddef>
#include <cstdint>
#include <iterator>
#include <string>
#include <vector>

namespace subinv {

/// Permutation of {0, ..., n-1}; `images()[t]` is the image of t.
///
/// Rendered 1-based as (i_1 ... i_n) with sigma(t) = i_t.
class Permutation {
 public:
  Permutation() = default;

  /// Throws MismatchError unless `images` is a bijection of {0..n-1}.
  explicit Permutation(std::vector<std::size_t> images);

  static Permutation identity(std::size_t n);

  std::size_t size() const noexcept { return images_.size(); }
  std::size_t operator()(std::size_t t) const { return images_[t]; }
  const std::vector<std::size_t>& images() const noexcept { return images_; }

  /// +1 or -1, the parity of the inversion count.
  int sign() const noexcept { return sign_; }

  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  friend class PermutationRange;
  Permutation(std::vector<std::size_t> images, int sign) : images_(std::move(images)), sign_(sign) {}

  std::vector<std::size_t> images_;
  int sign_ = 1;
};

std::size_t inversion_count(const std::vector<std::size_t>& images);

/// All n! permutations in lexicographic order of their images.
/// n = 0 yields the single empty permutation.
class PermutationRange {
 public:
  class iterator {
   public:
    using value_type = Permutation;
    using difference_type = std::ptrdiff_t;
    using reference = const Permutation&;
    using pointer = const Permutation*;
    using iterator_category = std::input_iterator_tag;

    iterator() = default;

    reference operator*() const { return current_; }
    pointer operator->() const { return &current_; }
    iterator& operator++();
    iterator operator++(int) {
      iterator copy = *this;
      ++*this;
      return copy;
    }
    friend bool operator==(const iterator& a, const iterator& b) { return a.done_ == b.done_; }

   private:
    friend class PermutationRange;
    explicit iterator(std::size_t n);

    Permutation current_;
    bool done_ = true;
  };

  explicit PermutationRange(std::size_t n) : n_(n) {}

  iterator begin() const { return iterator(n_); }
  iterator end() const { return iterator(); }

 private:
  std::size_t n_;
};

inline PermutationRange permutations_with_sign(std::size_t n) { return PermutationRange(n); }

/// Materialized permutation list, same order as the range.
std::vector<Permutation> all_permutations(std::size_t n);

std::uint64_t factorial(std::size_t n);

}  // namespace subinv
