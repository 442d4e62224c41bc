#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "subinv/freealg/commutation.hpp"
#include "subinv/ring/ring_like.hpp"

namespace subinv {

/// A word in the generators; a monomial once normalized.
using Word = std::vector<GeneratorId>;

/// Lexicographically least word reachable from `word` by swapping adjacent
/// commuting letters.
Word normalize_monomial(Word word, const CommutationSpec& spec);

/// Space-separated generator names, "1" for the empty word.
std::string render_word(const Word& word, const CommutationSpec& spec);

/// Inverse of render_word (without normalizing). Throws ParseError.
Word parse_word(std::string_view text, const CommutationSpec& spec);

/// Integer polynomial in the partially commutative free algebra.
///
/// Terms live in a canonical ordered map from normalized words to nonzero
/// coefficients, so two polynomials are equal iff their maps are.
class FreePoly {
 public:
  using Terms = std::map<Word, mpz_class>;

  explicit FreePoly(SpecPtr spec) : spec_(std::move(spec)) {}

  static FreePoly constant(SpecPtr spec, const mpz_class& c);
  static FreePoly generator(SpecPtr spec, GeneratorId g);
  /// Normalizes `word` first.
  static FreePoly monomial(SpecPtr spec, Word word, const mpz_class& c = 1);
  /// Sum of c * word for textual words such as {1, "a21 a11 b11 b12"}.
  static FreePoly from_text(SpecPtr spec, std::initializer_list<std::pair<long, std::string_view>> terms);

  const CommutationSpec& spec() const noexcept { return *spec_; }
  const SpecPtr& spec_ptr() const noexcept { return spec_; }
  const Terms& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  /// Adds c * word, normalizing the word.
  void add_monomial(Word word, const mpz_class& c);
  /// Adds c * word for a word already in normal form.
  void add_normalized(const Word& word, const mpz_class& c);

  /// Image in the opposite algebra: every word reversed, then renormalized.
  FreePoly opposite() const;

  std::string to_string() const;

  friend bool operator==(const FreePoly& a, const FreePoly& b);

 private:
  SpecPtr spec_;
  Terms terms_;
};

/// Throws MismatchError when the commutation specs differ.
FreePoly poly_add(const FreePoly& p, const FreePoly& q);
FreePoly poly_neg(const FreePoly& p);
FreePoly poly_sub(const FreePoly& p, const FreePoly& q);

/// Bilinear extension of concatenation. When `products_formed` is given it is
/// increased by the number of word products formed, before any merging.
FreePoly poly_mul(const FreePoly& p, const FreePoly& q, std::uint64_t* products_formed = nullptr);

inline FreePoly operator+(const FreePoly& p, const FreePoly& q) { return poly_add(p, q); }
inline FreePoly operator-(const FreePoly& p, const FreePoly& q) { return poly_sub(p, q); }
inline FreePoly operator-(const FreePoly& p) { return poly_neg(p); }
inline FreePoly operator*(const FreePoly& p, const FreePoly& q) { return poly_mul(p, q); }

/// The free algebra as a ring context, optionally restricted to a support set
/// of generators. Restricting to mutually commuting generators (say, the
/// a-entries under the proof-replay spec) gives a commutative subalgebra in
/// which determinants make sense.
class FreeAlgebra {
 public:
  using value_type = FreePoly;

  explicit FreeAlgebra(SpecPtr spec);
  FreeAlgebra(SpecPtr spec, std::vector<GeneratorId> support);

  const SpecPtr& spec() const noexcept { return spec_; }

  FreePoly zero() const { return FreePoly(spec_); }
  FreePoly one() const { return FreePoly::constant(spec_, 1); }
  FreePoly add(const FreePoly& a, const FreePoly& b) const { return poly_add(a, b); }
  FreePoly neg(const FreePoly& a) const { return poly_neg(a); }
  FreePoly mul(const FreePoly& a, const FreePoly& b) const { return poly_mul(a, b); }
  bool equal(const FreePoly& a, const FreePoly& b) const { return a == b; }
  bool is_commutative() const noexcept { return commutative_; }

  FreePoly gen(GeneratorId g) const { return FreePoly::generator(spec_, g); }

 private:
  SpecPtr spec_;
  bool commutative_;
};

static_assert(RingLike<FreeAlgebra>);

}  // namespace subinv
