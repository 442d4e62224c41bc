#include "subinv/freealg/free_poly.hpp"

#include <algorithm>
#include <sstream>

#include "subinv/errors.hpp"

namespace subinv {

namespace {

// Each letter moves left past strictly greater letters it commutes with.
// Exact for transitive commutation relations.
Word insertion_normal_form(Word word, const CommutationSpec& spec) {
  for (std::size_t i = 1; i < word.size(); ++i) {
    const GeneratorId x = word[i];
    std::size_t pos = i;
    while (pos > 0 && word[pos - 1] > x && spec.commutes(word[pos - 1], x)) {
      word[pos] = word[pos - 1];
      --pos;
    }
    word[pos] = x;
  }
  return word;
}

// Repeatedly emits the smallest letter that commutes with everything before
// it. Exact for any commutation relation.
Word greedy_normal_form(Word word, const CommutationSpec& spec) {
  Word out;
  out.reserve(word.size());
  while (!word.empty()) {
    std::size_t best = word.size();
    for (std::size_t p = 0; p < word.size(); ++p) {
      if (best != word.size() && word[p] >= word[best]) continue;
      bool movable = true;
      for (std::size_t q = 0; q < p && movable; ++q) movable = spec.commutes(word[q], word[p]);
      if (movable) best = p;
    }
    out.push_back(word[best]);
    word.erase(word.begin() + static_cast<std::ptrdiff_t>(best));
  }
  return out;
}

void check_same_spec(const FreePoly& p, const FreePoly& q) {
  if (p.spec_ptr() != q.spec_ptr() && !(p.spec() == q.spec())) {
    throw MismatchError("polynomials over different commutation specs");
  }
}

}  // namespace

Word normalize_monomial(Word word, const CommutationSpec& spec) {
  if (spec.is_transitive()) return insertion_normal_form(std::move(word), spec);
  return greedy_normal_form(std::move(word), spec);
}

std::string render_word(const Word& word, const CommutationSpec& spec) {
  if (word.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) out += ' ';
    out += spec.name(word[i]);
  }
  return out;
}

Word parse_word(std::string_view text, const CommutationSpec& spec) {
  Word out;
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) {
    if (token == "1" && out.empty()) continue;
    auto id = spec.parse_name(token);
    if (!id) throw ParseError("unknown generator \"" + token + "\"");
    out.push_back(*id);
  }
  return out;
}

FreePoly FreePoly::constant(SpecPtr spec, const mpz_class& c) {
  FreePoly p(std::move(spec));
  p.add_normalized({}, c);
  return p;
}

FreePoly FreePoly::generator(SpecPtr spec, GeneratorId g) {
  if (g >= spec->generator_count()) throw MismatchError("generator id outside the universe");
  FreePoly p(std::move(spec));
  p.add_normalized({g}, 1);
  return p;
}

FreePoly FreePoly::monomial(SpecPtr spec, Word word, const mpz_class& c) {
  FreePoly p(std::move(spec));
  p.add_monomial(std::move(word), c);
  return p;
}

FreePoly FreePoly::from_text(SpecPtr spec, std::initializer_list<std::pair<long, std::string_view>> terms) {
  FreePoly p(spec);
  for (const auto& [c, text] : terms) p.add_monomial(parse_word(text, *spec), c);
  return p;
}

void FreePoly::add_monomial(Word word, const mpz_class& c) {
  add_normalized(normalize_monomial(std::move(word), *spec_), c);
}

void FreePoly::add_normalized(const Word& word, const mpz_class& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(word, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

FreePoly FreePoly::opposite() const {
  FreePoly out(spec_);
  for (const auto& [word, c] : terms_) out.add_monomial(Word(word.rbegin(), word.rend()), c);
  return out;
}

std::string FreePoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [word, c] : terms_) {
    const bool negative = c < 0;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    const mpz_class magnitude = abs(c);
    if (word.empty()) {
      out += magnitude.get_str();
    } else {
      if (magnitude != 1) out += magnitude.get_str() + " ";
      out += render_word(word, *spec_);
    }
    first = false;
  }
  return out;
}

bool operator==(const FreePoly& a, const FreePoly& b) {
  if (a.spec_ != b.spec_ && !(*a.spec_ == *b.spec_)) return false;
  return a.terms_ == b.terms_;
}

FreePoly poly_add(const FreePoly& p, const FreePoly& q) {
  check_same_spec(p, q);
  FreePoly out = p;
  for (const auto& [word, c] : q.terms()) out.add_normalized(word, c);
  return out;
}

FreePoly poly_neg(const FreePoly& p) {
  FreePoly out(p.spec_ptr());
  for (const auto& [word, c] : p.terms()) out.add_normalized(word, -c);
  return out;
}

FreePoly poly_sub(const FreePoly& p, const FreePoly& q) {
  check_same_spec(p, q);
  FreePoly out = p;
  for (const auto& [word, c] : q.terms()) out.add_normalized(word, -c);
  return out;
}

FreePoly poly_mul(const FreePoly& p, const FreePoly& q, std::uint64_t* products_formed) {
  check_same_spec(p, q);
  FreePoly out(p.spec_ptr());
  Word buffer;
  for (const auto& [u, cu] : p.terms()) {
    for (const auto& [v, cv] : q.terms()) {
      buffer.assign(u.begin(), u.end());
      buffer.insert(buffer.end(), v.begin(), v.end());
      out.add_monomial(buffer, cu * cv);
    }
  }
  if (products_formed) *products_formed += static_cast<std::uint64_t>(p.size()) * q.size();
  return out;
}

FreeAlgebra::FreeAlgebra(SpecPtr spec) : spec_(std::move(spec)) {
  const std::size_t g = spec_->generator_count();
  commutative_ = true;
  for (std::size_t x = 0; x < g && commutative_; ++x)
    for (std::size_t y = x + 1; y < g && commutative_; ++y)
      commutative_ = spec_->commutes(static_cast<GeneratorId>(x), static_cast<GeneratorId>(y));
}

FreeAlgebra::FreeAlgebra(SpecPtr spec, std::vector<GeneratorId> support) : spec_(std::move(spec)) {
  commutative_ = true;
  for (std::size_t i = 0; i < support.size() && commutative_; ++i)
    for (std::size_t j = i + 1; j < support.size() && commutative_; ++j)
      commutative_ = support[i] == support[j] || spec_->commutes(support[i], support[j]);
}

}  // namespace subinv
