#include "subinv/ring/rings.hpp"

#include <limits>

#include "subinv/errors.hpp"
#include "subinv/matrix/inversion.hpp"
#include "subinv/ring/modular_int.hpp"

namespace subinv {

namespace {

constexpr std::uint64_t kMaxEnumeration = std::uint64_t{1} << 24;

nlohmann::json integer_to_json(const mpz_class& v) {
  if (v.fits_slong_p()) return static_cast<std::int64_t>(v.get_si());
  return v.get_str();
}

mpz_class integer_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return mpz_class(std::to_string(j.get<std::uint64_t>()));
    return mpz_class(static_cast<long>(j.get<std::int64_t>()));
  }
  if (j.is_string()) {
    const auto& s = j.get_ref<const std::string&>();
    const std::size_t digits_from = (!s.empty() && s[0] == '-') ? 1 : 0;
    if (s.size() == digits_from || s.find_first_not_of("0123456789", digits_from) != std::string::npos) {
      throw ParseError("not an integer literal: \"" + s + "\"");
    }
    return mpz_class(s);
  }
  throw ParseError("expected an integer, got " + j.dump());
}

std::optional<std::uint64_t> checked_pow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t out = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (base != 0 && out > std::numeric_limits<std::uint64_t>::max() / base) return std::nullopt;
    out *= base;
  }
  return out;
}

std::vector<Element> enumerate_tuples(const std::vector<Element>& alphabet, std::size_t length) {
  const auto count = checked_pow(alphabet.size(), length);
  if (!count || *count > kMaxEnumeration) {
    throw BudgetExceededError("ring too large to enumerate", count.value_or(std::numeric_limits<std::uint64_t>::max()),
                              kMaxEnumeration);
  }
  std::vector<Element> out;
  out.reserve(*count);
  std::vector<std::size_t> digits(length, 0);
  for (std::uint64_t idx = 0; idx < *count; ++idx) {
    Element::Parts parts;
    parts.reserve(length);
    for (std::size_t d : digits) parts.push_back(alphabet[d]);
    out.emplace_back(std::move(parts));
    for (std::size_t pos = length; pos-- > 0;) {
      if (++digits[pos] < alphabet.size()) break;
      digits[pos] = 0;
    }
  }
  return out;
}

}  // namespace

std::vector<Element> Ring::elements() const {
  throw MismatchError("ring " + descriptor() + " is not finite");
}

Element power(const RingHandle& ring, const Element& x, std::uint64_t exponent) {
  Element result = ring.one();
  Element base = x;
  while (exponent > 0) {
    if (exponent & 1U) result = ring.mul(result, base);
    exponent >>= 1U;
    if (exponent > 0) base = ring.mul(base, base);
  }
  return result;
}

// ---------------------------------------------------------------- integers

Element IntegerRing::add(const Element& a, const Element& b) const {
  return Element(mpz_class(a.scalar() + b.scalar()));
}

Element IntegerRing::neg(const Element& a) const { return Element(mpz_class(-a.scalar())); }

Element IntegerRing::mul(const Element& a, const Element& b) const {
  return Element(mpz_class(a.scalar() * b.scalar()));
}

bool IntegerRing::equal(const Element& a, const Element& b) const { return a.scalar() == b.scalar(); }

std::optional<Element> IntegerRing::try_invert(const Element& a) const {
  if (a.scalar() == 1 || a.scalar() == -1) return a;
  return std::nullopt;
}

Element IntegerRing::random(std::mt19937_64& rng) const {
  return Element(static_cast<long>(rng() % 41) - 20);
}

nlohmann::json IntegerRing::to_json(const Element& a) const { return integer_to_json(a.scalar()); }

Element IntegerRing::from_json(const nlohmann::json& j) const { return Element(integer_from_json(j)); }

std::string IntegerRing::render(const Element& a) const { return a.scalar().get_str(); }

// ------------------------------------------------------------------ Z / m

ModularRing::ModularRing(mpz_class modulus) : modulus_(std::move(modulus)) {
  if (modulus_ < 1) throw ParseError("zmod modulus must be positive");
}

std::string ModularRing::descriptor() const { return "zmod:" + modulus_.get_str(); }

Element ModularRing::one() const { return Element(reduce_mod(1, modulus_)); }

Element ModularRing::add(const Element& a, const Element& b) const {
  return Element((ModularInt(a.scalar(), modulus_) + ModularInt(b.scalar(), modulus_)).value());
}

Element ModularRing::neg(const Element& a) const {
  return Element((-ModularInt(a.scalar(), modulus_)).value());
}

Element ModularRing::mul(const Element& a, const Element& b) const {
  return Element((ModularInt(a.scalar(), modulus_) * ModularInt(b.scalar(), modulus_)).value());
}

bool ModularRing::equal(const Element& a, const Element& b) const {
  return reduce_mod(a.scalar() - b.scalar(), modulus_) == 0;
}

std::optional<Element> ModularRing::try_invert(const Element& a) const {
  auto inv = ModularInt(a.scalar(), modulus_).inverse();
  if (!inv) return std::nullopt;
  return Element(inv->value());
}

Element ModularRing::from_integer(const mpz_class& value) const {
  return Element(reduce_mod(value, modulus_));
}

bool ModularRing::is_valid(const Element& a) const {
  return a.is_scalar() && a.scalar() >= 0 && a.scalar() < modulus_;
}

std::optional<std::uint64_t> ModularRing::cardinality() const {
  if (!modulus_.fits_ulong_p()) return std::nullopt;
  return modulus_.get_ui();
}

std::vector<Element> ModularRing::elements() const {
  const auto count = cardinality();
  if (!count || *count > kMaxEnumeration) {
    throw BudgetExceededError("ring too large to enumerate", count.value_or(0), kMaxEnumeration);
  }
  std::vector<Element> out;
  out.reserve(*count);
  for (std::uint64_t v = 0; v < *count; ++v) out.emplace_back(static_cast<long>(v));
  return out;
}

Element ModularRing::random(std::mt19937_64& rng) const {
  if (modulus_.fits_ulong_p()) return Element(mpz_class(rng() % modulus_.get_ui()));
  mpz_class r(static_cast<unsigned long>(rng()));
  return Element(reduce_mod(r, modulus_));
}

nlohmann::json ModularRing::to_json(const Element& a) const { return integer_to_json(a.scalar()); }

Element ModularRing::from_json(const nlohmann::json& j) const {
  return Element(reduce_mod(integer_from_json(j), modulus_));
}

std::string ModularRing::render(const Element& a) const { return a.scalar().get_str(); }

// ---------------------------------------------------------- Mat_k(base)

MatrixRing::MatrixRing(RingHandle base, std::size_t k) : base_(std::move(base)), k_(k) {
  if (k_ == 0) throw ParseError("matrix ring block size must be at least 1");
}

std::string MatrixRing::descriptor() const {
  return "mat:" + std::to_string(k_) + ":" + base_.descriptor();
}

bool MatrixRing::is_commutative() const { return k_ == 1 && base_.is_commutative(); }

void MatrixRing::check_shape(const Element& a) const {
  if (a.is_scalar() || a.parts().size() != k_ * k_) {
    throw MismatchError("expected a " + std::to_string(k_) + "x" + std::to_string(k_) +
                        " matrix-ring element");
  }
}

const Element& MatrixRing::entry(const Element& a, std::size_t i, std::size_t j) const {
  check_shape(a);
  return a.parts()[i * k_ + j];
}

Element MatrixRing::zero() const { return Element(Element::Parts(k_ * k_, base_.zero())); }

Element MatrixRing::one() const {
  Element::Parts parts(k_ * k_, base_.zero());
  for (std::size_t i = 0; i < k_; ++i) parts[i * k_ + i] = base_.one();
  return Element(std::move(parts));
}

Element MatrixRing::add(const Element& a, const Element& b) const {
  check_shape(a);
  check_shape(b);
  Element::Parts parts;
  parts.reserve(k_ * k_);
  for (std::size_t i = 0; i < k_ * k_; ++i) parts.push_back(base_.add(a.parts()[i], b.parts()[i]));
  return Element(std::move(parts));
}

Element MatrixRing::neg(const Element& a) const {
  check_shape(a);
  Element::Parts parts;
  parts.reserve(k_ * k_);
  for (const Element& e : a.parts()) parts.push_back(base_.neg(e));
  return Element(std::move(parts));
}

Element MatrixRing::mul(const Element& a, const Element& b) const {
  check_shape(a);
  check_shape(b);
  Element::Parts parts;
  parts.reserve(k_ * k_);
  for (std::size_t i = 0; i < k_; ++i) {
    for (std::size_t j = 0; j < k_; ++j) {
      Element acc = base_.zero();
      for (std::size_t l = 0; l < k_; ++l) {
        acc = base_.add(acc, base_.mul(a.parts()[i * k_ + l], b.parts()[l * k_ + j]));
      }
      parts.push_back(std::move(acc));
    }
  }
  return Element(std::move(parts));
}

bool MatrixRing::equal(const Element& a, const Element& b) const {
  check_shape(a);
  check_shape(b);
  for (std::size_t i = 0; i < k_ * k_; ++i) {
    if (!base_.equal(a.parts()[i], b.parts()[i])) return false;
  }
  return true;
}

std::optional<Element> MatrixRing::try_invert(const Element& a) const {
  check_shape(a);
  RingMatrix m(base_, k_, a.parts());
  if (base_.is_commutative()) {
    auto inv = invert_commutative(m);
    if (!inv) return std::nullopt;
    return Element(inv->entries());
  }
  if (const auto* inner = base_.as<MatrixRing>()) {
    RingMatrix flat = flatten(m);
    MatrixRing wide(inner->base(), flat.size());
    auto inv = wide.try_invert(Element(flat.entries()));
    if (!inv) return std::nullopt;
    RingMatrix blocks = unflatten(RingMatrix(inner->base(), flat.size(), inv->parts()), base_);
    return Element(blocks.entries());
  }
  throw NotCommutativeError("matrix inversion over the noncommutative ring " + base_.descriptor() +
                            " is not supported");
}

Element MatrixRing::from_integer(const mpz_class& value) const {
  Element::Parts parts(k_ * k_, base_.zero());
  for (std::size_t i = 0; i < k_; ++i) parts[i * k_ + i] = base_->from_integer(value);
  return Element(std::move(parts));
}

bool MatrixRing::is_valid(const Element& a) const {
  if (a.is_scalar() || a.parts().size() != k_ * k_) return false;
  for (const Element& e : a.parts()) {
    if (!base_->is_valid(e)) return false;
  }
  return true;
}

std::optional<std::uint64_t> MatrixRing::cardinality() const {
  auto b = base_->cardinality();
  if (!b) return std::nullopt;
  return checked_pow(*b, k_ * k_);
}

std::vector<Element> MatrixRing::elements() const { return enumerate_tuples(base_->elements(), k_ * k_); }

Element MatrixRing::random(std::mt19937_64& rng) const {
  Element::Parts parts;
  parts.reserve(k_ * k_);
  for (std::size_t i = 0; i < k_ * k_; ++i) parts.push_back(base_->random(rng));
  return Element(std::move(parts));
}

nlohmann::json MatrixRing::to_json(const Element& a) const {
  check_shape(a);
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < k_; ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < k_; ++j) row.push_back(base_->to_json(a.parts()[i * k_ + j]));
    rows.push_back(std::move(row));
  }
  return rows;
}

Element MatrixRing::from_json(const nlohmann::json& j) const {
  if (!j.is_array() || j.size() != k_) {
    throw ParseError("expected " + std::to_string(k_) + " rows for " + descriptor() + ", got " + j.dump());
  }
  Element::Parts parts;
  parts.reserve(k_ * k_);
  for (const auto& row : j) {
    if (!row.is_array() || row.size() != k_) {
      throw ParseError("expected a row of " + std::to_string(k_) + " entries, got " + row.dump());
    }
    for (const auto& e : row) parts.push_back(base_->from_json(e));
  }
  return Element(std::move(parts));
}

std::string MatrixRing::render(const Element& a) const {
  check_shape(a);
  std::string out = "[";
  for (std::size_t i = 0; i < k_; ++i) {
    out += i ? ",[" : "[";
    for (std::size_t j = 0; j < k_; ++j) {
      if (j) out += ",";
      out += base_->render(a.parts()[i * k_ + j]);
    }
    out += "]";
  }
  return out + "]";
}

// ----------------------------------------------------------- dual numbers

DualNumberRing::DualNumberRing(RingHandle base) : base_(std::move(base)) {}

std::string DualNumberRing::descriptor() const { return "dualnum:" + base_.descriptor(); }

void DualNumberRing::check_shape(const Element& a) const {
  if (a.is_scalar() || a.parts().size() != 2) throw MismatchError("expected a dual number (x, y)");
}

Element DualNumberRing::make(Element x, Element y) const { return Element::of({std::move(x), std::move(y)}); }

Element DualNumberRing::zero() const { return make(base_.zero(), base_.zero()); }
Element DualNumberRing::one() const { return make(base_.one(), base_.zero()); }

Element DualNumberRing::add(const Element& a, const Element& b) const {
  check_shape(a);
  check_shape(b);
  return make(base_.add(a.parts()[0], b.parts()[0]), base_.add(a.parts()[1], b.parts()[1]));
}

Element DualNumberRing::neg(const Element& a) const {
  check_shape(a);
  return make(base_.neg(a.parts()[0]), base_.neg(a.parts()[1]));
}

// [[x1,y1],[0,x1]] [[x2,y2],[0,x2]] = [[x1x2, x1y2 + y1x2],[0, x1x2]]
Element DualNumberRing::mul(const Element& a, const Element& b) const {
  check_shape(a);
  check_shape(b);
  const Element& x1 = a.parts()[0];
  const Element& y1 = a.parts()[1];
  const Element& x2 = b.parts()[0];
  const Element& y2 = b.parts()[1];
  return make(base_.mul(x1, x2), base_.add(base_.mul(x1, y2), base_.mul(y1, x2)));
}

bool DualNumberRing::equal(const Element& a, const Element& b) const {
  check_shape(a);
  check_shape(b);
  return base_.equal(a.parts()[0], b.parts()[0]) && base_.equal(a.parts()[1], b.parts()[1]);
}

// (x + y eps)^-1 = x^-1 - x^-1 y x^-1 eps
std::optional<Element> DualNumberRing::try_invert(const Element& a) const {
  check_shape(a);
  auto xinv = base_.try_invert(a.parts()[0]);
  if (!xinv) return std::nullopt;
  Element y = base_.neg(base_.mul(base_.mul(*xinv, a.parts()[1]), *xinv));
  return make(*xinv, std::move(y));
}

Element DualNumberRing::from_integer(const mpz_class& value) const {
  return make(base_->from_integer(value), base_.zero());
}

bool DualNumberRing::is_valid(const Element& a) const {
  return !a.is_scalar() && a.parts().size() == 2 && base_->is_valid(a.parts()[0]) &&
         base_->is_valid(a.parts()[1]);
}

std::optional<std::uint64_t> DualNumberRing::cardinality() const {
  auto b = base_->cardinality();
  if (!b) return std::nullopt;
  return checked_pow(*b, 2);
}

std::vector<Element> DualNumberRing::elements() const { return enumerate_tuples(base_->elements(), 2); }

Element DualNumberRing::random(std::mt19937_64& rng) const {
  Element x = base_->random(rng);
  Element y = base_->random(rng);
  return make(std::move(x), std::move(y));
}

nlohmann::json DualNumberRing::to_json(const Element& a) const {
  check_shape(a);
  return nlohmann::json::array({base_->to_json(a.parts()[0]), base_->to_json(a.parts()[1])});
}

Element DualNumberRing::from_json(const nlohmann::json& j) const {
  if (!j.is_array() || j.size() != 2) throw ParseError("expected a dual number [x, y], got " + j.dump());
  return make(base_->from_json(j[0]), base_->from_json(j[1]));
}

std::string DualNumberRing::render(const Element& a) const {
  check_shape(a);
  return "[" + base_->render(a.parts()[0]) + "," + base_->render(a.parts()[1]) + "]";
}

}  // namespace subinv
