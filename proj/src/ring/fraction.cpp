#include "subinv/ring/fraction.hpp"

#include "subinv/errors.hpp"
#include "subinv/ring/rings.hpp"

namespace subinv {

namespace {

class NonzeroIntegers final : public DenominatorSet {
 public:
  bool contains(const Element& t) const override { return t.is_scalar() && t.scalar() != 0; }
  std::string descriptor() const override { return "nonzero"; }
};

class PowersOf final : public DenominatorSet {
 public:
  explicit PowersOf(mpz_class p) : p_(std::move(p)) {}

  bool contains(const Element& t) const override {
    if (!t.is_scalar() || t.scalar() == 0) return false;
    mpz_class v = abs(t.scalar());
    if (p_ == 1) return v == 1;
    while (v != 1) {
      if (!mpz_divisible_p(v.get_mpz_t(), p_.get_mpz_t())) return false;
      v /= p_;
    }
    return true;
  }
  std::string descriptor() const override { return "powersof:" + p_.get_str(); }

 private:
  mpz_class p_;
};

class UnitsOf final : public DenominatorSet {
 public:
  explicit UnitsOf(Embedding embedding) : embedding_(std::move(embedding)) {}

  bool contains(const Element& t) const override {
    return embedding_.from()->is_valid(t) && embedding_.to().try_invert(embedding_(t)).has_value();
  }
  std::string descriptor() const override { return "unitsof:" + embedding_.to().descriptor(); }

 private:
  Embedding embedding_;
};

void check_context(const FractionElement& u, const FractionElement& v) {
  if (!u.context || !v.context || !u.context->same_as(*v.context)) {
    throw MismatchError("fractions over different localizations");
  }
}

}  // namespace

std::shared_ptr<const DenominatorSet> nonzero_integers() { return std::make_shared<NonzeroIntegers>(); }

std::shared_ptr<const DenominatorSet> powers_of(const mpz_class& p) {
  if (p < 1) throw ParseError("powersof expects a positive integer");
  return std::make_shared<PowersOf>(p);
}

std::shared_ptr<const DenominatorSet> units_of(const Embedding& embedding) {
  return std::make_shared<UnitsOf>(embedding);
}

std::shared_ptr<const DenominatorSet> parse_denominator_spec(std::string_view spec, const RingHandle& base) {
  const bool integer_base = base.as<IntegerRing>() != nullptr;
  if (spec == "nonzero") {
    if (!integer_base) throw ParseError("the \"nonzero\" denominator set needs ring int");
    return nonzero_integers();
  }
  if (spec.starts_with("powersof:")) {
    if (!integer_base) throw ParseError("the \"powersof\" denominator set needs ring int");
    const std::string digits(spec.substr(9));
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos) {
      throw ParseError("powersof expects a positive integer: \"" + std::string(spec) + "\"");
    }
    return powers_of(mpz_class(digits));
  }
  if (spec.starts_with("unitsof:")) {
    RingHandle ambient = parse_ring_spec(spec.substr(8));
    try {
      return units_of(Embedding(base, ambient));
    } catch (const MismatchError& e) {
      throw ParseError(e.what());
    }
  }
  throw ParseError("unknown denominator spec: \"" + std::string(spec) + "\"");
}

bool FractionContext::same_as(const FractionContext& other) const {
  if (this == &other) return true;
  return base == other.base && denominators->descriptor() == other.denominators->descriptor();
}

bool frac_eq(const FractionElement& u, const FractionElement& v) {
  check_context(u, v);
  const RingHandle& r = u.context->base;
  return r.equal(r.mul(u.num, v.den), r.mul(v.num, u.den));
}

FractionElement frac_add(const FractionElement& u, const FractionElement& v) {
  check_context(u, v);
  const RingHandle& r = u.context->base;
  return {u.context, r.add(r.mul(u.num, v.den), r.mul(v.num, u.den)), r.mul(u.den, v.den)};
}

FractionElement frac_mul(const FractionElement& u, const FractionElement& v) {
  check_context(u, v);
  const RingHandle& r = u.context->base;
  return {u.context, r.mul(u.num, v.num), r.mul(u.den, v.den)};
}

FractionElement frac_neg(const FractionElement& u) {
  return {u.context, u.context->base.neg(u.num), u.den};
}

FractionElement canonicalize(const FractionElement& u) {
  if (!u.context->base.as<IntegerRing>()) throw MismatchError("canonicalize needs an integer base ring");
  mpz_class num = u.num.scalar();
  mpz_class den = u.den.scalar();
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (g != 0) {
    num /= g;
    den /= g;
  }
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return {u.context, Element(num), Element(den)};
}

Localization::Localization(RingHandle base, std::shared_ptr<const DenominatorSet> denominators) {
  if (!base.is_commutative()) {
    throw NotCommutativeError("localization needs a commutative base, got " + base.descriptor());
  }
  context_ = std::make_shared<const FractionContext>(FractionContext{std::move(base), std::move(denominators)});
}

FractionElement Localization::make(Element num, Element den) const {
  if (!context_->denominators->contains(den)) {
    throw NotInvertibleError("denominator " + base()->render(den) + " is not in " +
                             context_->denominators->descriptor());
  }
  return {context_, std::move(num), std::move(den)};
}

FractionElement Localization::embed(Element r) const { return {context_, std::move(r), base().one()}; }

FractionElement Localization::zero() const { return embed(base().zero()); }
FractionElement Localization::one() const { return embed(base().one()); }

std::string Localization::render(const FractionElement& a) const {
  return base()->render(a.num) + "/" + base()->render(a.den);
}

// ------------------------------------------------------------ frac:<spec>

LocalizationRing::LocalizationRing(RingHandle base)
    : loc_(base, units_of(Embedding(base, base))) {}

std::string LocalizationRing::descriptor() const { return "frac:" + loc_.base().descriptor(); }

FractionElement LocalizationRing::unpack(const Element& a) const {
  if (a.is_scalar() || a.parts().size() != 2) throw MismatchError("expected a fraction (num, den)");
  return {loc_.context(), a.parts()[0], a.parts()[1]};
}

Element LocalizationRing::pack(const FractionElement& f) { return Element::of({f.num, f.den}); }

Element LocalizationRing::zero() const { return pack(loc_.zero()); }
Element LocalizationRing::one() const { return pack(loc_.one()); }

Element LocalizationRing::add(const Element& a, const Element& b) const {
  return pack(frac_add(unpack(a), unpack(b)));
}

Element LocalizationRing::neg(const Element& a) const { return pack(frac_neg(unpack(a))); }

Element LocalizationRing::mul(const Element& a, const Element& b) const {
  return pack(frac_mul(unpack(a), unpack(b)));
}

bool LocalizationRing::equal(const Element& a, const Element& b) const { return frac_eq(unpack(a), unpack(b)); }

// With T the units of the base, r/t is a unit iff r is.
std::optional<Element> LocalizationRing::try_invert(const Element& a) const {
  FractionElement f = unpack(a);
  if (!loc_.denominators().contains(f.num)) return std::nullopt;
  return pack({loc_.context(), f.den, f.num});
}

Element LocalizationRing::from_integer(const mpz_class& value) const {
  return pack(loc_.embed(loc_.base()->from_integer(value)));
}

bool LocalizationRing::is_valid(const Element& a) const {
  if (a.is_scalar() || a.parts().size() != 2) return false;
  return loc_.base()->is_valid(a.parts()[0]) && loc_.base()->is_valid(a.parts()[1]) &&
         loc_.denominators().contains(a.parts()[1]);
}

// Every r/t with t a unit equals (r t^-1)/1.
std::vector<Element> LocalizationRing::elements() const {
  std::vector<Element> out;
  for (Element& r : loc_.base()->elements()) out.push_back(pack(loc_.embed(std::move(r))));
  return out;
}

std::optional<std::uint64_t> LocalizationRing::cardinality() const { return loc_.base()->cardinality(); }

Element LocalizationRing::random(std::mt19937_64& rng) const {
  Element num = loc_.base()->random(rng);
  for (int attempt = 0; attempt < 64; ++attempt) {
    Element den = loc_.base()->random(rng);
    if (loc_.denominators().contains(den)) return pack({loc_.context(), num, den});
  }
  return pack(loc_.embed(num));
}

nlohmann::json LocalizationRing::to_json(const Element& a) const {
  FractionElement f = unpack(a);
  return nlohmann::json::array({loc_.base()->to_json(f.num), loc_.base()->to_json(f.den)});
}

Element LocalizationRing::from_json(const nlohmann::json& j) const {
  if (!j.is_array() || j.size() != 2) throw ParseError("expected a fraction [num, den], got " + j.dump());
  Element num = loc_.base()->from_json(j[0]);
  Element den = loc_.base()->from_json(j[1]);
  if (!loc_.denominators().contains(den)) throw ParseError("fraction denominator is not a unit: " + j.dump());
  return pack({loc_.context(), std::move(num), std::move(den)});
}

std::string LocalizationRing::render(const Element& a) const { return loc_.render(unpack(a)); }

}  // namespace subinv
