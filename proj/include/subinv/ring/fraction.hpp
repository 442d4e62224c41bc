#pragma once

#include <memory>
#include <string>
#include <string_view>

#include "subinv/ring/embedding.hpp"
#include "subinv/ring/ring.hpp"

namespace subinv {

/// Membership test for an admissible denominator set T inside a commutative
/// ring R. Implementations accept 1 and are closed under multiplication.
class DenominatorSet {
 public:
  virtual ~DenominatorSet() = default;
  virtual bool contains(const Element& t) const = 0;
  virtual std::string descriptor() const = 0;
};

/// Nonzero integers (Z inside Q).
std::shared_ptr<const DenominatorSet> nonzero_integers();

/// +-p^e, e >= 0: the integers that become units in Z[1/p].
std::shared_ptr<const DenominatorSet> powers_of(const mpz_class& p);

/// {t in R : embed(t) is a unit of the ambient ring S}.
std::shared_ptr<const DenominatorSet> units_of(const Embedding& embedding);

/// "nonzero" | "powersof:<int>" | "unitsof:<ring-spec>" for denominators
/// drawn from `base`. Throws ParseError.
std::shared_ptr<const DenominatorSet> parse_denominator_spec(std::string_view spec,
                                                             const RingHandle& base);

struct FractionContext {
  RingHandle base;
  std::shared_ptr<const DenominatorSet> denominators;

  bool same_as(const FractionContext& other) const;
};

/// Formal quotient r * t^-1 with r in R and t in T.
///
/// Never reduced implicitly: R need not have gcds, so equality is always by
/// cross-multiplication.
struct FractionElement {
  std::shared_ptr<const FractionContext> context;
  Element num;
  Element den;
};

/// r1 t2 == r2 t1. Throws MismatchError when the contexts differ.
bool frac_eq(const FractionElement& u, const FractionElement& v);
FractionElement frac_add(const FractionElement& u, const FractionElement& v);
FractionElement frac_mul(const FractionElement& u, const FractionElement& v);
FractionElement frac_neg(const FractionElement& u);

/// Divides out the gcd and makes the denominator positive. Integer base only.
FractionElement canonicalize(const FractionElement& u);

/// The localization R T^-1 as a ring context.
class Localization {
 public:
  using value_type = FractionElement;

  /// Throws NotCommutativeError unless `base` is commutative.
  Localization(RingHandle base, std::shared_ptr<const DenominatorSet> denominators);

  const RingHandle& base() const noexcept { return context_->base; }
  const DenominatorSet& denominators() const noexcept { return *context_->denominators; }
  const std::shared_ptr<const FractionContext>& context() const noexcept { return context_; }

  /// r * t^-1; throws NotInvertibleError when t is not in T.
  FractionElement make(Element num, Element den) const;
  FractionElement embed(Element r) const;

  FractionElement zero() const;
  FractionElement one() const;
  FractionElement add(const FractionElement& a, const FractionElement& b) const { return frac_add(a, b); }
  FractionElement neg(const FractionElement& a) const { return frac_neg(a); }
  FractionElement mul(const FractionElement& a, const FractionElement& b) const { return frac_mul(a, b); }
  bool equal(const FractionElement& a, const FractionElement& b) const { return frac_eq(a, b); }
  bool is_commutative() const { return true; }

  std::string render(const FractionElement& a) const;

 private:
  std::shared_ptr<const FractionContext> context_;
};

static_assert(RingLike<Localization>);

/// Runtime ring "frac:<spec>": the base localized at its own units.
/// Elements store (num, den).
class LocalizationRing final : public Ring {
 public:
  explicit LocalizationRing(RingHandle base);

  const Localization& localization() const noexcept { return loc_; }

  std::string descriptor() const override;
  bool is_commutative() const override { return true; }
  bool is_finite() const override { return loc_.base().is_finite(); }

  Element zero() const override;
  Element one() const override;
  Element add(const Element& a, const Element& b) const override;
  Element neg(const Element& a) const override;
  Element mul(const Element& a, const Element& b) const override;
  bool equal(const Element& a, const Element& b) const override;
  std::optional<Element> try_invert(const Element& a) const override;
  Element from_integer(const mpz_class& value) const override;
  bool is_valid(const Element& a) const override;
  std::vector<Element> elements() const override;
  std::optional<std::uint64_t> cardinality() const override;
  Element random(std::mt19937_64& rng) const override;

  nlohmann::json to_json(const Element& a) const override;
  Element from_json(const nlohmann::json& j) const override;
  std::string render(const Element& a) const override;

  FractionElement unpack(const Element& a) const;
  static Element pack(const FractionElement& f);

 private:
  Localization loc_;
};

}  // namespace subinv
