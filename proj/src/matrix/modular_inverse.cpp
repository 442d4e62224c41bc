#include "subinv/matrix/modular_inverse.hpp"

#include "subinv/errors.hpp"
#include "subinv/ring/rings.hpp"

namespace subinv {

std::optional<RingMatrix> invert_over_zmod(const RingMatrix& a) {
  const auto* zmod = a.ring().as<ModularRing>();
  if (!zmod) throw MismatchError("invert_over_zmod needs entries in zmod:m, got " + a.ring().descriptor());
  const std::size_t n = a.size();
  std::vector<mpz_class> values;
  values.reserve(n * n);
  for (const Element& e : a.entries()) values.push_back(e.scalar());
  auto inv = invert_mod<mpz_class>(values, n, zmod->modulus());
  if (!inv) return std::nullopt;
  std::vector<Element> entries;
  entries.reserve(n * n);
  for (mpz_class& v : *inv) entries.emplace_back(std::move(v));
  return RingMatrix(a.ring(), n, std::move(entries));
}

}  // namespace subinv
