#include "subinv/ring/element.hpp"

#include <algorithm>

namespace subinv {

std::strong_ordering Element::compare(const Element& lhs, const Element& rhs) {
  if (lhs.is_scalar() != rhs.is_scalar()) {
    return lhs.is_scalar() ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  if (lhs.is_scalar()) {
    const int c = cmp(lhs.scalar(), rhs.scalar());
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }
  const Parts& a = lhs.parts();
  const Parts& b = rhs.parts();
  const std::size_t common = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < common; ++i) {
    if (auto c = compare(a[i], b[i]); c != std::strong_ordering::equal) return c;
  }
  return a.size() <=> b.size();
}

std::string Element::debug_string() const {
  if (is_scalar()) return scalar().get_str();
  std::string out = "(";
  for (std::size_t i = 0; i < parts().size(); ++i) {
    if (i) out += ",";
    out += parts()[i].debug_string();
  }
  return out + ")";
}

}  // namespace subinv
