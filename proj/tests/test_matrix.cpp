#include <doctest.h>

#include <gmpxx.h>

#include "subinv/errors.hpp"
#include "subinv/freealg/free_poly.hpp"
#include "subinv/matrix/matrix_io.hpp"
#include "subinv/matrix/modular_inverse.hpp"
#include "subinv/ring/rings.hpp"
#include "support.hpp"

using namespace subinv;
using test_support::matrix_of;
using test_support::random_matrix;
using test_support::z;

namespace {

// Determinant of an integer matrix by Gaussian elimination over Q.
mpz_class det_by_elimination(const RingMatrix& a) {
  const std::size_t n = a.size();
  std::vector<mpq_class> m(n * n);
  for (std::size_t i = 0; i < n * n; ++i) m[i] = a.entries()[i].scalar();
  mpq_class det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && m[pivot * n + c] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m[c * n + j], m[pivot * n + j]);
      det = -det;
    }
    det *= m[c * n + c];
    for (std::size_t r = c + 1; r < n; ++r) {
      const mpq_class f = m[r * n + c] / m[c * n + c];
      for (std::size_t j = c; j < n; ++j) m[r * n + j] -= f * m[c * n + j];
    }
  }
  return det.get_num();
}

std::size_t count_inversions(const std::vector<std::size_t>& p) {
  std::size_t count = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j) count += p[i] > p[j];
  return count;
}

}  // namespace

TEST_CASE("permutations come in lexicographic order with the right signs") {
  for (std::size_t n = 0; n <= 6; ++n) {
    std::size_t count = 0;
    std::vector<std::size_t> previous;
    for (const Permutation& p : permutations_with_sign(n)) {
      CHECK(p.sign() == (count_inversions(p.images()) % 2 == 0 ? 1 : -1));
      CHECK(p.sign() == (inversion_count(p.images()) % 2 == 0 ? 1 : -1));
      if (count > 0) CHECK(previous < p.images());
      previous = p.images();
      ++count;
    }
    CHECK(count == factorial(n));
    CHECK(all_permutations(n).size() == count);
  }
  CHECK(Permutation({1, 0, 2}).to_string() == "(2 1 3)");
  CHECK(Permutation({1, 0, 2}).sign() == -1);
  CHECK_THROWS_AS(Permutation({0, 0}), MismatchError);
  CHECK_THROWS_AS(Permutation({0, 2}), MismatchError);
}

TEST_CASE("matrix basics") {
  const RingHandle integers = parse_ring_spec("int");
  const RingMatrix m = matrix_of(integers, 3, {1, 2, 3, 4, 5, 6, 7, 8, 10});
  CHECK(matrices_equal(m.minor(0, 1), matrix_of(integers, 2, {4, 6, 7, 10})));
  CHECK(matrices_equal(m.transpose(), matrix_of(integers, 3, {1, 4, 7, 2, 5, 8, 3, 6, 10})));
  CHECK(is_identity(RingMatrix::identity(integers, 3)));
  CHECK(matrices_equal(m * RingMatrix::identity(integers, 3), m));
  CHECK_THROWS_AS(RingMatrix(integers, 2, {z(1)}), MismatchError);
  CHECK_THROWS_AS(m * RingMatrix::identity(integers, 2), MismatchError);
}

TEST_CASE("Leibniz determinant") {
  const RingHandle integers = parse_ring_spec("int");
  CHECK(det_leibniz(matrix_of(integers, 2, {1, 2, 3, 4})) == z(-2));
  CHECK(det_leibniz(matrix_of(integers, 3, {1, 2, 3, 4, 5, 6, 7, 8, 10})) == z(-3));
  CHECK(det_leibniz(RingMatrix(integers, 0)) == z(1));
  CHECK_THROWS_AS(det_leibniz(RingMatrix::identity(parse_ring_spec("mat:2:int"), 2)), NotCommutativeError);

  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 200; ++trial) {
    const RingMatrix a = random_matrix(integers, 1 + rng() % 5, rng);
    CHECK(det_leibniz(a).scalar() == det_by_elimination(a));
  }
}

TEST_CASE("ordered column determinants in the free algebra") {
  const SpecPtr spec = CommutationSpec::proof_replay(2);
  const FreeAlgebra algebra(spec);
  Matrix<FreeAlgebra> b(algebra, 2);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) b(i, j) = algebra.gen(spec->id({GeneratorKind::b_entry, i + 1, j + 1}));
  CHECK(ocdet_fwd(b) == FreePoly::from_text(spec, {{1, "b11 b22"}, {-1, "b21 b12"}}));
  CHECK(ocdet_left(b) == FreePoly::from_text(spec, {{1, "b22 b11"}, {-1, "b21 b12"}}));
  CHECK(ocdet_recursive(b) == ocdet_fwd(b));
}

TEST_CASE("ordered determinants differ over a noncommutative ring") {
  const RingHandle s = parse_ring_spec("mat:2:zmod:3");
  std::mt19937_64 rng(53);
  bool differ = false;
  for (int trial = 0; trial < 100 && !differ; ++trial) {
    const RingMatrix b = random_matrix(s, 2, rng);
    CHECK(s.equal(ocdet_fwd(b), ocdet_recursive(b)));
    differ = !s.equal(ocdet_fwd(b), ocdet_left(b));
  }
  CHECK(differ);
}

TEST_CASE("adjugate identity over commutative rings") {
  std::mt19937_64 rng(57);
  for (const char* spec : {"int", "zmod:12", "dualnum:zmod:4"}) {
    CAPTURE(spec);
    const RingHandle r = parse_ring_spec(spec);
    for (int trial = 0; trial < 60; ++trial) {
      const RingMatrix a = random_matrix(r, 1 + rng() % 4, rng);
      const RingMatrix scaled = scale_left(det_leibniz(a), RingMatrix::identity(r, a.size()));
      CHECK(matrices_equal(a * adjugate(a), scaled));
      CHECK(matrices_equal(adjugate(a) * a, scaled));
    }
  }
  const RingHandle integers = parse_ring_spec("int");
  CHECK(is_identity(adjugate(matrix_of(integers, 1, {7}))));
  CHECK_THROWS_AS(adjugate(RingMatrix(integers, 0)), MismatchError);
}

TEST_CASE("inversion inside a localization") {
  const RingHandle integers = parse_ring_spec("int");
  const RingMatrix m = matrix_of(integers, 2, {1, 2, 3, 4});
  const FractionMatrix inv = invert_via_adjugate(m, nonzero_integers());
  const Localization& loc = inv.ring();
  CHECK(frac_eq(inv(0, 0), loc.make(z(-2), z(1))));
  CHECK(frac_eq(inv(0, 1), loc.make(z(1), z(1))));
  CHECK(frac_eq(inv(1, 0), loc.make(z(3), z(2))));
  CHECK(frac_eq(inv(1, 1), loc.make(z(-1), z(2))));
  CHECK(inv(0, 0).den == z(-2));

  CHECK_NOTHROW(invert_via_adjugate(m, powers_of(2)));
  CHECK_THROWS_AS(invert_via_adjugate(m, powers_of(3)), NotInvertibleError);
  CHECK_THROWS_AS(invert_via_adjugate(RingMatrix::identity(parse_ring_spec("mat:2:int"), 2), nonzero_integers()),
                  NotCommutativeError);

  std::mt19937_64 rng(59);
  int done = 0;
  while (done < 100) {
    const RingMatrix a = random_matrix(integers, 1 + rng() % 4, rng);
    if (det_leibniz(a).scalar() == 0) continue;
    const FractionMatrix b = invert_via_adjugate(a, nonzero_integers());
    const FractionMatrix af = to_fractions(a, b.ring());
    CHECK(is_identity(af * b));
    CHECK(is_identity(b * af));
    ++done;
  }
}

TEST_CASE("modular inversion matches brute force on 2x2 over Z/4") {
  const RingHandle r = parse_ring_spec("mat:2:zmod:4");
  for (const Element& a : r->elements()) {
    std::vector<std::int64_t> values;
    for (const Element& e : a.parts()) values.push_back(e.scalar().get_si());
    const auto inv = invert_mod<std::int64_t>(values, 2, 4);
    const auto expected = test_support::brute_force_inverse(r, a);
    REQUIRE(inv.has_value() == expected.has_value());
    if (!inv) continue;
    for (std::size_t i = 0; i < 4; ++i) CHECK((*inv)[i] == expected->parts()[i].scalar().get_si());
  }
}

TEST_CASE("modular inversion agrees with the adjugate over composite moduli") {
  std::mt19937_64 rng(61);
  for (long m : {2, 4, 6, 12, 30, 97}) {
    const RingHandle r = parse_ring_spec("zmod:" + std::to_string(m));
    for (int trial = 0; trial < 80; ++trial) {
      const RingMatrix a = random_matrix(r, 1 + rng() % 5, rng);
      const auto by_gcd = invert_over_zmod(a);
      const auto by_adjugate = invert_commutative(a);
      REQUIRE(by_gcd.has_value() == by_adjugate.has_value());
      if (by_gcd) {
        CHECK(matrices_equal(*by_gcd, *by_adjugate));
        CHECK(is_identity(a * *by_gcd));
      }
    }
  }
  CHECK_THROWS_AS(invert_over_zmod(RingMatrix::identity(parse_ring_spec("int"), 2)), MismatchError);
}

TEST_CASE("flatten is a ring isomorphism onto block matrices") {
  std::mt19937_64 rng(67);
  const RingHandle s = parse_ring_spec("mat:2:zmod:5");
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + rng() % 3;
    const RingMatrix x = random_matrix(s, n, rng), y = random_matrix(s, n, rng);
    CHECK(matrices_equal(flatten(x * y), flatten(x) * flatten(y)));
    CHECK(matrices_equal(flatten(x + y), flatten(x) + flatten(y)));
    CHECK(matrices_equal(unflatten(flatten(x), s), x));
    CHECK(flatten(x).size() == 2 * n);
  }
  CHECK(is_identity(flatten(RingMatrix::identity(s, 3))));
  CHECK_THROWS_AS(flatten(RingMatrix::identity(parse_ring_spec("int"), 2)), MismatchError);
  CHECK_THROWS_AS(unflatten(RingMatrix::identity(parse_ring_spec("zmod:5"), 3), s), MismatchError);
}

TEST_CASE("matrix documents round-trip") {
  std::mt19937_64 rng(71);
  for (const char* spec : {"int", "zmod:6", "mat:2:zmod:3", "dualnum:zmod:5", "frac:zmod:6"}) {
    CAPTURE(spec);
    const RingHandle r = parse_ring_spec(spec);
    for (std::size_t n = 0; n <= 3; ++n) {
      const RingMatrix a = random_matrix(r, n, rng);
      const RingMatrix back = parse_matrix(serialize_matrix(a));
      CHECK(back.ring() == r);
      CHECK(matrices_equal(back, a));
    }
  }
  const RingMatrix reduced = parse_matrix(R"({"ring": "zmod:5", "n": 1, "rows": [[7]]})");
  CHECK(reduced(0, 0) == z(2));
}

TEST_CASE("malformed matrix documents are rejected") {
  for (const char* text : {"", "[]", R"({"ring": "int", "n": 2})", R"({"ring": "int", "n": 1, "rows": [[1]], "x": 0})",
                           R"({"ring": "int", "n": 2, "rows": [[1, 2]]})", R"({"ring": "int", "n": -1, "rows": []})",
                           R"({"ring": "int", "n": 2, "rows": [[1, 2], [3]]})",
                           R"({"ring": "nope", "n": 1, "rows": [[1]]})",
                           R"({"ring": "mat:2:int", "n": 1, "rows": [[1]]})"}) {
    CAPTURE(text);
    CHECK_THROWS_AS(parse_matrix(text), ParseError);
  }
  CHECK_THROWS_AS(load_matrix_file("/nonexistent/matrix.json"), ParseError);
}
