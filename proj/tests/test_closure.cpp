#include <doctest.h>

#include <numeric>
#include <random>

#include "subinv/closure/closure.hpp"
#include "subinv/errors.hpp"

using namespace subinv;

namespace {

ElementSet by_rendering(const FiniteRingTable& s, const std::vector<std::string>& names) {
  ElementSet out;
  for (const std::string& name : names) {
    for (ElementIndex i = 0; i < s.size(); ++i) {
      if (s.ring()->render(s.element(i)) == name) out.push_back(i);
    }
  }
  std::sort(out.begin(), out.end());
  REQUIRE(out.size() == names.size());
  return out;
}

ElementSet random_subset(const FiniteRingTable& s, std::mt19937_64& rng, std::size_t max_size) {
  ElementSet out;
  const std::size_t count = rng() % (max_size + 1);
  for (std::size_t k = 0; k < count; ++k) out.push_back(static_cast<ElementIndex>(rng() % s.size()));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

ElementSet all_of(const FiniteRingTable& s) {
  ElementSet out(s.size());
  std::iota(out.begin(), out.end(), 0);
  return out;
}

const char* kE = "[[0,1],[0,0]]";
const char* kI = "[[1,0],[0,1]]";
const char* kZero = "[[0,0],[0,0]]";
const char* kIPlusE = "[[1,1],[0,1]]";

}  // namespace

TEST_CASE("operation tables") {
  const FiniteRingTable z6(parse_ring_spec("zmod:6"));
  CHECK(z6.size() == 6);
  CHECK(unit_denominators(all_of(z6), z6).size() == 2);
  CHECK(z6.linear().has_value());

  const FiniteRingTable m2(parse_ring_spec("mat:2:zmod:2"));
  CHECK(m2.size() == 16);
  CHECK(unit_denominators(all_of(m2), m2).size() == 6);

  const FiniteRingTable m3(parse_ring_spec("mat:2:zmod:3"));
  CHECK(unit_denominators(all_of(m3), m3).size() == 48);
  REQUIRE(m3.linear().has_value());
  CHECK(m3.linear()->k == 2);

  const FiniteRingTable frac(parse_ring_spec("frac:zmod:6"));
  CHECK(frac.size() == 6);
  CHECK_FALSE(frac.linear().has_value());

  CHECK_THROWS_AS(FiniteRingTable(parse_ring_spec("mat:2:zmod:5")), BudgetExceededError);
  CHECK_THROWS_AS(FiniteRingTable(parse_ring_spec("int")), MismatchError);
}

TEST_CASE("generated subrings") {
  const FiniteRingTable z6(parse_ring_spec("zmod:6"));
  CHECK(generated_subring({}, z6) == all_of(z6));
  CHECK(generated_subring({1}, z6) == all_of(z6));

  const FiniteRingTable m2(parse_ring_spec("mat:2:zmod:2"));
  CHECK(generated_subring({}, m2) == by_rendering(m2, {kZero, kI}));
  const ElementSet e = by_rendering(m2, {kE});
  CHECK(generated_subring(e, m2) == by_rendering(m2, {kZero, kI, kE, kIPlusE}));

  const FiniteRingTable m3(parse_ring_spec("mat:2:zmod:3"));
  CHECK(generated_subring(by_rendering(m3, {kE}), m3).size() == 9);
}

TEST_CASE("generated_subring is monotone and idempotent, division_closure idempotent") {
  std::mt19937_64 rng(73);
  for (const char* spec : {"zmod:12", "mat:2:zmod:2", "dualnum:zmod:4", "mat:2:zmod:3"}) {
    CAPTURE(spec);
    const FiniteRingTable s(parse_ring_spec(spec));
    for (int trial = 0; trial < 25; ++trial) {
      const ElementSet x = random_subset(s, rng, 2);
      ElementSet y = x;
      for (ElementIndex extra : random_subset(s, rng, 2)) y.push_back(extra);
      std::sort(y.begin(), y.end());
      y.erase(std::unique(y.begin(), y.end()), y.end());
      const ElementSet gx = generated_subring(x, s);
      CHECK(is_subset(x, gx));
      CHECK(is_subring(gx, s));
      CHECK(generated_subring(gx, s) == gx);
      CHECK(is_subset(gx, generated_subring(y, s)));
      const Fixpoint d = division_closure(gx, s);
      CHECK(division_closure(d.set, s).set == d.set);
      // Finite rings: inverses are powers, so nothing new is ever adjoined.
      CHECK(d.set == gx);
      CHECK(d.rounds == 0);
    }
  }
}

TEST_CASE("unit denominators and RT^-1") {
  const FiniteRingTable z6(parse_ring_spec("zmod:6"));
  CHECK(unit_denominators({0, 1}, z6) == ElementSet{1});
  CHECK(unit_denominators(all_of(z6), z6) == ElementSet{1, 5});
  CHECK(rt_inverse(all_of(z6), {1}, z6) == all_of(z6));
  CHECK_THROWS_AS(rt_inverse(all_of(z6), {2}, z6), MismatchError);

  const FiniteRingTable m2(parse_ring_spec("mat:2:zmod:2"));
  const ElementSet r = by_rendering(m2, {kZero, kI, kE, kIPlusE});
  CHECK(unit_denominators(r, m2) == by_rendering(m2, {kI, kIPlusE}));
  CHECK(rt_inverse(r, unit_denominators(r, m2), m2) == r);
}

TEST_CASE("matrix inversion over S: flattening agrees with exhaustive search") {
  std::mt19937_64 rng(79);
  for (const char* spec : {"zmod:4", "zmod:6", "mat:2:zmod:2", "dualnum:zmod:2"}) {
    CAPTURE(spec);
    const FiniteRingTable s(parse_ring_spec(spec));
    for (int trial = 0; trial < 40; ++trial) {
      std::vector<ElementIndex> a(4);
      for (auto& e : a) e = static_cast<ElementIndex>(rng() % s.size());
      const auto fast = invert_over(a, 2, s, InversionMethod::automatic);
      const auto slow = invert_over(a, 2, s, InversionMethod::exhaustive);
      CHECK(fast == slow);
    }
  }
}

TEST_CASE("bounded rational closure") {
  const FiniteRingTable z4(parse_ring_spec("zmod:4"));
  RationalClosureOptions options;
  options.max_matrix = 2;
  const RationalClosure fast = rational_closure_bounded(all_of(z4), z4, options);
  options.method = InversionMethod::exhaustive;
  const RationalClosure slow = rational_closure_bounded(all_of(z4), z4, options);
  CHECK(fast.set == slow.set);
  CHECK(fast.by_size.front() == ElementSet{1, 3});  // N = 1: inverses of units
  CHECK(fast.set == all_of(z4));
  CHECK(fast.grew);
  CHECK(fast.monotone);

  const FiniteRingTable frac(parse_ring_spec("frac:zmod:6"));
  options.method = InversionMethod::automatic;  // no linear form: falls back to search
  CHECK(rational_closure_bounded(all_of(frac), frac, options).set == all_of(frac));

  const FiniteRingTable m3(parse_ring_spec("mat:2:zmod:3"));
  const ElementSet dual = generated_subring(by_rendering(m3, {kE}), m3);
  options.max_matrix = 3;
  try {
    rational_closure_bounded(dual, m3, options);
    FAIL("expected a refusal");
  } catch (const BudgetExceededError& e) {
    CHECK(e.required() == 9 + 6561 + 387'420'489ULL);
    CHECK(e.budget() == RationalClosureOptions::kDefaultBudget);
  }
  CHECK_THROWS_AS(rational_closure_bounded(dual, m3, {0}), MismatchError);
}

TEST_CASE("rational closure does not depend on the worker count") {
  const FiniteRingTable m2(parse_ring_spec("mat:2:zmod:2"));
  const ElementSet r = by_rendering(m2, {kZero, kI, kE, kIPlusE});
  RationalClosureOptions options;
  options.max_matrix = 2;
  const RationalClosure one = rational_closure_bounded(r, m2, options);
  options.workers = 3;
  const RationalClosure three = rational_closure_bounded(r, m2, options);
  CHECK(one.by_size == three.by_size);
}

TEST_CASE("closure reports on the shipped instances") {
  struct Instance {
    const char* ring;
    std::vector<std::string> gens;
    std::size_t r_size;
  };
  for (const Instance& inst : {Instance{"zmod:6", {}, 6}, Instance{"mat:2:zmod:2", {kE}, 4},
                               Instance{"mat:2:zmod:3", {kE}, 9}}) {
    CAPTURE(inst.ring);
    const FiniteRingTable s(parse_ring_spec(inst.ring));
    const SubsetReport report = closure_report(by_rendering(s, inst.gens), s, {});
    CHECK(report.r.size() == inst.r_size);
    CHECK(report.holds());
    CHECK(report.check("r_commutative"));
    CHECK(report.check("eq1_holds"));
    CHECK(report.check("rt_equals_d"));
    CHECK(report.check("degenerate"));
    CHECK(report.rt_inverse == report.r);
    const auto doc = to_json(report);
    for (const char* key : {"ring", "R", "T", "RTinv", "D", "Rat", "checks"}) CHECK(doc.contains(key));
    CHECK(doc["Rat"]["N"] == 2);
    CHECK(doc["checks"]["eq1_holds"] == true);
  }
}

TEST_CASE("a noncommutative R is reported as such") {
  const FiniteRingTable m2(parse_ring_spec("mat:2:zmod:2"));
  RationalClosureOptions options;
  options.max_matrix = 1;
  const SubsetReport report = closure_report(all_of(m2), m2, options);
  CHECK_FALSE(report.check("r_commutative"));
  CHECK(report.check("rt_subset_d"));
  CHECK(report.holds());
}

TEST_CASE("generator files") {
  const FiniteRingTable m2(parse_ring_spec("mat:2:zmod:2"));
  CHECK(parse_generators(nlohmann::json::parse("[[[0,1],[0,0]]]"), m2) == by_rendering(m2, {kE}));
  CHECK(parse_generators(nlohmann::json::parse("[]"), m2).empty());
  CHECK_THROWS_AS(parse_generators(nlohmann::json::parse("{}"), m2), ParseError);
  CHECK_THROWS_AS(parse_generators(nlohmann::json::parse("[[1,2]]"), m2), ParseError);
}
