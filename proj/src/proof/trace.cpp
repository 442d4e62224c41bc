#include "subinv/proof/trace.hpp"

#include <sstream>

#include "subinv/matrix/determinant.hpp"
#include "subinv/proof/replay.hpp"

namespace subinv {

namespace {

class TraceBuilder {
 public:
  explicit TraceBuilder(const SpecPtr& spec) : spec_(spec) {}

  void step(std::string label, std::string equation, FreePoly stated, FreePoly computed) {
    TraceStep s{std::move(label), std::move(equation), std::move(stated), std::move(computed), false, {}};
    s.matches = (s.stated == s.computed);
    trace_.steps.push_back(std::move(s));
  }

  // Marks the last step as a known misprint when it differs from the engine.
  void annotate_misprint(const std::string& written_term, const std::string& expanded_term) {
    TraceStep& s = trace_.steps.back();
    if (s.matches) return;
    const FreePoly diff = s.stated - s.computed;
    const FreePoly expected = FreePoly::from_text(spec_, {{1, written_term}, {-1, expanded_term}});
    if (diff == expected) {
      s.note = "written term " + written_term + " should read " + expanded_term +
               " (direct expansion of a12 (a21 b11 + a22 b21) b22)";
    }
  }

  Trace2x2 finish() { return std::move(trace_); }

 private:
  SpecPtr spec_;
  Trace2x2 trace_;
};

}  // namespace

bool Trace2x2::consistent() const {
  for (const TraceStep& s : steps) {
    if (!s.matches && s.note.empty()) return false;
  }
  return true;
}

Trace2x2 trace_2x2() {
  const SymbolicSetup setup = SymbolicSetup::make(2);
  const SpecPtr& spec = setup.spec;
  const FreeAlgebra full(spec);
  const SymbolicMatrix a_full = symbolic_matrix(full, GeneratorKind::a_entry);
  const SymbolicMatrix d = a_full * setup.b;  // d_ij = sum_k a_ik b_kj
  const auto& a = setup.a;
  const auto& b = setup.b;
  const Permutation identity({0, 1});
  const Permutation swap({1, 0});

  TraceBuilder t(spec);

  // Main diagonal: 1 = d11 d22.
  t.step("d11", "1 = d11", FreePoly::from_text(spec, {{1, "a11 b11"}, {1, "a12 b21"}}), d(0, 0));
  t.step("d22", "1 = d22", FreePoly::from_text(spec, {{1, "a21 b12"}, {1, "a22 b22"}}), d(1, 1));
  t.step("a21 d11 b12", "a21 b12 = a21 d11 b12",
         FreePoly::from_text(spec, {{1, "a21 a11 b11 b12"}, {1, "a21 a12 b21 b12"}}), a(1, 0) * d(0, 0) * b(0, 1));
  t.step("a22 d11 b22", "a22 b22 = a22 d11 b22",
         FreePoly::from_text(spec, {{1, "a22 a11 b11 b22"}, {1, "a22 a12 b21 b22"}}), a(1, 1) * d(0, 0) * b(1, 1));
  t.step("d11 d22", "1 = a21 d11 b12 + a22 d11 b22",
         FreePoly::from_text(spec, {{1, "a21 a11 b11 b12"},
                                    {1, "a21 a12 b21 b12"},
                                    {1, "a22 a11 b11 b22"},
                                    {1, "a22 a12 b21 b22"}}),
         expand_sigma_product(setup, identity));
  {
    FreePoly sum(spec);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) sum = sum + a(0, i) * a(1, j) * b(i, 0) * b(j, 1);
    t.step("d11 d22 regrouped", "1 = sum_{i,j} a1i a2j bi1 bj2", sum, expand_sigma_product(setup, identity));
  }

  // Other diagonal: 0 = d21 d12.
  t.step("d21", "0 = d21", FreePoly::from_text(spec, {{1, "a21 b11"}, {1, "a22 b21"}}), d(1, 0));
  t.step("d12", "0 = d12", FreePoly::from_text(spec, {{1, "a11 b12"}, {1, "a12 b22"}}), d(0, 1));
  t.step("a11 d21 b12", "0 = a11 d21 b12",
         FreePoly::from_text(spec, {{1, "a11 a21 b11 b12"}, {1, "a11 a22 b21 b12"}}), a(0, 0) * d(1, 0) * b(0, 1));
  t.step("a12 d21 b22", "0 = a12 d21 b22",
         FreePoly::from_text(spec, {{1, "a12 a21 b11 b22"}, {1, "a11 a22 b21 b22"}}), a(0, 1) * d(1, 0) * b(1, 1));
  t.annotate_misprint("a11 a22 b21 b22", "a12 a22 b21 b22");
  t.step("d21 d12", "0 = a11 d21 b12 + a12 d21 b22",
         FreePoly::from_text(spec, {{1, "a11 a21 b11 b12"},
                                    {1, "a11 a22 b21 b12"},
                                    {1, "a12 a21 b11 b22"},
                                    {1, "a11 a22 b21 b22"}}),
         expand_sigma_product(setup, swap));
  t.annotate_misprint("a11 a22 b21 b22", "a12 a22 b21 b22");
  {
    FreePoly sum(spec);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) sum = sum + a(0, j) * a(1, i) * b(i, 0) * b(j, 1);
    t.step("d21 d12 regrouped", "0 = sum_{i,j} a1j a2i bi1 bj2", sum, expand_sigma_product(setup, swap));
  }

  // 1 = d11 d22 - d21 d12.
  const FreePoly p = expand_identity_det(setup, Side::right).poly;
  {
    FreePoly sum(spec);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j)
        sum = sum + (a(0, i) * a(1, j) - a(0, j) * a(1, i)) * b(i, 0) * b(j, 1);
    t.step("cofactor regrouping", "1 = sum_{i,j} (a1i a2j - a1j a2i) bi1 bj2", sum, p);
  }
  const FreePoly det_a = det_leibniz(a);
  {
    FreePoly sum(spec);
    for (const Permutation& sigma : permutations_with_sign(2)) {
      FreePoly term = det_a * b(sigma(0), 0) * b(sigma(1), 1);
      sum = sigma.sign() > 0 ? sum + term : sum - term;
    }
    t.step("sum over S2", "1 = sum_{sigma=(i,j)} sgn(sigma) det(A) bi1 bj2", sum, p);
  }
  t.step("factorization", "1 = det(A) (b11 b22 - b21 b12)", det_a * (b(0, 0) * b(1, 1) - b(1, 0) * b(0, 1)),
         target_poly(setup, Side::right));
  return t.finish();
}

std::string render_text(const Trace2x2& trace) {
  std::ostringstream out;
  for (const TraceStep& s : trace.steps) {
    out << "[" << s.label << "]  " << s.equation << "\n";
    out << "    written:  " << s.stated.to_string() << "\n";
    out << "    computed: " << s.computed.to_string() << "\n";
    out << "    " << (s.matches ? "match" : "MISMATCH");
    if (!s.note.empty()) out << "  note: " << s.note;
    out << "\n";
  }
  return out.str();
}

nlohmann::ordered_json to_json(const Trace2x2& trace) {
  nlohmann::ordered_json steps = nlohmann::ordered_json::array();
  for (const TraceStep& s : trace.steps) {
    nlohmann::ordered_json j;
    j["label"] = s.label;
    j["equation"] = s.equation;
    j["stated"] = s.stated.to_string();
    j["computed"] = s.computed.to_string();
    j["matches"] = s.matches;
    j["note"] = s.note;
    steps.push_back(std::move(j));
  }
  nlohmann::ordered_json doc;
  doc["steps"] = std::move(steps);
  doc["consistent"] = trace.consistent();
  return doc;
}

}  // namespace subinv
