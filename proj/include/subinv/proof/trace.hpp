#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "subinv/freealg/free_poly.hpp"

namespace subinv {

/// One labeled identity of the 2x2 walkthrough: the polynomial as written in
/// the hand derivation next to the one the engine computes.
struct TraceStep {
  std::string label;     // e.g. "d11 d22"
  std::string equation;  // how the identity reads, e.g. "1 = d11 d22"
  FreePoly stated;
  FreePoly computed;
  bool matches = false;
  std::string note;  // set when the written form disagrees with the computation
};

struct Trace2x2 {
  std::vector<TraceStep> steps;

  /// Every step either matches or carries an annotation.
  bool consistent() const;
};

/// Replays the 2x2 case step by step: d11 and d22, the inside-out products
/// giving d11 d22, the same for d21 d12, the cofactor regrouping, and the
/// final factorization det(A) * (b11 b22 - b21 b12).
///
/// The hand-written expansion of a12 d21 b22 lists a11 a22 b21 b22 as its
/// last term; direct expansion gives a12 a22 b21 b22. The affected steps keep
/// the written form in `stated`, are marked as not matching, and say so in
/// `note`.
Trace2x2 trace_2x2();

std::string render_text(const Trace2x2& trace);
nlohmann::ordered_json to_json(const Trace2x2& trace);

}  // namespace subinv
