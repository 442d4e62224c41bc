#include "subinv/proof/consequences.hpp"

#include <algorithm>
#include <random>
#include <thread>

#include "subinv/errors.hpp"
#include "subinv/matrix/modular_inverse.hpp"
#include "subinv/ring/rings.hpp"

namespace subinv {

std::vector<std::pair<std::string, bool>> ConsequenceReport::checks() const {
  return {{"det_s_is_one", det_s_is_one},
          {"s_det_is_one", s_det_is_one},
          {"left_det_is_one", left_det_is_one},
          {"fwd_equals_left", fwd_equals_left},
          {"b_det_is_adj", b_det_is_adj},
          {"det_b_is_adj", det_b_is_adj},
          {"b_is_adj_s", b_is_adj_s},
          {"b_is_s_adj", b_is_s_adj},
          {"entries_in_rt_inverse", entries_in_rt_inverse},
          {"b_is_inverse", b_is_inverse}};
}

bool ConsequenceReport::all_hold() const {
  if (!invertible) return true;
  for (const auto& [name, ok] : checks()) {
    if (!ok) return false;
  }
  return true;
}

namespace {

std::optional<RingMatrix> invert_flat(const RingMatrix& flat) {
  if (flat.ring().as<ModularRing>()) return invert_over_zmod(flat);
  return invert_commutative(flat);
}

}  // namespace

ConsequenceReport verify_consequences(const RingMatrix& a, const RingHandle& r, const RingHandle& s) {
  if (!(a.ring() == r)) throw MismatchError("matrix is over " + a.ring().descriptor() + ", not " + r.descriptor());
  if (!r.is_commutative()) throw NotCommutativeError(r.descriptor() + " is not commutative");
  const Embedding embed(r, s);
  const RingMatrix a_s = embed_matrix(a, embed);

  ConsequenceReport report;
  const auto flat_inverse = invert_flat(flatten(a_s));
  if (!flat_inverse) return report;
  report.invertible = true;

  const RingMatrix b = unflatten(*flat_inverse, s);
  const Element det = embed(det_leibniz(a));
  const RingMatrix adj = embed_matrix(adjugate(a), embed);
  const Element s_fwd = ocdet_fwd(b);
  const Element s_left = ocdet_left(b);
  const Element one = s.one();

  report.det_s_is_one = s.equal(s.mul(det, s_fwd), one);
  report.s_det_is_one = s.equal(s.mul(s_fwd, det), one);
  report.left_det_is_one = s.equal(s.mul(s_left, det), one);
  report.fwd_equals_left = s.equal(s_fwd, s_left);
  report.b_det_is_adj = matrices_equal(scale_right(b, det), adj);
  report.det_b_is_adj = matrices_equal(scale_left(det, b), adj);
  report.b_is_adj_s = matrices_equal(b, scale_right(adj, s_fwd));
  report.b_is_s_adj = matrices_equal(b, scale_left(s_fwd, adj));
  report.b_is_inverse = is_identity(a_s * b) && is_identity(b * a_s);

  report.entries_in_rt_inverse = std::all_of(b.entries().begin(), b.entries().end(), [&](const Element& entry) {
    const auto numerator = embed.preimage(s.mul(entry, det));
    return numerator && s.equal(s.mul(embed(*numerator), s_fwd), entry);
  });
  return report;
}

SweepReport consequences_sweep(const SweepOptions& options) {
  if (options.modulus < 2) throw MismatchError("modulus must be at least 2");
  if (options.n < 1) throw MismatchError("n must be at least 1");
  const RingHandle base(std::make_shared<ModularRing>(mpz_class(std::to_string(options.modulus))));
  const RingHandle r(std::make_shared<DualNumberRing>(base));
  const RingHandle s(std::make_shared<MatrixRing>(base, 2));
  const auto* dual = r.as<DualNumberRing>();

  std::mt19937_64 rng(options.seed);
  auto draw = [&] { return Element(mpz_class(std::to_string(rng() % options.modulus))); };
  std::vector<RingMatrix> samples;
  samples.reserve(options.samples);
  for (std::size_t k = 0; k < options.samples; ++k) {
    std::vector<Element> entries;
    entries.reserve(options.n * options.n);
    for (std::size_t e = 0; e < options.n * options.n; ++e) {
      Element x = draw();
      Element y = draw();
      entries.push_back(dual->make(std::move(x), std::move(y)));
    }
    samples.emplace_back(r, options.n, std::move(entries));
  }

  std::vector<ConsequenceReport> results(samples.size());
  const unsigned workers =
      std::clamp<unsigned>(options.workers, 1, static_cast<unsigned>(std::max<std::size_t>(samples.size(), 1)));
  auto run_chunk = [&](unsigned w) {
    for (std::size_t k = w; k < samples.size(); k += workers) results[k] = verify_consequences(samples[k], r, s);
  };
  if (workers == 1) {
    run_chunk(0);
  } else {
    std::vector<std::jthread> threads;
    for (unsigned w = 0; w < workers; ++w) threads.emplace_back(run_chunk, w);
  }

  SweepReport report;
  report.modulus = options.modulus;
  report.n = options.n;
  report.samples = options.samples;
  report.seed = options.seed;
  for (std::size_t k = 0; k < results.size(); ++k) {
    if (results[k].invertible) ++report.invertible;
    if (!results[k].all_hold()) {
      ++report.violations;
      report.violating_samples.push_back(k);
    }
  }
  return report;
}

nlohmann::ordered_json to_json(const SweepReport& report) {
  nlohmann::ordered_json j;
  j["ring"] = "dualnum:zmod:" + std::to_string(report.modulus);
  j["ambient"] = "mat:2:zmod:" + std::to_string(report.modulus);
  j["modulus"] = report.modulus;
  j["n"] = report.n;
  j["samples"] = report.samples;
  j["seed"] = report.seed;
  j["invertible"] = report.invertible;
  j["violations"] = report.violations;
  j["violating_samples"] = report.violating_samples;
  return j;
}

SweepReport sweep_report_from_json(const nlohmann::json& j) {
  try {
    SweepReport r;
    r.modulus = j.at("modulus").get<std::uint64_t>();
    r.n = j.at("n").get<std::size_t>();
    r.samples = j.at("samples").get<std::size_t>();
    r.seed = j.at("seed").get<std::uint64_t>();
    r.invertible = j.at("invertible").get<std::size_t>();
    r.violations = j.at("violations").get<std::size_t>();
    r.violating_samples = j.at("violating_samples").get<std::vector<std::size_t>>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed sweep report: ") + e.what());
  }
}

}  // namespace subinv
