#pragma once

// Randomized property sweeps over the library, assembled into a JSON report
//
//   {"command", "config": {seed, trials, max_generators},
//    "cases": [{sweep, index, input, expected?, actual, status}], "summary"}
//
// Each sweep reseeds from the configured seed, so reports are reproducible
// byte for byte and independent of which other sweeps ran.

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

namespace mgk {

struct VerifyConfig {
  std::uint64_t seed = 7;
  int trials = 200;
  /// Upper bound on the rank of free groups and rings that sweeps draw from.
  int max_generators = 6;
};

struct VerifyCase {
  std::string input;
  std::string expected;  // empty when the check is a predicate
  std::string actual;
  bool passed = false;
};

struct SweepResult {
  std::string name;
  std::vector<VerifyCase> cases;

  int failures() const;
};

/// Ring axioms and Magnus multiplicativity on random words and elements.
SweepResult sweep_ring(const VerifyConfig& config);
/// normal_form([u m_i u', v m_i v']) is the identity.
SweepResult sweep_milnor_relations(const VerifyConfig& config);
/// Weight s+1 left-iterated commutators vanish in M(F_s).
SweepResult sweep_nilpotency(const VerifyConfig& config);
/// r-inverse round trip, additivity of r, conjugation action.
SweepResult sweep_split(const VerifyConfig& config);
/// lcs_degree of a boundary word equals the tree's class.
SweepResult sweep_lcs(const VerifyConfig& config);
/// Dual class bound and dual count on random closed trees.
SweepResult sweep_duality(const VerifyConfig& config);
/// r_inverse(lc(r_map(rho))) = rho * wedge_R for the catalog patterns.
SweepResult sweep_sigma(const VerifyConfig& config);
/// c = a * b on the catalog compositions, and the refused configurations.
SweepResult sweep_certificate(const VerifyConfig& config);
/// Catalog mu-bar values and triviality answers.
SweepResult sweep_links(const VerifyConfig& config);

/// Sweep names accepted by run_verify: the names above plus "all".
std::vector<std::string> sweep_names();

/// Runs one sweep (or "all") and builds the report.
nlohmann::json run_verify(const std::string& which, const VerifyConfig& config);

}  // namespace mgk
