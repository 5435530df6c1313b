#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "stanley/clutter.hpp"
#include "stanley/depth_oracle.hpp"
#include "stanley/generate.hpp"
#include "stanley/ideal.hpp"
#include "stanley/schmitt_vogel.hpp"

namespace stanley {

struct VerifyOptions {
  std::uint64_t seed = 42;
  int max_n = 6;
  Field field = Field::rationals;
  long prime = 32003;
  bool trim = false;  // check the free-variable shift invariants instead of the bounds
  std::string bundle_dir = ".";
};

/// One verification subject. When both clutter and d are present the ideal
/// is the edge ideal of the d-complement (validated on entry).
struct Instance {
  std::string id;
  std::string source;  // generated, reference, or file
  std::optional<Clutter> clutter;
  std::optional<int> d;
  SqfIdeal ideal;
};

/// Quadratic (not necessarily squarefree) input for the polarization route.
struct QuadraticInstance {
  std::string id;
  std::vector<GenMonomial> generators;
};

struct VerificationReport {
  nlohmann::json data;
  int instances_checked = 0;
  int checks_passed = 0;
  int checks_failed = 0;
  int instances_skipped = 0;
  std::optional<std::string> bundle_path;

  bool all_pass() const { return checks_failed == 0; }
};

nlohmann::json instance_to_json(const Instance& instance);
Instance instance_from_json(const nlohmann::json& j);

std::vector<Instance> default_main_instances(const VerifyOptions& opts);
std::vector<Instance> default_smain_instances(const VerifyOptions& opts);
std::vector<QuadraticInstance> default_quadratic_instances();

/// Stanley's conjecture sweep on chordal d-complement instances: exact
/// sdepth against the homological depth, the constructive linear-quotient
/// order against the oracle, and depth monotonicity under elimination and
/// colon at simplicial vertices. The first failed inequality writes a
/// replayable counterexample bundle and aborts the sweep.
VerificationReport verify_main(const std::vector<Instance>& instances,
                               const VerifyOptions& opts);

/// Schmitt-Vogel sweep: both Stanley depth lower bounds plus the witness
/// transports (localization at every principal prime, one elimination).
VerificationReport verify_smain(const std::vector<Instance>& instances,
                                const VerifyOptions& opts);

/// Quadratic ideals routed through polarization: the complement-chordality
/// test decides linear resolution, and qualifying ideals get the conjecture
/// check on the polarized ideal.
VerificationReport verify_quadratic(const std::vector<QuadraticInstance>& instances,
                                    const VerifyOptions& opts);

/// The two worked examples, end to end, with their known values
/// asserted exactly.
VerificationReport run_worked_examples(const VerifyOptions& opts = {});

/// Full default run: worked examples, main sweep, quadratic route and the
/// Schmitt-Vogel sweep, in that order, aborting at the first failure.
VerificationReport verify_all(const VerifyOptions& opts);

/// Replay instances loaded from a bundle or gen file.
VerificationReport verify_file(const nlohmann::json& input, const VerifyOptions& opts);

SqfIdeal worked_example_1();
SqfIdeal worked_example_2();
SvWitness worked_example_1_witness();
SvWitness worked_example_2_witness();

}  // namespace stanley
