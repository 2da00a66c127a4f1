#pragma once

#include <optional>
#include <string>
#include <vector>

#include "homcolor/document.hpp"
#include "homcolor/operators.hpp"
#include "homcolor/suites.hpp"

namespace homcolor {

struct ConstructionOptions {
  /// Check the hypotheses before building; failures throw PreconditionError.
  bool check_preconditions = true;
  /// Run the expected suite on the output and store the report.
  bool verify_result = true;
  /// Slot -> product for reading the input (e.g. {"ladj": "L"}); unresolved slots
  /// fall back to products named like the slot, then to declaration order.
  Binding input_binding;
};

struct ConstructionResult {
  HomAlgebra algebra;
  json provenance;  ///< {"construction", "parameters", "inputs"}; enough to replay
  std::string expected_suite;
  Binding expected_binding;
  std::optional<SuiteReport> verification;

  /// True when the post-check ran and passed.
  bool verified() const { return verification && verification->passed(); }
};

ConstructionResult tensor_product(const HomAlgebra& a1, const HomAlgebra& a2, const ConstructionOptions& opt = {});

ConstructionResult nijenhuis_deform(const HomAlgebra& alg, const LinearMap& n, bool compose_alpha = false,
                                    const ConstructionOptions& opt = {});

/// x ⊣ y = x·β(y), x ⊢ y = β(x)·y with twist β.
ConstructionResult averaging_dialgebra(const HomAlgebra& alg, const LinearMap& beta,
                                       const ConstructionOptions& opt = {});

enum class SplitMode { tridendriform, dendriform };
ConstructionResult rb_split(const HomAlgebra& alg, const LinearMap& r, const Rational& weight, SplitMode mode,
                            const ConstructionOptions& opt = {});

ConstructionResult sum_product(const HomAlgebra& tri, const ConstructionOptions& opt = {});

enum class BracketKind { commutator, dialgebra };
ConstructionResult bracket_from(const HomAlgebra& alg, BracketKind kind, const ConstructionOptions& opt = {});

ConstructionResult tridendriform_to_postlie(const HomAlgebra& tri, const ConstructionOptions& opt = {});
ConstructionResult postlie_star(const HomAlgebra& pl, const ConstructionOptions& opt = {});
ConstructionResult opposite(const HomAlgebra& tri, const ConstructionOptions& opt = {});
ConstructionResult dendriform_from_tri(const HomAlgebra& tri, const ConstructionOptions& opt = {});

/// Products composed with β^n, twist β^n∘α. `suite` (optional) is the structure the
/// input is certified against; it becomes the expected suite of the output.
ConstructionResult yau_twist(const HomAlgebra& alg, const LinearMap& beta, unsigned n, const std::string& suite = {},
                             const ConstructionOptions& opt = {});

ConstructionResult derived_algebra(const HomAlgebra& alg, int dtype, unsigned k, const std::string& suite = {},
                                   const ConstructionOptions& opt = {});

ConstructionResult centroid_twist(const HomAlgebra& alg, const LinearMap& b1, const LinearMap& b2, int variant,
                                  const std::string& suite = {}, const ConstructionOptions& opt = {});

/// `ideal` names the basis vectors spanning I. Output basis: "I:<name>" copies, then S.
ConstructionResult ideal_dialgebra(const HomAlgebra& s, const std::vector<std::string>& ideal,
                                   const ConstructionOptions& opt = {});

/// Names accepted by run_construction, in a stable order.
const std::vector<std::string>& construction_names();

/// Runs a construction from JSON parameters. Maps are given as matrices; see
/// construction_names() for the operations. Used by the CLI and by replay.
ConstructionResult run_construction(const std::string& name, const std::vector<HomAlgebra>& inputs,
                                    const json& parameters, const ConstructionOptions& opt = {});

/// Re-runs the construction recorded in a provenance object.
ConstructionResult replay(const json& provenance, const ConstructionOptions& opt = {});

}  // namespace homcolor
