#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "homcolor/identity.hpp"

namespace homcolor {

/// Named axiom system over a fixed list of product slots.
struct Suite {
  std::string name;
  std::vector<std::string> slots;
  std::vector<IdentitySchema> schemas;

  friend bool operator==(const Suite&, const Suite&) = default;
};

/// Suite text format:
///
///   # comment
///   suite hom-associative-color
///   slots mu
///   hom-associativity: mu(mu(x,y),a(z)) - mu(a(x),mu(y,z))
///
/// A line starting with whitespace continues the previous schema.
Suite parse_suite(std::string_view text);
std::string render_suite(const Suite& suite);

class SuiteRegistry {
 public:
  /// Suites shipped with the library, parsed from their embedded text on first use.
  static const SuiteRegistry& builtin();

  /// Throws StructuralError on a duplicate name.
  void add(Suite suite);
  const Suite& get(const std::string& name) const;
  bool contains(const std::string& name) const;
  /// Registration order.
  const std::vector<Suite>& suites() const noexcept { return suites_; }

 private:
  std::vector<Suite> suites_;
};

/// Raw text of the shipped suite files, keyed by file stem.
const std::vector<std::pair<std::string, std::string>>& builtin_suite_sources();

struct SuiteReport {
  std::string suite;
  Binding binding;
  std::vector<std::string> schemas;  ///< schema names, in suite order
  std::vector<CheckReport> reports;  ///< one per schema, in suite order

  bool passed() const;
  /// First failing schema report, or nullptr.
  const CheckReport* first_failure() const;
};

/// Completes a partial slot binding: explicit entries win, then a product named like
/// the slot, then (only when nothing was given) products in declaration order when
/// their count equals the slot count. Throws StructuralError if a slot stays unbound.
Binding resolve_binding(const HomAlgebra& alg, const std::vector<std::string>& slots, const Binding& given);

SuiteReport check_suite(const HomAlgebra& alg, const std::string& suite, const Binding& binding = {},
                        const SuiteRegistry& registry = SuiteRegistry::builtin());
SuiteReport check_suite(const HomAlgebra& alg, const Suite& suite, const Binding& binding = {});

/// alpha(mu(e_i, e_j)) == mu(alpha(e_i), alpha(e_j)) for every product and basis pair.
CheckReport check_multiplicative(const HomAlgebra& alg);

}  // namespace homcolor
