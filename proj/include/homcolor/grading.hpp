#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace homcolor {

/// Element of G, stored as free coordinates followed by torsion coordinates.
/// Only GradingGroup produces reduced degrees; a raw Degree is not validated.
struct Degree {
  std::vector<std::int64_t> coords;

  friend bool operator==(const Degree&, const Degree&) = default;
  friend auto operator<=>(const Degree&, const Degree&) = default;
};

std::string to_string(const Degree& d);

/// G = Z^free_rank x Z_{m_1} x ... x Z_{m_t}.
class GradingGroup {
 public:
  GradingGroup() = default;
  GradingGroup(int free_rank, std::vector<std::int64_t> torsion);

  /// Z_2, the super grading.
  static GradingGroup z2() { return GradingGroup(0, {2}); }

  int free_rank() const noexcept { return free_rank_; }
  const std::vector<std::int64_t>& torsion() const noexcept { return torsion_; }
  std::size_t rank() const noexcept { return static_cast<std::size_t>(free_rank_) + torsion_.size(); }
  bool is_finite() const noexcept { return free_rank_ == 0; }

  /// Builds a degree, reducing torsion coordinates into [0, m_i).
  Degree degree(std::vector<std::int64_t> coords) const;
  Degree zero() const;
  Degree add(const Degree& a, const Degree& b) const;
  bool contains(const Degree& d) const;

  /// Every element in lexicographic coordinate order. Finite groups only.
  std::vector<Degree> elements() const;

  friend bool operator==(const GradingGroup&, const GradingGroup&) = default;

 private:
  int free_rank_ = 0;
  std::vector<std::int64_t> torsion_;
};

/// Sign bicharacter eps(a, b) = (-1)^{a^T M b}.
class Bicharacter {
 public:
  Bicharacter() = default;
  explicit Bicharacter(std::vector<std::vector<std::int64_t>> exponent_matrix);

  /// The trivial bicharacter (M = 0).
  static Bicharacter trivial(std::size_t rank);

  const std::vector<std::vector<std::int64_t>>& exponent_matrix() const noexcept { return m_; }
  std::size_t size() const noexcept { return m_.size(); }

  /// +1 or -1. Throws StructuralError when the degree length differs from the matrix size.
  int operator()(const Degree& a, const Degree& b) const;

  friend bool operator==(const Bicharacter&, const Bicharacter&) = default;

 private:
  std::vector<std::vector<std::int64_t>> m_;
};

inline int bicharacter_eval(const Bicharacter& eps, const Degree& a, const Degree& b) { return eps(a, b); }

struct ValidationReport {
  bool passed = true;
  std::string axiom;  ///< "skew-symmetry", "well-defined", "additive-right", "additive-left"
  std::vector<Degree> witness;
};

/// Checks M + M^T = 0 (mod 2), invariance under torsion shifts, and for finite
/// groups the three bicharacter axioms over every pair and triple.
ValidationReport validate_bicharacter(const Bicharacter& eps, const GradingGroup& g);

}  // namespace homcolor
