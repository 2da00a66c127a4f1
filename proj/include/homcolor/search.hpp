#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "homcolor/operators.hpp"

namespace homcolor {

struct SearchSpec {
  OperatorKind kind;
  std::vector<Rational> entries;      ///< candidate matrix entries; sorted and deduplicated before use
  std::size_t limit = 1'000'000;      ///< maximum number of candidates to test
  std::vector<std::string> products;  ///< products to check (all when empty)
  unsigned threads = 0;               ///< 0 = hardware concurrency
};

/// |entries|^(sum of squared graded block sizes).
mpz_class search_space_size(const HomAlgebra& alg, const SearchSpec& spec);

/// Every even map with entries from spec.entries that passes check_operator, in
/// lexicographic order of its degree-preserving entries (row-major, entries ascending).
/// Throws SearchOverflow when the candidate count exceeds spec.limit.
std::vector<LinearMap> search_operators(const HomAlgebra& alg, const SearchSpec& spec);

}  // namespace homcolor
