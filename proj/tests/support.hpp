#pragma once

#include <string>

#include "homcolor/document.hpp"
#include "homcolor/error.hpp"

#ifndef HOMCOLOR_FIXTURE_DIR
#error "HOMCOLOR_FIXTURE_DIR must be defined"
#endif

namespace testing {

inline homcolor::AlgebraDocument fixture_doc(const std::string& name) {
  return homcolor::load_document_file(std::string(HOMCOLOR_FIXTURE_DIR) + "/" + name);
}

inline homcolor::HomAlgebra fixture(const std::string& name) { return fixture_doc(name).algebra; }

inline std::string fixture_path(const std::string& name) { return std::string(HOMCOLOR_FIXTURE_DIR) + "/" + name; }

/// Sparse vector from (index, coefficient) pairs.
inline homcolor::Vector vec(std::initializer_list<std::pair<std::size_t, homcolor::Rational>> entries) {
  homcolor::Vector v;
  for (const auto& [i, c] : entries) v.add(i, c);
  return v;
}

inline homcolor::Vector e(std::size_t i) { return homcolor::Vector::basis(i); }

inline homcolor::Rational q(const char* text) { return homcolor::parse_rational(text); }

}  // namespace testing
