#include "homcolor/grading.hpp"

#include <sstream>

#include "homcolor/error.hpp"

namespace homcolor {

std::string to_string(const Degree& d) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < d.coords.size(); ++i) os << (i ? "," : "") << d.coords[i];
  os << ')';
  return os.str();
}

GradingGroup::GradingGroup(int free_rank, std::vector<std::int64_t> torsion)
    : free_rank_(free_rank), torsion_(std::move(torsion)) {
  if (free_rank_ < 0) throw StructuralError("free rank must be nonnegative");
  for (auto m : torsion_)
    if (m < 2) throw StructuralError("torsion order " + std::to_string(m) + " must be at least 2");
}

Degree GradingGroup::degree(std::vector<std::int64_t> coords) const {
  if (coords.size() != rank())
    throw StructuralError("degree " + to_string(Degree{coords}) + " has length " +
                          std::to_string(coords.size()) + ", group rank is " + std::to_string(rank()));
  for (std::size_t t = 0; t < torsion_.size(); ++t) {
    auto& c = coords[static_cast<std::size_t>(free_rank_) + t];
    c %= torsion_[t];
    if (c < 0) c += torsion_[t];
  }
  return Degree{std::move(coords)};
}

Degree GradingGroup::zero() const { return Degree{std::vector<std::int64_t>(rank(), 0)}; }

Degree GradingGroup::add(const Degree& a, const Degree& b) const {
  if (a.coords.size() != rank() || b.coords.size() != rank())
    throw StructuralError("degree length does not match group rank");
  std::vector<std::int64_t> c(rank());
  for (std::size_t i = 0; i < rank(); ++i) c[i] = a.coords[i] + b.coords[i];
  return degree(std::move(c));
}

bool GradingGroup::contains(const Degree& d) const {
  if (d.coords.size() != rank()) return false;
  for (std::size_t t = 0; t < torsion_.size(); ++t) {
    auto c = d.coords[static_cast<std::size_t>(free_rank_) + t];
    if (c < 0 || c >= torsion_[t]) return false;
  }
  return true;
}

std::vector<Degree> GradingGroup::elements() const {
  if (!is_finite()) throw StructuralError("cannot enumerate an infinite grading group");
  std::vector<Degree> out;
  std::vector<std::int64_t> c(rank(), 0);
  while (true) {
    out.push_back(Degree{c});
    std::size_t i = rank();
    while (i > 0) {
      --i;
      if (++c[i] < torsion_[i]) break;
      c[i] = 0;
      if (i == 0) return out;
    }
    if (rank() == 0) return out;
  }
}

Bicharacter::Bicharacter(std::vector<std::vector<std::int64_t>> exponent_matrix)
    : m_(std::move(exponent_matrix)) {
  for (const auto& row : m_)
    if (row.size() != m_.size()) throw StructuralError("exponent matrix must be square");
}

Bicharacter Bicharacter::trivial(std::size_t rank) {
  return Bicharacter(std::vector<std::vector<std::int64_t>>(rank, std::vector<std::int64_t>(rank, 0)));
}

int Bicharacter::operator()(const Degree& a, const Degree& b) const {
  if (a.coords.size() != m_.size() || b.coords.size() != m_.size())
    throw StructuralError("degree length does not match bicharacter size " + std::to_string(m_.size()));
  // Only parities matter, which also keeps the sum from overflowing.
  int parity = 0;
  for (std::size_t i = 0; i < m_.size(); ++i) {
    if ((a.coords[i] & 1) == 0) continue;
    for (std::size_t j = 0; j < m_.size(); ++j) parity ^= static_cast<int>(m_[i][j] & 1) & static_cast<int>(b.coords[j] & 1);
  }
  return parity ? -1 : 1;
}

ValidationReport validate_bicharacter(const Bicharacter& eps, const GradingGroup& g) {
  if (eps.size() != g.rank())
    throw StructuralError("bicharacter size " + std::to_string(eps.size()) + " does not match group rank " +
                          std::to_string(g.rank()));
  const auto& m = eps.exponent_matrix();
  const std::size_t r = g.rank();
  auto unit = [&](std::size_t i, std::int64_t scale = 1) {
    std::vector<std::int64_t> c(r, 0);
    c[i] = scale;
    return Degree{std::move(c)};
  };

  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i + 1; j < r; ++j)
      if ((m[i][j] + m[j][i]) % 2 != 0) return {false, "skew-symmetry", {unit(i), unit(j)}};

  // A torsion coordinate of order m must not be able to see the shift by m.
  for (std::size_t t = 0; t < g.torsion().size(); ++t) {
    std::size_t i = static_cast<std::size_t>(g.free_rank()) + t;
    std::int64_t order = g.torsion()[t];
    for (std::size_t j = 0; j < r; ++j)
      if ((order * m[i][j]) % 2 != 0 || (order * m[j][i]) % 2 != 0)
        return {false, "well-defined", {unit(i, order), unit(j)}};
  }

  if (!g.is_finite()) return {};
  auto elems = g.elements();
  for (const auto& a : elems)
    for (const auto& b : elems) {
      if (eps(a, b) * eps(b, a) != 1) return {false, "skew-symmetry", {a, b}};
      for (const auto& c : elems) {
        if (eps(a, g.add(b, c)) != eps(a, b) * eps(a, c)) return {false, "additive-right", {a, b, c}};
        if (eps(g.add(a, b), c) != eps(a, c) * eps(b, c)) return {false, "additive-left", {a, b, c}};
      }
    }
  return {};
}

}  // namespace homcolor
