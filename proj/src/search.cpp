#include "homcolor/search.hpp"

#include <algorithm>
#include <thread>

#include "homcolor/error.hpp"

namespace homcolor {

namespace {

// Matrix positions (row, column) joining basis vectors of equal degree, row-major.
std::vector<std::pair<std::size_t, std::size_t>> free_positions(const HomAlgebra& alg) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < alg.dimension(); ++i)
    for (std::size_t j = 0; j < alg.dimension(); ++j)
      if (alg.degree(i) == alg.degree(j)) out.emplace_back(i, j);
  return out;
}

std::vector<Rational> normalized(std::vector<Rational> entries) {
  std::sort(entries.begin(), entries.end());
  entries.erase(std::unique(entries.begin(), entries.end()), entries.end());
  return entries;
}

void validate(const SearchSpec& spec) {
  if (spec.entries.empty()) throw StructuralError("search: entry set is empty");
  if (spec.limit == 0) throw StructuralError("search: limit must be positive");
}

}  // namespace

mpz_class search_space_size(const HomAlgebra& alg, const SearchSpec& spec) {
  validate(spec);
  mpz_class count;
  mpz_pow_ui(count.get_mpz_t(), mpz_class(normalized(spec.entries).size()).get_mpz_t(), free_positions(alg).size());
  return count;
}

std::vector<LinearMap> search_operators(const HomAlgebra& alg, const SearchSpec& spec) {
  validate(spec);
  for (const auto& p : spec.products) alg.product(p);
  const auto entries = normalized(spec.entries);
  const auto positions = free_positions(alg);
  const mpz_class count = search_space_size(alg, spec);
  if (count > mpz_class(std::to_string(spec.limit))) throw SearchOverflow(count.get_str(), spec.limit);

  const std::size_t total = count.get_ui();
  const std::size_t base = entries.size();
  const std::size_t dim = alg.dimension();

  auto candidate = [&](std::size_t code) {
    std::vector<Vector> images(dim);
    // The first position is the most significant digit.
    for (std::size_t p = positions.size(); p-- > 0;) {
      const auto& [i, j] = positions[p];
      images[j].add(i, entries[code % base]);
      code /= base;
    }
    return LinearMap(std::move(images), dim);
  };

  unsigned workers = spec.threads ? spec.threads : std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(1, total / 64)));
  std::vector<std::vector<std::size_t>> found(workers);
  auto work = [&](unsigned w) {
    for (std::size_t code = w; code < total; code += workers)
      if (check_operator(alg, spec.kind, candidate(code), spec.products).passed) found[w].push_back(code);
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }

  std::vector<std::size_t> codes;
  for (const auto& f : found) codes.insert(codes.end(), f.begin(), f.end());
  std::sort(codes.begin(), codes.end());
  std::vector<LinearMap> out;
  out.reserve(codes.size());
  for (auto c : codes) out.push_back(candidate(c));
  return out;
}

}  // namespace homcolor
