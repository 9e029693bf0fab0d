#include "mgk/random.hpp"

#include <algorithm>
#include <numeric>

#include "mgk/error.hpp"

namespace mgk {

int random_int(Rng& rng, int lo, int hi) {
  // Hand-rolled so that sequences do not depend on the standard library's
  // distribution implementation.
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<int>(rng() % span);
}

Word random_word(Rng& rng, int rank, int max_length) {
  if (rank < 1) return {};
  const int length = random_int(rng, 0, max_length);
  std::vector<Letter> letters;
  letters.reserve(length);
  for (int i = 0; i < length; ++i) {
    letters.push_back({random_int(rng, 0, rank - 1), random_int(rng, 0, 1) ? 1 : -1});
  }
  return Word(std::move(letters));
}

RingElement random_ring_element(Rng& rng, int rank, int max_terms, int max_coeff,
                                int max_degree) {
  RingElement out(rank);
  const int terms = random_int(rng, 1, max_terms);
  std::vector<int> pool(rank);
  std::iota(pool.begin(), pool.end(), 1);
  for (int t = 0; t < terms; ++t) {
    const int degree = random_int(rng, 0, std::min(max_degree, rank));
    for (int i = 0; i < degree; ++i) std::swap(pool[i], pool[random_int(rng, i, rank - 1)]);
    const Monomial mono{std::span<const int>(pool.data(), degree)};
    int coeff = random_int(rng, -max_coeff, max_coeff);
    if (coeff == 0) coeff = 1;
    out.add_term(mono, coeff);
  }
  return out;
}

namespace {

// Splits a class c >= 2 into (p, q) with p + q = c, favouring lopsided splits
// to keep the leaf count small.
std::pair<int, int> split(Rng& rng, int c) {
  const int p = random_int(rng, 0, 2) == 0 ? random_int(rng, 1, c - 1)
                                           : (random_int(rng, 0, 1) ? 1 : c - 1);
  return {p, c - p};
}

GropeTree build(Rng& rng, int c, int depth) {
  if (c == 1) return GropeTree::leaf();
  const int genus = depth < 2 ? random_int(rng, 1, 3) : random_int(rng, 1, 2);
  const int exact = random_int(rng, 0, genus - 1);
  std::vector<GropePair> pairs;
  for (int i = 0; i < genus; ++i) {
    // The other pairs may exceed c by one.
    const int target = i == exact ? c : c + random_int(rng, 0, 1);
    int p = split(rng, target).first;
    if (p >= target) p = target - 1;
    pairs.push_back({build(rng, p, depth + 1), build(rng, target - p, depth + 1)});
  }
  return GropeTree::surface(std::move(pairs));
}

}  // namespace

GropeTree random_grope_tree(Rng& rng, int grope_class) {
  if (grope_class < 1) throw InvalidArgument("grope class must be at least 1");
  return build(rng, grope_class, 0);
}

}  // namespace mgk
