#pragma once

// Seeded generators for property sweeps. Everything draws from a caller-owned
// std::mt19937_64, so a fixed seed reproduces the same sequence.

#include <random>

#include "mgk/grope.hpp"
#include "mgk/ring.hpp"
#include "mgk/word.hpp"

namespace mgk {

using Rng = std::mt19937_64;

/// Uniform integer in [lo, hi].
int random_int(Rng& rng, int lo, int hi);

/// Unreduced word of length 0..max_length over generators 0..rank-1.
Word random_word(Rng& rng, int rank, int max_length);

/// Sum of up to max_terms monomials of degree <= max_degree in R(y_1..y_rank),
/// coefficients in [-max_coeff, max_coeff].
RingElement random_ring_element(Rng& rng, int rank, int max_terms, int max_coeff,
                                int max_degree);

/// A tree of class exactly `grope_class` with at most 3 pairs per surface.
GropeTree random_grope_tree(Rng& rng, int grope_class);

}  // namespace mgk
