#pragma once

// The free Milnor group M(F_s) on m_1..m_s: the free group modulo
// [g, h g h^-1] for every conjugate pair of a generator. Setting m_s = 1 gives
// a split extension
//
//   1 -> (R(y_1..y_{s-1}), +) --r--> M(F_s) --> M(F_{s-1}) -> 1
//
// with r(y_j1 ... y_jk) = [m_j1, [m_j2, ... [m_jk, m_s] ...]], and m_i acting
// on the kernel by left multiplication with (1 + y_i). Iterating the
// splitting writes every element uniquely as
//
//   r_s(rho_{s-1}) * r_{s-1}(rho_{s-2}) * ... * r_2(rho_1) * m_1^e,
//
// which is the normal form used for the word problem.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mgk/integer.hpp"
#include "mgk/ring.hpp"
#include "mgk/word.hpp"

namespace mgk {

/// Magnus expansion m_i -> 1 + y_i, m_i^-1 -> 1 - y_i into R(y_1..y_rank).
/// Generator index g maps to variable g + 1.
RingElement magnus(const Word& word, int rank);

/// Magnus expansion with terms of degree > max_degree discarded.
RingElement magnus_truncated(const Word& word, int rank, int max_degree);

/// Canonical form of an element of M(F_rank).
class MilnorElement {
 public:
  explicit MilnorElement(int rank = 0);

  static MilnorElement identity(int rank) { return MilnorElement(rank); }

  int rank() const { return rank_; }
  /// rho_t in R(y_1..y_t): the kernel coordinate attached to generator m_{t+1},
  /// for 1 <= t < rank.
  const RingElement& kernel_part(int t) const;
  /// Exponent of m_1.
  const Integer& exponent() const { return exponent_; }

  bool is_identity() const;

  /// A word (over m_1..m_rank) representing this element.
  Word to_word() const;

  MilnorElement operator*(const MilnorElement& other) const;
  MilnorElement inverse() const;
  bool operator==(const MilnorElement& other) const = default;

  /// "[rho_{s-1}; ...; rho_1; e]".
  std::string to_string() const;

 private:
  friend MilnorElement normal_form(const Word& word, int rank);

  int rank_;
  std::vector<RingElement> kernel_parts_;  // index t-1 holds rho_t
  Integer exponent_ = 0;
};

/// Normal form of `word` in M(F_rank). Letters must have generator index < rank.
MilnorElement normal_form(const Word& word, int rank);

/// True iff the words are equal in M(F_rank).
bool milnor_equal(const Word& lhs, const Word& rhs, int rank);

/// r: R(y_1..y_s) -> M(F_{s+1}) as a word over m_1..m_{s+1}, where s is
/// rho.rank(). Basis terms are emitted in graded-lexicographic order; a
/// coefficient c repeats the commutator |c| times (inverted when c < 0).
Word r_map(const RingElement& rho);

/// The iterated commutator [m_j1, [m_j2, ... [m_jk, m_{s+1}] ...]].
Word r_basis_word(const Monomial& mono, int s);

/// Inverse of r on the kernel of m_{s+1} -> 1, for a word over m_1..m_{s+1}.
/// Throws NotInKernel when deleting m_{s+1} does not give the identity.
RingElement r_inverse(const Word& word, int s);

/// Action of g in M(F_s) on R(y_1..y_s): magnus(g) * rho.
RingElement conjugation_action(const Word& g, const RingElement& rho);

/// Smallest positive degree of a nonzero term of magnus(word); nullopt (infinity)
/// when magnus(word) = 1. `rank` defaults to the word's generator bound.
std::optional<int> lcs_degree(const Word& word, std::optional<int> rank = std::nullopt);

/// Number of injective index sequences of length 0..s: the additive rank of
/// R(y_1..y_s). Throws when the value does not fit in 64 bits.
std::uint64_t basis_rank(int s);

}  // namespace mgk
